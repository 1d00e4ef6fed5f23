//! The sl2 structure: the adjoint action on S by derivations, the natural
//! action on k[x, y], the Casimir, reduction modulo `c`, the map onto
//! `S^{2n}(L(1))` and the invariant monomials spanning `Z = S^g`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::poly::{monomials_of, BiGradedPoly, Monomial, VarSet, E, F, H, X, Y};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieBasis {
    E,
    H,
    F,
}

impl LieBasis {
    pub const ALL: [LieBasis; 3] = [LieBasis::E, LieBasis::H, LieBasis::F];

    pub fn index(self) -> usize {
        match self {
            LieBasis::E => E,
            LieBasis::H => H,
            LieBasis::F => F,
        }
    }

    pub fn from_index(i: usize) -> LieBasis {
        Self::ALL[i]
    }

    pub fn weight(self) -> i64 {
        match self {
            LieBasis::E => 2,
            LieBasis::H => 0,
            LieBasis::F => -2,
        }
    }

    /// `[self, other]` as a multiple of a basis element.
    pub fn bracket(self, other: LieBasis) -> Option<(i64, LieBasis)> {
        use LieBasis::*;
        match (self, other) {
            (E, F) => Some((1, H)),
            (F, E) => Some((-1, H)),
            (H, E) => Some((2, E)),
            (E, H) => Some((-2, E)),
            (H, F) => Some((-2, F)),
            (F, H) => Some((2, F)),
            _ => None,
        }
    }
}

impl fmt::Display for LieBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieBasis::E => "e",
            LieBasis::H => "h",
            LieBasis::F => "f",
        })
    }
}

/// A graded piece of one of the modules whose cohomology is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleSpec {
    /// `S^n`, the n-th symmetric power of the adjoint module.
    SymAdjoint(u32),
    /// `S^m(L(1))`.
    SymNatural(u32),
    /// `S^0 + ... + S^bound`.
    FullS(u32),
}

impl ModuleSpec {
    pub fn vars(self) -> VarSet {
        match self {
            ModuleSpec::SymNatural(_) => VarSet::Natural,
            _ => VarSet::Adjoint,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            ModuleSpec::SymAdjoint(n) => ((n + 2) * (n + 1) / 2) as usize,
            ModuleSpec::SymNatural(m) => m as usize + 1,
            ModuleSpec::FullS(b) => (0..=b).map(|n| ModuleSpec::SymAdjoint(n).dim()).sum(),
        }
    }

    /// The homogeneous pieces making up this module.
    pub fn pieces(self) -> Vec<ModuleSpec> {
        match self {
            ModuleSpec::FullS(b) => (0..=b).map(ModuleSpec::SymAdjoint).collect(),
            m => vec![m],
        }
    }

    /// Polynomial degree of a homogeneous piece.
    pub fn poly_degree(self) -> Result<u32> {
        match self {
            ModuleSpec::SymAdjoint(n) | ModuleSpec::SymNatural(n) => Ok(n),
            ModuleSpec::FullS(_) => Err(Error::Grading(
                "the full symmetric algebra has no single polynomial degree".into(),
            )),
        }
    }

    pub fn max_abs_weight(self) -> i64 {
        match self {
            ModuleSpec::SymAdjoint(n) | ModuleSpec::FullS(n) => 2 * n as i64,
            ModuleSpec::SymNatural(m) => m as i64,
        }
    }

    pub fn slice_basis(self, weight: i64) -> Result<Vec<Monomial>> {
        Ok(monomials_of(self.vars(), self.poly_degree()?, weight))
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::SymAdjoint(n) => write!(f, "S^{n}"),
            ModuleSpec::SymNatural(m) => write!(f, "S^{m}(L(1))"),
            ModuleSpec::FullS(b) => write!(f, "S^<={b}"),
        }
    }
}

fn expect_vars(a: &BiGradedPoly, vars: VarSet) -> Result<()> {
    if a.vars() != vars {
        return Err(Error::TagMismatch(vars, a.vars()));
    }
    Ok(())
}

/// The adjoint action extended to S as a derivation.
pub fn act_adjoint(g: LieBasis, a: &BiGradedPoly) -> Result<BiGradedPoly> {
    expect_vars(a, VarSet::Adjoint)?;
    let p = a.prime();
    let mut out = BiGradedPoly::zero(p, VarSet::Adjoint);
    for (m, &c) in a.raw_terms() {
        for var in LieBasis::ALL {
            let k = m.exp(var.index());
            if k == 0 {
                continue;
            }
            if let Some((coef, target)) = g.bracket(var) {
                let rest = m.div_var(var.index()).expect("exponent is positive");
                let term = rest.mul(&Monomial::var(VarSet::Adjoint, target.index()));
                out.add_term(term, p.mul(c, p.reduce(coef * k as i64)));
            }
        }
    }
    Ok(out)
}

/// The natural action on `k[x, y]`: `h.x^a y^b = (a-b) x^a y^b`,
/// `e.x^a y^b = b x^{a+1} y^{b-1}`, `f.x^a y^b = a x^{a-1} y^{b+1}`.
pub fn act_natural(g: LieBasis, a: &BiGradedPoly) -> Result<BiGradedPoly> {
    expect_vars(a, VarSet::Natural)?;
    let p = a.prime();
    let mut out = BiGradedPoly::zero(p, VarSet::Natural);
    for (m, &c) in a.raw_terms() {
        let (ea, eb) = (m.exp(X), m.exp(Y));
        match g {
            LieBasis::H => out.add_term(*m, p.mul(c, p.reduce(ea as i64 - eb as i64))),
            LieBasis::E if eb > 0 => out.add_term(
                Monomial::new(VarSet::Natural, &[ea + 1, eb - 1]),
                p.mul(c, p.reduce(eb as i64)),
            ),
            LieBasis::F if ea > 0 => out.add_term(
                Monomial::new(VarSet::Natural, &[ea - 1, eb + 1]),
                p.mul(c, p.reduce(ea as i64)),
            ),
            _ => {}
        }
    }
    Ok(out)
}

/// Dispatches on the variable set of `a`.
pub fn act(g: LieBasis, a: &BiGradedPoly) -> BiGradedPoly {
    match a.vars() {
        VarSet::Adjoint => act_adjoint(g, a),
        VarSet::Natural => act_natural(g, a),
    }
    .expect("variable set matches by construction")
}

/// `c = h^2 + 4ef`
pub fn casimir(p: Prime) -> BiGradedPoly {
    BiGradedPoly::mono(p, VarSet::Adjoint, &[0, 2, 0], 1)
        + BiGradedPoly::mono(p, VarSet::Adjoint, &[1, 0, 1], 4)
}

pub fn mult_by_c(a: &BiGradedPoly) -> BiGradedPoly {
    &casimir(a.prime()) * a
}

/// `a = remainder + c * quotient` where the remainder only involves the
/// monomials `e^i h^{n-i}`, `h^n`, `f^i h^{n-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CReduction {
    pub remainder: BiGradedPoly,
    pub quotient: BiGradedPoly,
}

pub fn reduce_mod_c(a: &BiGradedPoly, n: u32) -> Result<CReduction> {
    expect_vars(a, VarSet::Adjoint)?;
    if !a.is_of_degree(n) {
        return Err(Error::Grading(format!(
            "{a} is not homogeneous of degree {n}"
        )));
    }
    let p = a.prime();
    let quarter = p.inv(4)?;
    let minus_quarter = p.neg(quarter);
    let mut remainder = BiGradedPoly::zero(p, VarSet::Adjoint);
    let mut quotient = BiGradedPoly::zero(p, VarSet::Adjoint);
    for (m, &c) in a.raw_terms() {
        let (de, dh, df) = (m.exp(E), m.exp(H), m.exp(F));
        let k = de.min(df);
        // e^{a'} h^{b'} f^{c'} = -1/4 e^{a'-1} h^{b'+2} f^{c'-1} + c/4 e^{a'-1} h^{b'} f^{c'-1}
        let mut scale = c;
        for j in 0..k {
            let q = Monomial::new(VarSet::Adjoint, &[de - 1 - j, dh + 2 * j, df - 1 - j]);
            quotient.add_term(q, p.mul(scale, quarter));
            scale = p.mul(scale, minus_quarter);
        }
        remainder.add_term(
            Monomial::new(VarSet::Adjoint, &[de - k, dh + 2 * k, df - k]),
            scale,
        );
    }
    Ok(CReduction {
        remainder,
        quotient,
    })
}

/// The surjection `S^n -> S^{2n}(L(1))` with kernel `c S^{n-2}`.
pub fn phi_map(n: u32, a: &BiGradedPoly) -> Result<BiGradedPoly> {
    let p = a.prime();
    let red = reduce_mod_c(a, n)?;
    let half = p.inv(2)?;
    let minus_half = p.neg(half);
    let mut out = BiGradedPoly::zero(p, VarSet::Natural);
    for (m, &c) in red.remainder.raw_terms() {
        let (de, df) = (m.exp(E), m.exp(F));
        debug_assert!(de == 0 || df == 0);
        let coef = p.mul(p.pow(minus_half, de as u64), p.pow(half, df as u64));
        let target = Monomial::new(VarSet::Natural, &[n + de - df, n + df - de]);
        out.add_term(target, p.mul(c, coef));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvariantRing {
    /// `Z = k[c, e^p, h^p, f^p]`
    Z,
    /// `Z_0 = k[e^p, h^p, f^p]`
    Z0,
}

/// `c^c_exp (e^p)^e_exp (h^p)^h_exp (f^p)^f_exp`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantMonomial {
    pub c_exp: u32,
    pub e_exp: u32,
    pub h_exp: u32,
    pub f_exp: u32,
}

impl InvariantMonomial {
    pub const ONE: InvariantMonomial = InvariantMonomial::new(0, 0, 0, 0);

    pub const fn new(c_exp: u32, e_exp: u32, h_exp: u32, f_exp: u32) -> Self {
        InvariantMonomial {
            c_exp,
            e_exp,
            h_exp,
            f_exp,
        }
    }

    pub fn degree(&self, p: Prime) -> u32 {
        2 * self.c_exp + p.get() * (self.e_exp + self.h_exp + self.f_exp)
    }

    pub fn weight(&self, p: Prime) -> i64 {
        2 * p.get() as i64 * (self.e_exp as i64 - self.f_exp as i64)
    }

    pub fn to_poly(&self, p: Prime) -> BiGradedPoly {
        let pp = p.get();
        let frob = BiGradedPoly::mono(
            p,
            VarSet::Adjoint,
            &[pp * self.e_exp, pp * self.h_exp, pp * self.f_exp],
            1,
        );
        &casimir(p).pow(self.c_exp) * &frob
    }
}

impl fmt::Display for InvariantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            ("c", self.c_exp, false),
            ("e", self.e_exp, true),
            ("h", self.h_exp, true),
            ("f", self.f_exp, true),
        ]
        .iter()
        .filter(|(_, k, _)| *k > 0)
        .map(|(name, k, frob)| match (frob, k) {
            (false, 1) => name.to_string(),
            (false, k) => format!("{name}^{k}"),
            (true, 1) => format!("{name}^p"),
            (true, k) => format!("{name}^{k}p"),
        })
        .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Monomials spanning the degree-`d` part of `Z` or `Z_0`; for `Z` the power
/// of `c` stays below `p`.
pub fn invariant_monomials(ring: InvariantRing, d: u32, p: Prime) -> Vec<InvariantMonomial> {
    let pp = p.get();
    let max_c = match ring {
        InvariantRing::Z => (pp - 1).min(d / 2),
        InvariantRing::Z0 => 0,
    };
    let mut out = Vec::new();
    for a in 0..=max_c {
        let rest = d - 2 * a;
        if !rest.is_multiple_of(pp) {
            continue;
        }
        let k = rest / pp;
        for b1 in (0..=k).rev() {
            for b2 in (0..=k - b1).rev() {
                out.push(InvariantMonomial::new(a, b1, b2, k - b1 - b2));
            }
        }
    }
    out
}
