//! Explicit cocycles with values in S.
//!
//! Degree one values are listed on `(e, h, f)`, degree two on
//! `(h∧f, e∧f, e∧h)` and degree three on `f∧h∧e`.

use std::fmt;

use serde::Serialize;

use crate::complex::Cochain;
use crate::error::Result;
use crate::field::Prime;
use crate::poly::{BiGradedPoly, VarSet, E, F};
use crate::sl2::casimir;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CocycleName {
    DeltaE,
    DeltaF,
    Delta,
    E,
    F,
    H,
    C,
    Re,
    Rh,
    Rf,
    T,
    I,
    J,
}

impl CocycleName {
    pub const ALL: [CocycleName; 13] = [
        CocycleName::DeltaE,
        CocycleName::DeltaF,
        CocycleName::Delta,
        CocycleName::E,
        CocycleName::F,
        CocycleName::H,
        CocycleName::C,
        CocycleName::Re,
        CocycleName::Rh,
        CocycleName::Rf,
        CocycleName::T,
        CocycleName::I,
        CocycleName::J,
    ];

    pub fn ext_degree(self) -> usize {
        use CocycleName::*;
        match self {
            DeltaE | DeltaF | Delta | E | F | H | C => 1,
            Re | Rh | Rf | T => 2,
            I | J => 3,
        }
    }

    pub fn poly_degree(self, p: Prime) -> u32 {
        use CocycleName::*;
        let pp = p.get();
        match self {
            DeltaE | DeltaF | Delta | Re | Rh | Rf | J => pp - 1,
            E | F | H | C | T => pp,
            I => 0,
        }
    }

    /// The named generators of `Ext^i(k, S)`.
    pub fn generators(ext_degree: usize) -> Vec<CocycleName> {
        Self::ALL
            .into_iter()
            .filter(|n| n.ext_degree() == ext_degree)
            .collect()
    }

    pub fn id(self) -> &'static str {
        use CocycleName::*;
        match self {
            DeltaE => "delta_e",
            DeltaF => "delta_f",
            Delta => "delta",
            E => "E",
            F => "F",
            H => "H",
            C => "C",
            Re => "R_e",
            Rh => "R_h",
            Rf => "R_f",
            T => "T",
            I => "I",
            J => "J",
        }
    }
}

impl fmt::Display for CocycleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// `(num / f, num / e) / 4`, the shape shared by the `e` and `f` values of
/// `δ` and `C`.
fn quarter_quotients(num: &BiGradedPoly) -> Result<(BiGradedPoly, BiGradedPoly)> {
    let p = num.prime();
    let quarter = p.inv(4)?;
    Ok((
        num.exact_div_var(F)?.scale_raw(quarter),
        num.exact_div_var(E)?.scale_raw(quarter),
    ))
}

pub fn build_cocycle(name: CocycleName, p: Prime) -> Result<Cochain> {
    use CocycleName::*;
    let pp = p.get();
    let half = p.half();
    let m = |e: u32, h: u32, f: u32, c: i64| BiGradedPoly::mono(p, VarSet::Adjoint, &[e, h, f], c);
    let zero = BiGradedPoly::zero(p, VarSet::Adjoint);
    let c = casimir(p);
    let h = m(0, 1, 0, 1);

    let values = match name {
        DeltaE => vec![m(0, 0, pp - 1, 1), zero.clone(), zero],
        DeltaF => vec![zero.clone(), zero, m(pp - 1, 0, 0, 1)],
        Delta => {
            let c_half = c.pow(half);
            let num = m(0, pp, 0, 1) - &h * &c_half;
            let (ve, vf) = quarter_quotients(&num)?;
            vec![ve, c_half, vf]
        }
        E => vec![zero, m(pp, 0, 0, 2), m(pp - 1, 1, 0, -1)],
        F => vec![m(0, 1, pp - 1, 1), m(0, 0, pp, -2), zero],
        H => vec![m(1, pp - 1, 0, -2), zero, m(0, pp - 1, 1, 2)],
        C => {
            let num = c.pow(half + 1) - m(0, pp + 1, 0, 1);
            let (ve, vf) = quarter_quotients(&num)?;
            vec![ve, m(0, pp, 0, 1), vf]
        }
        Re => vec![zero.clone(), zero, m(0, 0, pp - 1, 1)],
        Rh => vec![m(0, pp - 2, 1, 1), zero, m(1, pp - 2, 0, 1)],
        Rf => vec![m(pp - 1, 0, 0, 1), zero.clone(), zero],
        T => vec![m(0, pp - 1, 1, 1), zero, m(1, pp - 1, 0, 1)],
        I => vec![m(0, 0, 0, 1)],
        J => vec![m(0, pp - 1, 0, 1)],
    };
    Cochain::adjoint(p, name.ext_degree(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::differential;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn delta_at_three() {
        let pr = p(3);
        let d = build_cocycle(CocycleName::Delta, pr).unwrap();
        let m = |e, h, f, c| BiGradedPoly::mono(pr, VarSet::Adjoint, &[e, h, f], c);
        assert_eq!(d.value(0), &m(1, 1, 0, 2));
        assert_eq!(d.value(1), &casimir(pr));
        assert_eq!(d.value(2), &m(0, 1, 1, 2));
    }

    #[test]
    fn table_rows() {
        for n in [3u64, 5, 7] {
            let pr = p(n);
            let pp = pr.get();
            let m = |e, h, f, c| BiGradedPoly::mono(pr, VarSet::Adjoint, &[e, h, f], c);
            let e = build_cocycle(CocycleName::E, pr).unwrap();
            assert!(e.value(0).is_zero());
            assert_eq!(e.value(1), &m(pp, 0, 0, 2));
            assert_eq!(e.value(2), &m(pp - 1, 1, 0, -1));
            let rh = build_cocycle(CocycleName::Rh, pr).unwrap();
            assert_eq!(rh.value(0), &m(0, pp - 2, 1, 1));
            assert!(rh.value(1).is_zero());
            assert_eq!(rh.value(2), &m(1, pp - 2, 0, 1));
        }
    }

    #[test]
    fn degrees_and_cocycle_condition() {
        for n in [3u64, 5, 7, 11] {
            let pr = p(n);
            for name in CocycleName::ALL {
                let a = build_cocycle(name, pr).unwrap();
                assert_eq!(a.ext_degree(), name.ext_degree());
                assert_eq!(
                    a.module(),
                    crate::sl2::ModuleSpec::SymAdjoint(name.poly_degree(pr)),
                    "{name}"
                );
                assert!(differential(&a).is_zero(), "{name} at p={n}");
            }
        }
    }
}
