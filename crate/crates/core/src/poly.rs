//! Sparse bigraded polynomials over GF(p) and over the integers.
//!
//! Two variable sets occur: `e, h, f` (weights 2, 0, -2) for the symmetric
//! algebra of the adjoint module, and `x, y` (weights 1, -1) for symmetric
//! powers of the natural module. Every monomial carries both a polynomial
//! degree and a weight, and both are additive under multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Fp, Prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarSet {
    /// `e, h, f`
    Adjoint,
    /// `x, y`
    Natural,
}

impl VarSet {
    pub fn arity(self) -> usize {
        match self {
            VarSet::Adjoint => 3,
            VarSet::Natural => 2,
        }
    }

    pub fn weights(self) -> [i64; 3] {
        match self {
            VarSet::Adjoint => [2, 0, -2],
            VarSet::Natural => [1, -1, 0],
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Adjoint => &["e", "h", "f"],
            VarSet::Natural => &["x", "y"],
        }
    }
}

pub const E: usize = 0;
pub const H: usize = 1;
pub const F: usize = 2;
pub const X: usize = 0;
pub const Y: usize = 1;

/// A monomial; unused exponent slots are always zero. The derived order is
/// lexicographic on exponent vectors in variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    vars: VarSet,
    exps: [u32; 3],
}

impl Monomial {
    pub fn new(vars: VarSet, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), vars.arity(), "exponent vector length");
        let mut e = [0; 3];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { vars, exps: e }
    }

    pub fn one(vars: VarSet) -> Self {
        Monomial { vars, exps: [0; 3] }
    }

    pub fn var(vars: VarSet, idx: usize) -> Self {
        let mut exps = [0; 3];
        exps[idx] = 1;
        Monomial { vars, exps }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.vars.arity()]
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn weight(&self) -> i64 {
        self.exps
            .iter()
            .zip(self.vars.weights())
            .map(|(&e, w)| e as i64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars, other.vars);
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        Monomial {
            vars: self.vars,
            exps,
        }
    }

    /// `self / var`, if the variable occurs.
    pub fn div_var(&self, idx: usize) -> Option<Monomial> {
        if self.exps[idx] == 0 {
            return None;
        }
        let mut exps = self.exps;
        exps[idx] -= 1;
        Some(Monomial {
            vars: self.vars,
            exps,
        })
    }

    pub fn with_exp(&self, idx: usize, e: u32) -> Monomial {
        let mut exps = self.exps;
        exps[idx] = e;
        Monomial {
            vars: self.vars,
            exps,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.vars.names().iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of the given degree and weight, in increasing monomial order.
pub fn monomials_of(vars: VarSet, degree: u32, weight: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    match vars {
        VarSet::Adjoint => {
            // 2a - 2c = weight, a + b + c = degree
            if weight.rem_euclid(2) != 0 {
                return out;
            }
            let half = weight / 2;
            for a in 0..=degree as i64 {
                let c = a - half;
                let b = degree as i64 - a - c;
                if c >= 0 && b >= 0 {
                    out.push(Monomial::new(vars, &[a as u32, b as u32, c as u32]));
                }
            }
        }
        VarSet::Natural => {
            let twice_a = degree as i64 + weight;
            if twice_a < 0 || twice_a % 2 != 0 || twice_a > 2 * degree as i64 {
                return out;
            }
            let a = (twice_a / 2) as u32;
            out.push(Monomial::new(vars, &[a, degree - a]));
        }
    }
    out.sort();
    out
}

/// A polynomial over GF(p) stored as a sparse map with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiGradedPoly {
    p: Prime,
    vars: VarSet,
    terms: BTreeMap<Monomial, u32>,
}

impl BiGradedPoly {
    pub fn zero(p: Prime, vars: VarSet) -> Self {
        BiGradedPoly {
            p,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: Prime, vars: VarSet, c: i64) -> Self {
        Self::from_monomial(p, Monomial::one(vars), c)
    }

    pub fn from_monomial(p: Prime, m: Monomial, c: i64) -> Self {
        let mut out = Self::zero(p, m.vars);
        out.add_term(m, p.reduce(c));
        out
    }

    pub fn var(p: Prime, vars: VarSet, idx: usize) -> Self {
        Self::from_monomial(p, Monomial::var(vars, idx), 1)
    }

    /// Convenience constructor for `e^a h^b f^c` or `x^a y^b`.
    pub fn mono(p: Prime, vars: VarSet, exps: &[u32], c: i64) -> Self {
        Self::from_monomial(p, Monomial::new(vars, exps), c)
    }

    pub fn from_terms(
        p: Prime,
        vars: VarSet,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let mut out = Self::zero(p, vars);
        for (m, c) in terms {
            assert_eq!(m.vars, vars);
            out.add_term(m, c % p.get());
        }
        out
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Fp)> + '_ {
        self.terms
            .iter()
            .map(move |(m, &c)| (m, Fp::from_residue(c, self.p)))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Fp {
        Fp::from_residue(self.terms.get(m).copied().unwrap_or(0), self.p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(m).or_insert(0);
        *slot = p.add(*slot, c);
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &BiGradedPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::TagMismatch(self.vars, other.vars));
        }
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &BiGradedPoly) -> Result<BiGradedPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &BiGradedPoly) -> Result<BiGradedPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, self.p.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &BiGradedPoly) -> Result<BiGradedPoly> {
        self.check(other)?;
        let mut out = Self::zero(self.p, self.vars);
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                out.add_term(m1.mul(m2), self.p.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: Fp) -> BiGradedPoly {
        assert_eq!(c.modulus(), self.p, "mixed moduli");
        self.scale_raw(c.value())
    }

    pub fn scale_int(&self, c: i64) -> BiGradedPoly {
        self.scale_raw(self.p.reduce(c))
    }

    pub(crate) fn scale_raw(&self, c: u32) -> BiGradedPoly {
        let mut out = Self::zero(self.p, self.vars);
        if c == 0 {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(&m, &v)| (m, self.p.mul(v, c)))
            .collect();
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> BiGradedPoly {
        let mut out = Self::zero(self.p, self.vars);
        out.terms = self.terms.iter().map(|(k, &v)| (k.mul(m), v)).collect();
        out
    }

    pub fn pow(&self, k: u32) -> BiGradedPoly {
        let mut acc = Self::constant(self.p, self.vars, 1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `Some((degree, weight))` when all terms share both gradings, `None`
    /// otherwise or for the zero polynomial.
    pub fn bidegree(&self) -> Option<(u32, i64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.degree(), first.weight());
        it.all(|m| (m.degree(), m.weight()) == bd).then_some(bd)
    }

    /// True when every term has polynomial degree `d` (vacuous for zero).
    pub fn is_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_component(&self, degree: u32, weight: i64) -> BiGradedPoly {
        let mut out = Self::zero(self.p, self.vars);
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree && m.weight() == weight)
            .map(|(&m, &c)| (m, c))
            .collect();
        out
    }

    /// `self / var`, failing if some term does not contain the variable.
    pub fn exact_div_var(&self, idx: usize) -> Result<BiGradedPoly> {
        let mut out = Self::zero(self.p, self.vars);
        for (m, &c) in &self.terms {
            let q = m
                .div_var(idx)
                .ok_or(Error::NotDivisible(self.vars.names()[idx]))?;
            out.terms.insert(q, c);
        }
        Ok(out)
    }
}

impl fmt::Display for BiGradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let one = m.degree() == 0;
            match (c, one) {
                (1, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{c}")?,
                _ => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

macro_rules! poly_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&BiGradedPoly> for &BiGradedPoly {
            type Output = BiGradedPoly;
            /// Panics on mismatched variable sets; use the `checked_` form to
            /// get an error instead.
            fn $method(self, rhs: &BiGradedPoly) -> BiGradedPoly {
                self.$checked(rhs).expect("polynomial operands must agree")
            }
        }
        impl $tr<BiGradedPoly> for BiGradedPoly {
            type Output = BiGradedPoly;
            fn $method(self, rhs: BiGradedPoly) -> BiGradedPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

impl Neg for &BiGradedPoly {
    type Output = BiGradedPoly;
    fn neg(self) -> BiGradedPoly {
        self.scale_raw(self.p.get() - 1)
    }
}

impl Neg for BiGradedPoly {
    type Output = BiGradedPoly;
    fn neg(self) -> BiGradedPoly {
        -&self
    }
}

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero(vars: VarSet) -> Self {
        IntPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn mono(vars: VarSet, exps: &[u32], c: i64) -> Self {
        let mut out = Self::zero(vars);
        out.add_term(Monomial::new(vars, exps), BigInt::from(c));
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = Self::mono(self.vars, &vec![0; self.vars.arity()], 1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `d`, failing unless all are divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<IntPoly> {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            if !(c % d).is_zero() {
                return None;
            }
            out.terms.insert(*m, c / d);
        }
        Some(out)
    }

    pub fn reduce(&self, p: Prime) -> BiGradedPoly {
        let modulus = BigInt::from(p.get());
        let mut out = BiGradedPoly::zero(p, self.vars);
        for (m, c) in &self.terms {
            let mut r = c % &modulus;
            if r.is_negative() {
                r += &modulus;
            }
            let r: u32 = r.try_into().expect("residue fits in u32");
            out.add_term(*m, r);
        }
        out
    }
}

/// The element `(c^p - 4 (ef)^p - h^{2p}) / p` of S, computed over the
/// integers with `c = h^2 + 4ef` and then reduced mod p.
pub fn z_lift_s(p: Prime) -> Result<BiGradedPoly> {
    let v = VarSet::Adjoint;
    let pp = p.get();
    let c = IntPoly::mono(v, &[0, 2, 0], 1).add(&IntPoly::mono(v, &[1, 0, 1], 4));
    let numerator = c
        .pow(pp)
        .sub(&IntPoly::mono(v, &[pp, 0, pp], 4))
        .sub(&IntPoly::mono(v, &[0, 2 * pp, 0], 1));
    let lifted = numerator
        .div_exact(&BigInt::from(pp))
        .ok_or(Error::IntegerLift(pp))?;
    Ok(lifted.reduce(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn adj(pr: Prime, exps: &[u32], c: i64) -> BiGradedPoly {
        BiGradedPoly::mono(pr, VarSet::Adjoint, exps, c)
    }

    fn casimir_int(pr: Prime) -> BiGradedPoly {
        adj(pr, &[0, 2, 0], 1) + adj(pr, &[1, 0, 1], 4)
    }

    #[test]
    fn casimir_square_mod_5() {
        // (h^2 + 4ef)^2 = h^4 + 8efh^2 + 16e^2f^2 over Z
        let pr = p(5);
        let c = casimir_int(pr);
        let sq = &c * &c;
        let expected = adj(pr, &[0, 4, 0], 1) + adj(pr, &[1, 2, 1], 3) + adj(pr, &[2, 0, 2], 1);
        assert_eq!(sq, expected);
    }

    #[test]
    fn add_zero_and_natural_product() {
        let pr = p(7);
        let a = casimir_int(pr);
        assert_eq!(&a + &BiGradedPoly::zero(pr, VarSet::Adjoint), a);
        let x = BiGradedPoly::var(pr, VarSet::Natural, X);
        let y = BiGradedPoly::var(pr, VarSet::Natural, Y);
        let xy = &x * &y;
        assert_eq!(xy.bidegree(), Some((2, 0)));
    }

    #[test]
    fn mixed_tags_fail() {
        let pr = p(5);
        let a = BiGradedPoly::var(pr, VarSet::Adjoint, E);
        let b = BiGradedPoly::var(pr, VarSet::Natural, X);
        assert_eq!(
            a.checked_mul(&b),
            Err(Error::TagMismatch(VarSet::Adjoint, VarSet::Natural))
        );
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let pr = p(3);
        // h^3 - h c = -4efh = 2efh (mod 3)
        let c = casimir_int(pr);
        let h = BiGradedPoly::var(pr, VarSet::Adjoint, H);
        let num = h.pow(3) - &h * &c;
        assert_eq!(num, adj(pr, &[1, 1, 1], 2));
        assert_eq!(num.exact_div_var(F).unwrap(), adj(pr, &[1, 1, 0], 2));

        let zero = BiGradedPoly::zero(pr, VarSet::Adjoint);
        assert_eq!(zero.exact_div_var(E).unwrap(), zero);

        assert_eq!(h.pow(2).exact_div_var(F), Err(Error::NotDivisible("f")));
    }

    #[test]
    fn z_lift_at_3() {
        let pr = p(3);
        let s = z_lift_s(pr).unwrap();
        let expected = adj(pr, &[1, 4, 1], 1) + adj(pr, &[2, 2, 2], 1) + adj(pr, &[3, 0, 3], 2);
        assert_eq!(s, expected);
    }

    #[test]
    fn z_lift_gradings() {
        for n in [3, 5, 7, 11, 13] {
            let pr = p(n);
            let s = z_lift_s(pr).unwrap();
            assert!(!s.is_zero());
            assert_eq!(s.bidegree(), Some((2 * n as u32, 0)));
        }
    }

    #[test]
    fn homogeneous_components() {
        let pr = p(5);
        let c = casimir_int(pr);
        assert_eq!(c.homogeneous_component(2, 0), c);
        assert!(c.homogeneous_component(2, 2).is_zero());
        let eh = adj(pr, &[1, 1, 0], 1);
        let mixed = &eh + &BiGradedPoly::var(pr, VarSet::Adjoint, H);
        assert_eq!(mixed.homogeneous_component(2, 2), eh);
    }

    #[test]
    fn monomial_enumeration_counts() {
        // dim S^n = C(n+2, 2)
        for n in 0..12u32 {
            let total: usize = (-2 * n as i64..=2 * n as i64)
                .map(|w| monomials_of(VarSet::Adjoint, n, w).len())
                .sum();
            assert_eq!(total as u32, (n + 2) * (n + 1) / 2);
            let nat: usize = (-(n as i64)..=n as i64)
                .map(|w| monomials_of(VarSet::Natural, n, w).len())
                .sum();
            assert_eq!(nat as u32, n + 1);
        }
    }

    fn small_poly(vars: VarSet) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        let ar = vars.arity();
        prop::collection::vec((prop::collection::vec(0u32..4, ar), -20i64..20), 0..6)
    }

    fn to_int(vars: VarSet, t: &[(Vec<u32>, i64)]) -> IntPoly {
        t.iter().fold(IntPoly::zero(vars), |acc, (e, c)| {
            acc.add(&IntPoly::mono(vars, e, *c))
        })
    }

    fn to_fp(pr: Prime, vars: VarSet, t: &[(Vec<u32>, i64)]) -> BiGradedPoly {
        t.iter().fold(BiGradedPoly::zero(pr, vars), |acc, (e, c)| {
            acc + BiGradedPoly::mono(pr, vars, e, *c)
        })
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_homomorphism(a in small_poly(VarSet::Adjoint), b in small_poly(VarSet::Adjoint), idx in 0usize..4) {
            let pr = p([3u64, 5, 7, 11][idx]);
            let v = VarSet::Adjoint;
            let (ia, ib) = (to_int(v, &a), to_int(v, &b));
            let (fa, fb) = (to_fp(pr, v, &a), to_fp(pr, v, &b));
            prop_assert_eq!(ia.mul(&ib).reduce(pr), &fa * &fb);
            prop_assert_eq!(ia.sub(&ib).reduce(pr), &fa - &fb);
            prop_assert_eq!(ia.reduce(pr), fa);
        }

        #[test]
        fn gradings_are_additive(ea in prop::collection::vec(0u32..5, 3), eb in prop::collection::vec(0u32..5, 3)) {
            let pr = p(7);
            let a = adj(pr, &ea, 3);
            let b = adj(pr, &eb, 2);
            let (da, wa) = a.bidegree().unwrap();
            let (db, wb) = b.bidegree().unwrap();
            prop_assert_eq!((&a * &b).bidegree(), Some((da + db, wa + wb)));
        }

        #[test]
        fn division_round_trip(a in small_poly(VarSet::Adjoint), var in 0usize..3) {
            let pr = p(5);
            let a = to_fp(pr, VarSet::Adjoint, &a);
            let v = BiGradedPoly::var(pr, VarSet::Adjoint, var);
            prop_assert_eq!((&a * &v).exact_div_var(var).unwrap(), a);
        }
    }
}
