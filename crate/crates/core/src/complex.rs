//! Chevalley–Eilenberg cochains `Hom(Λ^n g, M)` cut into graded cells.
//!
//! A cell fixes the module piece (so the polynomial degree), the
//! cohomological degree and the cochain weight `wt(α) = wt(α(ξ)) - wt(ξ)`.
//! The differential preserves both gradings, so cohomology is computed one
//! cell at a time.
//!
//! Exterior bases are fixed as
//! `Λ^0 = (1)`, `Λ^1 = (e, h, f)`, `Λ^2 = (h∧f, e∧f, e∧h)`, `Λ^3 = (f∧h∧e)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fp, Prime};
use crate::linalg::FpMatrix;
use crate::poly::{BiGradedPoly, Monomial};
use crate::sl2::{act, phi_map, LieBasis, ModuleSpec};

use LieBasis::{E, F, H};

static LAMBDA0: [&[LieBasis]; 1] = [&[]];
static LAMBDA1: [&[LieBasis]; 3] = [&[E], &[H], &[F]];
static LAMBDA2: [&[LieBasis]; 3] = [&[H, F], &[E, F], &[E, H]];
static LAMBDA3: [&[LieBasis]; 1] = [&[F, H, E]];

/// Ordered basis of `Λ^k g`; empty for `k >= 4`.
pub fn exterior_basis(k: usize) -> &'static [&'static [LieBasis]] {
    match k {
        0 => &LAMBDA0,
        1 => &LAMBDA1,
        2 => &LAMBDA2,
        3 => &LAMBDA3,
        _ => &[],
    }
}

pub fn wedge_weight(word: &[LieBasis]) -> i64 {
    word.iter().map(|g| g.weight()).sum()
}

pub fn wedge_label(word: &[LieBasis]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("∧")
}

/// Sorts a word by basis index, returning the sign of the permutation, or
/// `None` if a letter repeats.
fn sort_sign(word: &[LieBasis]) -> Option<(Vec<usize>, i64)> {
    let mut idx: Vec<usize> = word.iter().map(|g| g.index()).collect();
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, sign))
}

/// Expresses the wedge of `word` as `sign * basis[idx]`; `None` when it is zero.
pub fn wedge_coordinate(word: &[LieBasis]) -> Option<(i64, usize)> {
    let (sorted, sign) = sort_sign(word)?;
    exterior_basis(word.len())
        .iter()
        .enumerate()
        .find_map(|(i, b)| {
            let (bs, bsign) = sort_sign(b).expect("basis words are reduced");
            (bs == sorted).then_some((sign * bsign, i))
        })
}

/// The finite-dimensional slice of `Hom(Λ^n g, M)` at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCell {
    p: Prime,
    module: ModuleSpec,
    ext_degree: usize,
    weight: i64,
    slices: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
}

impl GradedCell {
    pub fn new(p: Prime, module: ModuleSpec, ext_degree: usize, weight: i64) -> Result<Self> {
        if ext_degree > 4 {
            return Err(Error::InvalidArgument(format!(
                "cohomological degree {ext_degree} out of range"
            )));
        }
        module.poly_degree()?;
        let mut slices = Vec::new();
        let mut offsets = vec![0];
        for word in exterior_basis(ext_degree) {
            let basis = module.slice_basis(weight + wedge_weight(word))?;
            offsets.push(offsets.last().unwrap() + basis.len());
            slices.push(basis);
        }
        Ok(GradedCell {
            p,
            module,
            ext_degree,
            weight,
            slices,
            offsets,
        })
    }

    /// Cochain weights for which the cell in this degree can be nonzero.
    pub fn weights(module: ModuleSpec, ext_degree: usize) -> Vec<i64> {
        let bound = module.max_abs_weight() + 2;
        (-bound..=bound)
            .filter(|&w| {
                exterior_basis(ext_degree).iter().any(|word| {
                    module
                        .slice_basis(w + wedge_weight(word))
                        .map(|b| !b.is_empty())
                        .unwrap_or(false)
                })
            })
            .collect()
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn module(&self) -> ModuleSpec {
        self.module
    }

    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn slice(&self, k: usize) -> &[Monomial] {
        &self.slices[k]
    }

    /// The same module and weight one cohomological degree up.
    pub fn next(&self) -> GradedCell {
        GradedCell::new(self.p, self.module, self.ext_degree + 1, self.weight)
            .expect("valid successor cell")
    }

    pub fn prev(&self) -> Option<GradedCell> {
        (self.ext_degree > 0).then(|| {
            GradedCell::new(self.p, self.module, self.ext_degree - 1, self.weight)
                .expect("valid predecessor cell")
        })
    }

    pub fn zero_cochain(&self) -> Cochain {
        Cochain {
            p: self.p,
            module: self.module,
            ext_degree: self.ext_degree,
            weight: self.weight,
            values: exterior_basis(self.ext_degree)
                .iter()
                .map(|_| BiGradedPoly::zero(self.p, self.module.vars()))
                .collect(),
        }
    }

    pub fn to_vector(&self, a: &Cochain) -> Result<Vec<u32>> {
        self.check(a)?;
        let mut v = vec![0; self.dim()];
        for (k, value) in a.values.iter().enumerate() {
            for (m, c) in value.terms() {
                let pos = self.slices[k]
                    .binary_search(m)
                    .map_err(|_| Error::Grading(format!("monomial {m} lies outside the cell")))?;
                v[self.offsets[k] + pos] = c.value();
            }
        }
        Ok(v)
    }

    pub fn cochain(&self, v: &[u32]) -> Cochain {
        assert_eq!(v.len(), self.dim(), "vector length");
        let mut out = self.zero_cochain();
        for (k, basis) in self.slices.iter().enumerate() {
            out.values[k] = BiGradedPoly::from_terms(
                self.p,
                self.module.vars(),
                basis
                    .iter()
                    .zip(&v[self.offsets[k]..self.offsets[k + 1]])
                    .map(|(m, &c)| (*m, c)),
            );
        }
        out
    }

    fn check(&self, a: &Cochain) -> Result<()> {
        if a.module != self.module || a.ext_degree != self.ext_degree || a.weight != self.weight {
            return Err(Error::CellMismatch(format!(
                "cochain in ({}, {}, {}) vs cell ({}, {}, {})",
                a.module, a.ext_degree, a.weight, self.module, self.ext_degree, self.weight
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GradedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom(Λ^{} g, {})_wt={}",
            self.ext_degree, self.module, self.weight
        )
    }
}

/// A weight-homogeneous cochain with one value per exterior basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    p: Prime,
    module: ModuleSpec,
    ext_degree: usize,
    weight: i64,
    values: Vec<BiGradedPoly>,
}

impl Cochain {
    pub fn new(
        p: Prime,
        module: ModuleSpec,
        ext_degree: usize,
        weight: i64,
        values: Vec<BiGradedPoly>,
    ) -> Result<Self> {
        let basis = exterior_basis(ext_degree);
        if values.len() != basis.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} values, got {}",
                basis.len(),
                values.len()
            )));
        }
        let degree = module.poly_degree()?;
        for (value, word) in values.iter().zip(basis) {
            if value.vars() != module.vars() {
                return Err(Error::TagMismatch(module.vars(), value.vars()));
            }
            let slot_weight = weight + wedge_weight(word);
            if value
                .terms()
                .any(|(m, _)| m.degree() != degree || m.weight() != slot_weight)
            {
                return Err(Error::Grading(format!(
                    "value {value} at {} is not in degree {degree}, weight {slot_weight}",
                    wedge_label(word)
                )));
            }
        }
        Ok(Cochain {
            p,
            module,
            ext_degree,
            weight,
            values,
        })
    }

    /// Builds an `S`-valued cochain, reading degree and weight off the values.
    pub fn adjoint(p: Prime, ext_degree: usize, values: Vec<BiGradedPoly>) -> Result<Self> {
        let basis = exterior_basis(ext_degree);
        let (degree, weight) = values
            .iter()
            .zip(basis)
            .find_map(|(v, word)| {
                v.terms()
                    .next()
                    .map(|(m, _)| (m.degree(), m.weight() - wedge_weight(word)))
            })
            .ok_or_else(|| Error::Grading("cannot infer the grading of a zero cochain".into()))?;
        Self::new(
            p,
            ModuleSpec::SymAdjoint(degree),
            ext_degree,
            weight,
            values,
        )
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn module(&self) -> ModuleSpec {
        self.module
    }

    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn values(&self) -> &[BiGradedPoly] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &BiGradedPoly {
        &self.values[k]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(BiGradedPoly::is_zero)
    }

    pub fn cell(&self) -> GradedCell {
        GradedCell::new(self.p, self.module, self.ext_degree, self.weight)
            .expect("cochains only exist in valid cells")
    }

    fn same_cell(&self, other: &Cochain) -> Result<()> {
        if (self.module, self.ext_degree, self.weight)
            != (other.module, other.ext_degree, other.weight)
        {
            return Err(Error::CellMismatch(format!(
                "({}, {}, {}) vs ({}, {}, {})",
                self.module,
                self.ext_degree,
                self.weight,
                other.module,
                other.ext_degree,
                other.weight
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_cell(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a = a.checked_add(b)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.checked_add(&other.scale(-Fp::one(self.p)))
    }

    pub fn scale(&self, c: Fp) -> Cochain {
        let mut out = self.clone();
        for v in &mut out.values {
            *v = v.scale(c);
        }
        out
    }

    /// `z * self` for a bihomogeneous `z` in S (normally an invariant).
    pub fn mul_poly(&self, z: &BiGradedPoly) -> Result<Cochain> {
        let ModuleSpec::SymAdjoint(n) = self.module else {
            return Err(Error::InvalidArgument(
                "only S-valued cochains can be multiplied".into(),
            ));
        };
        let (dz, wz) = z
            .bidegree()
            .ok_or_else(|| Error::Grading(format!("multiplier {z} is not bihomogeneous")))?;
        let values = self
            .values
            .iter()
            .map(|v| z.checked_mul(v))
            .collect::<Result<Vec<_>>>()?;
        Cochain::new(
            self.p,
            ModuleSpec::SymAdjoint(n + dz),
            self.ext_degree,
            self.weight + wz,
            values,
        )
    }

    /// Pushes an `S^n`-valued cochain forward along `S^n -> S^{2n}(L(1))`.
    pub fn map_phi(&self) -> Result<Cochain> {
        let ModuleSpec::SymAdjoint(n) = self.module else {
            return Err(Error::InvalidArgument(
                "phi is defined on S^n-valued cochains".into(),
            ));
        };
        let values = self
            .values
            .iter()
            .map(|v| phi_map(n, v))
            .collect::<Result<Vec<_>>>()?;
        Cochain::new(
            self.p,
            ModuleSpec::SymNatural(2 * n),
            self.ext_degree,
            self.weight,
            values,
        )
    }

    /// `α(word)` for an arbitrary word of the right length.
    fn eval_word(&self, word: &[LieBasis]) -> Option<BiGradedPoly> {
        let (sign, idx) = wedge_coordinate(word)?;
        Some(self.values[idx].scale_int(sign))
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = exterior_basis(self.ext_degree)
            .iter()
            .zip(&self.values)
            .map(|(w, v)| format!("{} ↦ {}", wedge_label(w), v))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The Chevalley–Eilenberg differential
/// `(dα)(x_0..x_k) = Σ_i (-1)^i x_i·α(..x̂_i..) + Σ_{i<j} (-1)^{i+j} α([x_i,x_j]∧..x̂_i..x̂_j..)`.
pub fn differential(a: &Cochain) -> Cochain {
    let p = a.p;
    let vars = a.module.vars();
    let target = exterior_basis(a.ext_degree + 1);
    let values = target
        .iter()
        .map(|word| {
            let mut acc = BiGradedPoly::zero(p, vars);
            for i in 0..word.len() {
                let rest: Vec<LieBasis> = word
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, &g)| g)
                    .collect();
                if let Some(v) = a.eval_word(&rest) {
                    let term = act(word[i], &v);
                    acc = if i % 2 == 0 { acc + term } else { acc - term };
                }
            }
            for i in 0..word.len() {
                for j in i + 1..word.len() {
                    let Some((coef, br)) = word[i].bracket(word[j]) else {
                        continue;
                    };
                    let mut w = vec![br];
                    w.extend(
                        word.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, &g)| g),
                    );
                    if let Some(v) = a.eval_word(&w) {
                        let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                        acc = acc + v.scale_int(sign * coef);
                    }
                }
            }
            acc
        })
        .collect();
    Cochain {
        p,
        module: a.module,
        ext_degree: a.ext_degree + 1,
        weight: a.weight,
        values,
    }
}

/// Matrix of `d: cell -> cell.next()` in the cells' monomial coordinates.
pub fn differential_matrix(cell: &GradedCell) -> FpMatrix {
    let target = cell.next();
    let mut m = FpMatrix::zeros(cell.p, target.dim(), cell.dim());
    let mut unit = vec![0; cell.dim()];
    for j in 0..cell.dim() {
        unit[j] = 1;
        let image = differential(&cell.cochain(&unit));
        let col = target
            .to_vector(&image)
            .expect("differential preserves the cell");
        for (i, v) in col.into_iter().enumerate() {
            m.set(i, j, v);
        }
        unit[j] = 0;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;
    use crate::sl2::casimir;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_coordinate(&[F, H]), Some((-1, 0)));
        assert_eq!(wedge_coordinate(&[H, F]), Some((1, 0)));
        assert_eq!(wedge_coordinate(&[H, E]), Some((-1, 2)));
        assert_eq!(wedge_coordinate(&[E, H, F]), Some((-1, 0)));
        assert_eq!(wedge_coordinate(&[F, H, E]), Some((1, 0)));
        assert_eq!(wedge_coordinate(&[H, E, F]), Some((1, 0)));
        assert_eq!(wedge_coordinate(&[E, E]), None);
    }

    #[test]
    fn d0_kills_casimir() {
        let pr = p(5);
        let cell = GradedCell::new(pr, ModuleSpec::SymAdjoint(2), 0, 0).unwrap();
        let a = Cochain::new(pr, ModuleSpec::SymAdjoint(2), 0, 0, vec![casimir(pr)]).unwrap();
        let v = cell.to_vector(&a).unwrap();
        assert!(differential_matrix(&cell).apply(&v).iter().all(|&x| x == 0));
        assert!(differential(&a).is_zero());
    }

    #[test]
    fn degree_one_condition_matches_first_equation() {
        // for α = (0, 0, z) we get (dα)(e∧f) = e·z
        let pr = p(7);
        let z = BiGradedPoly::mono(pr, VarSet::Natural, &[1, 2], 1);
        let a = Cochain::new(
            pr,
            ModuleSpec::SymNatural(3),
            1,
            1,
            vec![
                BiGradedPoly::zero(pr, VarSet::Natural),
                BiGradedPoly::zero(pr, VarSet::Natural),
                z.clone(),
            ],
        )
        .unwrap();
        let d = differential(&a);
        assert_eq!(d.value(1), &act(E, &z));
    }

    #[test]
    fn top_degree_differential_is_zero_map() {
        let pr = p(3);
        let cell = GradedCell::new(pr, ModuleSpec::SymAdjoint(2), 3, 0).unwrap();
        let m = differential_matrix(&cell);
        assert_eq!((m.rows(), m.cols()), (0, cell.dim()));
    }

    #[test]
    fn d_squared_vanishes() {
        for n in [3u64, 5] {
            let pr = p(n);
            for module in [
                ModuleSpec::SymAdjoint(4),
                ModuleSpec::SymNatural(7),
                ModuleSpec::SymNatural(10),
            ] {
                for i in 0..3 {
                    for w in GradedCell::weights(module, i) {
                        let cell = GradedCell::new(pr, module, i, w).unwrap();
                        let dd = differential_matrix(&cell.next()).mul(&differential_matrix(&cell));
                        assert!(dd.is_zero(), "{cell}");
                    }
                }
            }
        }
    }

    #[test]
    fn cochain_validation() {
        let pr = p(5);
        let bad = Cochain::new(
            pr,
            ModuleSpec::SymAdjoint(1),
            0,
            0,
            vec![BiGradedPoly::var(pr, VarSet::Adjoint, 0)],
        );
        assert!(matches!(bad, Err(Error::Grading(_))));
        let zero = vec![BiGradedPoly::zero(pr, VarSet::Adjoint); 3];
        assert!(Cochain::adjoint(pr, 1, zero).is_err());
    }
}
