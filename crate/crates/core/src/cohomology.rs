//! Ext groups `Ext^i_U(k, M)` computed cell by cell.
//!
//! Each [`CellCohomology`] holds the incoming and outgoing differentials of a
//! cell, a basis of coboundaries, and cocycle representatives completing it to
//! a basis of cocycles. [`ExtEngine`] caches these per `(module, i, weight)`;
//! the cache is write-once, so concurrent callers always observe the same
//! value for a key.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::complex::{differential_matrix, Cochain, GradedCell};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::{span_rank, FpMatrix};
use crate::sl2::ModuleSpec;

/// A cohomology class given by a cocycle representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub representative: Cochain,
}

impl CohomologyClass {
    pub fn cell(&self) -> GradedCell {
        self.representative.cell()
    }
}

#[derive(Debug)]
pub struct CellCohomology {
    cell: GradedCell,
    /// `d^{i-1}`: previous cell -> this cell
    d_in: FpMatrix,
    /// `d^i`: this cell -> next cell
    d_out: FpMatrix,
    coboundaries: Vec<Vec<u32>>,
    representatives: Vec<Vec<u32>>,
    /// Columns are `representatives ++ coboundaries`; used to read off class
    /// coordinates.
    class_solver: FpMatrix,
}

impl CellCohomology {
    pub fn compute(cell: GradedCell) -> Self {
        let p = cell.prime();
        let d_out = differential_matrix(&cell);
        let d_in = match cell.prev() {
            Some(prev) => differential_matrix(&prev),
            None => FpMatrix::zeros(p, cell.dim(), 0),
        };
        let coboundaries = d_in.image_basis();
        let cocycles = d_out.kernel_basis();

        let mut representatives = Vec::new();
        let mut rank = coboundaries.len();
        let mut span: Vec<Vec<u32>> = coboundaries.clone();
        for z in cocycles {
            span.push(z.clone());
            let r = span_rank(p, cell.dim(), &span);
            if r > rank {
                rank = r;
                representatives.push(z);
            } else {
                span.pop();
            }
        }
        let columns: Vec<Vec<u32>> = representatives
            .iter()
            .chain(&coboundaries)
            .cloned()
            .collect();
        let class_solver = FpMatrix::from_columns(p, cell.dim(), &columns);
        CellCohomology {
            cell,
            d_in,
            d_out,
            coboundaries,
            representatives,
            class_solver,
        }
    }

    pub fn cell(&self) -> &GradedCell {
        &self.cell
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cell.dim() - self.d_out.rank()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundaries.len()
    }

    pub fn d_in(&self) -> &FpMatrix {
        &self.d_in
    }

    pub fn d_out(&self) -> &FpMatrix {
        &self.d_out
    }

    pub fn coboundary_basis(&self) -> &[Vec<u32>] {
        &self.coboundaries
    }

    pub fn representative_vectors(&self) -> &[Vec<u32>] {
        &self.representatives
    }

    pub fn basis(&self) -> Vec<CohomologyClass> {
        self.representatives
            .iter()
            .map(|v| CohomologyClass {
                representative: self.cell.cochain(v),
            })
            .collect()
    }

    pub fn is_cocycle_vector(&self, v: &[u32]) -> bool {
        self.d_out.apply(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of the class of `v` in the representative basis.
    pub fn class_coordinates(&self, v: &[u32]) -> Result<Vec<u32>> {
        if !self.is_cocycle_vector(v) {
            return Err(Error::NotACocycle);
        }
        let x = self
            .class_solver
            .solve(v)
            .expect("cocycles lie in the span of representatives and coboundaries");
        Ok(x[..self.dim()].to_vec())
    }

    /// A preimage of `v` under `d^{i-1}`, if `v` is a coboundary.
    pub fn preimage(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        if !self.is_cocycle_vector(v) {
            return Err(Error::NotACocycle);
        }
        Ok(self.d_in.solve(v))
    }
}

/// The two maps of the short exact sequence `S^{n-2} -> S^n -> S^{2n}(L(1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SesMap {
    /// `×c: S^{n-2} -> S^n`
    TimesC,
    /// `φ: S^n -> S^{2n}(L(1))`
    Phi,
}

type CellKey = (ModuleSpec, usize, i64);

pub struct ExtEngine {
    p: Prime,
    cache: Mutex<HashMap<CellKey, Arc<CellCohomology>>>,
}

impl ExtEngine {
    pub fn new(p: Prime) -> Self {
        ExtEngine {
            p,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn cell(&self, module: ModuleSpec, i: usize, weight: i64) -> Result<Arc<CellCohomology>> {
        let key = (module, i, weight);
        if let Some(c) = self.cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(c));
        }
        let computed = Arc::new(CellCohomology::compute(GradedCell::new(
            self.p, module, i, weight,
        )?));
        let mut cache = self.cache.lock().unwrap();
        Ok(Arc::clone(cache.entry(key).or_insert(computed)))
    }

    pub fn weights(module: ModuleSpec, i: usize) -> Vec<i64> {
        GradedCell::weights(module, i)
    }

    pub fn ext_dim_at_weight(&self, i: usize, module: ModuleSpec, weight: i64) -> Result<usize> {
        if i > 3 {
            return Ok(0);
        }
        let mut total = 0;
        for piece in module.pieces() {
            total += self.cell(piece, i, weight)?.dim();
        }
        Ok(total)
    }

    /// `dim Ext^i(k, M)` summed over all weights.
    pub fn ext_dim(&self, i: usize, module: ModuleSpec) -> Result<usize> {
        if i > 3 {
            return Ok(0);
        }
        let mut total = 0;
        for piece in module.pieces() {
            for w in Self::weights(piece, i) {
                total += self.cell(piece, i, w)?.dim();
            }
        }
        Ok(total)
    }

    fn cell_of(&self, a: &Cochain) -> Result<Arc<CellCohomology>> {
        self.cell(a.module(), a.ext_degree(), a.weight())
    }

    /// A cochain whose differential is `a`, if one exists.
    pub fn is_coboundary(&self, a: &Cochain) -> Result<Option<Cochain>> {
        let cc = self.cell_of(a)?;
        let v = cc.cell().to_vector(a)?;
        let Some(x) = cc.preimage(&v)? else {
            return Ok(None);
        };
        let prev = cc.cell().prev();
        Ok(Some(match prev {
            Some(prev) => prev.cochain(&x),
            // degree 0: only the zero cochain is a coboundary
            None => return Ok(Some(a.clone())),
        }))
    }

    pub fn is_cocycle(&self, a: &Cochain) -> Result<bool> {
        let cc = self.cell_of(a)?;
        Ok(cc.is_cocycle_vector(&cc.cell().to_vector(a)?))
    }

    pub fn cohomology_basis(
        &self,
        module: ModuleSpec,
        i: usize,
        weight: i64,
    ) -> Result<Vec<CohomologyClass>> {
        Ok(self.cell(module, i, weight)?.basis())
    }

    pub fn class_coordinates(&self, a: &Cochain) -> Result<Vec<u32>> {
        let cc = self.cell_of(a)?;
        cc.class_coordinates(&cc.cell().to_vector(a)?)
    }

    pub fn class_equal(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<bool> {
        let diff = a.representative.checked_sub(&b.representative)?;
        Ok(self.is_coboundary(&diff)?.is_some())
    }

    /// Per-weight blocks `(weight, matrix)` of the map induced on `Ext^i` by
    /// one of the two maps of the short exact sequence at degree `n`.
    pub fn induced_blocks(&self, i: usize, n: u32, map: SesMap) -> Result<Vec<(i64, FpMatrix)>> {
        let (source, target) = match map {
            SesMap::TimesC => {
                if n < 2 {
                    return Err(Error::InvalidArgument(format!(
                        "multiplication by c needs n >= 2, got {n}"
                    )));
                }
                (ModuleSpec::SymAdjoint(n - 2), ModuleSpec::SymAdjoint(n))
            }
            SesMap::Phi => (ModuleSpec::SymAdjoint(n), ModuleSpec::SymNatural(2 * n)),
        };
        let c = crate::sl2::casimir(self.p);
        let mut weights: Vec<i64> = Self::weights(source, i);
        weights.extend(Self::weights(target, i));
        weights.sort_unstable();
        weights.dedup();
        let mut blocks = Vec::new();
        for w in weights {
            let src = self.cell(source, i, w)?;
            let tgt = self.cell(target, i, w)?;
            let mut m = FpMatrix::zeros(self.p, tgt.dim(), src.dim());
            for (j, class) in src.basis().into_iter().enumerate() {
                let image = match map {
                    SesMap::TimesC => class.representative.mul_poly(&c)?,
                    SesMap::Phi => class.representative.map_phi()?,
                };
                let coords = tgt.class_coordinates(&tgt.cell().to_vector(&image)?)?;
                for (r, v) in coords.into_iter().enumerate() {
                    m.set(r, j, v);
                }
            }
            blocks.push((w, m));
        }
        Ok(blocks)
    }

    /// The induced map as one block-diagonal matrix, weights ascending.
    pub fn induced_map_on_ext(&self, i: usize, n: u32, map: SesMap) -> Result<FpMatrix> {
        let blocks = self.induced_blocks(i, n, map)?;
        let rows: usize = blocks.iter().map(|(_, b)| b.rows()).sum();
        let cols: usize = blocks.iter().map(|(_, b)| b.cols()).sum();
        let mut out = FpMatrix::zeros(self.p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for (_, b) in &blocks {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows();
            c0 += b.cols();
        }
        Ok(out)
    }

    pub fn induced_rank(&self, i: usize, n: u32, map: SesMap) -> Result<usize> {
        Ok(self
            .induced_blocks(i, n, map)?
            .iter()
            .map(|(_, b)| b.rank())
            .sum())
    }

    /// `dim coker(φ*: Ext^i(S^n) -> Ext^i(S^{2n}(L(1))))`, the dimension of
    /// the image of the connecting map into `Ext^{i+1}(S^{n-2})`.
    pub fn connecting_cokernel_dim(&self, i: usize, n: u32) -> Result<usize> {
        let target = self.ext_dim(i, ModuleSpec::SymNatural(2 * n))?;
        Ok(target - self.induced_rank(i, n, SesMap::Phi)?)
    }

    /// `dim ker(×c: Ext^i(S^{n-2}) -> Ext^i(S^n))`
    pub fn times_c_kernel_dim(&self, i: usize, n: u32) -> Result<usize> {
        let source = self.ext_dim(i, ModuleSpec::SymAdjoint(n - 2))?;
        Ok(source - self.induced_rank(i, n, SesMap::TimesC)?)
    }
}
