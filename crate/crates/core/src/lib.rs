//! Hochschild cohomology of `U(sl2)` over a field of odd characteristic,
//! computed as `Ext^*_U(k, S)` with `S` the symmetric algebra of the adjoint
//! module.
//!
//! Everything is exact linear algebra over GF(p): the Chevalley–Eilenberg
//! complex is cut into cells of fixed polynomial degree and weight, and each
//! cell is small enough to treat densely.

pub mod catalog;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod sl2;

pub use cohomology::{CohomologyClass, ExtEngine, SesMap};
pub use complex::{differential, differential_matrix, Cochain, GradedCell};
pub use error::{Error, Result};
pub use field::{fp_inv, Fp, Prime};
pub use linalg::FpMatrix;
pub use poly::{BiGradedPoly, IntPoly, Monomial, VarSet};
pub use sl2::{InvariantMonomial, InvariantRing, LieBasis, ModuleSpec};
