//! Named cocycles, their relations, and closed-form dimension counts.

pub mod cocycles;
pub mod predict;
pub mod relations;
pub mod span;

pub use cocycles::{build_cocycle, CocycleName};
pub use predict::{predicted_dim, DimFamily};
pub use relations::{
    relation_variants, relations, verify_relation, RelationReport, RelationSpec, RelationStatus,
};
pub use span::{presentation_hilbert, span_check, theorem_degree_audit, HhGroup, SpanRow};
