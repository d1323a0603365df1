//! Noncommutative polynomials, quadratic relation sets, bounded-degree
//! rewriting and Hilbert functions of quotients `TV/J`.

mod oracle;
mod poly;
mod relations;
mod rewrite;

pub use oracle::{ideal_component, quotient_dims_linear};
pub use poly::{Alphabet, MonomialOrder, NCPoly, NCWord};
pub use relations::{eval_at_matrix, relations_from_image, RelationListing, RelationSet};
pub use rewrite::{complete_rewrite, hilbert, DegreeStatus, HilbertReport, RewriteSystem, Rule};
