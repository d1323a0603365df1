//! Dense symbolic matrices, Kronecker products, echelon forms, and the
//! braid-operator toolkit.

mod braid;
mod echelon;
mod matrix;

pub use braid::{
    check_braid, compose_adjacent, embed_pair, extend_braiding, extend_braiding_column_first, image_subspace,
    in_span, minimal_poly, solve_commutant, BraidCheck, BraidedSpace, BraidingExtension,
};
pub use echelon::{Echelon, SparseVec};
pub use matrix::{MatrixDoc, SymMatrix};

/// Kronecker product under the crate-wide row-major convention.
pub fn kron(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
    a.kron(b)
}
