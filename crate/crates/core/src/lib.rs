//! Exact construction and finite-degree verification of braided algebras.
//!
//! The crate works over Q(q) throughout: braid operators and their
//! extensions to tensor powers, the quotients `χ_{f,R} = TV / ⟨f(Ψ)(V⊗V)⟩`,
//! `U_q(g)` presentations acting on them as measuring coalgebras, and the
//! FRT bialgebra `A(R)` with its pairing against represented words.

pub mod builtins;
pub mod error;
mod expr;
pub mod fixture;
pub mod frt;
pub mod linalg;
pub mod ncalg;
pub mod scalar;
pub mod uqg;

pub use error::{Error, Result};
pub use linalg::{BraidedSpace, SymMatrix};
pub use ncalg::{NCPoly, NCWord, RelationSet, RewriteSystem};
pub use scalar::{Scalar, UniPoly};
