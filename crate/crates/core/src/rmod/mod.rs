//! Finite-dimensional right modules over basic algebras.
//!
//! A module stores, for each algebra generator, the matrix of its right action on row
//! vectors, together with the vertex of every basis vector. Left modules are right modules
//! over the opposite algebra.

mod decompose;
mod hom;
mod module;
mod random;

pub use decompose::{decompose, decompose_grouped, is_indecomposable, is_isomorphic, Summand};
pub use hom::{hom_basis, hom_dim, HomSpace, ModHom};
pub use module::{opposite_shared, Module};
pub use random::{random_hom, random_module};

use thiserror::Error;

/// Errors raised by module constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid action: {0}")]
    BadAction(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("not a homomorphism: {0}")]
    NotHom(String),
    #[error("unsupported characteristic: decomposition needs characteristic 0")]
    UnsupportedCharacteristic,
    #[error("could not split a summand with non-local endomorphism ring: {0}")]
    Unsplit(String),
}
