//! Bimodules, tensor and Hom functors, the adjunction transport with its unit and
//! counit, endomorphism algebras, resolutions, Ext and Tor.
//!
//! For an `S`-`R`-bimodule `T`, [`Tensor`] realizes `− ⊗_S T` and [`HomModule`] realizes
//! `Hom_R(T, −)`; [`gamma`] and [`gamma_inv`] are the mutually inverse adjunction maps.

mod bimodule;
mod canon;
mod endalg;
mod homfun;
mod resolution;
mod tensor;

pub use bimodule::Bimodule;
pub use canon::{alpha, beta, CanonicalMap};
pub use endalg::{end_algebra, EndAlgebra};
pub use homfun::{counit_eps, gamma, gamma_inv, unit_eta, HomModule};
pub use resolution::{
    cosyzygy, ext, ext1_classes, ext_dims, ext_dual, ext_inj, ext_proj, inj_coresolution, injective_envelope,
    map_from_projectives, proj_resolution, projective_cover, syzygy, top_generators, tor, Coresolution, Cover,
    Ext1, Resolution,
};
pub use tensor::{tensor_bimodules, Tensor};

use thiserror::Error;

use crate::rmod::ModuleError;

/// Errors raised by homological constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomalgError {
    #[error("invalid bimodule: {0}")]
    Bimodule(String),
    #[error("module is not basic: {0}")]
    NotBasic(String),
    #[error("not an isomorphism: {0}")]
    NotIso(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
