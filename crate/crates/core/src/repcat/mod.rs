//! Repe-complexes over the repetitive algebra `R̂` and the functors `S_T`, `Q_DT`, `F_T`
//! and `G_T` between the repetitive categories of `R` and `S`.
//!
//! A repe-complex `X` is a finitely supported family of `R`-modules `X_i` with structure
//! maps `δ_i: X_i ⊗_R DR → X_{i−1}` satisfying `δ_{i−1}(δ_i ⊗ DR) = 0`. Every complex is
//! stored as a module over the window algebra of its support, see [`Repetitive`].

mod complex;
mod functors;
mod roundtrip;
mod stable;
mod window;

pub use complex::{
    common_window, make_repe, proj_object, random_complex, random_repe_hom, repe_hom_basis, RepeComplex, RepeHom,
};
pub use functors::{
    f_functor, g_functor, hat_hom, hat_tensor, l_functor, l_map, q_functor, q_functor_with, q_map, r_functor, r_map,
    restriction_check, s_functor, s_functor_with, s_map, QApplication, SApplication, TiltPair, TwoBlock,
};
pub use roundtrip::{construct_phi, l_regular_plus, verify_roundtrip_r, verify_roundtrip_s, PhiConstruction, RoundtripReport};
pub use stable::{
    is_projective_object, stable_hom, stable_hom_brute_force, stably_isomorphic, strip_projectives, StableHomSpace, Stripped,
};
pub use window::{Repetitive, WINDOW_BOUND};

use thiserror::Error;

use crate::homalg::HomalgError;
use crate::rmod::ModuleError;
use crate::wtilt::WTiltError;

/// Errors raised by repetitive-category constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepcatError {
    #[error("square-zero violated at degree {0}")]
    SquareZero(i32),
    #[error("structure map at degree {0} is not R-linear: {1}")]
    BadDelta(i32, String),
    #[error("window [{lo}, {hi}] exceeds the degree bound {bound}")]
    WindowExceeded { lo: i32, hi: i32, bound: i32 },
    #[error("not a morphism of repe-complexes at degree {0}")]
    NotMorphism(i32),
    #[error("complexes live over different algebras or windows")]
    AlgebraMismatch,
    #[error("xi does not annihilate r(s^P) at degree {0}")]
    XiNotAnnihilating(i32),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("no lift exists: {0}")]
    NoLift(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    WTilt(#[from] WTiltError),
}
