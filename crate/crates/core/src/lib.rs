//! Exact computations with finite-dimensional quiver algebras, Wakamatsu-tilting
//! modules and repetitive categories.
//!
//! Layers, bottom to top:
//! - [`exactla`]: exact linear algebra over ℚ and 𝔽_p;
//! - [`qalg`]: bounded quiver algebras and algebras given by structure constants;
//! - [`rmod`]: right modules, homomorphism spaces, duality and decomposition;
//! - [`homalg`]: bimodules, tensor and Hom functors, resolutions, Ext and Tor;
//! - [`wtilt`]: Wakamatsu-tilting certification and cotorsion-pair approximations;
//! - [`repcat`]: repe-complexes and the functors between repetitive categories;
//! - [`cli`]: fixture parsing, command dispatch and reports.

pub mod exactla;
pub mod qalg;
pub mod rmod;
pub mod homalg;
pub mod wtilt;
pub mod repcat;
pub mod cli;

pub use exactla::{Field, Matrix, Rat, Scalar};
