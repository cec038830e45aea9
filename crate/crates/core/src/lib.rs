//! Hermite expansions, the Bargmann transform and its Gaussian-window STFT
//! counterpart, weighted Fock-space norms, classification of functions into
//! Pilipović and Gelfand–Shilov spaces by coefficient decay, and the
//! fractional Fourier transform as a phase rotation in the Hermite basis.
//!
//! Every function on `ℝ^d` is carried as a [`HermiteExpansion`]; the
//! Bargmann transform of such an expansion is the entire function
//! `Σ c_α z^α/√α!`, and most identities in this crate are checked by
//! comparing that series route against an independent quadrature route.

// `!(x > 0.0)` is written on purpose: it rejects NaN along with the bad range.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::type_complexity)]
// Reference values in tests are quoted from extended-precision computations.
#![cfg_attr(test, allow(clippy::excessive_precision, clippy::approx_constant))]

pub mod bargmann;
pub mod classify;
pub mod cli;
pub mod error;
pub mod fracft;
pub mod hermite;
pub mod multi_index;
pub mod norms;
pub mod quadrature;
pub mod special;
pub mod weights;

pub use error::{Error, Result};
pub use hermite::{analyze, FunctionSpec, GaussianSpec, HermiteExpansion};
pub use multi_index::MultiIndex;
pub use num_complex::Complex64;
