//! Mixed `L^{p,q}` quasi-norms, weighted Fock-space norms, modulation norms
//! and the harmonic-oscillator seminorms of Pilipović spaces.

mod embedding;
mod fock;
mod grid;
mod modulation;
mod pilipovic;

pub use embedding::{pi_a_weighted_l1_check, L1CheckReport};
pub use fock::{a2_weighted_norm_quadrature, a2_weighted_norm_series};
pub use grid::{mixed_norm, PlaneGrid};
pub use modulation::{modulation_norm, weighted_stft, GridSpec};
pub use pilipovic::{ln_h_power_norm, pilipovic_seminorm, SeminormReport, DEFAULT_N_SUP};
