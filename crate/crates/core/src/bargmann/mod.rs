//! The Bargmann transform and the Gaussian-window short-time Fourier transform.
//!
//! The transform is available by two independent routes: Gauss–Hermite
//! quadrature of the integral kernel ([`bargmann_quadrature`]) and the power
//! series `Σ c_α z^α/√α!` of an analyzed expansion ([`bargmann_series`]).
//! The STFT with window `φ(y) = π^{-d/4}e^{-|y|²/2}` is an elementary
//! rescaling of the series route ([`stft_gaussian`]); [`stft_direct`]
//! integrates the STFT definition and exists as its oracle.
//!
//! Bridge convention: `V_φf(x, ξ)` is linked to `𝔙f(z)` at
//! `z = (x − iξ)/√2` ([`ComplexPoint::bridge`]).

mod plane;
mod reproducing;

pub use plane::{
    groechenig_lift, uv_apply, ClosedForm, EntireFunction, PlaneFn, PlaneFunction, UnitSquareIndicator,
    UnitSquareLift,
};
pub use reproducing::{
    a2_inner_quadrature, pi_a_box_closed_form, polar_integrate, reproducing_project, PolarEstimate,
    ANGULAR_NODES, DEFAULT_PI_RADIUS, DEFAULT_RADIAL_ORDER, SHELL_TOLERANCE,
};

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermite::analysis::integrate_against;
use crate::hermite::{analyze, default_quad_order, FunctionSpec, QUAD_SAFETY_MARGIN};
use crate::HermiteExpansion;

/// Cutoff used by [`stft_gaussian_spec`] when a symbolic function must be analyzed first.
pub const DEFAULT_STFT_CUTOFF: u32 = 64;

/// A point `z ∈ ℂ^d`, identified with `(x, ξ) ∈ ℝ^{2d}` through `z = x + iξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoint(Vec<Complex64>);

impl ComplexPoint {
    pub fn new(z: Vec<Complex64>) -> Self {
        assert!(!z.is_empty(), "point must have dimension >= 1");
        Self(z)
    }

    /// `z = x + iξ`.
    pub fn from_parts(x: &[f64], xi: &[f64]) -> Self {
        assert_eq!(x.len(), xi.len(), "real and imaginary parts must have equal length");
        Self::new(x.iter().zip(xi).map(|(&a, &b)| Complex64::new(a, b)).collect())
    }

    /// The bridge point `z = (x − iξ)/√2` at which `V_φf(x, ξ)` reads `𝔙f`.
    pub fn bridge(x: &[f64], xi: &[f64]) -> Self {
        assert_eq!(x.len(), xi.len(), "real and imaginary parts must have equal length");
        Self::new(
            x.iter()
                .zip(xi)
                .map(|(&a, &b)| Complex64::new(a / SQRT_2, -b / SQRT_2))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn re(&self) -> Vec<f64> {
        self.0.iter().map(|z| z.re).collect()
    }

    pub fn im(&self) -> Vec<f64> {
        self.0.iter().map(|z| z.im).collect()
    }

    /// `|z|² = Σ |z_j|²`, scaled so that no square overflows prematurely.
    pub fn norm_sqr(&self) -> f64 {
        let m = self.0.iter().map(|z| z.re.abs().max(z.im.abs())).fold(0.0, f64::max);
        if m == 0.0 || !m.is_finite() {
            return m * m;
        }
        let s: f64 = self.0.iter().map(|z| (z / m).norm_sqr()).sum();
        s * m * m
    }

    /// Bilinear pairing `⟨z, w⟩ = Σ z_j w_j`.
    pub fn bilinear(&self, w: &[Complex64]) -> Complex64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    /// Sesquilinear pairing `(z, w) = Σ z_j conj(w_j)`.
    pub fn sesquilinear(&self, w: &[Complex64]) -> Complex64 {
        self.0.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::new(vec![z])
    }
}

/// `exp(w)` assembled as magnitude times unit phase; infinite when the real
/// part overflows, exactly zero when it underflows.
pub(crate) fn exp_c(w: Complex64) -> Complex64 {
    let m = w.re.exp();
    if m == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(m * w.im.cos(), m * w.im.sin())
}

/// Logarithm of the Bargmann kernel,
/// `−(d/4) ln π − (⟨z,z⟩ + |y|²)/2 + √2 ⟨z, y⟩`.
pub fn bargmann_kernel_ln(z: &ComplexPoint, y: &[f64]) -> Complex64 {
    assert_eq!(z.dim(), y.len(), "point dimensions must agree");
    let d = z.dim() as f64;
    let mut acc = Complex64::new(-0.25 * d * PI.ln(), 0.0);
    for (zj, &yj) in z.coords().iter().zip(y) {
        acc += -0.5 * (zj * zj + yj * yj) + SQRT_2 * zj * yj;
    }
    acc
}

/// `𝔄_d(z, y) = π^{-d/4} exp(−(⟨z,z⟩ + |y|²)/2 + √2⟨z, y⟩)`.
///
/// The result is infinite if the kernel overflows.
pub fn bargmann_kernel(z: &ComplexPoint, y: &[f64]) -> Complex64 {
    exp_c(bargmann_kernel_ln(z, y))
}

/// Coefficient-rule cutoff implied by a quadrature order (inverse of [`default_quad_order`]).
fn rule_cutoff(quad_order: usize) -> u32 {
    (quad_order.saturating_sub(20) / 2) as u32
}

/// `𝔙f(z) = ∫ 𝔄_d(z, y) f(y) dy` by Gauss–Hermite quadrature.
///
/// `quad_order = None` uses `default_quad_order(32)`. Coefficient rules are
/// synthesized up to the cutoff that order would serve.
pub fn bargmann_quadrature(f: &FunctionSpec, z: &ComplexPoint, quad_order: Option<usize>) -> Result<Complex64> {
    check_point(f.dim(), z.dim())?;
    let q = quad_order.unwrap_or_else(|| default_quad_order(32));
    integrate_against(f, q, rule_cutoff(q), |y| bargmann_kernel(z, y))
}

/// Table `z^k/√k!` for `k = 0..=n`, from log-magnitude and phase.
fn monomial_table(z: Complex64, n: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Complex64::new(1.0, 0.0));
    if z == Complex64::new(0.0, 0.0) {
        out.resize(n + 1, Complex64::new(0.0, 0.0));
        return out;
    }
    let (ln_r, theta) = (z.norm().ln(), z.arg());
    for k in 1..=n {
        let kf = k as f64;
        let ln_mag = kf * ln_r - 0.5 * crate::special::ln_factorial(k as u64);
        out.push(Complex64::from_polar(ln_mag.exp(), kf * theta));
    }
    out
}

/// Normalized monomial `e_α(z) = z^α/√α!`.
pub fn monomial(alpha: &crate::MultiIndex, z: &ComplexPoint) -> Complex64 {
    assert_eq!(alpha.dim(), z.dim(), "point dimension must match the multi-index");
    alpha
        .entries()
        .iter()
        .zip(z.coords())
        .map(|(&a, &zj)| monomial_table(zj, a as usize)[a as usize])
        .product()
}

/// `Σ_{|α| ≤ N} c_α z^α/√α!`, the Bargmann transform of the expansion.
pub fn bargmann_series(e: &HermiteExpansion, z: &ComplexPoint) -> Complex64 {
    assert_eq!(e.dim(), z.dim(), "point dimension must match the expansion");
    let tables: Vec<Vec<Complex64>> = z
        .coords()
        .iter()
        .map(|&zj| monomial_table(zj, e.cutoff() as usize))
        .collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, c) in e.iter() {
        let m: Complex64 = a.entries().iter().zip(&tables).map(|(&k, t)| t[k as usize]).product();
        acc += c * m;
    }
    acc
}

/// `V_φf(x, ξ) = (2π)^{-d/2} e^{-(|x|²+|ξ|²)/4} e^{-i⟨x,ξ⟩/2} 𝔙f((x − iξ)/√2)`.
pub fn stft_gaussian(e: &HermiteExpansion, x: &[f64], xi: &[f64]) -> Complex64 {
    let z = ComplexPoint::bridge(x, xi);
    let b = bargmann_series(e, &z);
    if b == Complex64::new(0.0, 0.0) {
        return b;
    }
    b * exp_c(stft_factor_ln(x, xi))
}

/// `ln[(2π)^{-d/2} e^{-(|x|²+|ξ|²)/4} e^{-i⟨x,ξ⟩/2}]`.
pub(crate) fn stft_factor_ln(x: &[f64], xi: &[f64]) -> Complex64 {
    let d = x.len() as f64;
    let sq: f64 = x.iter().chain(xi).map(|v| v * v).sum();
    let dot: f64 = x.iter().zip(xi).map(|(a, b)| a * b).sum();
    Complex64::new(-0.5 * d * (2.0 * PI).ln() - 0.25 * sq, -0.5 * dot)
}

/// [`stft_gaussian`] for a symbolic function, analyzed at `cutoff`
/// (default [`DEFAULT_STFT_CUTOFF`]).
pub fn stft_gaussian_spec(f: &FunctionSpec, cutoff: Option<u32>, x: &[f64], xi: &[f64]) -> Result<Complex64> {
    check_point(f.dim(), x.len())?;
    let e = analyze(f, f.dim(), cutoff.unwrap_or(DEFAULT_STFT_CUTOFF), None)?;
    Ok(stft_gaussian(&e, x, xi))
}

/// `V_φf(x, ξ) = (2π)^{-d/2} ∫ f(y) φ(y − x) e^{-i⟨y,ξ⟩} dy` by quadrature.
pub fn stft_direct(f: &FunctionSpec, x: &[f64], xi: &[f64], quad_order: Option<usize>) -> Result<Complex64> {
    check_point(f.dim(), x.len())?;
    check_point(f.dim(), xi.len())?;
    let d = x.len() as f64;
    let q = quad_order.unwrap_or_else(|| default_quad_order(32).max(QUAD_SAFETY_MARGIN));
    let norm = (2.0 * PI).powf(-0.5 * d) * PI.powf(-0.25 * d);
    let v = integrate_against(f, q, rule_cutoff(q), |y| {
        let mut ex = Complex64::new(0.0, 0.0);
        for ((&yj, &xj), &wj) in y.iter().zip(x).zip(xi) {
            ex += Complex64::new(-0.5 * (yj - xj) * (yj - xj), -yj * wj);
        }
        exp_c(ex)
    })?;
    Ok(v * norm)
}

fn check_point(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
