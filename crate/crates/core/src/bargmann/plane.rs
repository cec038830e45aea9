use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{bargmann_series, exp_c, ComplexPoint};
use crate::norms::PlaneGrid;
use crate::HermiteExpansion;

/// A complex-valued function on `ℂ^d ≅ ℝ^{2d}`, evaluated at `z = x + iξ`.
pub trait PlaneFunction {
    fn dim(&self) -> usize;

    fn eval(&self, x: &[f64], xi: &[f64]) -> Complex64;

    /// Bounding box `[(lo, hi); 2d]` over `(x_1, …, x_d, ξ_1, …, ξ_d)` when the
    /// function is compactly supported.
    fn support(&self) -> Option<Vec<(f64, f64)>> {
        None
    }
}

/// A [`PlaneFunction`] given by a closure.
#[derive(Clone)]
pub struct PlaneFn {
    dim: usize,
    f: Arc<dyn Fn(&[f64], &[f64]) -> Complex64 + Send + Sync>,
}

impl PlaneFn {
    pub fn new<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&[f64], &[f64]) -> Complex64 + Send + Sync + 'static,
    {
        Self { dim, f: Arc::new(f) }
    }
}

impl fmt::Debug for PlaneFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlaneFn").field("dim", &self.dim).finish_non_exhaustive()
    }
}

impl PlaneFunction for PlaneFn {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], xi: &[f64]) -> Complex64 {
        (self.f)(x, xi)
    }
}

/// Named entire functions with closed-form evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    Constant { dim: usize, value: Complex64 },
    /// `e^{⟨a, z⟩}`
    ExpLinear { a: Vec<Complex64> },
    /// `e^{μ⟨z, z⟩/2}`
    ExpQuadratic { dim: usize, mu: Complex64 },
}

/// An entire function on `ℂ^d`.
#[derive(Debug, Clone)]
pub enum EntireFunction {
    /// `Σ c_α e_α(z)` for a Hermite expansion `{c_α}`.
    Series(HermiteExpansion),
    ClosedForm(ClosedForm),
    /// Samples on a plane grid, interpolated multilinearly.
    Sampled(PlaneGrid),
}

impl EntireFunction {
    pub fn dim(&self) -> usize {
        match self {
            EntireFunction::Series(e) => e.dim(),
            EntireFunction::ClosedForm(ClosedForm::Constant { dim, .. })
            | EntireFunction::ClosedForm(ClosedForm::ExpQuadratic { dim, .. }) => *dim,
            EntireFunction::ClosedForm(ClosedForm::ExpLinear { a }) => a.len(),
            EntireFunction::Sampled(g) => g.dim(),
        }
    }

    pub fn eval_at(&self, z: &ComplexPoint) -> Complex64 {
        match self {
            EntireFunction::Series(e) => bargmann_series(e, z),
            EntireFunction::ClosedForm(ClosedForm::Constant { value, .. }) => *value,
            EntireFunction::ClosedForm(ClosedForm::ExpLinear { a }) => exp_c(z.bilinear(a)),
            EntireFunction::ClosedForm(ClosedForm::ExpQuadratic { mu, .. }) => {
                exp_c(0.5 * mu * z.bilinear(z.coords()))
            }
            EntireFunction::Sampled(g) => g.interpolate(&z.re(), &z.im()),
        }
    }
}

impl PlaneFunction for EntireFunction {
    fn dim(&self) -> usize {
        EntireFunction::dim(self)
    }

    fn eval(&self, x: &[f64], xi: &[f64]) -> Complex64 {
        self.eval_at(&ComplexPoint::from_parts(x, xi))
    }
}

/// Indicator of the unit square `[0,1]^{2d}` in the `(x, ξ)` coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSquareIndicator {
    pub dim: usize,
}

fn in_unit_square(x: &[f64], xi: &[f64]) -> bool {
    x.iter().chain(xi).all(|&v| (0.0..=1.0).contains(&v))
}

impl PlaneFunction for UnitSquareIndicator {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], xi: &[f64]) -> Complex64 {
        Complex64::new(if in_unit_square(x, xi) { 1.0 } else { 0.0 }, 0.0)
    }

    fn support(&self) -> Option<Vec<(f64, f64)>> {
        Some(vec![(0.0, 1.0); 2 * self.dim])
    }
}

/// `e^{|w|²} χ_{[0,1]^{2d}}(w)`: the Gaussian-compensated unit square whose
/// reproducing projection has the closed form [`super::pi_a_box_closed_form`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSquareLift {
    pub dim: usize,
}

impl PlaneFunction for UnitSquareLift {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[f64], xi: &[f64]) -> Complex64 {
        if !in_unit_square(x, xi) {
            return Complex64::new(0.0, 0.0);
        }
        let sq: f64 = x.iter().chain(xi).map(|v| v * v).sum();
        Complex64::new(sq.exp(), 0.0)
    }

    fn support(&self) -> Option<Vec<(f64, f64)>> {
        Some(vec![(0.0, 1.0); 2 * self.dim])
    }
}

/// `F(√2x, −√2ξ) · exp(scale_ln + (|x|²+|ξ|²)/2 − i⟨x,ξ⟩)`, skipping the
/// exponential wherever `F` vanishes.
fn lifted<F: PlaneFunction + ?Sized>(f: &F, x: &[f64], xi: &[f64], scale_ln: f64) -> Complex64 {
    assert_eq!(x.len(), f.dim(), "point dimension must match the function");
    assert_eq!(xi.len(), f.dim(), "point dimension must match the function");
    let sx: Vec<f64> = x.iter().map(|v| SQRT_2 * v).collect();
    let sxi: Vec<f64> = xi.iter().map(|v| -SQRT_2 * v).collect();
    let v = f.eval(&sx, &sxi);
    if v == Complex64::new(0.0, 0.0) {
        return v;
    }
    let sq: f64 = x.iter().chain(xi).map(|v| v * v).sum();
    let dot: f64 = x.iter().zip(xi).map(|(a, b)| a * b).sum();
    v * exp_c(Complex64::new(scale_ln + 0.5 * sq, -dot))
}

/// `(U_𝔙F)(x + iξ) = (2π)^{d/2} e^{(|x|²+|ξ|²)/2} e^{−i⟨x,ξ⟩} F(√2x, −√2ξ)`.
///
/// Applied to `F = V_φf` this returns `𝔙f(x + iξ)`.
pub fn uv_apply<F: PlaneFunction + ?Sized>(f: &F, x: &[f64], xi: &[f64]) -> Complex64 {
    let d = f.dim() as f64;
    lifted(f, x, xi, 0.5 * d * (2.0 * PI).ln())
}

/// `F₀(x, ξ) = (2π³)^{d/4} F(√2x, −√2ξ) e^{(|x|²+|ξ|²)/2} e^{−i⟨x,ξ⟩}`.
pub fn groechenig_lift<F: PlaneFunction + ?Sized>(f: &F, x: &[f64], xi: &[f64]) -> Complex64 {
    let d = f.dim() as f64;
    lifted(f, x, xi, 0.25 * d * (2.0 * PI.powi(3)).ln())
}
