//! Weights on `ℂ^d ≅ ℝ^{2d}`, the moment transform from radial weights to
//! sequence weights on multi-indices, and sampled weight predicates.

mod dirichlet;
mod predicates;
mod theta;

pub use dirichlet::{dirichlet_simplex_identity, DirichletReport};
pub use predicates::{check_gauss_sandwich, check_moderate, PredicateReport, SANDWICH_LADDER};
pub use theta::{
    theta_closed_exponential, theta_closed_linear_exponential, theta_from_radial, theta_from_separable,
    LowerBoundCheck, SequenceWeight,
};

use std::fmt;
use std::sync::Arc;

use crate::bargmann::ComplexPoint;
use crate::error::{invalid, Result};

/// A positive profile `ω₀` on `[0, ∞)`.
#[derive(Clone)]
pub enum RadialProfile {
    /// `e^{−h r}`
    Exponential { h: f64 },
    /// `e^{−R √r}`
    RootExponential { radius: f64 },
    /// Arbitrary positive function.
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl RadialProfile {
    pub fn custom<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        RadialProfile::Custom(Arc::new(f))
    }

    /// `ln ω₀(r)`.
    pub fn ln_eval(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Exponential { h } => -h * r,
            RadialProfile::RootExponential { radius } => -radius * r.sqrt(),
            RadialProfile::Custom(f) => f(r).ln(),
        }
    }

    pub fn eval(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Custom(f) => f(r),
            _ => self.ln_eval(r).exp(),
        }
    }
}

impl fmt::Debug for RadialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadialProfile::Exponential { h } => write!(f, "Exponential {{ h: {h} }}"),
            RadialProfile::RootExponential { radius } => write!(f, "RootExponential {{ radius: {radius} }}"),
            RadialProfile::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Symbolic weight on `ℂ^d`.
#[derive(Debug, Clone)]
pub enum WeightSpec {
    /// `ω_{s,t,r}(z) = e^{|z|²/2 + r M_{s,t}(z)}`, `M_{s,t}(x+iξ) = |x|^{1/t} + |ξ|^{1/s}`.
    Gs { s: f64, t: f64, r: f64 },
    /// `ω_h(z) = e^{(1−2h)|z|²/2}`.
    Quadratic { h: f64 },
    /// `ω_R(x, ξ) = e^{(|x|²+|ξ|²)/4} e^{−R(|x|+|ξ|)}`.
    FlatExp { radius: f64 },
    /// `σ_r(z) = (1 + |z|²)^{r/2}`.
    Poly { r: f64 },
    /// `ω₀(|z|²)` for a profile `ω₀` on `[0, ∞)`.
    Radial(RadialProfile),
    /// The constant weight `1`.
    Unit,
}

impl WeightSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            WeightSpec::Gs { s, t, r } => {
                if !(s > 0.0 && t > 0.0) || !r.is_finite() {
                    return Err(invalid("gs", "need s, t > 0 and finite r"));
                }
            }
            WeightSpec::Quadratic { h } if !h.is_finite() || h < 0.0 => {
                return Err(invalid("h", "must be finite and non-negative"));
            }
            WeightSpec::FlatExp { radius } if !(radius > 0.0) || !radius.is_finite() => {
                return Err(invalid("R", "must be positive"));
            }
            WeightSpec::Poly { r } if !r.is_finite() => return Err(invalid("r", "must be finite")),
            _ => {}
        }
        Ok(())
    }

    /// `ln ω(x + iξ)`.
    pub fn ln_eval_parts(&self, x: &[f64], xi: &[f64]) -> f64 {
        let nx = x.iter().map(|v| v * v).sum::<f64>();
        let nxi = xi.iter().map(|v| v * v).sum::<f64>();
        let sq = nx + nxi;
        match self {
            WeightSpec::Gs { s, t, r } => 0.5 * sq + r * (nx.sqrt().powf(1.0 / t) + nxi.sqrt().powf(1.0 / s)),
            WeightSpec::Quadratic { h } => 0.5 * (1.0 - 2.0 * h) * sq,
            WeightSpec::FlatExp { radius } => 0.25 * sq - radius * (nx.sqrt() + nxi.sqrt()),
            WeightSpec::Poly { r } => 0.5 * r * sq.ln_1p(),
            WeightSpec::Radial(p) => p.ln_eval(sq),
            WeightSpec::Unit => 0.0,
        }
    }

    /// `ln ω(z)`.
    pub fn ln_eval(&self, z: &ComplexPoint) -> f64 {
        self.ln_eval_parts(&z.re(), &z.im())
    }

    /// `ω(z)`, assembled from its logarithm.
    pub fn eval(&self, z: &ComplexPoint) -> f64 {
        self.ln_eval(z).exp()
    }

    pub fn eval_parts(&self, x: &[f64], xi: &[f64]) -> f64 {
        self.ln_eval_parts(x, xi).exp()
    }

    /// Whether the weight depends on `z` only through `(|z_1|, …, |z_d|)`.
    pub fn is_radial(&self) -> bool {
        match self {
            WeightSpec::Gs { r, .. } => *r == 0.0,
            WeightSpec::FlatExp { .. } => false,
            WeightSpec::Quadratic { .. } | WeightSpec::Poly { .. } | WeightSpec::Radial(_) | WeightSpec::Unit => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn z(re: f64, im: f64) -> ComplexPoint {
        Complex64::new(re, im).into()
    }

    #[test]
    fn closed_weight_values() {
        assert_eq!(WeightSpec::Quadratic { h: 0.5 }.eval(&z(3.0, -2.0)), 1.0);
        let gs = WeightSpec::Gs { s: 0.5, t: 0.5, r: -1.0 };
        assert!((gs.eval(&z(1.0, 0.0)) - (-0.5f64).exp()).abs() < 1e-15);
        let fe = WeightSpec::FlatExp { radius: 1.0 };
        assert!((fe.eval(&z(1.0, 1.0)) - (0.5f64).exp() * (-2f64).exp()).abs() < 1e-15);
        assert!((WeightSpec::Poly { r: 2.0 }.eval(&z(1.0, 1.0)) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn gs_is_monotone_in_r() {
        for &(a, b) in &[(0.0, 0.0), (1.0, -2.0), (4.0, 0.3)] {
            let lo = WeightSpec::Gs { s: 1.0, t: 0.7, r: -1.0 }.eval(&z(a, b));
            let hi = WeightSpec::Gs { s: 1.0, t: 0.7, r: 0.5 }.eval(&z(a, b));
            assert!(lo <= hi);
        }
    }

    #[test]
    fn radiality() {
        assert!(WeightSpec::Quadratic { h: 0.6 }.is_radial());
        assert!(!WeightSpec::FlatExp { radius: 1.0 }.is_radial());
        assert!(!WeightSpec::Gs { s: 1.0, t: 1.0, r: 1.0 }.is_radial());
    }
}
