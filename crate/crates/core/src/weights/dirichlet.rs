use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::special::ln_factorial;
use crate::MultiIndex;

/// Monte Carlo estimate of a simplex integral against its closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletReport {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    /// Standard error of `lhs`.
    pub std_err: f64,
}

/// `∫_{Δ} ∏_{j<d} t_j^{α_j} (1 − Σ t_j)^{α_d} dt = α!/(|α|+d−1)!` over the
/// simplex `Δ = {t ∈ ℝ₊^{d−1} : Σ t_j ≤ 1}`.
///
/// Points are drawn uniformly on the simplex (normalized exponential
/// spacings), so the estimate is `vol(Δ) = 1/(d−1)!` times the sample mean.
pub fn dirichlet_simplex_identity(alpha: &MultiIndex, samples: usize, seed: u64) -> Result<DirichletReport> {
    let d = alpha.dim();
    if d < 2 {
        return Err(invalid("alpha", "the simplex identity needs d >= 2"));
    }
    if samples < 2 {
        return Err(invalid("samples", "need at least two samples"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exps: Vec<f64> = alpha.entries().iter().map(|&a| a as f64).collect();
    let (mut mean, mut m2) = (0.0f64, 0.0f64);
    let mut e = vec![0.0; d];
    for n in 1..=samples {
        for v in e.iter_mut() {
            *v = -(1.0 - rng.gen::<f64>()).ln();
        }
        let total: f64 = e.iter().sum();
        let val: f64 = e.iter().zip(&exps).map(|(v, a)| (v / total).powf(*a)).product();
        let delta = val - mean;
        mean += delta / n as f64;
        m2 += delta * (val - mean);
    }
    let vol = (-ln_factorial(d as u64 - 1)).exp();
    let lhs = vol * mean;
    let std_err = vol * (m2 / (samples - 1) as f64 / samples as f64).sqrt();
    let rhs = (alpha.ln_factorial() - ln_factorial(alpha.order() + d as u64 - 1)).exp();
    Ok(DirichletReport {
        lhs,
        rhs,
        rel_err: (lhs - rhs).abs() / rhs,
        std_err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let r = dirichlet_simplex_identity(&MultiIndex::from([1, 1]), 1000, 1).unwrap();
        assert!((r.rhs - 1.0 / 6.0).abs() < 1e-15);
        let r = dirichlet_simplex_identity(&MultiIndex::from([2, 1]), 1000, 1).unwrap();
        assert!((r.rhs - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn constant_integrand_is_exact() {
        let r = dirichlet_simplex_identity(&MultiIndex::from([0, 0]), 100, 3).unwrap();
        assert_eq!(r.lhs, 1.0);
        assert_eq!(r.std_err, 0.0);
    }

    // ∫₀¹ t(1−t) dt = 1/6 by Simpson's rule, which is exact for cubics.
    #[test]
    fn one_dimensional_quadrature_oracle() {
        let f = |t: f64| t * (1.0 - t);
        let simpson = (f(0.0) + 4.0 * f(0.5) + f(1.0)) / 6.0;
        let r = dirichlet_simplex_identity(&MultiIndex::from([1, 1]), 200_000, 5).unwrap();
        assert!((simpson - r.rhs).abs() < 1e-15);
        assert!((r.lhs - r.rhs).abs() < 4.0 * r.std_err);
    }

    #[test]
    fn three_dimensional_simplex() {
        let r = dirichlet_simplex_identity(&MultiIndex::from([1, 2, 0]), 200_000, 9).unwrap();
        assert!((r.lhs - r.rhs).abs() < 4.0 * r.std_err);
    }

    #[test]
    fn one_dimension_is_rejected() {
        assert!(dirichlet_simplex_identity(&MultiIndex::single(1), 10, 0).is_err());
    }
}
