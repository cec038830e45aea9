use std::f64::consts::PI;

use crate::bargmann::{polar_integrate, PlaneFunction, SHELL_TOLERANCE};
use crate::error::{Error, Result};
use crate::special::pairwise_sum;
use crate::weights::SequenceWeight;
use crate::HermiteExpansion;

/// `(Σ |c_α ϑ(α)|²)^{1/2}`.
pub fn a2_weighted_norm_series(e: &HermiteExpansion, theta: &SequenceWeight) -> f64 {
    let terms: Vec<f64> = e.iter().map(|(a, c)| (c * theta.eval(a)).norm_sqr()).collect();
    pairwise_sum(&terms).sqrt()
}

/// `(π^{-d} ∫ |F(z) ω₀(|z_1|², …, |z_d|²)|² dλ(z))^{1/2}` on the polar grid,
/// with `ln_omega0` returning `ln ω₀`.
///
/// Fails with [`Error::RadiusTooSmall`] when the outer ring of the grid
/// carries more than the shell tolerance of the absolute mass.
pub fn a2_weighted_norm_quadrature<F, W>(f: &F, ln_omega0: W, radius: f64, quad_order: Option<usize>) -> Result<f64>
where
    F: PlaneFunction + ?Sized,
    W: Fn(&[f64]) -> f64,
{
    let d = f.dim();
    let est = polar_integrate(
        d,
        radius,
        quad_order.unwrap_or(crate::bargmann::DEFAULT_RADIAL_ORDER),
        |w| {
            let x: Vec<f64> = w.iter().map(|c| c.re).collect();
            let xi: Vec<f64> = w.iter().map(|c| c.im).collect();
            let v = f.eval(&x, &xi).norm_sqr();
            if v == 0.0 {
                return v.into();
            }
            let r: Vec<f64> = w.iter().map(|c| c.norm_sqr()).collect();
            (v * (2.0 * ln_omega0(&r)).exp()).into()
        },
    );
    if est.shell_fraction > SHELL_TOLERANCE {
        return Err(Error::RadiusTooSmall {
            radius,
            shell_fraction: est.shell_fraction,
        });
    }
    Ok((est.value.re * PI.powf(-(d as f64))).sqrt())
}
