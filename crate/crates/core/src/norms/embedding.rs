use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bargmann::{polar_integrate, reproducing_project, ComplexPoint, PlaneFunction};
use crate::error::{invalid, Error, Result};

/// Radial order of the outer grid in [`pi_a_weighted_l1_check`].
const OUTER_ORDER: usize = 48;

/// Both sides of the weighted `L¹` estimate for the reproducing projection.
#[derive(Debug, Clone, PartialEq)]
pub struct L1CheckReport {
    /// `‖(Π_A F) e^{−(|·|²/2 + h₂ M_{s,t})}‖_{L¹}`
    pub lhs: f64,
    /// `‖F e^{−(|·|²/2 + h₁ M_{s,t})}‖_{L¹}`
    pub rhs: f64,
    /// `lhs/rhs` (`0` when both sides vanish).
    pub ratio: f64,
    /// `π^{-d} ‖e^{−|·|²/2 + 2h₁ M_{s,t}}‖_{L¹}`, the constant that Young's
    /// inequality gives for the estimate.
    pub bound: f64,
    pub holds: bool,
}

fn m_st(s: f64, t: f64, w: &[Complex64]) -> f64 {
    let nx: f64 = w.iter().map(|c| c.re * c.re).sum();
    let nxi: f64 = w.iter().map(|c| c.im * c.im).sum();
    nx.sqrt().powf(1.0 / t) + nxi.sqrt().powf(1.0 / s)
}

fn split(w: &[Complex64]) -> (Vec<f64>, Vec<f64>) {
    (w.iter().map(|c| c.re).collect(), w.iter().map(|c| c.im).collect())
}

/// Weighted `L¹` estimate for `Π_A` in dimension one, with both sides and
/// the Young constant computed by polar quadrature over `|z| ≤ radius`.
///
/// `Π_A F(z)` is evaluated on a disc of radius `radius + |z|` so the inner
/// integral is never truncated near its peak. Intended as a regression
/// guard: `holds` compares the computed ratio against the constant.
pub fn pi_a_weighted_l1_check<F: PlaneFunction + ?Sized>(
    f: &F,
    s: f64,
    t: f64,
    h1: f64,
    h2: f64,
    radius: f64,
) -> Result<L1CheckReport> {
    if f.dim() != 1 {
        return Err(Error::UnsupportedDimension(f.dim()));
    }
    if !(s >= 0.5 && t >= 0.5) {
        return Err(invalid("s,t", "need s, t >= 1/2"));
    }
    if !(h1 > 0.0 && 2.0 * h1 <= h2) {
        return Err(invalid("h1,h2", "need 0 < 2 h1 <= h2"));
    }
    if (s == 0.5 || t == 0.5) && !(h2 < 0.5) {
        return Err(invalid("h2", "need h2 < 1/2 when s or t equals 1/2"));
    }
    let rhs = polar_integrate(1, radius, OUTER_ORDER, |w| {
        let (x, xi) = split(w);
        let v = f.eval(&x, &xi).norm();
        if v == 0.0 {
            return 0.0.into();
        }
        (v * (-(0.5 * w[0].norm_sqr() + h1 * m_st(s, t, w))).exp()).into()
    })
    .value
    .re;
    let mut failure = None;
    let lhs = polar_integrate(1, radius, OUTER_ORDER, |w| {
        let z = ComplexPoint::new(w.to_vec());
        match reproducing_project(f, &z, radius + w[0].norm(), None) {
            Ok(p) => (p.norm() * (-(0.5 * w[0].norm_sqr() + h2 * m_st(s, t, w))).exp()).into(),
            Err(e) => {
                failure.get_or_insert(e);
                0.0.into()
            }
        }
    })
    .value
    .re;
    if let Some(e) = failure {
        return Err(e);
    }
    let bound = polar_integrate(1, radius.max(24.0), 96, |w| {
        (-0.5 * w[0].norm_sqr() + 2.0 * h1 * m_st(s, t, w)).exp().into()
    })
    .value
    .re
        / PI;
    let ratio = if rhs > 0.0 { lhs / rhs } else { 0.0 };
    Ok(L1CheckReport {
        lhs,
        rhs,
        ratio,
        bound,
        holds: ratio <= bound * (1.0 + 1e-6),
    })
}
