use crate::error::{invalid, Result};
use crate::special::{ln_factorial, log_sum_exp};
use crate::HermiteExpansion;

/// Default truncation of the supremum over powers of the harmonic oscillator.
pub const DEFAULT_N_SUP: u32 = 60;

/// `sup_{N ≤ N_sup} ‖H^N f‖_{L²}/(h^N (N!)^{2s})` with its maximizer.
#[derive(Debug, Clone, PartialEq)]
pub struct SeminormReport {
    pub value: f64,
    pub ln_value: f64,
    /// Power `N` attaining the supremum; equal to `n_sup` signals truncation bias.
    pub argmax: u32,
    /// `ln(‖H^N f‖/(h^N (N!)^{2s}))` for `N = 0..=n_sup`.
    pub ln_ratios: Vec<f64>,
}

/// `ln ‖H^N f‖_{L²} = ½ ln Σ (2|α|+d)^{2N} |c_α|²`.
pub fn ln_h_power_norm(e: &HermiteExpansion, n: u32) -> f64 {
    let d = e.dim() as f64;
    let nf = n as f64;
    0.5 * log_sum_exp(e.iter().map(|(a, c)| {
        2.0 * nf * (2.0 * a.order() as f64 + d).ln() + 2.0 * c.norm().ln()
    }))
}

/// The L²-based seminorm of Pilipović spaces, every factor in log space.
pub fn pilipovic_seminorm(e: &HermiteExpansion, h: f64, s: f64, n_sup: u32) -> Result<SeminormReport> {
    if !(h > 0.0) {
        return Err(invalid("h", "must be positive"));
    }
    if !(s >= 0.0) {
        return Err(invalid("s", "must be non-negative"));
    }
    let ln_ratios: Vec<f64> = (0..=n_sup)
        .map(|n| ln_h_power_norm(e, n) - n as f64 * h.ln() - 2.0 * s * ln_factorial(n as u64))
        .collect();
    let (argmax, ln_value) = ln_ratios
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |a, (i, v)| if v > a.1 { (i, v) } else { a });
    Ok(SeminormReport {
        value: ln_value.exp(),
        ln_value,
        argmax: argmax as u32,
        ln_ratios,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MultiIndex;
    use num_complex::Complex64;

    #[test]
    fn ground_state() {
        let r = pilipovic_seminorm(&HermiteExpansion::basis(MultiIndex::single(0)), 1.0, 0.5, 20).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert_eq!(r.argmax, 0);
        let r = pilipovic_seminorm(&HermiteExpansion::basis(MultiIndex::single(2)), 10.0, 0.5, DEFAULT_N_SUP).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
        assert_eq!(r.argmax, 0);
    }

    #[test]
    fn matches_direct_maximization() {
        let e = HermiteExpansion::from_terms(
            1,
            40,
            (0..=40).map(|k| (MultiIndex::single(k), Complex64::new((-(k as f64)).exp(), 0.0))),
        )
        .unwrap();
        let mut prev = 0.0;
        for h in [2.0, 1.0, 0.5, 0.25] {
            let r = pilipovic_seminorm(&e, h, 0.5, DEFAULT_N_SUP).unwrap();
            let direct = (0..=DEFAULT_N_SUP)
                .map(|n| {
                    let norm = e.apply_h(n).l2_norm();
                    norm / (h.powi(n as i32) * (ln_factorial(n as u64)).exp())
                })
                .fold(0.0, f64::max);
            assert!((r.value / direct - 1.0).abs() < 1e-10);
            assert!(r.value.is_finite() && r.value > prev);
            prev = r.value;
        }
    }
}
