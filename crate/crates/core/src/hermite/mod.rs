//! Hermite functions, Hermite expansions and the harmonic oscillator.
//!
//! `h_α(x) = ∏_j h_{α_j}(x_j)` are evaluated with the normalized three-term
//! recurrence, which carries the Gaussian factor along instead of forming
//! bare Hermite polynomials. Functions are represented in memory as truncated
//! coefficient tables ([`HermiteExpansion`]).

pub(crate) mod analysis;
mod expansion;
mod function;

pub use analysis::{analyze, default_quad_order, QUAD_SAFETY_MARGIN};
pub use expansion::HermiteExpansion;
pub(crate) use function::check_dim;
pub use function::{CoefficientRule, FunctionSpec, GaussianSpec, SampledFunction};

use std::f64::consts::PI;

/// Magnitude at which the recurrence is renormalized.
const RESCALE: f64 = 1e150;

/// Values `h_0(x), …, h_n(x)` of the one-dimensional Hermite functions.
///
/// The recurrence runs on the polynomial part with a separately tracked log
/// scale, so neither the polynomial growth nor the Gaussian underflow can
/// spoil intermediate values. Entries that underflow in the final result are
/// returned as `0`.
pub fn hermite_table(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut log_scale = -0.5 * x * x;
    let mut prev = 0.0f64;
    let mut cur = PI.powf(-0.25);
    out.push(finish(cur, log_scale));
    for k in 0..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            prev /= RESCALE;
            log_scale += RESCALE.ln();
        }
        out.push(finish(cur, log_scale));
    }
    out
}

fn finish(p: f64, log_scale: f64) -> f64 {
    if p == 0.0 {
        return 0.0;
    }
    p.signum() * (p.abs().ln() + log_scale).exp()
}

/// One-dimensional Hermite function `h_k(x)`.
pub fn hermite_function(k: u32, x: f64) -> f64 {
    hermite_table(k as usize, x)[k as usize]
}

/// `h_α(x) = ∏_j h_{α_j}(x_j)`.
pub fn hermite_eval(alpha: &crate::MultiIndex, x: &[f64]) -> f64 {
    assert_eq!(alpha.dim(), x.len(), "point dimension must match the multi-index");
    alpha
        .entries()
        .iter()
        .zip(x)
        .map(|(&a, &xi)| hermite_function(a, xi))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussHermite;
    use crate::MultiIndex;

    #[test]
    fn ground_state_normalization() {
        let v = hermite_eval(&MultiIndex::single(0), &[0.0]);
        assert!((v - PI.powf(-0.25)).abs() < 1e-16);
        assert!((v - 0.7511255444649425).abs() < 1e-15);
    }

    #[test]
    fn odd_functions_vanish_at_origin() {
        assert_eq!(hermite_function(1, 0.0), 0.0);
        assert_eq!(hermite_function(7, 0.0), 0.0);
    }

    // Reference values computed at 50 digits from H_n(x) e^{-x²/2} / √(2^n n! √π).
    #[test]
    fn matches_extended_precision_reference() {
        let cases = [
            (5u32, 1.3, -0.39939146281375073457),
            (3, 1.0, -0.26302962362333344326),
            (40, 2.5, -0.26498308850855747182),
            (100, -7.25, -0.17130651319126439317),
        ];
        for (k, x, want) in cases {
            let got = hermite_function(k, x);
            assert!((got - want).abs() < 1e-12, "h_{k}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn explicit_polynomial_oracle() {
        // H_5(x) = 32x⁵ − 160x³ + 120x
        let x: f64 = 1.3;
        let h5 = 32.0 * x.powi(5) - 160.0 * x.powi(3) + 120.0 * x;
        let norm = (2f64.powi(5) * 120.0 * PI.sqrt()).sqrt();
        let want = h5 * (-x * x / 2.0).exp() / norm;
        assert!((hermite_function(5, x) - want).abs() < 1e-13);
    }

    #[test]
    fn far_tail_underflows_to_zero_without_nan() {
        let v = hermite_function(3, 60.0);
        assert_eq!(v, 0.0);
        let big = hermite_table(2000, 50.0);
        assert!(big.iter().all(|v| v.is_finite()));
        assert!(big[2000] != 0.0);
    }

    #[test]
    fn orthonormality_by_gauss_hermite() {
        let gh = GaussHermite::new(40);
        let tables: Vec<Vec<f64>> = gh.nodes().iter().map(|&y| hermite_table(10, y)).collect();
        for a in 0..=10 {
            for b in 0..=10 {
                let s: f64 = tables
                    .iter()
                    .zip(gh.modified_weights())
                    .map(|(t, w)| w * t[a] * t[b])
                    .sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((s - want).abs() < 1e-10, "({a},{b}) -> {s}");
            }
        }
    }

    #[test]
    fn orthonormality_two_dimensional() {
        let gh = GaussHermite::new(30);
        let idx = MultiIndex::all_up_to(2, 10);
        let nodes = gh.nodes();
        let w = gh.modified_weights();
        let tables: Vec<Vec<f64>> = nodes.iter().map(|&y| hermite_table(10, y)).collect();
        for (ia, a) in idx.iter().enumerate().step_by(7) {
            for b in idx.iter().skip(ia).step_by(5) {
                let mut s = 0.0;
                for i in 0..nodes.len() {
                    for j in 0..nodes.len() {
                        let (a0, a1) = (a.entries()[0] as usize, a.entries()[1] as usize);
                        let (b0, b1) = (b.entries()[0] as usize, b.entries()[1] as usize);
                        s += w[i] * w[j] * tables[i][a0] * tables[j][a1] * tables[i][b0] * tables[j][b1];
                    }
                }
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((s - want).abs() < 1e-10);
            }
        }
    }
}
