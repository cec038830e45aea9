//! Fractional and partial fractional Fourier transforms.
//!
//! `𝓕_r` acts on the Hermite basis by `h_α ↦ e^{−iπ⟨r,α⟩/2} h_α`, so it is a
//! phase rotation of the coefficient table. `r = (1,…,1)` is the Fourier
//! transform `(2π)^{-d/2} ∫ f(x) e^{−i⟨x,ξ⟩} dx`, `r = 0` and `r = 4·(1,…,1)`
//! are the identity, and `r_j` rotates the `(x_j, ξ_j)` plane of the
//! time-frequency picture by `r_j π/2`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::{modulation_norm, GridSpec};
use crate::weights::WeightSpec;
use crate::{HermiteExpansion, MultiIndex};

/// `⟨r,α⟩` closer than this to an integer uses the exact quarter-turn table.
const INTEGRAL_SLACK: f64 = 1e-12;

/// `e^{−iπt/2}` applied to `c`; exact when `t` is an integer.
fn rotate(c: Complex64, t: f64) -> Complex64 {
    let n = t.round();
    if (t - n).abs() <= INTEGRAL_SLACK * t.abs().max(1.0) {
        return match (n as i64).rem_euclid(4) {
            0 => c,
            1 => Complex64::new(c.im, -c.re),
            2 => Complex64::new(-c.re, -c.im),
            _ => Complex64::new(-c.im, c.re),
        };
    }
    // reduce first so the phase is formed from a small angle
    let reduced = t - 4.0 * (t / 4.0).floor();
    c * Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_2 * reduced)
}

fn check_r(e: &HermiteExpansion, r: &[f64]) -> Result<()> {
    if r.len() != e.dim() {
        return Err(Error::DimensionMismatch {
            expected: e.dim(),
            found: r.len(),
        });
    }
    if r.iter().any(|v| !v.is_finite()) {
        return Err(crate::error::invalid("r", "must be finite"));
    }
    Ok(())
}

fn pairing(r: &[f64], a: &MultiIndex) -> f64 {
    r.iter().zip(a.entries()).map(|(rj, &aj)| rj * aj as f64).sum()
}

/// `c_α ↦ e^{−iπ⟨r,α⟩/2} c_α`.
pub fn fractional_ft(e: &HermiteExpansion, r: &[f64]) -> Result<HermiteExpansion> {
    check_r(e, r)?;
    Ok(e.map(|a, c| rotate(c, pairing(r, a))))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommuteReport {
    /// `max_α |(H^N 𝓕_r e)_α − (𝓕_r H^N e)_α| / |(H^N e)_α|`.
    pub max_rel_diff: f64,
    /// Both routes agree bit for bit.
    pub bitwise_equal: bool,
}

/// Compares `H^N ∘ 𝓕_r` with `𝓕_r ∘ H^N`. Both are diagonal, so they agree
/// exactly for integral phases and up to rounding of the phase product
/// otherwise.
pub fn verify_commutes_with_h(e: &HermiteExpansion, r: &[f64], n: u32) -> Result<CommuteReport> {
    let a = fractional_ft(e, r)?.apply_h(n);
    let b = fractional_ft(&e.apply_h(n), r)?;
    let scaled = e.apply_h(n);
    let mut max_rel_diff = 0.0f64;
    let mut bitwise_equal = a.len() == b.len();
    for (alpha, ca) in a.iter() {
        let cb = b.get(alpha);
        bitwise_equal &= *ca == cb;
        let denom = scaled.get(alpha).norm();
        if denom > 0.0 {
            max_rel_diff = max_rel_diff.max((ca - cb).norm() / denom);
        }
    }
    for (alpha, cb) in b.iter() {
        if a.get(alpha) == Complex64::new(0.0, 0.0) && cb.norm() > 0.0 {
            bitwise_equal = false;
            max_rel_diff = f64::INFINITY;
        }
    }
    Ok(CommuteReport {
        max_rel_diff,
        bitwise_equal,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsometryReport {
    pub before: f64,
    pub after: f64,
    /// `|after − before| / before`, or `|after|` when `before = 0`.
    pub rel_dev: f64,
}

/// Compares the weighted `M^{p,p}` norm before and after `𝓕_r` on one grid.
pub fn verify_isometry(
    e: &HermiteExpansion,
    r: &[f64],
    w: &WeightSpec,
    p: f64,
    grid: &GridSpec,
) -> Result<IsometryReport> {
    check_r(e, r)?;
    if !w.is_radial() {
        return Err(Error::NonRadialWeight(format!("{w:?}")));
    }
    let rotated = fractional_ft(e, r)?;
    let before = modulation_norm(e, w, p, p, grid)?;
    let after = modulation_norm(&rotated, w, p, p, grid)?;
    let rel_dev = if before > 0.0 {
        (after - before).abs() / before
    } else {
        after.abs()
    };
    Ok(IsometryReport { before, after, rel_dev })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::FunctionSpec;
    use crate::{analyze, MultiIndex};

    fn one(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn h3_half_turn_flips_sign() {
        let e = HermiteExpansion::basis(MultiIndex::single(3));
        let f = fractional_ft(&e, &[2.0]).unwrap();
        assert_eq!(f.get(&MultiIndex::single(3)), one(-1.0, 0.0));
    }

    #[test]
    fn ground_state_is_fixed() {
        let e = HermiteExpansion::basis(MultiIndex::single(0));
        for r in [0.3, 1.0, 2.7, -5.1] {
            assert_eq!(fractional_ft(&e, &[r]).unwrap(), e);
        }
    }

    #[test]
    fn fourier_of_gaussian_is_itself() {
        let e = analyze(&FunctionSpec::standard_gaussian(1), 1, 20, None).unwrap();
        let f = fractional_ft(&e, &[1.0]).unwrap();
        for (a, c) in e.iter() {
            assert!((f.get(a) - c).norm() < 1e-15);
        }
        assert!((f.synthesize(&[0.7]) - e.synthesize(&[0.7])).norm() < 1e-12);
    }

    #[test]
    fn quarter_turns_are_exact() {
        let c = one(0.3, -1.7);
        assert_eq!(rotate(c, 1.0), one(-1.7, -0.3));
        assert_eq!(rotate(rotate(rotate(rotate(c, 1.0), 1.0), 1.0), 1.0), c);
        assert_eq!(rotate(c, 4.0), c);
        assert_eq!(rotate(c, -1.0), rotate(c, 3.0));
    }

    #[test]
    fn period_four_is_identity() {
        let e = HermiteExpansion::from_terms(
            2,
            6,
            MultiIndex::all_up_to(2, 6)
                .into_iter()
                .enumerate()
                .map(|(i, a)| (a, one(1.0 / (1.0 + i as f64), 0.5 - 0.1 * i as f64))),
        )
        .unwrap();
        assert_eq!(fractional_ft(&e, &[4.0, 4.0]).unwrap(), e);
        assert_eq!(fractional_ft(&e, &[0.0, 8.0]).unwrap(), e);
    }

    #[test]
    fn commutes_with_oscillator() {
        let e = HermiteExpansion::from_terms(
            1,
            8,
            (0..=8).map(|k| (MultiIndex::single(k), one(1.0 + k as f64, -0.5 * k as f64))),
        )
        .unwrap();
        let rep = verify_commutes_with_h(&e, &[1.0], 1).unwrap();
        assert!(rep.bitwise_equal);
        let rep = verify_commutes_with_h(&e, &[0.3], 3).unwrap();
        assert!(rep.max_rel_diff < 1e-15);
        let h5 = HermiteExpansion::basis(MultiIndex::single(5));
        assert!(verify_commutes_with_h(&h5, &[1.7], 2).unwrap().max_rel_diff < 1e-15);
    }

    #[test]
    fn isometry_on_h2_with_unit_weight() {
        let e = HermiteExpansion::basis(MultiIndex::single(2));
        let rep = verify_isometry(&e, &[1.0], &WeightSpec::Unit, 2.0, &GridSpec::symmetric(8.0, 81)).unwrap();
        assert!(rep.rel_dev < 1e-6, "{rep:?}");
    }

    #[test]
    fn isometry_of_zero() {
        let e = HermiteExpansion::new(1, 3);
        let rep = verify_isometry(&e, &[0.5], &WeightSpec::Unit, 2.0, &GridSpec::symmetric(4.0, 21)).unwrap();
        assert_eq!((rep.before, rep.after, rep.rel_dev), (0.0, 0.0, 0.0));
    }

    #[test]
    fn rejects_non_radial_weight() {
        let e = HermiteExpansion::basis(MultiIndex::single(1));
        let w = WeightSpec::FlatExp { radius: 1.0 };
        let err = verify_isometry(&e, &[0.5], &w, 2.0, &GridSpec::symmetric(4.0, 21)).unwrap_err();
        assert!(matches!(err, Error::NonRadialWeight(_)));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let e = HermiteExpansion::basis(MultiIndex::single(1));
        assert!(fractional_ft(&e, &[1.0, 1.0]).is_err());
    }
}
