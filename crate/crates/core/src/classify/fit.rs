use serde::Serialize;

use super::profile::CoefficientProfile;
use crate::error::{Error, Result};
use crate::HermiteExpansion;

/// Minimum number of nonzero coefficients a least-squares fit accepts.
pub const MIN_FIT_POINTS: usize = 8;

/// Exponents `s` tried by default, `|c_α| ≈ C e^{−r|α|^{1/(2s)}}`.
pub const DEFAULT_S_GRID: [f64; 4] = [0.25, 0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum DecayModel {
    /// `|c_α| ≈ C e^{−r|α|^{1/(2s)}}`; `r < 0` describes growth.
    StretchedExp { s: f64, r: f64, log_c: f64 },
    /// `|c_α| ≈ C R^{|α|}/√(α!)`.
    Factorial { radius: f64, log_c: f64 },
    /// No significant coefficient beyond `degree`, strictly below the cutoff.
    Finite { degree: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecayFit {
    #[serde(flatten)]
    pub model: DecayModel,
    /// Root mean square of the residuals of `ln|c_α|`.
    pub residual: f64,
    /// Degrees `|α|` that entered the fit.
    pub tail_window: (u32, u32),
}

/// Least-squares fits of `ln|c_α|` against each decay family, best first.
///
/// Only coefficients above the noise floor of the profile enter, restricted
/// to the tail `|α| ∈ [K/4, K]` with `K` the last significant degree.
pub fn fit_decay(e: &HermiteExpansion, s_grid: &[f64]) -> Result<Vec<DecayFit>> {
    fit_profile(&CoefficientProfile::new(e, super::DEFAULT_NOISE_FLOOR), s_grid)
}

pub(crate) fn fit_profile(p: &CoefficientProfile, s_grid: &[f64]) -> Result<Vec<DecayFit>> {
    if let Some(degree) = p.finite_degree() {
        return Ok(vec![DecayFit {
            model: DecayModel::Finite { degree },
            residual: 0.0,
            tail_window: (0, degree),
        }]);
    }
    for &s in s_grid {
        if !(s > 0.0 && s.is_finite()) {
            return Err(crate::error::invalid("s_grid", format!("exponent {s} is not positive")));
        }
    }
    let top = p.last_significant().unwrap_or(0);
    let window = (top / 4, top);
    // (|α|, ln|c_α|, ln α!)
    let pts: Vec<(f64, f64, f64)> = p
        .significant()
        .filter(|(a, _)| a.order() >= window.0 as u64)
        .map(|(a, ln_c)| (a.order() as f64, ln_c, a.ln_factorial()))
        .collect();
    if pts.len() < MIN_FIT_POINTS {
        return Err(Error::FitFailed(format!(
            "{} significant coefficients in the tail window {:?}, need {MIN_FIT_POINTS}",
            pts.len(),
            window
        )));
    }

    let mut fits = Vec::with_capacity(s_grid.len() + 1);
    for &s in s_grid {
        let line = least_squares(pts.iter().map(|&(k, y, _)| (k.powf(0.5 / s), y)))
            .ok_or_else(|| Error::FitFailed(format!("degenerate tail for s = {s}")))?;
        fits.push(DecayFit {
            model: DecayModel::StretchedExp {
                s,
                r: -line.slope,
                log_c: line.intercept,
            },
            residual: line.rms,
            tail_window: window,
        });
    }
    let line = least_squares(pts.iter().map(|&(k, y, lf)| (k, y + 0.5 * lf)))
        .ok_or_else(|| Error::FitFailed("degenerate tail for the factorial family".into()))?;
    fits.push(DecayFit {
        model: DecayModel::Factorial {
            radius: line.slope.exp(),
            log_c: line.intercept,
        },
        residual: line.rms,
        tail_window: window,
    });
    fits.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    Ok(fits)
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Line {
    pub slope: f64,
    pub intercept: f64,
    pub rms: f64,
}

/// Ordinary least squares `y ≈ intercept + slope·x`, centred for stability.
/// `None` when fewer than two distinct abscissae are given.
pub(crate) fn least_squares<I: IntoIterator<Item = (f64, f64)>>(pts: I) -> Option<Line> {
    let pts: Vec<(f64, f64)> = pts.into_iter().collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if !(sxx > 1e-300) {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rms = (pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum::<f64>() / n).sqrt();
    Some(Line { slope, intercept, rms })
}
