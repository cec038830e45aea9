use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::RadialProfile;
use crate::error::{invalid, Error, Result};
use crate::special::{ln_factorial, pairwise_sum};
use crate::MultiIndex;

/// Scan range of `u = ln r` when locating the bulk of a moment integrand.
const SCAN_LIMIT: f64 = 60.0;
/// Log-range below the peak that is integrated (`e^{-50}` is far below double precision).
const BULK_DEPTH: f64 = 50.0;
/// Log-drop required at the ends of the scan for the integral to count as convergent.
const TAIL_DEPTH: f64 = 40.0;

/// Integral of `exp(g(u))` over `ℝ`, returned as its logarithm.
///
/// The peak is located on a coarse scan of `[−60, 60]`; the trapezoidal rule
/// is then applied on the bulk `{g > max − 50}` with doubling until the
/// relative change drops below `1e-12`.
fn ln_integral_1d<G: Fn(f64) -> f64>(g: G, what: &str) -> Result<f64> {
    let step = 0.25;
    let n = (2.0 * SCAN_LIMIT / step) as usize;
    let scan: Vec<(f64, f64)> = (0..=n)
        .map(|i| {
            let u = -SCAN_LIMIT + step * i as f64;
            (u, g(u))
        })
        .collect();
    let (u_peak, g_peak) = scan
        .iter()
        .copied()
        .filter(|(_, v)| !v.is_nan())
        .fold((0.0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
    if !g_peak.is_finite() {
        return Err(Error::DivergentMoment(format!("{what}: integrand is {g_peak} at u = {u_peak}")));
    }
    let (first, last) = (scan[0].1, scan[n].1);
    if first > g_peak - TAIL_DEPTH || last > g_peak - TAIL_DEPTH {
        return Err(Error::DivergentMoment(format!(
            "{what}: tail probe ln-integrand {first:.3} at r = e^-{SCAN_LIMIT}, {last:.3} at r = e^{SCAN_LIMIT}, peak {g_peak:.3}"
        )));
    }
    let lo = scan.iter().find(|(_, v)| *v > g_peak - BULK_DEPTH).map(|p| p.0).unwrap_or(-SCAN_LIMIT) - step;
    let hi = scan.iter().rev().find(|(_, v)| *v > g_peak - BULK_DEPTH).map(|p| p.0).unwrap_or(SCAN_LIMIT) + step;
    let trap = |m: usize| {
        let h = (hi - lo) / m as f64;
        let terms: Vec<f64> = (0..=m)
            .map(|i| {
                let w = if i == 0 || i == m { 0.5 * h } else { h };
                w * (g(lo + h * i as f64) - g_peak).exp()
            })
            .collect();
        pairwise_sum(&terms)
    };
    let mut m = 64;
    let mut prev = trap(m);
    loop {
        m *= 2;
        let cur = trap(m);
        if (cur - prev).abs() <= 1e-12 * cur.abs() || m >= 1 << 16 {
            return Ok(g_peak + cur.ln());
        }
        prev = cur;
    }
}

/// `ϑ(α) = (∫₀^∞ ω₀(r)² r^{|α|+d−1} dr / (|α|+d−1)!)^{1/2}` for a profile of `|z|²`.
///
/// The moment integral is taken in `u = ln r`; a profile whose moments
/// diverge is rejected with the tail-probe values.
pub fn theta_from_radial(omega0: &RadialProfile, alpha: &MultiIndex, dim: usize) -> Result<f64> {
    if alpha.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: alpha.dim(),
        });
    }
    let k = alpha.order() + dim as u64 - 1;
    let kf = k as f64;
    let ln_i = ln_integral_1d(|u| 2.0 * omega0.ln_eval(u.exp()) + (kf + 1.0) * u, &format!("moment of order {k}"))?;
    Ok((0.5 * (ln_i - ln_factorial(k))).exp())
}

/// `ϑ(α) = ((1/α!) ∫_{ℝ₊^d} ω₀(r)² r^α dr)^{1/2}`, with `ln_omega0` returning `ln ω₀(r)`.
///
/// Integrated on a tensor trapezoidal grid in `u_j = ln r_j` over the bulk
/// located by a unit-step scan of `[−60, 60]^d`.
pub fn theta_from_separable<F>(ln_omega0: F, alpha: &MultiIndex) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let d = alpha.dim();
    crate::hermite::check_dim(d)?;
    let a: Vec<f64> = alpha.entries().iter().map(|&v| v as f64 + 1.0).collect();
    let g = |u: &[f64]| {
        let r: Vec<f64> = u.iter().map(|v| v.exp()).collect();
        2.0 * ln_omega0(&r) + u.iter().zip(&a).map(|(ui, ai)| ui * ai).sum::<f64>()
    };
    let per = (2.0 * SCAN_LIMIT) as usize + 1;
    let total = per.pow(d as u32);
    let node = |i: usize| -SCAN_LIMIT + i as f64;
    let mut peak = f64::NEG_INFINITY;
    let mut vals = Vec::with_capacity(total);
    let mut u = vec![0.0; d];
    for flat in 0..total {
        let mut rem = flat;
        let mut edge = false;
        for j in (0..d).rev() {
            let i = rem % per;
            rem /= per;
            u[j] = node(i);
            edge |= i == 0 || i + 1 == per;
        }
        let v = g(&u);
        if v.is_nan() {
            continue;
        }
        peak = peak.max(v);
        vals.push((u.clone(), v, edge));
    }
    if !peak.is_finite() {
        return Err(Error::DivergentMoment(format!("separable moment: integrand peak is {peak}")));
    }
    if let Some((p, v, _)) = vals.iter().filter(|x| x.2).max_by(|x, y| x.1.total_cmp(&y.1)) {
        if *v > peak - TAIL_DEPTH {
            return Err(Error::DivergentMoment(format!(
                "separable moment: ln-integrand {v:.3} on the scan boundary at u = {p:?}, peak {peak:.3}"
            )));
        }
    }
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for (p, v, _) in &vals {
        if *v > peak - BULK_DEPTH {
            for j in 0..d {
                lo[j] = lo[j].min(p[j] - 1.0);
                hi[j] = hi[j].max(p[j] + 1.0);
            }
        }
    }
    let trap = |m: usize| {
        let per = m + 1;
        let total = per.pow(d as u32);
        let mut terms = Vec::with_capacity(total);
        let mut u = vec![0.0; d];
        for flat in 0..total {
            let mut rem = flat;
            let mut w = 1.0;
            for j in (0..d).rev() {
                let i = rem % per;
                rem /= per;
                let h = (hi[j] - lo[j]) / m as f64;
                u[j] = lo[j] + h * i as f64;
                w *= if i == 0 || i == m { 0.5 * h } else { h };
            }
            terms.push(w * (g(&u) - peak).exp());
        }
        pairwise_sum(&terms)
    };
    let cap = match d {
        1 => 1 << 14,
        2 => 1 << 10,
        _ => 1 << 7,
    };
    let mut m = 32;
    let mut prev = trap(m);
    loop {
        m *= 2;
        let cur = trap(m);
        if (cur - prev).abs() <= 1e-12 * cur.abs() || m >= cap {
            return Ok((0.5 * (peak + cur.ln() - alpha.ln_factorial())).exp());
        }
        prev = cur;
    }
}

/// `ϑ(α) = (2h)^{−(|α|+d)/2}`, the sequence weight of `ω₀(r) = e^{−hr}`.
pub fn theta_closed_exponential(h: f64, alpha: &MultiIndex, dim: usize) -> f64 {
    let k = alpha.order() as f64 + dim as f64;
    (-0.5 * k * (2.0 * h).ln()).exp()
}

/// `ϑ(α) = (2(2R)^{−2(|α|+d)} (2|α|+2d−1)!/(|α|+d−1)!)^{1/2}`, the sequence
/// weight of `ω₀(r) = e^{−R√r}`.
pub fn theta_closed_linear_exponential(radius: f64, alpha: &MultiIndex, dim: usize) -> f64 {
    let k = alpha.order() + dim as u64;
    let ln2 = 2f64.ln() - 2.0 * k as f64 * (2.0 * radius).ln() + ln_factorial(2 * k - 1) - ln_factorial(k - 1);
    (0.5 * ln2).exp()
}

/// Outcome of the numerical check `R^{|α|}/√α! ≲ ϑ(α)` up to a cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundCheck {
    pub radius: f64,
    /// `max (R^{|α|}/√α!)/ϑ(α)` over all `|α| ≤ cutoff`.
    pub max_ratio: f64,
    /// Multi-index attaining the maximum.
    pub argmax: MultiIndex,
    /// Whether the ratio over the top quarter of the degrees stays below its
    /// maximum over the lower three quarters, i.e. has stopped growing.
    pub bounded: bool,
}

#[derive(Clone)]
enum Rule {
    Closure(Arc<dyn Fn(&MultiIndex) -> f64 + Send + Sync>),
    Table(BTreeMap<MultiIndex, f64>),
}

/// A positive weight `ϑ` on multi-indices.
#[derive(Clone)]
pub struct SequenceWeight {
    rule: Rule,
}

impl fmt::Debug for SequenceWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            Rule::Closure(_) => f.write_str("SequenceWeight(closure)"),
            Rule::Table(t) => write!(f, "SequenceWeight(table of {})", t.len()),
        }
    }
}

impl SequenceWeight {
    pub fn from_fn<F: Fn(&MultiIndex) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        Self {
            rule: Rule::Closure(Arc::new(f)),
        }
    }

    /// Tabulated values; every entry must be positive and finite.
    pub fn tabulated(table: BTreeMap<MultiIndex, f64>) -> Result<Self> {
        if let Some((a, v)) = table.iter().find(|(_, v)| !(**v > 0.0) || !v.is_finite()) {
            return Err(invalid("theta", format!("value {v} at {a} is not positive and finite")));
        }
        Ok(Self { rule: Rule::Table(table) })
    }

    /// `ϑ ≡ 1`.
    pub fn unit() -> Self {
        Self::from_fn(|_| 1.0)
    }

    /// `ϑ(α) = e^{r|α|}`.
    pub fn exponential(r: f64) -> Self {
        Self::from_fn(move |a| (r * a.order() as f64).exp())
    }

    /// [`theta_closed_exponential`] as a sequence weight.
    pub fn closed_exponential(h: f64, dim: usize) -> Self {
        Self::from_fn(move |a| theta_closed_exponential(h, a, dim))
    }

    /// [`theta_from_radial`] tabulated for `|α| ≤ cutoff` (one moment per degree).
    pub fn from_radial(omega0: &RadialProfile, dim: usize, cutoff: u32) -> Result<Self> {
        let mut by_degree = Vec::with_capacity(cutoff as usize + 1);
        for k in 0..=cutoff {
            let mut alpha = vec![0u32; dim];
            alpha[0] = k;
            by_degree.push(theta_from_radial(omega0, &MultiIndex::new(alpha), dim)?);
        }
        let table = MultiIndex::all_up_to(dim, cutoff)
            .into_iter()
            .map(|a| {
                let v = by_degree[a.order() as usize];
                (a, v)
            })
            .collect();
        Self::tabulated(table)
    }

    /// `ϑ(α)`. Tabulated weights return `NaN` outside their table.
    pub fn eval(&self, alpha: &MultiIndex) -> f64 {
        match &self.rule {
            Rule::Closure(f) => f(alpha),
            Rule::Table(t) => t.get(alpha).copied().unwrap_or(f64::NAN),
        }
    }

    /// Checks `R^{|α|}/√α! ≲ ϑ(α)` for `R ∈ {1, 2, 4}` over `|α| ≤ cutoff`.
    pub fn check_lower_bound(&self, dim: usize, cutoff: u32) -> Vec<LowerBoundCheck> {
        let all = MultiIndex::all_up_to(dim, cutoff);
        [1.0, 2.0, 4.0]
            .iter()
            .map(|&radius: &f64| {
                let mut best = (f64::NEG_INFINITY, MultiIndex::zero(dim));
                let (mut lower, mut upper) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
                for a in &all {
                    let ln_ratio =
                        a.order() as f64 * radius.ln() - 0.5 * a.ln_factorial() - self.eval(a).ln();
                    if ln_ratio > best.0 {
                        best = (ln_ratio, a.clone());
                    }
                    if 4 * a.order() <= 3 * cutoff as u64 {
                        lower = lower.max(ln_ratio);
                    } else {
                        upper = upper.max(ln_ratio);
                    }
                }
                LowerBoundCheck {
                    radius,
                    max_ratio: best.0.exp(),
                    argmax: best.1,
                    bounded: upper <= lower + 1e-12,
                }
            })
            .collect()
    }
}
