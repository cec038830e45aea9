use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WeightSpec;
use crate::error::{invalid, Result};

/// Candidate constants `c` for the Gaussian sandwich, in increasing order.
pub const SANDWICH_LADDER: [f64; 5] = [0.125, 0.25, 0.5, 1.0, 2.0];

/// Growth allowed for the fitted constant from half the box to the full box.
const GROWTH_FACTOR: f64 = 1.5;

/// Sampled verdict on a weight inequality. These are statistical evidence,
/// not proofs: the inequality "holds" when the fitted constant stops growing
/// as the sampled box is enlarged.
#[derive(Debug, Clone, PartialEq)]
pub struct PredicateReport {
    pub holds: bool,
    /// Smallest constant consistent with every sample on the full box.
    pub fitted_c: f64,
    pub ln_c: f64,
    /// Sample attaining the fitted constant, as concatenated real coordinates.
    pub witness: Vec<f64>,
    /// `(box, ln C)` for each nested box.
    pub levels: Vec<(f64, f64)>,
    /// For the Gaussian sandwich: the smallest `c` of [`SANDWICH_LADDER`] that holds.
    pub minimal_c: Option<f64>,
}

fn verdict(levels: &[(f64, f64)]) -> bool {
    let n = levels.len();
    let (full, half) = (levels[n - 1].1, levels[n - 2].1);
    full.is_finite() && full <= half + GROWTH_FACTOR.ln()
}

fn uniform(rng: &mut ChaCha8Rng, n: usize, b: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-b..=b)).collect()
}

/// Samples `ω(x + y)/(ω(x) v(y))` for `x, y ∈ [−b, b]^{2d}` on the nested
/// boxes `b = box/8, box/4, box/2, box` (`samples` pairs each) and reports
/// the running maximum. Holds iff the maximum on the full box is finite and
/// at most 1.5 times the maximum on the half box.
pub fn check_moderate(
    w: &WeightSpec,
    v: &WeightSpec,
    dim: usize,
    box_size: f64,
    samples: usize,
    seed: u64,
) -> Result<PredicateReport> {
    w.validate()?;
    v.validate()?;
    if !(box_size > 0.0) || samples == 0 {
        return Err(invalid("box", "need a positive box and at least one sample"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ln_w = |p: &[f64], spec: &WeightSpec| spec.ln_eval_parts(&p[..dim], &p[dim..]);
    let mut best = (f64::NEG_INFINITY, Vec::new());
    let mut levels = Vec::new();
    for b in [box_size / 8.0, box_size / 4.0, box_size / 2.0, box_size] {
        for _ in 0..samples {
            let x = uniform(&mut rng, 2 * dim, b);
            let y = uniform(&mut rng, 2 * dim, b);
            let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let r = ln_w(&sum, w) - ln_w(&x, w) - ln_w(&y, v);
            if r > best.0 || r.is_nan() {
                best = (if r.is_nan() { f64::INFINITY } else { r }, [x, y].concat());
            }
        }
        levels.push((b, best.0));
    }
    Ok(PredicateReport {
        holds: verdict(&levels),
        fitted_c: best.0.exp(),
        ln_c: best.0,
        witness: best.1,
        levels,
        minimal_c: None,
    })
}

/// `max |ln ω(z)| − c|z|²` over a uniform grid of `[−b, b]^{2d}`.
fn sandwich_ln_c(w: &WeightSpec, dim: usize, c: f64, b: f64) -> (f64, Vec<f64>) {
    let per: usize = match dim {
        1 => 81,
        2 => 17,
        _ => 7,
    };
    let n = 2 * dim;
    let mut best = (f64::NEG_INFINITY, Vec::new());
    let mut p = vec![0.0; n];
    for flat in 0..per.pow(n as u32) {
        let mut rem = flat;
        for k in (0..n).rev() {
            p[k] = -b + 2.0 * b * (rem % per) as f64 / (per - 1) as f64;
            rem /= per;
        }
        let sq: f64 = p.iter().map(|v| v * v).sum();
        let val = w.ln_eval_parts(&p[..dim], &p[dim..]).abs() - c * sq;
        if val > best.0 {
            best = (val, p.clone());
        }
    }
    best
}

/// Checks `C^{-1} e^{−c|z|²} ≤ ω(z) ≤ C e^{c|z|²}` on grids of the half and
/// the full box, and scans [`SANDWICH_LADDER`] for the smallest workable `c`.
pub fn check_gauss_sandwich(w: &WeightSpec, dim: usize, c: f64, box_size: f64) -> Result<PredicateReport> {
    w.validate()?;
    if !(c > 0.0) || !(box_size > 0.0) {
        return Err(invalid("c", "need c > 0 and a positive box"));
    }
    let run = |c: f64| {
        let half = sandwich_ln_c(w, dim, c, box_size / 2.0);
        let full = sandwich_ln_c(w, dim, c, box_size);
        let levels = vec![(box_size / 2.0, half.0), (box_size, full.0)];
        (verdict(&levels), full, levels)
    };
    let (holds, full, levels) = run(c);
    let minimal_c = SANDWICH_LADDER.iter().copied().find(|&cc| run(cc).0);
    Ok(PredicateReport {
        holds,
        fitted_c: full.0.exp(),
        ln_c: full.0,
        witness: full.1,
        levels,
        minimal_c,
    })
}
