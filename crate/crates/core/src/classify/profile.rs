use crate::{HermiteExpansion, MultiIndex};

/// A significant coefficient must exceed its noise floor by this factor to
/// count as the end of a finite expansion rather than the fade of a tail.
const CLIFF: f64 = 1e3;

/// Coefficient magnitudes reduced to what the classifier looks at.
///
/// The noise floor at degree `k` is `noise · max_{j ≤ k} m_j`, with `m_j` the
/// largest `|c_α|` of degree `j`. Anchoring it to the running maximum keeps
/// early degrees of growing (distribution-side) sequences significant while
/// still discarding quadrature noise at the end of a decaying tail.
#[derive(Debug, Clone)]
pub(crate) struct CoefficientProfile {
    /// `(α, ln|c_α|)` above the floor, in graded order.
    significant: Vec<(MultiIndex, f64)>,
    /// `ln m_k`, `-inf` when no coefficient of degree `k` is significant.
    ln_envelope: Vec<f64>,
    finite: Option<u32>,
}

impl CoefficientProfile {
    pub fn new(e: &HermiteExpansion, noise: f64) -> Self {
        let cutoff = e.cutoff();
        let prof = e.degree_profile();
        let mut floor = Vec::with_capacity(prof.len());
        let mut run = 0.0f64;
        for &m in &prof {
            run = run.max(m);
            floor.push(noise * run);
        }
        let significant: Vec<(MultiIndex, f64)> = e
            .iter()
            .filter(|(a, c)| {
                let n = c.norm();
                n > 0.0 && n > floor[a.order() as usize]
            })
            .map(|(a, c)| (a.clone(), c.norm().ln()))
            .collect();
        let mut ln_envelope = vec![f64::NEG_INFINITY; prof.len()];
        for (a, l) in &significant {
            let k = a.order() as usize;
            ln_envelope[k] = ln_envelope[k].max(*l);
        }
        let last = ln_envelope.iter().rposition(|v| v.is_finite());
        let finite = match last {
            None => Some(0),
            Some(k) if (k as u32) < cutoff && ln_envelope[k] > (CLIFF * floor[k]).ln() => Some(k as u32),
            _ => None,
        };
        Self {
            significant,
            ln_envelope,
            finite,
        }
    }

    /// Last degree of a finite expansion, `Some(0)` for the zero function.
    pub fn finite_degree(&self) -> Option<u32> {
        self.finite
    }

    pub fn last_significant(&self) -> Option<u32> {
        self.ln_envelope.iter().rposition(|v| v.is_finite()).map(|k| k as u32)
    }

    pub fn significant(&self) -> impl Iterator<Item = (&MultiIndex, f64)> {
        self.significant.iter().map(|(a, l)| (a, *l))
    }

    /// Per-degree extreme of `g(α, ln|c_α|)`: the maximum if `upper`, else the
    /// minimum. `None` where no coefficient of that degree is significant.
    pub fn degree_extreme<G: Fn(&MultiIndex, f64) -> f64>(&self, upper: bool, g: G) -> Vec<Option<f64>> {
        let mut out: Vec<Option<f64>> = vec![None; self.ln_envelope.len()];
        for (a, l) in &self.significant {
            let v = g(a, *l);
            let slot = &mut out[a.order() as usize];
            *slot = Some(match *slot {
                None => v,
                Some(w) if upper => w.max(v),
                Some(w) => w.min(v),
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::CoefficientRule;
    use num_complex::Complex64;

    #[test]
    fn noise_below_floor_is_dropped() {
        let mut e = HermiteExpansion::new(1, 20);
        e.set(MultiIndex::single(0), Complex64::new(1.0, 0.0)).unwrap();
        for k in 1..=20 {
            e.set(MultiIndex::single(k), Complex64::new(1e-17, 0.0)).unwrap();
        }
        let p = CoefficientProfile::new(&e, 1e-13);
        assert_eq!(p.finite_degree(), Some(0));
        assert_eq!(p.significant().count(), 1);
    }

    #[test]
    fn growth_keeps_low_degrees() {
        let e = CoefficientRule::StretchedGrowth { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40);
        let p = CoefficientProfile::new(&e, 1e-13);
        assert_eq!(p.significant().count(), 41);
        assert_eq!(p.finite_degree(), None);
    }

    #[test]
    fn fading_tail_is_not_a_cliff() {
        let e = CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40);
        let p = CoefficientProfile::new(&e, 1e-13);
        assert_eq!(p.last_significant(), Some(29));
        assert_eq!(p.finite_degree(), None);
    }
}
