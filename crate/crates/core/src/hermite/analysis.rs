use num_complex::Complex64;

use super::function::{check_dim, FunctionSpec};
use super::{hermite_table, HermiteExpansion};
use crate::error::{invalid, Error, Result};
use crate::quadrature::GaussHermite;
use crate::MultiIndex;

/// Minimal excess of the quadrature order over the cutoff.
pub const QUAD_SAFETY_MARGIN: usize = 10;

/// Boundary magnitude (relative to the peak) above which sampled data are
/// reported as not covering the support.
const SAMPLED_EDGE_TOLERANCE: f64 = 1e-8;

/// `2·cutoff + 20`.
pub fn default_quad_order(cutoff: u32) -> usize {
    2 * cutoff as usize + 20
}

/// Tensor quadrature rule over `ℝ^d` for the Lebesgue measure.
pub(crate) struct TensorRule {
    nodes: Vec<Vec<f64>>,
    weights: Vec<Vec<f64>>,
}

impl TensorRule {
    pub(crate) fn gauss_hermite(dim: usize, order: usize) -> Self {
        let gh = GaussHermite::new(order);
        Self {
            nodes: vec![gh.nodes().to_vec(); dim],
            weights: vec![gh.modified_weights().to_vec(); dim],
        }
    }

    fn shape(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.len()).collect()
    }

    fn len(&self) -> usize {
        self.shape().iter().product()
    }

    /// Visits every node in row-major order with its product weight.
    pub(crate) fn for_each<F: FnMut(usize, &[f64], f64)>(&self, mut f: F) {
        let shape = self.shape();
        let d = shape.len();
        let mut point = vec![0.0; d];
        for flat in 0..self.len() {
            let mut rem = flat;
            let mut w = 1.0;
            for ax in (0..d).rev() {
                let i = rem % shape[ax];
                rem /= shape[ax];
                point[ax] = self.nodes[ax][i];
                w *= self.weights[ax][i];
            }
            f(flat, &point, w);
        }
    }
}

/// Quadrature rule appropriate for integrating `f` against a smooth kernel,
/// together with the samples of `f` at its nodes.
pub(crate) fn rule_for(f: &FunctionSpec, quad_order: usize, rule_cutoff: u32) -> Result<(TensorRule, Vec<Complex64>, Vec<String>)> {
    f.validate()?;
    let mut warnings = Vec::new();
    let rule = match f {
        FunctionSpec::Sampled(s) => {
            let frac = s.boundary_fraction();
            if frac > SAMPLED_EDGE_TOLERANCE {
                warnings.push(format!(
                    "sampled grid does not cover the effective support: boundary magnitude is {frac:.3e} of the peak"
                ));
            }
            TensorRule {
                nodes: s.axes().iter().map(|a| a.nodes()).collect(),
                weights: s.axes().iter().map(|a| a.trapezoid_weights()).collect(),
            }
        }
        _ => TensorRule::gauss_hermite(f.dim(), quad_order),
    };
    let mut values = vec![Complex64::new(0.0, 0.0); rule.len()];
    match f {
        FunctionSpec::Sampled(s) => values.copy_from_slice(s.values()),
        FunctionSpec::Gaussian(g) => rule.for_each(|flat, y, _| values[flat] = g.eval(y)),
        FunctionSpec::HermiteCombo { .. } | FunctionSpec::CoefficientRule { .. } => {
            rule.for_each(|flat, y, _| values[flat] = f.eval(y, rule_cutoff))
        }
    }
    Ok((rule, values, warnings))
}

/// `∫ f(y) k(y) dy` by the rule [`rule_for`] picks for `f`.
pub(crate) fn integrate_against<K>(f: &FunctionSpec, quad_order: usize, rule_cutoff: u32, kernel: K) -> Result<Complex64>
where
    K: Fn(&[f64]) -> Complex64,
{
    let (rule, values, _) = rule_for(f, quad_order, rule_cutoff)?;
    let mut terms = vec![Complex64::new(0.0, 0.0); values.len()];
    rule.for_each(|flat, y, w| {
        let v = values[flat];
        if v != Complex64::new(0.0, 0.0) {
            terms[flat] = v * kernel(y) * w;
        }
    });
    Ok(crate::special::pairwise_sum(&terms))
}

/// Hermite coefficients `c_α(f) = (f, h_α)_{L²}` for all `|α| ≤ cutoff`.
///
/// Gaussians are integrated with a tensorized Gauss–Hermite rule of
/// `quad_order` nodes per axis (`None` selects [`default_quad_order`]);
/// sampled data with the trapezoidal rule on their own grid. Finite
/// combinations and coefficient rules are transcribed exactly.
pub fn analyze(f: &FunctionSpec, dim: usize, cutoff: u32, quad_order: Option<usize>) -> Result<HermiteExpansion> {
    check_dim(dim)?;
    if f.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: f.dim(),
        });
    }
    f.validate()?;
    let quad_order = quad_order.unwrap_or_else(|| default_quad_order(cutoff));
    match f {
        FunctionSpec::HermiteCombo { terms, .. } => {
            return HermiteExpansion::from_terms(
                dim,
                cutoff,
                terms.iter().filter(|(a, _)| a.order() <= cutoff as u64).cloned(),
            );
        }
        FunctionSpec::CoefficientRule { rule, .. } => return Ok(rule.expansion(dim, cutoff)),
        FunctionSpec::Gaussian(_) => {
            if quad_order < cutoff as usize + QUAD_SAFETY_MARGIN {
                return Err(invalid(
                    "quad_order",
                    format!("{quad_order} is below cutoff + {QUAD_SAFETY_MARGIN}"),
                ));
            }
        }
        FunctionSpec::Sampled(_) => {}
    }

    let (rule, values, warnings) = rule_for(f, quad_order, cutoff)?;
    let shape = rule.shape();
    let mut data = vec![Complex64::new(0.0, 0.0); values.len()];
    rule.for_each(|flat, _, w| data[flat] = values[flat] * w);

    let k = cutoff as usize + 1;
    let mut cur_shape = shape.clone();
    for axis in (0..dim).rev() {
        let tables: Vec<Vec<f64>> = rule.nodes[axis].iter().map(|&y| hermite_table(cutoff as usize, y)).collect();
        data = contract_axis(&data, &cur_shape, axis, &tables, k);
        cur_shape[axis] = k;
    }

    let mut e = HermiteExpansion::new(dim, cutoff);
    e.warnings = warnings;
    for alpha in MultiIndex::all_up_to(dim, cutoff) {
        let mut flat = 0usize;
        for &a in alpha.entries() {
            flat = flat * k + a as usize;
        }
        e.set(alpha, data[flat])?;
    }
    Ok(e)
}

/// `out[.., m, ..] = Σ_i tables[i][m] · data[.., i, ..]` along `axis`.
fn contract_axis(data: &[Complex64], shape: &[usize], axis: usize, tables: &[Vec<f64>], k: usize) -> Vec<Complex64> {
    let outer: usize = shape[..axis].iter().product();
    let inner: usize = shape[axis + 1..].iter().product();
    let n = shape[axis];
    let mut out = vec![Complex64::new(0.0, 0.0); outer * k * inner];
    for o in 0..outer {
        for (i, t) in tables.iter().enumerate().take(n) {
            let src = &data[(o * n + i) * inner..(o * n + i + 1) * inner];
            for (m, &h) in t.iter().enumerate().take(k) {
                if h == 0.0 {
                    continue;
                }
                let dst = &mut out[(o * k + m) * inner..(o * k + m + 1) * inner];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += s * h;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{CoefficientRule, GaussianSpec, SampledFunction};
    use crate::quadrature::UniformAxis;
    use std::f64::consts::PI;

    fn c(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn combination_is_exact() {
        let f = FunctionSpec::hermite(MultiIndex::single(2));
        let e = analyze(&f, 1, 8, None).unwrap();
        assert_eq!(e.get(&MultiIndex::single(2)), c(1.0));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn standard_gaussian_is_ground_state() {
        let e = analyze(&FunctionSpec::standard_gaussian(1), 1, 8, None).unwrap();
        assert!((e.get(&MultiIndex::single(0)) - c(1.0)).norm() < 1e-10);
        for (a, v) in e.iter() {
            if a.order() > 0 {
                assert!(v.norm() <= 1e-10);
            }
        }
    }

    // c_{2j} = K (μ/2)^j √((2j)!)/j!, μ = (1−λ)/(1+λ), K = π^{-1/4} √(2π/(1+λ)),
    // from the Gaussian integral defining the Bargmann transform of e^{−λy²/2}.
    #[test]
    fn dilated_gaussian_matches_closed_form() {
        let f = FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 2.0, c(1.0)).unwrap());
        let e = analyze(&f, 1, 12, None).unwrap();
        let lambda: f64 = 2.0;
        let mu = (1.0 - lambda) / (1.0 + lambda);
        let k0 = PI.powf(-0.25) * (2.0 * PI / (1.0 + lambda)).sqrt();
        for j in 0..=6u32 {
            let lnf = crate::special::ln_factorial(2 * j as u64) * 0.5 - crate::special::ln_factorial(j as u64);
            let want = k0 * (mu / 2.0).powi(j as i32) * lnf.exp();
            let got = e.get(&MultiIndex::single(2 * j));
            assert!((got - c(want)).norm() < 1e-12, "j={j}: {got} vs {want}");
            assert!(e.get(&MultiIndex::single(2 * j + 1)).norm() < 1e-13);
        }
    }

    // c_0 by brute-force trapezoid quadrature at a much denser grid.
    #[test]
    fn dilated_gaussian_c0_against_dense_grid() {
        let f = FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 2.0, c(1.0)).unwrap());
        let e = analyze(&f, 1, 12, None).unwrap();
        let ax = UniformAxis::new(-12.0, 12.0, 4801);
        let brute: f64 = ax
            .nodes()
            .iter()
            .zip(ax.trapezoid_weights())
            .map(|(&y, w)| w * (-y * y).exp() * crate::hermite::hermite_function(0, y))
            .sum();
        assert!((e.get(&MultiIndex::single(0)).re - brute).abs() < 1e-12);
    }

    #[test]
    fn sampled_route_matches_symbolic_route() {
        let g = FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 1.5, c(1.0)).unwrap());
        let s = SampledFunction::from_fn(vec![UniformAxis::new(-10.0, 10.0, 801)], |y| g.eval(y, 0)).unwrap();
        let a = analyze(&g, 1, 10, None).unwrap();
        let b = analyze(&FunctionSpec::Sampled(s), 1, 10, None).unwrap();
        assert!(b.warnings.is_empty());
        for alpha in MultiIndex::all_up_to(1, 10) {
            assert!((a.get(&alpha) - b.get(&alpha)).norm() < 1e-6);
        }
    }

    #[test]
    fn narrow_sampled_grid_warns() {
        let s = SampledFunction::from_fn(vec![UniformAxis::new(-1.0, 1.0, 41)], |y| c((-y[0] * y[0] / 2.0).exp())).unwrap();
        let e = analyze(&FunctionSpec::Sampled(s), 1, 4, None).unwrap();
        assert_eq!(e.warnings.len(), 1);
    }

    #[test]
    fn rejects_low_quadrature_order() {
        let f = FunctionSpec::standard_gaussian(1);
        assert!(analyze(&f, 1, 20, Some(25)).is_err());
        assert!(analyze(&f, 2, 4, None).is_err());
    }

    #[test]
    fn rule_is_transcribed() {
        let f = FunctionSpec::CoefficientRule {
            dim: 1,
            rule: CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 },
        };
        let e = analyze(&f, 1, 30, None).unwrap();
        assert_eq!(e.len(), 31);
    }

    #[test]
    fn three_dimensional_round_trip() {
        let e = HermiteExpansion::from_terms(
            3,
            6,
            [
                (MultiIndex::from([1, 0, 2]), Complex64::new(0.5, 0.5)),
                (MultiIndex::from([0, 0, 0]), c(1.0)),
                (MultiIndex::from([2, 2, 2]), c(-0.25)),
            ],
        )
        .unwrap();
        let axes = vec![UniformAxis::new(-9.0, 9.0, 61); 3];
        let s = SampledFunction::from_fn(axes, |y| e.synthesize(y)).unwrap();
        let back = analyze(&FunctionSpec::Sampled(s), 3, 6, None).unwrap();
        for alpha in MultiIndex::all_up_to(3, 6) {
            assert!((back.get(&alpha) - e.get(&alpha)).norm() < 1e-9, "{alpha}");
        }
    }
}
