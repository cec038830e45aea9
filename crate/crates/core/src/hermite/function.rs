use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::quadrature::UniformAxis;
use crate::MultiIndex;

/// Symbolic description of a function on `ℝ^d`.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `C · exp(−⟨Ay, y⟩/2 + L(y))`.
    Gaussian(GaussianSpec),
    /// Finite combination `Σ c_α h_α`.
    HermiteCombo {
        dim: usize,
        terms: Vec<(MultiIndex, Complex64)>,
    },
    /// Coefficients given by a closed-form rule, evaluated up to the cutoff.
    CoefficientRule { dim: usize, rule: CoefficientRule },
    /// Values on a uniform grid.
    Sampled(SampledFunction),
}

impl FunctionSpec {
    pub fn dim(&self) -> usize {
        match self {
            FunctionSpec::Gaussian(g) => g.dim(),
            FunctionSpec::HermiteCombo { dim, .. } | FunctionSpec::CoefficientRule { dim, .. } => *dim,
            FunctionSpec::Sampled(s) => s.dim(),
        }
    }

    /// The standard window `φ(y) = π^{-d/4} e^{-|y|²/2}`.
    pub fn standard_gaussian(dim: usize) -> Self {
        FunctionSpec::Gaussian(
            GaussianSpec::isotropic(dim, 1.0, Complex64::new(std::f64::consts::PI.powf(-0.25 * dim as f64), 0.0))
                .expect("identity matrix is positive definite"),
        )
    }

    /// `h_α` as a one-term combination.
    pub fn hermite(alpha: MultiIndex) -> Self {
        FunctionSpec::HermiteCombo {
            dim: alpha.dim(),
            terms: vec![(alpha, Complex64::new(1.0, 0.0))],
        }
    }

    /// Point evaluation. Coefficient rules are summed up to `rule_cutoff`;
    /// sampled data are interpolated multilinearly (zero outside the grid).
    pub fn eval(&self, y: &[f64], rule_cutoff: u32) -> Complex64 {
        match self {
            FunctionSpec::Gaussian(g) => g.eval(y),
            FunctionSpec::HermiteCombo { dim, terms } => {
                let max = terms.iter().map(|(a, _)| a.order()).max().unwrap_or(0) as u32;
                let e = super::HermiteExpansion::from_terms(*dim, max, terms.iter().cloned())
                    .expect("terms were validated on construction");
                e.synthesize(y)
            }
            FunctionSpec::CoefficientRule { dim, rule } => rule.expansion(*dim, rule_cutoff).synthesize(y),
            FunctionSpec::Sampled(s) => s.interpolate(y),
        }
    }

    /// Checks structural invariants (dimensions, positive definiteness).
    pub fn validate(&self) -> Result<()> {
        match self {
            FunctionSpec::Gaussian(g) => g.validate(),
            FunctionSpec::HermiteCombo { dim, terms } => {
                check_dim(*dim)?;
                for (a, _) in terms {
                    if a.dim() != *dim {
                        return Err(Error::DimensionMismatch {
                            expected: *dim,
                            found: a.dim(),
                        });
                    }
                }
                Ok(())
            }
            FunctionSpec::CoefficientRule { dim, rule } => {
                check_dim(*dim)?;
                rule.validate()
            }
            FunctionSpec::Sampled(s) => s.validate(),
        }
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=3).contains(&dim) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

/// Gaussian `φ_{A,L}(y) = C e^{−⟨Ay,y⟩/2 + L(y)}` with complex symmetric `A`,
/// `Re A` positive definite, and `L(y) = Σ l_j y_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianSpec {
    a: DMatrix<Complex64>,
    l: Vec<Complex64>,
    c: Complex64,
}

impl GaussianSpec {
    pub fn new(a: DMatrix<Complex64>, l: Vec<Complex64>, c: Complex64) -> Result<Self> {
        let g = Self { a, l, c };
        g.validate()?;
        Ok(g)
    }

    /// `A = λ I`, `L = 0`.
    pub fn isotropic(dim: usize, lambda: f64, c: Complex64) -> Result<Self> {
        let a = DMatrix::from_diagonal_element(dim, dim, Complex64::new(lambda, 0.0));
        Self::new(a, vec![Complex64::new(0.0, 0.0); dim], c)
    }

    pub fn dim(&self) -> usize {
        self.l.len()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.a
    }

    pub fn linear(&self) -> &[Complex64] {
        &self.l
    }

    pub fn scale(&self) -> Complex64 {
        self.c
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.l.len();
        check_dim(d)?;
        if self.a.nrows() != d || self.a.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: self.a.nrows(),
            });
        }
        for i in 0..d {
            for j in 0..i {
                if (self.a[(i, j)] - self.a[(j, i)]).norm() > 1e-12 * (1.0 + self.a[(i, j)].norm()) {
                    return Err(invalid("a", "matrix must be symmetric"));
                }
            }
        }
        let min = min_real_eigenvalue(&self.a);
        if min.is_nan() || min <= 0.0 {
            return Err(Error::NotPositiveDefinite { min_eigenvalue: min });
        }
        Ok(())
    }

    /// Exponent `−⟨Ay,y⟩/2 + L(y)` (complex), so callers can combine it with
    /// other Gaussian factors before exponentiating.
    pub fn exponent(&self, y: &[f64]) -> Complex64 {
        let d = self.l.len();
        let mut quad = Complex64::new(0.0, 0.0);
        for i in 0..d {
            for j in 0..d {
                quad += self.a[(i, j)] * y[i] * y[j];
            }
        }
        let lin: Complex64 = self.l.iter().zip(y).map(|(l, &yi)| l * yi).sum();
        -0.5 * quad + lin
    }

    pub fn eval(&self, y: &[f64]) -> Complex64 {
        self.c * self.exponent(y).exp()
    }
}

/// Smallest eigenvalue of `Re A` (symmetric part of the real part).
pub(crate) fn min_real_eigenvalue(a: &DMatrix<Complex64>) -> f64 {
    let d = a.nrows();
    let re = DMatrix::from_fn(d, d, |i, j| 0.5 * (a[(i, j)].re + a[(j, i)].re));
    SymmetricEigen::new(re)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Named closed-form coefficient rules. All of them depend on `α` only through
/// `|α|` and `α!`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoefficientRule {
    /// `scale · e^{−r |α|^{1/(2s)}}`
    StretchedExp { r: f64, s: f64, scale: f64 },
    /// `scale · e^{+r |α|^{1/(2s)}}` (growth; distribution side)
    StretchedGrowth { r: f64, s: f64, scale: f64 },
    /// `scale · R^{|α|} / √(α!)`
    Factorial { radius: f64, scale: f64 },
    /// `scale · R^{|α|} √(α!)` (growth; distribution side)
    FactorialGrowth { radius: f64, scale: f64 },
}

impl CoefficientRule {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CoefficientRule::StretchedExp { s, scale, .. } | CoefficientRule::StretchedGrowth { s, scale, .. } => {
                if !(s > 0.0) {
                    return Err(invalid("s", "must be positive"));
                }
                if !scale.is_finite() {
                    return Err(invalid("scale", "must be finite"));
                }
            }
            CoefficientRule::Factorial { radius, .. } | CoefficientRule::FactorialGrowth { radius, .. } => {
                if !(radius > 0.0) {
                    return Err(invalid("radius", "must be positive"));
                }
            }
        }
        Ok(())
    }

    /// `ln |c_α|` (`-inf` for a zero coefficient).
    pub fn ln_coefficient(&self, alpha: &MultiIndex) -> f64 {
        let k = alpha.order() as f64;
        match *self {
            CoefficientRule::StretchedExp { r, s, scale } => scale.abs().ln() - r * k.powf(1.0 / (2.0 * s)),
            CoefficientRule::StretchedGrowth { r, s, scale } => scale.abs().ln() + r * k.powf(1.0 / (2.0 * s)),
            CoefficientRule::Factorial { radius, scale } => {
                scale.abs().ln() + k * radius.ln() - 0.5 * alpha.ln_factorial()
            }
            CoefficientRule::FactorialGrowth { radius, scale } => {
                scale.abs().ln() + k * radius.ln() + 0.5 * alpha.ln_factorial()
            }
        }
    }

    fn sign(&self) -> f64 {
        let scale = match *self {
            CoefficientRule::StretchedExp { scale, .. }
            | CoefficientRule::StretchedGrowth { scale, .. }
            | CoefficientRule::Factorial { scale, .. }
            | CoefficientRule::FactorialGrowth { scale, .. } => scale,
        };
        scale.signum()
    }

    /// The rule tabulated for all `|α| ≤ cutoff`.
    pub fn expansion(&self, dim: usize, cutoff: u32) -> super::HermiteExpansion {
        let mut e = super::HermiteExpansion::new(dim, cutoff);
        let sign = self.sign();
        for alpha in MultiIndex::all_up_to(dim, cutoff) {
            let v = sign * self.ln_coefficient(&alpha).exp();
            e.set(alpha, Complex64::new(v, 0.0)).expect("index within cutoff");
        }
        e
    }
}

/// Function values on a uniform tensor grid, stored row-major (last axis fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    axes: Vec<UniformAxis>,
    values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(axes: Vec<UniformAxis>, values: Vec<Complex64>) -> Result<Self> {
        let s = Self { axes, values };
        s.validate()?;
        Ok(s)
    }

    /// Samples `f` on the grid.
    pub fn from_fn<F: Fn(&[f64]) -> Complex64>(axes: Vec<UniformAxis>, f: F) -> Result<Self> {
        let shape: Vec<usize> = axes.iter().map(|a| a.n).collect();
        let total: usize = shape.iter().product();
        let mut values = Vec::with_capacity(total);
        let mut point = vec![0.0; axes.len()];
        for flat in 0..total {
            let mut rem = flat;
            for ax in (0..axes.len()).rev() {
                point[ax] = axes[ax].node(rem % shape[ax]);
                rem /= shape[ax];
            }
            values.push(f(&point));
        }
        Self::new(axes, values)
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[UniformAxis] {
        &self.axes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn validate(&self) -> Result<()> {
        check_dim(self.axes.len())?;
        for a in &self.axes {
            if a.n < 2 || !(a.max > a.min) {
                return Err(invalid("grid", "each axis needs n >= 2 and max > min"));
            }
        }
        let total: usize = self.axes.iter().map(|a| a.n).product();
        if total != self.values.len() {
            return Err(invalid(
                "values",
                format!("expected {total} samples, found {}", self.values.len()),
            ));
        }
        Ok(())
    }

    /// Largest sample magnitude on the grid boundary relative to the global maximum.
    pub fn boundary_fraction(&self) -> f64 {
        let shape: Vec<usize> = self.axes.iter().map(|a| a.n).collect();
        let max = self.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if max == 0.0 {
            return 0.0;
        }
        let mut edge: f64 = 0.0;
        for (flat, v) in self.values.iter().enumerate() {
            let mut rem = flat;
            let mut on_edge = false;
            for &n in shape.iter().rev() {
                let i = rem % n;
                rem /= n;
                on_edge |= i == 0 || i + 1 == n;
            }
            if on_edge {
                edge = edge.max(v.norm());
            }
        }
        edge / max
    }

    /// Multilinear interpolation; zero outside the grid.
    pub fn interpolate(&self, y: &[f64]) -> Complex64 {
        let d = self.axes.len();
        let mut base = vec![0usize; d];
        let mut frac = vec![0.0; d];
        for (k, ax) in self.axes.iter().enumerate() {
            if y[k] < ax.min || y[k] > ax.max {
                return Complex64::new(0.0, 0.0);
            }
            let t = (y[k] - ax.min) / ax.step();
            let i = (t.floor() as usize).min(ax.n - 2);
            base[k] = i;
            frac[k] = t - i as f64;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for corner in 0..(1usize << d) {
            let mut w = 1.0;
            let mut flat = 0usize;
            for k in 0..d {
                let bit = (corner >> k) & 1;
                w *= if bit == 1 { frac[k] } else { 1.0 - frac[k] };
                flat = flat * self.axes[k].n + base[k] + bit;
            }
            if w != 0.0 {
                acc += self.values[flat] * w;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_definite_gaussian() {
        let a = DMatrix::from_row_slice(2, 2, &[Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)]);
        let err = GaussianSpec::new(a, vec![Complex64::new(0.0, 0.0); 2], Complex64::new(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }

    #[test]
    fn accepts_complex_symmetric_with_positive_real_part() {
        let a = DMatrix::from_row_slice(1, 1, &[Complex64::new(1.0, 3.0)]);
        assert!(GaussianSpec::new(a, vec![Complex64::new(0.5, 1.0)], Complex64::new(1.0, 0.0)).is_ok());
    }

    #[test]
    fn standard_gaussian_value() {
        let f = FunctionSpec::standard_gaussian(1);
        let v = f.eval(&[0.7], 0);
        let want = std::f64::consts::PI.powf(-0.25) * (-0.245f64).exp();
        assert!((v.re - want).abs() < 1e-15);
    }

    #[test]
    fn rule_values() {
        let r = CoefficientRule::Factorial { radius: 1.0, scale: 1.0 };
        let e = r.expansion(1, 4);
        assert!((e.get(&MultiIndex::single(4)).re - 1.0 / 24f64.sqrt()).abs() < 1e-15);
        let r = CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 };
        assert!((r.expansion(2, 3).get(&MultiIndex::from([1, 2])).re - (-3f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn interpolation_reproduces_linear_data() {
        let s = SampledFunction::from_fn(vec![UniformAxis::new(-1.0, 1.0, 5)], |y| Complex64::new(2.0 * y[0] + 1.0, 0.0)).unwrap();
        assert!((s.interpolate(&[0.3]).re - 1.6).abs() < 1e-14);
        assert_eq!(s.interpolate(&[1.5]), Complex64::new(0.0, 0.0));
    }
}
