use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::quadrature::UniformAxis;
use crate::special::pairwise_sum;

/// Complex values on a uniform grid over `(x, ξ) ∈ ℝ^{2d}`.
///
/// Values are stored row-major over `(x_1, …, x_d, ξ_1, …, ξ_d)` with the last
/// axis fastest, which is also the lexicographic row order of CSV output.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneGrid {
    x_axes: Vec<UniformAxis>,
    xi_axes: Vec<UniformAxis>,
    values: Vec<Complex64>,
}

fn check_axes(x_axes: &[UniformAxis], xi_axes: &[UniformAxis]) -> Result<usize> {
    if x_axes.is_empty() || x_axes.len() != xi_axes.len() {
        return Err(invalid("grid", "need the same positive number of x and ξ axes"));
    }
    for a in x_axes.iter().chain(xi_axes) {
        if a.n < 2 || !(a.max > a.min) || !a.min.is_finite() || !a.max.is_finite() {
            return Err(invalid("grid", "each axis needs n >= 2 and a positive finite extent"));
        }
    }
    Ok(x_axes.iter().chain(xi_axes).map(|a| a.n).product())
}

impl PlaneGrid {
    pub fn new(x_axes: Vec<UniformAxis>, xi_axes: Vec<UniformAxis>, values: Vec<Complex64>) -> Result<Self> {
        let total = check_axes(&x_axes, &xi_axes)?;
        if total != values.len() {
            return Err(invalid(
                "values",
                format!("expected {total} samples, found {}", values.len()),
            ));
        }
        Ok(Self { x_axes, xi_axes, values })
    }

    /// Samples `f(x, ξ)` on the grid.
    pub fn from_fn<F>(x_axes: Vec<UniformAxis>, xi_axes: Vec<UniformAxis>, f: F) -> Result<Self>
    where
        F: Fn(&[f64], &[f64]) -> Complex64,
    {
        let total = check_axes(&x_axes, &xi_axes)?;
        let mut g = Self {
            x_axes,
            xi_axes,
            values: Vec::with_capacity(total),
        };
        for flat in 0..total {
            let (x, xi) = g.point(flat);
            let v = f(&x, &xi);
            g.values.push(v);
        }
        Ok(g)
    }

    /// Same `x` axis for every `x_j` and same `ξ` axis for every `ξ_j`.
    pub fn isotropic<F>(dim: usize, x_axis: UniformAxis, xi_axis: UniformAxis, f: F) -> Result<Self>
    where
        F: Fn(&[f64], &[f64]) -> Complex64,
    {
        Self::from_fn(vec![x_axis; dim], vec![xi_axis; dim], f)
    }

    pub fn dim(&self) -> usize {
        self.x_axes.len()
    }

    pub fn x_axes(&self) -> &[UniformAxis] {
        &self.x_axes
    }

    pub fn xi_axes(&self) -> &[UniformAxis] {
        &self.xi_axes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn axes(&self) -> impl Iterator<Item = &UniformAxis> {
        self.x_axes.iter().chain(&self.xi_axes)
    }

    /// Coordinates `(x, ξ)` of the `flat`-th value.
    pub fn point(&self, flat: usize) -> (Vec<f64>, Vec<f64>) {
        let d = self.dim();
        let axes: Vec<&UniformAxis> = self.axes().collect();
        let mut p = vec![0.0; 2 * d];
        let mut rem = flat;
        for k in (0..2 * d).rev() {
            p[k] = axes[k].node(rem % axes[k].n);
            rem /= axes[k].n;
        }
        let xi = p.split_off(d);
        (p, xi)
    }

    /// The same grid with every value multiplied by `g(x, ξ)`.
    pub fn weighted<F: Fn(&[f64], &[f64]) -> f64>(&self, g: F) -> Self {
        let mut out = self.clone();
        for (flat, v) in out.values.iter_mut().enumerate() {
            let (x, xi) = self.point(flat);
            *v *= g(&x, &xi);
        }
        out
    }

    pub fn scaled(&self, lambda: Complex64) -> Self {
        let mut out = self.clone();
        out.values.iter_mut().for_each(|v| *v *= lambda);
        out
    }

    /// Multilinear interpolation; zero outside the grid.
    pub fn interpolate(&self, x: &[f64], xi: &[f64]) -> Complex64 {
        let axes: Vec<&UniformAxis> = self.axes().collect();
        let p: Vec<f64> = x.iter().chain(xi).copied().collect();
        let n = axes.len();
        let mut base = vec![0usize; n];
        let mut frac = vec![0.0; n];
        for k in 0..n {
            let ax = axes[k];
            if p[k] < ax.min || p[k] > ax.max {
                return Complex64::new(0.0, 0.0);
            }
            let t = (p[k] - ax.min) / ax.step();
            let i = (t.floor() as usize).min(ax.n - 2);
            base[k] = i;
            frac[k] = t - i as f64;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for corner in 0..(1usize << n) {
            let mut w = 1.0;
            let mut flat = 0usize;
            for k in 0..n {
                let bit = (corner >> k) & 1;
                w *= if bit == 1 { frac[k] } else { 1.0 - frac[k] };
                flat = flat * axes[k].n + base[k] + bit;
            }
            if w != 0.0 {
                acc += self.values[flat] * w;
            }
        }
        acc
    }
}

/// Trapezoidal weight of the multi-index over `axes`.
fn tensor_weight(axes: &[UniformAxis], idx: &[usize]) -> f64 {
    axes.iter()
        .zip(idx)
        .map(|(a, &i)| if i == 0 || i + 1 == a.n { 0.5 * a.step() } else { a.step() })
        .product()
}

fn unflatten(axes: &[UniformAxis], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; axes.len()];
    for k in (0..axes.len()).rev() {
        idx[k] = flat % axes[k].n;
        flat /= axes[k].n;
    }
    idx
}

/// `L^{p,q}` quasi-norm `(∫ (∫ |F(x,ξ)|^p dx)^{q/p} dξ)^{1/q}` with trapezoidal
/// weights; `p` or `q` equal to `f64::INFINITY` selects the plain maximum over
/// that variable. Exponents below 1 are allowed.
///
/// Values are normalized by their maximum before powers are taken, so the
/// result scales exactly with `|λ|` up to rounding of the final product.
pub fn mixed_norm(g: &PlaneGrid, p: f64, q: f64) -> Result<f64> {
    if !(p > 0.0) || !(q > 0.0) {
        return Err(invalid("p,q", "exponents must be positive"));
    }
    let peak = g.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return Ok(0.0);
    }
    let nx: usize = g.x_axes.iter().map(|a| a.n).product();
    let nxi: usize = g.xi_axes.iter().map(|a| a.n).product();
    let mut inner = Vec::with_capacity(nxi);
    for j in 0..nxi {
        let xi_w = tensor_weight(&g.xi_axes, &unflatten(&g.xi_axes, j));
        let col = (0..nx).map(|i| g.values[i * nxi + j].norm() / peak);
        let v = if p.is_infinite() {
            col.fold(0.0, f64::max)
        } else {
            let terms: Vec<f64> = col
                .enumerate()
                .map(|(i, a)| tensor_weight(&g.x_axes, &unflatten(&g.x_axes, i)) * a.powf(p))
                .collect();
            pairwise_sum(&terms).powf(1.0 / p)
        };
        inner.push((v, xi_w));
    }
    let outer = if q.is_infinite() {
        inner.iter().map(|&(v, _)| v).fold(0.0, f64::max)
    } else {
        let terms: Vec<f64> = inner.iter().map(|&(v, w)| w * v.powf(q)).collect();
        pairwise_sum(&terms).powf(1.0 / q)
    };
    Ok(outer * peak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit_box() -> (UniformAxis, UniformAxis) {
        (UniformAxis::new(0.0, 1.0, 11), UniformAxis::new(0.0, 1.0, 11))
    }

    #[test]
    fn constant_on_unit_box() {
        let (a, b) = unit_box();
        let g = PlaneGrid::isotropic(1, a, b, |_, _| Complex64::new(1.0, 0.0)).unwrap();
        assert!((mixed_norm(&g, 2.0, 2.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((mixed_norm(&g, 0.5, 3.0).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sup_norm_is_max() {
        let (a, b) = unit_box();
        let g = PlaneGrid::isotropic(1, a, b, |x, xi| Complex64::new(x[0] - 3.0 * xi[0], 0.5)).unwrap();
        let max = g.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        assert_eq!(mixed_norm(&g, f64::INFINITY, f64::INFINITY).unwrap(), max);
    }

    #[test]
    fn gaussian_l2_norm() {
        let ax = UniformAxis::new(-10.0, 10.0, 201);
        let g = PlaneGrid::isotropic(1, ax, ax, |x, xi| Complex64::new((-(x[0] * x[0] + xi[0] * xi[0]) / 2.0).exp(), 0.0)).unwrap();
        assert!((mixed_norm(&g, 2.0, 2.0).unwrap() - PI.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn layout_has_x_slowest() {
        let ax = UniformAxis::new(0.0, 1.0, 2);
        let g = PlaneGrid::isotropic(1, ax, ax, |x, xi| Complex64::new(x[0], xi[0])).unwrap();
        assert_eq!(g.values()[1], Complex64::new(0.0, 1.0));
        assert_eq!(g.point(2), (vec![1.0], vec![0.0]));
    }

    #[test]
    fn interpolation_is_exact_for_bilinear_data() {
        let ax = UniformAxis::new(-1.0, 1.0, 5);
        let g = PlaneGrid::isotropic(1, ax, ax, |x, xi| Complex64::new(2.0 * x[0] - xi[0] + x[0] * xi[0], 0.0)).unwrap();
        let v = g.interpolate(&[0.3], &[-0.7]);
        assert!((v.re - (0.6 + 0.7 - 0.21)).abs() < 1e-14);
        assert_eq!(g.interpolate(&[2.0], &[0.0]), Complex64::new(0.0, 0.0));
    }
}
