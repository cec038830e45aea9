use std::f64::consts::PI;

use num_complex::Complex64;

use super::{exp_c, ComplexPoint, PlaneFunction};
use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::special::pairwise_sum;

/// Angular nodes per complex coordinate of the polar grid.
pub const ANGULAR_NODES: usize = 64;

/// Default truncation radius of the polar grid.
pub const DEFAULT_PI_RADIUS: f64 = 8.0;

/// Default radial Gauss–Legendre order.
pub const DEFAULT_RADIAL_ORDER: usize = 64;

/// Largest admissible share of the outermost ring in the total absolute mass.
pub const SHELL_TOLERANCE: f64 = 1e-8;

/// Fraction of the radius that counts as the outer ring.
const SHELL_START: f64 = 0.9;

/// Integral over the polydisc `{|w_j| ≤ radius}` with the outer-ring share of
/// the absolute mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarEstimate {
    pub value: Complex64,
    pub shell_fraction: f64,
}

/// `∫ f(w) dλ(w)` over `{|w_j| ≤ radius}` on a product polar grid:
/// [`ANGULAR_NODES`] equispaced angles times `radial_order` Gauss–Legendre
/// radii per complex coordinate.
pub fn polar_integrate<F>(dim: usize, radius: f64, radial_order: usize, mut f: F) -> PolarEstimate
where
    F: FnMut(&[Complex64]) -> Complex64,
{
    let gl = GaussLegendre::new(radial_order, 0.0, radius);
    let dtheta = 2.0 * PI / ANGULAR_NODES as f64;
    // Per-coordinate nodes with the area element ρ dρ dθ folded into the weight.
    let mut nodes = Vec::with_capacity(ANGULAR_NODES * radial_order);
    for (&rho, &w) in gl.nodes().iter().zip(gl.weights()) {
        for k in 0..ANGULAR_NODES {
            let theta = dtheta * k as f64;
            nodes.push((Complex64::from_polar(rho, theta), w * rho * dtheta, rho >= SHELL_START * radius));
        }
    }
    let per_axis = nodes.len();
    let total = per_axis.pow(dim as u32);
    let mut terms = Vec::with_capacity(total);
    let mut shell = Vec::new();
    let mut mass = Vec::with_capacity(total);
    let mut w = vec![Complex64::new(0.0, 0.0); dim];
    for flat in 0..total {
        let mut rem = flat;
        let mut weight = 1.0;
        let mut outer = false;
        for j in (0..dim).rev() {
            let (p, wt, o) = nodes[rem % per_axis];
            rem /= per_axis;
            w[j] = p;
            weight *= wt;
            outer |= o;
        }
        let t = f(&w) * weight;
        mass.push(t.norm());
        if outer {
            shell.push(t.norm());
        }
        terms.push(t);
    }
    let value = pairwise_sum(&terms);
    let m = pairwise_sum(&mass);
    let shell_fraction = if m > 0.0 { pairwise_sum(&shell) / m } else { 0.0 };
    PolarEstimate { value, shell_fraction }
}

/// `∫_{box} f(x, ξ) dx dξ` by tensor Gauss–Legendre with `order` nodes per real axis.
fn box_integrate<F>(bounds: &[(f64, f64)], order: usize, f: F) -> Complex64
where
    F: Fn(&[f64]) -> Complex64,
{
    let rules: Vec<GaussLegendre> = bounds.iter().map(|&(a, b)| GaussLegendre::new(order, a, b)).collect();
    let n = bounds.len();
    let total = order.pow(n as u32);
    let mut p = vec![0.0; n];
    let mut terms = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut weight = 1.0;
        for ax in (0..n).rev() {
            let i = rem % order;
            rem /= order;
            p[ax] = rules[ax].nodes()[i];
            weight *= rules[ax].weights()[i];
        }
        terms.push(f(&p) * weight);
    }
    pairwise_sum(&terms)
}

/// `(Π_A F)(z) = π^{-d} ∫ F(w) e^{(z,w)} e^{-|w|²} dλ(w)`.
///
/// Compactly supported `F` are integrated with tensor Gauss–Legendre over
/// their support box (`quad_order` nodes per real axis); all others on the
/// polar grid of [`polar_integrate`] truncated at `radius`, failing with
/// [`Error::RadiusTooSmall`] when the outer ring carries more than
/// [`SHELL_TOLERANCE`] of the absolute mass.
pub fn reproducing_project<F: PlaneFunction + ?Sized>(
    f: &F,
    z: &ComplexPoint,
    radius: f64,
    quad_order: Option<usize>,
) -> Result<Complex64> {
    let d = f.dim();
    if z.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: z.dim(),
        });
    }
    let q = quad_order.unwrap_or(DEFAULT_RADIAL_ORDER);
    let norm = PI.powf(-(d as f64));
    if let Some(bounds) = f.support() {
        let v = box_integrate(&bounds, q, |p| {
            let (x, xi) = p.split_at(d);
            let fv = f.eval(x, xi);
            if fv == Complex64::new(0.0, 0.0) {
                return fv;
            }
            let w: Vec<Complex64> = x.iter().zip(xi).map(|(&a, &b)| Complex64::new(a, b)).collect();
            let sq: f64 = p.iter().map(|v| v * v).sum();
            fv * exp_c(z.sesquilinear(&w) - sq)
        });
        return Ok(v * norm);
    }
    let est = polar_integrate(d, radius, q, |w| {
        let x: Vec<f64> = w.iter().map(|c| c.re).collect();
        let xi: Vec<f64> = w.iter().map(|c| c.im).collect();
        let fv = f.eval(&x, &xi);
        if fv == Complex64::new(0.0, 0.0) {
            return fv;
        }
        let sq: f64 = w.iter().map(|c| c.norm_sqr()).sum();
        fv * exp_c(z.sesquilinear(w) - sq)
    });
    if est.shell_fraction > SHELL_TOLERANCE {
        return Err(Error::RadiusTooSmall {
            radius,
            shell_fraction: est.shell_fraction,
        });
    }
    Ok(est.value * norm)
}

/// `(e^z − 1)/z`, continued by its Taylor series near the removable singularity.
fn expm1_ratio(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0))
    } else {
        (z.exp() - 1.0) / z
    }
}

/// `π^{-d} ∏_j (e^{z_j} − 1)/z_j · ∏_j (1 − e^{−i z_j})/(i z_j)`, the
/// reproducing projection of [`super::UnitSquareLift`].
pub fn pi_a_box_closed_form(z: &ComplexPoint) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let p: Complex64 = z
        .coords()
        .iter()
        .map(|&zj| expm1_ratio(zj) * expm1_ratio(-i * zj))
        .product();
    p * PI.powf(-(z.dim() as f64))
}

/// `(F, G)_{A²} = π^{-d} ∫ F(w) conj(G(w)) e^{-|w|²} dλ(w)` on the polar grid.
pub fn a2_inner_quadrature<F, G>(f: &F, g: &G, radius: f64, quad_order: Option<usize>) -> Result<Complex64>
where
    F: PlaneFunction + ?Sized,
    G: PlaneFunction + ?Sized,
{
    let d = f.dim();
    if g.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: g.dim(),
        });
    }
    let est = polar_integrate(d, radius, quad_order.unwrap_or(DEFAULT_RADIAL_ORDER), |w| {
        let x: Vec<f64> = w.iter().map(|c| c.re).collect();
        let xi: Vec<f64> = w.iter().map(|c| c.im).collect();
        let sq: f64 = w.iter().map(|c| c.norm_sqr()).sum();
        f.eval(&x, &xi) * g.eval(&x, &xi).conj() * (-sq).exp()
    });
    if est.shell_fraction > SHELL_TOLERANCE {
        return Err(Error::RadiusTooSmall {
            radius,
            shell_fraction: est.shell_fraction,
        });
    }
    Ok(est.value * PI.powf(-(d as f64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bargmann::{monomial, EntireFunction, UnitSquareLift};
    use crate::{HermiteExpansion, MultiIndex};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // 50-digit references of the closed form.
    #[test]
    fn box_closed_form_reference_values() {
        let cases = [
            (c(0.0, 0.0), c(0.31830988618379067154, 0.0)),
            (c(1.0, 0.0), c(0.46023926772262536112, -0.25142985788075312433)),
            (c(1.0, 1.0), c(0.86765994516657662540, 0.0)),
            (c(2.0, -1.0), c(0.046033856337393172274, -0.52540572495765760028)),
        ];
        for (z, want) in cases {
            let got = pi_a_box_closed_form(&z.into());
            assert!((got - want).norm() < 1e-14, "z={z}: {got} vs {want}");
        }
    }

    #[test]
    fn series_switch_is_continuous() {
        let a = pi_a_box_closed_form(&c(0.99e-4, 0.0).into());
        let b = pi_a_box_closed_form(&c(1.01e-4, 0.0).into());
        assert!((a - b).norm() < 1e-5);
    }

    #[test]
    fn box_lift_projection_matches_closed_form() {
        for z in [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(2.0, -1.0)] {
            let zp: ComplexPoint = z.into();
            let q = reproducing_project(&UnitSquareLift { dim: 1 }, &zp, DEFAULT_PI_RADIUS, None).unwrap();
            assert!((q - pi_a_box_closed_form(&zp)).norm() < 1e-12);
        }
    }

    #[test]
    fn projection_fixes_monomials() {
        let e2 = EntireFunction::Series(HermiteExpansion::basis(MultiIndex::single(2)));
        let z: ComplexPoint = c(1.5, 0.0).into();
        let v = reproducing_project(&e2, &z, DEFAULT_PI_RADIUS, None).unwrap();
        assert!((v - c(1.5 * 1.5 / 2f64.sqrt(), 0.0)).norm() < 1e-10);
        let z: ComplexPoint = c(-0.7, 1.3).into();
        let v = reproducing_project(&e2, &z, DEFAULT_PI_RADIUS, None).unwrap();
        assert!((v - monomial(&MultiIndex::single(2), &z)).norm() < 1e-10);
    }

    #[test]
    fn small_radius_is_flagged() {
        let e0 = EntireFunction::Series(HermiteExpansion::basis(MultiIndex::single(0)));
        let err = reproducing_project(&e0, &c(0.5, 0.0).into(), 2.0, None).unwrap_err();
        assert!(matches!(err, Error::RadiusTooSmall { .. }));
    }

    #[test]
    fn a2_inner_product_of_monomials() {
        let e1 = EntireFunction::Series(HermiteExpansion::basis(MultiIndex::single(1)));
        let e2 = EntireFunction::Series(HermiteExpansion::basis(MultiIndex::single(2)));
        assert!((a2_inner_quadrature(&e1, &e1, 8.0, None).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        assert!(a2_inner_quadrature(&e1, &e2, 8.0, None).unwrap().norm() < 1e-12);
    }
}
