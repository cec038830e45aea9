//! The Bargmann transform computed two ways: the monomial series of the
//! Hermite coefficients and Gauss-Hermite quadrature against the kernel.

use bargmann::bargmann::{bargmann_quadrature, bargmann_series, monomial, ComplexPoint};
use bargmann::{analyze, Complex64, FunctionSpec, GaussianSpec, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    let z = ComplexPoint::new(vec![Complex64::new(1.2, -0.7)]);

    // Hermite functions go to normalized monomials
    for k in 0..5 {
        let a = MultiIndex::single(k);
        let q = bargmann_quadrature(&FunctionSpec::hermite(a.clone()), &z, None)?;
        println!("V h_{k}(z) = {q:.12}   z^k/sqrt(k!) = {:.12}", monomial(&a, &z));
    }

    let spec = FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 0.6, Complex64::new(1.0, 0.0))?);
    let e = analyze(&spec, 1, 60, None)?;
    for w in [0.0, 1.0, 2.5] {
        let z = ComplexPoint::new(vec![Complex64::new(w, 0.5 * w)]);
        let s = bargmann_series(&e, &z);
        let q = bargmann_quadrature(&spec, &z, None)?;
        println!("dilated Gaussian at {:.2}: series {s:.12}  quadrature {q:.12}", z.coords()[0]);
    }
    Ok(())
}
