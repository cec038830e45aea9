//! Sequence weights of radial Fock-space weights: quadrature against the
//! closed forms, the simplex identity behind the radial reduction, and the
//! agreement of the series and integral norms.

use bargmann::bargmann::EntireFunction;
use bargmann::norms::{a2_weighted_norm_quadrature, a2_weighted_norm_series};
use bargmann::weights::{
    check_moderate, dirichlet_simplex_identity, theta_closed_exponential, theta_closed_linear_exponential,
    theta_from_radial, RadialProfile, SequenceWeight, WeightSpec,
};
use bargmann::{Complex64, HermiteExpansion, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    for k in [0, 5, 15, 25] {
        let a = MultiIndex::new(vec![k, 0]);
        let num = theta_from_radial(&RadialProfile::Exponential { h: 1.0 }, &a, 2)?;
        let root = theta_from_radial(&RadialProfile::RootExponential { radius: 1.0 }, &a, 2)?;
        println!(
            "|alpha| = {k:2}: e^(-r) {num:.6e} (closed {:.6e})   e^(-sqrt r) {root:.6e} (closed {:.6e})",
            theta_closed_exponential(1.0, &a, 2),
            theta_closed_linear_exponential(1.0, &a, 2)
        );
    }

    let r = dirichlet_simplex_identity(&MultiIndex::new(vec![3, 2]), 200_000, 11)?;
    println!("simplex integral: monte carlo {:.6} +- {:.1e}, exact {:.6}", r.lhs, r.std_err, r.rhs);

    let e = HermiteExpansion::from_terms(
        1,
        6,
        (0..=6).map(|k| (MultiIndex::single(k), Complex64::new(1.0 / (1.0 + k as f64), 0.3))),
    )?;
    for h in [0.5, 1.0, 2.0] {
        let series = a2_weighted_norm_series(&e, &SequenceWeight::closed_exponential(h, 1));
        let quad = a2_weighted_norm_quadrature(&EntireFunction::Series(e.clone()), |r: &[f64]| -h * r[0], 10.0, Some(96))?;
        println!("h = {h}: series norm {series:.12}, quadrature {quad:.12}");
    }

    let m = check_moderate(&WeightSpec::Poly { r: 2.0 }, &WeightSpec::Poly { r: 2.0 }, 1, 8.0, 2000, 5)?;
    println!("(1+|z|^2) is moderate with respect to itself: {} (fitted constant {:.3})", m.holds, m.fitted_c);
    Ok(())
}
