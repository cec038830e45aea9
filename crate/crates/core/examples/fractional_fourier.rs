//! Fractional Fourier transforms as phase rotations of Hermite coefficients.

use bargmann::fracft::{fractional_ft, verify_commutes_with_h, verify_isometry};
use bargmann::hermite::hermite_function;
use bargmann::norms::GridSpec;
use bargmann::weights::WeightSpec;
use bargmann::{Complex64, HermiteExpansion, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    let h3 = HermiteExpansion::basis(MultiIndex::single(3));
    let flipped = fractional_ft(&h3, &[2.0])?;
    println!("F_2 h_3 (1) = {:.15}, -h_3(1) = {:.15}", flipped.synthesize(&[1.0]).re, -hermite_function(3, 1.0));

    let e = HermiteExpansion::from_terms(
        1,
        5,
        (0..=5).map(|k| (MultiIndex::single(k), Complex64::new(1.0, -0.2 * k as f64))),
    )?;
    for r in [0.5, 1.0, 1.5] {
        let f = fractional_ft(&e, &[r])?;
        println!("r = {r}: f_r(0.3) = {:.12}", f.synthesize(&[0.3]));
    }
    let four = fractional_ft(&e, &[4.0])?;
    println!("period four exact: {}", four == e);

    let c = verify_commutes_with_h(&e, &[0.37], 4)?;
    println!("commutes with H^4: max relative difference {:.1e}", c.max_rel_diff);

    let iso = verify_isometry(&e, &[0.37], &WeightSpec::Poly { r: 1.0 }, 2.0, &GridSpec::symmetric(10.0, 161))?;
    println!("radial-weight norm {:.12} -> {:.12} (relative change {:.1e})", iso.before, iso.after, iso.rel_dev);
    Ok(())
}
