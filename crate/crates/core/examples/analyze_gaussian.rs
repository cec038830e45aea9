//! Hermite coefficients of a rotated, shifted Gaussian and a check that the
//! truncated series reproduces the function.

use bargmann::hermite::hermite_eval;
use bargmann::{analyze, Complex64, FunctionSpec, GaussianSpec, MultiIndex};
use nalgebra::DMatrix;

fn main() -> Result<(), bargmann::Error> {
    let a = DMatrix::from_row_slice(2, 2, &[
        Complex64::new(1.5, 0.0),
        Complex64::new(0.3, 0.0),
        Complex64::new(0.3, 0.0),
        Complex64::new(0.8, 0.2),
    ]);
    let g = GaussianSpec::new(a, vec![Complex64::new(0.4, 0.0), Complex64::new(0.0, -0.3)], Complex64::new(1.0, 0.0))?;
    let spec = FunctionSpec::Gaussian(g.clone());
    let e = analyze(&spec, 2, 30, None)?;
    for w in &e.warnings {
        println!("warning: {w}");
    }

    println!("largest coefficient per degree:");
    for (k, m) in e.degree_profile().iter().enumerate().step_by(5) {
        println!("  |alpha| = {k:2}  max |c| = {m:.3e}");
    }

    for y in [[0.0, 0.0], [0.7, -0.4], [-1.2, 1.1]] {
        let series = e.synthesize(&y);
        let direct = g.eval(&y);
        println!("f({y:?}): series {series:.12}  direct {direct:.12}  |diff| {:.1e}", (series - direct).norm());
    }

    // h_(1,2) is its own expansion: one coefficient equal to one
    let h = analyze(&FunctionSpec::hermite(MultiIndex::new(vec![1, 2])), 2, 6, None)?;
    let c = h.get(&MultiIndex::new(vec![1, 2]));
    println!("h_(1,2) coefficient {c:.15}, h_(1,2)(0.5, 0.5) = {:.15}", hermite_eval(&MultiIndex::new(vec![1, 2]), &[0.5, 0.5]));
    Ok(())
}
