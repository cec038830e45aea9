//! The reproducing projection of the Fock space applied to a compactly
//! supported lift of the unit square, against its closed form.

use bargmann::bargmann::{
    monomial, pi_a_box_closed_form, reproducing_project, ComplexPoint, EntireFunction, UnitSquareLift,
    DEFAULT_PI_RADIUS,
};
use bargmann::{Complex64, HermiteExpansion, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    let lift = UnitSquareLift { dim: 1 };
    for z in [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(1.0, 1.0), Complex64::new(2.0, -1.0)] {
        let p: ComplexPoint = z.into();
        let q = reproducing_project(&lift, &p, DEFAULT_PI_RADIUS, None)?;
        let c = pi_a_box_closed_form(&p);
        println!("z = {z}: quadrature {q:.14}  closed form {c:.14}");
    }

    // entire functions in the space are fixed points
    let e3 = EntireFunction::Series(HermiteExpansion::basis(MultiIndex::single(3)));
    let z: ComplexPoint = Complex64::new(-0.6, 1.1).into();
    let v = reproducing_project(&e3, &z, DEFAULT_PI_RADIUS, None)?;
    println!("Pi e_3 = {v:.14}, e_3 = {:.14}", monomial(&MultiIndex::single(3), &z));
    Ok(())
}
