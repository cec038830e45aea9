//! Gaussian-window short-time Fourier transform read off the Bargmann
//! transform, compared with direct quadrature, and the map back to the
//! Bargmann plane.

use bargmann::bargmann::{bargmann_series, stft_direct, stft_gaussian, uv_apply, ComplexPoint, PlaneFn};
use bargmann::{analyze, FunctionSpec, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    let spec = FunctionSpec::hermite(MultiIndex::single(2));
    let e = analyze(&spec, 1, 8, None)?;

    println!("{:>6} {:>6} {:>30} {:>10}", "x", "xi", "V_phi f (series)", "|diff|");
    for (x, xi) in [(0.0, 0.0), (1.0, -0.5), (-2.0, 1.5), (2.5, 2.5)] {
        let s = stft_gaussian(&e, &[x], &[xi]);
        let d = stft_direct(&spec, &[x], &[xi], None)?;
        println!("{x:6.2} {xi:6.2} {s:30.12} {:10.1e}", (s - d).norm());
    }

    let phi = analyze(&FunctionSpec::hermite(MultiIndex::single(0)), 1, 0, None)?;
    println!("V_phi phi(0, 0) = {:.16}", stft_gaussian(&phi, &[0.0], &[0.0]).re);

    let stft = PlaneFn::new(1, move |x: &[f64], xi: &[f64]| stft_direct(&spec, x, xi, None).expect("one-dimensional point"));
    let (x, xi) = (0.8, -0.3);
    let back = uv_apply(&stft, &[x], &[xi]);
    let want = bargmann_series(&e, &ComplexPoint::from_parts(&[x], &[xi]));
    println!("U(V_phi f)({x}+{xi}i) = {back:.12}, Bargmann series {want:.12}");
    Ok(())
}
