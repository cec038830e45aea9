//! Placement of several coefficient families in the ladder of test-function
//! and distribution spaces.

use bargmann::classify::{classify, fit_decay, Verdict, DEFAULT_S_GRID, DEFAULT_TOL};
use bargmann::hermite::CoefficientRule;
use bargmann::{analyze, Complex64, FunctionSpec, GaussianSpec, HermiteExpansion, MultiIndex};

fn smallest_member(e: &HermiteExpansion) -> Result<String, bargmann::Error> {
    let rep = classify(e, DEFAULT_TOL)?;
    Ok(rep
        .verdicts
        .iter()
        .find(|v| v.verdict == Verdict::Member)
        .map(|v| v.space.to_string())
        .unwrap_or_else(|| "none".into()))
}

fn main() -> Result<(), bargmann::Error> {
    let cases: Vec<(&str, HermiteExpansion)> = vec![
        (
            "h_0 + h_3",
            HermiteExpansion::from_terms(1, 40, [0, 3].map(|k| (MultiIndex::single(k), Complex64::new(1.0, 0.0))))?,
        ),
        ("e^{-|a|}", CoefficientRule::StretchedExp { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40)),
        ("e^{-sqrt|a|}", CoefficientRule::StretchedExp { r: 1.0, s: 1.0, scale: 1.0 }.expansion(1, 40)),
        ("2^{|a|}/sqrt(a!)", CoefficientRule::Factorial { radius: 2.0, scale: 1.0 }.expansion(1, 40)),
        ("e^{+|a|}", CoefficientRule::StretchedGrowth { r: 1.0, s: 0.5, scale: 1.0 }.expansion(1, 40)),
        ("sqrt(a!)/2^{|a|}", CoefficientRule::FactorialGrowth { radius: 0.5, scale: 1.0 }.expansion(1, 40)),
        (
            "Gaussian A = 2",
            analyze(&FunctionSpec::Gaussian(GaussianSpec::isotropic(1, 2.0, Complex64::new(1.0, 0.0))?), 1, 40, None)?,
        ),
    ];
    for (name, e) in &cases {
        println!("{name:18} smallest space: {}", smallest_member(e)?);
    }

    let rep = classify(&cases[1].1, DEFAULT_TOL)?;
    println!("\nfull report for e^{{-|a|}}:");
    for v in &rep.verdicts {
        println!("  {:14} {:?}{}", v.space.to_string(), v.verdict, if v.adjusted { " (adjusted)" } else { "" });
    }
    let fits = fit_decay(&cases[1].1, &DEFAULT_S_GRID)?;
    println!("best decay model: {:?}", fits[0].model);
    Ok(())
}
