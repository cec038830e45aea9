//! Weighted modulation norms on a sampled time-frequency grid and the
//! harmonic-oscillator seminorm of Pilipovic spaces.

use bargmann::norms::{modulation_norm, pilipovic_seminorm, GridSpec};
use bargmann::weights::WeightSpec;
use bargmann::{Complex64, HermiteExpansion, MultiIndex};

fn main() -> Result<(), bargmann::Error> {
    let e = HermiteExpansion::from_terms(
        1,
        4,
        [(0, 1.0), (2, -0.5), (4, 0.25)].map(|(k, c)| (MultiIndex::single(k), Complex64::new(c, 0.0))),
    )?;
    let grid: GridSpec = "-8:8:161,-8:8:161".parse()?;
    for (name, w) in [
        ("unit", WeightSpec::Unit),
        ("poly r=2", WeightSpec::Poly { r: 2.0 }),
        ("quadratic h=0.6", WeightSpec::Quadratic { h: 0.6 }),
    ] {
        for (p, q) in [(1.0, 1.0), (2.0, 2.0), (1.0, 2.0)] {
            let coarse = modulation_norm(&e, &w, p, q, &grid)?;
            let fine = modulation_norm(&e, &w, p, q, &grid.refined())?;
            println!("{name:16} p={p} q={q}: {coarse:.10}  (halved step changes it by {:.1e})", (coarse / fine - 1.0).abs());
        }
    }
    println!("L2 norm {:.12}", e.l2_norm());

    for s in [0.5, 1.0] {
        let r = pilipovic_seminorm(&e, 1.0, s, 60)?;
        println!("sup_N |H^N f| / (N!)^(2s) with s = {s}: {:.6} at N = {}", r.value, r.argmax);
    }
    Ok(())
}
