//! Both directions of the equivalence between harmonic-oscillator bounds and
//! stretched-exponential decay of Hermite coefficients.

use bargmann::classify::{equiv_backward_check, equiv_forward_check};
use bargmann::hermite::CoefficientRule;
use bargmann::norms::DEFAULT_N_SUP;

fn main() -> Result<(), bargmann::Error> {
    for (s, h) in [(0.5, 0.5), (0.5, 1.0), (1.0, 1.0), (1.0, 2.0)] {
        let e = CoefficientRule::StretchedExp { r: 1.0 / h, s, scale: 1.0 }.expansion(1, 30);
        let f = equiv_forward_check(&e, h, s, DEFAULT_N_SUP)?;
        let b = equiv_backward_check(&e, h, s, DEFAULT_N_SUP)?;
        println!(
            "s={s} h={h}: forward C={:.4e} worst slack {:.3} ({} violations) | backward C={:.3} sup at N={} bounded={} C1={:.3e}",
            f.c, f.worst_slack, f.violations, b.c_fit, b.argmax, b.bounded, b.implied_c1
        );
    }
    Ok(())
}
