use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{mixed_norm, PlaneGrid};
use crate::bargmann::{bargmann_series, exp_c, stft_factor_ln, ComplexPoint};
use crate::error::{Error, Result};
use crate::quadrature::UniformAxis;
use crate::weights::WeightSpec;
use crate::HermiteExpansion;

/// Isotropic sampling grid for the time-frequency plane: every `x_j` uses
/// `x` and every `ξ_j` uses `xi`. Text form `"xmin:xmax:n,ximin:ximax:n"`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GridSpec {
    pub x: UniformAxis,
    pub xi: UniformAxis,
}

impl GridSpec {
    pub fn new(x: UniformAxis, xi: UniformAxis) -> Self {
        Self { x, xi }
    }

    /// `[−extent, extent]` with `n` nodes on both axes.
    pub fn symmetric(extent: f64, n: usize) -> Self {
        let a = UniformAxis::new(-extent, extent, n);
        Self { x: a, xi: a }
    }

    /// The same extents with step halved.
    pub fn refined(&self) -> Self {
        let r = |a: UniformAxis| UniformAxis::new(a.min, a.max, 2 * a.n - 1);
        Self {
            x: r(self.x),
            xi: r(self.xi),
        }
    }

    /// Samples `g(x, ξ)` in dimension `dim`.
    pub fn sample<F: Fn(&[f64], &[f64]) -> Complex64>(&self, dim: usize, g: F) -> Result<PlaneGrid> {
        PlaneGrid::isotropic(dim, self.x, self.xi, g)
    }
}

fn parse_axis(s: &str) -> Result<UniformAxis> {
    let err = |reason: String| Error::Parse {
        field: "grid".into(),
        reason,
    };
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(err(format!("axis `{s}` is not min:max:n")));
    }
    let min: f64 = parts[0].trim().parse().map_err(|e| err(format!("`{}`: {e}", parts[0])))?;
    let max: f64 = parts[1].trim().parse().map_err(|e| err(format!("`{}`: {e}", parts[1])))?;
    let n: usize = parts[2].trim().parse().map_err(|e| err(format!("`{}`: {e}", parts[2])))?;
    if n < 2 || !(max > min) {
        return Err(err(format!("axis `{s}` needs max > min and n >= 2")));
    }
    Ok(UniformAxis::new(min, max, n))
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once(',').ok_or_else(|| Error::Parse {
            field: "grid".into(),
            reason: format!("`{s}` is not xmin:xmax:n,ximin:ximax:n"),
        })?;
        Ok(Self {
            x: parse_axis(a)?,
            xi: parse_axis(b)?,
        })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{},{}:{}:{}",
            self.x.min, self.x.max, self.x.n, self.xi.min, self.xi.max, self.xi.n
        )
    }
}

/// `V_φf(x, ξ) · ω(x + iξ)`, with the Gaussian factor of the STFT and the
/// weight combined in log space before exponentiation.
pub fn weighted_stft(e: &HermiteExpansion, w: &WeightSpec, x: &[f64], xi: &[f64]) -> Complex64 {
    let b = bargmann_series(e, &ComplexPoint::bridge(x, xi));
    if b == Complex64::new(0.0, 0.0) {
        return b;
    }
    b * exp_c(stft_factor_ln(x, xi) + w.ln_eval_parts(x, xi))
}

/// `‖V_φf · ω‖_{L^{p,q}}` sampled on `grid`.
pub fn modulation_norm(e: &HermiteExpansion, w: &WeightSpec, p: f64, q: f64, grid: &GridSpec) -> Result<f64> {
    w.validate()?;
    let g = grid.sample(e.dim(), |x, xi| weighted_stft(e, w, x, xi))?;
    mixed_norm(&g, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MultiIndex;

    #[test]
    fn grid_text_form_round_trips() {
        let g: GridSpec = "-6:6:121,-5.5:5.5:111".parse().unwrap();
        assert_eq!(g.x, UniformAxis::new(-6.0, 6.0, 121));
        assert_eq!(g.to_string().parse::<GridSpec>().unwrap(), g);
        assert!("1:0:5,0:1:5".parse::<GridSpec>().is_err());
        assert!("0:1:5".parse::<GridSpec>().is_err());
    }

    #[test]
    fn window_has_unit_modulation_norm() {
        let phi = HermiteExpansion::basis(MultiIndex::single(0));
        let n = modulation_norm(&phi, &WeightSpec::Unit, 2.0, 2.0, &GridSpec::symmetric(10.0, 201)).unwrap();
        assert!((n - 1.0).abs() < 1e-3);
    }

    #[test]
    fn zero_has_zero_norm() {
        let zero = HermiteExpansion::new(1, 4);
        let n = modulation_norm(&zero, &WeightSpec::Poly { r: 3.0 }, 1.0, 2.0, &GridSpec::symmetric(5.0, 21)).unwrap();
        assert_eq!(n, 0.0);
    }

    #[test]
    fn sup_norm_decreases_with_weight_exponent() {
        let h1 = HermiteExpansion::basis(MultiIndex::single(1));
        let grid = GridSpec::symmetric(8.0, 81);
        let mut prev = f64::INFINITY;
        for r in [-0.1, -0.3, -0.6] {
            let n = modulation_norm(&h1, &WeightSpec::Gs { s: 0.5, t: 0.5, r }, f64::INFINITY, f64::INFINITY, &grid).unwrap();
            assert!(n.is_finite() && n < prev);
            prev = n;
        }
    }
}
