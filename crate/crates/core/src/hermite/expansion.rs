use std::collections::BTreeMap;

use num_complex::Complex64;

use super::hermite_table;
use crate::error::{Error, Result};
use crate::MultiIndex;

/// Coefficients below this magnitude are stored as exact zeros.
pub const ZERO_FLOOR: f64 = 1e-300;

/// Truncated Hermite series `f = Σ_{|α| ≤ N} c_α h_α`.
///
/// Absent keys are zero. Keys are kept in graded order, which fixes the
/// summation order of every reduction over the table.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteExpansion {
    dim: usize,
    cutoff: u32,
    coeffs: BTreeMap<MultiIndex, Complex64>,
    /// Diagnostics produced while the expansion was computed.
    pub warnings: Vec<String>,
}

impl HermiteExpansion {
    /// Empty (zero) expansion.
    pub fn new(dim: usize, cutoff: u32) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Self {
            dim,
            cutoff,
            coeffs: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    /// Expansion with a single coefficient `1` on `α`, i.e. `h_α` itself.
    pub fn basis(alpha: MultiIndex) -> Self {
        let mut e = Self::new(alpha.dim(), alpha.order() as u32);
        e.coeffs.insert(alpha, Complex64::new(1.0, 0.0));
        e
    }

    /// Builds an expansion from `(α, c_α)` pairs; repeated keys are summed.
    pub fn from_terms<I>(dim: usize, cutoff: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Complex64)>,
    {
        let mut e = Self::new(dim, cutoff);
        for (alpha, c) in terms {
            let prev = e.get(&alpha);
            e.set(alpha, prev + c)?;
        }
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Maximal total degree `N_max`.
    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Sets `c_α`. Rejects keys of the wrong dimension or above the cutoff.
    pub fn set(&mut self, alpha: MultiIndex, c: Complex64) -> Result<()> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: alpha.dim(),
            });
        }
        if alpha.order() > self.cutoff as u64 {
            return Err(crate::error::invalid(
                "alpha",
                format!("|{alpha}| exceeds cutoff {}", self.cutoff),
            ));
        }
        if c.norm() < ZERO_FLOOR {
            self.coeffs.remove(&alpha);
        } else {
            self.coeffs.insert(alpha, c);
        }
        Ok(())
    }

    pub fn get(&self, alpha: &MultiIndex) -> Complex64 {
        self.coeffs.get(alpha).copied().unwrap_or_default()
    }

    /// Non-zero coefficients in graded order.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.coeffs.iter()
    }

    /// Number of stored (non-zero) coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Applies `c_α ↦ g(α, c_α)` to every stored coefficient.
    pub fn map<F>(&self, mut g: F) -> Self
    where
        F: FnMut(&MultiIndex, Complex64) -> Complex64,
    {
        let mut out = Self::new(self.dim, self.cutoff);
        out.warnings = self.warnings.clone();
        for (a, &c) in &self.coeffs {
            let v = g(a, c);
            if v.norm() >= ZERO_FLOOR {
                out.coeffs.insert(a.clone(), v);
            }
        }
        out
    }

    /// Largest `|c_α|` over each total degree `k = 0..=cutoff`.
    pub fn degree_profile(&self) -> Vec<f64> {
        let mut prof = vec![0.0; self.cutoff as usize + 1];
        for (a, c) in &self.coeffs {
            let k = a.order() as usize;
            prof[k] = f64::max(prof[k], c.norm());
        }
        prof
    }

    /// `Σ_{|α| ≤ N} c_α h_α(x)`, summed by increasing `|α|`.
    pub fn synthesize(&self, x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), self.dim, "point dimension must match the expansion");
        let tables: Vec<Vec<f64>> = x
            .iter()
            .map(|&xi| hermite_table(self.cutoff as usize, xi))
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, c) in &self.coeffs {
            let h: f64 = a
                .entries()
                .iter()
                .zip(&tables)
                .map(|(&k, t)| t[k as usize])
                .product();
            acc += c * h;
        }
        acc
    }

    /// Harmonic oscillator power `H^N`, diagonal in the Hermite basis:
    /// `c_α ↦ (2|α| + d)^N c_α`.
    ///
    /// The multiplier is formed in log space, so a tiny coefficient times a
    /// huge eigenvalue power does not overflow in between.
    pub fn apply_h(&self, n: u32) -> Self {
        let d = self.dim as f64;
        self.map(|a, c| {
            if n == 0 {
                return c;
            }
            let lambda = 2.0 * a.order() as f64 + d;
            let ln_mult = n as f64 * lambda.ln();
            if ln_mult < 600.0 {
                c * lambda.powi(n as i32)
            } else {
                let r = (c.norm().ln() + ln_mult).exp();
                Complex64::from_polar(r, c.arg())
            }
        })
    }

    /// `(e1, e2)_{L²} = Σ c_α(e1) conj(c_α(e2))`.
    pub fn l2_inner(&self, other: &Self) -> Result<Complex64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, c) in &self.coeffs {
            if let Some(b) = other.coeffs.get(a) {
                acc += c * b.conj();
            }
        }
        Ok(acc)
    }

    /// `‖e‖_{L²}`.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Same coefficients under a larger (or equal) cutoff.
    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        let mut out = Self::new(self.dim, cutoff);
        out.warnings = self.warnings.clone();
        for (a, &c) in &self.coeffs {
            if a.order() <= cutoff as u64 {
                out.coeffs.insert(a.clone(), c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn synthesize_ground_state_and_zero() {
        let e = HermiteExpansion::basis(MultiIndex::single(0));
        assert!((e.synthesize(&[0.0]).re - PI.powf(-0.25)).abs() < 1e-16);
        let z = HermiteExpansion::new(1, 5);
        assert_eq!(z.synthesize(&[0.3]), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn harmonic_oscillator_eigenvalues() {
        let e = HermiteExpansion::basis(MultiIndex::single(0)).apply_h(3);
        assert_eq!(e.get(&MultiIndex::single(0)), c(1.0));
        let e = HermiteExpansion::basis(MultiIndex::single(2)).apply_h(1);
        assert_eq!(e.get(&MultiIndex::single(2)), c(5.0));
    }

    #[test]
    fn repeated_application_matches_power() {
        let e = HermiteExpansion::from_terms(
            2,
            6,
            [
                (MultiIndex::from([0, 0]), Complex64::new(0.3, -0.1)),
                (MultiIndex::from([1, 2]), Complex64::new(-1.7, 0.25)),
                (MultiIndex::from([6, 0]), Complex64::new(1e-3, 2.0)),
            ],
        )
        .unwrap();
        let once = e.apply_h(4);
        let mut rep = e.clone();
        for _ in 0..4 {
            rep = rep.apply_h(1);
        }
        for (a, v) in once.iter() {
            let w = rep.get(a);
            assert!((v - w).norm() <= 4.0 * f64::EPSILON * v.norm());
        }
    }

    #[test]
    fn huge_powers_do_not_overflow_small_coefficients() {
        let mut e = HermiteExpansion::new(1, 60);
        e.set(MultiIndex::single(60), c(1e-250)).unwrap();
        let out = e.apply_h(100);
        let v = out.get(&MultiIndex::single(60)).re;
        let want = (1e-250f64.ln() + 100.0 * 121f64.ln()).exp();
        assert!((v - want).abs() / want < 1e-12);
    }

    #[test]
    fn inner_products_of_basis_functions() {
        let h1 = HermiteExpansion::basis(MultiIndex::single(1));
        let h2 = HermiteExpansion::basis(MultiIndex::single(2));
        assert_eq!(h1.l2_inner(&h1).unwrap(), c(1.0));
        assert_eq!(h1.l2_inner(&h2).unwrap(), c(0.0));
        let other = HermiteExpansion::basis(MultiIndex::from([1, 0]));
        assert!(matches!(h1.l2_inner(&other), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rejects_keys_above_cutoff() {
        let mut e = HermiteExpansion::new(1, 3);
        assert!(e.set(MultiIndex::single(4), c(1.0)).is_err());
        e.set(MultiIndex::single(2), c(1e-301)).unwrap();
        assert!(e.is_empty());
    }
}
