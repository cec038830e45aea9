use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hermite::GaussianSpec;

/// Distance from 1 within which an eigenvalue of `A` counts as 1.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussianMembership {
    pub member: bool,
    /// Eigenvalues of `A`, as `[re, im]` pairs.
    #[serde(serialize_with = "ser_complex_list")]
    pub eigenvalues: Vec<Complex64>,
}

fn ser_complex_list<S: serde::Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&[c.re, c.im])?;
    }
    seq.end()
}

/// Whether `C e^{−⟨Ax,x⟩/2 + L(x)}` lies in `𝚺 = 𝚺_{1/2}`.
///
/// Its Bargmann transform is `e^{⟨Bz,z⟩/2 + ⟨b,z⟩}` up to a constant, with
/// `B = (I − A)(I + A)^{-1}`; the coefficients decay faster than every
/// geometric rate exactly when `B = 0`, i.e. when `A = I`. The linear part
/// only contributes factorial decay and never matters.
pub fn gaussian_membership(a: &DMatrix<Complex64>, l: &[Complex64]) -> Result<GaussianMembership> {
    GaussianSpec::new(a.clone(), l.to_vec(), Complex64::new(1.0, 0.0))?;
    let schur = Schur::try_new(a.clone(), f64::EPSILON, 10_000)
        .ok_or_else(|| invalid("a", "eigenvalue iteration did not converge"))?;
    let eigenvalues: Vec<Complex64> = schur
        .eigenvalues()
        .ok_or_else(|| invalid("a", "eigenvalues unavailable"))?
        .iter()
        .copied()
        .collect();
    let member = eigenvalues
        .iter()
        .all(|ev| (ev - Complex64::new(1.0, 0.0)).norm() <= EIGENVALUE_TOLERANCE);
    Ok(GaussianMembership { member, eigenvalues })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_is_member() {
        let a = DMatrix::from_diagonal_element(2, 2, c(1.0));
        assert!(gaussian_membership(&a, &[c(0.0), c(0.0)]).unwrap().member);
        let l = [Complex64::new(1.0, 1.0)];
        assert!(gaussian_membership(&DMatrix::from_element(1, 1, c(1.0)), &l).unwrap().member);
    }

    #[test]
    fn dilations_are_not() {
        let a = DMatrix::from_diagonal_element(1, 1, c(2.0));
        let m = gaussian_membership(&a, &[c(0.0)]).unwrap();
        assert!(!m.member);
        assert!((m.eigenvalues[0] - c(2.0)).norm() < 1e-14);
        let a = DMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(3.0)]);
        assert!(!gaussian_membership(&a, &[c(0.0), c(0.0)]).unwrap().member);
    }

    #[test]
    fn rotated_identity_is_member() {
        let (s, co) = 0.3f64.sin_cos();
        let r = DMatrix::from_row_slice(2, 2, &[co, -s, s, co]);
        let a = (&r * DMatrix::identity(2, 2) * r.transpose()).map(c);
        assert!(gaussian_membership(&a, &[c(0.0), c(0.0)]).unwrap().member);
    }

    #[test]
    fn rejects_indefinite_real_part() {
        let a = DMatrix::from_diagonal_element(1, 1, c(-1.0));
        assert!(gaussian_membership(&a, &[c(0.0)]).is_err());
    }
}
