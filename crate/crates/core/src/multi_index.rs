//! Multi-indices `α ∈ ℕ^d`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::special::ln_factorial;

/// An element of `ℕ^d`.
///
/// Ordering is graded: first by total order `|α|`, then lexicographically,
/// so iterating a sorted collection visits low degrees first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "multi-index must have dimension >= 1");
        Self(entries)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    /// One-dimensional index `(k)`.
    pub fn single(k: u32) -> Self {
        Self(vec![k])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|α| = Σ α_j`.
    pub fn order(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// `ln(α!) = Σ ln(α_j!)`.
    pub fn ln_factorial(&self) -> f64 {
        self.0.iter().map(|&a| ln_factorial(a as u64)).sum()
    }

    /// All multi-indices of dimension `dim` with `|α| ≤ max_order`, in graded order.
    pub fn all_up_to(dim: usize, max_order: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for k in 0..=max_order {
            out.extend(Self::of_order(dim, k));
        }
        out
    }

    /// All multi-indices of dimension `dim` with `|α| = order`, lexicographically.
    pub fn of_order(dim: usize, order: u32) -> Vec<MultiIndex> {
        fn rec(dim: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == dim {
                prefix.push(left);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in 0..=left {
                prefix.push(a);
                rec(dim, left - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(dim, order, &mut Vec::with_capacity(dim), &mut out);
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        Self::new(v.to_vec())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        // C(N+d, d)
        assert_eq!(MultiIndex::all_up_to(1, 10).len(), 11);
        assert_eq!(MultiIndex::all_up_to(2, 10).len(), 66);
        assert_eq!(MultiIndex::all_up_to(3, 12).len(), 455);
    }

    #[test]
    fn graded_order() {
        let a = MultiIndex::from([3, 0]);
        let b = MultiIndex::from([0, 4]);
        assert!(a < b);
        let all = MultiIndex::all_up_to(2, 4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn factorial_is_product() {
        let a = MultiIndex::from([3, 2]);
        assert!((a.ln_factorial() - 12f64.ln()).abs() < 1e-15);
        assert_eq!(a.order(), 5);
    }
}
