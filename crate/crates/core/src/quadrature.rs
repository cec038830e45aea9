//! Gauss rules and uniform-grid weights used by the transforms.

use std::f64::consts::PI;

/// Gauss–Hermite rule for `∫ g(y) e^{-y²} dy`.
///
/// Besides the classical weights the rule stores the *modified* weights
/// `w_i e^{y_i²}`, so that `∫ g(y) dy ≈ Σ W_i g(y_i)` can be evaluated for
/// integrands that already carry their own Gaussian decay. The modified
/// weights are assembled in log space and stay finite for every order.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    modified: Vec<f64>,
}

impl GaussHermite {
    /// Builds the `n`-point rule by Newton iteration on the orthonormal
    /// Hermite recurrence. Nodes are sorted increasingly.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Hermite order must be positive");
        let nf = n as f64;
        let m = n.div_ceil(2);
        let mut pos_nodes = vec![0.0f64; m];
        let mut ln_w = vec![0.0f64; m];
        let pim4 = PI.powf(-0.25);
        let mut z = 0.0f64;
        for i in 0..m {
            z = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
                1 => z - 1.14 * nf.powf(0.426) / z,
                2 => 1.86 * z - 0.86 * pos_nodes[0],
                3 => 1.91 * z - 0.91 * pos_nodes[1],
                _ => 2.0 * z - pos_nodes[i - 2],
            };
            let mut pp = 1.0;
            for _ in 0..100 {
                let (p1, p2) = orthonormal_pair(n, z, pim4);
                pp = (2.0 * nf).sqrt() * p2;
                let dz = p1 / pp;
                z -= dz;
                if dz.abs() <= 1e-15 * z.abs().max(1.0) {
                    break;
                }
            }
            let (_, p2) = orthonormal_pair(n, z, pim4);
            pp = if p2 != 0.0 { (2.0 * nf).sqrt() * p2 } else { pp };
            pos_nodes[i] = z;
            ln_w[i] = 2f64.ln() - 2.0 * pp.abs().ln();
        }
        let mut nodes = Vec::with_capacity(n);
        let mut lnw = Vec::with_capacity(n);
        for i in 0..m {
            nodes.push(-pos_nodes[i]);
            lnw.push(ln_w[i]);
        }
        let start = if n % 2 == 1 { m - 1 } else { m };
        for i in (0..start).rev() {
            nodes.push(pos_nodes[i]);
            lnw.push(ln_w[i]);
        }
        if n % 2 == 1 {
            // middle node is exactly zero for odd orders
            nodes[m - 1] = 0.0;
        }
        let weights = lnw.iter().map(|l| l.exp()).collect();
        let modified = nodes
            .iter()
            .zip(&lnw)
            .map(|(y, l)| (l + y * y).exp())
            .collect();
        Self {
            nodes,
            weights,
            modified,
        }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights for the `e^{-y²}` measure.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weights `w_i e^{y_i²}` for the Lebesgue measure.
    pub fn modified_weights(&self) -> &[f64] {
        &self.modified
    }
}

/// Returns `(p̂_n(z), p̂_{n-1}(z))` for the polynomials orthonormal with respect
/// to `e^{-y²}`.
fn orthonormal_pair(n: usize, z: f64, seed: f64) -> (f64, f64) {
    let mut p1 = seed;
    let mut p2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, p2)
}

/// Gauss–Legendre rule on an interval.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// `n`-point rule on `[a, b]`.
    pub fn new(n: usize, a: f64, b: f64) -> Self {
        assert!(n >= 1, "Gauss-Legendre order must be positive");
        let m = n.div_ceil(2);
        let xm = 0.5 * (b + a);
        let xl = 0.5 * (b - a);
        let nf = n as f64;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..m {
            let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut pp = 0.0;
            for _ in 0..100 {
                let mut p1 = 1.0;
                let mut p2 = 0.0;
                for j in 0..n {
                    let jf = j as f64;
                    let p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
                }
                pp = nf * (z * p1 - p2) / (z * z - 1.0);
                let z1 = z;
                z = z1 - p1 / pp;
                if (z - z1).abs() <= 1e-15 {
                    break;
                }
            }
            nodes[i] = xm - xl * z;
            nodes[n - 1 - i] = xm + xl * z;
            let w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Uniformly spaced axis `min, min+step, …, max` with `n ≥ 2` nodes.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct UniformAxis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl UniformAxis {
    pub fn new(min: f64, max: f64, n: usize) -> Self {
        Self { min, max, n }
    }

    pub fn step(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            (self.max - self.min) / (self.n - 1) as f64
        }
    }

    pub fn node(&self, i: usize) -> f64 {
        if self.n < 2 {
            self.min
        } else {
            self.min + self.step() * i as f64
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Trapezoidal weights (half weight at both ends).
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let h = self.step();
        (0..self.n)
            .map(|i| if i == 0 || i + 1 == self.n { 0.5 * h } else { h })
            .collect()
    }
}
