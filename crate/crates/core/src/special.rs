//! Log-space arithmetic helpers shared by every module.

/// `ln(n!)`.
///
/// Exact products are used while they are representable; beyond that the
/// log-gamma function takes over.
pub fn ln_factorial(n: u64) -> f64 {
    if n <= 170 {
        let mut acc = 1.0f64;
        for k in 2..=n {
            acc *= k as f64;
        }
        acc.ln()
    } else {
        libm::lgamma(n as f64 + 1.0)
    }
}

/// `ln Γ(x)` for positive real `x`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// `ln Σ exp(v_i)` without overflow. Returns `-inf` for an empty input.
pub fn log_sum_exp<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let values: Vec<f64> = values.into_iter().collect();
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    let sum: f64 = values.iter().map(|v| (v - max).exp()).sum();
    max + sum.ln()
}

/// Pairwise (cascade) summation with a fixed reduction tree, so that the result
/// only depends on the order of the input.
pub fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + std::ops::Add<Output = T> + Default,
{
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().fold(T::default(), |a, &b| a + b);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_factorial_small_values() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert!((ln_factorial(5) - 120f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn ln_factorial_is_continuous_across_switchover() {
        let a = ln_factorial(170) + 171f64.ln();
        let b = ln_factorial(171);
        assert!((a - b).abs() / b < 1e-13);
    }

    #[test]
    fn log_sum_exp_handles_large_arguments() {
        let v = log_sum_exp([1000.0, 1000.0]);
        assert!((v - (1000.0 + 2f64.ln())).abs() < 1e-12);
        assert_eq!(log_sum_exp(std::iter::empty()), f64::NEG_INFINITY);
    }

    #[test]
    fn pairwise_sum_matches_naive_for_exact_data() {
        let v: Vec<f64> = (0..1000).map(|k| k as f64).collect();
        assert_eq!(pairwise_sum(&v), 499500.0);
    }
}
