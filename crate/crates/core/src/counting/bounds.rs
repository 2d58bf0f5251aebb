use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `H_m = 1 + 1/2 + ... + 1/m`, with `H_0 = 0`.
pub fn harmonic(m: u64) -> BigRational {
    (1..=m).fold(BigRational::zero(), |acc, k| acc + BigRational::new(BigInt::one(), BigInt::from(k)))
}

/// Upper bound on the F_2[x^2, x^3] density at degree `n`: `4/n + H_(n-1)/n`.
pub fn bound_density(n: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Domain("bound_density needs n >= 2".into()));
    }
    let n_big = BigInt::from(n);
    Ok(BigRational::new(BigInt::from(4), n_big.clone()) + harmonic(n - 1) / BigRational::from_integer(n_big))
}

/// Sum over partitions `n = m_1 + ... + m_k` (`m_1 >= ... >= m_k >= 1`) of `1/(m_1 ... m_k)`.
pub fn partition_sum(n: u64, k: u64) -> Result<BigRational> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("partition_sum needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(partitions_below(n, k, n))
}

/// Partitions of `n` into exactly `k` parts, each at most `max`.
fn partitions_below(n: u64, k: u64, max: u64) -> BigRational {
    if k == 0 {
        return if n == 0 { BigRational::one() } else { BigRational::zero() };
    }
    // the remaining k - 1 parts need at least k - 1, and all parts are <= the first
    let hi = max.min(n - (k - 1));
    let lo = n.div_ceil(k);
    (lo..=hi)
        .map(|first| partitions_below(n - first, k - 1, first) / BigRational::from_integer(first.into()))
        .sum()
}

/// `2^(k-1) log^(k-1)(n) / n`, the bound on [`partition_sum`], with the
/// logarithm taken in `log_base`.
pub fn partition_bound(n: u64, k: u64, log_base: f64) -> f64 {
    let l = (n as f64).ln() / log_base.ln();
    (2.0 * l).powi((k - 1) as i32) / n as f64
}
