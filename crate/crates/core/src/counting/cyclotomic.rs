use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffpoly::Polynomial;
use crate::numtheory::{divisors, is_prime, pow_mod, primes_below};
use crate::sgalg::{is_irreducible_in_algebra, AlgebraContext};

/// Primes up to this bound also get a direct algebra factorization of `x^p + 1`.
pub const DIRECT_CHECK_LIMIT: u64 = 31;

/// Multiplicative order of `a` modulo the prime `p`.
pub fn mult_order(a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a.is_multiple_of(p) {
        return Err(Error::Domain(format!("{a} is not a unit mod {p}")));
    }
    let a = a % p;
    // divisors come back ascending, and p - 1 itself always qualifies
    Ok(divisors(p - 1).into_iter().find(|&d| pow_mod(a, d, p) == 1).unwrap())
}

/// Data on `x^p + 1 = (x + 1) Phi_p` in `F_2[x^2, x^3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicRecord {
    pub p: u64,
    pub p_mod_8: u64,
    pub ord_2: u64,
    pub primitive_root: bool,
    /// Order-based verdict: `x^p + 1` is an atom iff `Phi_p` is irreducible over F_2.
    pub irreducible_in_algebra: bool,
    /// Number of irreducible factors of `Phi_p` over F_2.
    pub factor_count: u64,
    /// Verdict from factoring `x^p + 1` directly, for `p <= DIRECT_CHECK_LIMIT`.
    pub direct: Option<bool>,
}

impl CyclotomicRecord {
    pub fn is_consistent(&self) -> bool {
        self.direct.is_none_or(|d| d == self.irreducible_in_algebra)
    }
}

pub fn cyclotomic_experiment(p: u64) -> Result<CyclotomicRecord> {
    if p == 2 {
        return Err(Error::Domain("p must be odd".into()));
    }
    let ord_2 = mult_order(2, p)?;
    let primitive_root = ord_2 == p - 1;
    let direct = if p <= DIRECT_CHECK_LIMIT {
        let f = Polynomial::from_bitmask((1 << p) | 1);
        Some(is_irreducible_in_algebra(&AlgebraContext::friendly(), &f)?.is_irreducible())
    } else {
        None
    };
    Ok(CyclotomicRecord {
        p,
        p_mod_8: p % 8,
        ord_2,
        primitive_root,
        irreducible_in_algebra: primitive_root,
        factor_count: (p - 1) / ord_2,
        direct,
    })
}

/// Records for every prime `2 < p < bound`, ascending.
pub fn cyclotomic_sweep(bound: u64) -> Result<Vec<CyclotomicRecord>> {
    primes_below(bound)
        .into_par_iter()
        .filter(|&p| p > 2)
        .map(cyclotomic_experiment)
        .collect()
}
