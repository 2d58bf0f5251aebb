//! Closed-form counts of irreducibles and the quantities built from them.
//!
//! All counts are exact big integers and all densities exact rationals;
//! rounding happens only where a caller formats them.

mod bounds;
mod cyclotomic;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::numtheory::{divisors, factorize, is_prime};
use crate::sgalg::DegreeCensus;

pub use bounds::{bound_density, harmonic, partition_bound, partition_sum};
pub use cyclotomic::{cyclotomic_experiment, cyclotomic_sweep, mult_order, CyclotomicRecord, DIRECT_CHECK_LIMIT};

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Domain("mobius(0) is undefined".into()));
    }
    let mut sign = 1i8;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

fn check_q(q: u32) -> Result<()> {
    if is_prime(u64::from(q)) {
        Ok(())
    } else {
        Err(Error::NotPrime(u64::from(q)))
    }
}

fn big_pow(q: u32, e: u64) -> BigInt {
    BigInt::from(q).pow(e)
}

fn to_count(value: BigInt) -> BigUint {
    value.to_biguint().expect("counts are nonnegative")
}

/// `sum_{d | n} mu(n/d) q^d`, before division by `n`.
fn necklace_sum(n: u64, q: u32) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| BigInt::from(mobius(n / d).unwrap()) * big_pow(q, d))
        .sum()
}

/// Monic irreducibles of degree `n` over `F_q`: `(1/n) sum_{d|n} mu(n/d) q^d`.
pub fn count_aq(n: u64, q: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    check_q(q)?;
    let (quot, rem) = necklace_sum(n, q).div_rem(&BigInt::from(n));
    assert!(rem.is_zero(), "Möbius sum not divisible by n = {n}");
    Ok(to_count(quot))
}

/// Monic self-reciprocal irreducibles of degree `2n` over `F_q`.
pub fn count_rq(n: u64, q: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    check_q(q)?;
    let two_n = BigInt::from(2 * n);
    let numerator: BigInt = if q % 2 == 1 && n.is_power_of_two() {
        big_pow(q, n) - 1
    } else {
        divisors(n)
            .into_iter()
            .filter(|d| d % 2 == 1)
            .map(|d| BigInt::from(mobius(d).unwrap()) * big_pow(q, n / d))
            .sum()
    };
    let (quot, rem) = numerator.div_rem(&two_n);
    assert!(rem.is_zero(), "self-reciprocal count not integral at n = {n}, q = {q}");
    Ok(to_count(quot))
}

/// Irreducibles of degree `n` over F_2 with nonzero constant and linear
/// terms, via the self-reciprocal count. `s(0) = 1` (the empty product `g = 1`)
/// and `s(n) = 0` for negative `n`.
pub fn count_s(n: i64) -> BigUint {
    match n {
        n if n < 0 => BigUint::zero(),
        0 => BigUint::one(),
        n => count_rq(n as u64, 2).expect("n > 0, q = 2"),
    }
}

/// Classic / tame / wild split of the irreducibles of degree `n` in `F_2[x^2, x^3]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BCounts {
    pub classic: BigUint,
    pub tame: BigUint,
    pub wild: BigUint,
    pub total: BigUint,
}

pub fn b_counts(n: u64) -> Result<BCounts> {
    if n < 2 {
        return Err(Error::Domain("b(n) is defined for n >= 2".into()));
    }
    let s = |k: u64| count_s(k as i64);
    let ni = n as i64;
    let classic = count_aq(n, 2)? - s(n);
    let tame = count_s(ni - 2) + count_s(ni - 3);
    let wild = if n.is_multiple_of(2) {
        let half = s(n / 2);
        let pairs: BigUint = (1..n / 2).map(|k| s(k) * s(n - k)).sum();
        // C(s + 1, 2): unordered pairs with repetition of equal-degree factors
        pairs + (&half + 1u32) * &half / 2u32
    } else {
        (1..=n / 2).map(|k| s(k) * s(n - k)).sum()
    };
    let total = &classic + &tame + &wild;
    Ok(BCounts { classic, tame, wild, total })
}

/// `|F_q[S]^(n)|` counting every leading unit: `(q-1) q^#(S ∩ [0,n))`, or 0 at a gap.
pub fn algebra_count(q: u32, semigroup: &NumericalSemigroup, n: u64) -> Result<BigUint> {
    check_q(q)?;
    if !semigroup.contains(n) {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(q - 1) * BigUint::from(q).pow(semigroup.count_below(n)))
}

/// Monic members of degree `n`: `algebra_count / (q - 1)`.
pub fn monic_algebra_count(q: u32, semigroup: &NumericalSemigroup, n: u64) -> Result<BigUint> {
    Ok(algebra_count(q, semigroup, n)? / BigUint::from(q - 1))
}

/// `rho(n)` from a monic irreducible count. Undefined at gaps and at `n = 0`.
pub fn density(q: u32, semigroup: &NumericalSemigroup, n: u64, irreducible_count: &BigUint) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("density needs n >= 1".into()));
    }
    if !semigroup.contains(n) {
        return Err(Error::Domain(format!("{n} is a gap of {semigroup}; density undefined")));
    }
    let monic = monic_algebra_count(q, semigroup, n)?;
    Ok(BigRational::new(
        BigInt::from(irreducible_count.clone()),
        BigInt::from(monic),
    ))
}

/// One line of the count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: u64,
    pub a: BigUint,
    /// Only defined over F_2.
    pub s: Option<BigUint>,
    pub b_c: BigUint,
    pub b_t: BigUint,
    pub b_w: BigUint,
    pub b: BigUint,
    /// Monic members of degree `n`.
    pub algebra_size: BigUint,
    /// Absent at gaps of `S`.
    pub density: Option<BigRational>,
}

impl CountRow {
    /// Row for `F_2[x^2, x^3]` from the closed forms alone.
    pub fn closed_form(n: u64) -> Result<Self> {
        let counts = b_counts(n)?;
        let sgp = NumericalSemigroup::from_generators(&[2, 3]).expect("<2,3> is valid");
        let algebra_size = monic_algebra_count(2, &sgp, n)?;
        let density = density(2, &sgp, n, &counts.total)?;
        Ok(Self {
            n,
            a: count_aq(n, 2)?,
            s: Some(count_s(n as i64)),
            b_c: counts.classic,
            b_t: counts.tame,
            b_w: counts.wild,
            b: counts.total,
            algebra_size,
            density: Some(density),
        })
    }

    /// Row from a brute-force census of any `F_q[S]`.
    pub fn from_census(q: u32, semigroup: &NumericalSemigroup, census: &DegreeCensus) -> Result<Self> {
        let n = census.degree as u64;
        let b = BigUint::from(census.irreducible);
        let density = semigroup.contains(n).then(|| density(q, semigroup, n, &b)).transpose()?;
        Ok(Self {
            n,
            a: count_aq(n, q)?,
            s: (q == 2).then(|| count_s(n as i64)),
            b_c: census.classic.into(),
            b_t: census.tame.into(),
            b_w: census.wild.into(),
            b,
            algebra_size: monic_algebra_count(q, semigroup, n)?,
            density,
        })
    }
}

/// `numer/denom` with the denominator always written, e.g. `1/1`.
pub fn format_fraction(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn format_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = scaled.abs().round().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = places as usize)
}

/// Lossy conversion for plotting-style output.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
