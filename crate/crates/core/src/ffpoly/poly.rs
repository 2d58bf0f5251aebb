use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldSpec;
use crate::error::{Error, Result};

/// Dense univariate polynomial over a prime field.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector never carries trailing
/// zeros, so the zero polynomial is the empty vector and `degree()` returns
/// `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, reducing each mod p.
    pub fn new(field: FieldSpec, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        Self::from_reduced(field, coeffs)
    }

    pub(crate) fn from_reduced(field: FieldSpec, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: FieldSpec, c: u64) -> Self {
        Self::from_reduced(field, vec![field.reduce(c)])
    }

    /// `c * x^e`
    pub fn monomial(field: FieldSpec, c: u64, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = field.reduce(c);
        Self::from_reduced(field, coeffs)
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// Polynomial over F_2 whose bit `i` is the coefficient of `x^i`.
    pub fn from_bitmask(mask: u64) -> Self {
        let coeffs = (0..64 - mask.leading_zeros())
            .map(|i| ((mask >> i) & 1) as u32)
            .collect();
        Self { field: FieldSpec::GF2, coeffs }
    }

    /// Inverse of [`from_bitmask`](Self::from_bitmask); `None` unless over F_2 with degree < 64.
    pub fn to_bitmask(&self) -> Option<u64> {
        if self.field.p() != 2 || self.coeffs.len() > 64 {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .enumerate()
                .fold(0u64, |m, (i, &c)| m | (u64::from(c) << i)),
        )
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }

    /// Largest `m` with `x^m | self`. Zero for the zero polynomial.
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == 0).count()
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_reduced(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides out the leading coefficient; returns `(unit, monic)`.
    pub fn to_monic(&self) -> (u32, Self) {
        let lc = self.leading_coeff();
        if lc == 0 || lc == 1 {
            return (lc, self.clone());
        }
        (lc, self.scale(self.field.inv(lc)))
    }

    /// `self * x^k`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { field: self.field, coeffs }
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::from_reduced(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.reduce(i as u64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.p(), other.field.p()))
        }
    }

    fn assert_field(&self, other: &Self) {
        if let Err(e) = self.check_field(other) {
            panic!("{e}");
        }
    }

    /// Product truncated to degrees `< len`.
    pub fn mul_trunc(&self, other: &Self, len: usize) -> Self {
        self.assert_field(other);
        let f = self.field;
        let n = (self.coeffs.len() + other.coeffs.len()).saturating_sub(1).min(len);
        let mut out = vec![0u64; n];
        let p = u64::from(f.p());
        for (i, &a) in self.coeffs.iter().enumerate().take(n) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = (out[i + j] + u64::from(a) * u64::from(b)) % p;
            }
        }
        Self::from_reduced(f, out.into_iter().map(|c| c as u32).collect())
    }

    /// Long division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = self.field;
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(f), self.clone()));
        };
        let inv_lc = f.inv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = f.mul(rem[i + dd], inv_lc);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_reduced(f, quot), Self::from_reduced(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        match self.divrem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.checked_div(self).is_some()
    }

    /// Monic gcd. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.to_monic().1)
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Self::one(self.field).rem(modulus).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

/// Canonical order: zero first, then by degree, then coefficients from the top
/// down. Over F_2 this is numeric order of the bitmask.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_reduced(f, (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_reduced(f, (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let f = self.field;
        Polynomial::from_reduced(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Panics if the operands live over different fields.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_trunc(rhs, usize::MAX)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
