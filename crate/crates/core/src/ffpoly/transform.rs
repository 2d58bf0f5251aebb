use super::poly::Polynomial;
use crate::error::{Error, Result};

/// `f*(x) = x^deg(f) f(1/x)`: the coefficient vector reversed.
pub fn reciprocal(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs: Vec<u64> = f.coeffs().iter().rev().map(|&c| u64::from(c)).collect();
    Ok(Polynomial::new(f.field(), coeffs))
}

pub fn is_self_reciprocal(f: &Polynomial) -> bool {
    !f.is_zero() && f.coeffs().iter().eq(f.coeffs().iter().rev())
}

/// `f^Q(x) = x^n f(x + 1/x)` for `n = deg f`, expanded as
/// `sum_i c_i (x^2 + 1)^i x^(n-i)`.
pub fn q_transform(f: &Polynomial) -> Result<Polynomial> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let field = f.field();
    let x2_plus_1 = Polynomial::new(field, [1, 0, 1]);
    let mut power = Polynomial::one(field);
    let mut acc = Polynomial::zero(field);
    for (i, &c) in f.coeffs().iter().enumerate() {
        if c != 0 {
            acc = &acc + &power.shift(n - i).scale(c);
        }
        power = &power * &x2_plus_1;
    }
    Ok(acc)
}
