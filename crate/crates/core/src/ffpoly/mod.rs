//! Univariate polynomials over prime fields: arithmetic, irreducibility,
//! factorization, and the reciprocal / Q-transform maps.

mod factor;
mod field;
pub mod gf2;
mod parse;
mod poly;
mod transform;

pub use factor::{factor_fq, factor_fq_generic, is_irreducible_fq, FqFactorization};
pub use field::FieldSpec;
pub use parse::{format_bitmask, format_poly, parse_bitmask, parse_poly, MAX_PARSE_EXPONENT};
pub use poly::Polynomial;
pub use transform::{is_self_reciprocal, q_transform, reciprocal};

/// `(a, b) -> a.divrem(b)`
pub fn poly_divrem(a: &Polynomial, b: &Polynomial) -> crate::Result<(Polynomial, Polynomial)> {
    a.divrem(b)
}

pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> crate::Result<Polynomial> {
    a.gcd(b)
}
