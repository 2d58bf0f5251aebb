//! Irreducible elements of numerical semigroup algebras `F_q[S]` over prime
//! fields: membership, irreducibility with witnesses, the classic / tame /
//! wild trichotomy of `F_2[x^2, x^3]`, closed-form counts, and the bounds that
//! drive the atomic density of these algebras to zero.

pub mod counting;
mod error;
pub mod ffpoly;
pub mod numsgp;
pub mod numtheory;
pub mod sgalg;

pub use error::{Error, Result};
pub use ffpoly::{FieldSpec, FqFactorization, Polynomial};
pub use numsgp::NumericalSemigroup;
pub use sgalg::{AlgebraContext, AlgebraVerdict, FactorShape, FriendlyClass};
