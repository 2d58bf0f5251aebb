//! The semigroup algebra `F_q[S]`: polynomials over `F_q` whose support lies in `S`.
//!
//! An element is irreducible here when it cannot be written as a product of
//! two positive-degree members. Because membership depends only on the
//! support, any factorization can be rescaled to a monic left factor, so the
//! search runs over the monic divisors produced by the `F_q[x]` factorization.

mod census;
mod enumerate;
mod subproduct;

use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::{factor_fq, gf2, FieldSpec, FqFactorization, Polynomial};
use crate::numsgp::NumericalSemigroup;

pub use census::{census, irreducible_listing, DegreeCensus, ListedAtom};
pub use enumerate::MemberIter;
pub use subproduct::find_subproduct;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraContext {
    field: FieldSpec,
    semigroup: NumericalSemigroup,
    /// Gaps as a bitmask when they all fit below 64 (always true for small S).
    gap_mask: Option<u64>,
}

impl AlgebraContext {
    pub fn new(field: FieldSpec, semigroup: NumericalSemigroup) -> Self {
        let gap_mask = (semigroup.frobenius() < 64)
            .then(|| semigroup.gaps().iter().fold(0u64, |m, &g| m | (1 << g)));
        Self { field, semigroup, gap_mask }
    }

    /// `F_2[x^2, x^3]`
    pub fn friendly() -> Self {
        Self::new(
            FieldSpec::GF2,
            NumericalSemigroup::from_generators(&[2, 3]).expect("<2,3> is valid"),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// True for q = 2 and S = <2,3>, the only setting with a type trichotomy.
    pub fn is_friendly(&self) -> bool {
        self.field.p() == 2 && self.semigroup.min_generators() == [2, 3]
    }

    /// Support contained in `S`. The zero polynomial is a member.
    pub fn is_member(&self, f: &Polynomial) -> bool {
        if let (Some(gaps), Some(mask)) = (self.gap_mask, f.to_bitmask()) {
            return mask & gaps == 0;
        }
        f.support().all(|i| self.semigroup.contains(i as u64))
    }

    #[inline]
    fn is_member_mask(&self, mask: u64) -> bool {
        match self.gap_mask {
            Some(gaps) => mask & gaps == 0,
            None => Polynomial::from_bitmask(mask).support().all(|i| self.semigroup.contains(i as u64)),
        }
    }
}

impl fmt::Display for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.semigroup)
    }
}

/// Types of irreducibles in `F_2[x^2, x^3]`, read off their `F_2[x]` factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FriendlyClass {
    /// Irreducible in `F_2[x]` as well.
    Classic,
    /// `x^m g` with `m` in {2, 3} and `g` irreducible with nonzero constant
    /// term; `g = 1` covers `x^2` and `x^3`.
    Tame(u8),
    /// `g h` with `g`, `h` irreducible, each with nonzero constant and linear terms.
    Wild,
}

impl fmt::Display for FriendlyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FriendlyClass::Classic => f.write_str("classic"),
            FriendlyClass::Tame(m) => write!(f, "tame({m})"),
            FriendlyClass::Wild => f.write_str("wild"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraVerdict {
    Unit,
    NotMember,
    /// The class is filled in only over `F_2[x^2, x^3]`.
    Irreducible(Option<FriendlyClass>),
    /// `witness_g * witness_h = f`, both members of positive degree, `witness_g` monic.
    Reducible { witness_g: Polynomial, witness_h: Polynomial },
}

impl AlgebraVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, AlgebraVerdict::Irreducible(_))
    }
}

/// `f = x^m * (k irreducibles with nonzero constant term, counted with multiplicity)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactorShape {
    pub m: u32,
    pub k: u32,
}

impl FactorShape {
    /// `m < 2(F(S) + 1)` and (`k = 0` or `k <= q^F(S)`). Only meaningful for S other than N.
    pub fn within_bounds(&self, semigroup: &NumericalSemigroup, q: u32) -> bool {
        let frob = semigroup.frobenius();
        let m_ok = i64::from(self.m) < 2 * (frob + 1);
        let k_bound = u32::try_from(frob.max(0))
            .ok()
            .and_then(|e| u64::from(q).checked_pow(e))
            .unwrap_or(u64::MAX);
        m_ok && (self.k == 0 || u64::from(self.k) <= k_bound)
    }
}

/// Verdict plus the `F_q[x]` factorization it was derived from.
pub(crate) struct Analysis {
    pub verdict: AlgebraVerdict,
    pub factorization: Option<FqFactorization>,
}

pub(crate) fn analyze(ctx: &AlgebraContext, f: &Polynomial) -> Result<Analysis> {
    if f.field() != ctx.field {
        return Err(Error::FieldMismatch(f.field().p(), ctx.field.p()));
    }
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if !ctx.is_member(f) {
        return Ok(Analysis { verdict: AlgebraVerdict::NotMember, factorization: None });
    }
    if deg == 0 {
        return Ok(Analysis { verdict: AlgebraVerdict::Unit, factorization: None });
    }
    let fact = factor_fq(f)?;
    let verdict = match find_witness(ctx, f, &fact) {
        Some((g, h)) => AlgebraVerdict::Reducible { witness_g: g, witness_h: h },
        None => {
            let class = if ctx.is_friendly() { Some(classify_factorization(&fact, f)?) } else { None };
            AlgebraVerdict::Irreducible(class)
        }
    };
    Ok(Analysis { verdict, factorization: Some(fact) })
}

/// Irreducibility inside `F_q[S]`, with a witness when reducible.
///
/// The witness is the proper monic divisor `g` of least canonical order
/// (bitmask order over F_2) such that both `g` and `f / g` are members.
pub fn is_irreducible_in_algebra(ctx: &AlgebraContext, f: &Polynomial) -> Result<AlgebraVerdict> {
    analyze(ctx, f).map(|a| a.verdict)
}

/// Exponent vectors of every divisor strictly between 1 and f (up to units).
fn proper_exponent_vectors(mults: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let total: u64 = mults.iter().map(|&e| u64::from(e) + 1).product();
    (1..total.saturating_sub(1)).map(move |mut idx| {
        mults
            .iter()
            .map(|&e| {
                let radix = u64::from(e) + 1;
                let digit = (idx % radix) as u32;
                idx /= radix;
                digit
            })
            .collect()
    })
}

fn find_witness(ctx: &AlgebraContext, f: &Polynomial, fact: &FqFactorization) -> Option<(Polynomial, Polynomial)> {
    let mults: Vec<u32> = fact.factors().iter().map(|&(_, e)| e).collect();
    if let (Some(fmask), Some(masks)) = (
        f.to_bitmask(),
        fact.factors().iter().map(|(g, _)| g.to_bitmask()).collect::<Option<Vec<u64>>>(),
    ) {
        return find_witness_gf2(ctx, fmask, &masks, &mults)
            .map(|(g, h)| (Polynomial::from_bitmask(g), Polynomial::from_bitmask(h)));
    }
    let mut best: Option<(Polynomial, Polynomial)> = None;
    for exps in proper_exponent_vectors(&mults) {
        let mut g = Polynomial::one(ctx.field);
        for ((base, _), &e) in fact.factors().iter().zip(&exps) {
            g = &g * &base.pow(e);
        }
        if !ctx.is_member(&g) || best.as_ref().is_some_and(|(b, _)| *b <= g) {
            continue;
        }
        let h = f.checked_div(&g).expect("g divides f");
        if ctx.is_member(&h) {
            best = Some((g, h));
        }
    }
    best
}

fn find_witness_gf2(ctx: &AlgebraContext, f: u64, bases: &[u64], mults: &[u32]) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    for exps in proper_exponent_vectors(mults) {
        let mut g = 1u64;
        for (&base, &e) in bases.iter().zip(&exps) {
            for _ in 0..e {
                g = gf2::clmul(g, base) as u64;
            }
        }
        if !ctx.is_member_mask(g) || best.is_some_and(|(b, _)| b <= g) {
            continue;
        }
        let h = gf2::divrem(f, g).0;
        if ctx.is_member_mask(h) {
            best = Some((g, h));
        }
    }
    best
}

fn classify_factorization(fact: &FqFactorization, f: &Polynomial) -> Result<FriendlyClass> {
    if fact.is_irreducible() {
        return Ok(FriendlyClass::Classic);
    }
    let m = fact.x_multiplicity();
    let rest: Vec<&(Polynomial, u32)> = fact.factors().iter().filter(|(g, _)| g.coeff(0) != 0).collect();
    let rest_len: u32 = rest.iter().map(|(_, e)| e).sum();
    match (m, rest_len) {
        (2 | 3, 0) => Ok(FriendlyClass::Tame(m as u8)),
        (2 | 3, 1) => Ok(FriendlyClass::Tame(m as u8)),
        (0, 2) if rest.iter().all(|(g, _)| g.coeff(1) != 0) => Ok(FriendlyClass::Wild),
        _ => Err(Error::Unclassifiable(f.to_string())),
    }
}

/// Classic / tame / wild type of an irreducible element of `F_2[x^2, x^3]`.
pub fn classify_friendly(ctx: &AlgebraContext, f: &Polynomial) -> Result<FriendlyClass> {
    if !ctx.is_friendly() {
        return Err(Error::WrongContext);
    }
    match analyze(ctx, f)?.verdict {
        AlgebraVerdict::Irreducible(Some(class)) => Ok(class),
        AlgebraVerdict::NotMember => Err(Error::NotMember),
        _ => Err(Error::NotIrreducible),
    }
}

/// The `(m, k)` of `f = x^m f_1 ... f_k` in `F_q[x]`.
pub fn factorization_shape(ctx: &AlgebraContext, f: &Polynomial) -> Result<FactorShape> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !ctx.is_member(f) {
        return Err(Error::NotMember);
    }
    Ok(shape_of(&factor_fq(f)?))
}

pub(crate) fn shape_of(fact: &FqFactorization) -> FactorShape {
    let m = fact.x_multiplicity();
    FactorShape { m, k: fact.length() - m }
}
