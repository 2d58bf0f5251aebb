use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::FieldSpec;
use super::gf2;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// `unit * prod factor^multiplicity`, factors monic irreducible and sorted in
/// canonical polynomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqFactorization {
    unit: u32,
    factors: Vec<(Polynomial, u32)>,
}

impl FqFactorization {
    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn factors(&self) -> &[(Polynomial, u32)] {
        &self.factors
    }

    /// Sum of multiplicities.
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Multiplicity of the factor `x`.
    pub fn x_multiplicity(&self) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g.degree() == Some(1) && g.coeff(0) == 0)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Re-multiplies the factorization.
    pub fn expand(&self, field: FieldSpec) -> Polynomial {
        let mut acc = Polynomial::constant(field, u64::from(self.unit));
        for (g, e) in &self.factors {
            acc = &acc * &g.pow(*e);
        }
        acc
    }
}

impl fmt::Display for FqFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit != 1 || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (g, e) in &self.factors {
            let base = if g.support().count() > 1 { format!("({g})") } else { g.to_string() };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Deterministic per-input seed: FNV-1a over the field and coefficients.
fn seed_for(f: &Polynomial) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for word in std::iter::once(f.field().p()).chain(f.coeffs().iter().copied()) {
        for b in word.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Irreducibility over F_p. Constants are not irreducible.
pub fn is_irreducible_fq(f: &Polynomial) -> Result<bool> {
    let Some(n) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if n == 0 {
        return Ok(false);
    }
    if let Some(mask) = f.to_bitmask() {
        return Ok(gf2::is_irreducible(mask));
    }
    Ok(is_irreducible_generic(&f.to_monic().1))
}

/// Rabin's test over a general prime field.
pub(crate) fn is_irreducible_generic(f: &Polynomial) -> bool {
    let n = f.degree().expect("nonzero") as u64;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let field = f.field();
    let p = u64::from(field.p());
    let x = Polynomial::x(field).rem(f).expect("nonzero");
    let frob = |k: u64| {
        let mut h = x.clone();
        for _ in 0..k {
            h = h.pow_mod(p, f);
        }
        h
    };
    if frob(n) != x {
        return false;
    }
    crate::numtheory::factorize(n)
        .into_iter()
        .all(|(r, _)| f.gcd(&(&frob(n / r) - &x)).expect("nonzero").is_one())
}

/// Complete factorization over F_p.
///
/// Square-free decomposition, then distinct-degree and equal-degree splitting.
/// The equal-degree step draws from a generator seeded by the input, so the
/// output is reproducible. Inputs over F_2 of degree at most 63 take the
/// bit-packed path.
pub fn factor_fq(f: &Polynomial) -> Result<FqFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let (unit, monic) = f.to_monic();
    let mut factors: Vec<(Polynomial, u32)> = match monic.to_bitmask() {
        Some(mask) => gf2::factor(mask, &mut rng)
            .into_iter()
            .map(|(g, e)| (Polynomial::from_bitmask(g), e))
            .collect(),
        None => factor_generic(&monic, &mut rng),
    };
    factors.sort();
    debug_assert!(factors.iter().all(|(g, _)| g.field() == field));
    Ok(FqFactorization { unit, factors })
}

/// Factorization that never takes the packed path; exposed for cross-checks.
pub fn factor_fq_generic(f: &Polynomial) -> Result<FqFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let (unit, monic) = f.to_monic();
    let mut factors = factor_generic(&monic, &mut rng);
    factors.sort();
    Ok(FqFactorization { unit, factors })
}

fn factor_generic<R: Rng>(f: &Polynomial, rng: &mut R) -> Vec<(Polynomial, u32)> {
    let mut merged: BTreeMap<Polynomial, u32> = BTreeMap::new();
    for (part, e) in squarefree(f) {
        for (block, d) in distinct_degree(part) {
            let mut irreducibles = Vec::new();
            equal_degree(block, d, rng, &mut irreducibles);
            for g in irreducibles {
                *merged.entry(g).or_insert(0) += e;
            }
        }
    }
    merged.into_iter().collect()
}

/// `g(x)` with `g(x)^p = f(x)`; valid when `f' = 0`.
fn pth_root(f: &Polynomial) -> Polynomial {
    let p = f.field().p() as usize;
    Polynomial::from_reduced(f.field(), f.coeffs().iter().step_by(p).copied().collect())
}

fn squarefree(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = f.field().p();
    let div = |a: &Polynomial, b: &Polynomial| a.divrem(b).expect("nonzero").0;
    let mut c = f.gcd(&f.derivative()).expect("nonzero");
    let mut w = div(f, &c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c).expect("nonzero");
        let fac = div(&w, &y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = div(&c, &w);
        i += 1;
    }
    if !c.is_one() {
        for (g, e) in squarefree(&pth_root(&c)) {
            out.push((g, e * p));
        }
    }
    out
}

fn distinct_degree(mut f: Polynomial) -> Vec<(Polynomial, u32)> {
    let field = f.field();
    let p = u64::from(field.p());
    let x = Polynomial::x(field);
    let mut out = Vec::new();
    let mut h = x.rem(&f).expect("nonzero");
    let mut d = 0usize;
    while let Some(df) = f.degree() {
        if df < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod(p, &f);
        let g = f.gcd(&(&h - &x)).expect("nonzero");
        if !g.is_one() {
            f = f.divrem(&g).expect("nonzero").0;
            h = h.rem(&f).expect("nonzero");
            out.push((g, d as u32));
        }
    }
    if let Some(df) = f.degree().filter(|&df| df > 0) {
        out.push((f, df as u32));
    }
    out
}

fn random_below<R: Rng>(field: FieldSpec, n: usize, rng: &mut R) -> Polynomial {
    let p = field.p();
    Polynomial::from_reduced(field, (0..n).map(|_| rng.gen_range(0..p)).collect())
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-`d` irreducibles.
fn equal_degree<R: Rng>(f: Polynomial, d: u32, rng: &mut R, out: &mut Vec<Polynomial>) {
    let n = f.degree().expect("nonzero");
    if n == d as usize {
        out.push(f);
        return;
    }
    let field = f.field();
    let p = u64::from(field.p());
    loop {
        let a = random_below(field, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let splitter = if p == 2 {
            // trace to F_2: a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a;
            for _ in 1..d {
                t = t.mul_mod(&t, &f);
                acc = &acc + &t;
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.clone();
            let mut norm = a;
            for _ in 1..d {
                t = t.pow_mod(p, &f);
                norm = norm.mul_mod(&t, &f);
            }
            &norm.pow_mod((p - 1) / 2, &f) - &Polynomial::one(field)
        };
        let g = f.gcd(&splitter).expect("nonzero");
        if !g.is_one() && g.degree() != f.degree() {
            let cofactor = f.divrem(&g).expect("nonzero").0;
            equal_degree(g, d, rng, out);
            equal_degree(cofactor, d, rng, out);
            return;
        }
    }
}
