//! Exhaustive per-degree scans of `F_q[S]`: the brute-force side of every
//! closed-form count.

use rayon::prelude::*;

use super::{analyze, shape_of, AlgebraContext, AlgebraVerdict, FriendlyClass};
use crate::error::{Error, Result};
use crate::ffpoly::{FqFactorization, Polynomial};

/// Irreducible counts at one degree, over monic members.
///
/// The classic / tame / wild split is the type trichotomy over
/// `F_2[x^2, x^3]`. In other algebras it is the coarse split: irreducible in
/// `F_q[x]`, divisible by `x`, or neither.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegreeCensus {
    pub degree: usize,
    pub members: u64,
    pub irreducible: u64,
    pub classic: u64,
    pub tame: u64,
    pub wild: u64,
    /// Largest `m` and `k` of `x^m f_1 ... f_k` over the irreducibles.
    pub max_m: u32,
    pub max_k: u32,
    /// Irreducibles whose shape breaks `m < 2(F+1)`, `k <= q^F`.
    pub shape_violations: u64,
}

impl DegreeCensus {
    fn merge(mut self, other: Self) -> Self {
        self.members += other.members;
        self.irreducible += other.irreducible;
        self.classic += other.classic;
        self.tame += other.tame;
        self.wild += other.wild;
        self.max_m = self.max_m.max(other.max_m);
        self.max_k = self.max_k.max(other.max_k);
        self.shape_violations += other.shape_violations;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedAtom {
    pub poly: Polynomial,
    pub class: Option<FriendlyClass>,
    pub factorization: FqFactorization,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Classic,
    Tame,
    Wild,
}

fn kind(class: Option<FriendlyClass>, fact: &FqFactorization) -> Kind {
    match class {
        Some(FriendlyClass::Classic) => Kind::Classic,
        Some(FriendlyClass::Tame(_)) => Kind::Tame,
        Some(FriendlyClass::Wild) => Kind::Wild,
        None if fact.is_irreducible() => Kind::Classic,
        None if fact.x_multiplicity() > 0 => Kind::Tame,
        None => Kind::Wild,
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("worker pool: {e}")))
}

fn indexed_member(ctx: &AlgebraContext, n: usize, free: &[usize], index: u64) -> Polynomial {
    if ctx.field.p() == 2 && n < 64 {
        Polynomial::from_bitmask(AlgebraContext::member_mask_at(n, free, index))
    } else {
        ctx.member_at(n, free, index)
    }
}

fn total_members(ctx: &AlgebraContext, n: usize) -> Result<u64> {
    ctx.monic_member_count(n)
        .ok_or_else(|| Error::TooLarge(format!("degree {n} has more than 2^64 members")))
}

/// Counts irreducible monic members of degree `n` by classifying every member.
/// Results do not depend on `workers`.
pub fn census(ctx: &AlgebraContext, n: usize, workers: usize) -> Result<DegreeCensus> {
    let total = total_members(ctx, n)?;
    let free = ctx.free_positions(n);
    let q = ctx.field.p();
    let scan = || {
        (0..total)
            .into_par_iter()
            .map(|i| -> Result<DegreeCensus> {
                let f = indexed_member(ctx, n, &free, i);
                let analysis = analyze(ctx, &f)?;
                let mut c = DegreeCensus { degree: n, members: 1, ..Default::default() };
                if let (AlgebraVerdict::Irreducible(class), Some(fact)) = (&analysis.verdict, &analysis.factorization) {
                    c.irreducible = 1;
                    match kind(*class, fact) {
                        Kind::Classic => c.classic = 1,
                        Kind::Tame => c.tame = 1,
                        Kind::Wild => c.wild = 1,
                    }
                    let shape = shape_of(fact);
                    c.max_m = shape.m;
                    c.max_k = shape.k;
                    c.shape_violations = u64::from(!shape.within_bounds(&ctx.semigroup, q));
                }
                Ok(c)
            })
            .try_reduce(|| DegreeCensus { degree: n, ..Default::default() }, |a, b| Ok(a.merge(b)))
    };
    pool(workers)?.install(scan)
}

/// Every irreducible monic member of degree `n` with its class and `F_q[x]`
/// factorization, in canonical order.
pub fn irreducible_listing(ctx: &AlgebraContext, n: usize, workers: usize) -> Result<Vec<ListedAtom>> {
    let total = total_members(ctx, n)?;
    let free = ctx.free_positions(n);
    let scan = || {
        (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let f = indexed_member(ctx, n, &free, i);
                match analyze(ctx, &f) {
                    Ok(a) => match (a.verdict, a.factorization) {
                        (AlgebraVerdict::Irreducible(class), Some(factorization)) => {
                            Some(Ok(ListedAtom { poly: f, class, factorization }))
                        }
                        _ => None,
                    },
                    Err(e) => Some(Err(e)),
                }
            })
            .collect::<Result<Vec<_>>>()
    };
    let mut out = pool(workers)?.install(scan)?;
    out.sort_by(|a, b| a.poly.cmp(&b.poly));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::FieldSpec;

    #[test]
    fn friendly_small_degrees() {
        let ctx = AlgebraContext::friendly();
        let got: Vec<(u64, u64, u64, u64)> = (2..=6)
            .map(|n| {
                let c = census(&ctx, n, 2).unwrap();
                (c.classic, c.tame, c.wild, c.irreducible)
            })
            .collect();
        assert_eq!(got, vec![(0, 1, 1, 2), (1, 2, 1, 4), (1, 2, 2, 5), (3, 2, 3, 8), (4, 3, 6, 13)]);
    }

    #[test]
    fn listing_is_sorted_and_worker_independent() {
        let ctx = AlgebraContext::new(FieldSpec::new(3).unwrap(), "2,3".parse().unwrap());
        let one = irreducible_listing(&ctx, 5, 1).unwrap();
        let four = irreducible_listing(&ctx, 5, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.windows(2).all(|w| w[0].poly < w[1].poly));
        assert_eq!(one.len() as u64, census(&ctx, 5, 3).unwrap().irreducible);
    }

    #[test]
    fn gap_degree_is_empty() {
        let ctx = AlgebraContext::friendly();
        assert_eq!(census(&ctx, 1, 1).unwrap().members, 0);
        assert!(irreducible_listing(&ctx, 1, 1).unwrap().is_empty());
    }
}
