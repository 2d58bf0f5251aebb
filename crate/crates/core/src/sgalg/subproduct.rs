use crate::error::{Error, Result};
use crate::ffpoly::Polynomial;

/// Finds a nonempty subset of `polys` whose product lies in `F_q + x^N F_q[x]`
/// (no terms in degrees `1..N`). Returns 0-based indices in increasing order.
///
/// Requires `polys.len() >= q^(N-1)` and every constant term nonzero. The
/// search recurses on `N`: the first `q^(N-1)` inputs are cut into `q`
/// consecutive blocks, each block yields a subproduct `g_j` clean below
/// `x^(N-1)`, and with `c_j` the `x^(N-1)` coefficient of `g_j / g_j(0)` some
/// run of blocks has `c_(s+1) + ... + c_t = 0`. A zero prefix sum is taken as
/// soon as it appears, otherwise the first repeated prefix sum.
pub fn find_subproduct(polys: &[Polynomial], n: u32) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    let Some(first) = polys.first() else {
        return Err(Error::TooFewPolynomials { needed: 1, got: 0 });
    };
    let field = first.field();
    for (i, f) in polys.iter().enumerate() {
        if f.field() != field {
            return Err(Error::FieldMismatch(field.p(), f.field().p()));
        }
        if f.coeff(0) == 0 {
            return Err(Error::Domain(format!("polynomial at index {i} has zero constant term")));
        }
    }
    let q = u64::from(field.p());
    let needed = q.checked_pow(n - 1).unwrap_or(u64::MAX);
    if (polys.len() as u64) < needed {
        return Err(Error::TooFewPolynomials { needed, got: polys.len() });
    }
    let indices: Vec<usize> = (0..needed as usize).collect();
    let mut out = search(polys, &indices, n, q as usize);
    out.sort_unstable();
    Ok(out)
}

fn truncated_product(polys: &[Polynomial], subset: &[usize], len: usize) -> Polynomial {
    let field = polys[0].field();
    subset
        .iter()
        .fold(Polynomial::one(field), |acc, &i| acc.mul_trunc(&polys[i], len))
}

fn search(polys: &[Polynomial], indices: &[usize], n: u32, q: usize) -> Vec<usize> {
    if n == 1 {
        return vec![indices[0]];
    }
    let field = polys[0].field();
    let block = q.pow(n - 2);
    let target = (n - 1) as usize;
    let mut subsets = Vec::with_capacity(q);
    let mut prefix = 0u32;
    let mut seen: Vec<(u32, usize)> = Vec::with_capacity(q);
    for j in 0..q {
        let sub = search(polys, &indices[j * block..(j + 1) * block], n - 1, q);
        let g = truncated_product(polys, &sub, target + 1);
        let c = field.mul(g.coeff(target), field.inv(g.coeff(0)));
        subsets.push(sub);
        prefix = field.add(prefix, c);
        // blocks s..=j (0-based) have zero sum when prefix_j == prefix_(s-1)
        let start = if prefix == 0 {
            Some(0)
        } else {
            seen.iter().find(|&&(v, _)| v == prefix).map(|&(_, s)| s + 1)
        };
        if let Some(s) = start {
            return subsets[s..=j].concat();
        }
        seen.push((prefix, j));
    }
    unreachable!("q prefix sums over q - 1 nonzero residues must collide")
}
