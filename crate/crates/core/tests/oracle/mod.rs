//! Brute-force reference implementations used by the integration tests.
//!
//! Nothing here calls into the library: polynomials are plain `u64` masks
//! over F_2 or little-endian `Vec<u32>` coefficient lists over F_q, and every
//! answer comes from sieving products or trial division.

#![allow(dead_code)]

/// Carry-less product of two F_2 masks (inputs small enough not to overflow).
pub fn gf2_mul(a: u64, b: u64) -> u64 {
    let mut out = 0;
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

pub fn gf2_degree(a: u64) -> u32 {
    63 - a.leading_zeros()
}

/// `table[f]` is true iff the mask `f` (degree 1..=max_deg) is irreducible over F_2.
/// Every product of two polynomials of positive degree is crossed off.
pub fn gf2_irreducible_table(max_deg: u32) -> Vec<bool> {
    let size = 1usize << (max_deg + 1);
    let mut irreducible = vec![true; size];
    irreducible[0] = false;
    irreducible[1] = false;
    for a in 2u64..size as u64 {
        let da = gf2_degree(a);
        if 2 * da > max_deg {
            break;
        }
        for b in a..(1u64 << (max_deg - da + 1)) {
            irreducible[gf2_mul(a, b) as usize] = false;
        }
    }
    irreducible
}

/// Irreducible masks of exactly degree `n` from a table.
pub fn gf2_irreducibles_of_degree(table: &[bool], n: u32) -> Vec<u64> {
    (1u64 << n..1u64 << (n + 1)).filter(|&f| table[f as usize]).collect()
}

pub fn gf2_reverse(f: u64) -> u64 {
    f.reverse_bits() >> f.leading_zeros()
}

/// Polynomials over F_q, little-endian, trailing zeros stripped.
pub type Coeffs = Vec<u32>;

pub fn trim(mut c: Coeffs) -> Coeffs {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn fq_mul(a: &[u32], b: &[u32], q: u32) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u64::from(x) * u64::from(y)) % u64::from(q);
        }
    }
    trim(out.into_iter().map(|v| v as u32).collect())
}

/// The `index`-th monic polynomial of degree `n` (base-q digits of `index` below the top).
pub fn fq_monic(q: u32, n: usize, mut index: u64) -> Coeffs {
    let mut c = vec![0u32; n + 1];
    c[n] = 1;
    for slot in c.iter_mut().take(n) {
        *slot = (index % u64::from(q)) as u32;
        index /= u64::from(q);
    }
    c
}

fn fq_monic_index(c: &[u32], q: u32) -> u64 {
    c[..c.len() - 1].iter().rev().fold(0u64, |acc, &d| acc * u64::from(q) + u64::from(d))
}

/// Monic irreducibles of degree exactly `n` over F_q, by sieving all monic products.
pub fn fq_irreducibles(q: u32, n: usize) -> Vec<Coeffs> {
    let count = u64::from(q).pow(n as u32);
    let mut reducible = vec![false; count as usize];
    for da in 1..=n / 2 {
        let db = n - da;
        for ia in 0..u64::from(q).pow(da as u32) {
            let a = fq_monic(q, da, ia);
            for ib in 0..u64::from(q).pow(db as u32) {
                let prod = fq_mul(&a, &fq_monic(q, db, ib), q);
                reducible[fq_monic_index(&prod, q) as usize] = true;
            }
        }
    }
    (0..count).filter(|&i| !reducible[i as usize]).map(|i| fq_monic(q, n, i)).collect()
}

/// Remainder of `a` by monic `b`.
pub fn fq_rem_monic(a: &[u32], b: &[u32], q: u32) -> Coeffs {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + q - (lead * bc) % q) % q;
        }
        r = trim(r);
    }
    r
}

/// Monic factorization by trial division in increasing index order.
/// Returns `(unit, sorted monic factors with repetition)`.
pub fn fq_factor_trial(f: &[u32], q: u32) -> (u32, Vec<Coeffs>) {
    let f = trim(f.to_vec());
    assert!(!f.is_empty());
    let lead = *f.last().unwrap();
    let inv = (1..q).find(|&i| (i * lead) % q == 1).unwrap();
    let mut rest: Coeffs = f.iter().map(|&c| (c * inv) % q).collect();
    let mut factors = Vec::new();
    let mut d = 1;
    while rest.len() > 2 * d {
        let mut progress = false;
        for idx in 0..u64::from(q).pow(d as u32) {
            let g = fq_monic(q, d, idx);
            while rest.len() > d && fq_rem_monic(&rest, &g, q).is_empty() {
                rest = fq_div_exact(&rest, &g, q);
                factors.push(g.clone());
                progress = true;
            }
        }
        if !progress {
            d += 1;
        }
    }
    if rest.len() > 1 {
        factors.push(rest);
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
    (lead, factors)
}

fn fq_div_exact(a: &[u32], b: &[u32], q: u32) -> Coeffs {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0u32; a.len() - db];
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        quot[shift] = lead;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + q - (lead * bc) % q) % q;
        }
        r = trim(r);
    }
    assert!(r.is_empty());
    quot
}

/// Membership in the numerical semigroup generated by `gens`.
pub fn sgp_contains(gens: &[u64], n: u64) -> bool {
    let mut reach = vec![false; n as usize + 1];
    reach[0] = true;
    for i in 1..=n as usize {
        reach[i] = gens.iter().any(|&g| g as usize <= i && reach[i - g as usize]);
    }
    reach[n as usize]
}

pub fn support_in(gens: &[u64], c: &[u32]) -> bool {
    c.iter().enumerate().all(|(i, &v)| v == 0 || sgp_contains(gens, i as u64))
}

pub fn mask_in(gens: &[u64], f: u64) -> bool {
    (0..64).all(|i| (f >> i) & 1 == 0 || sgp_contains(gens, i))
}

/// Over F_2: `table[f]` is true iff `f` is a member of `F_2[S]` of degree
/// 1..=max_deg that is not a product of two positive-degree members.
pub fn gf2_algebra_atoms(gens: &[u64], max_deg: u32) -> Vec<bool> {
    let size = 1usize << (max_deg + 1);
    let member: Vec<bool> = (0..size as u64).map(|f| f >= 2 && mask_in(gens, f)).collect();
    let mut atom = member.clone();
    for a in 2u64..size as u64 {
        if !member[a as usize] {
            continue;
        }
        let da = gf2_degree(a);
        if 2 * da > max_deg {
            break;
        }
        for b in a..(1u64 << (max_deg - da + 1)) {
            if member[b as usize] {
                atom[gf2_mul(a, b) as usize] = false;
            }
        }
    }
    atom
}

/// Classic / tame / wild counts of the degree-`n` atoms of `F_2[x^2, x^3]`:
/// irreducible in F_2[x], divisible by x, or neither.
pub fn friendly_split(atoms: &[bool], irreducible: &[bool], n: u32) -> (u64, u64, u64) {
    let mut split = (0, 0, 0);
    for f in 1u64 << n..1u64 << (n + 1) {
        if !atoms[f as usize] {
            continue;
        }
        if irreducible[f as usize] {
            split.0 += 1;
        } else if f & 1 == 0 {
            split.1 += 1;
        } else {
            split.2 += 1;
        }
    }
    split
}

/// Multiplicative order by repeated multiplication.
pub fn naive_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut e = 1;
    while x != 1 {
        x = x * a % p;
        e += 1;
    }
    e
}
