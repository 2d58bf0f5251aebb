//! Bit-packed arithmetic over F_2 for polynomials of degree at most 63.
//!
//! A polynomial is a `u64` whose bit `i` is the coefficient of `x^i`. Products
//! are formed by shift-XOR into a `u128` and reduced back below the modulus,
//! so every routine here is allocation-free except the factor lists.

use rand::Rng;

/// Largest degree the packed representation holds.
pub const MAX_DEGREE: u32 = 63;

#[inline]
pub fn degree(a: u64) -> Option<u32> {
    (a != 0).then(|| 63 - a.leading_zeros())
}

/// Carry-less product.
#[inline]
pub fn clmul(a: u64, b: u64) -> u128 {
    let (mut a, b) = if a.count_ones() < b.count_ones() { (a, b) } else { (b, a) };
    let mut acc = 0u128;
    let wide = u128::from(b);
    while a != 0 {
        let i = a.trailing_zeros();
        acc ^= wide << i;
        a &= a - 1;
    }
    acc
}

/// `a mod m` for a 128-bit dividend. `m` must be nonzero.
#[inline]
pub fn reduce(mut a: u128, m: u64) -> u64 {
    let dm = degree(m).expect("nonzero modulus");
    let wide = u128::from(m);
    while a != 0 {
        let da = 127 - a.leading_zeros();
        if da < dm {
            break;
        }
        a ^= wide << (da - dm);
    }
    a as u64
}

/// Quotient and remainder.
pub fn divrem(a: u64, b: u64) -> (u64, u64) {
    let db = degree(b).expect("nonzero divisor");
    let mut q = 0u64;
    let mut r = a;
    while let Some(dr) = degree(r) {
        if dr < db {
            break;
        }
        q |= 1 << (dr - db);
        r ^= b << (dr - db);
    }
    (q, r)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = divrem(a, b).1;
        a = b;
        b = r;
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    reduce(clmul(a, b), m)
}

#[inline]
pub fn sqr_mod(a: u64, m: u64) -> u64 {
    mul_mod(a, a, m)
}

pub fn derivative(a: u64) -> u64 {
    // d/dx x^i = i x^(i-1): only odd exponents survive.
    (a >> 1) & 0x5555_5555_5555_5555
}

/// Square root of a polynomial all of whose exponents are even.
fn sqrt_of_square(a: u64) -> u64 {
    let mut out = 0u64;
    let mut i = 0;
    let mut a = a;
    while a != 0 {
        if a & 1 == 1 {
            out |= 1 << i;
        }
        a >>= 2;
        i += 1;
    }
    out
}

/// `x^(2^k) mod m` by repeated squaring of `x mod m`.
fn frobenius_x(k: u32, m: u64) -> u64 {
    let mut h = reduce(2, m);
    for _ in 0..k {
        h = sqr_mod(h, m);
    }
    h
}

/// Rabin's test: `f` of degree n is irreducible iff `x^(2^n) = x mod f` and
/// `gcd(x^(2^(n/r)) - x, f) = 1` for every prime `r | n`.
pub fn is_irreducible(f: u64) -> bool {
    let Some(n) = degree(f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if f & 1 == 0 {
        return false;
    }
    let x = reduce(2, f);
    if frobenius_x(n, f) != x {
        return false;
    }
    crate::numtheory::factorize(u64::from(n))
        .into_iter()
        .all(|(r, _)| gcd(f, frobenius_x(n / r as u32, f) ^ x) == 1)
}

/// Square-free decomposition of a monic `f`: pairs `(g, e)` with the `g`
/// squarefree, pairwise coprime, and `f = prod g^e`.
pub fn squarefree(f: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if degree(f).unwrap_or(0) == 0 {
        return out;
    }
    let mut c = gcd(f, derivative(f));
    let mut w = divrem(f, c).0;
    let mut i = 1;
    while w != 1 {
        let y = gcd(w, c);
        let fac = divrem(w, y).0;
        if fac != 1 {
            out.push((fac, i));
        }
        w = y;
        c = divrem(c, y).0;
        i += 1;
    }
    if c != 1 {
        for (g, e) in squarefree(sqrt_of_square(c)) {
            out.push((g, e * 2));
        }
    }
    out
}

/// Distinct-degree split of a squarefree monic `f`: pairs `(g, d)` where `g`
/// is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(mut f: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut h = reduce(2, f);
    let mut d = 0;
    while let Some(df) = degree(f) {
        if df < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = sqr_mod(h, f);
        let g = gcd(f, h ^ reduce(2, f));
        if g != 1 {
            out.push((g, d));
            f = divrem(f, g).0;
            h = divrem(h, f).1;
        }
    }
    if degree(f).unwrap_or(0) > 0 {
        out.push((f, degree(f).unwrap()));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d` with the trace
/// map `a + a^2 + ... + a^(2^(d-1))`.
pub fn equal_degree<R: Rng>(f: u64, d: u32, rng: &mut R, out: &mut Vec<u64>) {
    let n = degree(f).expect("nonzero");
    if n == d {
        out.push(f);
        return;
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        let a = rng.gen::<u64>() & mask;
        if degree(a).unwrap_or(0) == 0 {
            continue;
        }
        let mut t = a;
        let mut acc = a;
        for _ in 1..d {
            t = sqr_mod(t, f);
            acc ^= t;
        }
        let g = gcd(f, acc);
        if g != 1 && g != f {
            equal_degree(g, d, rng, out);
            equal_degree(divrem(f, g).0, d, rng, out);
            return;
        }
    }
}

/// Complete factorization of a nonzero `f` into (irreducible, multiplicity),
/// sorted by bitmask.
pub fn factor<R: Rng>(f: u64, rng: &mut R) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    for (part, e) in squarefree(f) {
        for (block, d) in distinct_degree(part) {
            let mut irreducibles = Vec::new();
            equal_degree(block, d, rng, &mut irreducibles);
            out.extend(irreducibles.into_iter().map(|g| (g, e)));
        }
    }
    out.sort_unstable();
    out
}
