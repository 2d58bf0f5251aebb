use super::AlgebraContext;
use crate::ffpoly::Polynomial;

/// Monic members of a fixed degree, in increasing canonical order.
///
/// The free coefficients sit at `S ∩ [0, n)`; they are stepped like an
/// odometer with the lowest exponent turning fastest, which over F_2 is
/// increasing bitmask order.
pub struct MemberIter {
    free: Vec<usize>,
    coeffs: Vec<u32>,
    p: u32,
    ctx_field: crate::ffpoly::FieldSpec,
    done: bool,
}

impl Iterator for MemberIter {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        if self.done {
            return None;
        }
        let out = Polynomial::from_reduced(self.ctx_field, self.coeffs.clone());
        self.done = true;
        for &pos in &self.free {
            self.coeffs[pos] += 1;
            if self.coeffs[pos] < self.p {
                self.done = false;
                break;
            }
            self.coeffs[pos] = 0;
        }
        Some(out)
    }
}

impl AlgebraContext {
    /// Exponents in `S ∩ [0, n)`: the free coefficient slots at degree `n`.
    pub fn free_positions(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&i| self.semigroup.contains(i as u64)).collect()
    }

    /// Number of monic members of degree `n`, if it fits in a `u64`.
    pub fn monic_member_count(&self, n: usize) -> Option<u64> {
        if !self.semigroup.contains(n as u64) {
            return Some(0);
        }
        let free = u32::try_from(self.free_positions(n).len()).ok()?;
        u64::from(self.field.p()).checked_pow(free)
    }

    /// All monic members of degree `n` (empty when `n` is a gap).
    pub fn enumerate_degree(&self, n: usize) -> MemberIter {
        let mut coeffs = vec![0u32; n + 1];
        coeffs[n] = 1;
        MemberIter {
            free: self.free_positions(n),
            coeffs,
            p: self.field.p(),
            ctx_field: self.field,
            done: !self.semigroup.contains(n as u64),
        }
    }

    /// The `index`-th element of [`enumerate_degree`](Self::enumerate_degree),
    /// given its precomputed free positions. Used to shard a degree across workers.
    pub fn member_at(&self, n: usize, free: &[usize], mut index: u64) -> Polynomial {
        let p = u64::from(self.field.p());
        let mut coeffs = vec![0u32; n + 1];
        coeffs[n] = 1;
        for &pos in free {
            coeffs[pos] = (index % p) as u32;
            index /= p;
        }
        Polynomial::from_reduced(self.field, coeffs)
    }

    /// Over F_2: bitmask of the `index`-th member (bits of `index` deposited
    /// into the free positions).
    pub(crate) fn member_mask_at(n: usize, free: &[usize], index: u64) -> u64 {
        let mut mask = 1u64 << n;
        for (bit, &pos) in free.iter().enumerate() {
            mask |= ((index >> bit) & 1) << pos;
        }
        mask
    }
}
