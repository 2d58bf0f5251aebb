//! Numerical semigroups: cofinite additive submonoids of the nonnegative integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::gcd;

/// Cap on the Schur bound `(n_1 - 1)(n_k - 1)` so that a membership table can
/// always be allocated.
pub const MAX_CONDUCTOR_BOUND: u64 = 1 << 22;

/// A numerical semigroup with its membership table precomputed.
///
/// `membership[a]` covers `0..=frobenius + max(min_generators)`; every integer
/// above the Frobenius number is a member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    frobenius: i64,
    genus: u64,
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0, |acc, &n| gcd(acc, n));
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let smallest = sorted[0];
        let largest = *sorted.last().unwrap();
        // Schur: F(S) <= (n_1 - 1)(n_k - 1) - 1
        let schur = (smallest - 1).saturating_mul(largest - 1);
        if schur > MAX_CONDUCTOR_BOUND {
            return Err(Error::TooLarge(format!(
                "conductor bound {schur} exceeds {MAX_CONDUCTOR_BOUND}"
            )));
        }

        // Generators above the conductor bound plus n_1 are sums of smaller
        // members, so the table below settles everything.
        let limit = (schur + smallest) as usize;
        let mut member = vec![false; limit + 1];
        let mut min_generators = Vec::new();
        member[0] = true;
        for &gen in &sorted {
            let gen_idx = gen as usize;
            if gen_idx > limit || member[gen_idx] {
                continue;
            }
            min_generators.push(gen);
            // unbounded-knapsack closure with the new generator
            for a in gen_idx..=limit {
                if member[a - gen_idx] {
                    member[a] = true;
                }
            }
        }

        let frobenius = member.iter().rposition(|&m| !m).map_or(-1, |f| f as i64);
        let genus = member.iter().filter(|&&m| !m).count() as u64;
        let table_len = (frobenius + 1) as usize + *min_generators.last().unwrap() as usize;
        member.resize(table_len.max(1), true);
        Ok(Self { min_generators, frobenius, genus, membership: member })
    }

    /// `N = <1>`.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is valid")
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    /// Largest gap, or `-1` when there is none.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn multiplicity(&self) -> u64 {
        self.min_generators[0]
    }

    pub fn is_naturals(&self) -> bool {
        self.genus == 0
    }

    #[inline]
    pub fn contains(&self, a: u64) -> bool {
        if a as i128 > self.frobenius as i128 {
            return true;
        }
        self.membership[a as usize]
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..=self.frobenius.max(-1))
            .map(|a| a as u64)
            .filter(|&a| !self.membership[a as usize])
            .collect()
    }

    /// `#(S ∩ [0, n))`.
    pub fn count_below(&self, n: u64) -> u64 {
        let gaps_below = self.gaps().iter().filter(|&&g| g < n).count() as u64;
        n - gaps_below
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (F = {}, g = {})", self.frobenius, self.genus)
    }
}

/// `<2,3>`
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.min_generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Comma-separated generators, e.g. `2,3`. Surrounding `<`/`>` are tolerated.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('<').and_then(|b| b.strip_suffix('>')).unwrap_or(body);
        if body.trim().is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in body.split(',') {
            let token = part.trim();
            let value = token.parse::<u64>().map_err(|e| Error::Parse {
                pos: offset,
                reason: format!("generator {token:?}: {e}"),
            })?;
            gens.push(value);
            offset += part.len() + 1;
        }
        Self::from_generators(&gens)
    }
}
