use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sgatoms::{AlgebraContext, FieldSpec, NumericalSemigroup};

use crate::table::Format;

/// Members per degree that `enumerate` and brute-force `count` will scan.
pub const MAX_ENUMERATED_MEMBERS: u64 = 1 << 24;
pub const MAX_VERIFY_DEGREE: u64 = 20;
/// Closed-form rows are cheap, but the table should stay readable.
pub const MAX_COUNT_DEGREE: u64 = 4096;
pub const MAX_PRIME_BOUND: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "sgatoms", version, about = "Atoms of semigroup algebras F_q[S] over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Field size (a prime).
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u32,
    /// Generators of the numerical semigroup, e.g. "2,3".
    #[arg(long, global = true, default_value = "2,3")]
    pub sgp: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for enumeration. Output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Accepted for reproducible invocations; every computation is already deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible counts per degree, closed form where available.
    Count {
        #[arg(long)]
        max_degree: u64,
    },
    /// List the irreducible members of one degree.
    Enumerate {
        #[arg(long)]
        degree: u64,
    },
    /// Compare closed forms with enumeration, or report factorization shapes.
    Verify {
        #[arg(long)]
        max_degree: u64,
    },
    /// The x^p + 1 experiment over F_2[x^2, x^3].
    Cyclotomic {
        #[arg(long, default_value_t = 1000)]
        max_prime: u64,
    },
}

/// Validated settings shared by every command.
pub struct RunConfig {
    pub ctx: AlgebraContext,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_common(common: &Common) -> Result<Self, String> {
        let field = FieldSpec::new(common.q).map_err(|e| format!("--q: {e}"))?;
        let semigroup: NumericalSemigroup = common.sgp.parse().map_err(|e| format!("--sgp: {e}"))?;
        let workers = match common.workers {
            Some(0) => return Err("--workers must be positive".into()),
            Some(w) => w,
            None => std::thread::available_parallelism().map_or(1, usize::from),
        };
        Ok(Self {
            ctx: AlgebraContext::new(field, semigroup),
            format: common.format,
            output: common.output.clone(),
            workers,
        })
    }

    /// Refuses degrees whose member count exceeds the enumeration guard.
    pub fn check_enumerable(&self, n: u64) -> Result<(), String> {
        let members = usize::try_from(n)
            .ok()
            .and_then(|n| self.ctx.monic_member_count(n))
            .unwrap_or(u64::MAX);
        if members > MAX_ENUMERATED_MEMBERS {
            return Err(format!(
                "degree {n} has {} monic members in {}[{}], over the enumeration limit of 2^24",
                if members == u64::MAX { "more than 2^64".to_string() } else { members.to_string() },
                self.ctx.field(),
                self.ctx.semigroup()
            ));
        }
        Ok(())
    }
}
