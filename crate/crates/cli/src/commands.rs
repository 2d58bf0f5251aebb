use sgatoms::counting::{
    b_counts, cyclotomic_sweep, format_decimal, format_fraction, CountRow, CyclotomicRecord,
};
use sgatoms::ffpoly::format_bitmask;
use sgatoms::sgalg::{census, irreducible_listing};

use crate::config::{RunConfig, MAX_COUNT_DEGREE, MAX_PRIME_BOUND, MAX_VERIFY_DEGREE};
use crate::table::{Cell, Table};

pub enum Failure {
    /// Bad flags or a refused resource guard: exit status 2.
    Usage(String),
    /// Library error while computing: exit status 2 as well, reported differently.
    Compute(String),
}

impl From<sgatoms::Error> for Failure {
    fn from(e: sgatoms::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// A finished command: the table, notes for standard error, and whether a
/// check failed (exit status 1).
pub struct Report {
    pub table: Table,
    pub notes: Vec<String>,
    pub mismatch: bool,
}

impl Report {
    fn ok(table: Table) -> Self {
        Self { table, notes: Vec::new(), mismatch: false }
    }
}

pub const COUNT_HEADER: [&str; 10] =
    ["n", "a", "s", "b_c", "b_t", "b_w", "b", "algebra_size", "density", "density_decimal"];

fn count_cells(row: &CountRow) -> Vec<Cell> {
    let (fraction, decimal) = match &row.density {
        Some(d) => (Cell::text(format_fraction(d)), Cell::Decimal(format_decimal(d, 6))),
        None => (Cell::Empty, Cell::Empty),
    };
    vec![
        Cell::int(row.n),
        Cell::int(&row.a),
        row.s.as_ref().map_or(Cell::Empty, Cell::int),
        Cell::int(&row.b_c),
        Cell::int(&row.b_t),
        Cell::int(&row.b_w),
        Cell::int(&row.b),
        Cell::int(&row.algebra_size),
        fraction,
        decimal,
    ]
}

pub fn count(cfg: &RunConfig, max_degree: u64) -> Result<Report, Failure> {
    if max_degree < 2 {
        return Err(Failure::Usage("--max-degree must be at least 2".into()));
    }
    if max_degree > MAX_COUNT_DEGREE {
        return Err(Failure::Usage(format!("--max-degree is capped at {MAX_COUNT_DEGREE}")));
    }
    let mut table = Table::new(COUNT_HEADER.to_vec());
    let friendly = cfg.ctx.is_friendly();
    if !friendly {
        for n in 2..=max_degree {
            cfg.check_enumerable(n).map_err(Failure::Usage)?;
        }
    }
    for n in 2..=max_degree {
        let row = if friendly {
            CountRow::closed_form(n)?
        } else {
            let c = census(&cfg.ctx, n as usize, cfg.workers)?;
            CountRow::from_census(cfg.ctx.field().p(), cfg.ctx.semigroup(), &c)?
        };
        table.push(count_cells(&row));
    }
    let mut report = Report::ok(table);
    if !friendly {
        report.notes.push(format!(
            "b_c/b_t/b_w by enumeration, split as irreducible in {}[x] / divisible by x / other",
            cfg.ctx.field()
        ));
    }
    Ok(report)
}

pub fn enumerate(cfg: &RunConfig, degree: u64) -> Result<Report, Failure> {
    cfg.check_enumerable(degree).map_err(Failure::Usage)?;
    let mut table = Table::new(vec!["poly", "bitmask", "class", "factorization"]);
    let mut report_notes = Vec::new();
    if !cfg.ctx.semigroup().contains(degree) {
        report_notes.push(format!("{degree} is a gap of {}: no members of that degree", cfg.ctx.semigroup()));
    }
    for atom in irreducible_listing(&cfg.ctx, degree as usize, cfg.workers)? {
        table.push(vec![
            Cell::text(atom.poly.to_string()),
            format_bitmask(&atom.poly).map_or(Cell::Empty, Cell::Text),
            atom.class.map_or(Cell::Empty, |c| Cell::text(c.to_string())),
            Cell::text(atom.factorization.to_string()),
        ]);
    }
    Ok(Report { table, notes: report_notes, mismatch: false })
}

pub fn verify(cfg: &RunConfig, max_degree: u64) -> Result<Report, Failure> {
    if max_degree > MAX_VERIFY_DEGREE {
        return Err(Failure::Usage(format!("--max-degree for verify is capped at {MAX_VERIFY_DEGREE}")));
    }
    if max_degree < 2 {
        return Err(Failure::Usage("--max-degree must be at least 2".into()));
    }
    for n in 2..=max_degree {
        cfg.check_enumerable(n).map_err(Failure::Usage)?;
    }
    if cfg.ctx.is_friendly() {
        verify_counts(cfg, max_degree)
    } else {
        verify_shapes(cfg, max_degree)
    }
}

fn verify_counts(cfg: &RunConfig, max_degree: u64) -> Result<Report, Failure> {
    let mut table = Table::new(vec!["n", "closed_form", "brute_force", "match"]);
    let mut report = Report::ok(Table::new(vec![]));
    for n in 2..=max_degree {
        let closed = b_counts(n)?;
        let brute = census(&cfg.ctx, n as usize, cfg.workers)?;
        let closed_text = format!("{}+{}+{}={}", closed.classic, closed.tame, closed.wild, closed.total);
        let brute_text = format!("{}+{}+{}={}", brute.classic, brute.tame, brute.wild, brute.irreducible);
        let ok = closed_text == brute_text;
        if !ok {
            report.mismatch = true;
            report.notes.push(format!("degree {n}: closed form {closed_text}, enumeration {brute_text}"));
        }
        table.push(vec![Cell::int(n), Cell::text(closed_text), Cell::text(brute_text), Cell::Bool(ok)]);
    }
    report.table = table;
    Ok(report)
}

fn verify_shapes(cfg: &RunConfig, max_degree: u64) -> Result<Report, Failure> {
    let sgp = cfg.ctx.semigroup();
    let q = u64::from(cfg.ctx.field().p());
    let mut table = Table::new(vec!["n", "members", "irreducible", "max_m", "max_k", "m_bound", "k_bound", "within_bounds"]);
    let mut report = Report::ok(Table::new(vec![]));
    // with S = N every x^m is already excluded by m = 1 >= 0; the bounds say nothing there
    let bounded = !sgp.is_naturals();
    let frob = sgp.frobenius();
    let m_bound = Cell::int(2 * (frob + 1));
    let k_bound = u32::try_from(frob.max(0))
        .ok()
        .and_then(|e| q.checked_pow(e))
        .map_or(Cell::Empty, Cell::int);
    for n in 2..=max_degree {
        let c = census(&cfg.ctx, n as usize, cfg.workers)?;
        let within = c.shape_violations == 0;
        if bounded && !within {
            report.mismatch = true;
            report.notes.push(format!("degree {n}: {} irreducibles outside the shape bounds", c.shape_violations));
        }
        table.push(vec![
            Cell::int(n),
            Cell::int(c.members),
            Cell::int(c.irreducible),
            Cell::int(c.max_m),
            Cell::int(c.max_k),
            if bounded { m_bound.clone() } else { Cell::Empty },
            if bounded { k_bound.clone() } else { Cell::Empty },
            if bounded { Cell::Bool(within) } else { Cell::Empty },
        ]);
    }
    if !bounded {
        report.notes.push("S = N: shape bounds not applicable, shapes reported only".into());
    }
    report.table = table;
    Ok(report)
}

fn cyclotomic_cells(r: &CyclotomicRecord) -> Vec<Cell> {
    vec![
        Cell::int(r.p),
        Cell::int(r.p_mod_8),
        Cell::int(r.ord_2),
        Cell::Bool(r.primitive_root),
        Cell::Bool(r.irreducible_in_algebra),
    ]
}

pub fn cyclotomic(max_prime: u64) -> Result<Report, Failure> {
    if max_prime < 3 {
        return Err(Failure::Usage("--max-prime must be at least 3".into()));
    }
    if max_prime > MAX_PRIME_BOUND {
        return Err(Failure::Usage(format!("--max-prime is capped at {MAX_PRIME_BOUND}")));
    }
    let records = cyclotomic_sweep(max_prime)?;
    let mut table = Table::new(vec!["p", "p_mod_8", "ord_2", "primitive_root", "irreducible"]);
    let mut report = Report::ok(Table::new(vec![]));
    for r in &records {
        if !r.is_consistent() {
            report.mismatch = true;
            report.notes.push(format!("p = {}: direct factorization disagrees with the order test", r.p));
        }
        table.push(cyclotomic_cells(r));
    }
    let irreducible: Vec<&CyclotomicRecord> = records.iter().filter(|r| r.irreducible_in_algebra).collect();
    let pattern = irreducible.iter().all(|r| matches!(r.p_mod_8, 3 | 5));
    report.mismatch |= !pattern;
    report.notes.push(format!(
        "{} of {} primes 2 < p < {max_prime} give an irreducible x^p+1; all have p mod 8 in {{3,5}}: {}",
        irreducible.len(),
        records.len(),
        if pattern { "yes" } else { "NO" }
    ));
    report.table = table;
    Ok(report)
}
