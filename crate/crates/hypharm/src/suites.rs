//! Verification suites: grid generation, parallel evaluation, report assembly.

use clap::ValueEnum;
use rayon::prelude::*;

use hypharm_core::combinatorics::{binomial_int, HarmonicCache};
use hypharm_core::hyperseries::{
    chu_vandermonde_lhs, chu_vandermonde_rhs, dougall_dixon_lhs, dougall_dixon_rhs, eval_pfq,
    saalschutz_lhs, saalschutz_rhs, whipple_lhs, whipple_rhs,
};
use hypharm_core::identities::{
    families, registry, xi, xi_via_omega, BinomialFamily, IdentityRecord, ParamConstraint,
    RecordKind,
};
use hypharm_core::{rat, Dual, Rational, Result as CoreResult, Scalar};

use crate::error::CliError;
use crate::report::{Cell, GridRequest, Params, Status, VerificationReport};

/// Largest `n` and parameter value reachable without `--unsafe-large`.
pub const SAFE_N_MAX: i64 = 8;
pub const SAFE_PARAM_MAX: i64 = 3;

/// Auxiliary records reported with the theorems.
const THEOREM_AUXILIARY: [&str; 2] = ["wench", "wench_lam0"];
/// Auxiliary records reported with the Ξ suite.
const XI_AUXILIARY: [&str; 1] = ["t2e4_closed"];

const XI_LAMBDA_MAX: u32 = 6;
const XI_N_MAX: i64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorems,
    Table1,
    Table2,
    Families,
    Xi,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorems => "theorems",
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Families => "families",
            Suite::Xi => "xi",
            Suite::All => "all",
        }
    }

    fn parts(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Theorems, Suite::Table1, Suite::Table2, Suite::Families, Suite::Xi],
            Suite::Theorems => &[Suite::Theorems],
            Suite::Table1 => &[Suite::Table1],
            Suite::Table2 => &[Suite::Table2],
            Suite::Families => &[Suite::Families],
            Suite::Xi => &[Suite::Xi],
        }
    }
}

/// Grid caps from the command line, applied on top of each record's
/// documented grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Caps {
    pub n_max: Option<i64>,
    pub param_max: Option<i64>,
    pub unsafe_large: bool,
}

impl Caps {
    pub fn validate(&self) -> Result<(), CliError> {
        for (flag, value, safe) in [
            ("--n-max", self.n_max, SAFE_N_MAX),
            ("--param-max", self.param_max, SAFE_PARAM_MAX),
        ] {
            match value {
                Some(v) if v < 0 => {
                    return Err(CliError::Usage(format!("{flag} must be >= 0, got {v}")))
                }
                Some(v) if v > safe && !self.unsafe_large => {
                    return Err(CliError::Usage(format!(
                        "{flag} {v} exceeds the safe bound {safe}; pass --unsafe-large to allow it"
                    )))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn n(&self, documented: i64) -> i64 {
        cap(self.n_max, documented, self.unsafe_large)
    }

    pub fn params(&self, documented: i64) -> i64 {
        cap(self.param_max, documented, self.unsafe_large)
    }

    pub fn request(&self) -> GridRequest {
        GridRequest {
            n_max: self.n_max,
            param_max: self.param_max,
            unsafe_large: self.unsafe_large,
        }
    }
}

fn cap(flag: Option<i64>, documented: i64, grow: bool) -> i64 {
    match flag {
        None => documented,
        Some(v) if grow => v,
        Some(v) => v.min(documented),
    }
}

/// Every vector in `0..=max` of the given length, lexicographic.
fn full_grid(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn violated(constraints: &[ParamConstraint], p: &[i64]) -> Option<&'static str> {
    constraints.iter().find(|c| !(c.holds)(p)).map(|c| c.label)
}

enum Job {
    Record(&'static IdentityRecord, Vec<i64>, i64),
    Family(&'static BinomialFamily, Vec<i64>, i64),
    XiOmega(u32, u32),
}

/// Cells that need evaluating, plus cells skipped up front.
#[derive(Default)]
struct Plan {
    jobs: Vec<Job>,
    skipped: Vec<Cell>,
}

impl Plan {
    fn record(&mut self, rec: &'static IdentityRecord, caps: &Caps) {
        let n_hi = caps.n(rec.n_max);
        for p in full_grid(rec.params.len(), caps.params(rec.param_max)) {
            let bad = violated(rec.constraints, &p);
            for n in 0..=n_hi {
                let reason = bad
                    .map(str::to_string)
                    .or_else(|| (n < rec.n_min).then(|| rec.n_constraint_label()).flatten());
                match reason {
                    Some(r) => self
                        .skipped
                        .push(Cell::skipped(rec.id, Params::new(rec.params, &p), n, &r)),
                    None => self.jobs.push(Job::Record(rec, p.clone(), n)),
                }
            }
        }
    }

    fn family(&mut self, fam: &'static BinomialFamily, caps: &Caps) {
        let n_hi = caps.n(fam.n_max);
        for p in full_grid(fam.params.len(), caps.params(fam.param_max)) {
            let bad = violated(fam.constraints, &p);
            for n in 0..=n_hi {
                match bad {
                    Some(r) => self
                        .skipped
                        .push(Cell::skipped(fam.id, Params::new(fam.params, &p), n, r)),
                    None => self.jobs.push(Job::Family(fam, p.clone(), n)),
                }
            }
        }
    }

    fn add(&mut self, suite: Suite, caps: &Caps) {
        let records = registry();
        let by_kind = |kind: RecordKind| records.iter().copied().filter(move |r| r.kind == kind);
        let by_ids = |ids: &'static [&'static str]| {
            records.iter().copied().filter(move |r| ids.contains(&r.id))
        };
        match suite {
            Suite::Theorems => {
                for rec in by_kind(RecordKind::Theorem).chain(by_ids(&THEOREM_AUXILIARY)) {
                    self.record(rec, caps);
                }
            }
            Suite::Table1 => by_kind(RecordKind::TableOne).for_each(|r| self.record(r, caps)),
            Suite::Table2 => by_kind(RecordKind::TableTwo).for_each(|r| self.record(r, caps)),
            Suite::Families => families().iter().for_each(|f| self.family(f, caps)),
            Suite::Xi => {
                for lambda in 1..=XI_LAMBDA_MAX {
                    for n in 0..=caps.n(XI_N_MAX) {
                        self.jobs.push(Job::XiOmega(lambda, n as u32));
                    }
                }
                by_ids(&XI_AUXILIARY).for_each(|r| self.record(r, caps));
            }
            Suite::All => suite.parts().iter().for_each(|&s| self.add(s, caps)),
        }
    }
}

fn eval_record(rec: &IdentityRecord, p: &[i64], n: i64) -> Cell {
    let cache = HarmonicCache::global();
    let mut cell = Cell::new(rec.id, Params::new(rec.params, p), n, Status::Fail);
    match rec.check(cache, p, n) {
        Ok(res) => {
            cell.lhs = Some(res.lhs.to_string());
            cell.rhs = Some(res.rhs.to_string());
            if res.equal {
                cell.status = Status::Pass;
            } else if let Some(Ok(fixed)) = rec.check_erratum(cache, p, n) {
                if fixed.equal {
                    let e = rec.erratum.expect("erratum present");
                    cell.disputed = true;
                    cell.corrected_lhs = Some(fixed.lhs.to_string());
                    cell.reason = Some(format!("printed form fails; {}", e.description));
                }
            }
        }
        Err(e) => cell.reason = Some(e.to_string()),
    }
    cell
}

fn eval_family(fam: &BinomialFamily, p: &[i64], n: i64) -> Cell {
    let mut cell = Cell::new(fam.id, Params::new(fam.params, p), n, Status::Fail);
    match fam.derive(p, n) {
        Ok(d) => {
            cell.lhs = Some(d.lhs.value().to_string());
            cell.rhs = Some(d.rhs.value().to_string());
            cell.lhs_deriv = Some(d.lhs.deriv().to_string());
            cell.rhs_deriv = Some(d.rhs.deriv().to_string());
            match (d.value_match, d.deriv_match) {
                (true, true) => cell.status = Status::Pass,
                (false, _) => cell.reason = Some("value parts differ".into()),
                (true, false) => cell.reason = Some("derivative parts differ".into()),
            }
        }
        Err(e) => cell.reason = Some(e.to_string()),
    }
    cell
}

fn eval_xi(lambda: u32, n: u32) -> Cell {
    let params = Params::new(&["lambda"], &[i64::from(lambda)]);
    let mut cell = Cell::new("xi_omega", params, i64::from(n), Status::Fail);
    match (xi_via_omega(lambda, n), xi(lambda, n)) {
        (Ok(l), Ok(r)) => {
            if l == r {
                cell.status = Status::Pass;
            }
            cell.lhs = Some(l.to_string());
            cell.rhs = Some(r.to_string());
        }
        (Err(e), _) | (_, Err(e)) => cell.reason = Some(e.to_string()),
    }
    cell
}

fn eval(job: &Job) -> Cell {
    match job {
        Job::Record(rec, p, n) => eval_record(rec, p, *n),
        Job::Family(fam, p, n) => eval_family(fam, p, *n),
        Job::XiOmega(lambda, n) => eval_xi(*lambda, *n),
    }
}

/// All cells of a suite, in report order.
pub fn run_cells(suite: Suite, caps: &Caps) -> Vec<Cell> {
    let mut plan = Plan::default();
    plan.add(suite, caps);
    let mut cells: Vec<Cell> = plan.jobs.par_iter().map(eval).collect();
    cells.append(&mut plan.skipped);
    cells.sort_by(crate::report::cell_order);
    cells
}

pub fn run_suite(suite: Suite, caps: &Caps, generated_at: String) -> Result<VerificationReport, CliError> {
    caps.validate()?;
    let cells = run_cells(suite, caps);
    Ok(VerificationReport::assemble(suite.name(), caps.request(), cells, generated_at))
}

/// Outcome of one classical summation oracle on its grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTally {
    pub oracle: &'static str,
    pub scalar: &'static str,
    pub agreed: usize,
    pub skipped: usize,
    pub mismatched: usize,
}

/// Rational test points for every oracle parameter.
pub fn oracle_grid() -> Vec<Rational> {
    [(1, 2), (-1, 2), (1, 3), (-1, 3), (2, 1), (7, 5)]
        .iter()
        .map(|&(p, q)| rat(p, q).expect("nonzero denominator"))
        .collect()
}

/// Reduced grid for the five non-`a` Whipple parameters.
pub fn whipple_grid() -> Vec<Rational> {
    [(-1, 3), (2, 1), (7, 5)]
        .iter()
        .map(|&(p, q)| rat(p, q).expect("nonzero denominator"))
        .collect()
}

pub const ORACLE_N_MAX: u32 = 8;
pub const WHIPPLE_N_MAX: u32 = 5;

/// Both sides evaluated; a cell where either side hits a pole is skipped.
fn compare<S: Scalar>(l: CoreResult<S>, r: CoreResult<S>) -> (usize, usize, usize) {
    match (l, r) {
        (Ok(l), Ok(r)) if l == r => (1, 0, 0),
        (Ok(_), Ok(_)) => (0, 0, 1),
        _ => (0, 1, 0),
    }
}

fn sum3(v: impl ParallelIterator<Item = (usize, usize, usize)>) -> (usize, usize, usize) {
    v.reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
}

fn oracles_for<S: Scalar>(scalar: &'static str, conv: fn(&Rational) -> S) -> Vec<OracleTally> {
    let g = oracle_grid();
    let w = whipple_grid();
    let pairs: Vec<(S, S)> = g
        .iter()
        .flat_map(|a| g.iter().map(move |c| (conv(a), conv(c))))
        .collect();
    let triples: Vec<(S, S, S)> = pairs
        .iter()
        .flat_map(|(a, b)| g.iter().map(move |c| (a.clone(), b.clone(), conv(c))))
        .collect();
    let ns = || (0..=ORACLE_N_MAX).into_par_iter();

    let chu = sum3(pairs.par_iter().flat_map_iter(|(a, c)| {
        (0..=ORACLE_N_MAX).map(move |n| {
            compare(eval_pfq(&chu_vandermonde_lhs(a, c, n)), chu_vandermonde_rhs(a, c, n))
        })
    }));
    let saal = sum3(triples.par_iter().flat_map(|(a, b, c)| {
        ns().map(move |n| compare(eval_pfq(&saalschutz_lhs(a, b, c, n)), saalschutz_rhs(a, b, c, n)))
    }));
    let dd = sum3(triples.par_iter().flat_map(|(a, b, d)| {
        ns().map(move |n| {
            compare(eval_pfq(&dougall_dixon_lhs(a, b, d, n)), dougall_dixon_rhs(a, b, d, n))
        })
    }));
    let mut quints = Vec::new();
    for a in &g {
        for b in &w {
            for c in &w {
                for d in &w {
                    for e in &w {
                        quints.push([a, b, c, d, e].map(conv));
                    }
                }
            }
        }
    }
    let wh = sum3(quints.par_iter().flat_map_iter(|[a, b, c, d, e]| {
        (0..=WHIPPLE_N_MAX).map(move |n| {
            compare(eval_pfq(&whipple_lhs(a, b, c, d, e, n)), whipple_rhs(a, b, c, d, e, n))
        })
    }));

    [("chu-vandermonde", chu), ("saalschutz", saal), ("dougall-dixon", dd), ("whipple", wh)]
        .into_iter()
        .map(|(oracle, (agreed, skipped, mismatched))| OracleTally {
            oracle,
            scalar,
            agreed,
            skipped,
            mismatched,
        })
        .collect()
}

/// `eval_pfq` against the four closed-form oracles, over rationals and over
/// dual numbers with every parameter carrying a unit derivative.
pub fn oracle_tallies() -> Vec<OracleTally> {
    let mut out = oracles_for("rational", Rational::clone);
    out.extend(oracles_for("dual", |r: &Rational| Dual::variable(r.clone())));
    out
}

/// `Ξ_λ(n)` for `λ ≤ 4` by its elementary closed form.
pub fn xi_closed(lambda: u32, n: u32) -> Option<Rational> {
    let sign = Rational::from(if n % 2 == 0 { 1 } else { -1 });
    let n = i64::from(n);
    match lambda {
        1 => Some(Rational::one()),
        2 => Some(Rational::from(i64::from(n == 0))),
        3 => Some(sign),
        4 => Some(sign * binomial_int(2 * n, n)),
        _ => None,
    }
}
