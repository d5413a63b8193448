//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Exit status is nonzero if any criterion outside `UNATTAINABLE` fails, or
//! if an unattainable criterion fails for reasons other than the ones
//! analysed below.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hypharm::suites::oracle_tallies;
use hypharm_core::combinatorics::{binomial_int, HarmonicCache};
use hypharm_core::identities::{families, lookup, registry, xi, xi_via_omega, RecordKind};
use hypharm_core::limits::{binomial_ratio_weights, decay_probe, ReflectionFamily};
use hypharm_core::{rat, Rational};

/// Largest admissible `|lhs - rhs|`. Exact arithmetic: zero.
const TOLERANCE: i64 = 0;

const BUDGET_TABLE_ONE: Duration = Duration::from_secs(30);
const BUDGET_TABLE_TWO: Duration = Duration::from_secs(60);
const BUDGET_LIMITS: Duration = Duration::from_secs(60);

const TABLE_ONE_N_MAX: i64 = 8;
const TABLE_TWO_N_MAX: i64 = 6;
const LAMBDA_MU_NU_MAX: i64 = 3;
const BD_BCDE_MAX: i64 = 2;
const THEOREM_N_MAX: i64 = 8;
const WHIPPLE_N_MAX: i64 = 6;
const ORACLE_MIN_CELLS: usize = 200;
const XI_LAMBDA_MAX: u32 = 6;
const XI_N_MAX: u32 = 8;
const ENTRY4_N_MAX: u32 = 8;
const PROBE_YS: [u64; 4] = [10, 100, 1000, 10_000];
const PROBE_MU_MAX: u32 = 3;
const PROBE_NU_MAX: u32 = 2;
const PROBE_N_MAX: u32 = 4;

/// Criteria that cannot hold as stated, with the exact failure set expected.
const UNATTAINABLE: [(u8, &[&str]); 1] = [(1, &["t1e5", "t1e6", "t1e7", "t1e22"])];

fn within(a: &Rational, b: &Rational) -> bool {
    (a.clone() - b).abs() <= Rational::from(TOLERANCE)
}

struct Outcome {
    pass: bool,
    /// Record or family ids that failed.
    failing: Vec<String>,
    detail: Vec<String>,
}

impl Outcome {
    fn new(failing: Vec<String>, detail: Vec<String>) -> Self {
        Outcome { pass: failing.is_empty(), failing, detail }
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let elapsed = t.elapsed();
    o.detail.push(format!("elapsed {:.2?} (budget {:?})", elapsed, budget));
    if elapsed > budget {
        o.pass = false;
        o.failing.push("time budget".into());
    }
    o
}

fn check_kind(kind: RecordKind, n_max: i64) -> (Vec<String>, usize, usize) {
    let cache = HarmonicCache::global();
    let mut failing = Vec::new();
    let (mut cells, mut skipped) = (0, 0);
    for rec in registry().into_iter().filter(|r| r.kind == kind) {
        let mut ok = true;
        for n in 0..=n_max {
            if n < rec.n_min {
                skipped += 1;
                continue;
            }
            cells += 1;
            ok &= matches!(rec.check(cache, &[], n), Ok(r) if within(&r.lhs, &r.rhs));
        }
        if !ok {
            failing.push(rec.id.to_string());
        }
    }
    (failing, cells, skipped)
}

fn table_one() -> Outcome {
    let (failing, cells, skipped) = check_kind(RecordKind::TableOne, TABLE_ONE_N_MAX);
    let cache = HarmonicCache::global();
    let mut detail = vec![format!("{cells} cells checked, {skipped} outside n constraints")];
    for id in &failing {
        let rec = lookup(id).unwrap();
        let ratios: Vec<String> = (1..=4)
            .map(|n| {
                let r = rec.check(cache, &[], n).unwrap();
                match r.lhs.checked_div(&r.rhs) {
                    Ok(q) => q.to_string(),
                    Err(_) => "lhs/0".into(),
                }
            })
            .collect();
        let fixed = (0..=TABLE_ONE_N_MAX)
            .all(|n| matches!(rec.check_erratum(cache, &[], n), Some(Ok(r)) if within(&r.lhs, &r.rhs)));
        detail.push(format!(
            "{id}: printed lhs/rhs at n=1..4 = [{}]; corrected reading holds for n=0..{TABLE_ONE_N_MAX}: {fixed}",
            ratios.join(", ")
        ));
    }
    if !failing.is_empty() {
        detail.push(
            "t1e5/t1e6/t1e7 ratios are binom(3n,n); t1e22 ratio is 1/binom(2n,n): misprinted \
             weights, corrected forms follow from Theorems 2, 3 and 8"
                .into(),
        );
    }
    Outcome::new(failing, detail)
}

fn table_two() -> Outcome {
    let (failing, cells, skipped) = check_kind(RecordKind::TableTwo, TABLE_TWO_N_MAX);
    Outcome::new(failing, vec![format!("{cells} cells checked, {skipped} outside n constraints")])
}

fn theorems() -> Outcome {
    let cache = HarmonicCache::global();
    let mut failing = Vec::new();
    let mut cells = 0;
    for i in 1..=12 {
        let id = format!("thm{i}");
        let rec = lookup(&id).unwrap();
        let (p_max, n_max) = match i {
            1..=4 => (LAMBDA_MU_NU_MAX, THEOREM_N_MAX),
            5..=7 => (BD_BCDE_MAX, THEOREM_N_MAX),
            _ => (BD_BCDE_MAX, WHIPPLE_N_MAX),
        };
        let mut ok = true;
        for p in rec.param_grid(p_max) {
            for n in 0..=n_max {
                cells += 1;
                ok &= matches!(rec.check(cache, &p, n), Ok(r) if within(&r.lhs, &r.rhs));
            }
        }
        if !ok {
            failing.push(id);
        }
    }
    Outcome::new(failing, vec![format!("{cells} cells checked")])
}

fn derivations() -> Outcome {
    let mut failing = Vec::new();
    let mut cells = 0;
    for fam in families() {
        let p_max = if fam.id.starts_with("dd_") || fam.id.starts_with("wh_") {
            BD_BCDE_MAX
        } else {
            LAMBDA_MU_NU_MAX
        };
        let n_max = if fam.id.starts_with("wh_") { WHIPPLE_N_MAX } else { THEOREM_N_MAX };
        let mut ok = true;
        for p in fam.param_grid(p_max) {
            for n in 0..=n_max {
                cells += 1;
                ok &= matches!(fam.derive(&p, n), Ok(d) if d.value_match && d.deriv_match);
            }
        }
        if !ok {
            failing.push(fam.id.to_string());
        }
    }
    Outcome::new(
        failing,
        vec![format!("{} families (ps split by parameter), {cells} cells", families().len())],
    )
}

fn oracles() -> Outcome {
    let mut failing = Vec::new();
    let mut detail = Vec::new();
    for t in oracle_tallies() {
        detail.push(format!(
            "{} over {}: {} agree, {} mismatch, {} skipped at poles",
            t.oracle, t.scalar, t.agreed, t.mismatched, t.skipped
        ));
        if t.mismatched > 0 || t.agreed < ORACLE_MIN_CELLS {
            failing.push(format!("{}/{}", t.oracle, t.scalar));
        }
    }
    Outcome::new(failing, detail)
}

/// Hand-written `Ξ_1..Ξ_4`.
fn xi_expected(lambda: u32, n: u32) -> Rational {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let central = binomial_int(2 * i64::from(n), i64::from(n));
    match lambda {
        1 => Rational::from(1),
        2 => Rational::from(i64::from(n == 0)),
        3 => Rational::from(sign),
        _ => Rational::from(sign) * central,
    }
}

fn xi_omega() -> Outcome {
    let mut failing = Vec::new();
    for lambda in 1..=XI_LAMBDA_MAX {
        for n in 0..=XI_N_MAX {
            if !matches!((xi_via_omega(lambda, n), xi(lambda, n)), (Ok(a), Ok(b)) if within(&a, &b)) {
                failing.push(format!("D0 omega lambda={lambda} n={n}"));
            }
        }
    }
    for (lambda, id) in [(1, "t1e8"), (2, "t1e9"), (3, "t1e16"), (4, "t1e17")] {
        let rec = lookup(id).unwrap();
        for n in 0..=XI_N_MAX {
            let expected = xi_expected(lambda, n);
            if !matches!(xi(lambda, n), Ok(v) if within(&v, &expected)) {
                failing.push(format!("xi_{lambda}({n})"));
            }
            let entry = i64::from(n);
            if entry >= rec.n_min {
                let r = rec.check(HarmonicCache::global(), &[], entry).unwrap();
                if !within(&r.lhs, &expected) || !within(&r.rhs, &expected) {
                    failing.push(format!("{id} n={n}"));
                }
            }
        }
    }
    Outcome::new(
        failing,
        vec![
            "Xi_2(0) = 1, so the closed value 0 of t1e9 is checked for n >= 1".into(),
        ],
    )
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

fn choose(n: i64, k: i64) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn entry_four() -> Outcome {
    let rec = lookup("t2e4").unwrap();
    let mut failing = Vec::new();
    for n in 0..=ENTRY4_N_MAX {
        let expected = if n % 2 == 1 {
            Rational::zero()
        } else {
            let m = i64::from(n / 2);
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let multinomial = factorial(3 * m) / factorial(m).pow(3);
            rat(sign * multinomial, choose(4 * m, 2 * m).pow(2)).unwrap()
        };
        let lhs = rec.lhs_value(HarmonicCache::global(), &[], i64::from(n)).unwrap();
        if !within(&lhs, &expected) {
            failing.push(format!("n={n}: {lhs} != {expected}"));
        }
    }
    let n2 = rec.lhs_value(HarmonicCache::global(), &[], 2).unwrap();
    if n2 != rat(-1, 6).unwrap() {
        failing.push(format!("n=2 gives {n2}, expected -1/6"));
    }
    Outcome::new(failing, vec![format!("n=0..{ENTRY4_N_MAX}, n=2 -> {n2}")])
}

fn limit_probes() -> Outcome {
    let mut failing = Vec::new();
    let mut zero = 0;
    let mut probes = 0;
    for n in 0..=PROBE_N_MAX {
        let w = binomial_ratio_weights(n, 1).unwrap();
        for mu in 0..=PROBE_MU_MAX {
            for nu in 0..=PROBE_NU_MAX {
                probes += 1;
                let rep = decay_probe(&ReflectionFamily::reflex(mu, nu), &w, n, &PROBE_YS).unwrap();
                if rep.converged {
                    zero += 1;
                } else if !rep.monotone_decreasing_magnitude {
                    failing.push(format!("mu={mu} nu={nu} n={n}"));
                }
            }
        }
    }
    Outcome::new(
        failing,
        vec![format!(
            "{probes} probes at y = {PROBE_YS:?}; {zero} vanish identically (n = 0), the rest strictly decrease"
        )],
    )
}

fn verify_all(dir: &Path, name: &str) -> (String, i32) {
    let path = dir.join(name);
    let status = Command::new(env!("CARGO_BIN_EXE_hypharm"))
        .args(["verify", "--suite", "all", "--out"])
        .arg(&path)
        .status()
        .expect("spawn hypharm");
    let text = std::fs::read_to_string(&path).expect("report written");
    let body: Vec<&str> = text.lines().filter(|l| !l.contains("\"generated_at\"")).collect();
    (body.join("\n"), status.code().unwrap_or(-1))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let (a, code_a) = verify_all(dir.path(), "a.json");
    let (b, code_b) = verify_all(dir.path(), "b.json");
    let mut failing = Vec::new();
    if a != b {
        failing.push("reports differ".into());
    }
    if code_a != code_b || !(0..=1).contains(&code_a) {
        failing.push(format!("exit codes {code_a} / {code_b}"));
    }
    Outcome::new(
        failing,
        vec![format!("two runs, {} bytes each after removing the timestamp", a.len())],
    )
}

type Criterion = (u8, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "Table I, n = 0..8, exact", || timed(BUDGET_TABLE_ONE, table_one)),
        (2, "Table II, n = 0..6, exact", || timed(BUDGET_TABLE_TWO, table_two)),
        (3, "Theorems 1-12 over their grids", theorems),
        (4, "D0 derivation of every binomial family", derivations),
        (5, "eval_pfq against the four summation oracles", oracles),
        (6, "D0{(x+n) Omega} = Xi and closed Xi_1..Xi_4", xi_omega),
        (7, "Table II entry 4 closed form", entry_four),
        (8, "reflex limit probes decay", || timed(BUDGET_LIMITS, limit_probes)),
        (9, "verify --suite all is deterministic", determinism),
    ];
    let mut ok = true;
    println!("acceptance: tolerance {TOLERANCE} (exact equality)");
    for (id, title, run) in criteria {
        let o = run();
        println!("{} {id}. {title}", if o.pass { "PASS" } else { "FAIL" });
        for d in &o.detail {
            println!("    {d}");
        }
        match UNATTAINABLE.iter().find(|(c, _)| *c == id) {
            Some((_, expected)) => {
                let matches = !o.pass && o.failing == *expected;
                println!(
                    "    known unattainable; failure set {} the analysed misprints",
                    if matches { "matches" } else { "DOES NOT match" }
                );
                ok &= matches;
            }
            None => ok &= o.pass,
        }
        if !o.pass {
            println!("    failing: {}", o.failing.join(", "));
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
