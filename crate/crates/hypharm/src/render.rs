//! Table, manifest, derivation and limit-probe documents.

use serde::Serialize;
use serde_json::json;

use hypharm_core::combinatorics::HarmonicCache;
use hypharm_core::identities::{family, registry, IdentityRecord, RecordKind};
use hypharm_core::limits::{binomial_ratio_weights, decay_probe, DecayReport, ReflectionFamily};
use hypharm_core::Rational;

use crate::error::CliError;
use crate::suites::{Caps, SAFE_N_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Markdown,
    Json,
}

/// A rendered document and whether everything it checked held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub ok: bool,
}

fn json_text<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("document serializes");
    s.push('\n');
    s
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

#[derive(Serialize)]
struct TableRow {
    id: &'static str,
    citation: String,
    values: Vec<Sample>,
    status: &'static str,
}

#[derive(Serialize)]
struct Sample {
    n: i64,
    /// Left side as printed; absent where `n` is outside the record's domain.
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
}

fn citation(rec: &IdentityRecord) -> String {
    format!("{}; {}", rec.source, rec.note)
}

/// `pass`, `fail`, or `disputed` when only the corrected reading holds.
fn record_status(rec: &IdentityRecord, n_hi: i64) -> &'static str {
    let cache = HarmonicCache::global();
    let mut printed = true;
    let mut corrected = rec.erratum.is_some();
    for n in rec.n_min..=n_hi {
        printed &= rec.check(cache, &[], n).map(|r| r.equal).unwrap_or(false);
        corrected &= matches!(rec.check_erratum(cache, &[], n), Some(Ok(r)) if r.equal);
    }
    match (printed, corrected) {
        (true, _) => "pass",
        (false, true) => "disputed",
        (false, false) => "fail",
    }
}

/// One row per table entry: citation, left sides at `n = 1..=n_max`, verdict
/// over `n = 0..=n_max`.
pub fn table(which: u8, caps: &Caps, format: Format) -> Result<Rendered, CliError> {
    let kind = match which {
        1 => RecordKind::TableOne,
        2 => RecordKind::TableTwo,
        _ => return Err(CliError::Usage(format!("no table {which}; expected 1 or 2"))),
    };
    caps.validate()?;
    let cache = HarmonicCache::global();
    let rows: Vec<TableRow> = registry()
        .into_iter()
        .filter(|r| r.kind == kind)
        .map(|rec| {
            let n_hi = caps.n(rec.n_max);
            let values = (1..=n_hi)
                .map(|n| Sample {
                    n,
                    lhs: rec.lhs_value(cache, &[], n).ok().map(|v| v.to_string()),
                })
                .collect();
            TableRow {
                id: rec.id,
                citation: citation(rec),
                values,
                status: record_status(rec, n_hi),
            }
        })
        .collect();
    let ok = rows.iter().all(|r| r.status == "pass");
    let text = match format {
        Format::Json => json_text(&json!({ "table": which, "rows": rows })),
        Format::Markdown => {
            let width = rows.iter().map(|r| r.values.len()).max().unwrap_or(0);
            let mut out = String::from("| id | citation |");
            for n in 1..=width {
                out.push_str(&format!(" n={n} |"));
            }
            out.push_str(" status |\n|---|---|");
            out.push_str(&"---|".repeat(width + 1));
            out.push('\n');
            for r in &rows {
                out.push_str(&format!("| {} | {} |", r.id, cell(&r.citation)));
                for i in 0..width {
                    let v = r.values.get(i).and_then(|s| s.lhs.as_deref()).unwrap_or("n/a");
                    out.push_str(&format!(" {v} |"));
                }
                out.push_str(&format!(" {} |\n", r.status));
            }
            out
        }
    };
    Ok(Rendered { text, ok })
}

#[derive(Serialize)]
struct ManifestEntry {
    id: &'static str,
    kind: &'static str,
    source: &'static str,
    note: &'static str,
    params: &'static [&'static str],
    constraints: Vec<String>,
}

/// Record manifest: id, citation, parameter names and constraints.
pub fn manifest(format: Format) -> Rendered {
    let entries: Vec<ManifestEntry> = registry()
        .into_iter()
        .map(|r| {
            let mut constraints: Vec<String> = r.params.iter().map(|p| format!("{p} >= 0")).collect();
            constraints.extend(r.constraints.iter().map(|c| c.label.to_string()));
            constraints.extend(r.n_constraint_label());
            ManifestEntry {
                id: r.id,
                kind: r.kind.as_str(),
                source: r.source,
                note: r.note,
                params: r.params,
                constraints,
            }
        })
        .collect();
    let text = match format {
        Format::Json => json_text(&entries),
        Format::Markdown => {
            let mut out = String::from("| id | kind | source | params | constraints | note |\n|---|---|---|---|---|---|\n");
            for e in &entries {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    e.id,
                    e.kind,
                    e.source,
                    e.params.join(", "),
                    cell(&e.constraints.join("; ")),
                    cell(e.note)
                ));
            }
            out
        }
    };
    Rendered { text, ok: true }
}

/// Parameters given as `name=value` or positionally, in the family's order.
pub fn parse_params(names: &[&str], args: &[String]) -> Result<Vec<i64>, CliError> {
    let mut values: Vec<Option<i64>> = vec![None; names.len()];
    for (i, arg) in args.iter().enumerate() {
        let (slot, raw) = match arg.split_once('=') {
            Some((k, v)) => {
                let slot = names.iter().position(|n| *n == k).ok_or_else(|| {
                    CliError::Usage(format!("unknown parameter {k:?}; expected {}", names.join(", ")))
                })?;
                (slot, v)
            }
            None if i < names.len() => (i, arg.as_str()),
            None => {
                return Err(CliError::Usage(format!(
                    "too many parameters; expected {}",
                    names.join(", ")
                )))
            }
        };
        let v = raw
            .parse()
            .map_err(|_| CliError::Usage(format!("parameter value {raw:?} is not an integer")))?;
        values[slot] = Some(v);
    }
    names
        .iter()
        .zip(values)
        .map(|(name, v)| v.ok_or_else(|| CliError::Usage(format!("missing parameter {name}"))))
        .collect()
}

/// Both sides of a binomial family at `x = 0 + ε`.
pub fn derive(id: &str, args: &[String], n: i64, format: Format) -> Result<Rendered, CliError> {
    let fam = family(id)?;
    let params = parse_params(fam.params, args)?;
    fam.validate(&params, n)?;
    let d = fam.derive(&params, n)?;
    let ok = d.value_match && d.deriv_match;
    let verdict = |m: bool| if m { "match" } else { "MISMATCH" };
    let named: Vec<String> = fam
        .params
        .iter()
        .zip(&params)
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let text = match format {
        Format::Json => json_text(&json!({
            "family": fam.id,
            "source": fam.source,
            "derived_theorem": fam.derived_theorem,
            "params": fam.params.iter().zip(&params).map(|(k, v)| json!({ "name": k, "value": v })).collect::<Vec<_>>(),
            "n": n,
            "x": "0 + eps",
            "lhs": { "value": d.lhs.value().to_string(), "deriv": d.lhs.deriv().to_string() },
            "rhs": { "value": d.rhs.value().to_string(), "deriv": d.rhs.deriv().to_string() },
            "value_match": d.value_match,
            "deriv_match": d.deriv_match,
        })),
        Format::Markdown => format!(
            "family {} ({}), derivative gives {}\n\
             params {} n={n}, evaluated at x = 0 + eps\n\
             lhs = {}\n\
             rhs = {}\n\
             value parts (binomial identity): {} = {}  {}\n\
             deriv parts (harmonic identity): {} = {}  {}\n",
            fam.id,
            fam.source,
            fam.derived_theorem,
            if named.is_empty() { "(none)".to_string() } else { named.join(" ") },
            d.lhs,
            d.rhs,
            d.lhs.value(),
            d.rhs.value(),
            verdict(d.value_match),
            d.lhs.deriv(),
            d.rhs.deriv(),
            verdict(d.deriv_match),
        ),
    };
    Ok(Rendered { text, ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// `binom(n,k)^mu (binom(n+k,k)/binom(2n,k))^nu (n-2k)`.
    Reflex,
    Zero,
}

/// Largest probe point reachable without `--unsafe-large`.
pub const SAFE_Y_MAX: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct LimitRequest {
    pub preset: Preset,
    pub mu: u32,
    pub nu: u32,
    pub n: u32,
    /// Degree exponent of the binomial-ratio weights.
    pub lambda: u32,
    pub ys: Vec<u64>,
    pub unsafe_large: bool,
}

pub fn limit_probe(req: &LimitRequest) -> Result<DecayReport, CliError> {
    if !req.unsafe_large {
        if i64::from(req.n) > SAFE_N_MAX {
            return Err(CliError::Usage(format!(
                "n {} exceeds the safe bound {SAFE_N_MAX}; pass --unsafe-large to allow it",
                req.n
            )));
        }
        if let Some(y) = req.ys.iter().find(|&&y| y > SAFE_Y_MAX) {
            return Err(CliError::Usage(format!(
                "probe point {y} exceeds the safe bound {SAFE_Y_MAX}; pass --unsafe-large to allow it"
            )));
        }
    }
    if req.ys.is_empty() || req.ys[0] == 0 || req.ys.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "--ys must be strictly increasing positive integers".into(),
        ));
    }
    let fam = match req.preset {
        Preset::Reflex => ReflectionFamily::reflex(req.mu, req.nu),
        Preset::Zero => ReflectionFamily::zero(),
    };
    let weights = binomial_ratio_weights(req.n, req.lambda)?;
    Ok(decay_probe(&fam, &weights, req.n, &req.ys)?)
}

/// `m.dddd e±x` from the leading digits, for display only.
pub fn scientific(r: &Rational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = r.numer().magnitude().to_string();
    let den = r.denom().to_string();
    let lead = |s: &str| s[..s.len().min(15)].parse::<f64>().unwrap_or(0.0) / 10f64.powi(s.len().min(15) as i32 - 1);
    let mut m = lead(&num) / lead(&den);
    let mut e = num.len() as i64 - den.len() as i64;
    if m < 1.0 {
        m *= 10.0;
        e -= 1;
    }
    let sign = if r.signum() < 0 { "-" } else { "" };
    format!("{sign}{m:.6}e{e}")
}

pub fn limits(req: &LimitRequest, format: Format) -> Result<Rendered, CliError> {
    let rep = limit_probe(req)?;
    let label = match req.preset {
        Preset::Reflex => format!("reflex mu={} nu={}", req.mu, req.nu),
        Preset::Zero => "zero".to_string(),
    };
    let criterion = "|S(y)| strictly decreasing along ys, or S identically zero";
    let text = match format {
        Format::Json => json_text(&json!({
            "family": label,
            "n": req.n,
            "weights": format!("binomial ratio, lambda={}", req.lambda),
            "criterion": criterion,
            "ys": rep.ys,
            "values": rep.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "monotone_decreasing_magnitude": rep.monotone_decreasing_magnitude,
            "converged": rep.converged,
            "final_magnitude": rep.final_magnitude.to_string(),
            "decays": rep.decays(),
        })),
        Format::Markdown => {
            let mut out = format!(
                "# Limit probe: {label}, n={}, binomial-ratio weights lambda={}\n\n\
                 criterion: {criterion}\n\n| y | S(y) (approx) | |S(y)| (approx) |\n|---|---|---|\n",
                req.n, req.lambda
            );
            for (y, v) in rep.ys.iter().zip(&rep.values) {
                out.push_str(&format!("| {y} | {} | {} |\n", scientific(v), scientific(&v.abs())));
            }
            out.push_str(&format!(
                "\nmonotone decreasing magnitude: {}\nconverged (identically zero): {}\ndecays: {}\n",
                rep.monotone_decreasing_magnitude,
                rep.converged,
                rep.decays()
            ));
            out
        }
    };
    Ok(Rendered { text, ok: rep.decays() })
}
