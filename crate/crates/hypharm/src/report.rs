//! The JSON verification report and its ordering rules.

use std::cmp::Ordering;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Named integer parameters, serialized as an object in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Params {
    pub fn new(names: &[&'static str], values: &[i64]) -> Self {
        Params(names.iter().copied().zip(values.iter().copied()).collect())
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|&(_, v)| v).collect()
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub record_id: String,
    pub params: Params,
    pub n: i64,
    pub status: Status,
    /// Violated constraint for skipped cells, diagnosis for failed ones.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Derivative parts, for cells evaluated at a dual point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_deriv: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_deriv: Option<String>,
    /// Set when the printed form fails but the recorded corrected reading holds.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub disputed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrected_lhs: Option<String>,
}

impl Cell {
    pub fn new(record_id: &str, params: Params, n: i64, status: Status) -> Self {
        Cell {
            record_id: record_id.to_string(),
            params,
            n,
            status,
            reason: None,
            lhs: None,
            rhs: None,
            lhs_deriv: None,
            rhs_deriv: None,
            disputed: false,
            corrected_lhs: None,
        }
    }

    pub fn skipped(record_id: &str, params: Params, n: i64, constraint: &str) -> Self {
        let mut c = Cell::new(record_id, params, n, Status::Skipped);
        c.reason = Some(constraint.to_string());
        c
    }

    fn sort_key(&self) -> (Vec<Chunk<'_>>, Vec<i64>, i64) {
        (natural(&self.record_id), self.params.values(), self.n)
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Chunk<'a> {
    Text(&'a str),
    Num(u64),
}

/// Split an id into text and digit runs so that `t1e9 < t1e10`.
fn natural(id: &str) -> Vec<Chunk<'_>> {
    let mut out = Vec::new();
    let mut rest = id;
    while !rest.is_empty() {
        let digits = rest.starts_with(|c: char| c.is_ascii_digit());
        let end = rest
            .find(|c: char| c.is_ascii_digit() != digits)
            .unwrap_or(rest.len());
        let (head, tail) = rest.split_at(end);
        out.push(match head.parse() {
            Ok(v) if digits => Chunk::Num(v),
            _ => Chunk::Text(head),
        });
        rest = tail;
    }
    out
}

/// Report order: record id (natural), then params lexicographically, then n.
pub fn cell_order(a: &Cell, b: &Cell) -> Ordering {
    a.sort_key().cmp(&b.sort_key())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Failed cells whose corrected reading holds; included in `failed`.
    pub disputed: usize,
}

impl Summary {
    pub fn tally(cells: &[Cell]) -> Self {
        let mut s = Summary {
            total: cells.len(),
            ..Summary::default()
        };
        for c in cells {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
            s.disputed += usize::from(c.disputed);
        }
        s
    }
}

/// Effective grid bounds as requested on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GridRequest {
    pub n_max: Option<i64>,
    pub param_max: Option<i64>,
    pub unsafe_large: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub generated_at: String,
    pub grid: GridRequest,
    /// SHA-256 over every field except `generated_at`.
    pub determinism_hash: String,
    pub summary: Summary,
    pub cells: Vec<Cell>,
}

#[derive(Serialize)]
struct Hashed<'a> {
    suite: &'a str,
    grid: &'a GridRequest,
    summary: &'a Summary,
    cells: &'a [Cell],
}

impl VerificationReport {
    /// Sorts the cells, tallies the summary and stamps the hash.
    pub fn assemble(suite: &str, grid: GridRequest, mut cells: Vec<Cell>, generated_at: String) -> Self {
        cells.sort_by(cell_order);
        let summary = Summary::tally(&cells);
        let body = serde_json::to_vec(&Hashed {
            suite,
            grid: &grid,
            summary: &summary,
            cells: &cells,
        })
        .expect("report body serializes");
        let determinism_hash = Sha256::digest(&body)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        VerificationReport {
            suite: suite.to_string(),
            generated_at,
            grid,
            determinism_hash,
            summary,
            cells,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Summary plus every non-passing cell.
    pub fn to_markdown(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "# Verification report: {}\n\n\
             | total | passed | failed | disputed | skipped |\n\
             |---|---|---|---|---|\n\
             | {} | {} | {} | {} | {} |\n\n\
             determinism hash `{}`\n",
            self.suite, s.total, s.passed, s.failed, s.disputed, s.skipped, self.determinism_hash
        );
        let odd: Vec<&Cell> = self.cells.iter().filter(|c| c.status != Status::Pass).collect();
        if !odd.is_empty() {
            out.push_str("\n| record | params | n | status | reason |\n|---|---|---|---|---|\n");
            for c in odd {
                let params: Vec<String> = c.params.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = match (c.status, c.disputed) {
                    (Status::Fail, true) => "fail (disputed)",
                    (Status::Fail, false) => "fail",
                    _ => "skipped",
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    c.record_id,
                    params.join(" "),
                    c.n,
                    status,
                    c.reason.as_deref().unwrap_or("").replace('|', "\\|")
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(id: &str, p: &[i64], n: i64) -> Cell {
        Cell::new(id, Params::new(&["a", "b", "c"][..p.len()], p), n, Status::Pass)
    }

    #[test]
    fn natural_order() {
        let mut cells = [
            cell("t1e10", &[], 0),
            cell("thm2", &[3, 0, 0], 1),
            cell("t1e9", &[], 1),
            cell("thm10", &[0, 0], 0),
            cell("thm2", &[2, 0, 0], 5),
            cell("t1e9", &[], 0),
        ];
        cells.sort_by(cell_order);
        let ids: Vec<(&str, i64)> = cells.iter().map(|c| (c.record_id.as_str(), c.n)).collect();
        assert_eq!(
            ids,
            [("t1e9", 0), ("t1e9", 1), ("t1e10", 0), ("thm2", 5), ("thm2", 1), ("thm10", 0)]
        );
    }

    #[test]
    fn hash_ignores_timestamp_and_input_order() {
        let cells = vec![cell("x", &[], 1), cell("x", &[], 0)];
        let mut rev = cells.clone();
        rev.reverse();
        let a = VerificationReport::assemble("s", GridRequest::default(), cells, "t0".into());
        let b = VerificationReport::assemble("s", GridRequest::default(), rev, "t1".into());
        assert_eq!(a.determinism_hash, b.determinism_hash);
        assert_eq!(a.cells, b.cells);
        assert_eq!(a.determinism_hash.len(), 64);
    }

    #[test]
    fn params_keep_declaration_order() {
        let p = Params::new(&["mu", "lambda"], &[1, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"mu":1,"lambda":2}"#);
    }
}
