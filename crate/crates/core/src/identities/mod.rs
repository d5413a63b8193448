//! Executable registry of harmonic number identities.
//!
//! Each [`IdentityRecord`] states `Σ_{k=0..n} A(n,k) = C(n)` (or, for
//! transformations, `= Σ_{l=0..n} B(n,l)`) with exact rational summands.
//! The twelve theorems carry integer parameters; table entries are fixed
//! specialisations. [`families`] holds the parent binomial identities in the
//! free variable `x`, whose derivative at `x = 0` yields the theorems.

mod families;
mod table1;
mod table2;
mod theorems;
mod xi;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{binomial_int, HarmonicCache};
use crate::exactnum::Rational;
use crate::{Error, Result};

pub use families::{
    check_binomial_family, derive_via_d0, families, family, BinomialFamily, DerivationResult,
    FamilyCheck, FamilyKind,
};
pub use xi::{entry4_closed, omega, xi, xi_via_omega};

/// `A(n, k)` given the record's parameters in declaration order.
pub type Summand = fn(&Terms<'_>, i64, i64, &[i64]) -> Result<Rational>;

/// Right-hand side of a record.
#[derive(Clone, Copy)]
pub enum Rhs {
    /// A closed form `C(n)`.
    Closed(fn(&Terms<'_>, i64, &[i64]) -> Result<Rational>),
    /// A finite sum `Σ_{l=0..n} B(n, l)`.
    Sum(Summand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RecordKind {
    Theorem,
    TableOne,
    TableTwo,
    Auxiliary,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::Theorem => "theorem",
            RecordKind::TableOne => "table1",
            RecordKind::TableTwo => "table2",
            RecordKind::Auxiliary => "auxiliary",
        }
    }
}

/// A named predicate over the parameter vector.
#[derive(Clone, Copy)]
pub struct ParamConstraint {
    pub label: &'static str,
    pub holds: fn(&[i64]) -> bool,
}

/// Corrected reading of an entry whose printed form does not hold.
#[derive(Clone, Copy)]
pub struct Erratum {
    pub description: &'static str,
    pub corrected_lhs: Summand,
}

#[derive(Clone, Copy)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub kind: RecordKind,
    /// Where the identity is catalogued, e.g. `"Table I, entry 9"`.
    pub source: &'static str,
    /// How it is obtained, e.g. `"Theorem 5: b, d -> inf"`.
    pub note: &'static str,
    pub params: &'static [&'static str],
    pub constraints: &'static [ParamConstraint],
    /// Smallest admissible `n`.
    pub n_min: i64,
    /// Largest parameter value in the standard verification grid.
    pub param_max: i64,
    /// Largest `n` in the standard verification grid.
    pub n_max: i64,
    pub lhs: Summand,
    pub rhs: Rhs,
    pub erratum: Option<Erratum>,
}

/// Exact outcome of evaluating both sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl CheckResult {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        CheckResult { lhs, rhs, equal }
    }
}

/// Evaluation helpers handed to every summand.
pub struct Terms<'a> {
    cache: &'a HarmonicCache,
}

impl<'a> Terms<'a> {
    pub fn new(cache: &'a HarmonicCache) -> Self {
        Terms { cache }
    }

    /// `H_i`; a negative subscript is a domain error.
    pub fn h(&self, i: i64) -> Result<Rational> {
        self.cache.get(i)
    }

    /// `binom(n, k)` for integers.
    pub fn b(&self, n: i64, k: i64) -> Rational {
        binomial_int(n, k)
    }

    /// `binom(n, k)⁻¹`, failing when the binomial vanishes.
    pub fn ib(&self, n: i64, k: i64) -> Result<Rational> {
        binomial_int(n, k)
            .recip()
            .map_err(|_| Error::DivisionByZero {
                context: format!("binom({n}, {k})^-1"),
            })
    }

    pub fn div(&self, num: Rational, den: Rational) -> Result<Rational> {
        num.checked_div(&den)
    }
}

pub(crate) fn r(i: i64) -> Rational {
    Rational::from(i)
}

pub(crate) fn sign(n: i64) -> Rational {
    if n % 2 == 0 {
        r(1)
    } else {
        r(-1)
    }
}

impl IdentityRecord {
    pub fn n_constraint_label(&self) -> Option<String> {
        (self.n_min > 0).then(|| format!("n > {}", self.n_min - 1))
    }

    /// Reject parameter vectors and `n` outside the record's domain, naming
    /// the violated constraint.
    pub fn validate(&self, params: &[i64], n: i64) -> Result<()> {
        if params.len() != self.params.len() {
            return Err(Error::Domain {
                constraint: format!(
                    "{} parameter(s) ({})",
                    self.params.len(),
                    self.params.join(", ")
                ),
            });
        }
        for (name, v) in self.params.iter().zip(params) {
            if *v < 0 {
                return Err(Error::Domain {
                    constraint: format!("{name} >= 0"),
                });
            }
        }
        if n < 0 {
            return Err(Error::Domain {
                constraint: String::from("n >= 0"),
            });
        }
        for c in self.constraints {
            if !(c.holds)(params) {
                return Err(Error::Domain {
                    constraint: String::from(c.label),
                });
            }
        }
        if n < self.n_min {
            return Err(Error::Domain {
                constraint: self.n_constraint_label().unwrap_or_default(),
            });
        }
        Ok(())
    }

    fn sum(&self, terms: &Terms<'_>, f: Summand, params: &[i64], n: i64) -> Result<Rational> {
        let mut acc = Rational::zero();
        for k in 0..=n {
            acc += f(terms, n, k, params)?;
        }
        Ok(acc)
    }

    pub fn lhs_value(&self, cache: &HarmonicCache, params: &[i64], n: i64) -> Result<Rational> {
        self.validate(params, n)?;
        self.sum(&Terms::new(cache), self.lhs, params, n)
    }

    pub fn rhs_value(&self, cache: &HarmonicCache, params: &[i64], n: i64) -> Result<Rational> {
        self.validate(params, n)?;
        let terms = Terms::new(cache);
        match self.rhs {
            Rhs::Closed(c) => c(&terms, n, params),
            Rhs::Sum(f) => self.sum(&terms, f, params, n),
        }
    }

    pub fn check(&self, cache: &HarmonicCache, params: &[i64], n: i64) -> Result<CheckResult> {
        Ok(CheckResult::new(
            self.lhs_value(cache, params, n)?,
            self.rhs_value(cache, params, n)?,
        ))
    }

    /// Check the corrected reading, when the record carries one.
    pub fn check_erratum(
        &self,
        cache: &HarmonicCache,
        params: &[i64],
        n: i64,
    ) -> Option<Result<CheckResult>> {
        let erratum = self.erratum?;
        Some((|| {
            self.validate(params, n)?;
            let lhs = self.sum(&Terms::new(cache), erratum.corrected_lhs, params, n)?;
            Ok(CheckResult::new(lhs, self.rhs_value(cache, params, n)?))
        })())
    }

    /// Every admissible parameter vector with entries in `0..=param_max`,
    /// in lexicographic order.
    pub fn param_grid(&self, param_max: i64) -> Vec<Vec<i64>> {
        lex_grid(self.params.len(), self.constraints, param_max)
    }
}

pub(crate) fn lex_grid(
    len: usize,
    constraints: &[ParamConstraint],
    param_max: i64,
) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = alloc::vec![0i64; len];
    loop {
        if constraints.iter().all(|c| (c.holds)(&current)) {
            out.push(current.clone());
        }
        let mut i = current.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < param_max {
                current[i] += 1;
                for v in &mut current[i + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// All records: 12 theorems, 26 Table I entries, 21 Table II entries and
/// three auxiliary specialisations, in that order.
pub fn registry() -> Vec<&'static IdentityRecord> {
    theorems::RECORDS
        .iter()
        .chain(table1::RECORDS.iter())
        .chain(table2::RECORDS.iter())
        .chain(theorems::AUXILIARY.iter())
        .collect()
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    registry()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::NotFound {
            id: String::from(id),
        })
}

/// Evaluate both sides of record `id` using the process-wide harmonic cache.
pub fn check_identity(id: &str, params: &[i64], n: i64) -> Result<CheckResult> {
    lookup(id)?.check(HarmonicCache::global(), params, n)
}

/// Catalogue location of every identity, paired with its record id.
pub static MANIFEST: [(&str, &str); 62] = [
    ("Theorem 1", "thm1"),
    ("Theorem 2", "thm2"),
    ("Theorem 3", "thm3"),
    ("Theorem 4", "thm4"),
    ("Theorem 5", "thm5"),
    ("Theorem 6", "thm6"),
    ("Theorem 7", "thm7"),
    ("Theorem 8", "thm8"),
    ("Theorem 9", "thm9"),
    ("Theorem 10", "thm10"),
    ("Theorem 11", "thm11"),
    ("Theorem 12", "thm12"),
    ("Table I, entry 1", "t1e1"),
    ("Table I, entry 2", "t1e2"),
    ("Table I, entry 3", "t1e3"),
    ("Table I, entry 4", "t1e4"),
    ("Table I, entry 5", "t1e5"),
    ("Table I, entry 6", "t1e6"),
    ("Table I, entry 7", "t1e7"),
    ("Table I, entry 8", "t1e8"),
    ("Table I, entry 9", "t1e9"),
    ("Table I, entry 10", "t1e10"),
    ("Table I, entry 11", "t1e11"),
    ("Table I, entry 12", "t1e12"),
    ("Table I, entry 13", "t1e13"),
    ("Table I, entry 14", "t1e14"),
    ("Table I, entry 15", "t1e15"),
    ("Table I, entry 16", "t1e16"),
    ("Table I, entry 17", "t1e17"),
    ("Table I, entry 18", "t1e18"),
    ("Table I, entry 19", "t1e19"),
    ("Table I, entry 20", "t1e20"),
    ("Table I, entry 21", "t1e21"),
    ("Table I, entry 22", "t1e22"),
    ("Table I, entry 23", "t1e23"),
    ("Table I, entry 24", "t1e24"),
    ("Table I, entry 25", "t1e25"),
    ("Table I, entry 26", "t1e26"),
    ("Table II, entry 1", "t2e1"),
    ("Table II, entry 2", "t2e2"),
    ("Table II, entry 3", "t2e3"),
    ("Table II, entry 4", "t2e4"),
    ("Table II, entry 5", "t2e5"),
    ("Table II, entry 6", "t2e6"),
    ("Table II, entry 7", "t2e7"),
    ("Table II, entry 8", "t2e8"),
    ("Table II, entry 9", "t2e9"),
    ("Table II, entry 10", "t2e10"),
    ("Table II, entry 11", "t2e11"),
    ("Table II, entry 12", "t2e12"),
    ("Table II, entry 13", "t2e13"),
    ("Table II, entry 14", "t2e14"),
    ("Table II, entry 15", "t2e15"),
    ("Table II, entry 16", "t2e16"),
    ("Table II, entry 17", "t2e17"),
    ("Table II, entry 18", "t2e18"),
    ("Table II, entry 19", "t2e19"),
    ("Table II, entry 20", "t2e20"),
    ("Table II, entry 21", "t2e21"),
    ("Theorem 1 at mu = 0", "wench"),
    ("Theorem 1 at lambda = mu = 0", "wench_lam0"),
    ("Table II, entry 4, closed form", "t2e4_closed"),
];
