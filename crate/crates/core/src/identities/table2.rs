//! Table II: transformations `Σ_k A(n,k) = Σ_l B(n,l)`.

use super::{r, sign, IdentityRecord, RecordKind, Rhs, Summand, Terms};
use crate::exactnum::Rational;
use crate::Result;

const fn entry(
    id: &'static str,
    source: &'static str,
    note: &'static str,
    n_min: i64,
    lhs: Summand,
    rhs: Summand,
) -> IdentityRecord {
    IdentityRecord {
        id,
        kind: RecordKind::TableTwo,
        source,
        note,
        params: &[],
        constraints: &[],
        n_min,
        param_max: 0,
        n_max: 6,
        lhs,
        rhs: Rhs::Sum(rhs),
        erratum: None,
    }
}

/// `binom(n,k)^i binom(n+k,k)^j binom(2n,k)^m · {1 + c(n-2k)·bracket}`,
/// negative exponents dividing.
fn weighted(
    t: &Terms<'_>,
    n: i64,
    k: i64,
    exps: [i32; 3],
    c: i64,
    bracket: Rational,
) -> Result<Rational> {
    let mut num = r(1);
    let mut den = r(1);
    for (e, base) in exps.into_iter().zip([t.b(n, k), t.b(n + k, k), t.b(2 * n, k)]) {
        if e >= 0 {
            num *= base.pow(e as u32);
        } else {
            den *= base.pow(e.unsigned_abs());
        }
    }
    Ok(t.div(num, den)? * (r(1) + r(c * (n - 2 * k)) * bracket))
}

/// `binom(1+3n, n) / binom(2n, n)^2`.
fn pre(t: &Terms<'_>, n: i64) -> Result<Rational> {
    t.div(t.b(1 + 3 * n, n), t.b(2 * n, n).pow(2))
}

pub(super) fn entry4_lhs(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    weighted(t, n, k, [3, 2, -2], 1, r(3) * t.h(k)? - r(2) * t.h(n + k)?)
}

fn entry4_rhs(t: &Terms<'_>, n: i64, l: i64, _: &[i64]) -> Result<Rational> {
    Ok(pre(t, n)?
        * t.div(sign(l) * t.b(n, l) * t.b(n + l, l).pow(2), t.b(1 + 2 * n + l, l))?)
}

pub(super) static RECORDS: [IdentityRecord; 21] = [
    entry("t2e1", "Table II, entry 1", "Theorem 8: e = 0, b = c = d = 1", 0,
        |t, n, k, _| weighted(t, n, k, [1, 3, -3], 1, t.h(k)? - r(3) * t.h(n + k)?),
        |t, n, l, _| {
            Ok(pre(t, n)?
                * t.div(r(1 + 2 * n), r(1 + 2 * n - l))?
                * t.div(t.b(n + l, l).pow(2), t.b(1 + 2 * n + l, l))?)
        }),
    entry("t2e2", "Table II, entry 2", "Theorem 8: b = c = d = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [2, 4, -4], 2, t.h(k)? - r(2) * t.h(n + k)?),
        |t, n, l, _| {
            Ok(pre(t, n)?
                * t.div(
                    t.b(n, l) * t.b(n + l, l).pow(2) * t.b(1 + 3 * n, l),
                    t.b(2 * n, l).pow(2) * t.b(1 + 2 * n + l, l),
                )?)
        }),
    entry("t2e3", "Table II, entry 3", "Theorem 9: b = d = 1, c = 0, e -> inf", 0,
        |t, n, k, _| weighted(t, n, k, [1, 2, -2], 1, t.h(k)? - r(2) * t.h(n + k)?),
        |t, n, l, _| Ok(pre(t, n)? * t.div(t.b(n + l, l).pow(2), t.b(1 + 2 * n + l, l))?)),
    entry("t2e4", "Table II, entry 4", "Theorem 9: b = d = 1, c -> inf, e = 0", 0,
        entry4_lhs, entry4_rhs),
    entry("t2e5", "Table II, entry 5", "Theorem 9: e -> inf, b = c = d = 1", 0,
        |t, n, k, _| weighted(t, n, k, [2, 3, -3], 1, r(2) * t.h(k)? - r(3) * t.h(n + k)?),
        |t, n, l, _| {
            Ok(pre(t, n)?
                * t.div(
                    t.b(n, l) * t.b(n + l, l).pow(2),
                    t.b(2 * n, l) * t.b(1 + 2 * n + l, l),
                )?)
        }),
    entry("t2e6", "Table II, entry 6", "Theorem 9: e = 0, b = c = d = 1", 0,
        |t, n, k, _| weighted(t, n, k, [3, 3, -3], 3, t.h(k)? - t.h(n + k)?),
        |t, n, l, _| {
            Ok(pre(t, n)?
                * t.div(
                    sign(l) * t.b(n, l).pow(2) * t.b(n + l, l).pow(2),
                    t.b(2 * n, l) * t.b(1 + 2 * n + l, l),
                )?)
        }),
    entry("t2e7", "Table II, entry 7", "Theorem 10: b = 0, c = e = 1, d -> inf", 0,
        |t, n, k, _| weighted(t, n, k, [1, -2, 2], 1, t.h(k)? + r(2) * t.h(n + k)?),
        |t, n, l, _| {
            t.div(sign(l) * t.b(n, l) * t.b(3 * n + l, l), t.b(n + l, l).pow(2))
        }),
    entry("t2e8", "Table II, entry 8", "Theorem 10: b = 1, c = e = 0, d -> inf", 0,
        |t, n, k, _| weighted(t, n, k, [4, 1, -1], 1, r(4) * t.h(k)? - t.h(n + k)?),
        |t, n, l, _| t.div(sign(l) * t.b(n, l) * t.b(n + l, l).pow(2), t.b(2 * n, n))),
    entry("t2e9", "Table II, entry 9", "Theorem 10: b = d = 1, c = 0, e -> inf", 0,
        entry4_lhs, entry4_rhs),
    entry("t2e10", "Table II, entry 10", "Theorem 10: b = d = 1, c = e = 0", 0,
        |t, n, k, _| weighted(t, n, k, [4, 2, -2], 2, r(2) * t.h(k)? - t.h(n + k)?),
        |t, n, l, _| {
            Ok(pre(t, n)?
                * t.div(sign(l) * t.b(n, l) * t.b(n + l, l).pow(3), t.b(1 + 2 * n + l, l))?)
        }),
    entry("t2e11", "Table II, entry 11", "Theorem 11: b -> inf, d = 1, c = e = 0", 0,
        |t, n, k, _| weighted(t, n, k, [4, -1, 1], 1, r(4) * t.h(k)? + t.h(n + k)?),
        |t, n, l, _| {
            t.div(sign(n) * t.b(n, l).pow(2) * t.b(2 * n + l, l), t.b(n + l, l))
        }),
    entry("t2e12", "Table II, entry 12", "Theorem 11: b = 1, c = d = e = 0", 0,
        |t, n, k, _| weighted(t, n, k, [5, 1, -1], 1, r(5) * t.h(k)? - t.h(n + k)?),
        |t, n, l, _| {
            t.div(sign(n) * t.b(n, l).pow(2) * t.b(n + l, l).pow(2), t.b(2 * n, n))
        }),
    entry("t2e13", "Table II, entry 13", "Theorem 11: b -> inf, d = 0, c = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [3, -2, 2], 1, r(3) * t.h(k)? + r(2) * t.h(n + k)?),
        |t, n, l, _| {
            t.div(sign(n) * t.b(n, l).pow(2) * t.b(3 * n + l, l), t.b(n + l, l).pow(2))
        }),
    entry("t2e14", "Table II, entry 14", "Theorem 11: n > 0, b = 0, c = d = e = 1", 1,
        |t, n, k, _| weighted(t, n, k, [1, -3, 3], 1, t.h(k)? + r(3) * t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                r(n) * sign(l) * t.b(n, l) * t.b(3 * n + l, l),
                r(2 * n - l) * t.b(n + l, l).pow(2),
            )
        }),
    entry("t2e15", "Table II, entry 15", "Theorem 11: b -> inf, c = d = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [2, -3, 3], 1, r(2) * t.h(k)? + r(3) * t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                sign(n) * t.b(n, l) * t.b(2 * n, l) * t.b(3 * n + l, l),
                t.b(2 * n, n) * t.b(n + l, l).pow(2),
            )
        }),
    entry("t2e16", "Table II, entry 16", "Theorem 12: b = c = d = 0, e -> inf; cf. Paule-Schneider", 0,
        |t, n, k, _| weighted(t, n, k, [5, 0, 0], 5, t.h(k)?),
        |t, n, l, _| Ok(sign(n) * t.b(n, l).pow(2) * t.b(n + l, n))),
    entry("t2e17", "Table II, entry 17", "Theorem 12: b = c = d = e = 0", 0,
        |t, n, k, _| weighted(t, n, k, [6, 0, 0], 6, t.h(k)?),
        |t, n, l, _| Ok(sign(n) * t.b(n, l).pow(2) * t.b(n + l, n) * t.b(2 * n - l, n))),
    entry("t2e18", "Table II, entry 18", "Theorem 12: e = 1, b = c = d = 0", 0,
        |t, n, k, _| weighted(t, n, k, [5, -1, 1], 1, r(5) * t.h(k)? + t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                sign(n) * t.b(2 * n, n) * t.b(n, l).pow(3) * t.b(2 * n + l, l),
                t.b(n + l, l) * t.b(2 * n, l),
            )
        }),
    entry("t2e19", "Table II, entry 19", "Theorem 12: b = d = 0, c = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [4, -2, 2], 2, r(2) * t.h(k)? + t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                sign(n) * t.b(2 * n, n) * t.b(n, l).pow(3) * t.b(3 * n + l, l),
                t.b(n + l, l).pow(2) * t.b(2 * n, l),
            )
        }),
    entry("t2e20", "Table II, entry 20", "Theorem 12: b = 0, c = d = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [3, -3, 3], 3, t.h(k)? + t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                sign(n) * t.b(3 * n, n) * t.b(n, l).pow(2) * t.b(2 * n, l) * t.b(3 * n + l, l),
                t.b(2 * n, n) * t.b(n + l, l).pow(2) * t.b(3 * n, l),
            )
        }),
    entry("t2e21", "Table II, entry 21", "Theorem 12: b = c = d = e = 1", 0,
        |t, n, k, _| weighted(t, n, k, [2, -4, 4], 2, t.h(k)? + r(2) * t.h(n + k)?),
        |t, n, l, _| {
            t.div(
                sign(n) * t.b(4 * n, n) * t.b(n, l) * t.b(2 * n, l).pow(2) * t.b(3 * n + l, l),
                t.b(2 * n, n).pow(2) * t.b(4 * n, l) * t.b(n + l, l).pow(2),
            )
        }),
];
