//! Table I: closed-form identities `Σ_k A(n,k) = C(n)`.

use super::{r, sign, Erratum, IdentityRecord, RecordKind, Rhs, Summand, Terms};
use crate::exactnum::Rational;
use crate::Result;

type Closed = fn(&Terms<'_>, i64, &[i64]) -> Result<Rational>;

const fn entry(
    id: &'static str,
    source: &'static str,
    note: &'static str,
    n_min: i64,
    lhs: Summand,
    rhs: Closed,
    erratum: Option<Erratum>,
) -> IdentityRecord {
    IdentityRecord {
        id,
        kind: RecordKind::TableOne,
        source,
        note,
        params: &[],
        constraints: &[],
        n_min,
        param_max: 0,
        n_max: 8,
        lhs,
        rhs: Rhs::Closed(rhs),
        erratum,
    }
}

fn one_plus(n: i64, k: i64, c: i64, bracket: Rational) -> Rational {
    r(1) + r(c * (n - 2 * k)) * bracket
}

fn one_minus(n: i64, k: i64, c: i64, bracket: Rational) -> Rational {
    r(1) - r(c * (n - 2 * k)) * bracket
}

// Entries 5-7 as printed carry binom(3n+k, 2n); the left sides then exceed
// the right sides by binom(3n, n). The weight below restores the equality.
fn e567_weight(t: &Terms<'_>, n: i64, k: i64) -> Result<Rational> {
    t.div(t.b(n, k).pow(2) * t.b(3 * n + k, k), t.b(n + k, k))
}

fn e5_fixed(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    Ok(e567_weight(t, n, k)? * (t.h(3 * n + k)? - t.h(k)?))
}

fn e6_fixed(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    Ok(e567_weight(t, n, k)? * (t.h(k)? - t.h(n - k)?))
}

fn e7_fixed(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    Ok(e567_weight(t, n, k)? * (t.h(n + k)? - t.h(k)?))
}

fn e22_fixed(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    let w = t.div(t.b(n + k, k), t.b(n, k) * t.b(2 * n, k))?;
    Ok(w * one_minus(n, k, 1, t.h(k)? + t.h(n + k)?))
}

const E567: &str = "printed binom(3n+k, 2n) gives a left side binom(3n, n) times too large; \
                    corrected weight binom(n,k)^2 binom(3n+k,k) / binom(n+k,k)";

pub(super) static RECORDS: [IdentityRecord; 26] = [
    entry("t1e1", "Table I, entry 1", "Theorem 2: lambda = 2, mu = nu = 0", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * t.b(2 * n + k, k) * (t.h(2 * n + k)? - t.h(k)?)),
        |t, n, _| Ok(r(2) * t.b(2 * n, n).pow(2) * (t.h(2 * n)? - t.h(n)?)),
        None),
    entry("t1e2", "Table I, entry 2", "Theorem 3: lambda = 2, mu = nu = 0", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * t.b(2 * n + k, k) * (t.h(k)? - t.h(n - k)?)),
        |t, n, _| Ok(t.b(2 * n, n).pow(2) * (t.h(2 * n)? - t.h(n)?)),
        None),
    entry("t1e3", "Table I, entry 3", "Theorem 2: lambda = 3, mu = 1, nu = 0", 0,
        |t, n, k, _| {
            Ok(t.b(n, k) * t.b(2 * n, k) * t.b(3 * n + k, k) * (t.h(3 * n + k)? - t.h(k)?))
        },
        |t, n, _| Ok(t.b(3 * n, n).pow(2) * (r(2) * t.h(3 * n)? - t.h(n)? - t.h(2 * n)?)),
        None),
    entry("t1e4", "Table I, entry 4", "Theorem 3: lambda = 3, mu = 1, nu = 0", 0,
        |t, n, k, _| {
            Ok(t.b(n, k) * t.b(2 * n, k) * t.b(3 * n + k, k) * (t.h(2 * n - k)? - t.h(k)?))
        },
        |t, n, _| Ok(t.b(3 * n, n).pow(2) * (r(2) * t.h(2 * n)? - t.h(n)? - t.h(3 * n)?)),
        None),
    entry("t1e5", "Table I, entry 5", "Theorem 2: lambda = 3, mu = 0, nu = 1", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * t.b(3 * n + k, 2 * n) * (t.h(3 * n + k)? - t.h(k)?)),
        |t, n, _| Ok(t.b(3 * n, n) * (t.h(2 * n)? + t.h(3 * n)? - r(2) * t.h(n)?)),
        Some(Erratum { description: E567, corrected_lhs: e5_fixed })),
    entry("t1e6", "Table I, entry 6", "Theorem 3: lambda = 3, mu = 0, nu = 1", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * t.b(3 * n + k, 2 * n) * (t.h(k)? - t.h(n - k)?)),
        |t, n, _| Ok(t.b(3 * n, n) * (t.h(3 * n)? - t.h(2 * n)?)),
        Some(Erratum { description: E567, corrected_lhs: e6_fixed })),
    entry("t1e7", "Table I, entry 7", "Theorem 4: lambda = 3, mu = 0, nu = 1", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * t.b(3 * n + k, 2 * n) * (t.h(n + k)? - t.h(k)?)),
        |t, n, _| Ok(t.b(3 * n, n) * (r(3) * t.h(2 * n)? - r(2) * t.h(n)? - t.h(3 * n)?)),
        Some(Erratum { description: E567, corrected_lhs: e7_fixed })),
    entry("t1e8", "Table I, entry 8", "Theorem 5: b = 0, d -> inf; cf. Paule-Schneider", 0,
        |t, n, k, _| Ok(t.b(n, k) * one_plus(n, k, 1, t.h(k)?)),
        |_, _, _| Ok(r(1)),
        None),
    // The sum is 1 at n = 0, so the zero right side needs n > 0.
    entry("t1e9", "Table I, entry 9", "Theorem 5: b, d -> inf; cf. Paule-Schneider", 1,
        |t, n, k, _| Ok(t.b(n, k).pow(2) * one_plus(n, k, 2, t.h(k)?)),
        |_, _, _| Ok(r(0)),
        None),
    entry("t1e10", "Table I, entry 10", "Theorem 5: b = 0, d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(n + k, k) * t.b(2 * n - k, n) * one_plus(n, k, 1, t.h(k)? - t.h(n + k)?))
        },
        |t, n, _| Ok(t.b(1 + 2 * n, n)),
        None),
    entry("t1e11", "Table I, entry 11", "Theorem 5: b = d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(n + k, k).pow(2)
                * t.b(2 * n - k, n).pow(2)
                * one_plus(n, k, 2, t.h(k)? - t.h(n + k)?))
        },
        |t, n, _| Ok(t.b(1 + 3 * n, n)),
        None),
    entry("t1e12", "Table I, entry 12", "Theorem 6: b = 0, d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(2 * n, k) * t.b(2 * n, n + k) * one_plus(n, k, 1, t.h(k)? + t.h(n + k)?))
        },
        |t, n, _| Ok(t.b(2 * n - 1, n)),
        None),
    entry("t1e13", "Table I, entry 13", "Theorem 6: b -> inf, d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(n, k)
                * t.b(2 * n, k)
                * t.b(2 * n, n + k)
                * one_plus(n, k, 1, r(2) * t.h(k)? + t.h(n + k)?))
        },
        |_, n, _| Ok(sign(n)),
        None),
    entry("t1e14", "Table I, entry 14", "Theorem 6: b = 1, d -> inf", 0,
        |t, n, k, _| {
            Ok(t.b(n, k)
                * t.b(n + k, n)
                * t.b(2 * n - k, n)
                * one_plus(n, k, 1, r(2) * t.h(k)? - t.h(n + k)?))
        },
        |_, _, _| Ok(r(1)),
        None),
    entry("t1e15", "Table I, entry 15", "Theorem 6: b = 1, d = 0", 0,
        |t, n, k, _| {
            Ok(t.b(n, k).pow(2)
                * t.b(n + k, n)
                * t.b(2 * n - k, n)
                * one_plus(n, k, 1, r(3) * t.h(k)? - t.h(n + k)?))
        },
        |_, n, _| Ok(sign(n)),
        None),
    entry("t1e16", "Table I, entry 16", "Theorem 7: b = 0, d -> inf; cf. Paule-Schneider", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(3) * one_plus(n, k, 3, t.h(k)?)),
        |_, n, _| Ok(sign(n)),
        None),
    entry("t1e17", "Table I, entry 17", "Theorem 7: b = d = 0; cf. Paule-Schneider", 0,
        |t, n, k, _| Ok(t.b(n, k).pow(4) * one_plus(n, k, 4, t.h(k)?)),
        |t, n, _| Ok(sign(n) * t.b(2 * n, n)),
        None),
    entry("t1e18", "Table I, entry 18", "Theorem 7: b = 0, d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(n, k).pow(2)
                * t.b(2 * n, k)
                * t.b(2 * n, n + k)
                * one_plus(n, k, 1, r(3) * t.h(k)? + t.h(n + k)?))
        },
        |t, n, _| Ok(sign(n) * t.b(3 * n, n)),
        None),
    entry("t1e19", "Table I, entry 19", "Theorem 7: b = d = 1", 0,
        |t, n, k, _| {
            Ok(t.b(2 * n, k).pow(2)
                * t.b(2 * n, n + k).pow(2)
                * one_plus(n, k, 2, t.h(k)? + t.h(n + k)?))
        },
        |t, n, _| Ok(sign(n) * t.b(4 * n, n)),
        None),
    entry("t1e20", "Table I, entry 20", "Theorem 8: e -> inf, b = c = d = 0", 0,
        |t, n, k, _| t.div(one_minus(n, k, 1, t.h(k)?), t.b(n, k)),
        |t, n, _| Ok(r(1 + n) * t.h(n + 1)?),
        None),
    entry("t1e21", "Table I, entry 21", "Theorem 8: b = c = d = e = 0", 0,
        |t, n, k, _| t.div(one_minus(n, k, 2, t.h(k)?), t.b(n, k).pow(2)),
        |t, n, _| Ok(r(2) * t.div(r((1 + n) * (1 + n)), r(2 + n))? * t.h(n + 1)?),
        None),
    entry("t1e22", "Table I, entry 22", "Theorem 8: e = 1, b = c = d = 0", 0,
        |t, n, k, _| {
            t.div(
                one_minus(n, k, 1, t.h(k)? + t.h(n + k)?),
                t.b(2 * n, k) * t.b(2 * n, n + k),
            )
        },
        |t, n, _| {
            let half = t.div(r(2 * n + 1), r(2))?;
            Ok(t.div(r(1 + 2 * n), r(2 + 2 * n))? + half * t.h(1 + 2 * n)?)
        },
        Some(Erratum {
            description: "printed weight 1/(binom(2n,k) binom(2n,n+k)) does not sum to the \
                          right side; binom(2n,n) times it, binom(n+k,k)/(binom(n,k) binom(2n,k)), does",
            corrected_lhs: e22_fixed,
        })),
    entry("t1e23", "Table I, entry 23", "Theorem 8: b = d = 0, c = 1, e -> inf", 0,
        |t, n, k, _| Ok(t.div(t.b(n + k, k), t.b(2 * n, k))? * one_minus(n, k, 1, t.h(n + k)?)),
        |t, n, _| Ok(r(1 + 2 * n) * (t.h(1 + 2 * n)? - t.h(n)?)),
        None),
    entry("t1e24", "Table I, entry 24", "Theorem 8: b = d = 0, c = e = 1", 0,
        |t, n, k, _| {
            Ok(t.div(t.b(n + k, k).pow(2), t.b(2 * n, k).pow(2))?
                * one_minus(n, k, 2, t.h(n + k)?))
        },
        |t, n, _| {
            Ok(r(2)
                * t.div(r((1 + 2 * n) * (1 + 2 * n)), r(2 + 3 * n))?
                * (t.h(1 + 2 * n)? - t.h(n)?))
        },
        None),
    entry("t1e25", "Table I, entry 25", "Theorem 9: n > 1, b = c = d = 0, e = 1", 2,
        |t, n, k, _| {
            Ok(t.div(t.b(2 * n, k), t.b(n, k) * t.b(n + k, k))?
                * one_minus(n, k, 1, t.h(k)? - t.h(n + k)?))
        },
        |t, n, _| {
            Ok(t.div(r(n * (n + 1)), r(n - 1))?
                * (t.h(n + 1)? + t.h(n - 1)? - t.h(2 * n)?))
        },
        None),
    entry("t1e26", "Table I, entry 26", "Theorem 10: n > 0, b = d = 0, c = e = 1", 1,
        |t, n, k, _| {
            Ok(t.div(t.b(2 * n, k).pow(2), t.b(n + k, k).pow(2))?
                * one_plus(n, k, 2, t.h(n + k)?))
        },
        |t, n, _| Ok(t.div(r(2 * n), r(3))? * (t.h(2 * n)? - t.h(n - 1)?)),
        None),
];
