//! Theorems 1-12 and the auxiliary specialisations.

use super::{r, sign, Erratum, IdentityRecord, ParamConstraint, RecordKind, Rhs, Terms};
use crate::exactnum::Rational;
use crate::Result;

const LAMBDA_MU: &[&str] = &["lambda", "mu"];
const LAMBDA_MU_NU: &[&str] = &["lambda", "mu", "nu"];
const BD: &[&str] = &["b", "d"];
const BCDE: &[&str] = &["b", "c", "d", "e"];

const BALANCED: &[ParamConstraint] = &[ParamConstraint {
    label: "lambda > 1 + mu + nu",
    holds: |p| p[0] > 1 + p[1] + p[2],
}];

fn thm1_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let (l, m) = (p[0], p[1]);
    Ok(t.b(n + m * n, k) * t.b(n + l * n, n - k) * t.h(l * n + k)?)
}

fn thm1_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (l, m) = (p[0], p[1]);
    Ok(t.b(2 * n + l * n + m * n, n)
        * (t.h(l * n + n)? + t.h(l * n + m * n + n)? - t.h(l * n + m * n + 2 * n)?))
}

/// Shared binomial weight of Theorems 2-4.
fn ps_weight(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let (l, m, v) = (p[0], p[1], p[2]);
    let s = l - m - v - 2;
    t.div(
        t.b(n, k) * t.b(l * n + k, k) * t.b(m * n + n, k),
        t.b(v * n + k, k) * t.b(s * n + k, k),
    )
}

fn ps_prefactor(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (l, m, v) = (p[0], p[1], p[2]);
    t.div(
        t.b((l - v) * n, n) * t.b((m + v + 2) * n, n),
        t.b(v * n + n, n) * t.b((l - m - v - 1) * n, n),
    )
}

fn thm2_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let s = p[0] - p[1] - p[2] - 2;
    Ok(ps_weight(t, n, k, p)? * (t.h(p[0] * n + k)? - t.h(s * n + k)?))
}

fn thm2_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (l, m, v) = (p[0], p[1], p[2]);
    Ok(ps_prefactor(t, n, p)?
        * (t.h((l - v) * n)? - t.h((l - v - 1) * n)? + t.h(l * n)?
            - t.h((l - m - v - 1) * n)?))
}

fn thm3_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let s = p[0] - p[1] - p[2] - 2;
    Ok(ps_weight(t, n, k, p)? * (t.h(p[1] * n + n - k)? - t.h(s * n + k)?))
}

fn thm3_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (l, m, v) = (p[0], p[1], p[2]);
    Ok(ps_prefactor(t, n, p)?
        * (t.h((m + v + 1) * n)? - t.h((m + v + 2) * n)? + t.h(m * n + n)?
            - t.h((l - m - v - 1) * n)?))
}

fn thm4_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let s = p[0] - p[1] - p[2] - 2;
    Ok(ps_weight(t, n, k, p)? * (t.h(p[2] * n + k)? - t.h(s * n + k)?))
}

fn thm4_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (l, m, v) = (p[0], p[1], p[2]);
    Ok(ps_prefactor(t, n, p)?
        * (t.h((m + v + 1) * n)? - t.h((m + v + 2) * n)? + t.h((l - v) * n)?
            - t.h((l - v - 1) * n)?
            + t.h(v * n + n)?
            - t.h((l - m - v - 1) * n)?))
}

/// `1 + (n-2k)·bracket`.
fn one_plus(n: i64, k: i64, bracket: Rational) -> Rational {
    r(1) + r(n - 2 * k) * bracket
}

fn thm5_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    let w = t.div(
        t.b(n, k).pow(2) * t.b(k + b * n, k) * t.b(k + d * n, k),
        t.b(n + b * n, k) * t.b(n + d * n, k),
    )?;
    Ok(w * one_plus(n, k, r(2) * t.h(k)? - t.h(b * n + k)? - t.h(d * n + k)?))
}

fn thm5_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    t.div(
        t.b(1 + b * n + d * n + n, n),
        t.b(n + b * n, n) * t.b(n + d * n, n),
    )
}

fn thm6_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    let w = t.div(
        t.b(n, k).pow(2) * t.b(k + b * n, k) * t.b(n + d * n, k),
        t.b(n + b * n, k) * t.b(k + d * n, k),
    )?;
    Ok(w * one_plus(n, k, r(2) * t.h(k)? - t.h(b * n + k)? + t.h(d * n + k)?))
}

fn thm6_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    t.div(
        sign(n) * t.b(b * n - d * n, n),
        t.b(n + b * n, n) * t.b(n + d * n, n),
    )
}

fn thm7_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    let w = t.div(
        t.b(n, k).pow(2) * t.b(n + b * n, k) * t.b(n + d * n, k),
        t.b(k + b * n, k) * t.b(k + d * n, k),
    )?;
    Ok(w * one_plus(n, k, r(2) * t.h(k)? + t.h(b * n + k)? + t.h(d * n + k)?))
}

fn thm7_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let (b, d) = (p[0], p[1]);
    t.div(
        sign(n) * t.b(2 * n + b * n + d * n, n),
        t.b(n + b * n, n) * t.b(n + d * n, n),
    )
}

/// Left side of Theorems 8-12. `up[i]` selects, for parameter `p[i]`, the
/// factor `binom(k+pn,k)/binom(n+pn,k)` with `-H_{pn+k}`; otherwise
/// `binom(n+pn,k)/binom(k+pn,k)` with `+H_{pn+k}`.
fn whipple_lhs(
    t: &Terms<'_>,
    n: i64,
    k: i64,
    p: &[i64],
    up: [bool; 4],
) -> Result<Rational> {
    let mut num = t.b(n, k).pow(2);
    let mut den = r(1);
    let mut bracket = r(2) * t.h(k)?;
    for (&is_up, &q) in up.iter().zip(p) {
        if is_up {
            num *= t.b(k + q * n, k);
            den *= t.b(n + q * n, k);
            bracket -= t.h(q * n + k)?;
        } else {
            num *= t.b(n + q * n, k);
            den *= t.b(k + q * n, k);
            bracket += t.h(q * n + k)?;
        }
    }
    Ok(t.div(num, den)? * one_plus(n, k, bracket))
}

fn thm8_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    whipple_lhs(t, n, k, p, [true, true, true, true])
}

fn thm9_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    whipple_lhs(t, n, k, p, [true, true, true, false])
}

fn thm10_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    whipple_lhs(t, n, k, p, [true, false, true, false])
}

fn thm11_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    whipple_lhs(t, n, k, p, [true, false, false, false])
}

fn thm12_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    whipple_lhs(t, n, k, p, [false, false, false, false])
}

/// `binom(1+bn+dn+n, n) / (binom(n+bn, n) binom(n+dn, n))`.
fn whipple_prefactor(t: &Terms<'_>, n: i64, b: i64, d: i64) -> Result<Rational> {
    t.div(
        t.b(1 + b * n + d * n + n, n),
        t.b(n + b * n, n) * t.b(n + d * n, n),
    )
}

fn thm8_rhs(t: &Terms<'_>, n: i64, l: i64, p: &[i64]) -> Result<Rational> {
    let (b, c, d, e) = (p[0], p[1], p[2], p[3]);
    let term = t.div(
        t.b(n, l) * t.b(l + b * n, l) * t.b(l + d * n, l) * t.b(1 + c * n + e * n + n, l),
        t.b(n + c * n, l) * t.b(n + e * n, l) * t.b(1 + b * n + d * n + l, l),
    )?;
    Ok(whipple_prefactor(t, n, b, d)? * term)
}

fn thm9_rhs(t: &Terms<'_>, n: i64, l: i64, p: &[i64]) -> Result<Rational> {
    let (b, c, d, e) = (p[0], p[1], p[2], p[3]);
    let term = t.div(
        sign(l) * t.b(n, l) * t.b(l + b * n, l) * t.b(l + d * n, l) * t.b(c * n - e * n, l),
        t.b(n + c * n, l) * t.b(l + e * n, l) * t.b(1 + b * n + d * n + l, l),
    )?;
    Ok(whipple_prefactor(t, n, b, d)? * term)
}

fn thm10_rhs(t: &Terms<'_>, n: i64, l: i64, p: &[i64]) -> Result<Rational> {
    let (b, c, d, e) = (p[0], p[1], p[2], p[3]);
    let term = t.div(
        sign(l) * t.b(n, l) * t.b(l + b * n, l) * t.b(l + d * n, l)
            * t.b(n + c * n + e * n + l, l),
        t.b(l + c * n, l) * t.b(l + e * n, l) * t.b(1 + b * n + d * n + l, l),
    )?;
    Ok(whipple_prefactor(t, n, b, d)? * term)
}

/// The printed factor `binom(bn-dn, n)/binom(l+bn-dn-n, l)` is `0/0` when
/// `bn-dn` is a small nonnegative integer; it is read as its limit
/// `binom(bn-dn, n-l)/binom(n, l)`.
fn thm11_rhs(t: &Terms<'_>, n: i64, l: i64, p: &[i64]) -> Result<Rational> {
    let (b, c, d, e) = (p[0], p[1], p[2], p[3]);
    let pre = t.div(sign(n), t.b(n + b * n, n) * t.b(n + d * n, n))?;
    let term = t.div(
        t.b(n, l) * t.b(l + b * n, l) * t.b(n + d * n, l) * t.b(l + c * n + e * n + n, l),
        t.b(l + c * n, l) * t.b(l + e * n, l),
    )?;
    let reg = t.div(t.b(b * n - d * n, n - l), t.b(n, l))?;
    Ok(pre * term * reg)
}

fn thm12_rhs(t: &Terms<'_>, n: i64, l: i64, p: &[i64]) -> Result<Rational> {
    let (b, c, d, e) = (p[0], p[1], p[2], p[3]);
    let pre = t.div(
        sign(n) * t.b(2 * n + b * n + d * n, n),
        t.b(n + b * n, n) * t.b(n + d * n, n),
    )?;
    let term = t.div(
        t.b(n, l) * t.b(n + b * n, l) * t.b(n + d * n, l) * t.b(n + c * n + e * n + l, l),
        t.b(l + c * n, l) * t.b(l + e * n, l) * t.b(2 * n + b * n + d * n, l),
    )?;
    Ok(pre * term)
}

const fn theorem(
    id: &'static str,
    source: &'static str,
    note: &'static str,
    params: &'static [&'static str],
    constraints: &'static [ParamConstraint],
    param_max: i64,
    n_max: i64,
    lhs: super::Summand,
    rhs: Rhs,
) -> IdentityRecord {
    IdentityRecord {
        id,
        kind: RecordKind::Theorem,
        source,
        note,
        params,
        constraints,
        n_min: 0,
        param_max,
        n_max,
        lhs,
        rhs,
        erratum: None::<Erratum>,
    }
}

pub(super) static RECORDS: [IdentityRecord; 12] = [
    theorem("thm1", "Theorem 1", "D0 of the Chu-Vandermonde convolution (family chu)",
        LAMBDA_MU, &[], 3, 8, thm1_lhs, Rhs::Closed(thm1_rhs)),
    theorem("thm2", "Theorem 2", "D0 of the Pfaff-Saalschutz binomial form, lambda' = 1 (family ps_lam)",
        LAMBDA_MU_NU, BALANCED, 3, 8, thm2_lhs, Rhs::Closed(thm2_rhs)),
    theorem("thm3", "Theorem 3", "D0 of the Pfaff-Saalschutz binomial form, mu' = 1 (family ps_mu)",
        LAMBDA_MU_NU, BALANCED, 3, 8, thm3_lhs, Rhs::Closed(thm3_rhs)),
    theorem("thm4", "Theorem 4", "D0 of the Pfaff-Saalschutz binomial form, nu' = 1 (family ps_nu)",
        LAMBDA_MU_NU, BALANCED, 3, 8, thm4_lhs, Rhs::Closed(thm4_rhs)),
    theorem("thm5", "Theorem 5", "D0 of Dougall-Dixon, first replacement (family dd_1)",
        BD, &[], 2, 8, thm5_lhs, Rhs::Closed(thm5_rhs)),
    theorem("thm6", "Theorem 6", "D0 of Dougall-Dixon, second replacement (family dd_2)",
        BD, &[], 2, 8, thm6_lhs, Rhs::Closed(thm6_rhs)),
    theorem("thm7", "Theorem 7", "D0 of Dougall-Dixon, third replacement (family dd_3)",
        BD, &[], 2, 8, thm7_lhs, Rhs::Closed(thm7_rhs)),
    theorem("thm8", "Theorem 8", "D0 of Whipple, first replacement (family wh_1)",
        BCDE, &[], 2, 6, thm8_lhs, Rhs::Sum(thm8_rhs)),
    theorem("thm9", "Theorem 9", "D0 of Whipple, second replacement (family wh_2)",
        BCDE, &[], 2, 6, thm9_lhs, Rhs::Sum(thm9_rhs)),
    theorem("thm10", "Theorem 10", "D0 of Whipple, third replacement (family wh_3)",
        BCDE, &[], 2, 6, thm10_lhs, Rhs::Sum(thm10_rhs)),
    theorem("thm11", "Theorem 11", "D0 of Whipple, fourth replacement (family wh_4); 0/0 ratio read as its limit",
        BCDE, &[], 2, 6, thm11_lhs, Rhs::Sum(thm11_rhs)),
    theorem("thm12", "Theorem 12", "D0 of Whipple, fifth replacement (family wh_5)",
        BCDE, &[], 2, 6, thm12_lhs, Rhs::Sum(thm12_rhs)),
];

fn wench_lhs(t: &Terms<'_>, n: i64, k: i64, p: &[i64]) -> Result<Rational> {
    let l = p[0];
    Ok(t.b(n, k) * t.b(n + l * n, n - k) * t.h(l * n + k)?)
}

fn wench_rhs(t: &Terms<'_>, n: i64, p: &[i64]) -> Result<Rational> {
    let l = p[0];
    Ok(t.b(2 * n + l * n, n) * (r(2) * t.h(l * n + n)? - t.h(l * n + 2 * n)?))
}

fn wench_lam0_lhs(t: &Terms<'_>, n: i64, k: i64, _: &[i64]) -> Result<Rational> {
    Ok(t.b(n, k).pow(2) * t.h(k)?)
}

fn wench_lam0_rhs(t: &Terms<'_>, n: i64, _: &[i64]) -> Result<Rational> {
    Ok(t.b(2 * n, n) * (r(2) * t.h(n)? - t.h(2 * n)?))
}

fn entry4_closed_rhs(_: &Terms<'_>, n: i64, _: &[i64]) -> Result<Rational> {
    Ok(super::entry4_closed(n as u32))
}

const fn auxiliary(
    id: &'static str,
    source: &'static str,
    note: &'static str,
    params: &'static [&'static str],
    param_max: i64,
    lhs: super::Summand,
    rhs: Rhs,
) -> IdentityRecord {
    IdentityRecord {
        id,
        kind: RecordKind::Auxiliary,
        source,
        note,
        params,
        constraints: &[],
        n_min: 0,
        param_max,
        n_max: 8,
        lhs,
        rhs,
        erratum: None,
    }
}

pub(super) static AUXILIARY: [IdentityRecord; 3] = [
    auxiliary("wench", "Theorem 1 at mu = 0", "special case of thm1",
        &["lambda"], 3, wench_lhs, Rhs::Closed(wench_rhs)),
    auxiliary("wench_lam0", "Theorem 1 at lambda = mu = 0", "special case of wench",
        &[], 0, wench_lam0_lhs, Rhs::Closed(wench_lam0_rhs)),
    auxiliary("t2e4_closed", "Table II, entry 4, closed form",
        "Dixon evaluation of the t2e4 left side: 0 for odd n, (-1)^m (3m)!/m!^3 / binom(4m,2m)^2 for n = 2m",
        &[], 0, super::table2::entry4_lhs, Rhs::Closed(entry4_closed_rhs)),
];
