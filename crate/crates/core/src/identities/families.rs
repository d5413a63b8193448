//! Binomial reformulations of the classical summation theorems, as identities
//! in a free scalar `x`. Their `D0` at `x = 0` gives Theorems 1-12.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{lex_grid, ParamConstraint};
use crate::combinatorics::binomial_gen;
use crate::exactnum::{Dual, Rational, Scalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Chu,
    /// Pfaff-Saalschütz with `(λ', μ', ν') = (1, 0, 0)`.
    PsLam,
    /// `(λ', μ', ν') = (0, 1, 0)`.
    PsMu,
    /// `(λ', μ', ν') = (0, 0, 1)`.
    PsNu,
    Dd1,
    Dd2,
    Dd3,
    Wh1,
    Wh2,
    Wh3,
    Wh4,
    Wh5,
}

pub struct BinomialFamily {
    pub id: &'static str,
    pub kind: FamilyKind,
    pub source: &'static str,
    pub params: &'static [&'static str],
    pub constraints: &'static [ParamConstraint],
    pub derived_theorem: &'static str,
    pub param_max: i64,
    pub n_max: i64,
}

/// Both sides of a family instance at one scalar point.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyCheck<S> {
    pub lhs: S,
    pub rhs: S,
    pub equal: bool,
}

/// Outcome of evaluating a family at `x = 0 + ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationResult {
    /// Parent binomial identity holds at `x = 0`.
    pub value_match: bool,
    /// Derived harmonic number identity holds.
    pub deriv_match: bool,
    pub lhs: Dual,
    pub rhs: Dual,
}

const BALANCED: &[ParamConstraint] = &[ParamConstraint {
    label: "lambda > 1 + mu + nu",
    holds: |p| p[0] > 1 + p[1] + p[2],
}];

const fn fam(
    id: &'static str,
    kind: FamilyKind,
    source: &'static str,
    params: &'static [&'static str],
    constraints: &'static [ParamConstraint],
    derived_theorem: &'static str,
    param_max: i64,
    n_max: i64,
) -> BinomialFamily {
    BinomialFamily {
        id,
        kind,
        source,
        params,
        constraints,
        derived_theorem,
        param_max,
        n_max,
    }
}

static FAMILIES: [BinomialFamily; 12] = [
    fam("chu", FamilyKind::Chu, "Chu-Vandermonde binomial convolution",
        &["lambda", "mu"], &[], "thm1", 3, 8),
    fam("ps_lam", FamilyKind::PsLam, "Pfaff-Saalschutz binomial form, lambda' = 1",
        &["lambda", "mu", "nu"], BALANCED, "thm2", 3, 8),
    fam("ps_mu", FamilyKind::PsMu, "Pfaff-Saalschutz binomial form, mu' = 1",
        &["lambda", "mu", "nu"], BALANCED, "thm3", 3, 8),
    fam("ps_nu", FamilyKind::PsNu, "Pfaff-Saalschutz binomial form, nu' = 1",
        &["lambda", "mu", "nu"], BALANCED, "thm4", 3, 8),
    fam("dd_1", FamilyKind::Dd1, "Dougall-Dixon, first replacement",
        &["b", "d"], &[], "thm5", 2, 8),
    fam("dd_2", FamilyKind::Dd2, "Dougall-Dixon, second replacement",
        &["b", "d"], &[], "thm6", 2, 8),
    fam("dd_3", FamilyKind::Dd3, "Dougall-Dixon, third replacement",
        &["b", "d"], &[], "thm7", 2, 8),
    fam("wh_1", FamilyKind::Wh1, "Whipple transformation, first replacement",
        &["b", "c", "d", "e"], &[], "thm8", 2, 6),
    fam("wh_2", FamilyKind::Wh2, "Whipple transformation, second replacement",
        &["b", "c", "d", "e"], &[], "thm9", 2, 6),
    fam("wh_3", FamilyKind::Wh3, "Whipple transformation, third replacement",
        &["b", "c", "d", "e"], &[], "thm10", 2, 6),
    fam("wh_4", FamilyKind::Wh4, "Whipple transformation, fourth replacement",
        &["b", "c", "d", "e"], &[], "thm11", 2, 6),
    fam("wh_5", FamilyKind::Wh5, "Whipple transformation, fifth replacement",
        &["b", "c", "d", "e"], &[], "thm12", 2, 6),
];

pub fn families() -> &'static [BinomialFamily] {
    &FAMILIES
}

pub fn family(id: &str) -> Result<&'static BinomialFamily> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::NotFound {
            id: String::from(id),
        })
}

/// Evaluation context for one `(x, n)` pair.
struct Ctx<'a, S> {
    x: &'a S,
    n: i64,
}

impl<S: Scalar> Ctx<'_, S> {
    fn lin(&self, c0: i64, cx: i64) -> S {
        S::from_int(c0) + self.x.scale(&Rational::from(cx))
    }

    /// `binom(c0 + cx·x, m)`.
    fn bz(&self, c0: i64, cx: i64, m: i64) -> S {
        if m < 0 {
            return S::zero();
        }
        binomial_gen(&self.lin(c0, cx), m as u32)
    }

    fn sign(&self, m: i64) -> S {
        S::from_int(if m % 2 == 0 { 1 } else { -1 })
    }

    fn quot(&self, num: S, den: S, what: &str) -> Result<S> {
        if den.value().is_zero() {
            return Err(Error::Pole {
                context: String::from(what),
                index: self.n,
            });
        }
        num.checked_div(&den)
    }

    fn sum<F: FnMut(i64) -> Result<S>>(&self, mut f: F) -> Result<S> {
        let mut acc = S::zero();
        for k in 0..=self.n {
            acc = acc + f(k)?;
        }
        Ok(acc)
    }
}

fn ps_shift(kind: FamilyKind) -> (i64, i64, i64) {
    match kind {
        FamilyKind::PsLam => (1, 0, 0),
        FamilyKind::PsMu => (0, 1, 0),
        _ => (0, 0, 1),
    }
}

fn whipple_ups(kind: FamilyKind) -> [bool; 4] {
    match kind {
        FamilyKind::Wh1 => [true, true, true, true],
        FamilyKind::Wh2 => [true, true, true, false],
        FamilyKind::Wh3 => [true, false, true, false],
        FamilyKind::Wh4 => [true, false, false, false],
        _ => [false, false, false, false],
    }
}

impl BinomialFamily {
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
        Ok(())
    }

    pub fn param_grid(&self, param_max: i64) -> Vec<Vec<i64>> {
        lex_grid(self.params.len(), self.constraints, param_max)
    }

    /// `Σ_k` of the family's summand at `x`.
    pub fn lhs<S: Scalar>(&self, params: &[i64], n: i64, x: &S) -> Result<S> {
        self.validate(params, n)?;
        let c = Ctx { x, n };
        let p = params;
        match self.kind {
            FamilyKind::Chu => {
                let (l, m) = (p[0], p[1]);
                c.sum(|k| Ok(c.bz(n + m * n, 0, k) * c.bz(l * n + n, 1, n - k)))
            }
            FamilyKind::PsLam | FamilyKind::PsMu | FamilyKind::PsNu => {
                let (l, m, v) = (p[0], p[1], p[2]);
                let (lp, mp, vp) = ps_shift(self.kind);
                let s = l - m - v - 2;
                c.sum(|k| {
                    c.quot(
                        c.bz(n, 0, k) * c.bz(k + l * n, lp, k) * c.bz(n + m * n, mp, k),
                        c.bz(k + v * n, vp, k) * c.bz(k + s * n, lp - mp - vp, k),
                        "Pfaff-Saalschutz summand",
                    )
                })
            }
            FamilyKind::Dd1 | FamilyKind::Dd2 | FamilyKind::Dd3 => {
                let (b, d) = (p[0], p[1]);
                c.sum(|k| {
                    let base = c.lin(n - 2 * k, 1) * c.bz(n, 0, k) * c.bz(n, 1, k);
                    let (num, den) = match self.kind {
                        FamilyKind::Dd1 => (
                            base * c.bz(k + b * n, 0, k) * c.bz(k + d * n, 0, k),
                            c.bz(k, -1, k) * c.bz(b * n + n, 1, k) * c.bz(d * n + n, 1, k),
                        ),
                        FamilyKind::Dd2 => (
                            base * c.bz(k + b * n, 0, k) * c.bz(n + d * n, 0, k),
                            c.bz(k, -1, k) * c.bz(n + b * n, 1, k) * c.bz(k + d * n, -1, k),
                        ),
                        _ => (
                            base * c.bz(n + b * n, 0, k) * c.bz(n + d * n, 0, k),
                            c.bz(k, -1, k) * c.bz(k + b * n, -1, k) * c.bz(k + d * n, -1, k),
                        ),
                    };
                    c.quot(num, den, "Dougall-Dixon summand")
                })
            }
            _ => {
                let ups = whipple_ups(self.kind);
                c.sum(|k| {
                    let mut num = c.lin(n - 2 * k, 1) * c.bz(n, 0, k) * c.bz(n, 1, k);
                    let mut den = c.bz(k, -1, k);
                    for (&up, &q) in ups.iter().zip(p) {
                        if up {
                            num = num * c.bz(k + q * n, 0, k);
                            den = den * c.bz(n + q * n, 1, k);
                        } else {
                            num = num * c.bz(n + q * n, 0, k);
                            den = den * c.bz(k + q * n, -1, k);
                        }
                    }
                    c.quot(num, den, "Whipple summand")
                })
            }
        }
    }

    /// Right side at `x`; a closed form or, for Whipple, a finite sum.
    pub fn rhs<S: Scalar>(&self, params: &[i64], n: i64, x: &S) -> Result<S> {
        self.validate(params, n)?;
        let c = Ctx { x, n };
        let p = params;
        match self.kind {
            FamilyKind::Chu => {
                let (l, m) = (p[0], p[1]);
                Ok(c.bz(l * n + m * n + 2 * n, 1, n))
            }
            FamilyKind::PsLam | FamilyKind::PsMu | FamilyKind::PsNu => {
                let (l, m, v) = (p[0], p[1], p[2]);
                let (lp, mp, vp) = ps_shift(self.kind);
                c.quot(
                    c.bz((l - v) * n, lp - vp, n) * c.bz((m + v + 2) * n, mp + vp, n),
                    c.bz(n + v * n, vp, n) * c.bz((l - m - v - 1) * n, lp - mp - vp, n),
                    "Pfaff-Saalschutz right side",
                )
            }
            FamilyKind::Dd1 => {
                let (b, d) = (p[0], p[1]);
                c.quot(
                    x.clone() * c.bz(n, 1, n) * c.bz(1 + b * n + d * n + n, 1, n),
                    c.bz(b * n + n, 1, n) * c.bz(d * n + n, 1, n),
                    "Dougall-Dixon right side",
                )
            }
            FamilyKind::Dd2 => {
                let (b, d) = (p[0], p[1]);
                c.quot(
                    c.sign(n) * x.clone() * c.bz(n, 1, n) * c.bz(b * n - d * n, 1, n),
                    c.bz(n + b * n, 1, n) * c.bz(n + d * n, -1, n),
                    "Dougall-Dixon right side",
                )
            }
            FamilyKind::Dd3 => {
                let (b, d) = (p[0], p[1]);
                c.quot(
                    c.sign(n) * x.clone() * c.bz(n, 1, n) * c.bz(2 * n + b * n + d * n, -1, n),
                    c.bz(n + b * n, -1, n) * c.bz(n + d * n, -1, n),
                    "Dougall-Dixon right side",
                )
            }
            _ => self.whipple_rhs(&c, p),
        }
    }

    fn whipple_rhs<S: Scalar>(&self, c: &Ctx<'_, S>, p: &[i64]) -> Result<S> {
        let n = c.n;
        let x = c.x;
        let (b, cc, d, e) = (p[0], p[1], p[2], p[3]);
        let dd_pre = || {
            c.quot(
                x.clone() * c.bz(n, 1, n) * c.bz(1 + b * n + d * n + n, 1, n),
                c.bz(b * n + n, 1, n) * c.bz(d * n + n, 1, n),
                "Whipple prefactor",
            )
        };
        let common = |l: i64| c.bz(n, 0, l) * c.bz(l + b * n, 0, l) * c.bz(l + d * n, 0, l);
        match self.kind {
            FamilyKind::Wh1 => {
                let s = c.sum(|l| {
                    c.quot(
                        common(l) * c.bz(1 + cc * n + e * n + n, 1, l),
                        c.bz(cc * n + n, 1, l)
                            * c.bz(e * n + n, 1, l)
                            * c.bz(1 + b * n + d * n + l, 1, l),
                        "Whipple 4F3 term",
                    )
                })?;
                Ok(dd_pre()? * s)
            }
            FamilyKind::Wh2 => {
                let s = c.sum(|l| {
                    c.quot(
                        c.sign(l) * common(l) * c.bz(cc * n - e * n, 1, l),
                        c.bz(n + cc * n, 1, l)
                            * c.bz(l + e * n, -1, l)
                            * c.bz(1 + b * n + d * n + l, 1, l),
                        "Whipple 4F3 term",
                    )
                })?;
                Ok(dd_pre()? * s)
            }
            FamilyKind::Wh3 => {
                let s = c.sum(|l| {
                    c.quot(
                        c.sign(l) * common(l) * c.bz(l + n + cc * n + e * n, -1, l),
                        c.bz(l + cc * n, -1, l)
                            * c.bz(l + e * n, -1, l)
                            * c.bz(1 + b * n + d * n + l, 1, l),
                        "Whipple 4F3 term",
                    )
                })?;
                Ok(dd_pre()? * s)
            }
            FamilyKind::Wh4 => {
                // binom(z, n)/binom(l+z-n, l) with z = bn-dn+x is 0/0 at
                // x = 0 for small bn-dn >= 0; it equals binom(z, n-l)/binom(n, l).
                let pre = c.quot(
                    c.sign(n) * x.clone() * c.bz(n, 1, n),
                    c.bz(b * n + n, 1, n) * c.bz(n + d * n, -1, n),
                    "Whipple prefactor",
                )?;
                let s = c.sum(|l| {
                    c.quot(
                        c.bz(n, 0, l)
                            * c.bz(l + b * n, 0, l)
                            * c.bz(n + d * n, 0, l)
                            * c.bz(l + n + cc * n + e * n, -1, l)
                            * c.bz(b * n - d * n, 1, n - l),
                        c.bz(l + cc * n, -1, l) * c.bz(l + e * n, -1, l) * c.bz(n, 0, l),
                        "Whipple 4F3 term",
                    )
                })?;
                Ok(pre * s)
            }
            _ => {
                let top = 2 * n + b * n + d * n;
                let pre = c.quot(
                    c.sign(n) * x.clone() * c.bz(n, 1, n) * c.bz(top, -1, n),
                    c.bz(n + b * n, -1, n) * c.bz(n + d * n, -1, n),
                    "Whipple prefactor",
                )?;
                let s = c.sum(|l| {
                    c.quot(
                        c.bz(n, 0, l)
                            * c.bz(n + b * n, 0, l)
                            * c.bz(n + d * n, 0, l)
                            * c.bz(l + n + cc * n + e * n, -1, l),
                        c.bz(l + cc * n, -1, l) * c.bz(l + e * n, -1, l) * c.bz(top, -1, l),
                        "Whipple 4F3 term",
                    )
                })?;
                Ok(pre * s)
            }
        }
    }

    pub fn check<S: Scalar>(&self, params: &[i64], n: i64, x: &S) -> Result<FamilyCheck<S>> {
        let lhs = self.lhs(params, n, x)?;
        let rhs = self.rhs(params, n, x)?;
        let equal = lhs == rhs;
        Ok(FamilyCheck { lhs, rhs, equal })
    }

    /// Evaluate at `x = 0 + ε`: the value parts carry the binomial identity,
    /// the derivative parts the harmonic number identity.
    pub fn derive(&self, params: &[i64], n: i64) -> Result<DerivationResult> {
        let x = Dual::variable(Rational::zero());
        let FamilyCheck { lhs, rhs, .. } = self.check(params, n, &x)?;
        Ok(DerivationResult {
            value_match: lhs.value() == rhs.value(),
            deriv_match: lhs.deriv() == rhs.deriv(),
            lhs,
            rhs,
        })
    }
}

pub fn check_binomial_family<S: Scalar>(
    id: &str,
    params: &[i64],
    n: i64,
    x: &S,
) -> Result<FamilyCheck<S>> {
    family(id)?.check(params, n, x)
}

pub fn derive_via_d0(id: &str, params: &[i64], n: i64) -> Result<DerivationResult> {
    family(id)?.derive(params, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn chu_examples() {
        let res = check_binomial_family("chu", &[0, 0], 2, &Rational::zero()).unwrap();
        assert_eq!(res.lhs, Rational::from(6));
        assert!(res.equal);
        let res = check_binomial_family("chu", &[1, 0], 1, &rat(1, 2).unwrap()).unwrap();
        assert!(res.equal);
        let d = derive_via_d0("chu", &[0, 0], 3).unwrap();
        assert!(d.value_match && d.deriv_match);
    }

    #[test]
    fn dd_and_wh_examples() {
        let x = Dual::variable(Rational::zero());
        assert!(check_binomial_family("dd_1", &[0, 0], 1, &x).unwrap().equal);
        let d = derive_via_d0("wh_2", &[1, 1, 1, 0], 2).unwrap();
        assert!(d.value_match && d.deriv_match);
        let d = derive_via_d0("ps_mu", &[2, 0, 0], 1).unwrap();
        assert!(d.value_match && d.deriv_match);
        let d = derive_via_d0("wh_5", &[0, 0, 0, 0], 1).unwrap();
        assert!(d.value_match && d.deriv_match);
    }

    #[test]
    fn unknown_and_out_of_domain() {
        assert!(matches!(family("nope"), Err(Error::NotFound { .. })));
        assert!(matches!(
            derive_via_d0("ps_lam", &[1, 0, 0], 2),
            Err(Error::Domain { .. })
        ));
    }
}
