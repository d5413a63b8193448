//! Terminating hypergeometric series and the classical closed forms used as
//! oracles for them: Chu-Vandermonde-Gauss, Pfaff-Saalschütz, Dougall-Dixon
//! and the Whipple `7F6 → 4F3` transformation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::pochhammer;
use crate::exactnum::{Rational, Scalar};
use crate::{Error, Result};

/// A terminating `(1+p)F(q)` series.
///
/// `upper[termination_index]` must have a value part equal to `-n` for some
/// `n >= 0`; the sum then runs over `k = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec<S> {
    pub upper: Vec<S>,
    pub lower: Vec<S>,
    pub argument: S,
    pub termination_index: usize,
}

impl<S: Scalar> HypergeometricSpec<S> {
    pub fn new(upper: Vec<S>, lower: Vec<S>, argument: S, termination_index: usize) -> Result<Self> {
        let spec = HypergeometricSpec {
            upper,
            lower,
            argument,
            termination_index,
        };
        spec.terms()?;
        Ok(spec)
    }

    /// The `n` read off the termination slot.
    pub fn terms(&self) -> Result<u32> {
        let slot = self
            .upper
            .get(self.termination_index)
            .ok_or_else(|| Error::NotTerminating {
                context: format!("no upper parameter at index {}", self.termination_index),
            })?;
        match (-slot.value()).to_i64() {
            Some(n) if (0..=i64::from(u32::MAX)).contains(&n) => Ok(n as u32),
            _ => Err(Error::NotTerminating {
                context: format!("termination parameter {slot} is not a nonpositive integer"),
            }),
        }
    }
}

/// Sum `Σ_{k=0..n} Π(a_i)_k / (k! Π(b_j)_k) z^k`.
///
/// Terms are built from the term ratio `C_{k+1}/C_k`. An upper parameter
/// equal to a lower parameter plus one (the very-well-poised `1+a/2` over
/// `a/2`) is cancelled first: `(l+1)_k/(l)_k = (l+k)/l`, so a lower `l` whose
/// Pochhammer symbol vanishes inside the range is no obstacle.
pub fn eval_pfq<S: Scalar>(spec: &HypergeometricSpec<S>) -> Result<S> {
    let n = spec.terms()?;
    let one = S::one();

    let mut lower_used = vec![false; spec.lower.len()];
    let mut pairs: Vec<&S> = Vec::new();
    let mut upper: Vec<&S> = Vec::new();
    for (i, a) in spec.upper.iter().enumerate() {
        let partner = (i != spec.termination_index)
            .then(|| {
                spec.lower
                    .iter()
                    .enumerate()
                    .position(|(j, b)| !lower_used[j] && a.clone() - b == one)
            })
            .flatten();
        match partner {
            Some(j) => {
                lower_used[j] = true;
                pairs.push(&spec.lower[j]);
            }
            None => upper.push(a),
        }
    }
    let lower: Vec<(usize, &S)> = spec
        .lower
        .iter()
        .enumerate()
        .filter(|(j, _)| !lower_used[*j])
        .collect();

    let mut term = S::one();
    let mut sum = S::one();
    for k in 0..n {
        let shift = S::from_int(i64::from(k));
        let mut num = spec.argument.clone();
        for a in &upper {
            num = num * ((*a).clone() + &shift);
        }
        let mut den = S::from_int(i64::from(k) + 1);
        for (j, b) in &lower {
            let b_k = (*b).clone() + &shift;
            if b_k.value().is_zero() {
                return Err(Error::Pole {
                    context: format!("lower parameter #{j} = {b}"),
                    index: i64::from(k),
                });
            }
            den = den * b_k;
        }
        term = term * num.checked_div(&den)?;
        sum = sum + &weighted(&term, &pairs, k + 1)?;
    }
    Ok(sum)
}

/// `term · Π (l+k)/l` over the cancelled pairs.
fn weighted<S: Scalar>(term: &S, pairs: &[&S], k: u32) -> Result<S> {
    let mut out = term.clone();
    for l in pairs {
        if l.value().is_zero() {
            return Err(Error::Pole {
                context: format!("well-poised pair with lower parameter {l}"),
                index: i64::from(k),
            });
        }
        let factor = ((*l).clone() + &S::from_int(i64::from(k))).checked_div(l)?;
        out = out * factor;
    }
    Ok(out)
}

fn neg_int<S: Scalar>(n: u32) -> S {
    S::from_int(-i64::from(n))
}

fn int<S: Scalar>(i: i64) -> S {
    S::from_int(i)
}

fn ratio<S: Scalar>(num: S, den: S, what: &str) -> Result<S> {
    if den.value().is_zero() {
        return Err(Error::DivisionByZero {
            context: String::from(what),
        });
    }
    num.checked_div(&den)
}

/// `2F1(-n, a; c; 1)`.
pub fn chu_vandermonde_lhs<S: Scalar>(a: &S, c: &S, n: u32) -> HypergeometricSpec<S> {
    HypergeometricSpec {
        upper: vec![neg_int(n), a.clone()],
        lower: vec![c.clone()],
        argument: S::one(),
        termination_index: 0,
    }
}

/// `(c-a)_n / (c)_n`.
pub fn chu_vandermonde_rhs<S: Scalar>(a: &S, c: &S, n: u32) -> Result<S> {
    ratio(
        pochhammer(&(c.clone() - a), n),
        pochhammer(c, n),
        "Chu-Vandermonde denominator (c)_n",
    )
}

/// The balanced `3F2(-n, a, b; c, 1+a+b-c-n; 1)`.
pub fn saalschutz_lhs<S: Scalar>(a: &S, b: &S, c: &S, n: u32) -> HypergeometricSpec<S> {
    let balanced = S::one() + a + b - c - &int(i64::from(n));
    HypergeometricSpec {
        upper: vec![neg_int(n), a.clone(), b.clone()],
        lower: vec![c.clone(), balanced],
        argument: S::one(),
        termination_index: 0,
    }
}

/// `(c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)`.
pub fn saalschutz_rhs<S: Scalar>(a: &S, b: &S, c: &S, n: u32) -> Result<S> {
    let num = pochhammer(&(c.clone() - a), n) * pochhammer(&(c.clone() - b), n);
    let den = pochhammer(c, n) * pochhammer(&(c.clone() - a - b), n);
    ratio(num, den, "Saalschütz denominator (c)_n (c-a-b)_n")
}

fn half<S: Scalar>(a: &S) -> S {
    a.scale(&Rational::new(1.into(), 2.into()).expect("nonzero"))
}

/// The very-well-poised `5F4(a, 1+a/2, b, d, -n; a/2, 1+a-b, 1+a-d, 1+a+n; 1)`.
pub fn dougall_dixon_lhs<S: Scalar>(a: &S, b: &S, d: &S, n: u32) -> HypergeometricSpec<S> {
    let one = S::one();
    HypergeometricSpec {
        upper: vec![a.clone(), one.clone() + &half(a), b.clone(), d.clone(), neg_int(n)],
        lower: vec![
            half(a),
            one.clone() + a - b,
            one.clone() + a - d,
            one + a + &int(i64::from(n)),
        ],
        argument: S::one(),
        termination_index: 4,
    }
}

/// `(1+a)_n (1+a-b-d)_n / ((1+a-b)_n (1+a-d)_n)`.
pub fn dougall_dixon_rhs<S: Scalar>(a: &S, b: &S, d: &S, n: u32) -> Result<S> {
    let one = S::one();
    let num = pochhammer(&(one.clone() + a), n) * pochhammer(&(one.clone() + a - b - d), n);
    let den = pochhammer(&(one.clone() + a - b), n) * pochhammer(&(one + a - d), n);
    ratio(num, den, "Dougall-Dixon denominator (1+a-b)_n (1+a-d)_n")
}

/// The very-well-poised `7F6(a, 1+a/2, b, c, d, e, -n; a/2, 1+a-b, 1+a-c, 1+a-d, 1+a-e, 1+a+n; 1)`.
pub fn whipple_lhs<S: Scalar>(a: &S, b: &S, c: &S, d: &S, e: &S, n: u32) -> HypergeometricSpec<S> {
    let one = S::one();
    HypergeometricSpec {
        upper: vec![
            a.clone(),
            one.clone() + &half(a),
            b.clone(),
            c.clone(),
            d.clone(),
            e.clone(),
            neg_int(n),
        ],
        lower: vec![
            half(a),
            one.clone() + a - b,
            one.clone() + a - c,
            one.clone() + a - d,
            one.clone() + a - e,
            one + a + &int(i64::from(n)),
        ],
        argument: S::one(),
        termination_index: 6,
    }
}

/// Right side of the Whipple transformation: the Dougall-Dixon prefactor
/// times `4F3(-n, b, d, 1+a-c-e; 1+a-c, 1+a-e, b+d-a-n; 1)`.
pub fn whipple_rhs<S: Scalar>(a: &S, b: &S, c: &S, d: &S, e: &S, n: u32) -> Result<S> {
    let one = S::one();
    let prefactor = dougall_dixon_rhs(a, b, d, n)?;
    let inner = HypergeometricSpec {
        upper: vec![neg_int(n), b.clone(), d.clone(), one.clone() + a - c - e],
        lower: vec![
            one.clone() + a - c,
            one + a - e,
            b.clone() + d - a - &int(i64::from(n)),
        ],
        argument: S::one(),
        termination_index: 0,
    };
    let series = eval_pfq(&inner).map_err(|e| e.within("Whipple 4F3"))?;
    Ok(prefactor * series)
}
