//! `Ξ_λ(n)`, the very-well-poised series `Ω_λ(n, x)` that generates it, and
//! the closed evaluation of the Table II entry 4 sum.

use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{binomial_int, factorial, harmonic};
use crate::exactnum::{d0_eval, rat, Dual, Rational, Scalar};
use crate::hyperseries::{eval_pfq, HypergeometricSpec};
use crate::{Error, Result};

fn positive_lambda(lambda: u32) -> Result<()> {
    if lambda == 0 {
        return Err(Error::Domain {
            constraint: String::from("lambda >= 1"),
        });
    }
    Ok(())
}

/// `Ξ_λ(n) = Σ_k binom(n,k)^λ {1 + λ(n-2k) H_k}`.
pub fn xi(lambda: u32, n: u32) -> Result<Rational> {
    positive_lambda(lambda)?;
    let n = i64::from(n);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let bracket = Rational::one()
            + Rational::from(i64::from(lambda) * (n - 2 * k)) * harmonic(k)?;
        acc += binomial_int(n, k).pow(lambda) * bracket;
    }
    Ok(acc)
}

/// `Ω_λ(n, x)`: the `(1+λ)F_λ` with upper `a, 1+a/2, -n (λ-1 times)`, lower
/// `a/2, 1-x (λ-1 times)`, `a = -x-n` and argument `(-1)^λ`.
pub fn omega<S: Scalar>(lambda: u32, n: u32, x: &S) -> Result<S> {
    positive_lambda(lambda)?;
    let a = -(x.clone() + &S::from_int(i64::from(n)));
    let half_a = a.scale(&rat(1, 2)?);
    let copies = (lambda - 1) as usize;

    let mut upper: Vec<S> = Vec::with_capacity(lambda as usize + 1);
    upper.push(a);
    upper.push(S::one() + &half_a);
    let mut lower: Vec<S> = Vec::with_capacity(lambda as usize);
    lower.push(half_a);
    for _ in 0..copies {
        upper.push(S::from_int(-i64::from(n)));
        lower.push(S::one() - x.clone());
    }
    let argument = S::from_int(if lambda % 2 == 0 { 1 } else { -1 });
    let termination = if copies > 0 { 2 } else { 0 };
    eval_pfq(&HypergeometricSpec::new(upper, lower, argument, termination)?)
}

/// `D0 {(x+n) Ω_λ(n, x)}`, which reproduces `Ξ_λ(n)`.
pub fn xi_via_omega(lambda: u32, n: u32) -> Result<Rational> {
    let (_, deriv) = d0_eval(|x: &Dual| {
        Ok((x.clone() + &Dual::from_int(i64::from(n))) * omega(lambda, n, x)?)
    })?;
    Ok(deriv)
}

/// Dixon's evaluation of the Table II entry 4 left side: `0` for odd `n`,
/// `(-1)^m (3m)!/m!^3 / binom(4m, 2m)^2` for `n = 2m`.
pub fn entry4_closed(n: u32) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let m = n / 2;
    let multinomial = factorial(3 * m) / factorial(m).pow(3);
    let value = Rational::from_integer(multinomial) * binomial_int(i64::from(4 * m), i64::from(2 * m))
        .pow(2)
        .recip()
        .expect("central binomial is positive");
    if m % 2 == 1 {
        -value
    } else {
        value
    }
}
