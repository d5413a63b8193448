//! Factorials, binomials, shifted factorials and harmonic numbers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use spin::RwLock;

use crate::exactnum::{Rational, Scalar};
use crate::{Error, Result};

/// Below this size a direct running sum beats the lcm construction.
const DIRECT_SUM_LIMIT: u64 = 128;

/// Classical harmonic number `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            context: String::from("H_n"),
            value: n,
        });
    }
    Ok(harmonic_u(n as u64))
}

pub(crate) fn harmonic_u(n: u64) -> Rational {
    if n <= DIRECT_SUM_LIMIT {
        (1..=n).map(|k| Rational::from_coprime(BigInt::one(), BigInt::from(k))).sum()
    } else {
        harmonic_lcm(n)
    }
}

/// `H_n` as `(Σ L/k) / L` with `L = lcm(1..n)`, reduced by trial division
/// with the primes of `L` only.
fn harmonic_lcm(n: u64) -> Rational {
    let mut lcm = BigUint::one();
    let mut exponents = Vec::new();
    for p in primes_up_to(n) {
        let mut power = p;
        let mut e = 1u32;
        while power <= n / p {
            power *= p;
            e += 1;
        }
        lcm *= power;
        exponents.push((p, e));
    }
    let mut numer = BigUint::zero();
    for k in 1..=n {
        numer += &lcm / k;
    }
    for (p, e) in exponents {
        for _ in 0..e {
            if (&numer % p).is_zero() {
                numer /= p;
                lcm /= p;
            } else {
                break;
            }
        }
    }
    Rational::from_coprime(BigInt::from(numer), BigInt::from(lcm))
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Append-only memo table `n ↦ H_n`, shareable between threads.
///
/// Entries up to [`HarmonicCache::TABLE_LIMIT`] are filled incrementally via
/// `H_{m+1} = H_m + 1/(m+1)`; larger indices are computed directly and not
/// stored. Lookups never change observable results.
pub struct HarmonicCache {
    table: RwLock<Vec<Rational>>,
}

static GLOBAL_CACHE: HarmonicCache = HarmonicCache::new();

impl HarmonicCache {
    pub const TABLE_LIMIT: u64 = 4096;

    pub const fn new() -> Self {
        HarmonicCache {
            table: RwLock::new(Vec::new()),
        }
    }

    /// Process-wide cache shared by the identity registry.
    pub fn global() -> &'static HarmonicCache {
        &GLOBAL_CACHE
    }

    pub fn get(&self, n: i64) -> Result<Rational> {
        if n < 0 {
            return Err(Error::NegativeIndex {
                context: String::from("H_n"),
                value: n,
            });
        }
        let n = n as u64;
        if n > Self::TABLE_LIMIT {
            return Ok(harmonic_u(n));
        }
        let idx = n as usize;
        if let Some(h) = self.table.read().get(idx) {
            return Ok(h.clone());
        }
        let mut table = self.table.write();
        if table.is_empty() {
            table.push(Rational::zero());
        }
        while table.len() <= idx {
            let m = table.len() as u64;
            let next = &table[table.len() - 1]
                + Rational::from_coprime(BigInt::one(), BigInt::from(m));
            table.push(next);
        }
        Ok(table[idx].clone())
    }

    /// Number of populated entries (including `H_0` once anything is cached).
    pub fn len(&self) -> usize {
        self.table.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for HarmonicCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Generalised harmonic number `H_n(x) = Σ_{k=1..n} 1/(x+k)`.
pub fn harmonic_gen<S: Scalar>(n: u32, x: &S) -> Result<S> {
    let mut acc = S::zero();
    for k in 1..=n {
        let denom = x.clone() + &S::from_int(i64::from(k));
        if denom.value().is_zero() {
            return Err(Error::Pole {
                context: String::from("H_n(x)"),
                index: i64::from(k),
            });
        }
        acc = acc + S::one().checked_div(&denom)?;
    }
    Ok(acc)
}

/// Shifted factorial `(c)_n = c(c+1)...(c+n-1)`, `(c)_0 = 1`.
pub fn pochhammer<S: Scalar>(c: &S, n: u32) -> S {
    let mut acc = S::one();
    for i in 0..n {
        acc = acc * (c.clone() + &S::from_int(i64::from(i)));
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient with integer arguments.
///
/// Zero for `k < 0` and for `0 <= n < k`; a negative `n` with `k >= 0`
/// follows the product definition, `binom(n, k) = (-1)^k binom(k-n-1, k)`.
pub fn binomial_int(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_big(n, k))
}

fn binomial_big(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial_big(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `binom(z, m) = Π_{l=1..m} (z-m+l)/l` for any scalar `z`.
pub fn binomial_gen<S: Scalar>(z: &S, m: u32) -> S {
    if let Some(i) = integer_value(z) {
        return S::from_rational(binomial_int(i, i64::from(m)));
    }
    let shift = i64::from(m);
    let mut acc = S::one();
    for l in 1..=shift {
        acc = acc * (z.clone() + &S::from_int(l - shift));
    }
    let denom = Rational::from_integer(factorial(m));
    acc.scale(&denom.recip().expect("m! > 0"))
}

/// `binom(z, m)⁻¹`; a zero value part is a domain error naming the binomial.
pub fn inverse_binomial_gen<S: Scalar>(z: &S, m: u32) -> Result<S> {
    let b = binomial_gen(z, m);
    if b.value().is_zero() {
        return Err(Error::DivisionByZero {
            context: alloc::format!("binom({z}, {m})^-1"),
        });
    }
    S::one().checked_div(&b)
}

/// The integer `i` when `z` is exactly the constant `i` (no ε part).
fn integer_value<S: Scalar>(z: &S) -> Option<i64> {
    let v = z.value().to_i64()?;
    if *z == S::from_int(v) {
        Some(v)
    } else {
        None
    }
}
