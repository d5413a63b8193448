//! Reflection families and exact decay probes for harmonic-weighted sums
//! `S(y) = Σ_k f_n(k) · P_k(y)/Q_k(y) · H_{ny+k}`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{binomial_int, harmonic_u};
use crate::exactnum::{rat, Rational};
use crate::{Error, Result};

/// Dense polynomial in `y`, coefficients in ascending order, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn one() -> Self {
        Polynomial::new(alloc::vec![Rational::one()])
    }

    /// `Π (y + s)` over the given shifts.
    pub fn from_shifts(shifts: &[Rational]) -> Self {
        let mut coeffs = alloc::vec![Rational::one()];
        for s in shifts {
            let mut next = alloc::vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c * s;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == Rational::one())
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }
}

/// The ratio `P(y)/Q(y)` of two monic polynomials of degree `λk+ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicRationalWeight {
    p: Polynomial,
    q: Polynomial,
    lambda: u32,
    nu: u32,
}

impl MonicRationalWeight {
    /// Validate monicity and the degree `λk+ν` for the index `k`.
    pub fn new(p: Polynomial, q: Polynomial, lambda: u32, nu: u32, k: u32) -> Result<Self> {
        let degree = (lambda * k + nu) as usize;
        for (name, poly) in [("P", &p), ("Q", &q)] {
            if !poly.is_monic() {
                return Err(Error::InvalidWeight {
                    reason: format!("{name} is not monic"),
                });
            }
            if poly.degree() != Some(degree) {
                return Err(Error::InvalidWeight {
                    reason: format!(
                        "deg {name} = {} but lambda*k + nu = {degree}",
                        poly.degree().unwrap_or(0)
                    ),
                });
            }
        }
        Ok(MonicRationalWeight { p, q, lambda, nu })
    }

    /// `P = Q = 1`, for `λ = ν = 0`.
    pub fn unit() -> Self {
        MonicRationalWeight {
            p: Polynomial::one(),
            q: Polynomial::one(),
            lambda: 0,
            nu: 0,
        }
    }

    pub fn p(&self) -> &Polynomial {
        &self.p
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn eval(&self, y: &Rational) -> Result<Rational> {
        let q = self.q.eval(y);
        if q.is_zero() {
            return Err(Error::DivisionByZero {
                context: format!("Q({y}) = 0"),
            });
        }
        self.p.eval(y).checked_div(&q)
    }
}

/// Weights `(P_k/Q_k)^λ` with `P_k = Π_{i=1..k} (y + i/n)` and
/// `Q_k = Π_{i=0..k-1} (y + 1 - i/n)`, i.e. `binom(ny+k,k)/binom(ny+n,k)`
/// as a quotient of monic polynomials. One weight per `k = 0..=n`.
pub fn binomial_ratio_weights(n: u32, lambda: u32) -> Result<Vec<MonicRationalWeight>> {
    let nn = i64::from(n.max(1));
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let k64 = i64::from(k);
        let p_shifts: Vec<Rational> = (1..=k64).map(|i| rat(i, nn)).collect::<Result<_>>()?;
        let q_shifts: Vec<Rational> =
            (0..k64).map(|i| rat(nn - i, nn)).collect::<Result<_>>()?;
        let p = Polynomial::from_shifts(&p_shifts).pow(lambda);
        let q = Polynomial::from_shifts(&q_shifts).pow(lambda);
        out.push(MonicRationalWeight::new(p, q, lambda, 0, k)?);
    }
    Ok(out)
}

type FamilyFn = dyn Fn(u32, u32) -> Rational + Send + Sync;

/// A summand family `f_n(k)` expected to satisfy `f_n(k) = -f_n(n-k)`.
pub struct ReflectionFamily {
    f: Box<FamilyFn>,
    mu: u32,
    nu: u32,
    label: String,
}

impl ReflectionFamily {
    pub fn new<F>(label: impl Into<String>, mu: u32, nu: u32, f: F) -> Self
    where
        F: Fn(u32, u32) -> Rational + Send + Sync + 'static,
    {
        ReflectionFamily {
            f: Box::new(f),
            mu,
            nu,
            label: label.into(),
        }
    }

    /// `binom(n,k)^μ (binom(n+k,k)/binom(2n,k))^ν (n-2k)`.
    pub fn reflex(mu: u32, nu: u32) -> Self {
        ReflectionFamily::new(format!("reflex mu={mu} nu={nu}"), mu, nu, move |n, k| {
            let (n, k) = (i64::from(n), i64::from(k));
            let ratio = binomial_int(n + k, k)
                * binomial_int(2 * n, k)
                    .recip()
                    .expect("binom(2n, k) > 0 for k <= n");
            binomial_int(n, k).pow(mu) * ratio.pow(nu) * Rational::from(n - 2 * k)
        })
    }

    pub fn zero() -> Self {
        ReflectionFamily::new("zero", 0, 0, |_, _| Rational::zero())
    }

    pub fn eval(&self, n: u32, k: u32) -> Rational {
        (self.f)(n, k)
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl core::fmt::Debug for ReflectionFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ReflectionFamily")
            .field("label", &self.label)
            .field("mu", &self.mu)
            .field("nu", &self.nu)
            .finish()
    }
}

/// `f(n,k) + f(n,n-k) = 0` for every `k`.
pub fn reflection_check(fam: &ReflectionFamily, n: u32) -> bool {
    (0..=n).all(|k| (fam.eval(n, k) + fam.eval(n, n - k)).is_zero())
}

fn reflection_gate(fam: &ReflectionFamily, n: u32) -> Result<()> {
    match (0..=n).find(|&k| !(fam.eval(n, k) + fam.eval(n, n - k)).is_zero()) {
        Some(k) => Err(Error::Reflection { n, k }),
        None => Ok(()),
    }
}

fn check_inputs(
    fam: &ReflectionFamily,
    weights: &[MonicRationalWeight],
    n: u32,
    y: u64,
) -> Result<()> {
    if weights.len() != n as usize + 1 {
        return Err(Error::InvalidWeight {
            reason: format!("{} weights supplied, n + 1 = {} needed", weights.len(), n + 1),
        });
    }
    if y == 0 {
        return Err(Error::ProbePoints);
    }
    reflection_gate(fam, n)
}

/// `H_{ny+k}` for `k = 0..=n`, from one base value.
fn shifted_harmonics(n: u32, y: u64) -> Vec<Rational> {
    let base = u64::from(n) * y;
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut h = harmonic_u(base);
    out.push(h.clone());
    for k in 1..=u64::from(n) {
        h += rat(1, (base + k) as i64).expect("positive denominator");
        out.push(h.clone());
    }
    out
}

/// Exact `S(y) = Σ_k f_n(k) · P_k(y)/Q_k(y) · H_{ny+k}`.
pub fn limit_sum(
    fam: &ReflectionFamily,
    weights: &[MonicRationalWeight],
    n: u32,
    y: u64,
) -> Result<Rational> {
    check_inputs(fam, weights, n, y)?;
    let yr = Rational::from(y);
    let hs = shifted_harmonics(n, y);
    let mut acc = Rational::zero();
    for (k, (w, h)) in weights.iter().zip(&hs).enumerate() {
        let f = fam.eval(n, k as u32);
        if f.is_zero() {
            continue;
        }
        acc += f * w.eval(&yr)? * h;
    }
    Ok(acc)
}

/// `P_k/Q_k · H_{ny+k} − P_{n-k}/Q_{n-k} · H_{ny+n-k}`.
pub fn pair_difference(
    weights: &[MonicRationalWeight],
    n: u32,
    k: u32,
    y: u64,
) -> Result<Rational> {
    if k > n || weights.len() != n as usize + 1 {
        return Err(Error::InvalidWeight {
            reason: format!("pair index {k} outside 0..={n} or weight count mismatch"),
        });
    }
    let yr = Rational::from(y);
    let hs = shifted_harmonics(n, y);
    let j = (n - k) as usize;
    let k = k as usize;
    Ok(weights[k].eval(&yr)? * &hs[k] - weights[j].eval(&yr)? * &hs[j])
}

/// `½ Σ_k f_n(k) · [w_k H_{ny+k} − w_{n-k} H_{ny+n-k}]`, the sum rewritten
/// through `k ↦ n-k`.
pub fn paired_sum(
    fam: &ReflectionFamily,
    weights: &[MonicRationalWeight],
    n: u32,
    y: u64,
) -> Result<Rational> {
    check_inputs(fam, weights, n, y)?;
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += fam.eval(n, k) * pair_difference(weights, n, k, y)?;
    }
    Ok(acc * rat(1, 2)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecayReport {
    pub ys: Vec<u64>,
    pub values: Vec<Rational>,
    /// `|S(y)|` strictly decreases along `ys`.
    pub monotone_decreasing_magnitude: bool,
    /// Every value is exactly zero.
    pub converged: bool,
    pub final_magnitude: Rational,
}

impl DecayReport {
    /// Strict decay, or an identically vanishing probe.
    pub fn decays(&self) -> bool {
        self.monotone_decreasing_magnitude || self.converged
    }
}

/// Evaluate `S(y)` at each probe point and test for strict decay in
/// magnitude.
pub fn decay_probe(
    fam: &ReflectionFamily,
    weights: &[MonicRationalWeight],
    n: u32,
    ys: &[u64],
) -> Result<DecayReport> {
    if ys.is_empty() || ys[0] == 0 || ys.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ProbePoints);
    }
    reflection_gate(fam, n)?;
    let values = ys
        .iter()
        .map(|&y| limit_sum(fam, weights, n, y))
        .collect::<Result<Vec<_>>>()?;
    let mags: Vec<Rational> = values.iter().map(Rational::abs).collect();
    let monotone_decreasing_magnitude = mags.windows(2).all(|w| w[1] < w[0]);
    let converged = values.iter().all(Rational::is_zero);
    let final_magnitude = mags.last().cloned().unwrap_or_else(Rational::zero);
    Ok(DecayReport {
        ys: ys.to_vec(),
        values,
        monotone_decreasing_magnitude,
        converged,
        final_magnitude,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn units(n: u32) -> Vec<MonicRationalWeight> {
        (0..=n).map(|_| MonicRationalWeight::unit()).collect()
    }

    #[test]
    fn reflection_examples() {
        assert!(reflection_check(&ReflectionFamily::reflex(3, 2), 4));
        let sym = ReflectionFamily::new("binom", 0, 0, |n, k| {
            binomial_int(i64::from(n), i64::from(k))
        });
        assert!(!reflection_check(&sym, 1));
        let fam = ReflectionFamily::reflex(1, 0);
        assert!(fam.eval(4, 2).is_zero());
    }

    #[test]
    fn limit_sum_examples() {
        let fam = ReflectionFamily::reflex(2, 0);
        assert!(limit_sum(&fam, &units(0), 0, 5).unwrap().is_zero());
        let w = binomial_ratio_weights(3, 1).unwrap();
        let fam = ReflectionFamily::reflex(3, 2);
        let s10 = limit_sum(&fam, &w, 3, 10).unwrap();
        let s100 = limit_sum(&fam, &w, 3, 100).unwrap();
        assert!(s100.abs() < s10.abs());
    }

    #[test]
    fn pairing_matches_direct_sum() {
        let fam = ReflectionFamily::reflex(1, 1);
        for n in 0..=5 {
            let w = binomial_ratio_weights(n, 2).unwrap();
            assert_eq!(
                limit_sum(&fam, &w, n, 7).unwrap(),
                paired_sum(&fam, &w, n, 7).unwrap()
            );
        }
    }

    #[test]
    fn weight_validation() {
        let p = Polynomial::from_shifts(&[Rational::one()]);
        let q = Polynomial::new(alloc::vec![Rational::one(), Rational::from(2)]);
        assert!(matches!(
            MonicRationalWeight::new(p.clone(), q, 1, 0, 1),
            Err(Error::InvalidWeight { .. })
        ));
        assert!(MonicRationalWeight::new(p.clone(), p.clone(), 1, 0, 1).is_ok());
        assert!(MonicRationalWeight::new(p.clone(), p, 1, 0, 2).is_err());
        let zero_q = MonicRationalWeight::new(
            Polynomial::one(),
            Polynomial::one(),
            0,
            0,
            0,
        )
        .unwrap();
        assert_eq!(zero_q.eval(&Rational::from(3)).unwrap(), Rational::one());
        let w = MonicRationalWeight::new(
            Polynomial::from_shifts(&[Rational::one()]),
            Polynomial::from_shifts(&[Rational::from(-2)]),
            1,
            0,
            1,
        )
        .unwrap();
        assert!(matches!(w.eval(&Rational::from(2)), Err(Error::DivisionByZero { .. })));
    }

    #[test]
    fn probe_gates() {
        let fam = ReflectionFamily::zero();
        let rep = decay_probe(&fam, &units(2), 2, &[10, 100]).unwrap();
        assert!(rep.converged && rep.decays());
        assert!(!rep.monotone_decreasing_magnitude);
        assert_eq!(
            decay_probe(&fam, &units(2), 2, &[100, 10]),
            Err(Error::ProbePoints)
        );
        let bad = ReflectionFamily::new("one", 0, 0, |_, _| Rational::one());
        assert_eq!(
            decay_probe(&bad, &units(2), 2, &[10, 100]),
            Err(Error::Reflection { n: 2, k: 0 })
        );
    }
}
