//! Exact scalars: canonical rationals and first-order dual numbers.
//!
//! All downstream code is generic over [`Scalar`], so the same series or
//! binomial expression evaluates either to a plain value (over [`Rational`])
//! or to a value together with its exact first derivative (over [`Dual`]).

mod dual;
mod rational;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub use dual::Dual;
pub use rational::{rat, Rational};

use crate::Result;

/// Field-like scalar the series and identity code is generic over.
///
/// Division is fallible: a divisor whose value part is zero is an error,
/// never a NaN-like value.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from(i))
    }

    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The value part (the scalar itself for rationals).
    fn value(&self) -> &Rational;

    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// Multiply by a rational constant.
    fn scale(&self, r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn value(&self) -> &Rational {
        self
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Rational::checked_div(self, rhs)
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Scalar for Dual {
    fn from_rational(r: Rational) -> Self {
        Dual::constant(r)
    }

    fn value(&self) -> &Rational {
        Dual::value(self)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Dual::checked_div(self, rhs)
    }

    fn scale(&self, r: &Rational) -> Self {
        Dual::new(self.value() * r, self.deriv() * r)
    }
}

/// Evaluate `f` at the dual point `0 + 1ε`, returning `(f(0), f'(0))`.
pub fn d0_eval<F>(f: F) -> Result<(Rational, Rational)>
where
    F: FnOnce(&Dual) -> Result<Dual>,
{
    let x = Dual::variable(Rational::zero());
    Ok(f(&x)?.into_parts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial_gen;

    #[test]
    fn d0_examples() {
        let three = Dual::from_int(3);
        assert_eq!(
            d0_eval(|x| Ok(x.clone() * (three.clone() + x))).unwrap(),
            (Rational::zero(), Rational::from(3))
        );
        let two = Dual::from_int(2);
        assert_eq!(
            d0_eval(|x| Ok(binomial_gen(&(x.clone() + &two), 1))).unwrap(),
            (Rational::from(2), Rational::one())
        );
        assert_eq!(
            d0_eval(|x| Dual::one().checked_div(&binomial_gen(&(x.clone() + &two), 1))).unwrap(),
            (rat(1, 2).unwrap(), rat(-1, 4).unwrap())
        );
    }
}
