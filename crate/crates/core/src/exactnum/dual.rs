use alloc::format;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::{Error, Result};

/// First-order jet `value + deriv·ε` with `ε² = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dual {
    value: Rational,
    deriv: Rational,
}

impl Dual {
    pub fn new(value: Rational, deriv: Rational) -> Self {
        Dual { value, deriv }
    }

    /// The embedding `r ↦ r + 0ε`.
    pub fn constant(value: Rational) -> Self {
        Dual {
            value,
            deriv: Rational::zero(),
        }
    }

    /// The differentiation variable at `x0`, i.e. `x0 + 1ε`.
    pub fn variable(x0: Rational) -> Self {
        Dual {
            value: x0,
            deriv: Rational::one(),
        }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn deriv(&self) -> &Rational {
        &self.deriv
    }

    pub fn into_parts(self) -> (Rational, Rational) {
        (self.value, self.deriv)
    }

    /// `1/(a+bε) = 1/a − (b/a²)ε`.
    pub fn recip(&self) -> Result<Dual> {
        if self.value.is_zero() {
            return Err(Error::DivisionByZero {
                context: format!("1 / {self}"),
            });
        }
        let inv = self.value.recip()?;
        let deriv = -(&self.deriv * &inv * &inv);
        Ok(Dual { value: inv, deriv })
    }

    pub fn checked_div(&self, rhs: &Dual) -> Result<Dual> {
        if rhs.value.is_zero() {
            return Err(Error::DivisionByZero {
                context: format!("{self} / {rhs}"),
            });
        }
        Ok(self.clone() * rhs.recip()?)
    }
}

impl From<Rational> for Dual {
    fn from(r: Rational) -> Self {
        Dual::constant(r)
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.value, self.deriv)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            value: -self.value,
            deriv: -self.deriv,
        }
    }
}

impl Add<&Dual> for Dual {
    type Output = Dual;
    fn add(self, rhs: &Dual) -> Dual {
        Dual {
            value: self.value + &rhs.value,
            deriv: self.deriv + &rhs.deriv,
        }
    }
}

impl Sub<&Dual> for Dual {
    type Output = Dual;
    fn sub(self, rhs: &Dual) -> Dual {
        Dual {
            value: self.value - &rhs.value,
            deriv: self.deriv - &rhs.deriv,
        }
    }
}

impl Mul<&Dual> for Dual {
    type Output = Dual;
    fn mul(self, rhs: &Dual) -> Dual {
        let deriv = &self.value * &rhs.deriv + &self.deriv * &rhs.value;
        Dual {
            value: self.value * &rhs.value,
            deriv,
        }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        self + &rhs
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        self - &rhs
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn d(v: (i64, i64), e: (i64, i64)) -> Dual {
        Dual::new(rat(v.0, v.1).unwrap(), rat(e.0, e.1).unwrap())
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(d((1, 1), (1, 1)).checked_div(&d((1, 1), (0, 1))).unwrap(), d((1, 1), (1, 1)));
        assert_eq!(d((1, 1), (0, 1)).checked_div(&d((2, 1), (1, 1))).unwrap(), d((1, 2), (-1, 4)));
        assert_eq!(d((0, 1), (1, 1)).checked_div(&d((1, 1), (1, 1))).unwrap(), d((0, 1), (1, 1)));
    }

    #[test]
    fn zero_value_divisor_is_an_error() {
        let err = d((1, 1), (0, 1)).checked_div(&d((0, 1), (3, 1))).unwrap_err();
        match err {
            Error::DivisionByZero { context } => assert!(context.contains("(0, 3)")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn jet_product_rule() {
        // (2+3ε)(5+7ε) = 10 + 29ε
        assert_eq!(d((2, 1), (3, 1)) * d((5, 1), (7, 1)), d((10, 1), (29, 1)));
    }
}
