use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact fraction `numer / denom` kept in lowest terms with `denom > 0`.
///
/// Every constructor and every arithmetic operation returns the canonical
/// form, so `==` and `Hash` compare values structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigInt,
    denom: BigInt,
}

/// Canonical `p / q`. Fails when `q == 0`.
pub fn rat(p: i64, q: i64) -> Result<Rational> {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(numer, denom))
    }

    /// Build from a pair the caller guarantees is already coprime with a
    /// positive denominator.
    pub(crate) fn from_coprime(numer: BigInt, denom: BigInt) -> Self {
        debug_assert!(denom.is_positive());
        debug_assert!(gcd(numer.magnitude(), denom.magnitude()).is_one());
        Rational { numer, denom }
    }

    fn reduce(mut numer: BigInt, mut denom: BigInt) -> Self {
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        if numer.is_zero() {
            return Self::zero();
        }
        let g = gcd(numer.magnitude(), denom.magnitude());
        if !g.is_one() {
            let g = BigInt::from(g);
            numer /= &g;
            denom /= &g;
        }
        Rational { numer, denom }
    }

    pub fn zero() -> Self {
        Rational {
            numer: BigInt::zero(),
            denom: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Rational {
            numer: BigInt::one(),
            denom: BigInt::one(),
        }
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational {
            numer: n,
            denom: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer.to_i64()
        } else {
            None
        }
    }

    pub fn signum(&self) -> i32 {
        match self.numer.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero {
                context: String::from("1 / 0"),
            });
        }
        let (numer, denom) = if self.numer.is_negative() {
            (-self.denom.clone(), -self.numer.clone())
        } else {
            (self.denom.clone(), self.numer.clone())
        };
        Ok(Rational { numer, denom })
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero {
                context: alloc::format!("{self} / 0"),
            });
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational {
            numer: num_traits::pow(self.numer.clone(), exp as usize),
            denom: num_traits::pow(self.denom.clone(), exp as usize),
        }
    }
}

/// gcd of two magnitudes. A modulo step first brings operands of very
/// different sizes together; Stein's algorithm alone costs O(bits * words)
/// on such pairs.
pub(crate) fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut big, mut small) = if a >= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if small.is_zero() {
            return big;
        }
        if let (Some(x), Some(y)) = (big.to_u64(), small.to_u64()) {
            return BigUint::from(x.gcd(&y));
        }
        if big.bits() > small.bits() + 32 {
            big %= &small;
            core::mem::swap(&mut big, &mut small);
            continue;
        }
        return big.gcd(&small);
    }
}

fn add_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    if lhs.is_zero() {
        return rhs.clone();
    }
    if rhs.is_zero() {
        return lhs.clone();
    }
    if lhs.denom == rhs.denom {
        return Rational::reduce(&lhs.numer + &rhs.numer, lhs.denom.clone());
    }
    let g = BigInt::from(gcd(lhs.denom.magnitude(), rhs.denom.magnitude()));
    if g.is_one() {
        let numer = &lhs.numer * &rhs.denom + &rhs.numer * &lhs.denom;
        if numer.is_zero() {
            return Rational::zero();
        }
        return Rational {
            numer,
            denom: &lhs.denom * &rhs.denom,
        };
    }
    let lhs_rest = &lhs.denom / &g;
    let rhs_rest = &rhs.denom / &g;
    let t = &lhs.numer * &rhs_rest + &rhs.numer * &lhs_rest;
    if t.is_zero() {
        return Rational::zero();
    }
    let g2 = BigInt::from(gcd(t.magnitude(), g.magnitude()));
    Rational {
        numer: t / &g2,
        denom: (&lhs.denom / g2) * rhs_rest,
    }
}

fn mul_ref(lhs: &Rational, rhs: &Rational) -> Rational {
    if lhs.is_zero() || rhs.is_zero() {
        return Rational::zero();
    }
    let g1 = BigInt::from(gcd(lhs.numer.magnitude(), rhs.denom.magnitude()));
    let g2 = BigInt::from(gcd(rhs.numer.magnitude(), lhs.denom.magnitude()));
    Rational {
        numer: (&lhs.numer / &g1) * (&rhs.numer / &g2),
        denom: (&lhs.denom / g2) * (&rhs.denom / g1),
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $assign:ident, $assign_method:ident, $f:expr) => {
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(self, rhs)
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(self, &rhs)
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(&self, rhs)
            }
        }
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(&self, &rhs)
            }
        }
        impl $assign<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                *self = $f(self, rhs);
            }
        }
        impl $assign<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                *self = $f(self, &rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign, add_ref);
forward_binop!(Mul, mul, MulAssign, mul_assign, mul_ref);
forward_binop!(Sub, sub, SubAssign, sub_assign, |a: &Rational, b: &Rational| {
    add_ref(a, &-b)
});

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational::from_integer(BigInt::from(v))
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize);

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_integer(v)
    }
}

/// `p` for integers, `p/q` otherwise.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` with an optional leading `-` and `q > 0`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_string(),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let unsigned = num.strip_prefix('-').unwrap_or(num);
        if !digits(unsigned) {
            return Err(bad());
        }
        let numer: BigInt = num.parse().map_err(|_| bad())?;
        let denom: BigInt = match den {
            Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational::reduce(numer, denom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn construction_is_canonical() {
        assert_eq!(format!("{}", rat(2, 4).unwrap()), "1/2");
        assert_eq!(format!("{}", rat(3, -6).unwrap()), "-1/2");
        let z = rat(0, 5).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(rat(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = rat(1, 6).unwrap();
        let b = rat(1, 3).unwrap();
        assert_eq!(&a + &b, rat(1, 2).unwrap());
        assert_eq!(&a - &a, Rational::zero());
        assert_eq!(&a * rat(6, 1).unwrap(), Rational::one());
        assert_eq!(b.checked_div(&a).unwrap(), rat(2, 1).unwrap());
        assert!(a.checked_div(&Rational::zero()).is_err());
        assert_eq!(rat(-2, 3).unwrap().recip().unwrap(), rat(-3, 2).unwrap());
    }

    #[test]
    fn ordering() {
        assert!(rat(1, 3).unwrap() < rat(1, 2).unwrap());
        assert!(rat(-1, 2).unwrap() < rat(-1, 3).unwrap());
        assert_eq!(rat(-7, 3).unwrap().abs(), rat(7, 3).unwrap());
    }

    #[test]
    fn parse_display() {
        for s in ["0", "5", "-5", "1/2", "-22/7"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap(), rat(2, 3).unwrap());
        for s in ["", "/2", "1/", "1/0", "1/-2", "+1", " 1", "1.5", "--1"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?}");
        }
    }

    #[test]
    fn unbalanced_gcd() {
        let big = num_traits::pow(BigUint::from(3u32), 4000) * BigUint::from(10u32);
        assert_eq!(gcd(&big, &BigUint::from(4u32)), BigUint::from(2u32));
        assert_eq!(gcd(&BigUint::from(0u32), &big), big);
    }
}
