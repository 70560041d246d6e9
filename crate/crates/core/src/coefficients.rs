//! Exact scalars and the combinatorial coefficients built on them.
//!
//! [`Rational`] wraps an arbitrary-precision fraction that is kept in lowest
//! terms with a positive denominator, so structural equality is value
//! equality. It renders as `p/q` (or `p` when `q = 1`) and parses the same
//! grammar with an optional leading sign.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `numer / denom`, reduced. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The integer value, if this rational is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.numer()).ok()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents fail on zero.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_unsigned(digits: &str, whole: &str) -> Result<BigInt> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseRational(whole.to_string()));
    }
    BigInt::from_str(digits).map_err(|_| Error::ParseRational(whole.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (negative, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (parse_unsigned(n, s)?, parse_unsigned(d, s)?),
            None => (parse_unsigned(body, s)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = if negative { -num } else { num };
        Rational::new(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize, BigInt);

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $assign_tr<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                self.0.$assign(&rhs.0);
            }
        }
        impl $assign_tr<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                self.0.$assign(rhs.0);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

/// Panics on a zero divisor; use [`Rational::checked_div`] for a `Result`.
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).map(Rational::from).product()
}

/// `c (c-1) ... (c-j+1) / j!`, for any rational upper argument.
pub fn binomial_generalized(c: &Rational, j: usize) -> Rational {
    falling_factorial(c, j) / factorial(j)
}

/// Binomial coefficient with integer arguments; zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    binomial_generalized(&Rational::from(n), k as usize)
}

pub fn multinomial(n: usize, parts: &[usize]) -> Result<Rational> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsMismatch { n, sum });
    }
    Ok(parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p)))
}

/// `x (x-1) ... (x-n+1)`; the empty product for `n = 0`.
pub fn falling_factorial(x: &Rational, n: usize) -> Rational {
    (0..n).map(|i| x - Rational::from(i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_generalized(&q("5"), 2), q("10"));
        assert_eq!(binomial_generalized(&q("-7/3"), 0), q("1"));
        // (1/2)(-1/2)/2
        assert_eq!(binomial_generalized(&q("1/2"), 2), q("-1/8"));
        assert_eq!(binomial(3, 5), q("0"));
        assert_eq!(binomial(4, -1), q("0"));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), q("6"));
        assert_eq!(multinomial(9, &[9]).unwrap(), q("1"));
        // 720 / (6 * 2 * 1)
        assert_eq!(multinomial(6, &[3, 2, 1]).unwrap(), q("60"));
        assert_eq!(
            multinomial(5, &[2, 2]),
            Err(Error::PartsMismatch { n: 5, sum: 4 })
        );
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&q("4"), 2), q("12"));
        assert_eq!(falling_factorial(&q("2/7"), 0), q("1"));
        // (1/2)(-1/2)(-3/2)
        assert_eq!(falling_factorial(&q("1/2"), 3), q("3/8"));
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(q("-6/16").to_string(), "-3/8");
        assert_eq!(q("28/2").to_string(), "14");
        assert_eq!(q("+5"), q("5"));
        assert_eq!(q(" 3/4 ").to_string(), "3/4");
        for bad in ["", "-", "1/", "/2", "1.5", "a/b", "1//2", "--1", "1/-2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} parsed");
        }
        assert_eq!("1/0".parse::<Rational>(), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(q("1").checked_div(&q("0")), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(q("2").pow(-2).unwrap(), q("1/4"));
        assert!(q("0").pow(-1).is_err());
    }

    #[test]
    fn canonical_form() {
        let r = Rational::new(-4, -6).unwrap();
        assert_eq!(r, q("2/3"));
        assert_eq!(r.denom(), &BigInt::from(3));
        let s = Rational::new(3, -9).unwrap();
        assert_eq!(s.to_string(), "-1/3");
    }

    #[test]
    fn serde_as_string() {
        let v = vec![q("1"), q("-1/2")];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1","-1/2"]"#);
        let back: Vec<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
