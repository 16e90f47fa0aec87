//! The ground field: exact rational numbers with arbitrary-precision parts.
//!
//! Every quantity in this crate is built from `Scalar`; no floating point
//! appears anywhere. Scalars serialize as the strings `"a/b"` or `"a"`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::MathError;

/// An exact rational number. Always stored reduced, with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn new(value: BigRational) -> Self {
        Scalar(value)
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Build `numer / denom` from machine integers.
    ///
    /// # Panics
    ///
    /// Panics if `denom == 0`; intended for literals in code and tests.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "Scalar::ratio: zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn half() -> Self {
        Scalar::ratio(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn inv(&self) -> Result<Scalar, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl<'a, 'b> Div<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'b Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "Scalar division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Scalar {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MathError::InvalidScalar(s.to_string());
        let mut parts = s.splitn(2, '/');
        let numer_str = parts.next().ok_or_else(bad)?;
        let numer = BigInt::from_str(numer_str.trim()).map_err(|_| bad())?;
        match parts.next() {
            None => Ok(Scalar(BigRational::from_integer(numer))),
            Some(denom_str) => {
                let denom = BigInt::from_str(denom_str.trim()).map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct ScalarVisitor;

impl<'de> de::Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational as \"a/b\", \"a\", or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        Scalar::from_str(v).map_err(|e| E::custom(e.to_string()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        Ok(Scalar(BigRational::from_integer(BigInt::from(v))))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(Scalar::from_str("3/4").unwrap(), Scalar::ratio(3, 4));
        assert_eq!(Scalar::from_str("-7").unwrap(), Scalar::from_int(-7));
        assert_eq!(Scalar::from_str("2/-4").unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(Scalar::ratio(6, 4).to_string(), "3/2");
        assert_eq!(Scalar::from_int(5).to_string(), "5");
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(Scalar::from_str("1//2").is_err());
        assert!(Scalar::from_str("1/0").is_err());
        assert!(Scalar::from_str("").is_err());
        assert!(Scalar::from_str("a").is_err());
        assert!(Scalar::from_str("1.5").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = Scalar::ratio(0, -5);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(MathError::DivisionByZero));
        assert_eq!(Scalar::ratio(2, 3).inv().unwrap(), Scalar::ratio(3, 2));
    }

    #[test]
    fn serde_accepts_strings_and_integers() {
        let s: Scalar = serde_json::from_str("\"5/3\"").unwrap();
        assert_eq!(s, Scalar::ratio(5, 3));
        let s: Scalar = serde_json::from_str("-4").unwrap();
        assert_eq!(s, Scalar::from_int(-4));
        assert_eq!(serde_json::to_string(&Scalar::ratio(1, 2)).unwrap(), "\"1/2\"");
    }
}
