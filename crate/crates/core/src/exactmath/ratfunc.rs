//! Normalized rational functions num/den.
//!
//! The denominator is monic and coprime to the numerator, so equality of
//! rational functions is structural equality of the two polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::MathError;

use super::poly::Poly;
use super::scalar::Scalar;
use super::series::SeriesInf;

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build and normalize `num / den`. Errors if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lead_inv = den.leading().unwrap().inv().unwrap();
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn constant(c: Scalar) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    /// The polynomial this rational function reduces to, if the denominator
    /// is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den == Poly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RatFunc, MathError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `u -> -u`.
    pub fn subst_neg(&self) -> RatFunc {
        RatFunc::new(self.num.subst_neg(), self.den.subst_neg()).expect("denominator stays nonzero")
    }

    /// Substitute `u -> 1/u`.
    pub fn subst_inv(&self) -> RatFunc {
        let k = self.num.deg().max(self.den.deg()).max(0) as usize;
        RatFunc::new(self.num.reverse_padded(k), self.den.reverse_padded(k))
            .expect("denominator stays nonzero")
    }

    /// Laurent expansion at `u = infinity`, carried to order `u^{-order}`.
    pub fn expand(&self, order: i64) -> SeriesInf {
        SeriesInf::expand(&self.num, &self.den, order)
    }
}

impl<'a, 'b> Mul<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'b RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl<'a, 'b> Add<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'b RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl<'a, 'b> Sub<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'b RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Neg for &'a RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a, 'b> Div<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'b RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Deserialize)]
struct RatFuncRaw {
    num: Poly,
    den: Poly,
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RatFuncRaw::deserialize(deserializer)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}
