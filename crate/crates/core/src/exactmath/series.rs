//! Truncated series: Laurent expansions at `u = infinity` and Taylor
//! expansions at `u = 0`.
//!
//! A `SeriesInf` carries the coefficients of `u^e` for `top_exp >= e >= -N`;
//! everything below `-N` is unknown. Addition keeps the minimum truncation
//! order. Multiplication accounts for the top exponents: unknown low-order
//! terms of one factor pollute the product up to `top` of the other factor,
//! so the product is valid down to `-min(Na - top_b, Nb - top_a)`. For
//! series in `1 + u^{-1}k[[u^{-1}]]` (the bubble generating functions) this
//! reduces to the plain minimum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::MathError;

use super::poly::Poly;
use super::scalar::Scalar;

/// Truncated Laurent series at `u = infinity`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SeriesInf {
    top_exp: i64,
    /// `coeffs[i]` is the coefficient of `u^{top_exp - i}`; the last entry
    /// sits at exponent `-order`.
    coeffs: Vec<Scalar>,
    order: i64,
}

impl SeriesInf {
    /// Build from the coefficient of `u^{top_exp}` downwards; the vector must
    /// reach exponent `-order` exactly.
    pub fn new(top_exp: i64, coeffs: Vec<Scalar>, order: i64) -> Result<Self, MathError> {
        if order < 1 {
            return Err(MathError::InsufficientOrder { have: order, need: 1 });
        }
        if coeffs.len() as i64 != top_exp + order + 1 {
            return Err(MathError::InvalidParams(format!(
                "series coefficient count {} does not match top_exp {} and order {}",
                coeffs.len(),
                top_exp,
                order
            )));
        }
        Ok(SeriesInf {
            top_exp,
            coeffs,
            order,
        }
        .normalized())
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs[0].is_zero() {
            self.coeffs.remove(0);
            self.top_exp -= 1;
        }
        self
    }

    pub fn zero(order: i64) -> Self {
        SeriesInf {
            top_exp: -order,
            coeffs: vec![Scalar::zero()],
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        SeriesInf::from_poly(&Poly::one(), order)
    }

    /// A polynomial viewed as a series known to order `order`.
    pub fn from_poly(p: &Poly, order: i64) -> Self {
        if p.is_zero() {
            return SeriesInf::zero(order);
        }
        let d = p.degree().unwrap() as i64;
        let mut coeffs = Vec::with_capacity((d + order + 1) as usize);
        for e in (-order..=d).rev() {
            coeffs.push(if e >= 0 { p.coeff(e as usize) } else { Scalar::zero() });
        }
        SeriesInf {
            top_exp: d,
            coeffs,
            order,
        }
        .normalized()
    }

    /// Laurent expansion of `num/den` at infinity by descending long division.
    pub fn expand(num: &Poly, den: &Poly, order: i64) -> SeriesInf {
        assert!(!den.is_zero(), "expansion requires a nonzero denominator");
        assert!(order >= 1, "expansion order must be positive");
        if num.is_zero() {
            return SeriesInf::zero(order);
        }
        let e = den.degree().unwrap();
        let top = num.deg() - e as i64;
        if top < -order {
            return SeriesInf::zero(order);
        }
        let lead_inv = den.leading().unwrap().inv().unwrap();
        let len = (top + order + 1) as usize;
        let mut coeffs: Vec<Scalar> = Vec::with_capacity(len);
        for idx in 0..len {
            let j = top - idx as i64; // exponent being solved for
            let target = j + e as i64;
            let mut acc = if target >= 0 {
                num.coeff(target as usize)
            } else {
                Scalar::zero()
            };
            // subtract d_i * c_{j + e - i} for i < e
            for i in 0..e {
                let prev_exp = j + (e - i) as i64;
                if prev_exp > top {
                    continue;
                }
                let prev_idx = (top - prev_exp) as usize;
                acc = acc - &(&den.coeff(i) * &coeffs[prev_idx]);
            }
            coeffs.push(&acc * &lead_inv);
        }
        SeriesInf {
            top_exp: top,
            coeffs,
            order,
        }
        .normalized()
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn top_exp(&self) -> i64 {
        self.top_exp
    }

    /// The coefficient of `u^e`; zero above the top, an error below the
    /// truncation.
    pub fn coeff(&self, e: i64) -> Result<Scalar, MathError> {
        if e < -self.order {
            return Err(MathError::BelowTruncation {
                index: e,
                order: self.order,
            });
        }
        if e > self.top_exp {
            return Ok(Scalar::zero());
        }
        Ok(self.coeffs[(self.top_exp - e) as usize].clone())
    }

    /// All coefficients `sum_{e >= 0} [s]_{u^e} u^e` as a polynomial.
    pub fn poly_part(&self) -> Poly {
        if self.top_exp < 0 {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.top_exp as usize + 1);
        for e in 0..=self.top_exp {
            coeffs.push(self.coeff(e).unwrap());
        }
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// A series is a unit when its leading carried coefficient is nonzero.
    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    pub fn add(&self, rhs: &SeriesInf) -> SeriesInf {
        let order = self.order.min(rhs.order);
        let top = self.top_exp.max(rhs.top_exp).max(-order);
        let mut coeffs = Vec::with_capacity((top + order + 1) as usize);
        for e in (-order..=top).rev() {
            coeffs.push(self.coeff(e).unwrap() + rhs.coeff(e).unwrap());
        }
        SeriesInf {
            top_exp: top,
            coeffs,
            order,
        }
        .normalized()
    }

    pub fn neg(&self) -> SeriesInf {
        SeriesInf {
            top_exp: self.top_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, rhs: &SeriesInf) -> SeriesInf {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Scalar) -> SeriesInf {
        SeriesInf {
            top_exp: self.top_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
        .normalized()
    }

    /// Product of two truncated series.
    ///
    /// The result is valid down to `-min(Na - top_b, Nb - top_a)`; an error is
    /// returned when nothing survives at that order.
    pub fn mul(&self, rhs: &SeriesInf) -> Result<SeriesInf, MathError> {
        let order = (self.order - rhs.top_exp).min(rhs.order - self.top_exp);
        if order < 1 {
            return Err(MathError::InsufficientOrder {
                have: self.order.min(rhs.order),
                need: self.order.min(rhs.order) - order + 1,
            });
        }
        let top = (self.top_exp + rhs.top_exp).max(-order);
        let mut coeffs = vec![Scalar::zero(); (top + order + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.top_exp - i as i64;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let e = ea + rhs.top_exp - j as i64;
                if e < -order {
                    break;
                }
                if e > top {
                    continue;
                }
                let idx = (top - e) as usize;
                coeffs[idx] = &coeffs[idx] + &(a * b);
            }
        }
        Ok(SeriesInf {
            top_exp: top,
            coeffs,
            order,
        }
        .normalized())
    }

    /// Multiplication by an exact polynomial; only the truncation shifts.
    pub fn mul_poly(&self, p: &Poly) -> Result<SeriesInf, MathError> {
        if p.is_zero() {
            return Ok(SeriesInf::zero(self.order));
        }
        let d = p.degree().unwrap() as i64;
        let order = self.order - d;
        if order < 1 {
            return Err(MathError::InsufficientOrder {
                have: self.order,
                need: d + 1,
            });
        }
        let top = (self.top_exp + d).max(-order);
        let mut coeffs = vec![Scalar::zero(); (top + order + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.top_exp - i as i64;
            for k in 0..=d {
                let b = p.coeff(k as usize);
                if b.is_zero() {
                    continue;
                }
                let e = ea + k;
                if e < -order || e > top {
                    continue;
                }
                let idx = (top - e) as usize;
                coeffs[idx] = &coeffs[idx] + &(a * &b);
            }
        }
        Ok(SeriesInf {
            top_exp: top,
            coeffs,
            order,
        }
        .normalized())
    }

    /// Multiplicative inverse of a unit series.
    pub fn inv(&self) -> Result<SeriesInf, MathError> {
        if !self.is_unit() {
            return Err(MathError::DivisionByZero);
        }
        let t = self.top_exp;
        let order = self.order + 2 * t;
        if order < 1 {
            return Err(MathError::InsufficientOrder {
                have: self.order,
                need: 1 - 2 * t,
            });
        }
        let lead_inv = self.coeffs[0].inv().unwrap();
        let len = (order - t + 1) as usize; // top of inverse is -t
        let mut out: Vec<Scalar> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut acc = Scalar::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc + &(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-(&acc * &lead_inv));
        }
        SeriesInf::new(-t, out, order)
    }

    /// Substitute `u -> -u`.
    pub fn subst_neg(&self) -> SeriesInf {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = self.top_exp - i as i64;
                if e.rem_euclid(2) == 0 {
                    c.clone()
                } else {
                    -c
                }
            })
            .collect();
        SeriesInf {
            top_exp: self.top_exp,
            coeffs,
            order: self.order,
        }
        .normalized()
    }

    /// Whether the two series have identical coefficients on the range both
    /// carry, i.e. down to `-min(Na, Nb)`.
    pub fn agrees_with(&self, rhs: &SeriesInf) -> bool {
        let order = self.order.min(rhs.order);
        let top = self.top_exp.max(rhs.top_exp);
        for e in -order..=top {
            if self.coeff(e).unwrap() != rhs.coeff(e).unwrap() {
                return false;
            }
        }
        true
    }

    /// Truncate to a (smaller or equal) order.
    pub fn truncate(&self, order: i64) -> SeriesInf {
        assert!(order >= 1 && order <= self.order);
        let top = self.top_exp.max(-order);
        let mut coeffs = Vec::with_capacity((top + order + 1) as usize);
        for e in (-order..=top).rev() {
            coeffs.push(self.coeff(e).unwrap());
        }
        SeriesInf {
            top_exp: top,
            coeffs,
            order,
        }
        .normalized()
    }
}

impl fmt::Display for SeriesInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.top_exp - i as i64;
            if wrote {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*u", c)?,
                _ => write!(f, "{}*u^{}", c, e)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", -self.order - 1)
    }
}

impl fmt::Debug for SeriesInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Deserialize)]
struct SeriesInfRaw {
    top_exp: i64,
    coeffs: Vec<Scalar>,
    order: i64,
}

impl<'de> Deserialize<'de> for SeriesInf {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesInfRaw::deserialize(deserializer)?;
        SeriesInf::new(raw.top_exp, raw.coeffs, raw.order).map_err(serde::de::Error::custom)
    }
}

/// Truncated Taylor series at `u = 0`: coefficients of `u^0 ... u^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesZero {
    coeffs: Vec<Scalar>,
}

impl SeriesZero {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty());
        SeriesZero { coeffs }
    }

    /// Reinterpret a Laurent series at infinity with `top_exp <= 0` as the
    /// Taylor series of `s(1/u)` at zero.
    pub fn from_inf_substitution(s: &SeriesInf) -> Result<Self, MathError> {
        if s.top_exp() > 0 {
            return Err(MathError::InvalidParams(
                "series has positive powers of u; substitution u -> 1/u is not Taylor at 0".into(),
            ));
        }
        let order = s.order();
        let mut coeffs = Vec::with_capacity(order as usize + 1);
        for i in 0..=order {
            coeffs.push(s.coeff(-i)?);
        }
        Ok(SeriesZero { coeffs })
    }

    pub fn order(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> Result<Scalar, MathError> {
        self.coeffs
            .get(k)
            .cloned()
            .ok_or(MathError::BelowTruncation {
                index: k as i64,
                order: self.order(),
            })
    }

    /// Multiply by an exact polynomial; coefficients stay valid up to the
    /// original order.
    pub fn mul_poly(&self, p: &Poly) -> SeriesZero {
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len()];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = Scalar::zero();
            for j in 0..=k.min(p.deg().max(0) as usize) {
                let c = p.coeff(j);
                if c.is_zero() {
                    continue;
                }
                acc = acc + &(&c * &self.coeffs[k - j]);
            }
            *slot = acc;
        }
        SeriesZero { coeffs }
    }

    /// The polynomial formed by coefficients `0 ..= max_deg`.
    pub fn poly_prefix(&self, max_deg: usize) -> Poly {
        Poly::new(self.coeffs[..=max_deg.min(self.coeffs.len() - 1)].to_vec())
    }
}
