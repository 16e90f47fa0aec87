//! Dense univariate polynomials over the rational scalars.
//!
//! Coefficients are stored in ascending order of the power of `u`; the zero
//! polynomial is the empty vector. Division and gcd work over the field of
//! fractions with monic normalization after every Euclidean step, so the gcd
//! returned here is the unique *monic* gcd.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::MathError;

use super::scalar::Scalar;

/// Multiset of scalars, used to present a split monic polynomial by its roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootMultiset {
    roots: Vec<Scalar>,
}

impl RootMultiset {
    pub fn new(mut roots: Vec<Scalar>) -> Self {
        roots.sort();
        RootMultiset { roots }
    }

    pub fn empty() -> Self {
        RootMultiset { roots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Scalar] {
        &self.roots
    }

    /// All distinct sub-multisets, each as a root multiset. The full multiset
    /// and the empty one are included.
    pub fn sub_multisets(&self) -> Vec<RootMultiset> {
        // Group equal roots so duplicates are enumerated once.
        let mut groups: Vec<(Scalar, usize)> = Vec::new();
        for r in &self.roots {
            match groups.last_mut() {
                Some((v, n)) if v == r => *n += 1,
                _ => groups.push((r.clone(), 1)),
            }
        }
        let mut out = vec![Vec::new()];
        for (value, mult) in groups {
            let mut next = Vec::new();
            for chosen in &out {
                for k in 0..=mult {
                    let mut c = chosen.clone();
                    for _ in 0..k {
                        c.push(value.clone());
                    }
                    next.push(c);
                }
            }
            out = next;
        }
        out.into_iter().map(RootMultiset::new).collect()
    }
}

impl From<&[i64]> for RootMultiset {
    fn from(values: &[i64]) -> Self {
        RootMultiset::new(values.iter().map(|&v| Scalar::from_int(v)).collect())
    }
}

/// A polynomial in `u` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `u`.
    pub fn u() -> Self {
        Poly::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c * u^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// The monic polynomial with the given multiset of roots; `1` for the
    /// empty multiset.
    pub fn from_roots(roots: &RootMultiset) -> Self {
        let mut acc = Poly::one();
        for r in roots.roots() {
            acc = &acc * &Poly::new(vec![-r, Scalar::one()]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as i64 with `deg 0 = -1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, Scalar::is_one)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Multiplicity of `x` as a root (0 if not a root).
    pub fn vanishing_order(&self, x: &Scalar) -> usize {
        let mut order = 0;
        let mut current = self.clone();
        let factor = Poly::new(vec![-x, Scalar::one()]);
        while !current.is_zero() && current.eval(x).is_zero() {
            current = current.div_exact(&factor).expect("root divides");
            order += 1;
        }
        order
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Substitute `u -> -u`.
    pub fn subst_neg(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// `u^k * f(1/u)` for any `k >= deg f`; no monic normalization.
    pub fn reverse_padded(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let d = self.degree().unwrap();
        assert!(k >= d, "reverse_padded: pad below degree");
        let mut coeffs = vec![Scalar::zero(); k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k - i] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// The monic reversal `f(0)^{-1} u^{deg f} f(1/u)`.
    ///
    /// Requires `f` monic with nonzero constant term. Applying it twice gives
    /// back `f`.
    pub fn reverse(&self) -> Result<Poly, MathError> {
        if !self.is_monic() {
            return Err(MathError::NotMonic(self.to_string()));
        }
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(MathError::ZeroConstantTerm(self.to_string()));
        }
        let d = self.degree().unwrap();
        Ok(self.reverse_padded(d).scale(&c0.inv().unwrap()))
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), MathError> {
        let dlead = divisor.leading().ok_or(MathError::DivisionByZero)?;
        let dd = divisor.degree().unwrap();
        let inv = dlead.inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &inv;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = &rem[k + i] - &(c * &factor);
                    rem[k + i] = t;
                }
            }
            quot[k] = factor;
            rem.pop();
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// Monic gcd by the Euclidean algorithm, normalizing each remainder.
    ///
    /// `gcd(p, 0) = p` made monic; both inputs zero is an error.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, MathError> {
        if self.is_zero() && other.is_zero() {
            return Err(MathError::GcdUndefined);
        }
        let mut a = self.monic_or_zero();
        let mut b = other.monic_or_zero();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic_or_zero();
        }
        Ok(a)
    }

    fn monic_or_zero(&self) -> Poly {
        if self.is_zero() {
            Poly::zero()
        } else {
            self.monic()
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a, 'b> Add<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl<'a, 'b> Sub<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'b Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl<'a, 'b> Mul<&'b Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'b Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = t;
            }
        }
        Poly::new(coeffs)
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &Scalar::zero() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Scalar>::deserialize(deserializer)?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(u^2 - 1, u - 1) = u - 1
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let g = p(&[2, 4]).gcd(&Poly::zero()).unwrap();
        assert_eq!(g, Poly::new(vec![Scalar::half(), Scalar::one()]));
        assert_eq!(
            Poly::zero().gcd(&Poly::zero()),
            Err(MathError::GcdUndefined)
        );
    }

    #[test]
    fn gcd_handmade_euclidean_oracle() {
        // gcd((u-1/2)(u-1)(u-2)(u+1), (u+1/2)(u+1)(u+2)(u-1)) = (u-1)(u+1).
        // Oracle: two Euclidean steps by hand confirm the common part is
        // exactly the shared roots {1, -1}.
        let a = Poly::from_roots(&RootMultiset::new(vec![
            Scalar::half(),
            Scalar::from_int(1),
            Scalar::from_int(2),
            Scalar::from_int(-1),
        ]));
        let b = Poly::from_roots(&RootMultiset::new(vec![
            Scalar::ratio(-1, 2),
            Scalar::from_int(-1),
            Scalar::from_int(-2),
            Scalar::from_int(1),
        ]));
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_divides_both() {
        let a = p(&[6, 11, 6, 1]); // (u+1)(u+2)(u+3)
        let b = p(&[2, 3, 1]); // (u+1)(u+2)
        let g = a.gcd(&b).unwrap();
        assert!(g.divides(&a));
        assert!(g.divides(&b));
        assert_eq!(g, b);
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(Poly::from_roots(&RootMultiset::empty()), Poly::one());
        let r = RootMultiset::new(vec![Scalar::from_int(1), Scalar::from_int(-1)]);
        assert_eq!(Poly::from_roots(&r), p(&[-1, 0, 1]));
        let r = RootMultiset::new(vec![Scalar::from_int(2), Scalar::from_int(2)]);
        assert_eq!(Poly::from_roots(&r), p(&[4, -4, 1]));
    }

    #[test]
    fn reverse_examples() {
        // u - 3 -> u - 1/3
        let f = p(&[-3, 1]);
        assert_eq!(
            f.reverse().unwrap(),
            Poly::new(vec![Scalar::ratio(-1, 3), Scalar::one()])
        );
        // u^2 - 1 is palindromic up to the sign of f(0)
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.reverse().unwrap(), f);
        // u^2 - 3u + 2 -> u^2 - 3/2 u + 1/2
        let f = p(&[2, -3, 1]);
        assert_eq!(
            f.reverse().unwrap(),
            Poly::new(vec![Scalar::half(), Scalar::ratio(-3, 2), Scalar::one()])
        );
    }

    #[test]
    fn reverse_is_involutive() {
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.reverse().unwrap().reverse().unwrap(), f);
    }

    #[test]
    fn reverse_rejects_bad_input() {
        assert!(matches!(
            p(&[0, 1]).reverse(),
            Err(MathError::ZeroConstantTerm(_))
        ));
        assert!(matches!(p(&[1, 2]).reverse(), Err(MathError::NotMonic(_))));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[1, 0, -3, 4, 2]);
        let b = p(&[1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn vanishing_order_counts_multiplicity() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[1, 1]);
        assert_eq!(f.vanishing_order(&Scalar::one()), 3);
        assert_eq!(f.vanishing_order(&Scalar::from_int(-1)), 1);
        assert_eq!(f.vanishing_order(&Scalar::from_int(2)), 0);
    }
}
