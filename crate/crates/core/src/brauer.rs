//! Brauer-side computations: bubble generating functions, admissibility
//! checkers, the hat-polynomial closure, and the gcd classification of
//! cyclotomic quotients, with a brute-force oracle for cross-validation.
//!
//! The central objects are a bubble sequence `Omega = (omega_r)` and its
//! generating function `O(u) = 1 + 2*Omega(u)/(2u-1)`, where
//! `Omega(u) = sum_r omega_r u^-r`. The canonical generating function of a
//! monic polynomial `f` is
//!
//! ```text
//! O_f(u) = ((-1)^{deg f} u - 1/2) f(-u) / ((u - 1/2) f(u)).
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{MathError, Result};
use crate::exactmath::{Poly, RatFunc, RootMultiset, Scalar, SeriesInf};

/// Bubble scalars `omega_0, ..., omega_N`: the bubble with `r` dots acts by
/// `omega_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OmegaSeq {
    omega: Vec<Scalar>,
}

impl OmegaSeq {
    pub fn new(omega: Vec<Scalar>) -> Result<Self> {
        if omega.is_empty() {
            return Err(MathError::InvalidParams(
                "omega sequence needs at least omega_0".into(),
            ));
        }
        Ok(OmegaSeq { omega })
    }

    pub fn zero(order: i64) -> Self {
        OmegaSeq {
            omega: vec![Scalar::zero(); order as usize + 1],
        }
    }

    /// Largest index carried.
    pub fn order(&self) -> usize {
        self.omega.len() - 1
    }

    pub fn get(&self, r: usize) -> Scalar {
        self.omega[r].clone()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.omega
    }
}

/// A Brauer bubble generating function `O(u) in 1 + u^-1 k[[u^-1]]`, either
/// exact (a rational function) or known only as a truncated series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BrauerOO {
    pub exact: Option<RatFunc>,
    pub series: SeriesInf,
}

impl BrauerOO {
    /// From an exact rational function; its expansion must lie in
    /// `1 + u^-1 k[[u^-1]]`.
    pub fn from_ratfunc(exact: RatFunc, order: i64) -> Result<Self> {
        let ok = exact.num().deg() == exact.den().deg() && exact.num().is_monic();
        if !ok {
            return Err(MathError::InvalidParams(format!(
                "O must have constant term 1 at infinity, got {}",
                exact
            )));
        }
        let series = exact.expand(order);
        Ok(BrauerOO {
            exact: Some(exact),
            series,
        })
    }

    /// From a truncated series with constant term 1 and no positive powers.
    pub fn from_series(series: SeriesInf) -> Result<Self> {
        if series.top_exp() != 0 || !series.coeff(0)?.is_one() {
            return Err(MathError::InvalidParams(
                "O series must have constant term 1 and no positive powers of u".into(),
            ));
        }
        Ok(BrauerOO {
            exact: None,
            series,
        })
    }

    /// The constant function 1.
    pub fn one(order: i64) -> Self {
        BrauerOO {
            exact: Some(RatFunc::one()),
            series: SeriesInf::one(order),
        }
    }

    /// Whether this data equals `canonical`: exactly when an exact rational
    /// function is present, otherwise coefficientwise to order
    /// `min(eff, series order)`.
    pub fn matches(&self, canonical: &RatFunc, eff: i64) -> bool {
        match &self.exact {
            Some(r) => r == canonical,
            None => {
                let order = eff.min(self.series.order());
                canonical.expand(order).agrees_with(&self.series)
            }
        }
    }

    /// Certification order for equality claims: `None` means exact.
    pub fn cert_order(&self, requested: i64) -> Option<i64> {
        match self.exact {
            Some(_) => None,
            None => Some(requested.min(self.series.order())),
        }
    }
}

/// The canonical generating function `O_f` of a monic polynomial.
pub fn oo_of_poly(f: &Poly) -> Result<RatFunc> {
    if !f.is_monic() {
        return Err(MathError::NotMonic(f.to_string()));
    }
    let d = f.degree().unwrap();
    let sign = if d % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    // ((-1)^d u - 1/2) f(-u)
    let num = &Poly::new(vec![-Scalar::half(), sign]) * &f.subst_neg();
    // (u - 1/2) f(u)
    let den = &Poly::new(vec![-Scalar::half(), Scalar::one()]) * f;
    RatFunc::new(num, den)
}

/// Bubble scalars of the standard module attached to a root multiset:
///
/// ```text
/// sum_n omega_n u^-n = -u + 1/2 + (u - (-1)^{|a|}/2) prod_a (u+a)/(u-a).
/// ```
pub fn omega_of_roots(roots: &RootMultiset, order: i64) -> OmegaSeq {
    let sign = if roots.len() % 2 == 0 {
        Scalar::half()
    } else {
        -Scalar::half()
    };
    let mut num_prod = Poly::one();
    let mut den_prod = Poly::one();
    for a in roots.roots() {
        num_prod = &num_prod * &Poly::new(vec![a.clone(), Scalar::one()]);
        den_prod = &den_prod * &Poly::new(vec![-a, Scalar::one()]);
    }
    // (-u + 1/2) den + (u - sign) num, all over den
    let affine = Poly::new(vec![Scalar::half(), -Scalar::one()]);
    let shift = Poly::new(vec![-sign, Scalar::one()]);
    let num = &(&affine * &den_prod) + &(&shift * &num_prod);
    // The u^1 (and higher) coefficients must cancel identically.
    assert!(
        num.deg() <= den_prod.deg(),
        "omega_of_roots: positive powers of u survived"
    );
    let series = SeriesInf::expand(&num, &den_prod, order);
    let omega = (0..=order).map(|r| series.coeff(-r).unwrap()).collect();
    OmegaSeq { omega }
}

/// Generating function of a bubble sequence:
/// `O_Omega(u) = 2*Omega(u)/(2u-1) + 1`, with
/// `[O]_{u^-r-1} = sum_{s<=r} 2^{s-r} omega_s`.
pub fn oo_from_omega(w: &OmegaSeq) -> BrauerOO {
    let n = w.order();
    let mut coeffs = Vec::with_capacity(n + 2);
    coeffs.push(Scalar::one());
    let two = Scalar::from_int(2);
    let mut acc = Scalar::zero(); // sum_{s<=r} 2^s omega_s
    let mut pow = Scalar::one(); // 2^r
    for r in 0..=n {
        acc = acc + &(&pow * &w.omega[r]);
        coeffs.push(&acc / &pow);
        pow = &pow * &two;
    }
    let series = SeriesInf::new(0, coeffs, n as i64 + 1).expect("well-formed series");
    BrauerOO {
        exact: None,
        series,
    }
}

/// Inverse of [`oo_from_omega`]: `Omega(u) = (u - 1/2)(O(u) - 1)`.
pub fn omega_from_oo(oo: &BrauerOO) -> Result<OmegaSeq> {
    let s = &oo.series;
    let n = s.order() - 1;
    if n < 0 {
        return Err(MathError::InsufficientOrder {
            have: s.order(),
            need: 2,
        });
    }
    let mut omega = Vec::with_capacity(n as usize + 1);
    for r in 0..=n {
        let c_next = s.coeff(-r - 1)?;
        let c_here = if r == 0 { Scalar::zero() } else { s.coeff(-r)? };
        omega.push(c_next - &c_here * &Scalar::half());
    }
    Ok(OmegaSeq { omega })
}

/// Verdict of the admissibility test, with the two equivalent routes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleVerdict {
    pub pass: bool,
    /// First odd index violating the recursion, if any.
    pub first_violation: Option<usize>,
    /// Result of the equivalent check `O_Omega(u) O_Omega(-u) = 1`.
    pub grassmann_pass: bool,
    /// First exponent `k` with a nonzero `u^-k` defect in the product.
    pub grassmann_first_bad: Option<i64>,
}

/// Admissibility of a bubble sequence: the odd-index recursion
///
/// ```text
/// omega_{2r+1} = (1/2) (-omega_{2r} + sum_{n=0}^{2r} (-1)^n omega_n omega_{2r-n})
/// ```
///
/// together with the equivalent check `O_Omega(u) O_Omega(-u) = 1` to
/// truncation. The two verdicts always agree; this is asserted.
pub fn check_admissible(w: &OmegaSeq) -> AdmissibleVerdict {
    let n = w.order();
    let mut first_violation = None;
    let mut j = 1;
    while j <= n {
        let mut sum = Scalar::zero();
        for k in 0..=(j - 1) {
            let term = &w.omega[k] * &w.omega[j - 1 - k];
            sum = if k % 2 == 0 { sum + term } else { sum - term };
        }
        let expected = &(sum - &w.omega[j - 1]) * &Scalar::half();
        if w.omega[j] != expected {
            first_violation = Some(j);
            break;
        }
        j += 2;
    }

    let oo = oo_from_omega(w);
    let prod = oo
        .series
        .mul(&oo.series.subst_neg())
        .expect("top exponent 0");
    let mut grassmann_first_bad = None;
    for k in 1..=prod.order() {
        if !prod.coeff(-k).unwrap().is_zero() {
            grassmann_first_bad = Some(k);
            break;
        }
    }

    let pass = first_violation.is_none();
    let grassmann_pass = grassmann_first_bad.is_none();
    assert!(
        pass == grassmann_pass,
        "admissibility routes disagree: recursion {:?}, grassmannian {:?}",
        first_violation,
        grassmann_first_bad
    );
    AdmissibleVerdict {
        pass,
        first_violation,
        grassmann_pass,
        grassmann_first_bad,
    }
}

/// Verdict of the weak-admissibility test against a minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakVerdict {
    pub pass: bool,
    /// First shift `n` with `sum_j [m]_j omega_{n+j} != 0`.
    pub first_violation: Option<usize>,
}

/// Weak admissibility: the bubble of `x^n m(x)` vanishes for every `n`, i.e.
/// `sum_j [m]_j omega_{n+j} = 0` for all `n` with `n + deg m <= N`.
pub fn check_weak_admissible(w: &OmegaSeq, m: &Poly) -> Result<WeakVerdict> {
    let d = validate_recurrence_poly(m)?;
    let n_max = w.order().checked_sub(d).map_or_else(
        || {
            Err(MathError::InsufficientOrder {
                have: w.order() as i64,
                need: d as i64,
            })
        },
        Ok,
    )?;
    let mut first_violation = None;
    for n in 0..=n_max {
        let mut acc = Scalar::zero();
        for j in 0..=d {
            acc = acc + &(&m.coeff(j) * &w.omega[n + j]);
        }
        if !acc.is_zero() {
            first_violation = Some(n);
            break;
        }
    }
    Ok(WeakVerdict {
        pass: first_violation.is_none(),
        first_violation,
    })
}

fn validate_recurrence_poly(m: &Poly) -> Result<usize> {
    if !m.is_monic() {
        return Err(MathError::NotMonic(m.to_string()));
    }
    let d = m.degree().unwrap();
    if d == 0 {
        return Err(MathError::DegreeZero);
    }
    Ok(d)
}

/// The numerator form of weak admissibility: the polynomial part of
/// `m(u) * sum_r omega_r u^{-r-1}`, plus whether the remaining tail vanishes
/// to truncation. The tail verdict agrees with [`check_weak_admissible`].
pub fn brew_form(w: &OmegaSeq, m: &Poly) -> Result<(Poly, bool)> {
    let d = validate_recurrence_poly(m)?;
    let n = w.order() as i64;
    if n < d as i64 {
        return Err(MathError::InsufficientOrder {
            have: n,
            need: d as i64,
        });
    }
    let bubble = SeriesInf::new(-1, w.omega.clone(), n + 1)?;
    let prod = bubble.mul_poly(m)?;
    let numerator = prod.poly_part();
    let mut tail_ok = true;
    for k in 1..=prod.order() {
        if !prod.coeff(-k).unwrap().is_zero() {
            tail_ok = false;
            break;
        }
    }
    Ok((numerator, tail_ok))
}

/// Extend even low-index bubbles to a full sequence: odd indices below
/// `deg m` come from the odd-index recursion, indices at or above `deg m`
/// from the linear recurrence with `m`'s coefficients. The returned flag
/// reports whether the completed sequence satisfies the odd-index recursion
/// at every index up to the truncation.
pub fn extend_omega(m: &Poly, evens: &[Scalar], order: i64) -> Result<(OmegaSeq, bool)> {
    let d = validate_recurrence_poly(m)?;
    let expected = (d + 1) / 2;
    if evens.len() != expected {
        return Err(MathError::InvalidParams(format!(
            "need exactly {} even bubble values below degree {}, got {}",
            expected,
            d,
            evens.len()
        )));
    }
    let n = order as usize;
    let mut omega: Vec<Scalar> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let value = if i < d && i % 2 == 0 {
            evens[i / 2].clone()
        } else if i < d {
            // odd-index recursion from the lower entries
            let mut sum = Scalar::zero();
            for k in 0..=(i - 1) {
                let term = &omega[k] * &omega[i - 1 - k];
                sum = if k % 2 == 0 { sum + term } else { sum - term };
            }
            &(sum - &omega[i - 1]) * &Scalar::half()
        } else {
            let mut acc = Scalar::zero();
            for j in 0..d {
                acc = acc + &(&m.coeff(j) * &omega[i - d + j]);
            }
            -acc
        };
        omega.push(value);
    }
    let seq = OmegaSeq { omega };
    let consistent = {
        let mut ok = true;
        let mut j = 1;
        while j <= n {
            let mut sum = Scalar::zero();
            for k in 0..=(j - 1) {
                let term = &seq.omega[k] * &seq.omega[j - 1 - k];
                sum = if k % 2 == 0 { sum + term } else { sum - term };
            }
            let expected = &(sum - &seq.omega[j - 1]) * &Scalar::half();
            if seq.omega[j] != expected {
                ok = false;
                break;
            }
            j += 2;
        }
        ok
    };
    Ok((seq, consistent))
}

/// The hat-polynomial closure: the polynomial part of
/// `(-u - 1/2) g(-u) O(-u)`, of degree `deg g + 1`.
///
/// With exact `O` the product must be a polynomial on the nose; with a
/// truncated series the `u^-1 ... u^-tail_order` coefficients must vanish.
/// A nonvanishing tail means the bubble data is inconsistent (or the
/// category is zero) and is reported as an error.
pub fn hat_poly(g: &Poly, oo: &BrauerOO, tail_order: i64) -> Result<Poly> {
    if g.is_zero() {
        return Err(MathError::DegreeZero);
    }
    let d = g.degree().unwrap() as i64;
    // (-u - 1/2) g(-u)
    let prefix = &Poly::new(vec![-Scalar::half(), -Scalar::one()]) * &g.subst_neg();
    if let Some(exact) = &oo.exact {
        let hat = &RatFunc::from_poly(prefix) * &exact.subst_neg();
        return match hat.as_poly() {
            Some(p) => {
                debug_assert_eq!(p.deg(), d + 1);
                Ok(p.clone())
            }
            None => Err(MathError::NonPolynomialTail(format!("tail {}", hat))),
        };
    }
    let need = d + 1 + tail_order;
    if oo.series.order() < need {
        return Err(MathError::InsufficientOrder {
            have: oo.series.order(),
            need,
        });
    }
    let prod = oo.series.subst_neg().mul_poly(&prefix)?;
    for k in 1..=tail_order.min(prod.order()) {
        let c = prod.coeff(-k)?;
        if !c.is_zero() {
            return Err(MathError::NonPolynomialTail(format!(
                "coefficient of u^-{} is {}",
                k, c
            )));
        }
    }
    let hat = prod.poly_part();
    debug_assert_eq!(hat.deg(), d + 1);
    Ok(hat)
}

/// Which branch of the minimal-polynomial formula applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BrauerBranch {
    /// `gcd((u-1/2)p, p_hat)` had odd degree: divide `gcd(p, p_hat)` by `u`.
    #[serde(rename = "Q-odd-divide-by-u")]
    QOddDivideByU,
    #[serde(rename = "Q-even-or-default")]
    QEvenOrDefault,
}

/// Full verdict record for a cyclotomic Brauer input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BrauerClassification {
    pub nonzero: bool,
    pub m: Option<Poly>,
    pub p_hat: Option<Poly>,
    pub q_poly: Option<Poly>,
    pub branch: Option<BrauerBranch>,
    pub oo_canonical: Option<RatFunc>,
    /// Order to which series equalities were certified; `None` means exact.
    pub cert_order: Option<i64>,
    pub diagnostics: Vec<String>,
}

impl BrauerClassification {
    fn zero(cert_order: Option<i64>, diagnostics: Vec<String>) -> Self {
        BrauerClassification {
            nonzero: false,
            m: None,
            p_hat: None,
            q_poly: None,
            branch: None,
            oo_canonical: None,
            cert_order,
            diagnostics,
        }
    }
}

/// Classify a cyclotomic Brauer input `(p, O)`.
///
/// Checks `O(u)O(-u) = 1` first (zero category on failure), computes the hat
/// polynomial, then
///
/// ```text
/// Q = gcd((u - 1/2) p, p_hat),
/// m = gcd(p, p_hat) / u   if deg Q is odd,
/// m = gcd(p, p_hat)       otherwise,
/// ```
///
/// and declares the category nonzero iff `deg m >= 1` and `O = O_m`.
pub fn classify_brauer(p: &Poly, oo: &BrauerOO, order: i64) -> Result<BrauerClassification> {
    if !p.is_monic() {
        return Err(MathError::NotMonic(p.to_string()));
    }
    let d = p.degree().unwrap() as i64;
    if d < 1 {
        return Err(MathError::DegreeZero);
    }

    let cert_order = oo.cert_order(order);
    let lilac_ok = match &oo.exact {
        Some(r) => (r * &r.subst_neg()).is_one(),
        None => {
            let eff = cert_order.unwrap();
            let s = oo.series.truncate(eff);
            let prod = s.mul(&s.subst_neg()).expect("top exponent 0");
            prod.agrees_with(&SeriesInf::one(eff))
        }
    };
    if !lilac_ok {
        return Ok(BrauerClassification::zero(
            cert_order,
            vec!["O(u)O(-u) != 1: zero category".into()],
        ));
    }

    let tail_order = match cert_order {
        None => 1,
        Some(eff) => {
            let tail = eff - (d + 1);
            if tail < 1 {
                return Err(MathError::InsufficientOrder {
                    have: eff,
                    need: d + 2,
                });
            }
            tail
        }
    };
    let p_hat = match hat_poly(p, oo, tail_order) {
        Ok(h) => h,
        Err(MathError::NonPolynomialTail(detail)) => {
            return Ok(BrauerClassification::zero(
                cert_order,
                vec![format!("hat polynomial check failed: {}", detail)],
            ));
        }
        Err(e) => return Err(e),
    };

    let u_minus_half = Poly::new(vec![-Scalar::half(), Scalar::one()]);
    let q_poly = (&u_minus_half * p).gcd(&p_hat)?;
    let g0 = p.gcd(&p_hat)?;
    let mut diagnostics = Vec::new();
    let (m, branch) = if q_poly.degree().unwrap() % 2 == 1 {
        match g0.div_exact(&Poly::u()) {
            Some(m) => (m, BrauerBranch::QOddDivideByU),
            None => {
                diagnostics.push("deg Q odd but u does not divide gcd(p, p_hat)".into());
                return Ok(BrauerClassification {
                    nonzero: false,
                    m: None,
                    p_hat: Some(p_hat),
                    q_poly: Some(q_poly),
                    branch: Some(BrauerBranch::QOddDivideByU),
                    oo_canonical: None,
                    cert_order,
                    diagnostics,
                });
            }
        }
    } else {
        (g0, BrauerBranch::QEvenOrDefault)
    };

    let oo_canonical = oo_of_poly(&m.monic())?;
    let eff = cert_order.unwrap_or(order);
    let nonzero = m.deg() >= 1 && oo.matches(&oo_canonical, eff);
    if m.deg() < 1 {
        diagnostics.push("gcd pipeline produced a constant: zero category".into());
    } else if !nonzero {
        diagnostics.push("O does not match O_m: zero category".into());
    }
    Ok(BrauerClassification {
        nonzero,
        m: Some(m),
        p_hat: Some(p_hat),
        q_poly: Some(q_poly),
        branch: Some(branch),
        oo_canonical: Some(oo_canonical),
        cert_order,
        diagnostics,
    })
}

/// Brute-force oracle: enumerate every divisor of `p` given by a sub-multiset
/// of its roots, keep those with `O = O_f`, and return the unique
/// maximal-degree survivor (`None` for the zero category). Every survivor
/// must divide the maximal one.
pub fn oracle_classify(
    roots: &RootMultiset,
    oo: &BrauerOO,
    order: i64,
) -> Result<Option<Poly>> {
    let mut survivors: Vec<Poly> = Vec::new();
    for sub in roots.sub_multisets() {
        if sub.is_empty() {
            continue;
        }
        let f = Poly::from_roots(&sub);
        if oo.matches(&oo_of_poly(&f)?, order) {
            survivors.push(f);
        }
    }
    if survivors.is_empty() {
        return Ok(None);
    }
    survivors.sort_by_key(|f| f.deg());
    survivors.dedup();
    let max = survivors.last().unwrap().clone();
    for f in &survivors {
        if f.deg() == max.deg() && *f != max {
            return Err(MathError::TheoryViolation(format!(
                "two maximal matches: {} and {}",
                f, max
            )));
        }
        if !f.divides(&max) {
            return Err(MathError::TheoryViolation(format!(
                "match {} does not divide the maximal match {}",
                f, max
            )));
        }
    }
    Ok(Some(max))
}

/// Result of the algebra-level minimal polynomial computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraMinPoly {
    pub classification: BrauerClassification,
    /// Whether the minimal polynomial equals `p` itself.
    pub goodman: bool,
}

/// The minimal polynomial `f_{p,Omega}` of the dot on the two-strand algebra:
/// it coincides with the category-level classification applied to
/// `O_Omega`, with a flag for the special case `f_{p,Omega} = p`.
pub fn algebra_min_poly(p: &Poly, w: &OmegaSeq, order: i64) -> Result<AlgebraMinPoly> {
    let oo = oo_from_omega(w);
    let classification = classify_brauer(p, &oo, order)?;
    let goodman = classification.nonzero && classification.m.as_ref() == Some(p);
    Ok(AlgebraMinPoly {
        classification,
        goodman,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Poly {
        Poly::from_ints(v)
    }

    fn roots_of(v: &[i64]) -> RootMultiset {
        RootMultiset::from(v)
    }

    fn s(v: &str) -> Scalar {
        v.parse().unwrap()
    }

    #[test]
    fn oo_of_poly_examples() {
        // f = u^2: even degree and f(-u) = f(u) cancel exactly
        assert!(oo_of_poly(&ints(&[0, 0, 1])).unwrap().is_one());
        // f = u: (u + 1/2)/(u - 1/2)
        let r = oo_of_poly(&ints(&[0, 1])).unwrap();
        let expected = RatFunc::new(
            Poly::new(vec![s("1/2"), s("1")]),
            Poly::new(vec![s("-1/2"), s("1")]),
        )
        .unwrap();
        assert_eq!(r, expected);
        // f = u - 1: (u + 1/2)(u + 1)/((u - 1/2)(u - 1))
        let r = oo_of_poly(&ints(&[-1, 1])).unwrap();
        let num = &Poly::new(vec![s("1/2"), s("1")]) * &ints(&[1, 1]);
        let den = &Poly::new(vec![s("-1/2"), s("1")]) * &ints(&[-1, 1]);
        assert_eq!(r, RatFunc::new(num, den).unwrap());
    }

    #[test]
    fn oo_grassmannian_is_exact_identity() {
        for f in [ints(&[-1, 1]), ints(&[2, -3, 1]), ints(&[0, 0, 5, 1])] {
            let r = oo_of_poly(&f).unwrap();
            assert!((&r * &r.subst_neg()).is_one(), "failed for {}", f);
        }
    }

    #[test]
    fn omega_of_roots_examples() {
        // empty multiset: everything cancels
        let w = omega_of_roots(&RootMultiset::empty(), 8);
        assert!(w.values().iter().all(Scalar::is_zero));
        // single root 0: omega_0 = 1, rest 0
        let w = omega_of_roots(&roots_of(&[0]), 8);
        assert_eq!(w.get(0), Scalar::one());
        assert!(w.values()[1..].iter().all(Scalar::is_zero));
        // single root a: omega_n = (2a+1) a^n
        let a = Scalar::from_int(2);
        let w = omega_of_roots(&roots_of(&[2]), 8);
        for n in 0..=8u32 {
            let expected = &(&(&a * &Scalar::from_int(2)) + &Scalar::one()) * &a.pow(n);
            assert_eq!(w.get(n as usize), expected);
        }
    }

    #[test]
    fn oo_from_omega_anchors() {
        // Omega = 0 -> O = 1
        let oo = oo_from_omega(&OmegaSeq::zero(6));
        assert!(oo.series.agrees_with(&SeriesInf::one(6)));
        // coefficient anchors [O]_{u^-1} = omega_0, [O]_{u^-2} = omega_1 + omega_0/2
        let w = OmegaSeq::new(vec![s("3"), s("5"), s("7"), s("11")]).unwrap();
        let oo = oo_from_omega(&w);
        assert_eq!(oo.series.coeff(-1).unwrap(), s("3"));
        assert_eq!(oo.series.coeff(-2).unwrap(), &s("5") + &(&s("3") * &s("1/2")));
    }

    #[test]
    fn omega_roundtrip() {
        let w = OmegaSeq::new(vec![s("1"), s("-2"), s("1/3"), s("0"), s("7/2")]).unwrap();
        let back = omega_from_oo(&oo_from_omega(&w)).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn admissibility_examples() {
        // canonical sequences pass
        let w = omega_of_roots(&roots_of(&[2]), 16);
        assert!(check_admissible(&w).pass);
        // omega_0 = 1, omega_1 = 5 fails at the first odd index
        let mut vals = vec![Scalar::zero(); 9];
        vals[0] = s("1");
        vals[1] = s("5");
        let v = check_admissible(&OmegaSeq::new(vals).unwrap());
        assert!(!v.pass);
        assert_eq!(v.first_violation, Some(1));
        assert_eq!(v.grassmann_first_bad, Some(2));
        // Omega = 0 passes
        assert!(check_admissible(&OmegaSeq::zero(8)).pass);
    }

    #[test]
    fn weak_admissibility_examples() {
        // canonical sequence of {a} against m = u - a
        let w = omega_of_roots(&roots_of(&[2]), 16);
        assert!(check_weak_admissible(&w, &ints(&[-2, 1])).unwrap().pass);
        // omega = (1, 0, 0, ...) against m = u
        let mut vals = vec![Scalar::zero(); 17];
        vals[0] = s("1");
        let w1 = OmegaSeq::new(vals).unwrap();
        assert!(check_weak_admissible(&w1, &ints(&[0, 1])).unwrap().pass);
        // all omega_n = 3 against m = u - 2 fails at n = 0
        let w3 = omega_of_roots(&roots_of(&[1]), 16);
        assert!(w3.values().iter().all(|v| v == &s("3")));
        let v = check_weak_admissible(&w3, &ints(&[-2, 1])).unwrap();
        assert!(!v.pass);
        assert_eq!(v.first_violation, Some(0));
        // degree-0 m is rejected
        assert!(check_weak_admissible(&w3, &Poly::one()).is_err());
    }

    #[test]
    fn brew_form_agrees_with_weak() {
        let cases = [
            (omega_of_roots(&roots_of(&[2]), 16), ints(&[-2, 1]), true),
            (omega_of_roots(&roots_of(&[1]), 16), ints(&[-2, 1]), false),
            (omega_of_roots(&roots_of(&[1, -2]), 16), ints(&[2, -3, 1]), false),
            (omega_of_roots(&roots_of(&[1, -2]), 16), ints(&[-2, 1, 1]), true),
        ];
        for (w, m, expected) in cases {
            let weak = check_weak_admissible(&w, &m).unwrap();
            let (_, tail_ok) = brew_form(&w, &m).unwrap();
            assert_eq!(weak.pass, tail_ok);
            assert_eq!(weak.pass, expected);
        }
        // numerator of the canonical single-root case: m(u) B(u) with
        // omega_n = (2a+1)a^n sums to the constant (2a+1)
        let w = omega_of_roots(&roots_of(&[2]), 16);
        let (num, ok) = brew_form(&w, &ints(&[-2, 1])).unwrap();
        assert!(ok);
        assert_eq!(num, ints(&[5]));
    }

    #[test]
    fn extend_omega_examples() {
        // m = u - 1, omega_0 = 3: constant sequence, consistent
        let (w, ok) = extend_omega(&ints(&[-1, 1]), &[s("3")], 12).unwrap();
        assert!(ok);
        assert!(w.values().iter().all(|v| v == &s("3")));
        // m = u - 1, omega_0 = 5: recurrence and recursion disagree
        let (_, ok) = extend_omega(&ints(&[-1, 1]), &[s("5")], 12).unwrap();
        assert!(!ok);
        // m = u^2, omega_0 = 0 reproduces omega_of_roots({0,0})
        let (w, ok) = extend_omega(&ints(&[0, 0, 1]), &[s("0")], 12).unwrap();
        assert!(ok);
        assert_eq!(w, omega_of_roots(&roots_of(&[0, 0]), 12));
    }

    #[test]
    fn hat_poly_examples() {
        // g = u, O = 1 -> u^2 + u/2
        let hat = hat_poly(&ints(&[0, 1]), &BrauerOO::one(32), 8).unwrap();
        assert_eq!(hat, Poly::new(vec![s("0"), s("1/2"), s("1")]));
        // g = u - a, O = O_{u-a} -> (u - 1/2)(u - a)
        let g = ints(&[-2, 1]);
        let oo = BrauerOO::from_ratfunc(oo_of_poly(&g).unwrap(), 32).unwrap();
        let hat = hat_poly(&g, &oo, 8).unwrap();
        assert_eq!(hat, &Poly::new(vec![s("-1/2"), s("1")]) * &g);
        // g = u against O_{u-1} leaves a non-polynomial tail
        let oo = BrauerOO::from_ratfunc(oo_of_poly(&ints(&[-1, 1])).unwrap(), 32).unwrap();
        assert!(matches!(
            hat_poly(&ints(&[0, 1]), &oo, 8),
            Err(MathError::NonPolynomialTail(_))
        ));
        // same failure through the series route
        let oo_series = BrauerOO::from_series(oo.series.clone()).unwrap();
        assert!(matches!(
            hat_poly(&ints(&[0, 1]), &oo_series, 8),
            Err(MathError::NonPolynomialTail(_))
        ));
    }

    #[test]
    fn hat_poly_factorization_identity() {
        // hat(m, O_m) = ((-1)^{1 + deg m} u - 1/2) m(u)
        for m in [
            ints(&[-2, 1]),
            ints(&[-1, 0, 1]),
            ints(&[6, -5, 1]),
            ints(&[0, -1, 0, 1]),
        ] {
            let oo = BrauerOO::from_ratfunc(oo_of_poly(&m).unwrap(), 32).unwrap();
            let hat = hat_poly(&m, &oo, 8).unwrap();
            let d = m.degree().unwrap();
            let sign = if (d + 1) % 2 == 0 { s("1") } else { s("-1") };
            let expected = &Poly::new(vec![s("-1/2"), sign]) * &m;
            assert_eq!(hat, expected, "failed for m = {}", m);
        }
    }

    #[test]
    fn classify_worked_example() {
        // p = (u-1)(u-2)(u+1), O = 1 -> m = u^2 - 1 with deg Q = 2
        let p = Poly::from_roots(&roots_of(&[1, 2, -1]));
        let c = classify_brauer(&p, &BrauerOO::one(64), 64).unwrap();
        assert!(c.nonzero);
        assert_eq!(c.m, Some(ints(&[-1, 0, 1])));
        assert_eq!(c.q_poly, Some(ints(&[-1, 0, 1])));
        assert_eq!(c.branch, Some(BrauerBranch::QEvenOrDefault));
        assert_eq!(
            c.p_hat,
            Some(&(&Poly::new(vec![s("1/2"), s("1")]) * &ints(&[2, 3, 1])) * &ints(&[-1, 1]))
        );
        assert_eq!(c.cert_order, None);
    }

    #[test]
    fn classify_p_equals_m() {
        let p = ints(&[-2, 1]);
        let oo = BrauerOO::from_ratfunc(oo_of_poly(&p).unwrap(), 64).unwrap();
        let c = classify_brauer(&p, &oo, 64).unwrap();
        assert!(c.nonzero);
        assert_eq!(c.m, Some(p));
    }

    #[test]
    fn classify_zero_category() {
        // p = u - 1 with O = 1: gcd(p, p_hat) = 1
        let c = classify_brauer(&ints(&[-1, 1]), &BrauerOO::one(64), 64).unwrap();
        assert!(!c.nonzero);
        assert_eq!(c.m, Some(Poly::one()));
    }

    #[test]
    fn classify_rejects_bad_inputs() {
        assert!(classify_brauer(&ints(&[1, 2]), &BrauerOO::one(64), 64).is_err());
        assert!(classify_brauer(&Poly::one(), &BrauerOO::one(64), 64).is_err());
    }

    #[test]
    fn classify_detects_lilac_violation() {
        // a series with omega_0 = 1, omega_1 = 5 is not admissible
        let mut vals = vec![Scalar::zero(); 33];
        vals[0] = s("1");
        vals[1] = s("5");
        let oo = oo_from_omega(&OmegaSeq::new(vals).unwrap());
        let c = classify_brauer(&ints(&[-1, 1]), &oo, 16).unwrap();
        assert!(!c.nonzero);
        assert!(c.m.is_none());
        assert!(c.diagnostics[0].contains("zero category"));
    }

    #[test]
    fn oracle_examples() {
        // roots {1, -1, 2}, O = 1 -> u^2 - 1
        let m = oracle_classify(&roots_of(&[1, -1, 2]), &BrauerOO::one(64), 64).unwrap();
        assert_eq!(m, Some(ints(&[-1, 0, 1])));
        // roots {a}, O = O_{u-a} -> u - a
        let f = ints(&[-2, 1]);
        let oo = BrauerOO::from_ratfunc(oo_of_poly(&f).unwrap(), 64).unwrap();
        assert_eq!(oracle_classify(&roots_of(&[2]), &oo, 64).unwrap(), Some(f));
        // roots {1}, O = 1 -> zero
        assert_eq!(
            oracle_classify(&roots_of(&[1]), &BrauerOO::one(64), 64).unwrap(),
            None
        );
    }

    #[test]
    fn algebra_min_poly_examples() {
        // p = u - a with the canonical bubbles: goodman case
        let p = ints(&[-2, 1]);
        let w = omega_of_roots(&roots_of(&[2]), 64);
        let r = algebra_min_poly(&p, &w, 64).unwrap();
        assert!(r.classification.nonzero);
        assert_eq!(r.classification.m, Some(p));
        assert!(r.goodman);
        // p = (u-1)(u-2)(u+1) with Omega = 0 (O_Omega = 1): m = u^2 - 1, not goodman
        let p = Poly::from_roots(&roots_of(&[1, 2, -1]));
        let r = algebra_min_poly(&p, &OmegaSeq::zero(64), 64).unwrap();
        assert!(r.classification.nonzero);
        assert_eq!(r.classification.m, Some(ints(&[-1, 0, 1])));
        assert!(!r.goodman);
        // p = u - 1 with Omega = 0: zero
        let r = algebra_min_poly(&ints(&[-1, 1]), &OmegaSeq::zero(64), 64).unwrap();
        assert!(!r.classification.nonzero);
        assert!(!r.goodman);
    }

    #[test]
    fn classification_agrees_with_oracle_on_small_sweep() {
        let pool = [0i64, 1, -1, 2];
        let mut root_sets = Vec::new();
        for a in 0..pool.len() {
            for b in a..pool.len() {
                root_sets.push(roots_of(&[pool[a], pool[b]]));
            }
        }
        for roots in &root_sets {
            let p = Poly::from_roots(roots);
            for sub in roots.sub_multisets() {
                let f = Poly::from_roots(&sub);
                let oo = BrauerOO::from_ratfunc(oo_of_poly(&f).unwrap(), 32).unwrap();
                let c = classify_brauer(&p, &oo, 32).unwrap();
                let o = oracle_classify(roots, &oo, 32).unwrap();
                assert_eq!(c.nonzero, o.is_some());
                if let Some(om) = o {
                    assert_eq!(c.m, Some(om));
                }
            }
        }
    }
}
