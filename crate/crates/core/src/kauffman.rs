//! Kauffman-side computations with parameters `(q, t)` and `z = q - q^{-1}`:
//! the two bubble generating functions, the sneeze/epsilon machinery, the
//! hat-polynomial closure, and the four-branch gcd classification of
//! cyclotomic quotients, with a brute-force oracle.
//!
//! For monic `f` with `f(0) != 0` the right generating function is
//!
//! ```text
//! rOO_f(u) = (t u^2 - z f(0) u^{deg f mod 2} - t) / (u^2 - z u - 1) * fv(u)/f(u),
//! ```
//!
//! where `fv` is the monic reversal of `f`. When `f` meets the sneeze
//! conditions this factors as
//! `t (u - q^{e1})(u + q^{e2}) / ((u - q)(u + q^{-1})) * fv/f`.

use serde::{Deserialize, Serialize};

use crate::error::{MathError, Result};
use crate::exactmath::{Poly, RatFunc, RootMultiset, Scalar, SeriesInf, SeriesZero};

/// Parameters of the affine Kauffman category. `z` is always derived from a
/// rational `q`; inputs supplying `z` alone are rejected upstream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KauffmanParams {
    pub q: Scalar,
    pub t: Scalar,
    pub z: Scalar,
}

impl KauffmanParams {
    pub fn new(q: Scalar, t: Scalar) -> Result<Self> {
        if q.is_zero() || q.is_one() || q == -Scalar::one() {
            return Err(MathError::InvalidParams(format!(
                "q must avoid 0 and +-1, got {}",
                q
            )));
        }
        if t.is_zero() {
            return Err(MathError::InvalidParams("t must be nonzero".into()));
        }
        let z = &q - &q.inv()?;
        Ok(KauffmanParams { q, t, z })
    }

    pub fn from_ints(q: i64, t: i64) -> Self {
        KauffmanParams::new(Scalar::from_int(q), Scalar::from_int(t)).unwrap()
    }

    /// `q^e` for `e` in `{-1, 0, 1}`.
    fn q_pow(&self, e: i32) -> Scalar {
        match e {
            0 => Scalar::one(),
            1 => self.q.clone(),
            -1 => self.q.inv().unwrap(),
            _ => unreachable!("epsilon exponents stay in -1..=1"),
        }
    }

    /// `u^2 - z u - 1 = (u - q)(u + q^{-1})`.
    pub fn quad_minus(&self) -> Poly {
        Poly::new(vec![-Scalar::one(), -&self.z, Scalar::one()])
    }

    /// `u^2 + z u - 1 = (u + q)(u - q^{-1})`.
    pub fn quad_plus(&self) -> Poly {
        Poly::new(vec![-Scalar::one(), self.z.clone(), Scalar::one()])
    }

    /// The forced value of the undotted bubble, `(t - t^{-1})/z + 1`.
    pub fn omega_zero(&self) -> Scalar {
        &(&(&self.t - &self.t.inv().unwrap()) / &self.z) + &Scalar::one()
    }
}

#[derive(Deserialize)]
struct KauffmanParamsRaw {
    q: Scalar,
    t: Scalar,
    #[serde(default)]
    z: Option<Scalar>,
}

impl<'de> Deserialize<'de> for KauffmanParams {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = KauffmanParamsRaw::deserialize(deserializer)?;
        let params = KauffmanParams::new(raw.q, raw.t).map_err(serde::de::Error::custom)?;
        if let Some(z) = raw.z {
            if z != params.z {
                return Err(serde::de::Error::custom(format!(
                    "supplied z = {} does not equal q - q^-1 = {}",
                    z, params.z
                )));
            }
        }
        Ok(params)
    }
}

/// The sign pair `(e1, e2)` encoding which roots of `u^2 - zu - 1` and its
/// mirror enter the factored generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonPair {
    pub eps1: i32,
    pub eps2: i32,
}

impl EpsilonPair {
    fn new(eps1: i32, eps2: i32) -> Self {
        EpsilonPair { eps1, eps2 }
    }
}

/// Resolve the epsilon pair of `f`: the unique `(e1, e2)` with
/// `f(0) = e1 * q^{(e1+e2)/2} * t`, cross-checked against the degree parity
/// `deg f = (e1+e2)/2 + 1 (mod 2)`. `None` means `f` fails the sneeze
/// conditions.
pub fn sneeze_check(f: &Poly, params: &KauffmanParams) -> Result<Option<EpsilonPair>> {
    if !f.is_monic() {
        return Err(MathError::NotMonic(f.to_string()));
    }
    let f0 = f.constant_term();
    if f0.is_zero() {
        return Err(MathError::ZeroConstantTerm(f.to_string()));
    }
    let d = f.degree().unwrap() as i32;
    for (e1, e2) in [(1, 1), (-1, -1), (1, -1), (-1, 1)] {
        let value = {
            let sign = if e1 == 1 { Scalar::one() } else { -Scalar::one() };
            &(&sign * &params.q_pow((e1 + e2) / 2)) * &params.t
        };
        if f0 == value {
            let parity_ok = d.rem_euclid(2) == ((e1 + e2) / 2 + 1).rem_euclid(2);
            return Ok(parity_ok.then(|| EpsilonPair::new(e1, e2)));
        }
    }
    Ok(None)
}

fn validate_monic_nonzero_const(f: &Poly) -> Result<(usize, Scalar)> {
    if !f.is_monic() {
        return Err(MathError::NotMonic(f.to_string()));
    }
    let f0 = f.constant_term();
    if f0.is_zero() {
        return Err(MathError::ZeroConstantTerm(f.to_string()));
    }
    Ok((f.degree().unwrap(), f0))
}

/// The right bubble generating function `rOO_f` as an exact rational
/// function. When `f` passes the sneeze check, the factored form is computed
/// as well and asserted equal.
pub fn roo_of_poly(f: &Poly, params: &KauffmanParams) -> Result<RatFunc> {
    let (d, f0) = validate_monic_nonzero_const(f)?;
    let t = &params.t;
    let zf0 = &params.z * &f0;
    let prefix_num = if d % 2 == 0 {
        Poly::new(vec![-&zf0 - t, Scalar::zero(), t.clone()])
    } else {
        Poly::new(vec![-t, -zf0, t.clone()])
    };
    let fv = f.reverse()?;
    let case_form = &RatFunc::new(prefix_num, params.quad_minus())?
        * &RatFunc::new(fv.clone(), f.clone())?;
    if let Some(eps) = sneeze_check(f, params)? {
        let num = &Poly::new(vec![-params.q_pow(eps.eps1), Scalar::one()])
            * &Poly::new(vec![params.q_pow(eps.eps2), Scalar::one()]);
        let factored = &RatFunc::new(num.scale(t), params.quad_minus())?
            * &RatFunc::new(fv, f.clone())?;
        assert_eq!(
            case_form, factored,
            "case-split and factored forms of rOO disagree for {}",
            f
        );
    }
    Ok(case_form)
}

/// The left bubble generating function `lOO_f` as an exact rational function.
pub fn loo_of_poly(f: &Poly, params: &KauffmanParams) -> Result<RatFunc> {
    let (d, f0) = validate_monic_nonzero_const(f)?;
    let t_inv = params.t.inv()?;
    let zf0_inv = &params.z * &f0.inv()?;
    let prefix_num = if d % 2 == 0 {
        Poly::new(vec![&zf0_inv - &t_inv, Scalar::zero(), t_inv.clone()])
    } else {
        Poly::new(vec![-&t_inv, zf0_inv, t_inv.clone()])
    };
    let fv = f.reverse()?;
    let case_form = &RatFunc::new(prefix_num, params.quad_plus())?
        * &RatFunc::new(f.clone(), fv.clone())?;
    if let Some(eps) = sneeze_check(f, params)? {
        let num = &Poly::new(vec![-params.q_pow(-eps.eps1), Scalar::one()])
            * &Poly::new(vec![params.q_pow(-eps.eps2), Scalar::one()]);
        let factored = &RatFunc::new(num.scale(&t_inv), params.quad_plus())?
            * &RatFunc::new(f.clone(), fv)?;
        assert_eq!(
            case_form, factored,
            "case-split and factored forms of lOO disagree for {}",
            f
        );
    }
    Ok(case_form)
}

/// The three equivalent sneeze statements, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityVerdict {
    /// Item (2): the constant-term/parity conditions.
    pub eps: Option<EpsilonPair>,
    /// Item (1): `rOO_f(u^{-1}) = lOO_f(u)` as rational functions.
    pub inverse_substitution_ok: bool,
    /// Item (3): `rOO_f * lOO_f = 1`.
    pub product_is_one: bool,
}

impl DualityVerdict {
    /// The three items must agree as a tri-equivalence.
    pub fn consistent(&self) -> bool {
        let p = self.eps.is_some();
        self.inverse_substitution_ok == p && self.product_is_one == p
    }
}

/// Evaluate all three sneeze items for `f` as exact identities.
pub fn check_duality(f: &Poly, params: &KauffmanParams) -> Result<DualityVerdict> {
    let roo = roo_of_poly(f, params)?;
    let loo = loo_of_poly(f, params)?;
    Ok(DualityVerdict {
        eps: sneeze_check(f, params)?,
        inverse_substitution_ok: roo.subst_inv() == loo,
        product_is_one: (&roo * &loo).is_one(),
    })
}

/// The pair of Kauffman bubble generating functions. The left one is always
/// the reciprocal of the right one, as in the cyclotomic quotient
/// construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KauffmanOO {
    pub roo_exact: Option<RatFunc>,
    pub loo_exact: Option<RatFunc>,
    pub roo_series: SeriesInf,
    pub loo_series: SeriesInf,
}

impl KauffmanOO {
    pub fn from_roo_ratfunc(roo: RatFunc, order: i64, params: &KauffmanParams) -> Result<Self> {
        let ok = roo.num().deg() == roo.den().deg()
            && roo.num().leading() == Some(&params.t);
        if !ok {
            return Err(MathError::InvalidParams(format!(
                "rOO must have constant term t = {} at infinity, got {}",
                params.t, roo
            )));
        }
        let loo = roo.inv()?;
        let roo_series = roo.expand(order);
        let loo_series = loo.expand(order);
        Ok(KauffmanOO {
            roo_exact: Some(roo),
            loo_exact: Some(loo),
            roo_series,
            loo_series,
        })
    }

    pub fn from_roo_series(series: SeriesInf, params: &KauffmanParams) -> Result<Self> {
        if series.top_exp() != 0 || series.coeff(0)? != params.t {
            return Err(MathError::InvalidParams(format!(
                "rOO series must start with the constant term t = {}",
                params.t
            )));
        }
        let loo_series = series.inv()?;
        Ok(KauffmanOO {
            roo_exact: None,
            loo_exact: None,
            roo_series: series,
            loo_series,
        })
    }

    /// The canonical data of a monic polynomial.
    pub fn canonical(m: &Poly, order: i64, params: &KauffmanParams) -> Result<Self> {
        KauffmanOO::from_roo_ratfunc(roo_of_poly(m, params)?, order, params)
    }

    pub fn matches_roo(&self, canonical: &RatFunc, eff: i64) -> bool {
        match &self.roo_exact {
            Some(r) => r == canonical,
            None => {
                let order = eff.min(self.roo_series.order());
                canonical.expand(order).agrees_with(&self.roo_series)
            }
        }
    }

    pub fn cert_order(&self, requested: i64) -> Option<i64> {
        match self.roo_exact {
            Some(_) => None,
            None => Some(requested.min(self.roo_series.order())),
        }
    }
}

/// Bubble scalars indexed by integers in `[-N, N]`; the dot is invertible so
/// negative dot counts occur.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KOmegaSeq {
    /// `omega_0, omega_1, ..., omega_N`.
    nonneg: Vec<Scalar>,
    /// `omega_0, omega_-1, ..., omega_-N`.
    nonpos: Vec<Scalar>,
}

impl KOmegaSeq {
    pub fn new(nonneg: Vec<Scalar>, nonpos: Vec<Scalar>, params: &KauffmanParams) -> Result<Self> {
        if nonneg.is_empty() || nonpos.is_empty() || nonneg.len() != nonpos.len() {
            return Err(MathError::InvalidParams(
                "need matching omega ranges for r >= 0 and r <= 0".into(),
            ));
        }
        if nonneg[0] != nonpos[0] {
            return Err(MathError::InvalidParams(
                "omega_0 differs between the two ranges".into(),
            ));
        }
        let expected = params.omega_zero();
        if nonneg[0] != expected {
            return Err(MathError::InvalidParams(format!(
                "omega_0 must equal (t - t^-1)/z + 1 = {}, got {}",
                expected, nonneg[0]
            )));
        }
        Ok(KOmegaSeq { nonneg, nonpos })
    }

    pub fn order(&self) -> i64 {
        self.nonneg.len() as i64 - 1
    }

    pub fn get(&self, r: i64) -> Scalar {
        if r >= 0 {
            self.nonneg[r as usize].clone()
        } else {
            self.nonpos[(-r) as usize].clone()
        }
    }
}

/// Generating functions built from a bubble sequence, with the admissibility
/// verdict `rOO * lOO = 1` (to truncation) reported rather than assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct KOmegaOO {
    pub roo_series: SeriesInf,
    pub loo_series: SeriesInf,
    pub admissible: bool,
}

impl KOmegaOO {
    /// Repackage as classification input; the left series is replaced by the
    /// reciprocal of the right one.
    pub fn into_oo(self, params: &KauffmanParams) -> Result<KauffmanOO> {
        KauffmanOO::from_roo_series(self.roo_series, params)
    }
}

/// Assemble `rOO` from `Omega^{>=0}` and `lOO` from `Omega^{<=0}`:
///
/// ```text
/// rOO(u) = ((t^-1 - z)u^2 - t^-1)/(u^2 - zu - 1) + z(u^2-1)/(u^2 - zu - 1) * sum_{r>=0} omega_r u^-r,
/// lOO(u) = ((t + z)u^2 - t)/(u^2 + zu - 1)      - z(u^2-1)/(u^2 + zu - 1) * sum_{r<=0} omega_r u^r.
/// ```
pub fn roo_from_komega(w: &KOmegaSeq, params: &KauffmanParams) -> Result<KOmegaOO> {
    let n = w.order();
    let t_inv = params.t.inv()?;
    let z = &params.z;
    let omega_pos = SeriesInf::new(0, w.nonneg.clone(), n)?;
    let omega_neg = SeriesInf::new(0, w.nonpos.clone(), n)?;
    let z_quad = Poly::new(vec![-z, Scalar::zero(), z.clone()]);

    let roo_prefix = Poly::new(vec![-&t_inv, Scalar::zero(), &t_inv - z]);
    let roo_series = SeriesInf::expand(&roo_prefix, &params.quad_minus(), n).add(
        &SeriesInf::expand(&z_quad, &params.quad_minus(), n).mul(&omega_pos)?,
    );

    let loo_prefix = Poly::new(vec![-&params.t, Scalar::zero(), &params.t + z]);
    let loo_series = SeriesInf::expand(&loo_prefix, &params.quad_plus(), n).sub(
        &SeriesInf::expand(&z_quad, &params.quad_plus(), n).mul(&omega_neg)?,
    );

    let admissible = roo_series
        .mul(&loo_series)?
        .agrees_with(&SeriesInf::one(n));
    Ok(KOmegaOO {
        roo_series,
        loo_series,
        admissible,
    })
}

/// The Kauffman hat closure: the degree-`deg p + 2` polynomial part of
/// `(1 - zu - u^2) p(u^{-1}) u^{deg p} rOO(u^{-1})`, computed as a Taylor
/// series at 0. Coefficients above degree `deg p + 2` must vanish.
pub fn hat_poly_k(
    p: &Poly,
    oo: &KauffmanOO,
    params: &KauffmanParams,
    tail_order: i64,
) -> Result<Poly> {
    let (d, _) = validate_monic_nonzero_const(p)?;
    let d = d as i64;
    // (1 - zu - u^2) * u^d p(1/u)
    let prefix = &Poly::new(vec![Scalar::one(), -&params.z, -Scalar::one()])
        * &p.reverse_padded(d as usize);
    if let Some(roo) = &oo.roo_exact {
        let hat = &RatFunc::from_poly(prefix) * &roo.subst_inv();
        return match hat.as_poly() {
            Some(h) => Ok(h.clone()),
            None => Err(MathError::NonPolynomialTail(format!("tail {}", hat))),
        };
    }
    let need = d + 2 + tail_order;
    if oo.roo_series.order() < need {
        return Err(MathError::InsufficientOrder {
            have: oo.roo_series.order(),
            need,
        });
    }
    let taylor = SeriesZero::from_inf_substitution(&oo.roo_series)?;
    let prod = taylor.mul_poly(&prefix);
    for k in (d + 3)..=(d + 2 + tail_order).min(prod.order()) {
        let c = prod.coeff(k as usize)?;
        if !c.is_zero() {
            return Err(MathError::NonPolynomialTail(format!(
                "coefficient of u^{} is {}",
                k, c
            )));
        }
    }
    Ok(prod.poly_prefix((d + 2) as usize))
}

/// The four branches of the minimal-polynomial formula, selected by the
/// parity of `deg R` and the sign of `R(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KauffmanBranch {
    #[serde(rename = "odd-R0-plus-t")]
    OddR0PlusT,
    #[serde(rename = "odd-R0-minus-t")]
    OddR0MinusT,
    #[serde(rename = "even-R0-plus-t")]
    EvenR0PlusT,
    #[serde(rename = "even-R0-minus-t")]
    EvenR0MinusT,
}

impl KauffmanBranch {
    /// The divisor pulled out of `gcd(p, p_hat)` and `R` on this branch.
    fn divisor(self) -> Poly {
        match self {
            KauffmanBranch::OddR0PlusT => Poly::one(),
            KauffmanBranch::OddR0MinusT => Poly::from_ints(&[-1, 0, 1]),
            KauffmanBranch::EvenR0PlusT => Poly::from_ints(&[1, 1]),
            KauffmanBranch::EvenR0MinusT => Poly::from_ints(&[-1, 1]),
        }
    }
}

/// Full verdict record for a cyclotomic Kauffman input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KauffmanClassification {
    pub nonzero: bool,
    pub m: Option<Poly>,
    pub p_hat: Option<Poly>,
    pub big_r: Option<Poly>,
    pub r1: Option<Poly>,
    pub branch: Option<KauffmanBranch>,
    pub eps: Option<EpsilonPair>,
    pub roo_canonical: Option<RatFunc>,
    /// Order to which series equalities were certified; `None` means exact.
    pub cert_order: Option<i64>,
    pub diagnostics: Vec<String>,
}

impl KauffmanClassification {
    fn zero(cert_order: Option<i64>, diagnostics: Vec<String>) -> Self {
        KauffmanClassification {
            nonzero: false,
            m: None,
            p_hat: None,
            big_r: None,
            r1: None,
            branch: None,
            eps: None,
            roo_canonical: None,
            cert_order,
            diagnostics,
        }
    }
}

/// Classify a cyclotomic Kauffman input `(p, rOO)`.
///
/// Computes `p_hat` and `R = gcd((u^2 - zu - 1)p, p_hat)`, verifies
/// `R(0) = +-t`, `rOO = t Rv/R`, and the equal vanishing orders of `p`,
/// `p_hat`, `R` at `u = +-1`, selects the branch from the parity of `deg R`
/// and the sign of `R(0)`, and divides `gcd(p, p_hat)` by the branch divisor.
/// Nonzero requires `m` to pass the sneeze check with `rOO = rOO_m` and the
/// reduced `R_1` to be a polynomial of positive degree.
pub fn classify_kauffman(
    p: &Poly,
    oo: &KauffmanOO,
    params: &KauffmanParams,
    order: i64,
) -> Result<KauffmanClassification> {
    let (d, p0) = validate_monic_nonzero_const(p)?;
    if d < 1 {
        return Err(MathError::DegreeZero);
    }
    let d = d as i64;

    let cert_order = oo.cert_order(order);
    let tail_order = match cert_order {
        None => 1,
        Some(eff) => {
            let tail = eff - (d + 2);
            if tail < 1 {
                return Err(MathError::InsufficientOrder {
                    have: eff,
                    need: d + 3,
                });
            }
            tail
        }
    };

    let p_hat = match hat_poly_k(p, oo, params, tail_order) {
        Ok(h) => h,
        Err(MathError::NonPolynomialTail(detail)) => {
            return Ok(KauffmanClassification::zero(
                cert_order,
                vec![format!("hat polynomial check failed: {}", detail)],
            ));
        }
        Err(e) => return Err(e),
    };

    let mut diagnostics = Vec::new();
    let mut ok = true;

    // shape facts from the closure lemma: degree d+2, leading -t^-1 p(0)
    let expected_lead = -&params.t.inv()? * &p0;
    if p_hat.deg() != d + 2 || p_hat.leading() != Some(&expected_lead) {
        diagnostics.push(format!(
            "hat polynomial shape mismatch: degree {} with leading {}, expected degree {} with leading {}",
            p_hat.deg(),
            p_hat.leading().map_or("0".to_string(), |c| c.to_string()),
            d + 2,
            expected_lead
        ));
        ok = false;
    }

    let big_r = (&params.quad_minus() * p).gcd(&p_hat)?;
    let r0 = big_r.constant_term();
    let branch = if big_r.degree().unwrap() % 2 == 1 {
        if r0 == params.t {
            Some(KauffmanBranch::OddR0PlusT)
        } else if r0 == -&params.t {
            Some(KauffmanBranch::OddR0MinusT)
        } else {
            None
        }
    } else if r0 == params.t {
        Some(KauffmanBranch::EvenR0PlusT)
    } else if r0 == -&params.t {
        Some(KauffmanBranch::EvenR0MinusT)
    } else {
        None
    };
    let branch = match branch {
        Some(b) => b,
        None => {
            diagnostics.push(format!("R(0) = {} is not +-t: zero category", r0));
            return Ok(KauffmanClassification {
                nonzero: false,
                m: None,
                p_hat: Some(p_hat),
                big_r: Some(big_r),
                r1: None,
                branch: None,
                eps: None,
                roo_canonical: None,
                cert_order,
                diagnostics,
            });
        }
    };

    // rOO = t * Rv / R
    let rv = big_r.reverse()?;
    let downpour = RatFunc::new(rv.scale(&params.t), big_r.clone())?;
    let eff = cert_order.unwrap_or(order);
    if !oo.matches_roo(&downpour, eff) {
        diagnostics.push("rOO does not equal t * Rv/R: zero category".into());
        ok = false;
    }

    // equal vanishing orders of p, p_hat, R at u = +-1
    for x in [Scalar::one(), -Scalar::one()] {
        let (a, b, c) = (
            p.vanishing_order(&x),
            p_hat.vanishing_order(&x),
            big_r.vanishing_order(&x),
        );
        if a != b || b != c {
            diagnostics.push(format!(
                "vanishing orders at u = {} differ: p {}, p_hat {}, R {}",
                x, a, b, c
            ));
            ok = false;
        }
    }

    let a = branch.divisor();
    let g0 = p.gcd(&p_hat)?;
    let m = match g0.div_exact(&a) {
        Some(m) => m,
        None => {
            diagnostics.push(format!(
                "branch divisor {} does not divide gcd(p, p_hat) = {}: zero category",
                a, g0
            ));
            return Ok(KauffmanClassification {
                nonzero: false,
                m: None,
                p_hat: Some(p_hat),
                big_r: Some(big_r),
                r1: None,
                branch: Some(branch),
                eps: None,
                roo_canonical: None,
                cert_order,
                diagnostics,
            });
        }
    };
    let r1 = match big_r.div_exact(&a) {
        Some(r1) => Some(r1),
        None => {
            diagnostics.push(format!(
                "branch divisor {} does not divide R = {}: zero category",
                a, big_r
            ));
            ok = false;
            None
        }
    };

    let mut eps = None;
    let mut roo_canonical = None;
    let mut match_ok = false;
    if m.deg() >= 1 {
        eps = sneeze_check(&m, params)?;
        if eps.is_none() {
            diagnostics.push(format!("m = {} fails the sneeze conditions", m));
        }
        let canonical = roo_of_poly(&m, params)?;
        match_ok = oo.matches_roo(&canonical, eff);
        if !match_ok {
            diagnostics.push("rOO does not match rOO_m: zero category".into());
        }
        roo_canonical = Some(canonical);
    } else {
        diagnostics.push("gcd pipeline produced a constant: zero category".into());
    }

    let r1_positive = r1.as_ref().map_or(false, |r| r.deg() >= 1);
    if !r1_positive && r1.is_some() {
        diagnostics.push("R_1 has degree 0: zero category".into());
    }
    let nonzero = ok && m.deg() >= 1 && eps.is_some() && match_ok && r1_positive;
    Ok(KauffmanClassification {
        nonzero,
        m: Some(m),
        p_hat: Some(p_hat),
        big_r: Some(big_r),
        r1,
        branch: Some(branch),
        eps,
        roo_canonical,
        cert_order,
        diagnostics,
    })
}

/// Brute-force oracle: enumerate sub-multiset divisors of `p`, keep those
/// that pass the sneeze check and match `rOO`, and return the unique
/// maximal-degree survivor.
pub fn oracle_classify_k(
    roots: &RootMultiset,
    oo: &KauffmanOO,
    params: &KauffmanParams,
    order: i64,
) -> Result<Option<Poly>> {
    if roots.roots().iter().any(Scalar::is_zero) {
        return Err(MathError::InvalidParams(
            "Kauffman roots must be nonzero".into(),
        ));
    }
    let mut survivors: Vec<Poly> = Vec::new();
    for sub in roots.sub_multisets() {
        if sub.is_empty() {
            continue;
        }
        let f = Poly::from_roots(&sub);
        if sneeze_check(&f, params)?.is_none() {
            continue;
        }
        if oo.matches_roo(&roo_of_poly(&f, params)?, order) {
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

/// The correction polynomial `H_{f,g}` built from the epsilon pairs of two
/// sneeze-passing polynomials.
pub fn h_poly(f: &Poly, g: &Poly, params: &KauffmanParams) -> Result<Poly> {
    let ef = sneeze_check(f, params)?.ok_or_else(|| {
        MathError::InvalidParams(format!("{} fails the sneeze conditions", f))
    })?;
    let eg = sneeze_check(g, params)?.ok_or_else(|| {
        MathError::InvalidParams(format!("{} fails the sneeze conditions", g))
    })?;
    let mut h = Poly::one();
    if ef.eps1 != eg.eps1 {
        let e = (eg.eps1 - ef.eps1) / 2;
        h = &h * &Poly::new(vec![-params.q_pow(e), Scalar::one()]);
    }
    if ef.eps2 != eg.eps2 {
        let e = (eg.eps2 - ef.eps2) / 2;
        h = &h * &Poly::new(vec![params.q_pow(e), Scalar::one()]);
    }
    Ok(h)
}

/// Factor `g = f * H_{f,g} * gamma` and test the three gamma conditions
/// (`gamma` monic palindromic of even degree with `gamma(0) = 1`). The
/// returned flag is equivalent to `rOO_g = rOO_f`; this is verified in both
/// directions.
pub fn belgium_factor(f: &Poly, g: &Poly, params: &KauffmanParams) -> Result<(Poly, bool)> {
    let h = h_poly(f, g, params)?;
    let quotient = g.div_exact(f).ok_or_else(|| {
        MathError::InvalidParams(format!("{} does not divide {}", f, g))
    })?;
    let (gamma, ok) = match quotient.div_exact(&h) {
        Some(gamma) => {
            let conds = gamma.deg() % 2 == 0
                && gamma.constant_term().is_one()
                && gamma.reverse().map_or(false, |rev| rev == gamma);
            (gamma, conds)
        }
        None => (quotient, false),
    };
    let equal = roo_of_poly(g, params)? == roo_of_poly(f, params)?;
    assert_eq!(
        ok, equal,
        "factorization criterion disagrees with rOO equality for f = {}, g = {}",
        f, g
    );
    Ok((gamma, ok))
}

/// Result of the bar involution on scalar data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarTransform {
    pub poly: Poly,
    pub params: KauffmanParams,
    /// Whether `rOO` of the transformed data equals `lOO` of the original;
    /// checked, not assumed.
    pub identity_ok: bool,
}

/// The bar involution at scalar level: `f -> fv`, `(q, t) -> (q^-1, t^-1)`
/// (hence `z -> -z`). The identity `rOO_{fv}^{(-z, t^-1)} = lOO_f^{(z, t)}`
/// is verified as an exact rational-function comparison and reported.
pub fn bar_transform(f: &Poly, params: &KauffmanParams) -> Result<BarTransform> {
    validate_monic_nonzero_const(f)?;
    let fv = f.reverse()?;
    let new_params = KauffmanParams::new(params.q.inv()?, params.t.inv()?)?;
    let identity_ok = roo_of_poly(&fv, &new_params)? == loo_of_poly(f, params)?;
    Ok(BarTransform {
        poly: fv,
        params: new_params,
        identity_ok,
    })
}
