//! JSON input documents and output reports.
//!
//! All rationals travel as strings `"a/b"` or `"a"` (bare integers are also
//! accepted on input); polynomials are ascending coefficient arrays; series
//! are `{ "top_exp": int, "coeffs": [...], "order": N }`.

use serde::{Deserialize, Serialize};

use bubbles::brauer::{
    oo_from_omega, AdmissibleVerdict, BrauerClassification, BrauerOO, OmegaSeq, WeakVerdict,
};
use bubbles::exactmath::{Poly, RatFunc, RootMultiset, Scalar, SeriesInf};
use bubbles::kauffman::{
    roo_from_komega, BarTransform, DualityVerdict, EpsilonPair, KOmegaSeq, KauffmanClassification,
    KauffmanOO, KauffmanParams,
};

/// A polynomial given either by roots or by ascending coefficients.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyInput {
    #[serde(default)]
    pub roots: Option<Vec<Scalar>>,
    #[serde(default)]
    pub coeffs: Option<Vec<Scalar>>,
}

impl PolyInput {
    pub fn resolve(&self) -> Result<(Poly, Option<RootMultiset>), String> {
        match (&self.roots, &self.coeffs) {
            (Some(roots), None) => {
                let multiset = RootMultiset::new(roots.clone());
                Ok((Poly::from_roots(&multiset), Some(multiset)))
            }
            (None, Some(coeffs)) => Ok((Poly::new(coeffs.clone()), None)),
            _ => Err("polynomial needs exactly one of \"roots\" or \"coeffs\"".into()),
        }
    }
}

/// How the bubble generating function was supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OOEncoding {
    RatFunc,
    Series,
    Omega,
}

/// Brauer bubble data in one of three encodings.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OOInput {
    #[serde(default)]
    pub ratfunc: Option<RatFunc>,
    #[serde(default)]
    pub series: Option<SeriesInf>,
    #[serde(default)]
    pub omega: Option<Vec<Scalar>>,
}

impl OOInput {
    pub fn resolve(&self, order: i64) -> Result<(BrauerOO, OOEncoding), String> {
        match (&self.ratfunc, &self.series, &self.omega) {
            (Some(r), None, None) => BrauerOO::from_ratfunc(r.clone(), order)
                .map(|oo| (oo, OOEncoding::RatFunc))
                .map_err(|e| e.to_string()),
            (None, Some(s), None) => BrauerOO::from_series(s.clone())
                .map(|oo| (oo, OOEncoding::Series))
                .map_err(|e| e.to_string()),
            (None, None, Some(w)) => {
                let seq = OmegaSeq::new(w.clone()).map_err(|e| e.to_string())?;
                Ok((oo_from_omega(&seq), OOEncoding::Omega))
            }
            _ => Err("oo needs exactly one of \"ratfunc\", \"series\", \"omega\"".into()),
        }
    }
}

/// Kauffman bubble sequence with negative indices:
/// `nonneg[i] = omega_i`, `nonpos[i] = omega_{-i}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KOmegaInput {
    pub nonneg: Vec<Scalar>,
    pub nonpos: Vec<Scalar>,
}

/// Kauffman right bubble data in one of three encodings.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RooInput {
    #[serde(default)]
    pub ratfunc: Option<RatFunc>,
    #[serde(default)]
    pub series: Option<SeriesInf>,
    #[serde(default)]
    pub omega: Option<KOmegaInput>,
}

impl RooInput {
    pub fn resolve(
        &self,
        order: i64,
        params: &KauffmanParams,
    ) -> Result<(KauffmanOO, OOEncoding, Option<bool>), String> {
        match (&self.ratfunc, &self.series, &self.omega) {
            (Some(r), None, None) => KauffmanOO::from_roo_ratfunc(r.clone(), order, params)
                .map(|oo| (oo, OOEncoding::RatFunc, None))
                .map_err(|e| e.to_string()),
            (None, Some(s), None) => KauffmanOO::from_roo_series(s.clone(), params)
                .map(|oo| (oo, OOEncoding::Series, None))
                .map_err(|e| e.to_string()),
            (None, None, Some(w)) => {
                let seq = KOmegaSeq::new(w.nonneg.clone(), w.nonpos.clone(), params)
                    .map_err(|e| e.to_string())?;
                let built = roo_from_komega(&seq, params).map_err(|e| e.to_string())?;
                let admissible = built.admissible;
                let oo = built.into_oo(params).map_err(|e| e.to_string())?;
                Ok((oo, OOEncoding::Omega, Some(admissible)))
            }
            _ => Err("roo needs exactly one of \"ratfunc\", \"series\", \"omega\"".into()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerClassifyJob {
    pub p: PolyInput,
    pub oo: OOInput,
    #[serde(default)]
    pub order: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerOmegaJob {
    pub p: PolyInput,
    #[serde(default)]
    pub order: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerCheckJob {
    pub omega: Vec<Scalar>,
    #[serde(default)]
    pub m: Option<PolyInput>,
    #[serde(default)]
    pub order: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KauffmanClassifyJob {
    pub p: PolyInput,
    pub roo: RooInput,
    pub params: KauffmanParams,
    #[serde(default)]
    pub order: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KauffmanSeriesJob {
    pub p: PolyInput,
    pub params: KauffmanParams,
    #[serde(default)]
    pub order: Option<i64>,
}

/// Outcome of the `--oracle` cross-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub m: Option<Poly>,
    pub agrees: bool,
}

/// One line of the identity suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Every command emits exactly one report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command")]
pub enum Report {
    #[serde(rename = "brauer-classify")]
    BrauerClassify {
        order: i64,
        classification: BrauerClassification,
        /// For omega-encoded input: whether the minimal polynomial is `p`
        /// itself.
        goodman: Option<bool>,
        oracle: Option<OracleOutcome>,
    },
    #[serde(rename = "brauer-omega")]
    BrauerOmega {
        order: i64,
        omega: OmegaSeq,
        oo_ratfunc: RatFunc,
        oo_series: SeriesInf,
        admissible: AdmissibleVerdict,
    },
    #[serde(rename = "brauer-check")]
    BrauerCheck {
        order: i64,
        admissible: AdmissibleVerdict,
        weak: Option<WeakVerdict>,
        brew_numerator: Option<Poly>,
        brew_tail_ok: Option<bool>,
    },
    #[serde(rename = "kauffman-classify")]
    KauffmanClassify {
        order: i64,
        params: KauffmanParams,
        komega_admissible: Option<bool>,
        classification: KauffmanClassification,
        oracle: Option<OracleOutcome>,
    },
    #[serde(rename = "kauffman-series")]
    KauffmanSeries {
        order: i64,
        params: KauffmanParams,
        eps: Option<EpsilonPair>,
        duality: DualityVerdict,
        roo_ratfunc: RatFunc,
        loo_ratfunc: RatFunc,
        roo_series: SeriesInf,
        loo_series: SeriesInf,
        bar: BarTransform,
    },
    #[serde(rename = "suite")]
    Suite {
        order: i64,
        pass: bool,
        checks: Vec<SuiteCheck>,
    },
}

impl Report {
    /// Human-readable rendering for `--format text`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::BrauerClassify {
                order,
                classification: c,
                goodman,
                oracle,
            } => {
                out.push_str(&format!(
                    "brauer classify (order {}): {}\n",
                    order,
                    if c.nonzero { "NONZERO" } else { "ZERO CATEGORY" }
                ));
                if let Some(m) = &c.m {
                    out.push_str(&format!("  m      = {}\n", m));
                }
                if let Some(p_hat) = &c.p_hat {
                    out.push_str(&format!("  p_hat  = {}\n", p_hat));
                }
                if let Some(q) = &c.q_poly {
                    out.push_str(&format!("  Q      = {}\n", q));
                }
                if let Some(b) = &c.branch {
                    out.push_str(&format!("  branch = {:?}\n", b));
                }
                if let Some(oo) = &c.oo_canonical {
                    out.push_str(&format!("  O_m    = {}\n", oo));
                }
                out.push_str(&format!(
                    "  certified: {}\n",
                    match c.cert_order {
                        None => "exact".to_string(),
                        Some(n) => format!("to order {}", n),
                    }
                ));
                for d in &c.diagnostics {
                    out.push_str(&format!("  note: {}\n", d));
                }
                if let Some(g) = goodman {
                    out.push_str(&format!("  minimal polynomial equals p: {}\n", g));
                }
                if let Some(o) = oracle {
                    out.push_str(&format!(
                        "  oracle: m = {}, agrees = {}\n",
                        o.m.as_ref().map_or("zero".to_string(), |m| m.to_string()),
                        o.agrees
                    ));
                }
            }
            Report::BrauerOmega {
                order,
                omega,
                oo_ratfunc,
                admissible,
                ..
            } => {
                out.push_str(&format!("brauer omega (order {}):\n", order));
                let shown: Vec<String> = omega
                    .values()
                    .iter()
                    .take(8)
                    .map(|v| v.to_string())
                    .collect();
                out.push_str(&format!("  omega  = [{}, ...]\n", shown.join(", ")));
                out.push_str(&format!("  O      = {}\n", oo_ratfunc));
                out.push_str(&format!("  admissible: {}\n", admissible.pass));
            }
            Report::BrauerCheck {
                order,
                admissible,
                weak,
                brew_tail_ok,
                ..
            } => {
                out.push_str(&format!("brauer check (order {}):\n", order));
                out.push_str(&format!(
                    "  admissible: {} (first violation {:?})\n",
                    admissible.pass, admissible.first_violation
                ));
                if let Some(w) = weak {
                    out.push_str(&format!(
                        "  weakly admissible: {} (first violation {:?})\n",
                        w.pass, w.first_violation
                    ));
                }
                if let Some(b) = brew_tail_ok {
                    out.push_str(&format!("  numerator-form tail vanishes: {}\n", b));
                }
            }
            Report::KauffmanClassify {
                order,
                params,
                komega_admissible,
                classification: c,
                oracle,
            } => {
                out.push_str(&format!(
                    "kauffman classify (order {}, q = {}, t = {}, z = {}): {}\n",
                    order,
                    params.q,
                    params.t,
                    params.z,
                    if c.nonzero { "NONZERO" } else { "ZERO CATEGORY" }
                ));
                if let Some(a) = komega_admissible {
                    out.push_str(&format!("  omega data admissible: {}\n", a));
                }
                if let Some(m) = &c.m {
                    out.push_str(&format!("  m      = {}\n", m));
                }
                if let Some(p_hat) = &c.p_hat {
                    out.push_str(&format!("  p_hat  = {}\n", p_hat));
                }
                if let Some(r) = &c.big_r {
                    out.push_str(&format!("  R      = {}\n", r));
                }
                if let Some(r1) = &c.r1 {
                    out.push_str(&format!("  R_1    = {}\n", r1));
                }
                if let Some(b) = &c.branch {
                    out.push_str(&format!("  branch = {:?}\n", b));
                }
                if let Some(e) = &c.eps {
                    out.push_str(&format!("  eps    = ({}, {})\n", e.eps1, e.eps2));
                }
                for d in &c.diagnostics {
                    out.push_str(&format!("  note: {}\n", d));
                }
                if let Some(o) = oracle {
                    out.push_str(&format!(
                        "  oracle: m = {}, agrees = {}\n",
                        o.m.as_ref().map_or("zero".to_string(), |m| m.to_string()),
                        o.agrees
                    ));
                }
            }
            Report::KauffmanSeries {
                order,
                params,
                eps,
                duality,
                roo_ratfunc,
                loo_ratfunc,
                bar,
                ..
            } => {
                out.push_str(&format!(
                    "kauffman series (order {}, q = {}, t = {}):\n",
                    order, params.q, params.t
                ));
                out.push_str(&format!(
                    "  sneeze: {}\n",
                    eps.map_or("fail".to_string(), |e| format!("({}, {})", e.eps1, e.eps2))
                ));
                out.push_str(&format!("  rOO    = {}\n", roo_ratfunc));
                out.push_str(&format!("  lOO    = {}\n", loo_ratfunc));
                out.push_str(&format!(
                    "  duality: substitution {}, product {}\n",
                    duality.inverse_substitution_ok, duality.product_is_one
                ));
                out.push_str(&format!(
                    "  bar involution: f -> {}, (q, t) -> ({}, {}), identity {}\n",
                    bar.poly, bar.params.q, bar.params.t, bar.identity_ok
                ));
            }
            Report::Suite {
                order,
                pass,
                checks,
            } => {
                out.push_str(&format!("identity suite (order {}):\n", order));
                for c in checks {
                    out.push_str(&format!(
                        "  [{}] {}{}\n",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        if c.detail.is_empty() {
                            String::new()
                        } else {
                            format!(" - {}", c.detail)
                        }
                    ));
                }
                out.push_str(&format!(
                    "suite: {}\n",
                    if *pass { "ALL PASS" } else { "FAILED" }
                ));
            }
        }
        out
    }
}
