//! Command implementations: each consumes a parsed job document and produces
//! a report plus the process exit code.
//!
//! Exit codes: 0 for a computed verdict (a zero category is an answer, not a
//! failure), 1 for identity-suite failures and oracle disagreements, 2 for
//! parse/validation problems, 3 for inconsistent series input (a nonvanishing
//! hat tail on series-encoded bubble data).

use bubbles::brauer::{
    brew_form, check_admissible, check_weak_admissible, classify_brauer, omega_of_roots,
    oo_of_poly, oracle_classify, OmegaSeq,
};
use bubbles::exactmath::Poly;
use bubbles::kauffman::{
    bar_transform, check_duality, classify_kauffman, loo_of_poly, oracle_classify_k, roo_of_poly,
    sneeze_check,
};
use bubbles::MathError;

use crate::schema::{
    BrauerCheckJob, BrauerClassifyJob, BrauerOmegaJob, KauffmanClassifyJob, KauffmanSeriesJob,
    OOEncoding, OracleOutcome, Report,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONSISTENT_SERIES: i32 = 3;

/// A failure that prevents producing a report.
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    pub fn parse(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

fn map_math_err(e: MathError) -> CmdError {
    CmdError::parse(e.to_string())
}

pub fn effective_order(cli_order: Option<i64>, doc_order: Option<i64>) -> Result<i64, CmdError> {
    let order = cli_order.or(doc_order).unwrap_or(64);
    if order < 8 {
        return Err(CmdError::parse(format!(
            "order must be at least 8, got {}",
            order
        )));
    }
    Ok(order)
}

fn hat_failed(diagnostics: &[String]) -> bool {
    diagnostics.iter().any(|d| d.starts_with("hat polynomial"))
}

pub fn cmd_brauer_classify(
    job: BrauerClassifyJob,
    cli_order: Option<i64>,
    oracle: bool,
) -> Result<(Report, i32), CmdError> {
    let order = effective_order(cli_order, job.order)?;
    let (p, roots) = job.p.resolve().map_err(CmdError::parse)?;
    let (oo, encoding) = job.oo.resolve(order).map_err(CmdError::parse)?;
    let classification = classify_brauer(&p, &oo, order).map_err(map_math_err)?;
    let goodman = (encoding == OOEncoding::Omega)
        .then(|| classification.nonzero && classification.m.as_ref() == Some(&p));

    let mut code = EXIT_OK;
    if encoding == OOEncoding::Series && hat_failed(&classification.diagnostics) {
        code = EXIT_INCONSISTENT_SERIES;
    }

    let oracle_outcome = if oracle {
        let roots = roots.ok_or_else(|| {
            CmdError::parse("--oracle requires the polynomial to be given by its roots")
        })?;
        let m = oracle_classify(&roots, &oo, order).map_err(map_math_err)?;
        let agrees = match (&m, classification.nonzero) {
            (Some(om), true) => classification.m.as_ref() == Some(om),
            (None, false) => true,
            _ => false,
        };
        if !agrees {
            code = EXIT_CHECK_FAILED;
        }
        Some(OracleOutcome { m, agrees })
    } else {
        None
    };

    Ok((
        Report::BrauerClassify {
            order,
            classification,
            goodman,
            oracle: oracle_outcome,
        },
        code,
    ))
}

pub fn cmd_brauer_omega(
    job: BrauerOmegaJob,
    cli_order: Option<i64>,
) -> Result<(Report, i32), CmdError> {
    let order = effective_order(cli_order, job.order)?;
    let (_, roots) = job.p.resolve().map_err(CmdError::parse)?;
    let roots = roots
        .ok_or_else(|| CmdError::parse("brauer omega requires the polynomial by its roots"))?;
    let omega = omega_of_roots(&roots, order);
    let m = Poly::from_roots(&roots);
    let oo_ratfunc = oo_of_poly(&m).map_err(map_math_err)?;
    let oo_series = oo_ratfunc.expand(order);
    let admissible = check_admissible(&omega);
    Ok((
        Report::BrauerOmega {
            order,
            omega,
            oo_ratfunc,
            oo_series,
            admissible,
        },
        EXIT_OK,
    ))
}

pub fn cmd_brauer_check(
    job: BrauerCheckJob,
    cli_order: Option<i64>,
) -> Result<(Report, i32), CmdError> {
    let order = effective_order(cli_order, job.order)?;
    let omega = OmegaSeq::new(job.omega).map_err(map_math_err)?;
    let admissible = check_admissible(&omega);
    let (weak, brew_numerator, brew_tail_ok) = match &job.m {
        None => (None, None, None),
        Some(input) => {
            let (m, _) = input.resolve().map_err(CmdError::parse)?;
            let weak = check_weak_admissible(&omega, &m).map_err(map_math_err)?;
            let (numerator, tail_ok) = brew_form(&omega, &m).map_err(map_math_err)?;
            (Some(weak), Some(numerator), Some(tail_ok))
        }
    };
    Ok((
        Report::BrauerCheck {
            order,
            admissible,
            weak,
            brew_numerator,
            brew_tail_ok,
        },
        EXIT_OK,
    ))
}

pub fn cmd_kauffman_classify(
    job: KauffmanClassifyJob,
    cli_order: Option<i64>,
    oracle: bool,
) -> Result<(Report, i32), CmdError> {
    let order = effective_order(cli_order, job.order)?;
    let params = job.params;
    let (p, roots) = job.p.resolve().map_err(CmdError::parse)?;
    let (oo, encoding, komega_admissible) =
        job.roo.resolve(order, &params).map_err(CmdError::parse)?;
    let classification = classify_kauffman(&p, &oo, &params, order).map_err(map_math_err)?;

    let mut code = EXIT_OK;
    if encoding == OOEncoding::Series && hat_failed(&classification.diagnostics) {
        code = EXIT_INCONSISTENT_SERIES;
    }

    let oracle_outcome = if oracle {
        let roots = roots.ok_or_else(|| {
            CmdError::parse("--oracle requires the polynomial to be given by its roots")
        })?;
        let m = oracle_classify_k(&roots, &oo, &params, order).map_err(map_math_err)?;
        let agrees = match (&m, classification.nonzero) {
            (Some(om), true) => classification.m.as_ref() == Some(om),
            (None, false) => true,
            _ => false,
        };
        if !agrees {
            code = EXIT_CHECK_FAILED;
        }
        Some(OracleOutcome { m, agrees })
    } else {
        None
    };

    Ok((
        Report::KauffmanClassify {
            order,
            params,
            komega_admissible,
            classification,
            oracle: oracle_outcome,
        },
        code,
    ))
}

pub fn cmd_kauffman_series(
    job: KauffmanSeriesJob,
    cli_order: Option<i64>,
) -> Result<(Report, i32), CmdError> {
    let order = effective_order(cli_order, job.order)?;
    let params = job.params;
    let (f, _) = job.p.resolve().map_err(CmdError::parse)?;
    let eps = sneeze_check(&f, &params).map_err(map_math_err)?;
    let duality = check_duality(&f, &params).map_err(map_math_err)?;
    let roo_ratfunc = roo_of_poly(&f, &params).map_err(map_math_err)?;
    let loo_ratfunc = loo_of_poly(&f, &params).map_err(map_math_err)?;
    let roo_series = roo_ratfunc.expand(order);
    let loo_series = loo_ratfunc.expand(order);
    let bar = bar_transform(&f, &params).map_err(map_math_err)?;
    Ok((
        Report::KauffmanSeries {
            order,
            params,
            eps,
            duality,
            roo_ratfunc,
            loo_ratfunc,
            roo_series,
            loo_series,
            bar,
        },
        EXIT_OK,
    ))
}

