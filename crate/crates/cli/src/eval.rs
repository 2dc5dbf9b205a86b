//! The `eval` command.

use crate::args::{EvalArgs, Format, I7Method, L7Method, Target};
use crate::{check_tol, CliError};
use clausen::{integrals, specfun, verify, EvalResult};
use num_complex::Complex64;
use serde::Serialize;
use std::io::Write;

/// One printed value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub value: f64,
    pub err_bound: f64,
    pub method: String,
    pub effort: usize,
}

impl Row {
    fn new(label: &str, r: EvalResult) -> Self {
        Self {
            label: label.to_string(),
            value: r.value,
            err_bound: r.err_bound,
            method: r.method,
            effort: r.effort,
        }
    }
}

#[derive(Serialize)]
struct EvalOutput<'a> {
    target: &'a str,
    results: &'a [Row],
}

fn failure(e: clausen::Error) -> CliError {
    CliError::Failure(e.to_string())
}

fn target_name(t: &Target) -> &'static str {
    match t {
        Target::Cl2 { .. } => "cl2",
        Target::Cln { .. } => "cln",
        Target::Trigamma { .. } => "trigamma",
        Target::Hurwitz { .. } => "hurwitz",
        Target::Catalan { .. } => "catalan",
        Target::L7 { .. } => "l7",
        Target::I7 { .. } => "i7",
        Target::Iab { .. } => "iab",
        Target::Li3 { .. } => "li3",
    }
}

/// Evaluates the target and returns one row per reported value.
pub fn evaluate(target: &Target, tol: f64) -> Result<Vec<Row>, CliError> {
    let one = |r: clausen::Result<EvalResult>| Ok(vec![Row::new("value", r.map_err(failure)?)]);
    match *target {
        Target::Cl2 { theta } => one(specfun::cl2(theta, tol)),
        Target::Cln { n, theta } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            if n % 2 == 0 {
                one(specfun::cl_sin(n, theta, tol))
            } else {
                one(specfun::cl_cos(n, theta, tol))
            }
        }
        Target::Trigamma { x } => one(specfun::trigamma(x)),
        Target::Hurwitz { s, a } => one(specfun::hurwitz_zeta(s, a, tol)),
        Target::Catalan { ref method } => {
            if !verify::catalan_route_names().any(|n| n == method) {
                let names: Vec<_> = verify::catalan_route_names().collect();
                return Err(CliError::Usage(format!(
                    "unknown Catalan method '{method}'; expected one of {}",
                    names.join(", ")
                )));
            }
            // Routes return bare values; each is summed or integrated to `tol`.
            let v = verify::catalan_route(method, tol).map_err(failure)?;
            one(Ok(EvalResult::new(v, tol, 0, method.as_str())))
        }
        Target::L7 { method } => one(match method {
            L7Method::Series => integrals::l_minus7_series(tol),
            L7Method::Trigamma => integrals::l_minus7_trigamma(),
        }),
        Target::I7 { method } => one(match method {
            I7Method::Quadrature => integrals::integral_I7(tol),
            I7Method::Clausen => integrals::i7_clausen_form(tol),
        }),
        Target::Iab { a, b } => {
            let f = integrals::integral_I_ab(a, b, tol).map_err(failure)?;
            Ok(vec![
                Row::new("quadrature", f.quadrature),
                Row::new("omega-form", f.omega_form),
                Row::new("theta-form", f.theta_form),
            ])
        }
        Target::Li3 { re, im } => {
            let c = specfun::polylog_complex(3, Complex64::new(re, im), tol).map_err(failure)?;
            let row = |label: &str, value: f64| Row {
                label: label.to_string(),
                value,
                err_bound: c.err_bound,
                method: c.method.clone(),
                effort: c.effort,
            };
            Ok(vec![row("re", c.value.re), row("im", c.value.im)])
        }
    }
}

pub fn run(a: &EvalArgs, out: &mut impl Write) -> Result<(), CliError> {
    let tol = check_tol(a.tol, "--tol")?;
    let rows = evaluate(&a.target, tol)?;
    if let Some(max) = a.max_terms {
        if let Some(r) = rows.iter().find(|r| r.effort > max) {
            return Err(CliError::Failure(format!(
                "{} needed {} terms, above --max-terms {max}",
                r.label, r.effort
            )));
        }
    }
    let name = target_name(&a.target);
    match a.format {
        Format::Json => {
            let o = EvalOutput { target: name, results: &rows };
            writeln!(out, "{}", serde_json::to_string_pretty(&o).expect("rows serialize"))?;
        }
        Format::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{name:<9} {:<11} {:<24} err_bound {:<10.3e} method {} effort {}",
                    r.label, r.value, r.err_bound, r.method, r.effort
                )?;
            }
        }
    }
    Ok(())
}
