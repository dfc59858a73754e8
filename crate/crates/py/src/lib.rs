//! Python module `recosc`.

use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use recosc_core::exactnum::rational::{format_rational, parse_rational, Rational};
use recosc_core::io::{InputDocument, Parsed, ReportDocument, RunOptions};
use recosc_core::oscillation::{classify_recurrence, classify_spectrum, ClassifyOptions, Report, Verdict};
use recosc_core::powersum::Recurrence;
use recosc_core::unitlattice::{empty_square_witness as witness, multiples_mod1};
use recosc_core::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) | Error::Hypothesis(_) => PyValueError::new_err(e.to_string()),
        Error::PrecisionExhausted(_) => PyArithmeticError::new_err(e.to_string()),
        Error::Contradiction(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn rationals(v: &[String]) -> PyResult<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s).map_err(py_err)).collect()
}

fn run(doc: &InputDocument, terms: usize, relation_bound: u32) -> Result<(String, Report), Error> {
    let opts = ClassifyOptions { terms, relation_bound };
    Ok(match doc.parse()? {
        Parsed::Recurrence(r) => ("recurrence".into(), classify_recurrence(&r, &opts)?),
        Parsed::Spectrum(None) => ("root_form".into(), Report::new(Verdict::IdenticallyZero)),
        Parsed::Spectrum(Some(s)) => ("root_form".into(), classify_spectrum(&s, &opts)?),
    })
}

/// Classifies an input document given as JSON text; returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (document, terms = 200, relation_bound = 50))]
fn analyze(document: &str, terms: usize, relation_bound: u32) -> PyResult<String> {
    let doc = InputDocument::from_json(document).map_err(py_err)?;
    let (mode, report) = run(&doc, terms, relation_bound).map_err(py_err)?;
    let out = ReportDocument {
        format: ReportDocument::FORMAT,
        mode,
        options: RunOptions { terms, relation_bound, precision_budget: recosc_core::exactnum::roots::precision_budget() },
        report,
        footer: None,
    };
    Ok(out.to_json())
}

/// Verdict kind for `a(n+d) = s1 a(n+d-1) + ... + sd a(n)`, rationals as `"p/q"`.
#[pyfunction]
#[pyo3(signature = (coeffs, initials, terms = 200))]
fn classify(coeffs: Vec<String>, initials: Vec<String>, terms: usize) -> PyResult<String> {
    let doc = InputDocument::recurrence(rationals(&coeffs)?, rationals(&initials)?);
    let (_, report) = run(&doc, terms, recosc_core::kronecker::DEFAULT_RELATION_BOUND).map_err(py_err)?;
    Ok(report.verdict.kind().as_str().to_string())
}

/// Exact signs of the first terms as a string over `+`, `-`, `0`.
#[pyfunction]
fn signs(coeffs: Vec<String>, initials: Vec<String>, terms: usize) -> PyResult<String> {
    let r = Recurrence::new(rationals(&coeffs)?, rationals(&initials)?).map_err(py_err)?;
    Ok(r.sign_summary(terms).pattern)
}

/// Centre of an empty open square of side 1/2, or `None`.
#[pyfunction]
fn empty_square_witness(a1: i64, b1: i64, a2: i64, b2: i64) -> PyResult<Option<(String, String)>> {
    let w = witness(a1, b1, a2, b2).map_err(py_err)?;
    Ok(w.map(|(x, y)| (format_rational(&x), format_rational(&y))))
}

/// The finite orbit `n (a1/b1, a2/b2) mod 1` as pairs of `"p/q"` strings.
#[pyfunction]
fn multiples(a1: i64, b1: i64, a2: i64, b2: i64) -> PyResult<Vec<(String, String)>> {
    let ps = multiples_mod1(a1, b1, a2, b2).map_err(py_err)?;
    Ok(ps.iter_coords().map(|(x, y)| (format_rational(&x), format_rational(&y))).collect())
}

#[pymodule]
pub fn recosc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(signs, m)?)?;
    m.add_function(wrap_pyfunction!(empty_square_witness, m)?)?;
    m.add_function(wrap_pyfunction!(multiples, m)?)?;
    Ok(())
}
