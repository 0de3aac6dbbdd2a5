//! Python bindings. Documents cross the boundary as JSON strings in the same
//! formats the command-line tool reads and writes.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use pbw_core::dual;
use pbw_core::format::{
    to_json, AlgebraDoc, BasisDoc, DimReportDoc, PresentationDoc, SeriesDoc, SeriesReportDoc, VerdictDoc,
};
use pbw_core::groebner::{complete, normal_monomial_counts, GroebnerBasis, Presentation};
use pbw_core::pbw::pbw_verdict;
use pbw_core::series::named::{named_egf, named_sym};
use pbw_core::series::{necessary_condition_egf, necessary_condition_sym};
use pbw_core::trees::{MonomialOrder, OrderKind};
use pbw_core::uea::pbw_compare;

fn bad(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(text: &str) -> PyResult<(PresentationDoc, Presentation)> {
    let doc = PresentationDoc::parse(text).map_err(bad)?;
    let p = doc.to_presentation().map_err(bad)?;
    Ok((doc, p))
}

fn order_for(doc: &PresentationDoc, p: &Presentation, order: Option<&str>) -> PyResult<MonomialOrder> {
    match order {
        Some(name) => {
            let kind = OrderKind::parse(name).ok_or_else(|| bad(format!("unknown order `{name}`")))?;
            Ok(MonomialOrder::for_signature(kind, &p.signature))
        }
        None => Ok(doc
            .order(&p.signature)
            .map_err(bad)?
            .unwrap_or_else(|| MonomialOrder::for_signature(OrderKind::PathLex, &p.signature))),
    }
}

fn basis(
    presentation: &str,
    order: Option<&str>,
    max_arity: usize,
) -> PyResult<(PresentationDoc, Presentation, GroebnerBasis)> {
    let (doc, p) = parse(presentation)?;
    let o = order_for(&doc, &p, order)?;
    let g = complete(&p, &o, max_arity).map_err(bad)?;
    Ok((doc, p, g))
}

/// Gröbner basis of a presentation, as a basis document.
#[pyfunction]
#[pyo3(signature = (presentation, order=None, max_arity=5))]
fn groebner_basis(presentation: &str, order: Option<&str>, max_arity: usize) -> PyResult<String> {
    let (doc, _, g) = basis(presentation, order, max_arity)?;
    Ok(to_json(&BasisDoc::from_basis(doc.name, &g)))
}

/// `dim P(n)` for `n = 1..=max_arity`.
#[pyfunction]
#[pyo3(signature = (presentation, order=None, max_arity=5))]
fn dims(presentation: &str, order: Option<&str>, max_arity: usize) -> PyResult<Vec<usize>> {
    let (_, _, g) = basis(presentation, order, max_arity)?;
    normal_monomial_counts(&g, max_arity).map_err(bad)
}

/// Left-comb test, numeric check and any declared dual series.
#[pyfunction]
#[pyo3(signature = (presentation, order=None, max_arity=5, trunc=6))]
fn pbw(presentation: &str, order: Option<&str>, max_arity: usize, trunc: usize) -> PyResult<String> {
    if max_arity < 2 {
        return Err(bad("max_arity must be at least 2"));
    }
    let (doc, _, g) = basis(presentation, order, max_arity)?;
    if !g.certified {
        return Err(PyRuntimeError::new_err("basis not certified"));
    }
    let mut v = pbw_verdict(&g, max_arity - 1).map_err(bad)?;
    if let Some(name) = &doc.dual_series {
        let f = named_egf(name, trunc).ok_or_else(|| bad(format!("unknown series `{name}`")))?;
        v.attach_series(necessary_condition_egf(&f).map_err(bad)?);
    } else if let Some(name) = &doc.dual_character {
        let f = named_sym(name, trunc).ok_or_else(|| bad(format!("unknown character `{name}`")))?;
        v.attach_series(necessary_condition_sym(&f).map_err(bad)?);
    }
    Ok(to_json(&VerdictDoc::from_verdict(doc.name, &v, max_arity - 1, None)))
}

/// Quadratic dual as a presentation document.
#[pyfunction]
fn quadratic_dual(presentation: &str) -> PyResult<String> {
    let (doc, p) = parse(presentation)?;
    let d = dual::quadratic_dual(&p).map_err(bad)?;
    Ok(to_json(&PresentationDoc::from_presentation(doc.name.map(|n| format!("{n}-dual")), &d)))
}

/// Positivity test on a named dual series or character.
#[pyfunction]
#[pyo3(signature = (dual, trunc=6, character=false))]
fn necessary_condition(dual: &str, trunc: usize, character: bool) -> PyResult<String> {
    let report = if character {
        let f = named_sym(dual, trunc).ok_or_else(|| bad(format!("unknown character `{dual}`")))?;
        necessary_condition_sym(&f)
    } else {
        let f = named_egf(dual, trunc).ok_or_else(|| bad(format!("unknown series `{dual}`")))?;
        necessary_condition_egf(&f)
    }
    .map_err(bad)?;
    Ok(to_json(&SeriesReportDoc::from_report(&report)))
}

/// A named series as a series document.
#[pyfunction]
#[pyo3(signature = (name, trunc=6, character=false))]
fn series(name: &str, trunc: usize, character: bool) -> PyResult<String> {
    let doc = if character {
        SeriesDoc::from_sym(&named_sym(name, trunc).ok_or_else(|| bad(format!("unknown character `{name}`")))?)
    } else {
        SeriesDoc::from_egf(&named_egf(name, trunc).ok_or_else(|| bad(format!("unknown series `{name}`")))?)
    };
    Ok(to_json(&doc))
}

/// Filtered dimensions of the enveloping algebra against the trivial algebra.
#[pyfunction]
#[pyo3(signature = (presentation, algebra, depth=3))]
fn uea_compare(presentation: &str, algebra: &str, depth: usize) -> PyResult<String> {
    let (doc, p) = parse(presentation)?;
    let a = AlgebraDoc::parse(algebra).map_err(bad)?.to_algebra(doc.symmetric.as_ref()).map_err(bad)?;
    a.validate(&p).map_err(bad)?;
    let rep = pbw_compare(&p, &a, depth).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(to_json(&DimReportDoc::from_report(&rep, depth)))
}

#[pymodule]
#[pyo3(name = "operad_pbw")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(pbw, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_dual, m)?)?;
    m.add_function(wrap_pyfunction!(necessary_condition, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(uea_compare, m)?)?;
    Ok(())
}
