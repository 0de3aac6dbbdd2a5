use std::path::Path;
use std::time::Duration;

use serde::Serialize;

use operad_pbw::dual::quadratic_dual;
use operad_pbw::format::{
    to_json, BasisDoc, DimReportDoc, OrderDoc, PresentationDoc, SeriesDoc, SeriesReportDoc, VerdictDoc,
};
use operad_pbw::groebner::{
    complete_with, first_nonreducing_overlap, normal_monomial_counts, verified, CompletionOptions, GroebnerBasis,
    Presentation,
};
use operad_pbw::pbw::{pbw_verdict, Conclusion, Source};
use operad_pbw::series::named::{named_egf, named_sym, to_qpoly, EGF_NAMES, SYM_NAMES};
use operad_pbw::series::{necessary_condition_egf, necessary_condition_sym, PowerSeries, SeriesReport};
use operad_pbw::trees::{MonomialOrder, OrderKind};
use operad_pbw::uea::{enveloping_presentation, pbw_compare, DimVerdict, UeaError};

use crate::load::{self, Input};
use crate::{render, CliError, Command, Common, Outcome, SeriesCmd, UeaCmd};

/// Commands whose `--out` receives a computed object rather than the report.
pub(crate) fn out_is_payload(cmd: &Command) -> bool {
    matches!(cmd, Command::Gb { .. } | Command::Dual { .. })
}

fn write(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::input(e.to_string())
}

fn options(c: &Common, max_arity: usize) -> CompletionOptions {
    CompletionOptions { max_arity, budget: c.budget_seconds.map(Duration::from_secs), max_elements: None }
}

fn complete(c: &Common, p: &Presentation, order: &MonomialOrder, max_arity: usize) -> Result<GroebnerBasis, CliError> {
    complete_with(p, order, &options(c, max_arity)).map_err(failed)
}

fn outcome<T: Serialize>(code: u8, text: String, report: &T) -> Outcome {
    Outcome { code, text, json: to_json(report) }
}

/// A basis for `input`, certified up to `max_arity` when possible.
fn basis_for(c: &Common, input: &Input, max_arity: usize) -> Result<GroebnerBasis, CliError> {
    match input {
        Input::Presentation(doc, p) => {
            let order = load::order(c, doc.order.as_ref(), &p.signature)?;
            complete(c, p, &order, max_arity)
        }
        Input::Basis(doc, g) => {
            let order = load::order(c, Some(&doc.order), &g.signature)?;
            let g = GroebnerBasis::from_elements(g.signature.clone(), order, g.elements().to_vec()).map_err(failed)?;
            Ok(verified(g, max_arity))
        }
    }
}

fn presentation_of(input: &Input) -> (PresentationDoc, Presentation) {
    match input {
        Input::Presentation(doc, p) => (doc.clone(), p.clone()),
        Input::Basis(_, g) => {
            let p = Presentation { signature: g.signature.clone(), relations: g.elements().to_vec() };
            (PresentationDoc::default(), p)
        }
    }
}

#[derive(Serialize)]
struct GbReport<'a> {
    name: &'a str,
    certified: bool,
    certified_arity: usize,
    dims: &'a [usize],
    basis: &'a BasisDoc,
}

pub fn gb(c: &Common, path: &Path) -> Result<Outcome, CliError> {
    let (doc, p) = load::presentation(path)?;
    let name = doc.name.clone().unwrap_or_else(|| stem(path));
    let order = load::order(c, doc.order.as_ref(), &p.signature)?;
    let g = complete(c, &p, &order, c.max_arity)?;
    let dims = normal_monomial_counts(&g, c.max_arity).map_err(failed)?;
    let basis = BasisDoc::from_basis(Some(name.clone()), &g);
    if let Some(out) = &c.out {
        write(out, &to_json(&basis))?;
    }
    let report = GbReport {
        name: &name,
        certified: g.certified,
        certified_arity: g.certified_arity,
        dims: &dims,
        basis: &basis,
    };
    Ok(outcome(if g.certified { 0 } else { 2 }, render::basis(&name, &g, &dims), &report))
}

#[derive(Serialize)]
struct VerifyReport {
    name: String,
    verified: bool,
    max_arity: usize,
    order: OrderDoc,
    leading: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonreducing: Option<String>,
}

pub fn verify(c: &Common, path: &Path) -> Result<Outcome, CliError> {
    let input = load::input(path)?;
    let name = input.name(path);
    let g = match &input {
        Input::Basis(..) => basis_for(c, &input, c.max_arity)?,
        Input::Presentation(doc, p) => {
            let order = load::order(c, doc.order.as_ref(), &p.signature)?;
            let g = GroebnerBasis::from_elements(p.signature.clone(), order, p.relations.clone()).map_err(failed)?;
            verified(g, c.max_arity)
        }
    };
    let nonreducing =
        if g.certified { None } else { first_nonreducing_overlap(&g, c.max_arity).map(|e| e.to_string()) };
    let report = VerifyReport {
        name,
        verified: g.certified,
        max_arity: c.max_arity,
        order: OrderDoc::from_order(&g.order),
        leading: g.leading_monomials().iter().map(ToString::to_string).collect(),
        nonreducing,
    };
    let text = render::verify(&report.name, &g, c.max_arity, report.nonreducing.as_deref());
    Ok(outcome(if g.certified { 0 } else { 2 }, text, &report))
}

/// Series test through the dual's dimensions; only sound for Koszul operads,
/// which a quadratic basis guarantees.
fn dual_series(c: &Common, p: &Presentation) -> Result<Option<SeriesReport>, CliError> {
    let d = quadratic_dual(p).map_err(failed)?;
    let order = MonomialOrder::for_signature(OrderKind::PathLex, &d.signature);
    let gd = complete(c, &d, &order, c.trunc)?;
    if !gd.certified {
        return Ok(None);
    }
    let dims = normal_monomial_counts(&gd, c.trunc).map_err(failed)?;
    let f = to_qpoly(&PowerSeries::egf_from_arity_dims(&dims));
    Ok(Some(necessary_condition_egf(&f).map_err(failed)?))
}

pub fn pbw(c: &Common, path: &Path, algebra: Option<&Path>, depth: usize) -> Result<Outcome, CliError> {
    if c.max_arity < 2 {
        return Err(CliError::input("--max-arity must be at least 2"));
    }
    let input = load::input(path)?;
    let name = input.name(path);
    let g = basis_for(c, &input, c.max_arity)?;
    if !g.certified {
        return Err(CliError::incomplete(format!(
            "{}: basis not certified up to arity {}; raise --budget-seconds or lower --max-arity",
            path.display(),
            c.max_arity
        )));
    }
    let degree = c.max_arity - 1;
    let mut v = pbw_verdict(&g, degree).map_err(failed)?;
    let (doc, p) = presentation_of(&input);
    if let Some(s) = &doc.dual_series {
        let f = named_egf(s, c.trunc)
            .ok_or_else(|| CliError::input(format!("unknown series `{s}`; known: {}", EGF_NAMES.join(", "))))?;
        v.attach_series(necessary_condition_egf(&f).map_err(failed)?);
    } else if let Some(s) = &doc.dual_character {
        let f = named_sym(s, c.trunc)
            .ok_or_else(|| CliError::input(format!("unknown character `{s}`; known: {}", SYM_NAMES.join(", "))))?;
        v.attach_series(necessary_condition_sym(&f).map_err(failed)?);
    } else if p.signature.all_binary() && g.elements().iter().all(|e| e.arity() == 3) {
        match dual_series(c, &p)? {
            Some(report) => v.attach_series(report),
            None => v.add_finding(
                Source::SeriesPositivity,
                Conclusion::Inconclusive,
                "dual basis not certified up to the truncation",
            ),
        }
    }
    let mut witness = None;
    if let Some(apath) = algebra {
        let a = load::algebra(apath, &doc)?;
        a.validate(&p).map_err(|e| CliError::input(format!("{}: {e}", apath.display())))?;
        match pbw_compare(&p, &a, depth) {
            Ok(rep) => {
                let (conclusion, detail) = if rep.refutes() {
                    let n = (0..=depth)
                        .find(|&n| rep.filtered_dims[n] < rep.reference_filtered[n])
                        .expect("refuting degree");
                    (
                        Conclusion::Refuted,
                        format!(
                            "dim F_{n} is {} for the algebra and {} for the trivial algebra",
                            rep.filtered_dims[n], rep.reference_filtered[n]
                        ),
                    )
                } else if let DimVerdict::MismatchAt(n) = rep.verdict {
                    (
                        Conclusion::Inconclusive,
                        format!("degree {n} differs, but truncated dimensions only bound from above"),
                    )
                } else {
                    (Conclusion::Inconclusive, format!("filtered dimensions agree up to length {depth}"))
                };
                v.add_finding(Source::EnvelopingWitness, conclusion, detail);
                witness = Some(rep);
            }
            Err(e @ UeaError::ResourceBound { .. }) => {
                v.add_finding(Source::EnvelopingWitness, Conclusion::Inconclusive, e.to_string())
            }
            Err(e) => return Err(failed(e)),
        }
    }
    let code = match v.conclusion() {
        Conclusion::Proven => 0,
        Conclusion::Refuted => 3,
        Conclusion::Inconclusive => 4,
    };
    let report = VerdictDoc::from_verdict(Some(name.clone()), &v, degree, witness.as_ref().map(|r| (r, depth)));
    Ok(outcome(code, render::verdict(&name, &g, &report), &report))
}

pub fn series(c: &Common, action: SeriesCmd) -> Result<Outcome, CliError> {
    match action {
        SeriesCmd::Necessary { dual, input, character } => {
            let report = match (dual, input) {
                (Some(name), _) if character => {
                    let f = named_sym(&name, c.trunc).ok_or_else(|| {
                        CliError::input(format!("unknown character `{name}`; known: {}", SYM_NAMES.join(", ")))
                    })?;
                    necessary_condition_sym(&f)
                }
                (Some(name), _) => {
                    let f = named_egf(&name, c.trunc).ok_or_else(|| {
                        CliError::input(format!("unknown series `{name}`; known: {}", EGF_NAMES.join(", ")))
                    })?;
                    necessary_condition_egf(&f)
                }
                (None, Some(path)) => {
                    let doc = load::series(&path)?;
                    if doc.is_symmetric() {
                        necessary_condition_sym(&doc.to_sym().map_err(failed)?)
                    } else {
                        necessary_condition_egf(&doc.to_egf().map_err(failed)?)
                    }
                }
                (None, None) => return Err(CliError::input("give --dual NAME or --input FILE")),
            }
            .map_err(failed)?;
            let doc = SeriesReportDoc::from_report(&report);
            Ok(outcome(if report.passes() { 0 } else { 3 }, render::series_report(&report), &doc))
        }
        SeriesCmd::Show { name, character } => {
            if character {
                let f =
                    named_sym(&name, c.trunc).ok_or_else(|| CliError::input(format!("unknown character `{name}`")))?;
                Ok(outcome(0, format!("{f}\n"), &SeriesDoc::from_sym(&f)))
            } else {
                let f = named_egf(&name, c.trunc).ok_or_else(|| CliError::input(format!("unknown series `{name}`")))?;
                Ok(outcome(0, format!("{f}\n"), &SeriesDoc::from_egf(&f)))
            }
        }
    }
}

#[derive(Serialize)]
struct DualReport<'a> {
    name: &'a str,
    certified: bool,
    dims: &'a [usize],
    dual: &'a PresentationDoc,
}

pub fn dual(c: &Common, path: &Path) -> Result<Outcome, CliError> {
    let (doc, p) = load::presentation(path)?;
    let name = format!("{}-dual", doc.name.clone().unwrap_or_else(|| stem(path)));
    let d = quadratic_dual(&p).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let order = load::order(c, None, &d.signature)?;
    let g = complete(c, &d, &order, c.max_arity)?;
    let dims = normal_monomial_counts(&g, c.max_arity).map_err(failed)?;
    let out = PresentationDoc::from_presentation(Some(name.clone()), &d);
    if let Some(path) = &c.out {
        write(path, &to_json(&out))?;
    }
    let report = DualReport { name: &name, certified: g.certified, dims: &dims, dual: &out };
    Ok(outcome(if g.certified { 0 } else { 2 }, render::presentation(&name, &d, &dims), &report))
}

#[derive(Serialize)]
struct AssocReport {
    generators: Vec<String>,
    relations: Vec<String>,
    unital: bool,
}

pub fn uea(_c: &Common, action: UeaCmd) -> Result<Outcome, CliError> {
    match action {
        UeaCmd::Build { presentation, algebra } => {
            let (doc, p) = load::presentation(&presentation)?;
            let a = load::algebra(&algebra, &doc)?;
            let ap = enveloping_presentation(&p, &a).map_err(failed)?;
            let report = AssocReport {
                generators: ap.names.clone(),
                relations: ap.relations.iter().map(|r| ap.display_element(r)).collect(),
                unital: ap.unital,
            };
            let mut text = format!("generators: {}\n", report.generators.join(", "));
            for r in &report.relations {
                text.push_str(&format!("  {r} = 0\n"));
            }
            Ok(outcome(0, text, &report))
        }
        UeaCmd::Compare { presentation, algebra, depth } => {
            let (doc, p) = load::presentation(&presentation)?;
            let a = load::algebra(&algebra, &doc)?;
            a.validate(&p).map_err(|e| CliError::input(format!("{}: {e}", algebra.display())))?;
            let rep = pbw_compare(&p, &a, depth).map_err(|e| match e {
                UeaError::ResourceBound { .. } => CliError::incomplete(e.to_string()),
                e => failed(e),
            })?;
            let code = match rep.verdict {
                DimVerdict::MatchUpTo(_) => 0,
                _ if rep.refutes() => 3,
                _ => 4,
            };
            let doc = DimReportDoc::from_report(&rep, depth);
            Ok(outcome(code, render::dim_report(&doc), &doc))
        }
    }
}

#[derive(Serialize)]
struct DimsReport<'a> {
    name: &'a str,
    certified: bool,
    dims: &'a [usize],
}

pub fn dims(c: &Common, path: &Path) -> Result<Outcome, CliError> {
    let input = load::input(path)?;
    let name = input.name(path);
    let g = basis_for(c, &input, c.max_arity)?;
    let dims = normal_monomial_counts(&g, c.max_arity).map_err(failed)?;
    let text = format!("{name}: {}\n", render::join(&dims));
    Ok(outcome(if g.certified { 0 } else { 2 }, text, &DimsReport { name: &name, certified: g.certified, dims: &dims }))
}
