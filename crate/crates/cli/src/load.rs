use std::path::Path;

use operad_pbw::format::{AlgebraDoc, BasisDoc, PresentationDoc, SeriesDoc};
use operad_pbw::groebner::{GroebnerBasis, Presentation};
use operad_pbw::trees::{MonomialOrder, OrderKind, Signature};
use operad_pbw::uea::AlgebraData;

use crate::{CliError, Common, OrderArg};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::input(format!("{}: {e}", path.display()))
}

pub enum Input {
    Presentation(PresentationDoc, Presentation),
    Basis(BasisDoc, GroebnerBasis),
}

impl Input {
    pub fn name(&self, path: &Path) -> String {
        let stored = match self {
            Input::Presentation(d, _) => d.name.clone(),
            Input::Basis(d, _) => d.name.clone(),
        };
        stored.unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default())
    }
}

pub fn presentation(path: &Path) -> Result<(PresentationDoc, Presentation), CliError> {
    let doc = PresentationDoc::parse(&read(path)?).map_err(|e| located(path, e))?;
    let p = doc.to_presentation().map_err(|e| located(path, e))?;
    Ok((doc, p))
}

/// A presentation, or a basis when the document lists `elements`.
pub fn input(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| located(path, e))?;
    if value.get("elements").is_some() {
        let doc: BasisDoc = serde_json::from_value(value).map_err(|e| located(path, e))?;
        let g = doc.to_basis().map_err(|e| located(path, e))?;
        Ok(Input::Basis(doc, g))
    } else {
        let doc: PresentationDoc = serde_json::from_value(value).map_err(|e| located(path, e))?;
        let p = doc.to_presentation().map_err(|e| located(path, e))?;
        Ok(Input::Presentation(doc, p))
    }
}

pub fn algebra(path: &Path, doc: &PresentationDoc) -> Result<AlgebraData, CliError> {
    let a = AlgebraDoc::parse(&read(path)?).map_err(|e| located(path, e))?;
    a.to_algebra(doc.symmetric.as_ref()).map_err(|e| located(path, e))
}

pub fn series(path: &Path) -> Result<SeriesDoc, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| located(path, e))
}

/// Flag order first, then the order stored in the input, then path-lex.
pub fn order(
    c: &Common,
    stored: Option<&operad_pbw::format::OrderDoc>,
    sig: &Signature,
) -> Result<MonomialOrder, CliError> {
    let kind = match (c.order, stored) {
        (Some(OrderArg::Pathlex), _) => OrderKind::PathLex,
        (Some(OrderArg::PathOppDeglex), _) => OrderKind::PathOppositeDegLex,
        (None, Some(o)) => o.kind,
        (None, None) => OrderKind::PathLex,
    };
    let gens = if !c.gen_order.is_empty() {
        c.gen_order.clone()
    } else {
        stored.map(|o| o.generator_order.clone()).unwrap_or_default()
    };
    let o = if gens.is_empty() {
        MonomialOrder::for_signature(kind, sig)
    } else {
        MonomialOrder::new(kind, gens).map_err(|e| CliError::input(e.to_string()))?
    };
    o.covers(sig).map_err(|e| CliError::input(e.to_string()))?;
    Ok(o)
}
