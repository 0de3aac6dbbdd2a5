//! JSON documents for presentations, bases, series, algebras and reports.
//!
//! Rationals are written as strings `"p/q"`; on input plain integers are
//! accepted as well. Trees use the canonical functional syntax.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{Element, GroebnerBasis, GroebnerError, Presentation};
use crate::pbw::{NumericCheck, PbwVerdict};
use crate::rational::{format_q, parse_q, Q};
use crate::series::{Partition, PowerSeries, QPoly, SeriesData, SeriesReport, SymFun};
use crate::symmetric::{SymmetricPresentation, Symmetry};
use crate::trees::{Generator, MonomialOrder, OrderKind, ShuffleTree, Signature, TreeError};
use crate::uea::{AlgebraData, AlgebraOp, DimReport, DimVerdict, UeaError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("relation {index}: {source}")]
    Relation { index: usize, source: GroebnerError },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error("bad rational `{0}`")]
    Rational(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Text(String),
    Int(i64),
}

impl RationalDoc {
    pub fn value(&self) -> Result<Q, FormatError> {
        match self {
            RationalDoc::Text(s) => parse_q(s).ok_or_else(|| FormatError::Rational(s.clone())),
            RationalDoc::Int(n) => Ok(Q::from_integer((*n).into())),
        }
    }
}

impl From<&Q> for RationalDoc {
    fn from(q: &Q) -> Self {
        RationalDoc::Text(format_q(q))
    }
}

fn rationals(v: &[Q]) -> Vec<String> {
    v.iter().map(format_q).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: RationalDoc,
    pub tree: String,
}

/// A relation as a list of terms or as text like `"m(m(1,2),3) - m(1,m(2,3))"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationDoc {
    Terms(Vec<TermDoc>),
    Text(String),
}

impl RelationDoc {
    pub fn from_element(e: &Element) -> Self {
        RelationDoc::Terms(e.terms().map(|(t, c)| TermDoc { coeff: c.into(), tree: t.to_string() }).collect())
    }

    pub fn to_element(&self, sig: &Signature) -> Result<Element, GroebnerError> {
        match self {
            RelationDoc::Text(s) => Element::parse(s, sig),
            RelationDoc::Terms(terms) => {
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    let c = t.coeff.value().map_err(|e| GroebnerError::Unsupported(e.to_string()))?;
                    out.push((c, ShuffleTree::parse(&t.tree, sig)?));
                }
                Element::from_terms(out)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generator_order: Vec<String>,
}

impl OrderDoc {
    pub fn from_order(o: &MonomialOrder) -> Self {
        OrderDoc { kind: o.kind(), generator_order: o.generator_order().to_vec() }
    }

    pub fn to_order(&self, sig: &Signature) -> Result<MonomialOrder, TreeError> {
        if self.generator_order.is_empty() {
            Ok(MonomialOrder::for_signature(self.kind, sig))
        } else {
            MonomialOrder::new(self.kind, self.generator_order.clone())
        }
    }
}

/// A presentation in shuffle form, or in symmetric form under `symmetric`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PresentationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Generator>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<SymmetricPresentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderDoc>,
    /// Named generating series of the Koszul dual, used by the series test.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_series: Option<String>,
    /// Named character of the Koszul dual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_character: Option<String>,
}

impl PresentationDoc {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_presentation(name: Option<String>, p: &Presentation) -> Self {
        PresentationDoc {
            name,
            generators: p.signature.gens().iter().map(|g| (**g).clone()).collect(),
            relations: p.relations.iter().map(RelationDoc::from_element).collect(),
            ..Default::default()
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation, FormatError> {
        if let Some(sym) = &self.symmetric {
            if !self.generators.is_empty() || !self.relations.is_empty() {
                return Err(FormatError::Invalid("give either a symmetric block or generators and relations".into()));
            }
            return Ok(sym.expand()?);
        }
        let sig = Signature::new(self.generators.clone())?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (index, r) in self.relations.iter().enumerate() {
            relations.push(r.to_element(&sig).map_err(|source| FormatError::Relation { index, source })?);
        }
        Ok(Presentation::new(sig, relations)?)
    }

    pub fn order(&self, sig: &Signature) -> Result<Option<MonomialOrder>, FormatError> {
        Ok(self.order.as_ref().map(|o| o.to_order(sig)).transpose()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<Generator>,
    pub order: OrderDoc,
    pub certified_arity: usize,
    pub certified: bool,
    pub elements: Vec<RelationDoc>,
    /// Leading monomials, parallel to `elements`.
    #[serde(default)]
    pub leading: Vec<String>,
}

impl BasisDoc {
    pub fn from_basis(name: Option<String>, g: &GroebnerBasis) -> Self {
        BasisDoc {
            name,
            generators: g.signature.gens().iter().map(|x| (**x).clone()).collect(),
            order: OrderDoc::from_order(&g.order),
            certified_arity: g.certified_arity,
            certified: g.certified,
            elements: g.elements().iter().map(RelationDoc::from_element).collect(),
            leading: g.leading_monomials().iter().map(ToString::to_string).collect(),
        }
    }

    /// The stored elements, uncertified; certification is recomputed by the caller.
    pub fn to_basis(&self) -> Result<GroebnerBasis, FormatError> {
        let sig = Signature::new(self.generators.clone())?;
        let order = self.order.to_order(&sig)?;
        let mut elements = Vec::with_capacity(self.elements.len());
        for (index, r) in self.elements.iter().enumerate() {
            elements.push(r.to_element(&sig).map_err(|source| FormatError::Relation { index, source })?);
        }
        Ok(GroebnerBasis::from_elements(sig, order, elements)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTermDoc {
    pub exp: i32,
    pub coeff: RationalDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<RationalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_poly: Option<Vec<QTermDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub truncation: usize,
    pub coeffs: Vec<CoeffDoc>,
}

impl SeriesDoc {
    pub fn from_egf(f: &PowerSeries<QPoly>) -> Self {
        let coeffs = (0..=f.truncation())
            .map(|n| {
                let c = f.coeff(n);
                match c.as_constant() {
                    Some(v) => CoeffDoc { degree: Some(n), partition: None, value: Some((&v).into()), q_poly: None },
                    None => CoeffDoc {
                        degree: Some(n),
                        partition: None,
                        value: None,
                        q_poly: Some(c.terms().map(|(exp, x)| QTermDoc { exp, coeff: x.into() }).collect()),
                    },
                }
            })
            .collect();
        SeriesDoc { truncation: f.truncation(), coeffs }
    }

    pub fn from_sym(f: &SymFun) -> Self {
        let coeffs = f
            .terms()
            .map(|(l, c)| CoeffDoc {
                degree: None,
                partition: Some(l.parts().to_vec()),
                value: Some(c.into()),
                q_poly: None,
            })
            .collect();
        SeriesDoc { truncation: f.truncation(), coeffs }
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().any(|c| c.partition.is_some())
    }

    pub fn to_egf(&self) -> Result<PowerSeries<QPoly>, FormatError> {
        let mut coeffs = vec![QPoly::default(); self.truncation + 1];
        for c in &self.coeffs {
            let n = c.degree.ok_or_else(|| FormatError::Invalid("series coefficient without degree".into()))?;
            if n > self.truncation {
                return Err(FormatError::Invalid(format!("degree {n} above truncation {}", self.truncation)));
            }
            if let Some(v) = &c.value {
                coeffs[n].add_term(0, v.value()?);
            }
            for t in c.q_poly.iter().flatten() {
                coeffs[n].add_term(t.exp, t.coeff.value()?);
            }
        }
        Ok(PowerSeries::from_coeffs(coeffs, self.truncation))
    }

    pub fn to_sym(&self) -> Result<SymFun, FormatError> {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let l = c
                .partition
                .clone()
                .ok_or_else(|| FormatError::Invalid("character coefficient without partition".into()))?;
            let v =
                c.value.as_ref().ok_or_else(|| FormatError::Invalid("character coefficient without value".into()))?;
            terms.push((Partition::new(l), v.value()?));
        }
        Ok(SymFun::from_terms(terms, self.truncation))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_exponent: Option<i32>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTermDoc {
    pub partition: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReportDoc {
    pub series: SeriesDoc,
    pub nonnegative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur_positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur: Option<Vec<SchurTermDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<ViolationDoc>,
}

impl SeriesReportDoc {
    pub fn from_report(r: &SeriesReport) -> Self {
        let series = match &r.series {
            SeriesData::Egf(f) => SeriesDoc::from_egf(f),
            SeriesData::Sym(f) => SeriesDoc::from_sym(f),
        };
        SeriesReportDoc {
            series,
            nonnegative: r.nonnegative,
            schur_positive: r.schur_positive,
            schur: r.schur.as_ref().map(|s| {
                s.iter().map(|(l, c)| SchurTermDoc { partition: l.parts().to_vec(), value: format_q(c) }).collect()
            }),
            first_violation: r.first_violation.as_ref().map(|v| ViolationDoc {
                degree: v.degree,
                partition: v.partition.as_ref().map(|p| p.parts().to_vec()),
                q_exponent: v.q_exponent,
                value: format_q(&v.value),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpDoc {
    pub gen: String,
    pub table: Vec<Vec<Vec<RationalDoc>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub basis: Vec<String>,
    pub ops: Vec<OpDoc>,
}

impl AlgebraDoc {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_algebra(v: &AlgebraData) -> Self {
        AlgebraDoc {
            dim: v.dim,
            basis: v.basis.clone(),
            ops: v
                .ops
                .iter()
                .map(|op| OpDoc {
                    gen: op.gen.clone(),
                    table: op
                        .table
                        .iter()
                        .map(|r| r.iter().map(|v| v.iter().map(RationalDoc::from).collect()).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    /// Structure constants; opposites of nonsymmetric generators default to the
    /// transposed table of the generator when `sym` is given.
    pub fn to_algebra(&self, sym: Option<&SymmetricPresentation>) -> Result<AlgebraData, FormatError> {
        if self.basis.len() != self.dim {
            return Err(FormatError::Invalid(format!("{} basis names for dimension {}", self.basis.len(), self.dim)));
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let mut table = Vec::with_capacity(op.table.len());
            for row in &op.table {
                let mut r = Vec::with_capacity(row.len());
                for v in row {
                    r.push(v.iter().map(RationalDoc::value).collect::<Result<Vec<_>, _>>()?);
                }
                table.push(r);
            }
            ops.push(AlgebraOp { gen: op.gen.clone(), table });
        }
        for g in sym.map(|s| s.generators.as_slice()).unwrap_or_default() {
            let Some(opp) = g.opposite_name() else { continue };
            if g.symmetry != Symmetry::None || ops.iter().any(|o| o.gen == opp) {
                continue;
            }
            if let Some(base) = ops.iter().find(|o| o.gen == g.name) {
                let d = self.dim;
                let table = (0..d)
                    .map(|a| {
                        (0..d).map(|b| base.table.get(b).and_then(|r| r.get(a)).cloned().unwrap_or_default()).collect()
                    })
                    .collect();
                ops.push(AlgebraOp { gen: opp, table });
            }
        }
        Ok(AlgebraData::new(self.basis.clone(), ops)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericDoc {
    pub status: String,
    pub checked_to: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

impl NumericDoc {
    pub fn new(check: NumericCheck, checked_to: usize) -> Self {
        let (status, degree) = match check {
            NumericCheck::ConsistentUpTo(_) => ("consistent", None),
            NumericCheck::FailsAt(n) => ("fails", Some(n)),
            NumericCheck::Undetermined(n) => ("undetermined", Some(n)),
        };
        NumericDoc { status: status.into(), checked_to, degree }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimTableDoc {
    pub operad: Vec<usize>,
    pub derivative: Vec<usize>,
    pub u0: Vec<usize>,
    pub composed: Vec<String>,
    pub forced: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingDoc {
    pub source: String,
    pub conclusion: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub conclusion: String,
    pub sufficient_left_comb: bool,
    pub numeric: NumericDoc,
    pub details: DimTableDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DimReportDoc>,
    pub findings: Vec<FindingDoc>,
}

impl VerdictDoc {
    pub fn from_verdict(
        name: Option<String>,
        v: &PbwVerdict,
        checked_to: usize,
        witness: Option<(&DimReport, usize)>,
    ) -> Self {
        let t = &v.details;
        VerdictDoc {
            name,
            conclusion: v.conclusion().name().into(),
            sufficient_left_comb: v.sufficient_left_comb == crate::pbw::LeftComb::Yes,
            numeric: NumericDoc::new(v.numeric_check, checked_to),
            details: DimTableDoc {
                operad: t.operad.clone(),
                derivative: t.derivative.clone(),
                u0: t.u0.clone(),
                composed: rationals(&t.composed),
                forced: rationals(&t.forced),
            },
            series: v.series_necessary.as_ref().map(SeriesReportDoc::from_report),
            witness: witness.map(|(r, depth)| DimReportDoc::from_report(r, depth)),
            findings: v
                .narrative
                .iter()
                .map(|f| FindingDoc {
                    source: f.source.name().into(),
                    conclusion: f.conclusion.name().into(),
                    detail: f.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVerdictDoc {
    pub status: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReportDoc {
    pub depth: usize,
    pub filtered_dims: Vec<usize>,
    pub graded_dims: Vec<usize>,
    pub reference_filtered: Vec<usize>,
    pub reference_dims: Vec<usize>,
    pub verdict: DimVerdictDoc,
    pub refutes: bool,
}

impl DimReportDoc {
    pub fn from_report(r: &DimReport, depth: usize) -> Self {
        let verdict = match r.verdict {
            DimVerdict::MatchUpTo(n) => DimVerdictDoc { status: "match".into(), degree: n },
            DimVerdict::MismatchAt(n) => DimVerdictDoc { status: "mismatch".into(), degree: n },
        };
        DimReportDoc {
            depth,
            filtered_dims: r.filtered_dims.clone(),
            graded_dims: r.graded_dims.clone(),
            reference_filtered: r.reference_filtered.clone(),
            reference_dims: r.reference_dims.clone(),
            verdict,
            refutes: r.refutes(),
        }
    }
}

/// Pretty JSON with a trailing newline; key order follows the structs, so the
/// output is byte-stable.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::complete;
    use crate::groebner::test_support::{pathlex, prelie};
    use crate::rational::q;
    use crate::series::named::pois_egf;
    use crate::symmetric::standard;

    #[test]
    fn presentation_round_trip() {
        let p = prelie();
        let doc = PresentationDoc::from_presentation(Some("prelie".into()), &p);
        let text = to_json(&doc);
        let back = PresentationDoc::parse(&text).unwrap();
        assert_eq!(back, doc);
        let p2 = back.to_presentation().unwrap();
        assert_eq!(p2.relations, p.relations);
        assert_eq!(to_json(&PresentationDoc::from_presentation(Some("prelie".into()), &p2)), text);
    }

    #[test]
    fn text_relations_and_symmetric_blocks() {
        let doc = PresentationDoc::parse(
            r#"{"generators":[{"name":"m","arity":2}],"relations":["m(m(1,2),3) - m(1,m(2,3))"]}"#,
        )
        .unwrap();
        assert_eq!(doc.to_presentation().unwrap().relations.len(), 1);
        let doc = PresentationDoc::parse(
            r#"{"symmetric":{"generators":[{"name":"b","symmetry":"antisymmetric"}],"relations":["b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2)"]}}"#,
        )
        .unwrap();
        assert_eq!(doc.to_presentation().unwrap().relations.len(), 1);
    }

    #[test]
    fn parse_errors_carry_locations() {
        let err = PresentationDoc::parse("{\"generators\": [}").unwrap_err();
        assert!(err.to_string().contains("line 1"));
        let doc =
            PresentationDoc::parse(r#"{"generators":[{"name":"m","arity":2}],"relations":["m(m(1,2),3) - m(1,"]}"#)
                .unwrap();
        assert!(matches!(doc.to_presentation(), Err(FormatError::Relation { index: 0, .. })));
    }

    #[test]
    fn basis_round_trip() {
        let p = prelie();
        let g = complete(&p, &pathlex(&p.signature), 4).unwrap();
        let doc = BasisDoc::from_basis(None, &g);
        let back: BasisDoc = serde_json::from_str(&to_json(&doc)).unwrap();
        let g2 = back.to_basis().unwrap();
        assert_eq!(g2.elements(), g.elements());
        assert_eq!(g2.leading_monomials(), g.leading_monomials());
        assert!(!g2.certified);
        assert!(crate::groebner::verified(g2, 4).certified);
    }

    #[test]
    fn series_round_trip() {
        let f = pois_egf(4);
        let doc = SeriesDoc::from_egf(&f);
        assert!(doc.coeffs[2].q_poly.is_some());
        assert_eq!(doc.to_egf().unwrap(), f);
        let s = crate::series::named::chi_lie(4);
        let doc = SeriesDoc::from_sym(&s);
        assert!(doc.is_symmetric());
        assert_eq!(doc.to_sym().unwrap(), s);
    }

    #[test]
    fn algebra_with_opposites_filled_in() {
        let doc = AlgebraDoc::parse(
            r#"{"dim":2,"basis":["x","y"],"ops":[{"gen":"m","table":[[[0,1],[0,0]],[["1/2",0],[0,0]]]}]}"#,
        )
        .unwrap();
        let sym = standard::assoc();
        let v = doc.to_algebra(Some(&sym)).unwrap();
        let opp = v.ops.iter().find(|o| o.gen == "m'").unwrap();
        assert_eq!(opp.table[0][1], vec![q(1) / q(2), q(0)]);
        assert_eq!(opp.table[1][0], vec![q(0), q(0)]);
        assert_eq!(opp.table[0][0], vec![q(0), q(1)]);
        assert_eq!(AlgebraDoc::from_algebra(&v).to_algebra(None).unwrap(), v);
        assert!(AlgebraDoc::parse(r#"{"dim":1,"basis":["x"],"ops":[{"gen":"m","table":[[["x"]]]}]}"#)
            .unwrap()
            .to_algebra(None)
            .is_err());
    }
}
