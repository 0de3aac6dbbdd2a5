//! Binary symmetric operads and their shuffle expansion.
//!
//! A binary generator `μ` of a symmetric operad is symmetric, antisymmetric or
//! has no symmetry. Its shuffle expansion has the generator `μ(1,2)`, plus the
//! opposite `μ(2,1)` in the last case. Relations are written with arbitrary
//! leaf labels; they are expanded over all relabelings and brought to shuffle
//! form by swapping children whose minima are out of order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::groebner::{split_terms, Element, GroebnerError, Presentation};
use crate::linalg::{EchelonBasis, SparseRow};
use crate::rational::Q;
use crate::trees::{Gen, Generator, Node, ShuffleTree, Signature, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymGenerator {
    pub name: String,
    pub symmetry: Symmetry,
    /// Name of the shuffle generator `μ(2,1)`; defaults to `name'`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opposite: Option<String>,
}

impl SymGenerator {
    pub fn new(name: impl Into<String>, symmetry: Symmetry) -> Self {
        SymGenerator { name: name.into(), symmetry, opposite: None }
    }

    pub fn with_opposite(mut self, name: impl Into<String>) -> Self {
        self.opposite = Some(name.into());
        self
    }

    pub fn opposite_name(&self) -> Option<String> {
        match self.symmetry {
            Symmetry::None => Some(self.opposite.clone().unwrap_or_else(|| format!("{}'", self.name))),
            _ => None,
        }
    }
}

/// Binary generators with symmetry types and relations in any leaf labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricPresentation {
    pub generators: Vec<SymGenerator>,
    pub relations: Vec<String>,
}

#[derive(Debug)]
enum Term {
    Leaf(usize),
    Op(usize, Box<Term>, Box<Term>),
}

struct Expander {
    gens: Vec<SymGenerator>,
    direct: Vec<Gen>,
    opposite: Vec<Option<Gen>>,
}

impl SymmetricPresentation {
    pub fn new(generators: Vec<SymGenerator>, relations: Vec<&str>) -> Self {
        SymmetricPresentation { generators, relations: relations.into_iter().map(String::from).collect() }
    }

    /// Shuffle generators: each `μ`, followed by its opposite when it has no symmetry.
    pub fn signature(&self) -> Result<Signature, TreeError> {
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(Generator::binary(g.name.clone()));
            if let Some(op) = g.opposite_name() {
                gens.push(Generator::binary(op).with_dual_sign(-1));
            }
        }
        Signature::new(gens)
    }

    /// The shuffle presentation spanned by all relabelings of the relations,
    /// given by a reduced echelon basis of that span in each arity.
    pub fn expand(&self) -> Result<Presentation, GroebnerError> {
        let sig = self.signature()?;
        let ex = Expander::new(&self.generators, &sig);
        let mut by_arity: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
        for text in &self.relations {
            let terms = ex.parse_relation(text)?;
            let n = arity_of(&terms)?;
            let out = by_arity.entry(n).or_default();
            for perm in permutations(n) {
                let mut e = Element::zero(n);
                for (c, t) in &terms {
                    let (sign, node) = ex.normalize(t, &perm);
                    let tree = ShuffleTree::new(node)?;
                    e.add_term(tree, &(c * Q::from_integer(sign.into())));
                }
                if !e.is_zero() {
                    out.push(e);
                }
            }
        }
        let mut relations = Vec::new();
        for (_, elements) in by_arity {
            relations.extend(span_basis(&elements));
        }
        Presentation::new(sig, relations)
    }
}

fn arity_of(terms: &[(Q, Term)]) -> Result<usize, GroebnerError> {
    fn leaves(t: &Term, out: &mut Vec<usize>) {
        match t {
            Term::Leaf(l) => out.push(*l),
            Term::Op(_, a, b) => {
                leaves(a, out);
                leaves(b, out);
            }
        }
    }
    let mut arity = None;
    for (_, t) in terms {
        let mut ls = Vec::new();
        leaves(t, &mut ls);
        ls.sort_unstable();
        let n = ls.len();
        if ls != (1..=n).collect::<Vec<_>>() {
            return Err(TreeError::LeafLabels { arity: n }.into());
        }
        match arity {
            None => arity = Some(n),
            Some(m) if m != n => return Err(GroebnerError::MixedArity(m, n)),
            _ => {}
        }
    }
    arity.ok_or(GroebnerError::ZeroRelation { index: 0 })
}

/// Reduced echelon basis of the span of same-arity elements.
pub(crate) fn span_basis(elements: &[Element]) -> Vec<Element> {
    let mut index: BTreeMap<ShuffleTree, usize> = BTreeMap::new();
    for e in elements {
        for (t, _) in e.terms() {
            index.entry(t.clone()).or_insert(0);
        }
    }
    let monomials: Vec<ShuffleTree> = index.keys().cloned().collect();
    for (i, t) in monomials.iter().enumerate() {
        index.insert(t.clone(), i);
    }
    let mut basis = EchelonBasis::new();
    for e in elements {
        let row: SparseRow = e.terms().map(|(t, c)| (index[t], c.clone())).collect();
        basis.insert(row);
    }
    basis
        .into_rref()
        .into_iter()
        .map(|row| Element::from_terms(row.into_iter().map(|(i, c)| (c, monomials[i].clone()))).expect("one arity"))
        .collect()
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            go(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    go(0, &mut cur, &mut out);
    out.sort();
    out
}

impl Expander {
    fn new(gens: &[SymGenerator], sig: &Signature) -> Self {
        let direct = gens.iter().map(|g| sig.get(&g.name).expect("in signature").clone()).collect();
        let opposite =
            gens.iter().map(|g| g.opposite_name().map(|n| sig.get(&n).expect("in signature").clone())).collect();
        Expander { gens: gens.to_vec(), direct, opposite }
    }

    fn parse_relation(&self, text: &str) -> Result<Vec<(Q, Term)>, GroebnerError> {
        let mut out = Vec::new();
        for (c, body) in split_terms(text)? {
            let mut pos = 0;
            let t = self.term(body.as_bytes(), body, &mut pos)?;
            skip_ws(body.as_bytes(), &mut pos);
            if pos != body.len() {
                return Err(TreeError::Parse { pos, msg: format!("trailing input in `{body}`") }.into());
            }
            out.push((c, t));
        }
        Ok(out)
    }

    fn term(&self, src: &[u8], text: &str, pos: &mut usize) -> Result<Term, TreeError> {
        skip_ws(src, pos);
        let start = *pos;
        while *pos < src.len() && !matches!(src[*pos], b'(' | b')' | b',') && !src[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        let word = &text[start..*pos];
        if word.is_empty() {
            return Err(TreeError::Parse { pos: start, msg: "expected generator name or leaf label".into() });
        }
        if word.bytes().all(|b| b.is_ascii_digit()) {
            let label = word.parse().map_err(|_| TreeError::Parse { pos: start, msg: "bad leaf label".into() })?;
            return Ok(Term::Leaf(label));
        }
        let g = self
            .gens
            .iter()
            .position(|g| g.name == word)
            .ok_or_else(|| TreeError::UnknownGenerator(word.to_string()))?;
        let expect = |c: u8, pos: &mut usize| {
            skip_ws(src, pos);
            if src.get(*pos) == Some(&c) {
                *pos += 1;
                Ok(())
            } else {
                Err(TreeError::Parse { pos: *pos, msg: format!("expected `{}`", c as char) })
            }
        };
        expect(b'(', pos)?;
        let a = self.term(src, text, pos)?;
        expect(b',', pos)?;
        let b = self.term(src, text, pos)?;
        expect(b')', pos)?;
        Ok(Term::Op(g, Box::new(a), Box::new(b)))
    }

    /// Shuffle form of `t` with leaf `l` renamed to `perm[l-1]`, with the sign
    /// picked up from antisymmetric swaps.
    fn normalize(&self, t: &Term, perm: &[usize]) -> (i64, Node) {
        match t {
            Term::Leaf(l) => (1, Node::Leaf(perm[l - 1])),
            Term::Op(g, a, b) => {
                let (sa, na) = self.normalize(a, perm);
                let (sb, nb) = self.normalize(b, perm);
                let sign = sa * sb;
                if na.min_leaf() < nb.min_leaf() {
                    return (sign, Node::Vertex(self.direct[*g].clone(), vec![na, nb]));
                }
                match self.gens[*g].symmetry {
                    Symmetry::Symmetric => (sign, Node::Vertex(self.direct[*g].clone(), vec![nb, na])),
                    Symmetry::Antisymmetric => (-sign, Node::Vertex(self.direct[*g].clone(), vec![nb, na])),
                    Symmetry::None => {
                        let op = self.opposite[*g].clone().expect("no symmetry has an opposite");
                        (sign, Node::Vertex(op, vec![nb, na]))
                    }
                }
            }
        }
    }
}

fn skip_ws(src: &[u8], pos: &mut usize) {
    while *pos < src.len() && src[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

/// Symmetric descriptions of the standard binary operads.
pub mod standard {
    use super::*;

    pub fn lie() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("b", Symmetry::Antisymmetric)],
            vec!["b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2)"],
        )
    }

    pub fn com() -> SymmetricPresentation {
        SymmetricPresentation::new(vec![SymGenerator::new("m", Symmetry::Symmetric)], vec!["m(m(1,2),3) - m(1,m(2,3))"])
    }

    pub fn assoc() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("m", Symmetry::None).with_opposite("m'")],
            vec!["m(m(1,2),3) - m(1,m(2,3))"],
        )
    }

    /// Right pre-Lie: the associator is symmetric in its last two arguments.
    pub fn prelie() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("m", Symmetry::None).with_opposite("m'")],
            vec!["m(m(1,2),3) - m(1,m(2,3)) - m(m(1,3),2) + m(1,m(3,2))"],
        )
    }

    /// `(xy)z = x(yz) = x(zy)`.
    pub fn perm() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("m", Symmetry::None).with_opposite("m'")],
            vec!["m(m(1,2),3) - m(1,m(2,3))", "m(1,m(2,3)) - m(1,m(3,2))"],
        )
    }

    pub fn pois() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("m", Symmetry::Symmetric), SymGenerator::new("b", Symmetry::Antisymmetric)],
            vec![
                "m(m(1,2),3) - m(1,m(2,3))",
                "b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2)",
                "b(1,m(2,3)) - m(b(1,2),3) - m(2,b(1,3))",
            ],
        )
    }

    /// Two brackets whose linear combinations all satisfy the Jacobi identity.
    pub fn lie2() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("b1", Symmetry::Antisymmetric), SymGenerator::new("b2", Symmetry::Antisymmetric)],
            vec![
                "b1(b1(1,2),3) + b1(b1(2,3),1) + b1(b1(3,1),2)",
                "b2(b2(1,2),3) + b2(b2(2,3),1) + b2(b2(3,1),2)",
                "b1(b2(1,2),3) + b1(b2(2,3),1) + b1(b2(3,1),2) + b2(b1(1,2),3) + b2(b1(2,3),1) + b2(b1(3,1),2)",
            ],
        )
    }

    /// `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.
    pub fn leib() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("b", Symmetry::None).with_opposite("b'")],
            vec!["b(1,b(2,3)) - b(b(1,2),3) + b(b(1,3),2)"],
        )
    }

    /// `(x y) z = x (y z) + x (z y)`, the dual of the Leibniz identity above.
    pub fn zinb() -> SymmetricPresentation {
        SymmetricPresentation::new(
            vec![SymGenerator::new("m", Symmetry::None).with_opposite("m'")],
            vec!["m(m(1,2),3) - m(1,m(2,3)) - m(1,m(3,2))"],
        )
    }
}
