//! Gröbner bases for shuffle operads.

mod complete;
mod normal;
mod overlap;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Q;
use crate::trees::{MonomialOrder, ShuffleTree, Signature, TreeError};

pub use complete::{complete, complete_with, CompletionOptions};
pub use normal::{normal_left_combs, normal_monomial_counts, normal_monomials};
pub use overlap::overlaps;
pub use reduce::{leading_monomial, reduce, Reducer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("the zero element has no leading monomial")]
    ZeroElement,
    #[error("element mixes arities {0} and {1}")]
    MixedArity(usize, usize),
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("relation {index} uses generator `{name}` outside the presentation")]
    ForeignGenerator { index: usize, name: String },
    #[error("{0}")]
    Unsupported(String),
}

/// A linear combination of shuffle monomials of one arity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<ShuffleTree, Q>,
    arity: usize,
}

impl Element {
    pub fn zero(arity: usize) -> Self {
        Element { terms: BTreeMap::new(), arity }
    }

    pub fn monomial(t: ShuffleTree) -> Self {
        let arity = t.arity();
        let mut terms = BTreeMap::new();
        terms.insert(t, Q::one());
        Element { terms, arity }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Q, ShuffleTree)>) -> Result<Self, GroebnerError> {
        let mut e: Option<Element> = None;
        for (c, t) in terms {
            let el = e.get_or_insert_with(|| Element::zero(t.arity()));
            if el.arity != t.arity() {
                return Err(GroebnerError::MixedArity(el.arity, t.arity()));
            }
            el.add_term(t, &c);
        }
        Ok(e.unwrap_or_default())
    }

    /// Parses `c1*t1 + c2*t2 - ...`; a missing coefficient means 1.
    pub fn parse(text: &str, sig: &Signature) -> Result<Self, GroebnerError> {
        let mut terms = Vec::new();
        for (c, tree) in split_terms(text)? {
            terms.push((c, ShuffleTree::parse(tree, sig)?));
        }
        Self::from_terms(terms)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical text order.
    pub fn terms(&self) -> impl Iterator<Item = (&ShuffleTree, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &ShuffleTree) -> Q {
        self.terms.get(t).cloned().unwrap_or_else(Q::zero)
    }

    /// Common weight of all terms, `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(ShuffleTree::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(ShuffleTree::weight).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, t: ShuffleTree, c: &Q) {
        if c.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.arity = t.arity();
        }
        debug_assert_eq!(self.arity, t.arity());
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Q, other: &Element) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), &(c * v));
        }
    }

    pub fn scaled(&self, c: &Q) -> Element {
        let mut out = Element::zero(self.arity);
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), other);
        out
    }

    /// Leading monomial and its coefficient.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&ShuffleTree, &Q)> {
        self.terms.iter().max_by(|a, b| order.key(a.0).cmp(&order.key(b.0)))
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Element {
        match self.leading(order) {
            Some((_, c)) => self.scaled(&(Q::one() / c.clone())),
            None => self.clone(),
        }
    }

    /// Terms sorted by the order, greatest first.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&ShuffleTree, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(t, _)| std::cmp::Reverse(order.key(t)));
        v
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c < &Q::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{abs}*{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Splits `c1*t1 + c2*t2 - ...` into signed coefficients and term texts.
pub(crate) fn split_terms(text: &str) -> Result<Vec<(Q, &str)>, TreeError> {
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut pieces = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start && !text[start..i].trim().is_empty() => {
                // a sign right after '*' or '/' belongs to the coefficient
                let prev = text[..i].trim_end().chars().last();
                if !matches!(prev, Some('*') | Some('/')) {
                    pieces.push(&text[start..i]);
                    start = i;
                }
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    let mut out = Vec::new();
    for piece in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (sign, body) = match piece.as_bytes()[0] {
            b'-' => (-Q::one(), piece[1..].trim()),
            b'+' => (Q::one(), piece[1..].trim()),
            _ => (Q::one(), piece),
        };
        let (coeff, tree) = match body.find('*') {
            Some(pos) => {
                let c = crate::rational::parse_q(&body[..pos])
                    .ok_or_else(|| TreeError::Parse { pos: 0, msg: format!("bad coefficient `{}`", &body[..pos]) })?;
                (c, body[pos + 1..].trim())
            }
            None => (Q::one(), body),
        };
        out.push((sign * coeff, tree));
    }
    Ok(out)
}

/// Generators and relations of a shuffle operad.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub signature: Signature,
    pub relations: Vec<Element>,
}

impl Presentation {
    pub fn new(signature: Signature, relations: Vec<Element>) -> Result<Self, GroebnerError> {
        for (index, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(GroebnerError::ZeroRelation { index });
            }
            for (t, _) in r.terms() {
                for name in t.generator_names() {
                    if signature.get(name).map(|g| g.as_ref()) != Some(generator_of(t, name)) {
                        return Err(GroebnerError::ForeignGenerator { index, name: name.to_string() });
                    }
                }
            }
        }
        Ok(Presentation { signature, relations })
    }

    pub fn free(signature: Signature) -> Self {
        Presentation { signature, relations: Vec::new() }
    }

    pub fn max_relation_arity(&self) -> usize {
        self.relations.iter().map(Element::arity).max().unwrap_or(1)
    }
}

fn generator_of<'a>(t: &'a ShuffleTree, name: &str) -> &'a crate::trees::Generator {
    fn go<'a>(n: &'a crate::trees::Node, name: &str) -> Option<&'a crate::trees::Generator> {
        match n {
            crate::trees::Node::Leaf(_) => None,
            crate::trees::Node::Vertex(g, c) => {
                if g.name == name {
                    Some(g)
                } else {
                    c.iter().find_map(|x| go(x, name))
                }
            }
        }
    }
    go(t.root(), name).expect("name taken from the tree")
}

/// A set of monic elements with their leading monomials, certified confluent
/// for overlaps up to `certified_arity` when `certified` is set.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub signature: Signature,
    pub order: MonomialOrder,
    elements: Vec<Element>,
    leads: Vec<ShuffleTree>,
    pub certified_arity: usize,
    pub certified: bool,
}

impl GroebnerBasis {
    /// Wraps given elements without checking confluence (see [`verify`]).
    pub fn from_elements(
        signature: Signature,
        order: MonomialOrder,
        elements: Vec<Element>,
    ) -> Result<Self, GroebnerError> {
        order.covers(&signature)?;
        let mut out = Vec::new();
        let mut leads = Vec::new();
        for e in elements {
            if e.is_zero() {
                return Err(GroebnerError::ZeroElement);
            }
            let m = e.monic(&order);
            leads.push(m.leading(&order).unwrap().0.clone());
            out.push(m);
        }
        Ok(GroebnerBasis { signature, order, elements: out, leads, certified_arity: 0, certified: false })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[ShuffleTree] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer::new(&self.elements, &self.order)
    }

    pub fn reduce(&self, e: &Element) -> Element {
        self.reducer().reduce(e)
    }

    /// Marks the basis certified up to `arity` (callers must have checked).
    pub(crate) fn certify(mut self, arity: usize, ok: bool) -> Self {
        self.certified_arity = arity;
        self.certified = ok;
        self
    }
}

/// True iff every S-element of arity at most `max_arity` reduces to zero.
pub fn verify(g: &GroebnerBasis, max_arity: usize) -> bool {
    first_nonreducing_overlap(g, max_arity).is_none()
}

/// Checks every overlap up to `max_arity` and records the outcome on the basis.
pub fn verified(g: GroebnerBasis, max_arity: usize) -> GroebnerBasis {
    let ok = verify(&g, max_arity);
    g.certify(max_arity, ok)
}

/// The first S-element (in processing order) that does not reduce to zero.
pub fn first_nonreducing_overlap(g: &GroebnerBasis, max_arity: usize) -> Option<Element> {
    let reducer = g.reducer();
    let els = g.elements();
    for i in 0..els.len() {
        for j in 0..els.len() {
            for s in overlaps(&els[i], &els[j], &g.order, max_arity) {
                let r = reducer.reduce(&s);
                if !r.is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use crate::rational::q;

    #[test]
    fn parse_and_print_elements() {
        let sig = sig2();
        let e = el("2*gt(1,2) - 1/2*lt(1,2)", &sig);
        assert_eq!(e.len(), 2);
        assert_eq!(e.to_string(), "2*gt(1,2) - 1/2*lt(1,2)");
        let z = el("gt(1,2) - gt(1,2)", &sig);
        assert!(z.is_zero());
        assert_eq!(el("-gt(1,2)", &sig).coefficient(&ShuffleTree::parse("gt(1,2)", &sig).unwrap()), q(-1));
        assert!(matches!(Element::parse("gt(1,2) + gt(gt(1,2),3)", &sig), Err(GroebnerError::MixedArity(2, 3))));
    }

    #[test]
    fn leading_monomials_match_known_bases() {
        let p = prelie();
        let o = pathlex(&p.signature);
        let leads: Vec<String> = p.relations.iter().map(|r| leading_monomial(r, &o).unwrap().to_string()).collect();
        assert_eq!(leads, vec!["gt(gt(1,2),3)", "gt(lt(1,2),3)", "gt(lt(1,3),2)"]);
        let l = leib();
        let o = oppdeglex(&l.signature);
        let leads: Vec<String> = l.relations.iter().map(|r| leading_monomial(r, &o).unwrap().to_string()).collect();
        assert_eq!(
            leads,
            vec!["lt(1,lt(2,3))", "lt(1,gt(2,3))", "gt(1,lt(2,3))", "gt(1,gt(2,3))", "gt(lt(1,2),3)", "gt(lt(1,3),2)"]
        );
        assert!(matches!(leading_monomial(&Element::zero(3), &o), Err(GroebnerError::ZeroElement)));
    }
}
