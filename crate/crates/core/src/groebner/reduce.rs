//! Normal forms modulo a set of monic elements.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{Element, GroebnerError};
use crate::rational::Q;
use crate::trees::{embedding_at, substitute, Embedding, MonomialOrder, Node, OrderKey, ShuffleTree};

pub fn leading_monomial(e: &Element, order: &MonomialOrder) -> Result<ShuffleTree, GroebnerError> {
    e.leading(order).map(|(t, _)| t.clone()).ok_or(GroebnerError::ZeroElement)
}

/// Reduction by a fixed list of elements. Elements are made monic; when
/// several leading monomials divide a term the first element in the list
/// wins, at its first embedding in preorder.
pub struct Reducer<'a> {
    order: &'a MonomialOrder,
    elements: Vec<Element>,
    leads: Vec<ShuffleTree>,
    /// element indices keyed by the root generator of their leading monomial
    by_root: HashMap<String, Vec<usize>>,
}

fn root_name(t: &ShuffleTree) -> Option<&str> {
    match t.root() {
        Node::Vertex(g, _) => Some(&g.name),
        Node::Leaf(_) => None,
    }
}

impl<'a> Reducer<'a> {
    pub fn new(elements: &[Element], order: &'a MonomialOrder) -> Self {
        let mut els = Vec::new();
        let mut leads = Vec::new();
        let mut by_root: HashMap<String, Vec<usize>> = HashMap::new();
        for e in elements.iter().filter(|e| !e.is_zero()) {
            let m = e.monic(order);
            let lead = m.leading(order).unwrap().0.clone();
            if let Some(name) = root_name(&lead) {
                by_root.entry(name.to_string()).or_default().push(els.len());
            }
            leads.push(lead);
            els.push(m);
        }
        Reducer { order, elements: els, leads, by_root }
    }

    pub fn leads(&self) -> &[ShuffleTree] {
        &self.leads
    }

    /// The first element whose leading monomial divides `m`, with the embedding.
    pub fn find_divisor(&self, m: &ShuffleTree) -> Option<(usize, Embedding)> {
        let paths = m.vertex_paths();
        let mut best: Option<(usize, Embedding)> = None;
        for p in &paths {
            let Some(Node::Vertex(g, _)) = m.node_at(p) else { continue };
            let Some(cands) = self.by_root.get(&g.name) else { continue };
            for &i in cands {
                if best.as_ref().is_some_and(|(b, _)| *b <= i) {
                    break;
                }
                if let Some(e) = embedding_at(m, &self.leads[i], p) {
                    best = Some((i, e));
                    break;
                }
            }
        }
        best
    }

    pub fn is_normal(&self, m: &ShuffleTree) -> bool {
        self.find_divisor(m).is_none()
    }

    /// Full normal form of `e`.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut work: BTreeMap<OrderKey, (ShuffleTree, Q)> =
            e.terms().map(|(t, c)| (self.order.key(t), (t.clone(), c.clone()))).collect();
        let mut out = Element::zero(e.arity());
        while let Some((_, (m, c))) = work.pop_last() {
            match self.find_divisor(&m) {
                None => out.add_term(m, &c),
                Some((i, emb)) => {
                    let g = &self.elements[i];
                    for (t, gc) in g.terms() {
                        if t == &self.leads[i] {
                            debug_assert!(gc.is_one());
                            continue;
                        }
                        let nt = substitute(&m, &emb, t);
                        let delta = -(&c * gc);
                        let key = self.order.key(&nt);
                        match work.entry(key) {
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert((nt, delta));
                            }
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                o.get_mut().1 += delta;
                                if o.get().1.is_zero() {
                                    o.remove();
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Normal form of `e` modulo `g`.
pub fn reduce(e: &Element, g: &[Element], order: &MonomialOrder) -> Element {
    Reducer::new(g, order).reduce(e)
}
