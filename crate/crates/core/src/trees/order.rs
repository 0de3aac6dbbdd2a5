//! Path orders on shuffle trees.
//!
//! A monomial is encoded by its weight, the words of generators read on the
//! path from the root to each leaf `1..=n`, and the planar leaf permutation.
//! Words compare degree-lexicographically (longer is greater, then letter by
//! letter with the generator ranking). `PathLex` compares the encodings
//! directly; `PathOppositeDegLex` compares weights directly and reverses
//! everything after the weight, so shorter root-to-leaf-1 paths win.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Node, ShuffleTree, Signature, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "pathlex")]
    PathLex,
    #[serde(rename = "path-opp-deglex")]
    PathOppositeDegLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::PathLex => "pathlex",
            OrderKind::PathOppositeDegLex => "path-opp-deglex",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "pathlex" | "path-lex" => Some(OrderKind::PathLex),
            "path-opp-deglex" | "pathoppdeglex" => Some(OrderKind::PathOppositeDegLex),
            _ => None,
        }
    }
}

/// A path order together with a ranking of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Generator names, greatest first.
    generator_order: Vec<String>,
    rank: HashMap<String, u32>,
}

/// Sort key of a monomial; keys compare exactly like the monomials do.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderKey {
    weight: u32,
    body: Vec<u32>,
    opposite: bool,
}

impl Ord for OrderKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| {
            let c = self.body.cmp(&other.body);
            if self.opposite {
                c.reverse()
            } else {
                c
            }
        })
    }
}

impl PartialOrd for OrderKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl MonomialOrder {
    /// `generator_order` lists generator names from greatest to smallest.
    pub fn new(kind: OrderKind, generator_order: Vec<String>) -> Result<Self, TreeError> {
        let mut rank = HashMap::new();
        let n = generator_order.len() as u32;
        for (i, name) in generator_order.iter().enumerate() {
            if rank.insert(name.clone(), n - i as u32).is_some() {
                return Err(TreeError::DuplicateGenerator(name.clone()));
            }
        }
        Ok(MonomialOrder { kind, generator_order, rank })
    }

    /// Order ranking the generators of `sig` in declaration order, first greatest.
    pub fn for_signature(kind: OrderKind, sig: &Signature) -> Self {
        Self::new(kind, sig.names()).expect("signature names are unique")
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn generator_order(&self) -> &[String] {
        &self.generator_order
    }

    /// Checks that every generator of `sig` is ranked.
    pub fn covers(&self, sig: &Signature) -> Result<(), TreeError> {
        for g in sig.gens() {
            if !self.rank.contains_key(&g.name) {
                return Err(TreeError::UnrankedGenerator(g.name.clone()));
            }
        }
        Ok(())
    }

    pub fn try_key(&self, t: &ShuffleTree) -> Result<OrderKey, TreeError> {
        let n = t.arity();
        let mut words: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut stack = Vec::new();
        let mut planar = Vec::with_capacity(n);
        fn walk(
            node: &Node,
            rank: &HashMap<String, u32>,
            stack: &mut Vec<u32>,
            words: &mut [Vec<u32>],
            planar: &mut Vec<usize>,
        ) -> Result<(), TreeError> {
            match node {
                Node::Leaf(l) => {
                    words[l - 1] = stack.clone();
                    planar.push(*l);
                }
                Node::Vertex(g, children) => {
                    let r = *rank.get(&g.name).ok_or_else(|| TreeError::UnrankedGenerator(g.name.clone()))?;
                    stack.push(r);
                    for c in children {
                        walk(c, rank, stack, words, planar)?;
                    }
                    stack.pop();
                }
            }
            Ok(())
        }
        walk(t.root(), &self.rank, &mut stack, &mut words, &mut planar)?;
        let mut body = Vec::new();
        for w in &words {
            body.push(w.len() as u32);
            body.extend_from_slice(w);
        }
        body.extend(planar.iter().map(|&l| l as u32));
        Ok(OrderKey { weight: t.weight(), body, opposite: self.kind == OrderKind::PathOppositeDegLex })
    }

    /// Key of a monomial whose generators are all ranked.
    ///
    /// # Panics
    /// If the tree uses a generator this order does not rank; check with
    /// [`MonomialOrder::covers`] first.
    pub fn key(&self, t: &ShuffleTree) -> OrderKey {
        self.try_key(t).expect("monomial order must rank every generator")
    }

    pub fn compare(&self, a: &ShuffleTree, b: &ShuffleTree) -> Result<Ordering, TreeError> {
        if a.arity() != b.arity() {
            return Err(TreeError::ArityMismatch { left: a.arity(), right: b.arity() });
        }
        Ok(self.try_key(a)?.cmp(&self.try_key(b)?))
    }
}
