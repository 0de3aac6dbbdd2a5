//! Shuffle tree monomials of free shuffle operads.
//!
//! A [`ShuffleTree`] is a planar rooted tree whose internal vertices carry
//! generators and whose leaves carry the labels `1..=arity`, subject to the
//! shuffle condition: at every vertex the minimal leaf labels of the child
//! subtrees increase from left to right.
//!
//! Trees print in functional notation, e.g. `m(m(1,3),2)`, and that text is the
//! canonical serialization: two trees are equal iff their texts are equal, and
//! the derived ordering is the byte order of the texts.

mod colored;
mod compose;
mod enumerate;
mod order;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use colored::{is_left_comb, spine_view, ColoredView};
pub use compose::{divisors, embedding_at, graft, substitute, Embedding, Relabeling};
pub use enumerate::enumerate_monomials;
pub use order::{MonomialOrder, OrderKey, OrderKind};

/// Position of a node: child indices followed from the root.
pub type VertexPath = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` must have arity >= 1")]
    ZeroArity { name: String },
    #[error("vertex {path:?}: generator `{name}` expects {expected} inputs, found {found}")]
    VertexArity { path: VertexPath, name: String, expected: usize, found: usize },
    #[error("leaf labels must be exactly 1..={arity}")]
    LeafLabels { arity: usize },
    #[error("vertex {path:?} violates the shuffle condition (child minima {minima:?})")]
    ShuffleViolation { path: VertexPath, minima: Vec<usize> },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("leaf {leaf} out of range for arity {arity}")]
    LeafOutOfRange { leaf: usize, arity: usize },
    #[error("grafting at leaf {leaf} needs {leaf}-1 outer labels below the inner minimum {min_inner}")]
    NotShuffleComposition { leaf: usize, min_inner: usize },
    #[error("invalid relabeling: {0}")]
    Relabeling(String),
    #[error("monomial order does not rank generator `{0}`")]
    UnrankedGenerator(String),
    #[error("enumeration with unary generators needs a weight bound")]
    Unbounded,
}

/// An operation symbol of a free shuffle operad.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
    #[serde(default = "default_weight")]
    pub weight: u32,
    /// Sign attached to the dual generator in the Koszul pairing. `-1` marks the
    /// opposite member of a pair coming from one nonsymmetric operation.
    #[serde(default = "default_dual_sign")]
    pub dual_sign: i8,
}

fn default_weight() -> u32 {
    1
}

fn default_dual_sign() -> i8 {
    1
}

impl Generator {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Generator { name: name.into(), arity, weight: 1, dual_sign: 1 }
    }

    pub fn binary(name: impl Into<String>) -> Self {
        Self::new(name, 2)
    }

    pub fn with_weight(mut self, weight: u32) -> Self {
        self.weight = weight;
        self
    }

    pub fn with_dual_sign(mut self, sign: i8) -> Self {
        self.dual_sign = sign;
        self
    }
}

pub type Gen = Arc<Generator>;

/// The generator set of a presentation, with unique names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    gens: Vec<Gen>,
    by_name: HashMap<String, usize>,
}

impl Signature {
    pub fn new(gens: Vec<Generator>) -> Result<Self, TreeError> {
        let mut by_name = HashMap::new();
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.arity == 0 {
                return Err(TreeError::ZeroArity { name: g.name });
            }
            if by_name.insert(g.name.clone(), out.len()).is_some() {
                return Err(TreeError::DuplicateGenerator(g.name));
            }
            out.push(Arc::new(g));
        }
        Ok(Signature { gens: out, by_name })
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn get(&self, name: &str) -> Option<&Gen> {
        self.by_name.get(name).map(|&i| &self.gens[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn all_binary(&self) -> bool {
        self.gens.iter().all(|g| g.arity == 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(usize),
    Vertex(Gen, Vec<Node>),
}

impl Node {
    pub fn min_leaf(&self) -> usize {
        match self {
            Node::Leaf(l) => *l,
            // the leftmost child always holds the minimum in a shuffle tree, but
            // this is also used while validating, so take the true minimum
            Node::Vertex(_, children) => children.iter().map(Node::min_leaf).min().unwrap_or(0),
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&Node> {
        let mut node = self;
        for &i in path {
            match node {
                Node::Vertex(_, children) => node = children.get(i)?,
                Node::Leaf(_) => return None,
            }
        }
        Some(node)
    }

    fn write(&self, out: &mut String) {
        match self {
            Node::Leaf(l) => out.push_str(&l.to_string()),
            Node::Vertex(g, children) => {
                out.push_str(&g.name);
                out.push('(');
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    c.write(out);
                }
                out.push(')');
            }
        }
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(l) => out.push(*l),
            Node::Vertex(_, children) => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn weight(&self) -> u32 {
        match self {
            Node::Leaf(_) => 0,
            Node::Vertex(g, children) => g.weight + children.iter().map(Node::weight).sum::<u32>(),
        }
    }

    fn vertex_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Vertex(_, children) => 1 + children.iter().map(Node::vertex_count).sum::<usize>(),
        }
    }

    fn map_leaves(&self, f: &impl Fn(usize) -> usize) -> Node {
        match self {
            Node::Leaf(l) => Node::Leaf(f(*l)),
            Node::Vertex(g, children) => Node::Vertex(g.clone(), children.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    /// Checks arities and the shuffle condition; returns the offending vertex.
    fn check(&self, path: &mut VertexPath) -> Result<(), TreeError> {
        if let Node::Vertex(g, children) = self {
            if children.len() != g.arity {
                return Err(TreeError::VertexArity {
                    path: path.clone(),
                    name: g.name.clone(),
                    expected: g.arity,
                    found: children.len(),
                });
            }
            let minima: Vec<usize> = children.iter().map(Node::min_leaf).collect();
            if minima.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TreeError::ShuffleViolation { path: path.clone(), minima });
            }
            for (i, c) in children.iter().enumerate() {
                path.push(i);
                c.check(path)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// Preorder list of vertex paths.
    fn vertex_paths(&self, prefix: &mut VertexPath, out: &mut Vec<VertexPath>) {
        if let Node::Vertex(_, children) = self {
            out.push(prefix.clone());
            for (i, c) in children.iter().enumerate() {
                prefix.push(i);
                c.vertex_paths(prefix, out);
                prefix.pop();
            }
        }
    }
}

/// A validated shuffle tree monomial.
#[derive(Clone)]
pub struct ShuffleTree {
    root: Node,
    arity: usize,
    weight: u32,
    text: String,
}

impl ShuffleTree {
    /// Validates `root` and builds the tree.
    pub fn new(root: Node) -> Result<Self, TreeError> {
        let mut leaves = Vec::new();
        root.collect_leaves(&mut leaves);
        let arity = leaves.len();
        let mut seen = vec![false; arity + 1];
        for &l in &leaves {
            if l == 0 || l > arity || seen[l] {
                return Err(TreeError::LeafLabels { arity });
            }
            seen[l] = true;
        }
        root.check(&mut Vec::new())?;
        Ok(Self::from_valid(root))
    }

    /// Builds a tree from a node already known to be valid.
    pub(crate) fn from_valid(root: Node) -> Self {
        let mut leaves = Vec::new();
        root.collect_leaves(&mut leaves);
        let mut text = String::new();
        root.write(&mut text);
        let weight = root.weight();
        ShuffleTree { root, arity: leaves.len(), weight, text }
    }

    /// The identity monomial `1` of arity one.
    pub fn identity() -> Self {
        Self::from_valid(Node::Leaf(1))
    }

    /// The corolla `g(1,...,k)`.
    pub fn corolla(g: &Gen) -> Self {
        Self::from_valid(Node::Vertex(g.clone(), (1..=g.arity).map(Node::Leaf).collect()))
    }

    pub fn parse(text: &str, sig: &Signature) -> Result<Self, TreeError> {
        let mut p = Parser { src: text.as_bytes(), text, pos: 0, sig };
        p.skip_ws();
        let node = p.node()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(TreeError::Parse { pos: p.pos, msg: "trailing input".into() });
        }
        Self::new(node)
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn vertex_count(&self) -> usize {
        self.root.vertex_count()
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn node_at(&self, path: &[usize]) -> Option<&Node> {
        self.root.at(path)
    }

    /// Leaf labels in planar (left to right) order.
    pub fn planar_leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.arity);
        self.root.collect_leaves(&mut out);
        out
    }

    /// Paths of all internal vertices in preorder.
    pub fn vertex_paths(&self) -> Vec<VertexPath> {
        let mut out = Vec::new();
        self.root.vertex_paths(&mut Vec::new(), &mut out);
        out
    }

    /// Applies a leaf relabeling and revalidates.
    pub fn relabeled(&self, f: impl Fn(usize) -> usize) -> Result<Self, TreeError> {
        Self::new(self.root.map_leaves(&f))
    }

    /// Names of the generators used, in preorder.
    pub fn generator_names(&self) -> Vec<&str> {
        fn go<'a>(n: &'a Node, out: &mut Vec<&'a str>) {
            if let Node::Vertex(g, children) = n {
                out.push(&g.name);
                children.iter().for_each(|c| go(c, out));
            }
        }
        let mut out = Vec::new();
        go(&self.root, &mut out);
        out
    }
}

impl PartialEq for ShuffleTree {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Eq for ShuffleTree {}

impl Hash for ShuffleTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.text.hash(state)
    }
}

impl PartialOrd for ShuffleTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ShuffleTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.text.as_bytes().cmp(other.text.as_bytes())
    }
}

impl fmt::Display for ShuffleTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Debug for ShuffleTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShuffleTree({})", self.text)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TreeError> {
        Err(TreeError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn node(&mut self) -> Result<Node, TreeError> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return self.err("unexpected end of input");
        };
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let label: usize = self.text[start..self.pos]
                .parse()
                .map_err(|_| TreeError::Parse { pos: start, msg: "bad leaf label".into() })?;
            return Ok(Node::Leaf(label));
        }
        let start = self.pos;
        while self.pos < self.src.len() {
            let b = self.src[self.pos];
            if b == b'(' || b == b')' || b == b',' || b.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected generator name or leaf label");
        }
        let name = &self.text[start..self.pos];
        let gen = self.sig.get(name).cloned().ok_or_else(|| TreeError::UnknownGenerator(name.to_string()))?;
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'(') {
            return self.err("expected `(`");
        }
        self.pos += 1;
        let mut children = Vec::new();
        loop {
            children.push(self.node()?);
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.err("expected `,` or `)`"),
            }
        }
        Ok(Node::Vertex(gen, children))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sig_m() -> Signature {
        Signature::new(vec![Generator::binary("m")]).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        let sig = Signature::new(vec![Generator::binary("m"), Generator::new("t", 3)]).unwrap();
        for text in ["m(m(1,2),3)", "m(1,m(2,3))", "t(1,m(2,4),3)", "1"] {
            let t = ShuffleTree::parse(text, &sig).unwrap();
            assert_eq!(t.to_string(), text);
        }
        let t = ShuffleTree::parse(" m( m(1, 3) , 2 ) ", &sig).unwrap();
        assert_eq!(t.as_str(), "m(m(1,3),2)");
    }

    #[test]
    fn rejects_invalid_trees() {
        let sig = sig_m();
        assert!(matches!(ShuffleTree::parse("m(2,1)", &sig), Err(TreeError::ShuffleViolation { .. })));
        assert!(matches!(
            ShuffleTree::parse("m(1,m(3,2))", &sig),
            Err(TreeError::ShuffleViolation { path, .. }) if path == vec![1]
        ));
        assert!(matches!(ShuffleTree::parse("m(1,3)", &sig), Err(TreeError::LeafLabels { .. })));
        assert!(matches!(ShuffleTree::parse("m(1,2,3)", &sig), Err(TreeError::VertexArity { .. })));
        assert!(matches!(ShuffleTree::parse("x(1,2)", &sig), Err(TreeError::UnknownGenerator(_))));
        assert!(matches!(ShuffleTree::parse("m(1,2", &sig), Err(TreeError::Parse { .. })));
    }

    #[test]
    fn signature_rejects_duplicates_and_nullary() {
        assert!(Signature::new(vec![Generator::binary("m"), Generator::binary("m")]).is_err());
        assert!(Signature::new(vec![Generator::new("u", 0)]).is_err());
    }

    #[test]
    fn weight_and_arity() {
        let sig = Signature::new(vec![Generator::binary("m").with_weight(2)]).unwrap();
        let t = ShuffleTree::parse("m(m(1,2),3)", &sig).unwrap();
        assert_eq!(t.arity(), 3);
        assert_eq!(t.weight(), 4);
        assert_eq!(t.vertex_count(), 2);
    }
}
