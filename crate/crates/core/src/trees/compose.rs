//! Shuffle composition, divisibility and substitution.

use super::{Node, ShuffleTree, TreeError, VertexPath};

/// Leaf labels taken by the inner tree in a grafting, listed in increasing
/// order. The remaining labels go to the other leaves of the outer tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    pub inner_labels: Vec<usize>,
}

impl Relabeling {
    /// The relabeling that keeps the inner labels contiguous, starting at the
    /// grafted leaf.
    pub fn contiguous(leaf: usize, inner_arity: usize) -> Self {
        Relabeling { inner_labels: (leaf..leaf + inner_arity).collect() }
    }

    pub fn new(mut inner_labels: Vec<usize>) -> Self {
        inner_labels.sort_unstable();
        Relabeling { inner_labels }
    }
}

/// Grafts `inner` into leaf `leaf` of `outer`.
pub fn graft(
    outer: &ShuffleTree,
    leaf: usize,
    inner: &ShuffleTree,
    relabel: &Relabeling,
) -> Result<ShuffleTree, TreeError> {
    let n = outer.arity();
    let k = inner.arity();
    if leaf == 0 || leaf > n {
        return Err(TreeError::LeafOutOfRange { leaf, arity: n });
    }
    let total = n + k - 1;
    let s = &relabel.inner_labels;
    if s.len() != k {
        return Err(TreeError::Relabeling(format!("inner tree has {k} leaves but {} labels were given", s.len())));
    }
    if s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&l| l == 0 || l > total) {
        return Err(TreeError::Relabeling(format!("labels {s:?} must be increasing and within 1..={total}")));
    }
    let complement: Vec<usize> = (1..=total).filter(|l| s.binary_search(l).is_err()).collect();
    // the grafted block must sit where `leaf` sat among the outer labels
    let below = complement.iter().filter(|&&c| c < s[0]).count();
    if below != leaf - 1 {
        return Err(TreeError::NotShuffleComposition { leaf, min_inner: s[0] });
    }
    let inner_node = inner.root().map_leaves(&|l| s[l - 1]);
    let outer_map = |l: usize| if l < leaf { complement[l - 1] } else { complement[l - 2] };
    fn build(node: &Node, leaf: usize, inner: &Node, f: &impl Fn(usize) -> usize) -> Node {
        match node {
            Node::Leaf(l) if *l == leaf => inner.clone(),
            Node::Leaf(l) => Node::Leaf(f(*l)),
            Node::Vertex(g, children) => {
                Node::Vertex(g.clone(), children.iter().map(|c| build(c, leaf, inner, f)).collect())
            }
        }
    }
    ShuffleTree::new(build(outer.root(), leaf, &inner_node, &outer_map))
}

/// An occurrence of a pattern inside a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    /// Path of the vertex of the monomial matched with the pattern root.
    pub root: VertexPath,
    /// For each pattern leaf label `i`, the path of the subtree of the
    /// monomial hanging at that leaf (index `i - 1`).
    pub stumps: Vec<VertexPath>,
}

fn match_at(pattern: &Node, node: &Node, path: &mut VertexPath, stumps: &mut [Option<(VertexPath, usize)>]) -> bool {
    match (pattern, node) {
        (Node::Leaf(l), _) => {
            stumps[l - 1] = Some((path.clone(), node.min_leaf()));
            true
        }
        (Node::Vertex(pg, pc), Node::Vertex(g, c)) => {
            if pg.name != g.name || pc.len() != c.len() {
                return false;
            }
            for (i, (p, n)) in pc.iter().zip(c).enumerate() {
                path.push(i);
                let ok = match_at(p, n, path, stumps);
                path.pop();
                if !ok {
                    return false;
                }
            }
            true
        }
        (Node::Vertex(..), Node::Leaf(_)) => false,
    }
}

/// The embedding of `d` into `m` rooted at `path`, if there is one.
pub fn embedding_at(m: &ShuffleTree, d: &ShuffleTree, path: &[usize]) -> Option<Embedding> {
    if d.weight() == 0 && d.vertex_count() == 0 {
        return None;
    }
    let node = m.node_at(path)?;
    let mut stumps = vec![None; d.arity()];
    let mut cur = path.to_vec();
    if !match_at(d.root(), node, &mut cur, &mut stumps) {
        return None;
    }
    let stumps: Vec<(VertexPath, usize)> = stumps.into_iter().map(|s| s.expect("every leaf matched")).collect();
    // pattern leaves ordered by their stump minima must match the pattern labels
    if stumps.windows(2).any(|w| w[0].1 >= w[1].1) {
        return None;
    }
    Some(Embedding { root: path.to_vec(), stumps: stumps.into_iter().map(|s| s.0).collect() })
}

/// All embeddings of `d` into `m`, ordered by root path in preorder.
/// The identity pattern `1` has no embeddings.
pub fn divisors(m: &ShuffleTree, d: &ShuffleTree) -> Vec<Embedding> {
    if d.vertex_count() == 0 || d.vertex_count() > m.vertex_count() || d.arity() > m.arity() {
        return Vec::new();
    }
    m.vertex_paths().iter().filter_map(|p| embedding_at(m, d, p)).collect()
}

/// Replaces the occurrence `emb` of a pattern in `m` by `replacement`, a
/// monomial of the same arity as the pattern.
pub fn substitute(m: &ShuffleTree, emb: &Embedding, replacement: &ShuffleTree) -> ShuffleTree {
    assert_eq!(replacement.arity(), emb.stumps.len(), "replacement arity must match the pattern");
    let stump_nodes: Vec<&Node> =
        emb.stumps.iter().map(|p| m.node_at(p).expect("stump path inside the tree")).collect();
    fn fill(node: &Node, stumps: &[&Node]) -> Node {
        match node {
            Node::Leaf(l) => stumps[l - 1].clone(),
            Node::Vertex(g, c) => Node::Vertex(g.clone(), c.iter().map(|x| fill(x, stumps)).collect()),
        }
    }
    let new_sub = fill(replacement.root(), &stump_nodes);
    fn replace(node: &Node, path: &[usize], new_sub: &Node) -> Node {
        match path.split_first() {
            None => new_sub.clone(),
            Some((&i, rest)) => match node {
                Node::Vertex(g, c) => {
                    let mut children = c.clone();
                    children[i] = replace(&c[i], rest, new_sub);
                    Node::Vertex(g.clone(), children)
                }
                Node::Leaf(_) => unreachable!("embedding root is a vertex"),
            },
        }
    }
    let root = replace(m.root(), &emb.root, &new_sub);
    debug_assert!(ShuffleTree::new(root.clone()).is_ok(), "substitution keeps the shuffle condition");
    ShuffleTree::from_valid(root)
}
