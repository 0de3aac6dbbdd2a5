//! S-elements from overlapping occurrences of two leading monomials.

use std::collections::BTreeSet;

use super::Element;
use crate::trees::{embedding_at, substitute, MonomialOrder, Node, ShuffleTree, VertexPath};

/// Shape of `a` and `b` laid on top of each other from their roots; generators
/// must agree wherever both have a vertex. Leaves are unlabeled (`0`).
fn overlay(a: &Node, b: &Node) -> Option<Node> {
    match (a, b) {
        (Node::Vertex(ga, ca), Node::Vertex(gb, cb)) => {
            if ga.name != gb.name || ca.len() != cb.len() {
                return None;
            }
            let children = ca.iter().zip(cb).map(|(x, y)| overlay(x, y)).collect::<Option<Vec<_>>>()?;
            Some(Node::Vertex(ga.clone(), children))
        }
        (Node::Vertex(..), Node::Leaf(_)) => Some(strip(a)),
        (Node::Leaf(_), Node::Vertex(..)) => Some(strip(b)),
        (Node::Leaf(_), Node::Leaf(_)) => Some(Node::Leaf(0)),
    }
}

fn strip(n: &Node) -> Node {
    match n {
        Node::Leaf(_) => Node::Leaf(0),
        Node::Vertex(g, c) => Node::Vertex(g.clone(), c.iter().map(strip).collect()),
    }
}

fn replace_at(node: &Node, path: &[usize], sub: Node) -> Node {
    match path.split_first() {
        None => sub,
        Some((&i, rest)) => match node {
            Node::Vertex(g, c) => {
                let mut children: Vec<Node> = c.iter().map(strip).collect();
                children[i] = replace_at(&c[i], rest, sub);
                Node::Vertex(g.clone(), children)
            }
            Node::Leaf(_) => unreachable!("path runs through vertices"),
        },
    }
}

fn count_leaves(n: &Node) -> usize {
    match n {
        Node::Leaf(_) => 1,
        Node::Vertex(_, c) => c.iter().map(count_leaves).sum(),
    }
}

/// Every labeling of the leaves of `shape` that satisfies the shuffle condition.
fn shuffle_labelings(shape: &Node) -> Vec<ShuffleTree> {
    let k = count_leaves(shape);
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=k).collect();
    fn label(n: &Node, perm: &[usize], next: &mut usize) -> Node {
        match n {
            Node::Leaf(_) => {
                *next += 1;
                Node::Leaf(perm[*next - 1])
            }
            Node::Vertex(g, c) => Node::Vertex(g.clone(), c.iter().map(|x| label(x, perm, next)).collect()),
        }
    }
    // Heap's algorithm over all permutations; k stays small
    fn heap(k: usize, perm: &mut Vec<usize>, shape: &Node, out: &mut Vec<ShuffleTree>) {
        if k <= 1 {
            let mut next = 0;
            if let Ok(t) = ShuffleTree::new(label(shape, perm, &mut next)) {
                out.push(t);
            }
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, shape, out);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(k, &mut perm, shape, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Common multiples of `lead_a` and `lead_b` in which the two occurrences share
/// a vertex and cover the whole tree. Returns `(m, root of a, root of b)`.
pub(crate) fn small_common_multiples(
    lead_a: &ShuffleTree,
    lead_b: &ShuffleTree,
    max_arity: usize,
) -> Vec<(ShuffleTree, VertexPath, VertexPath)> {
    let mut shapes: Vec<(Node, VertexPath, VertexPath)> = Vec::new();
    // b rooted at a vertex of a
    for u in lead_a.vertex_paths() {
        let at = lead_a.node_at(&u).unwrap();
        if let Some(o) = overlay(at, lead_b.root()) {
            shapes.push((replace_at(lead_a.root(), &u, o), Vec::new(), u));
        }
    }
    // a rooted at a non-root vertex of b
    for u in lead_b.vertex_paths().into_iter().filter(|p| !p.is_empty()) {
        let at = lead_b.node_at(&u).unwrap();
        if let Some(o) = overlay(at, lead_a.root()) {
            shapes.push((replace_at(lead_b.root(), &u, o), u, Vec::new()));
        }
    }
    let mut out = BTreeSet::new();
    for (shape, ra, rb) in shapes {
        if count_leaves(&shape) > max_arity {
            continue;
        }
        for m in shuffle_labelings(&shape) {
            if embedding_at(&m, lead_a, &ra).is_some() && embedding_at(&m, lead_b, &rb).is_some() {
                out.insert((m, ra.clone(), rb.clone()));
            }
        }
    }
    out.into_iter().collect()
}

/// S-elements of `g1` and `g2` on their small common multiples of arity at
/// most `max_arity`. The trivial self-overlap of an element with itself is
/// skipped.
pub fn overlaps(g1: &Element, g2: &Element, order: &MonomialOrder, max_arity: usize) -> Vec<Element> {
    let (Some((l1, _)), Some((l2, _))) = (g1.leading(order), g2.leading(order)) else {
        return Vec::new();
    };
    let g1 = g1.monic(order);
    let g2 = g2.monic(order);
    let same = g1 == g2;
    let mut out = Vec::new();
    for (m, ra, rb) in small_common_multiples(l1, l2, max_arity) {
        if same && ra == rb {
            continue;
        }
        let ea = embedding_at(&m, l1, &ra).expect("checked");
        let eb = embedding_at(&m, l2, &rb).expect("checked");
        let mut s = Element::zero(m.arity());
        for (t, c) in g1.terms() {
            s.add_term(substitute(&m, &ea, t), c);
        }
        for (t, c) in g2.terms() {
            s.add_term(substitute(&m, &eb, t), &-c.clone());
        }
        out.push(s);
    }
    out
}
