//! Left combs and the two-colored view of a shuffle tree.
//!
//! Marking the input `1` of a monomial colors the path from leaf `1` to the
//! root with the second color. In a shuffle tree leaf `1` is always the
//! leftmost leaf, so the spine is the chain of leftmost children.

use super::{Node, ShuffleTree, VertexPath};

/// True iff every child other than the leftmost one is a leaf, at every vertex.
pub fn is_left_comb(m: &ShuffleTree) -> bool {
    fn go(node: &Node) -> bool {
        match node {
            Node::Leaf(_) => true,
            Node::Vertex(_, children) => children[1..].iter().all(|c| matches!(c, Node::Leaf(_))) && go(&children[0]),
        }
    }
    go(m.root())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredView {
    pub tree: ShuffleTree,
    /// Vertices on the path from the root down to leaf 1, root first.
    pub spine: Vec<VertexPath>,
    /// The remaining vertices, in preorder.
    pub off_spine: Vec<VertexPath>,
}

impl ColoredView {
    pub fn is_on_spine(&self, path: &[usize]) -> bool {
        path.iter().all(|&i| i == 0) && self.spine.iter().any(|p| p.len() == path.len())
    }

    /// True when every vertex lies on the spine.
    pub fn spine_only(&self) -> bool {
        self.off_spine.is_empty()
    }
}

pub fn spine_view(m: &ShuffleTree) -> ColoredView {
    let mut spine = Vec::new();
    let mut path = Vec::new();
    let mut node = m.root();
    while let Node::Vertex(_, children) = node {
        spine.push(path.clone());
        path.push(0);
        node = &children[0];
    }
    let off_spine = m.vertex_paths().into_iter().filter(|p| !p.iter().all(|&i| i == 0)).collect();
    ColoredView { tree: m.clone(), spine, off_spine }
}
