//! Enumeration of all shuffle tree monomials of a given arity.

use std::collections::HashMap;

use super::{Gen, Node, ShuffleTree, TreeError};

/// Splits `labels` (increasing) into `k` nonempty blocks listed by increasing minimum.
pub(crate) fn ordered_set_partitions(labels: &[usize], k: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(labels: &[usize], k: usize, idx: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let remaining = labels.len() - idx;
        if blocks.len() + remaining < k {
            return;
        }
        if idx == labels.len() {
            if blocks.len() == k {
                out.push(blocks.clone());
            }
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(labels[idx]);
            go(labels, k, idx + 1, blocks, out);
            blocks[b].pop();
        }
        if blocks.len() < k {
            blocks.push(vec![labels[idx]]);
            go(labels, k, idx + 1, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    go(labels, k, 0, &mut Vec::new(), &mut out);
    out
}

struct Enumerator<'a> {
    gens: &'a [Gen],
    memo: HashMap<(usize, u32), Vec<(Node, u32)>>,
}

impl Enumerator<'_> {
    /// Trees on labels `1..=n` with weight at most `budget`.
    fn trees(&mut self, n: usize, budget: u32) -> Vec<(Node, u32)> {
        if let Some(v) = self.memo.get(&(n, budget)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push((Node::Leaf(1), 0));
        }
        let labels: Vec<usize> = (1..=n).collect();
        for g in self.gens {
            if g.arity > n || g.weight > budget {
                continue;
            }
            if g.arity == 1 && g.weight == 0 {
                // weight zero unary vertices would repeat forever
                continue;
            }
            let rest = budget - g.weight;
            for blocks in ordered_set_partitions(&labels, g.arity) {
                let mut partial: Vec<(Vec<Node>, u32)> = vec![(Vec::new(), g.weight)];
                for block in &blocks {
                    let subs = self.trees(block.len(), rest);
                    let mut next = Vec::new();
                    for (children, w) in &partial {
                        for (sub, sw) in &subs {
                            if w + sw > budget {
                                continue;
                            }
                            let mut c = children.clone();
                            c.push(sub.map_leaves(&|l| block[l - 1]));
                            next.push((c, w + sw));
                        }
                    }
                    partial = next;
                }
                out.extend(partial.into_iter().map(|(c, w)| (Node::Vertex(g.clone(), c), w)));
            }
        }
        self.memo.insert((n, budget), out.clone());
        out
    }
}

/// Every shuffle tree of the given arity (and weight at most `max_weight`),
/// sorted by canonical text.
///
/// Unary generators make the set infinite, so they require a weight bound.
pub fn enumerate_monomials(gens: &[Gen], arity: usize, max_weight: Option<u32>) -> Result<Vec<ShuffleTree>, TreeError> {
    if arity == 0 {
        return Ok(Vec::new());
    }
    let budget = match max_weight {
        Some(w) => w,
        None if gens.iter().any(|g| g.arity == 1) => return Err(TreeError::Unbounded),
        // without unary generators a tree of arity n has fewer than n vertices
        None => gens.iter().map(|g| g.weight).max().unwrap_or(0).saturating_mul(arity as u32),
    };
    let mut e = Enumerator { gens, memo: HashMap::new() };
    let mut out: Vec<ShuffleTree> =
        e.trees(arity, budget).into_iter().map(|(n, _)| ShuffleTree::from_valid(n)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{Generator, Signature};

    fn double_factorial_odd(n: usize) -> usize {
        // (2n-3)!!
        (1..n).map(|k| 2 * k - 1).product()
    }

    #[test]
    fn one_binary_generator() {
        let sig = Signature::new(vec![Generator::binary("m")]).unwrap();
        let t2 = enumerate_monomials(sig.gens(), 2, None).unwrap();
        assert_eq!(t2.iter().map(|t| t.to_string()).collect::<Vec<_>>(), vec!["m(1,2)"]);
        let t3 = enumerate_monomials(sig.gens(), 3, None).unwrap();
        let s3: Vec<String> = t3.iter().map(|t| t.to_string()).collect();
        assert_eq!(s3, vec!["m(1,m(2,3))", "m(m(1,2),3)", "m(m(1,3),2)"]);
        for n in 1..=6 {
            assert_eq!(enumerate_monomials(sig.gens(), n, None).unwrap().len(), double_factorial_odd(n));
        }
    }

    #[test]
    fn two_binary_generators() {
        let sig = Signature::new(vec![Generator::binary("gt"), Generator::binary("lt")]).unwrap();
        assert_eq!(enumerate_monomials(sig.gens(), 3, None).unwrap().len(), 12);
    }

    #[test]
    fn empty_generators_and_bounds() {
        assert!(enumerate_monomials(&[], 3, None).unwrap().is_empty());
        assert_eq!(enumerate_monomials(&[], 1, None).unwrap().len(), 1);
        let sig = Signature::new(vec![Generator::new("u", 1), Generator::binary("m")]).unwrap();
        assert!(matches!(enumerate_monomials(sig.gens(), 2, None), Err(TreeError::Unbounded)));
        // arity 2, weight <= 2: m(1,2), u(m(1,2)), m(u(1),2), m(1,u(2))
        assert_eq!(enumerate_monomials(sig.gens(), 2, Some(2)).unwrap().len(), 4);
    }

    #[test]
    fn ternary_generator() {
        let sig = Signature::new(vec![Generator::new("t", 3)]).unwrap();
        assert_eq!(enumerate_monomials(sig.gens(), 3, None).unwrap().len(), 1);
        // arity 5: one vertex on top, one below in any of the 3 slots with shuffle labelings
        let n5 = enumerate_monomials(sig.gens(), 5, None).unwrap();
        assert_eq!(n5.len(), 10);
    }
}
