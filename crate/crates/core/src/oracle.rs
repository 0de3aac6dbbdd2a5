//! Brute-force reference computations, independent of Gröbner bases.

use crate::groebner::{Element, Presentation};
use crate::linalg::{rank, SparseRow};
use crate::trees::{enumerate_monomials, graft, Relabeling, ShuffleTree};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n);
        out.push(s);
    }
    out
}

fn graft_element(outer: &Element, leaf: usize, inner: &Element, labels: &[usize]) -> Option<Element> {
    let r = Relabeling::new(labels.to_vec());
    let mut terms = Vec::new();
    for (o, a) in outer.terms() {
        for (i, b) in inner.terms() {
            terms.push((a * b, graft(o, leaf, i, &r).ok()?));
        }
    }
    Element::from_terms(terms).ok()
}

/// Every shuffle composition of `outer` and `inner` at any leaf.
fn compositions(outer: &Element, inner: &Element) -> Vec<Element> {
    let (n, k) = (outer.arity(), inner.arity());
    let mut out = Vec::new();
    for leaf in 1..=n {
        for labels in subsets(n + k - 1, k) {
            if let Some(e) = graft_element(outer, leaf, inner, &labels) {
                out.push(e);
            }
        }
    }
    out
}

/// `dim P(n)` for `n = 1..=max_arity`: monomials minus the rank of the ideal,
/// grown from the relations by composing with generators on both sides.
pub fn ideal_dims(p: &Presentation, max_arity: usize) -> Vec<usize> {
    let gens: Vec<Element> = p.signature.gens().iter().map(|g| Element::monomial(ShuffleTree::corolla(g))).collect();
    let mut ideal: Vec<Vec<Element>> = vec![Vec::new(); max_arity + 1];
    for r in &p.relations {
        if r.arity() <= max_arity {
            ideal[r.arity()].push(r.clone());
        }
    }
    let mut dims = Vec::with_capacity(max_arity);
    for n in 1..=max_arity {
        let mut here = std::mem::take(&mut ideal[n]);
        for g in &gens {
            let k = n + 1 - g.arity();
            if g.arity() < 2 || k == 0 || k >= n {
                continue;
            }
            for x in &ideal[k] {
                here.extend(compositions(x, g));
                here.extend(compositions(g, x));
            }
        }
        let monomials = enumerate_monomials(p.signature.gens(), n, None).expect("no unary generators");
        let rows = here.iter().map(|e| {
            e.terms()
                .map(|(t, c)| (monomials.binary_search(t).expect("tree of this arity"), c.clone()))
                .collect::<SparseRow>()
        });
        dims.push(monomials.len() - rank(rows));
        ideal[n] = here;
    }
    dims
}
