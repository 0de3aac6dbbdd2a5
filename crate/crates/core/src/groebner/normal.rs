//! Normal monomials: trees divisible by no leading monomial.
//!
//! Divisors of normal monomials are normal, and every tree with at least two
//! vertices is a grafting of a corolla onto a smaller tree dividing it, so
//! normal monomials are generated arity by arity from smaller normal ones.

use std::collections::BTreeSet;

use super::{GroebnerBasis, GroebnerError};
use crate::trees::{graft, Gen, Relabeling, ShuffleTree};

fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

fn check_gens(gens: &[Gen]) -> Result<(), GroebnerError> {
    if let Some(g) = gens.iter().find(|g| g.arity == 1) {
        return Err(GroebnerError::Unsupported(format!(
            "normal monomials are infinite in each arity with the unary generator `{}`",
            g.name
        )));
    }
    Ok(())
}

/// Normal monomials for every arity `1..=max_arity`.
fn normal_table(
    g: &GroebnerBasis,
    max_arity: usize,
    left_combs_only: bool,
) -> Result<Vec<Vec<ShuffleTree>>, GroebnerError> {
    let gens = g.signature.gens();
    check_gens(gens)?;
    let reducer = g.reducer();
    // table[n] = normal monomials of arity n
    let mut table: Vec<Vec<ShuffleTree>> = vec![Vec::new(); max_arity + 1];
    if max_arity >= 1 {
        table[1].push(ShuffleTree::identity());
    }
    for n in 2..=max_arity {
        let mut found = BTreeSet::new();
        for gen in gens {
            let k = gen.arity;
            if k > n {
                continue;
            }
            let small = n - k + 1;
            let corolla = ShuffleTree::corolla(gen);
            for t in &table[small] {
                if left_combs_only {
                    // new root: the smaller comb goes into input 1 of the corolla
                    let rest: Vec<usize> = (2..=n).collect();
                    for s in subsets(&rest, small - 1) {
                        let mut labels = vec![1];
                        labels.extend(s);
                        let m = graft(&corolla, 1, t, &Relabeling::new(labels)).expect("shuffle grafting");
                        if reducer.is_normal(&m) {
                            found.insert(m);
                        }
                    }
                } else {
                    for leaf in 1..=small {
                        let above: Vec<usize> = (leaf + 1..=n).collect();
                        for s in subsets(&above, k - 1) {
                            let mut labels = vec![leaf];
                            labels.extend(s);
                            let m = graft(t, leaf, &corolla, &Relabeling::new(labels)).expect("shuffle grafting");
                            if reducer.is_normal(&m) {
                                found.insert(m);
                            }
                        }
                    }
                }
            }
        }
        table[n] = found.into_iter().collect();
    }
    Ok(table)
}

/// Normal monomials of the given arity, in canonical text order.
pub fn normal_monomials(g: &GroebnerBasis, arity: usize) -> Result<Vec<ShuffleTree>, GroebnerError> {
    Ok(normal_table(g, arity, false)?.pop().unwrap_or_default())
}

/// Normal left combs of every arity `1..=max_arity` (index 0 is empty).
pub fn normal_left_combs(g: &GroebnerBasis, max_arity: usize) -> Result<Vec<Vec<ShuffleTree>>, GroebnerError> {
    normal_table(g, max_arity, true)
}

/// Number of normal monomials in arities `1..=max_arity`.
pub fn normal_monomial_counts(g: &GroebnerBasis, max_arity: usize) -> Result<Vec<usize>, GroebnerError> {
    Ok(normal_table(g, max_arity, false)?.iter().skip(1).map(Vec::len).collect())
}

/// Normal monomials modulo an arbitrary reducer, by brute-force filtering.
#[cfg(test)]
pub(crate) fn normal_by_filter(gens: &[Gen], reducer: &super::Reducer<'_>, arity: usize) -> Vec<ShuffleTree> {
    crate::trees::enumerate_monomials(gens, arity, None).unwrap().into_iter().filter(|m| reducer.is_normal(m)).collect()
}
