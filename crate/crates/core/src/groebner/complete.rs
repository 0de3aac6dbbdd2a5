//! Truncated Buchberger completion.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::time::{Duration, Instant};

use super::{overlaps, Element, GroebnerBasis, GroebnerError, Presentation, Reducer};
use crate::trees::{divisors, MonomialOrder, OrderKey};

#[derive(Debug, Clone)]
pub struct CompletionOptions {
    pub max_arity: usize,
    /// Wall-clock budget; exceeding it returns an uncertified basis.
    pub budget: Option<Duration>,
    /// Bound on the number of basis elements before giving up.
    pub max_elements: Option<usize>,
}

impl CompletionOptions {
    pub fn new(max_arity: usize) -> Self {
        CompletionOptions { max_arity, budget: None, max_elements: None }
    }
}

struct Queued {
    arity: usize,
    key: OrderKey,
    seq: usize,
    element: Element,
}

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}
impl Eq for Queued {}
impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Queued {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.arity, &self.key, self.seq).cmp(&(other.arity, &other.key, other.seq))
    }
}

pub fn complete(p: &Presentation, order: &MonomialOrder, max_arity: usize) -> Result<GroebnerBasis, GroebnerError> {
    complete_with(p, order, &CompletionOptions::new(max_arity))
}

/// Completes the relations of `p`, certifying all overlaps of arity at most
/// `opts.max_arity`, and returns the reduced basis.
pub fn complete_with(
    p: &Presentation,
    order: &MonomialOrder,
    opts: &CompletionOptions,
) -> Result<GroebnerBasis, GroebnerError> {
    order.covers(&p.signature)?;
    let start = Instant::now();
    let mut heap: BinaryHeap<Reverse<Queued>> = BinaryHeap::new();
    let mut seq = 0usize;
    let mut push = |heap: &mut BinaryHeap<Reverse<Queued>>, e: Element| {
        if let Some((lead, _)) = e.leading(order) {
            let key = order.key(lead);
            heap.push(Reverse(Queued { arity: e.arity(), key, seq, element: e }));
            seq += 1;
        }
    };
    for r in &p.relations {
        push(&mut heap, r.clone());
    }
    let mut basis: Vec<Element> = Vec::new();
    let mut finished = true;
    while let Some(Reverse(q)) = heap.pop() {
        if opts.budget.is_some_and(|b| start.elapsed() > b) || opts.max_elements.is_some_and(|m| basis.len() > m) {
            finished = false;
            break;
        }
        let reducer = Reducer::new(&basis, order);
        let r = reducer.reduce(&q.element);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        let mut news = overlaps(&r, &r, order, opts.max_arity);
        for g in &basis {
            news.extend(overlaps(&r, g, order, opts.max_arity));
            news.extend(overlaps(g, &r, order, opts.max_arity));
        }
        basis.push(r);
        for s in news {
            push(&mut heap, s);
        }
    }
    let basis = interreduce(basis, order);
    let gb = GroebnerBasis::from_elements(p.signature.clone(), order.clone(), basis)?;
    Ok(gb.certify(opts.max_arity, finished))
}

/// Drops elements whose leading monomial is divisible by another one and
/// reduces the remaining tails; output sorted by (arity, leading monomial).
pub(crate) fn interreduce(mut basis: Vec<Element>, order: &MonomialOrder) -> Vec<Element> {
    basis.retain(|e| !e.is_zero());
    basis.sort_by_cached_key(|e| (e.arity(), order.key(e.leading(order).unwrap().0)));
    let leads: Vec<_> = basis.iter().map(|e| e.leading(order).unwrap().0.clone()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len())
                .any(|j| j != i && !divisors(&leads[i], &leads[j]).is_empty() && (leads[i] != leads[j] || j < i))
        })
        .collect();
    let kept: Vec<Element> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Element> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.clone()).collect();
        let r = Reducer::new(&others, order).reduce(&kept[i]);
        out.push(r.monic(order));
    }
    out
}
