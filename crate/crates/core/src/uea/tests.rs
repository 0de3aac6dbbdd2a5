use proptest::prelude::*;

use super::words::add;
use super::*;
use crate::groebner::complete;
use crate::groebner::test_support::{leib, lie, pathlex};
use crate::pbw::{derivative_presentation, u0_dims};
use crate::rational::q;
use crate::symmetric::standard;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn op(gen: &str, dim: usize, products: &[(usize, usize, Vec<(usize, Q)>)]) -> AlgebraOp {
    AlgebraOp { gen: gen.into(), table: table_from_products(dim, products) }
}

fn abelian(dim: usize, gens: &[&str]) -> AlgebraData {
    let basis = (0..dim).map(|i| format!("e{i}")).collect();
    AlgebraData::new(basis, gens.iter().map(|g| op(g, dim, &[])).collect()).unwrap()
}

pub(super) fn sl2() -> AlgebraData {
    // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
    let p = vec![
        (0, 1, vec![(2, q(1))]),
        (1, 0, vec![(2, q(-1))]),
        (2, 0, vec![(0, q(2))]),
        (0, 2, vec![(0, q(-2))]),
        (2, 1, vec![(1, q(-2))]),
        (1, 2, vec![(1, q(2))]),
    ];
    AlgebraData::new(names(&["e", "f", "h"]), vec![op("b", 3, &p)]).unwrap()
}

pub(super) fn leib_witness() -> AlgebraData {
    // [x,x] = y, every other bracket zero
    let p = vec![(0, 0, vec![(1, q(1))])];
    AlgebraData::new(names(&["x", "y"]), vec![op("lt", 2, &p), op("gt", 2, &p)]).unwrap()
}

fn idempotent(gens: &[&str]) -> AlgebraData {
    let p = vec![(0, 0, vec![(0, q(1))])];
    AlgebraData::new(names(&["e"]), gens.iter().map(|g| op(g, 1, &p)).collect()).unwrap()
}

/// Truncated noncommutative Buchberger under degree-lexicographic word order.
mod oracle {
    use super::*;

    fn key(w: &Word) -> (usize, &Word) {
        (w.len(), w)
    }

    fn lead(e: &NcElement) -> Word {
        e.keys().max_by(|a, b| key(a).cmp(&key(b))).unwrap().clone()
    }

    fn find(hay: &[usize], needle: &[usize]) -> Option<usize> {
        if needle.len() > hay.len() {
            return None;
        }
        (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
    }

    fn monic(e: NcElement) -> NcElement {
        let c = e[&lead(&e)].clone();
        e.into_iter().map(|(w, x)| (w, x / &c)).collect()
    }

    fn reduce(mut e: NcElement, g: &[NcElement]) -> NcElement {
        'outer: loop {
            let mut terms: Vec<Word> = e.keys().cloned().collect();
            terms.sort_by(|a, b| key(b).cmp(&key(a)));
            for w in terms {
                for r in g {
                    let l = lead(r);
                    if let Some(i) = find(&w, &l) {
                        let c = e[&w].clone();
                        for (rw, rc) in r {
                            let mut full = w[..i].to_vec();
                            full.extend(rw);
                            full.extend(&w[i + l.len()..]);
                            add(&mut e, full, &(-(&c * rc)));
                        }
                        continue 'outer;
                    }
                }
            }
            return e;
        }
    }

    fn times(u: &[usize], e: &NcElement, v: &[usize]) -> NcElement {
        e.iter()
            .map(|(w, c)| {
                let mut full = u.to_vec();
                full.extend(w);
                full.extend(v);
                (full, c.clone())
            })
            .collect()
    }

    pub fn filtered_dims(letters: usize, relations: &[NcElement], depth: usize) -> Vec<usize> {
        let mut g: Vec<NcElement> = Vec::new();
        // same truncation as the rank computation: nothing longer than `depth` enters
        let mut queue: Vec<NcElement> =
            relations.iter().filter(|r| r.keys().all(|w| w.len() <= depth)).cloned().collect();
        while let Some(p) = queue.pop() {
            let r = reduce(p, &g);
            if r.is_empty() {
                continue;
            }
            let r = monic(r);
            let lr = lead(&r);
            if lr.len() > depth {
                continue;
            }
            let (keep, redo): (Vec<_>, Vec<_>) = g.into_iter().partition(|x| find(&lead(x), &lr).is_none());
            g = keep;
            queue.extend(redo);
            g.push(r.clone());
            for other in g.clone() {
                for (a, b) in [(&r, &other), (&other, &r)] {
                    let (la, lb) = (lead(a), lead(b));
                    for o in 1..la.len().min(lb.len()) {
                        if la[la.len() - o..] == lb[..o] && la.len() + lb.len() - o <= depth {
                            let u = &la[..la.len() - o];
                            let v = &lb[o..];
                            let mut s = times(&[], a, v);
                            for (w, c) in times(u, b, &[]) {
                                add(&mut s, w, &-c);
                            }
                            queue.push(s);
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut count = 0usize;
        for n in 0..=depth {
            let mut words: Vec<Word> = vec![vec![]];
            for _ in 0..n {
                words =
                    words.into_iter().flat_map(|w| (0..letters).map(move |l| [w.clone(), vec![l]].concat())).collect();
            }
            count += words.iter().filter(|w| g.iter().all(|r| find(w, &lead(r)).is_none())).count();
            out.push(count);
        }
        out
    }
}

#[test]
fn abelian_lie_gives_polynomials() {
    let ap = enveloping_presentation(&lie(), &abelian(3, &["b"])).unwrap();
    assert_eq!(ap.letter_count(), 3);
    assert!(ap.relations.iter().all(|r| r.keys().all(|w| w.len() == 2)));
    assert_eq!(filtered_dims(&ap, 3).unwrap(), vec![1, 4, 10, 20]);
    let ap2 = enveloping_presentation(&lie(), &abelian(2, &["b"])).unwrap();
    // x_a x_b - x_b x_a
    assert!(ap2.relations.iter().any(|r| r.len() == 2 && r.keys().all(|w| w.len() == 2)));
}

#[test]
fn sl2_has_pbw_dimensions() {
    let v = sl2();
    v.validate(&lie()).unwrap();
    let rep = pbw_compare(&lie(), &v, 3).unwrap();
    assert_eq!(rep.graded_dims, vec![1, 3, 6, 10]);
    assert_eq!(rep.reference_dims, vec![1, 3, 6, 10]);
    assert_eq!(rep.verdict, DimVerdict::MatchUpTo(3));
}

#[test]
fn leibniz_witness_breaks_pbw() {
    let v = leib_witness();
    v.validate(&leib()).unwrap();
    let rep = pbw_compare(&leib(), &v, 2).unwrap();
    assert_eq!(rep.verdict, DimVerdict::MismatchAt(1));
    assert_eq!(rep.filtered_dims[1], 4);
    assert_eq!(rep.reference_filtered[1], 5);
    assert!(rep.refutes());
    assert!(!pbw_compare(&lie(), &sl2(), 2).unwrap().refutes());
}

#[test]
fn idempotent_examples() {
    let a = standard::assoc().expand().unwrap();
    let v = idempotent(&["m", "m'"]);
    v.validate(&a).unwrap();
    let ap = enveloping_presentation(&a, &v).unwrap();
    assert_eq!(filtered_dims(&ap, 4).unwrap(), vec![1, 3, 4, 4, 4]);
    let c = standard::com().expand().unwrap();
    let v = idempotent(&["m"]);
    v.validate(&c).unwrap();
    let ap = enveloping_presentation(&c, &v).unwrap();
    assert_eq!(filtered_dims(&ap, 4).unwrap(), vec![1, 2, 2, 2, 2]);
}

#[test]
fn trivial_algebra_matches_itself() {
    for (p, v) in [(lie(), sl2().trivial()), (leib(), leib_witness().trivial())] {
        let rep = pbw_compare(&p, &v, 3).unwrap();
        assert_eq!(rep.verdict, DimVerdict::MatchUpTo(3));
        assert_eq!(rep.filtered_dims, rep.reference_filtered);
    }
}

#[test]
fn validation_catches_non_algebras() {
    // [e,f] = e and [f,e] = f is not antisymmetric
    let v = AlgebraData::new(names(&["e", "f"]), vec![op("b", 2, &[(0, 1, vec![(0, q(1))]), (1, 0, vec![(1, q(1))])])])
        .unwrap();
    assert!(matches!(v.validate(&lie()), Err(UeaError::NotAnAlgebra { .. })));
    assert!(matches!(
        AlgebraData::new(names(&["e"]), vec![AlgebraOp { gen: "b".into(), table: vec![] }]),
        Err(UeaError::Shape { .. })
    ));
    assert!(matches!(enveloping_presentation(&lie(), &abelian(1, &["c"])), Err(UeaError::MissingOperation(_))));
}

#[test]
fn coefficient_triples_of_jacobi() {
    let t = coefficient_triples(&lie()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!((t[0].a[0][0].clone(), t[0].b[0][0].clone(), t[0].c[0][0].clone()), (q(1), q(-1), q(-1)));
}

#[test]
fn resource_bound_gives_partial_dims() {
    let ap = enveloping_presentation(&lie(), &abelian(3, &["b"])).unwrap();
    match filtered_dims_bounded(&ap, 5, 100) {
        Err(UeaError::ResourceBound { partial, .. }) => assert_eq!(partial, vec![1, 4, 10, 20]),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn oracle_agrees_on_named_instances() {
    let cases: Vec<(Presentation, AlgebraData, usize)> = vec![
        (lie(), sl2(), 3),
        (lie(), abelian(2, &["b"]), 4),
        (leib(), leib_witness(), 3),
        (standard::assoc().expand().unwrap(), idempotent(&["m", "m'"]), 4),
        (standard::com().expand().unwrap(), idempotent(&["m"]), 4),
        (standard::lie2().expand().unwrap(), abelian(2, &["b1", "b2"]), 3),
    ];
    for (p, v, depth) in cases {
        let ap = enveloping_presentation(&p, &v).unwrap();
        assert!(ap.letter_count() <= 4);
        assert_eq!(filtered_dims(&ap, depth).unwrap(), oracle::filtered_dims(ap.letter_count(), &ap.relations, depth));
    }
}

#[test]
fn top_part_of_trivial_algebra_is_unchanged() {
    let ap = enveloping_presentation(&leib(), &leib_witness().trivial()).unwrap();
    assert_eq!(filtered_dims(&ap, 3).unwrap(), filtered_dims(&ap.top_part(), 3).unwrap());
}

#[test]
fn one_dimensional_trivial_algebra_matches_u0() {
    for p in [lie(), standard::com().expand().unwrap()] {
        let g = complete(&p, &pathlex(&p.signature), 6).unwrap();
        let u0 = u0_dims(&g, &derivative_presentation(&p), 4).unwrap();
        let names: Vec<String> = p.signature.names();
        let gens: Vec<&str> = names.iter().map(String::as_str).collect();
        let ap = enveloping_presentation(&p, &abelian(1, &gens)).unwrap();
        assert_eq!(graded_dims(&filtered_dims(&ap, 4).unwrap()), u0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn random_lie_tables(entries in proptest::collection::vec((0usize..2, 0usize..2, 0usize..2, -2i64..3), 0..5), depth in 1usize..5) {
        let p: Vec<_> = entries.into_iter().map(|(a, b, c, x)| (a, b, vec![(c, q(x))])).collect();
        let v = AlgebraData::new(names(&["e", "f"]), vec![op("b", 2, &p)]).unwrap();
        let ap = enveloping_presentation(&lie(), &v).unwrap();
        let f = filtered_dims(&ap, depth).unwrap();
        prop_assert!(f.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(f, oracle::filtered_dims(ap.letter_count(), &ap.relations, depth));
    }
}
