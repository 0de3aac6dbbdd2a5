//! Quadratic Koszul dual of binary quadratic shuffle presentations.
//!
//! The arity-3 weight-2 monomials come in three shapes, `γ(δ(1,2),3)`,
//! `γ(δ(1,3),2)` and `γ(1,δ(2,3))`. The pairing is diagonal on monomials with
//! sign `ε(shape) · s(γ) · s(δ)`, where `ε` is `+1, -1, -1` on the three shapes
//! and `s` is the generator's `dual_sign`. The dual relations are the
//! annihilator of the relations.

use num_traits::Zero;
use thiserror::Error;

use crate::groebner::{Element, GroebnerError, Presentation};
use crate::linalg::{nullspace, SparseRow};
use crate::rational::Q;
use crate::symmetric::span_basis;
use crate::trees::{enumerate_monomials, Node, ShuffleTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("generator `{0}` is not binary")]
    NotBinary(String),
    #[error("relation {index} is not quadratic")]
    NotQuadratic { index: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    LeftLeft,
    LeftRight,
    RightRight,
}

impl Shape {
    pub fn of(t: &ShuffleTree) -> Option<Shape> {
        let Node::Vertex(_, c) = t.root() else { return None };
        match (&c[0], &c[1]) {
            (Node::Vertex(_, inner), Node::Leaf(3)) if matches!(inner[1], Node::Leaf(2)) => Some(Shape::LeftLeft),
            (Node::Vertex(_, _), Node::Leaf(2)) => Some(Shape::LeftRight),
            (Node::Leaf(1), Node::Vertex(_, _)) => Some(Shape::RightRight),
            _ => None,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Shape::LeftLeft => 1,
            Shape::LeftRight | Shape::RightRight => -1,
        }
    }
}

/// Diagonal pairing coefficient of a quadratic monomial.
pub fn pairing_sign(t: &ShuffleTree) -> i8 {
    let shape = Shape::of(t).expect("quadratic arity-3 monomial");
    let Node::Vertex(outer, c) = t.root() else { unreachable!() };
    let inner = match (&c[0], &c[1]) {
        (Node::Vertex(g, _), _) | (_, Node::Vertex(g, _)) => g,
        _ => unreachable!(),
    };
    shape.sign() * outer.dual_sign * inner.dual_sign
}

#[derive(Debug, Clone)]
pub struct QuadraticData {
    pub presentation: Presentation,
    /// Basis of the arity-3 weight-2 component, `3g²` monomials.
    pub monomials: Vec<ShuffleTree>,
    /// Relations as coordinate rows over `monomials`.
    pub relations: Vec<SparseRow>,
    pub pairing: Vec<i8>,
}

impl QuadraticData {
    pub fn new(p: &Presentation) -> Result<Self, DualError> {
        if let Some(g) = p.signature.gens().iter().find(|g| g.arity != 2) {
            return Err(DualError::NotBinary(g.name.clone()));
        }
        let monomials = enumerate_monomials(p.signature.gens(), 3, Some(2)).map_err(GroebnerError::from)?;
        let monomials: Vec<ShuffleTree> = monomials.into_iter().filter(|t| t.vertex_count() == 2).collect();
        let mut relations = Vec::new();
        for (index, r) in p.relations.iter().enumerate() {
            let mut row = SparseRow::new();
            for (t, c) in r.terms() {
                let i = monomials.iter().position(|m| m == t).ok_or(DualError::NotQuadratic { index })?;
                row.insert(i, c.clone());
            }
            relations.push(row);
        }
        let pairing = monomials.iter().map(pairing_sign).collect();
        Ok(QuadraticData { presentation: p.clone(), monomials, relations, pairing })
    }

    pub fn relation_dim(&self) -> usize {
        crate::linalg::rank(self.relations.iter().cloned())
    }
}

/// The Koszul dual presentation on the same generator names.
pub fn quadratic_dual(p: &Presentation) -> Result<Presentation, DualError> {
    let data = QuadraticData::new(p)?;
    let twisted = data
        .relations
        .iter()
        .map(|row| row.iter().map(|(i, c)| (*i, c * Q::from_integer(data.pairing[*i].into()))).collect::<SparseRow>());
    let ann = nullspace(twisted, data.monomials.len());
    let elements: Vec<Element> = ann
        .into_iter()
        .filter(|row| row.values().any(|c| !c.is_zero()))
        .map(|row| Element::from_terms(row.into_iter().map(|(i, c)| (c, data.monomials[i].clone()))).expect("arity 3"))
        .collect();
    Ok(Presentation::new(p.signature.clone(), span_basis(&elements))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::test_support::{leib, lie, oppdeglex, pathlex, prelie};
    use crate::groebner::{complete, normal_monomial_counts, normal_monomials};
    use crate::symmetric::{standard, SymGenerator, SymmetricPresentation, Symmetry};
    use crate::trees::is_left_comb;

    fn dims(p: &Presentation, n: usize) -> Vec<usize> {
        let g = complete(p, &pathlex(&p.signature), n).unwrap();
        normal_monomial_counts(&g, n).unwrap()
    }

    fn same_span(a: &Presentation, b: &Presentation) -> bool {
        let mut all = a.relations.clone();
        all.extend(b.relations.iter().cloned());
        let n = span_basis(&all).len();
        n == span_basis(&a.relations).len() && n == span_basis(&b.relations).len()
    }

    #[test]
    fn shapes_and_signs() {
        let sig = crate::groebner::test_support::sig2();
        let t = |s: &str| ShuffleTree::parse(s, &sig).unwrap();
        assert_eq!(Shape::of(&t("gt(gt(1,2),3)")), Some(Shape::LeftLeft));
        assert_eq!(Shape::of(&t("gt(lt(1,3),2)")), Some(Shape::LeftRight));
        assert_eq!(Shape::of(&t("lt(1,gt(2,3))")), Some(Shape::RightRight));
        assert_eq!(pairing_sign(&t("gt(gt(1,2),3)")), 1);
        assert_eq!(pairing_sign(&t("gt(lt(1,2),3)")), -1);
        assert_eq!(pairing_sign(&t("lt(1,lt(2,3))")), -1);
    }

    #[test]
    fn lie_and_com_are_dual() {
        let com = quadratic_dual(&lie()).unwrap();
        let expected = SymmetricPresentation::new(
            vec![SymGenerator::new("b", Symmetry::Symmetric)],
            vec!["b(b(1,2),3) - b(1,b(2,3))"],
        );
        assert!(same_span(&com, &expected.expand().unwrap()));
        assert_eq!(dims(&com, 4), vec![1, 1, 1, 1]);
        let back = quadratic_dual(&com).unwrap();
        assert!(same_span(&back, &lie()));
    }

    #[test]
    fn prelie_and_perm_are_dual() {
        let perm = quadratic_dual(&prelie()).unwrap();
        assert_eq!(dims(&perm, 4), vec![1, 2, 3, 4]);
        let sym = quadratic_dual(&standard::prelie().expand().unwrap()).unwrap();
        assert!(same_span(&sym, &standard::perm().expand().unwrap()));
        assert!(same_span(&quadratic_dual(&sym).unwrap(), &standard::prelie().expand().unwrap()));
    }

    #[test]
    fn associative_and_poisson_are_self_dual() {
        let a = standard::assoc().expand().unwrap();
        assert!(same_span(&quadratic_dual(&a).unwrap(), &a));
        let pois = standard::pois().expand().unwrap();
        let d = quadratic_dual(&pois).unwrap();
        assert_eq!(d.relations.len(), pois.relations.len());
        assert_eq!(dims(&d, 4), vec![1, 2, 6, 24]);
    }

    #[test]
    fn complement_identity_and_involution() {
        for p in [lie(), prelie(), leib(), standard::pois().expand().unwrap(), standard::lie2().expand().unwrap()] {
            let g = p.signature.len();
            let d = quadratic_dual(&p).unwrap();
            let r = QuadraticData::new(&p).unwrap().relation_dim();
            assert_eq!(r + d.relations.len(), 3 * g * g);
            let dd = quadratic_dual(&d).unwrap();
            assert!(same_span(&dd, &p));
            assert_eq!(dims(&dd, 4), dims(&p, 4));
        }
    }

    #[test]
    fn leibniz_dual_has_complementary_left_comb_leads() {
        let l = leib();
        let zinb = quadratic_dual(&l).unwrap();
        assert!(same_span(
            &zinb,
            &Presentation::new(
                l.signature.clone(),
                standard::zinb()
                    .expand()
                    .unwrap()
                    .relations
                    .iter()
                    .map(|e| {
                        let text = e.to_string().replace("m'(", "GT(").replace("m(", "lt(").replace("GT(", "gt(");
                        Element::parse(&text, &l.signature).unwrap()
                    })
                    .collect()
            )
            .unwrap()
        ));
        let gl = complete(&l, &oppdeglex(&l.signature), 3).unwrap();
        let gz = complete(&zinb, &pathlex(&zinb.signature), 5).unwrap();
        let mut normal = normal_monomials(&gl, 3).unwrap();
        let mut leads: Vec<ShuffleTree> = gz.leading_monomials().iter().filter(|t| t.arity() == 3).cloned().collect();
        normal.sort();
        leads.sort();
        assert_eq!(normal, leads);
        assert!(gz.leading_monomials().iter().all(is_left_comb));
        assert_eq!(normal_monomial_counts(&gz, 5).unwrap(), vec![1, 2, 6, 24, 120]);
    }

    #[test]
    fn rejects_non_quadratic_input() {
        let sig = crate::trees::Signature::new(vec![crate::trees::Generator::new("t", 3)]).unwrap();
        assert!(matches!(quadratic_dual(&Presentation::free(sig)), Err(DualError::NotBinary(_))));
    }
}
