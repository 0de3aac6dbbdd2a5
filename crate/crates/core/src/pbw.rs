//! The operadic PBW tests.
//!
//! Marking the input `1` of an operad `P` gives the two-colored operad whose
//! color-2 part is the derivative `∂P`. In shuffle form the marked input is
//! leaf `1`, so the derivative of a relation is the same relation with the
//! path from leaf `1` to the root recolored. The enveloping functor has the
//! PBW property when `∂P` is free as a right `P`-module, and it certainly has
//! it when the leading monomials of a Gröbner basis are left combs.

use thiserror::Error;

use crate::groebner::{normal_left_combs, normal_monomial_counts, GroebnerBasis, GroebnerError, Presentation};
use crate::rational::Q;
use crate::series::{PowerSeries, SeriesReport};
use crate::trees::{is_left_comb, spine_view, ColoredView, Generator, Node, ShuffleTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("the basis is not certified (certified to arity {certified}, need {needed})")]
    Uncertified { certified: usize, needed: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Prefix of color-2 generator names.
pub const DERIVED_PREFIX: &str = "d";

#[derive(Debug, Clone)]
pub struct DerivedPresentation {
    pub base: Presentation,
    /// `∂γ` for each generator `γ`: one spine input and `arity - 1` color-1 inputs.
    pub color2_generators: Vec<Generator>,
    /// The base relations; in each term the path from leaf 1 carries color 2.
    pub color2_relations: Vec<crate::groebner::Element>,
}

impl DerivedPresentation {
    /// Terms of the `i`-th color-2 relation with their coloring.
    pub fn colored_terms(&self, i: usize) -> Vec<(ColoredView, Q)> {
        self.color2_relations[i].terms().map(|(t, c)| (spine_view(t), c.clone())).collect()
    }

    pub fn strip_colors(&self) -> Presentation {
        self.base.clone()
    }
}

pub fn derivative_presentation(p: &Presentation) -> DerivedPresentation {
    let color2_generators = p
        .signature
        .gens()
        .iter()
        .map(|g| Generator { name: format!("{DERIVED_PREFIX}{}", g.name), ..(**g).clone() })
        .collect();
    DerivedPresentation { base: p.clone(), color2_generators, color2_relations: p.relations.clone() }
}

/// Text of `t` with spine vertices renamed to their color-2 generators.
pub fn render_colored(t: &ShuffleTree) -> String {
    fn go(n: &Node, spine: bool, out: &mut String) {
        match n {
            Node::Leaf(l) => out.push_str(&l.to_string()),
            Node::Vertex(g, children) => {
                if spine {
                    out.push_str(DERIVED_PREFIX);
                }
                out.push_str(&g.name);
                out.push('(');
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    go(c, spine && i == 0, out);
                }
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    go(t.root(), true, &mut out);
    out
}

fn require(g: &GroebnerBasis, needed: usize) -> Result<(), PbwError> {
    if !g.certified || g.certified_arity < needed {
        return Err(PbwError::Uncertified { certified: if g.certified { g.certified_arity } else { 0 }, needed });
    }
    Ok(())
}

/// True iff every leading monomial is a left comb. Needs a certified basis.
pub fn sufficient_left_comb(g: &GroebnerBasis) -> Result<bool, PbwError> {
    require(g, 0)?;
    Ok(g.leading_monomials().iter().all(is_left_comb))
}

/// Spine-only monomials with `n` color-1 inputs avoiding every colored leading
/// monomial, for `n = 0..=max_arity`. In a left comb every divisor has its
/// leaf 1 on the spine, so these are the normal left combs of arity `n + 1`.
pub fn u0_dims(g: &GroebnerBasis, _dp: &DerivedPresentation, max_arity: usize) -> Result<Vec<usize>, PbwError> {
    require(g, max_arity + 1)?;
    let combs = normal_left_combs(g, max_arity + 1)?;
    Ok(combs[1..].iter().map(Vec::len).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericCheck {
    /// The normal left combs freely generate `∂P` up to this degree.
    ConsistentUpTo(usize),
    /// No free module structure is possible: the generator dimensions forced
    /// by `f'_P = f_{U⁰} ∘ f_P` are negative, fractional or exceed the
    /// number of normal left combs in this degree.
    FailsAt(usize),
    /// The forced generator dimensions are admissible but smaller than the
    /// normal left-comb count from this degree on; the chosen order does not
    /// decide freeness.
    Undetermined(usize),
}

/// Per-degree dimensions compared by the numeric check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTable {
    /// `dim P(n)` for `n = 1..=max_arity + 1`.
    pub operad: Vec<usize>,
    /// `dim ∂P(n) = dim P(n + 1)` for `n = 0..=max_arity`.
    pub derivative: Vec<usize>,
    pub u0: Vec<usize>,
    /// `n!` times the coefficient of `t^n` in `f_{U⁰}(f_P(t))`.
    pub composed: Vec<Q>,
    /// Generator dimensions a free module would need: `f'_P ∘ f_P^{-1}`.
    pub forced: Vec<Q>,
}

/// Compares `f'_P` with `f_{U⁰} ∘ f_P` up to degree `max_arity`.
///
/// `∂P` is always generated by the normal left combs, so if it is free its
/// generators number at most `u0_dims` in each degree. Agreement means the
/// associated graded module is free, hence so is `∂P`.
pub fn numeric_pbw_check(
    g: &GroebnerBasis,
    dp: &DerivedPresentation,
    max_arity: usize,
) -> Result<(NumericCheck, DimTable), PbwError> {
    let u0 = u0_dims(g, dp, max_arity)?;
    let operad = normal_monomial_counts(g, max_arity + 1)?;
    let f_p = PowerSeries::<Q>::egf_from_arity_dims(&operad);
    let derivative: Vec<usize> = operad.clone();
    let f_u0 = PowerSeries::<Q>::egf_from_dims(&u0);
    let composed = f_u0.compose(&f_p.truncate(max_arity)).expect("f_P has no constant term").egf_dims();
    // the identity is always normal, so f_P = t + ...
    let inv = f_p.reversion().expect("unit linear term");
    let forced = f_p.derivative().compose(&inv.truncate(max_arity)).expect("no constant term").egf_dims();
    let admissible = |n: usize| {
        let h = &forced[n];
        h.is_integer() && !crate::rational::is_negative(h) && *h <= Q::from_integer(u0[n].into())
    };
    let check = if let Some(n) = (0..=max_arity).find(|&n| !admissible(n)) {
        NumericCheck::FailsAt(n)
    } else if let Some(n) = (0..=max_arity).find(|&n| forced[n] != Q::from_integer(u0[n].into())) {
        NumericCheck::Undetermined(n)
    } else {
        NumericCheck::ConsistentUpTo(max_arity)
    };
    Ok((check, DimTable { operad, derivative, u0, composed, forced }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftComb {
    Yes,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Conclusion {
    Proven,
    Refuted,
    Inconclusive,
}

impl Conclusion {
    pub fn name(self) -> &'static str {
        match self {
            Conclusion::Proven => "proven",
            Conclusion::Refuted => "refuted",
            Conclusion::Inconclusive => "inconclusive",
        }
    }
}

/// Which test produced a finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Left-comb leading monomials of a Gröbner basis imply PBW.
    LeftCombBasis,
    /// `∂P` free as a right `P`-module, checked on dimensions.
    FreeModuleCount,
    /// Positivity of `-(d/dt f_{P!}(-t))^{-1}` or its character.
    SeriesPositivity,
    /// A concrete algebra whose enveloping algebra has the wrong size.
    EnvelopingWitness,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::LeftCombBasis => "left-comb-basis",
            Source::FreeModuleCount => "free-module-count",
            Source::SeriesPositivity => "series-positivity",
            Source::EnvelopingWitness => "enveloping-witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub source: Source,
    pub conclusion: Conclusion,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PbwVerdict {
    pub sufficient_left_comb: LeftComb,
    pub numeric_check: NumericCheck,
    pub series_necessary: Option<SeriesReport>,
    pub details: DimTable,
    pub narrative: Vec<Finding>,
}

impl PbwVerdict {
    /// A refutation or a proof settles the question; otherwise it stays open.
    pub fn conclusion(&self) -> Conclusion {
        let has = |c| self.narrative.iter().any(|f| f.conclusion == c);
        if has(Conclusion::Refuted) {
            Conclusion::Refuted
        } else if has(Conclusion::Proven) {
            Conclusion::Proven
        } else {
            Conclusion::Inconclusive
        }
    }

    pub fn add_finding(&mut self, source: Source, conclusion: Conclusion, detail: impl Into<String>) {
        self.narrative.push(Finding { source, conclusion, detail: detail.into() });
    }

    pub fn attach_series(&mut self, report: SeriesReport) {
        let finding = if report.passes() {
            (Conclusion::Inconclusive, "series coefficients are nonnegative".to_string())
        } else {
            let v = report.first_violation.as_ref().expect("failing report has a violation");
            (Conclusion::Refuted, format!("negative coefficient {} in degree {}", v.value, v.degree))
        };
        self.add_finding(Source::SeriesPositivity, finding.0, finding.1);
        self.series_necessary = Some(report);
    }
}

/// Runs the left-comb test and the numeric check on a certified basis.
pub fn pbw_verdict(g: &GroebnerBasis, max_arity: usize) -> Result<PbwVerdict, PbwError> {
    let p = Presentation { signature: g.signature.clone(), relations: g.elements().to_vec() };
    let dp = derivative_presentation(&p);
    let left = sufficient_left_comb(g)?;
    let (numeric, details) = numeric_pbw_check(g, &dp, max_arity)?;
    let mut v = PbwVerdict {
        sufficient_left_comb: if left { LeftComb::Yes } else { LeftComb::NotApplicable },
        numeric_check: numeric,
        series_necessary: None,
        details,
        narrative: Vec::new(),
    };
    if left {
        v.add_finding(Source::LeftCombBasis, Conclusion::Proven, "every leading monomial is a left comb");
    } else {
        let bad = g.leading_monomials().iter().find(|t| !is_left_comb(t)).expect("some lead is not a left comb");
        v.add_finding(
            Source::LeftCombBasis,
            Conclusion::Inconclusive,
            format!("leading monomial {bad} is not a left comb"),
        );
    }
    match numeric {
        NumericCheck::ConsistentUpTo(n) => v.add_finding(
            Source::FreeModuleCount,
            Conclusion::Inconclusive,
            format!("dimensions agree up to degree {n}"),
        ),
        NumericCheck::FailsAt(n) => {
            let forced = &v.details.forced[n];
            let u0 = v.details.u0[n];
            v.add_finding(
                Source::FreeModuleCount,
                Conclusion::Refuted,
                format!("degree {n}: a free module needs {forced} generators, at most {u0} are available"),
            )
        }
        NumericCheck::Undetermined(n) => v.add_finding(
            Source::FreeModuleCount,
            Conclusion::Inconclusive,
            format!("degree {n}: fewer generators forced than normal left combs; the order does not decide"),
        ),
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::quadratic_dual;
    use crate::groebner::complete;
    use crate::groebner::test_support::{leib, lie, oppdeglex, pathlex, prelie, sig2};
    use crate::symmetric::standard;
    use crate::trees::{enumerate_monomials, MonomialOrder, OrderKind, Signature};

    fn basis(p: &Presentation, n: usize) -> GroebnerBasis {
        complete(p, &pathlex(&p.signature), n).unwrap()
    }

    #[test]
    fn derivative_keeps_relations() {
        let l = lie();
        let dp = derivative_presentation(&l);
        assert_eq!(dp.color2_generators.len(), 1);
        assert_eq!(dp.color2_generators[0].name, "db");
        assert_eq!(dp.color2_generators[0].arity, 2);
        assert_eq!(dp.strip_colors().relations, l.relations);
        let terms = dp.colored_terms(0);
        assert_eq!(terms.len(), 3);
        let rendered: Vec<String> = terms.iter().map(|(v, _)| render_colored(&v.tree)).collect();
        assert!(rendered.contains(&"db(1,b(2,3))".to_string()));
        assert!(rendered.contains(&"db(db(1,2),3)".to_string()));
        let com = standard::com().expand().unwrap();
        let dc = derivative_presentation(&com);
        // m(m(1,2),3) = m(m(1,3),2): the spine product commutes
        let colored: Vec<String> =
            dc.color2_relations.iter().flat_map(|r| r.terms().map(|(t, _)| render_colored(t))).collect();
        assert!(colored.contains(&"dm(dm(1,2),3)".to_string()));
        assert!(colored.contains(&"dm(dm(1,3),2)".to_string()));
        let free = derivative_presentation(&Presentation::free(sig2()));
        assert!(free.color2_relations.is_empty());
    }

    #[test]
    fn left_comb_criterion() {
        let pl = basis(&prelie(), 5);
        assert!(sufficient_left_comb(&pl).unwrap());
        let l = leib();
        let gl = complete(&l, &oppdeglex(&l.signature), 5).unwrap();
        assert!(!sufficient_left_comb(&gl).unwrap());
        let z = quadratic_dual(&l).unwrap();
        assert!(sufficient_left_comb(&basis(&z, 5)).unwrap());
        let raw = GroebnerBasis::from_elements(pl.signature.clone(), pl.order.clone(), pl.elements().to_vec()).unwrap();
        assert!(matches!(sufficient_left_comb(&raw), Err(PbwError::Uncertified { .. })));
    }

    #[test]
    fn u0_dimensions() {
        let l = lie();
        let g = basis(&l, 6);
        assert_eq!(u0_dims(&g, &derivative_presentation(&l), 4).unwrap(), vec![1, 1, 1, 1, 1]);
        let a = standard::assoc().expand().unwrap();
        let g = basis(&a, 6);
        // k ⊕ V ⊕ V ⊕ V⊗V
        assert_eq!(u0_dims(&g, &derivative_presentation(&a), 4).unwrap(), vec![1, 2, 2, 0, 0]);
        let f = Presentation::free(Signature::new(vec![Generator::binary("m")]).unwrap());
        let g = basis(&f, 6);
        assert_eq!(u0_dims(&g, &derivative_presentation(&f), 4).unwrap(), vec![1, 1, 2, 6, 24]);
        assert!(u0_dims(&basis(&l, 4), &derivative_presentation(&l), 4).is_err());
    }

    #[test]
    fn free_u0_matches_brute_force_spine_count() {
        let sig = Signature::new(vec![Generator::binary("m"), Generator::new("t", 3)]).unwrap();
        let f = Presentation::free(sig.clone());
        let order = MonomialOrder::for_signature(OrderKind::PathLex, &sig);
        let g = complete(&f, &order, 6).unwrap();
        let u0 = u0_dims(&g, &derivative_presentation(&f), 5).unwrap();
        for n in 0..=5 {
            let all = enumerate_monomials(sig.gens(), n + 1, None).unwrap();
            let spine = all.iter().filter(|t| spine_view(t).spine_only()).count();
            assert_eq!(u0[n], spine, "n = {n}");
        }
    }

    #[test]
    fn numeric_check() {
        let l = lie();
        let (c, _) = numeric_pbw_check(&basis(&l, 6), &derivative_presentation(&l), 5).unwrap();
        assert_eq!(c, NumericCheck::ConsistentUpTo(5));
        let perm = quadratic_dual(&prelie()).unwrap();
        let (c, t) = numeric_pbw_check(&basis(&perm, 4), &derivative_presentation(&perm), 3).unwrap();
        assert_eq!(c, NumericCheck::FailsAt(2));
        assert_eq!(t.derivative[2], 3);
        assert_eq!(t.forced[2], Q::from_integer((-1).into()));
        // associative: free, but not visible under this order
        let a = standard::assoc().expand().unwrap();
        let g = complete(&a, &oppdeglex(&a.signature), 5).unwrap();
        let (c, t) = numeric_pbw_check(&g, &derivative_presentation(&a), 4).unwrap();
        assert_eq!(c, NumericCheck::Undetermined(2));
        assert_eq!(t.forced[2], Q::from_integer(2.into()));
        let f = Presentation::free(sig2());
        for n in 1..=4 {
            let (c, _) = numeric_pbw_check(&basis(&f, n + 1), &derivative_presentation(&f), n).unwrap();
            assert_eq!(c, NumericCheck::ConsistentUpTo(n));
        }
    }

    #[test]
    fn left_comb_implies_numeric_consistency() {
        let pl = prelie();
        let z = quadratic_dual(&leib()).unwrap();
        for p in [pl, z, lie(), standard::assoc().expand().unwrap(), standard::com().expand().unwrap()] {
            let g = basis(&p, 6);
            if sufficient_left_comb(&g).unwrap() {
                for n in 1..=5 {
                    let (c, _) = numeric_pbw_check(&g, &derivative_presentation(&p), n).unwrap();
                    assert_eq!(c, NumericCheck::ConsistentUpTo(n));
                }
            }
        }
    }

    #[test]
    fn verdicts() {
        let v = pbw_verdict(&basis(&prelie(), 5), 4).unwrap();
        assert_eq!(v.conclusion(), Conclusion::Proven);
        let perm = quadratic_dual(&prelie()).unwrap();
        let v = pbw_verdict(&basis(&perm, 5), 4).unwrap();
        assert_eq!(v.conclusion(), Conclusion::Refuted);
        assert_eq!(v.narrative[1].source, Source::FreeModuleCount);
    }
}
