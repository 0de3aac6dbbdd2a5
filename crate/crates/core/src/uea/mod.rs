//! Universal enveloping algebras of algebras over binary quadratic operads.
//!
//! A quadratic relation of the shuffle presentation is a combination of the
//! shapes `γ_i(γ_j(1,2),3)`, `γ_i(γ_j(1,3),2)` and `γ_i(1,γ_j(2,3))` with
//! coefficients `a_ij`, `b_ij` and `c_ij`. Reading leaf 1 as the module
//! element, leaf 2 as `v` and leaf 3 as `w` gives the relation
//! `a_ij ∂γ_i(w)∂γ_j(v) + b_ij ∂γ_i(v)∂γ_j(w) + c_ij ∂γ_i(γ_j(v,w)) = 0`
//! of `U(V)`, one for each pair of basis vectors.

mod words;

use num_traits::Zero;
use thiserror::Error;

use crate::dual::Shape;
use crate::groebner::Presentation;
use crate::rational::Q;
use crate::trees::{Node, ShuffleTree};

pub use words::{NcElement, Word, WordSpace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UeaError {
    #[error("generator `{0}` is not binary")]
    NotBinary(String),
    #[error("relation {0} is not quadratic")]
    NotQuadratic(usize),
    #[error("no structure constants for generator `{0}`")]
    MissingOperation(String),
    #[error("structure constants of `{name}` have the wrong shape: {msg}")]
    Shape { name: String, msg: String },
    #[error("relation {relation} fails on basis vectors ({a}, {b}, {c})")]
    NotAnAlgebra { relation: usize, a: usize, b: usize, c: usize },
    #[error("word space for depth {depth} has {columns} words, above the bound {bound}")]
    ResourceBound { depth: usize, columns: usize, bound: usize, partial: Vec<usize> },
}

/// Structure constants `op(e_a, e_b) = Σ_c table[a][b][c] e_c` of one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraOp {
    pub gen: String,
    pub table: Vec<Vec<Vec<Q>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub dim: usize,
    pub basis: Vec<String>,
    pub ops: Vec<AlgebraOp>,
}

impl AlgebraData {
    pub fn new(basis: Vec<String>, ops: Vec<AlgebraOp>) -> Result<Self, UeaError> {
        let d = basis.len();
        for op in &ops {
            let bad = |msg: String| UeaError::Shape { name: op.gen.clone(), msg };
            if op.table.len() != d {
                return Err(bad(format!("{} rows, expected {d}", op.table.len())));
            }
            for row in &op.table {
                if row.len() != d || row.iter().any(|v| v.len() != d) {
                    return Err(bad(format!("every entry must be a {d}x{d} block of length-{d} vectors")));
                }
            }
        }
        Ok(AlgebraData { dim: d, basis, ops })
    }

    /// The same vector space with every operation zero.
    pub fn trivial(&self) -> Self {
        let d = self.dim;
        let ops = self
            .ops
            .iter()
            .map(|op| AlgebraOp { gen: op.gen.clone(), table: vec![vec![vec![Q::zero(); d]; d]; d] })
            .collect();
        AlgebraData { dim: d, basis: self.basis.clone(), ops }
    }

    pub fn is_trivial(&self) -> bool {
        self.ops.iter().all(|op| op.table.iter().flatten().flatten().all(Zero::is_zero))
    }

    fn op(&self, name: &str) -> Result<&AlgebraOp, UeaError> {
        self.ops.iter().find(|o| o.gen == name).ok_or_else(|| UeaError::MissingOperation(name.to_string()))
    }

    fn apply(&self, name: &str, x: &[Q], y: &[Q]) -> Result<Vec<Q>, UeaError> {
        let op = self.op(name)?;
        let mut out = vec![Q::zero(); self.dim];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xa * yb;
                for (c, k) in op.table[a][b].iter().enumerate() {
                    if !k.is_zero() {
                        out[c] += &xy * k;
                    }
                }
            }
        }
        Ok(out)
    }

    fn eval(&self, n: &Node, inputs: &[Vec<Q>]) -> Result<Vec<Q>, UeaError> {
        match n {
            Node::Leaf(l) => Ok(inputs[l - 1].clone()),
            Node::Vertex(g, c) => {
                let x = self.eval(&c[0], inputs)?;
                let y = self.eval(&c[1], inputs)?;
                self.apply(&g.name, &x, &y)
            }
        }
    }

    fn unit(&self, a: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[a] = Q::from_integer(1.into());
        v
    }

    /// Checks that every relation vanishes on all triples of basis vectors.
    pub fn validate(&self, p: &Presentation) -> Result<(), UeaError> {
        for (s, r) in p.relations.iter().enumerate() {
            if r.arity() != 3 {
                return Err(UeaError::NotQuadratic(s));
            }
            for a in 0..self.dim {
                for b in 0..self.dim {
                    for c in 0..self.dim {
                        let inputs = [self.unit(a), self.unit(b), self.unit(c)];
                        let mut total = vec![Q::zero(); self.dim];
                        for (t, k) in r.terms() {
                            for (x, y) in total.iter_mut().zip(self.eval(t.root(), &inputs)?) {
                                *x += k * y;
                            }
                        }
                        if total.iter().any(|x| !x.is_zero()) {
                            return Err(UeaError::NotAnAlgebra { relation: s, a, b, c });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Coefficients of one quadratic relation by shape, indexed by generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTriple {
    pub a: Vec<Vec<Q>>,
    pub b: Vec<Vec<Q>>,
    pub c: Vec<Vec<Q>>,
}

/// The `(a, b, c)` coefficients of every relation of a binary quadratic presentation.
pub fn coefficient_triples(p: &Presentation) -> Result<Vec<CoefficientTriple>, UeaError> {
    let gens = p.signature.gens();
    if let Some(g) = gens.iter().find(|g| g.arity != 2) {
        return Err(UeaError::NotBinary(g.name.clone()));
    }
    let k = gens.len();
    let idx = |name: &str| p.signature.index_of(name).expect("generator of the presentation");
    let mut out = Vec::new();
    for (s, r) in p.relations.iter().enumerate() {
        let mut tr = CoefficientTriple {
            a: vec![vec![Q::zero(); k]; k],
            b: vec![vec![Q::zero(); k]; k],
            c: vec![vec![Q::zero(); k]; k],
        };
        for (t, coeff) in r.terms() {
            let shape = quadratic_shape(t).ok_or(UeaError::NotQuadratic(s))?;
            let Node::Vertex(outer, ch) = t.root() else { unreachable!() };
            let inner = match (&ch[0], &ch[1]) {
                (Node::Vertex(g, _), _) | (_, Node::Vertex(g, _)) => g,
                _ => unreachable!(),
            };
            let (i, j) = (idx(&outer.name), idx(&inner.name));
            let slot = match shape {
                Shape::LeftLeft => &mut tr.a,
                Shape::LeftRight => &mut tr.b,
                Shape::RightRight => &mut tr.c,
            };
            slot[i][j] += coeff;
        }
        out.push(tr);
    }
    Ok(out)
}

fn quadratic_shape(t: &ShuffleTree) -> Option<Shape> {
    if t.arity() != 3 || t.vertex_count() != 2 {
        return None;
    }
    Shape::of(t)
}

/// Generators `∂γ_i(e_a)` and quadratic-linear relations of `U_P(V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocPresentation {
    /// `(i, a)` for generator `γ_i` and basis vector `e_a`; the word letter is `i * dim + a`.
    pub generators: Vec<(usize, usize)>,
    pub names: Vec<String>,
    pub relations: Vec<NcElement>,
    pub unital: bool,
}

impl AssocPresentation {
    pub fn letter_count(&self) -> usize {
        self.generators.len()
    }

    /// The same presentation with every term shorter than two letters removed.
    pub fn top_part(&self) -> Self {
        let relations = self
            .relations
            .iter()
            .map(|r| r.iter().filter(|(w, _)| w.len() == 2).map(|(w, c)| (w.clone(), c.clone())).collect())
            .collect();
        AssocPresentation { relations, ..self.clone() }
    }

    pub fn display_element(&self, e: &NcElement) -> String {
        words::display(e, &self.names)
    }
}

pub fn enveloping_presentation(p: &Presentation, v: &AlgebraData) -> Result<AssocPresentation, UeaError> {
    let triples = coefficient_triples(p)?;
    let names: Vec<String> = p.signature.names();
    enveloping_from_triples(&names, &triples, v)
}

/// The construction from explicit coefficient triples, one per relation.
pub fn enveloping_from_triples(
    gens: &[String],
    triples: &[CoefficientTriple],
    v: &AlgebraData,
) -> Result<AssocPresentation, UeaError> {
    let k = gens.len();
    let d = v.dim;
    for (s, t) in triples.iter().enumerate() {
        for m in [&t.a, &t.b, &t.c] {
            if m.len() != k || m.iter().any(|r| r.len() != k) {
                return Err(UeaError::Shape { name: format!("relation {s}"), msg: format!("expected {k}x{k} blocks") });
            }
        }
    }
    let tables: Vec<Option<&AlgebraOp>> = gens.iter().map(|g| v.ops.iter().find(|o| &o.gen == g)).collect();
    let letter = |i: usize, a: usize| i * d + a;
    let mut generators = Vec::new();
    let mut names = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for a in 0..d {
            generators.push((i, a));
            names.push(format!("d{g}({})", v.basis[a]));
        }
    }
    let mut relations = Vec::new();
    for t in triples {
        for va in 0..d {
            for wb in 0..d {
                let mut e = NcElement::new();
                for i in 0..k {
                    for j in 0..k {
                        if !t.a[i][j].is_zero() {
                            words::add(&mut e, vec![letter(i, wb), letter(j, va)], &t.a[i][j]);
                        }
                        if !t.b[i][j].is_zero() {
                            words::add(&mut e, vec![letter(i, va), letter(j, wb)], &t.b[i][j]);
                        }
                        if !t.c[i][j].is_zero() {
                            let op = tables[j].ok_or_else(|| UeaError::MissingOperation(gens[j].clone()))?;
                            for (cc, x) in op.table[va][wb].iter().enumerate() {
                                if !x.is_zero() {
                                    words::add(&mut e, vec![letter(i, cc)], &(&t.c[i][j] * x));
                                }
                            }
                        }
                    }
                }
                if !e.is_empty() {
                    relations.push(e);
                }
            }
        }
    }
    Ok(AssocPresentation { generators, names, relations, unital: true })
}

/// Default bound on the number of words of length at most the depth.
pub const DEFAULT_WORD_BOUND: usize = 200_000;

/// `dim F_n` for `n = 0..=depth`, where `F_n` is spanned by words of length at
/// most `n`. The ideal is truncated to consequences that never leave words of
/// length at most `depth`, so for relations that are not homogeneous the last
/// entries are upper bounds.
pub fn filtered_dims(ap: &AssocPresentation, depth: usize) -> Result<Vec<usize>, UeaError> {
    filtered_dims_bounded(ap, depth, DEFAULT_WORD_BOUND)
}

pub fn filtered_dims_bounded(ap: &AssocPresentation, depth: usize, bound: usize) -> Result<Vec<usize>, UeaError> {
    let g = ap.letter_count();
    let columns = WordSpace::count(g, depth);
    if columns > bound {
        let mut reached = depth;
        while reached > 0 && WordSpace::count(g, reached) > bound {
            reached -= 1;
        }
        let partial = WordSpace::new(g, reached).filtered_dims(&ap.relations);
        return Err(UeaError::ResourceBound { depth, columns, bound, partial });
    }
    Ok(WordSpace::new(g, depth).filtered_dims(&ap.relations))
}

pub fn graded_dims(filtered: &[usize]) -> Vec<usize> {
    filtered.iter().enumerate().map(|(n, &f)| if n == 0 { f } else { f - filtered[n - 1] }).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimVerdict {
    MatchUpTo(usize),
    MismatchAt(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub filtered_dims: Vec<usize>,
    pub graded_dims: Vec<usize>,
    /// Filtered dimensions of `U_P(V₀)`.
    pub reference_filtered: Vec<usize>,
    pub reference_dims: Vec<usize>,
    pub verdict: DimVerdict,
}

impl DimReport {
    /// Computed filtered dimensions only overestimate, so a degree where they
    /// fall below those of `U_P(V₀)` rules out the PBW property.
    pub fn refutes(&self) -> bool {
        self.filtered_dims.iter().zip(&self.reference_filtered).any(|(f, r)| f < r)
    }
}

/// Compares `gr U_P(V)` with `U_P(V₀)` degree by degree up to `depth`.
pub fn pbw_compare(p: &Presentation, v: &AlgebraData, depth: usize) -> Result<DimReport, UeaError> {
    let ap = enveloping_presentation(p, v)?;
    let filtered = filtered_dims(&ap, depth)?;
    let reference_filtered = filtered_dims(&ap.top_part(), depth)?;
    let graded = graded_dims(&filtered);
    let reference = graded_dims(&reference_filtered);
    let verdict = match (0..=depth).find(|&n| graded[n] != reference[n]) {
        Some(n) => DimVerdict::MismatchAt(n),
        None => DimVerdict::MatchUpTo(depth),
    };
    Ok(DimReport {
        filtered_dims: filtered,
        graded_dims: graded,
        reference_filtered,
        reference_dims: reference,
        verdict,
    })
}

/// Structure constants from a sparse list `(op, a, b) -> Σ coeff e_c`.
pub fn table_from_products(dim: usize, products: &[(usize, usize, Vec<(usize, Q)>)]) -> Vec<Vec<Vec<Q>>> {
    let mut t = vec![vec![vec![Q::zero(); dim]; dim]; dim];
    for (a, b, out) in products {
        for (c, x) in out {
            t[*a][*b][*c] += x;
        }
    }
    t
}

#[cfg(test)]
mod tests;
