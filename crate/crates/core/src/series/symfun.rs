//! Symmetric functions in the power-sum basis, truncated by total degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::power::PowerSeries;
use super::SeriesError;
use crate::rational::{factorial, Q};

/// An integer partition stored in decreasing order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// `z_λ = Π k^{m_k} m_k!`, the centralizer size of the cycle type λ.
    pub fn z(&self) -> Q {
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_default() += 1;
        }
        let mut z = num_bigint::BigInt::one();
        for (k, m) in mult {
            z *= num_bigint::BigInt::from(k).pow(m as u32) * factorial(m);
        }
        Q::from_integer(z)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn parse(text: &str) -> Option<Partition> {
        let t = text.trim().trim_start_matches('[').trim_end_matches(']');
        if t.is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<usize>> = t.split(',').map(|p| p.trim().parse().ok()).collect();
        Some(Partition::new(parts?))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Σ c_λ p_λ` with all degrees at most `truncation`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFun {
    terms: BTreeMap<Partition, Q>,
    truncation: usize,
}

impl SymFun {
    pub fn zero(truncation: usize) -> Self {
        SymFun { terms: BTreeMap::new(), truncation }
    }

    pub fn constant(c: Q, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(Partition::empty(), c);
        s
    }

    /// The single power sum `p_k`.
    pub fn p(k: usize, truncation: usize) -> Self {
        Self::monomial(Partition::new(vec![k]), Q::one(), truncation)
    }

    pub fn monomial(lambda: Partition, c: Q, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(lambda, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms above the truncation are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() || lambda.size() > self.truncation {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), c.clone())), n.min(self.truncation))
    }

    /// Homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> Self {
        Self::from_terms(
            self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())),
            self.truncation,
        )
    }

    pub fn constant_term(&self) -> Q {
        self.coefficient(&Partition::empty())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.truncate(self.truncation.min(o.truncation));
        for (l, c) in &o.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)), self.truncation)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.truncation.min(o.truncation));
        for (l1, c1) in &self.terms {
            for (l2, c2) in &o.terms {
                if l1.size() + l2.size() <= out.truncation {
                    out.add_term(l1.join(l2), c1 * c2);
                }
            }
        }
        out
    }

    /// The involution `p_i ↦ -p_i`.
    pub fn epsilon(&self) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(l, c)| (l.clone(), if l.len() % 2 == 1 { -c.clone() } else { c.clone() })),
            self.truncation,
        )
    }

    /// `∂/∂p_1`; lowers the truncation by one.
    pub fn d_dp1(&self) -> Self {
        let mut out = Self::zero(self.truncation.saturating_sub(1));
        for (l, c) in &self.terms {
            let m = l.parts().iter().filter(|&&p| p == 1).count();
            if m == 0 {
                continue;
            }
            let mut parts = l.parts().to_vec();
            let pos = parts.iter().rposition(|&p| p == 1).unwrap();
            parts.remove(pos);
            out.add_term(Partition(parts), c * Q::from_integer(m.into()));
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let cinv = c.recip();
        // 1/(c + g) = (1/c) Σ (-g/c)^k
        let g = self.sub(&Self::constant(c, self.truncation)).scale(&-cinv.clone());
        let mut out = Self::constant(Q::one(), self.truncation);
        let mut power = Self::constant(Q::one(), self.truncation);
        for _ in 0..self.truncation {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out.scale(&cinv))
    }

    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut out = Self::constant(Q::one(), self.truncation);
        let mut power = Self::constant(Q::one(), self.truncation);
        for k in 1..=self.truncation {
            power = power.mul(self).scale(&Q::new(1.into(), k.into()));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `p_k[self]`: every `p_j` replaced by `p_{jk}`.
    pub fn adams(&self, k: usize, truncation: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, c)| (l.scaled(k), c.clone())), truncation)
    }

    /// Plethysm `self ∘ inner`; `inner` must have no constant term.
    pub fn plethysm(&self, inner: &SymFun) -> Result<Self, SeriesError> {
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.truncation.min(inner.truncation);
        let adams: Vec<SymFun> = (0..=n).map(|k| if k == 0 { SymFun::zero(n) } else { inner.adams(k, n) }).collect();
        let mut out = Self::zero(n);
        for (l, c) in &self.terms {
            let mut term = Self::constant(c.clone(), n);
            for &p in l.parts() {
                if p > n {
                    term = Self::zero(n);
                    break;
                }
                term = term.mul(&adams[p]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exponential generating function: `p_1 = t`, other power sums vanish.
    pub fn egf(&self) -> PowerSeries<Q> {
        let mut coeffs = vec![Q::zero(); self.truncation + 1];
        for (l, c) in &self.terms {
            if l.parts().iter().all(|&p| p == 1) {
                coeffs[l.len()] += c;
            }
        }
        PowerSeries::from_coeffs(coeffs, self.truncation)
    }

    /// Graded dimension series on a one-dimensional space: `p_k = t^k`.
    pub fn one_dim_series(&self) -> PowerSeries<Q> {
        let mut coeffs = vec![Q::zero(); self.truncation + 1];
        for (l, c) in &self.terms {
            coeffs[l.size()] += c;
        }
        PowerSeries::from_coeffs(coeffs, self.truncation)
    }

    /// First term with a negative coefficient in the power-sum basis.
    pub fn first_negative(&self) -> Option<(&Partition, &Q)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(deg {})", self.truncation + 1);
        }
        let mut by_degree: Vec<(&Partition, &Q)> = self.terms.iter().collect();
        by_degree.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(b.0.cmp(a.0)));
        for (i, (l, c)) in by_degree.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*p{l}")?;
        }
        write!(f, " + O(deg {})", self.truncation + 1)
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFun({self})")
    }
}
