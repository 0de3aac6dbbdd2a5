//! Coefficient rings for series: rationals and Laurent polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Operations a series coefficient must support.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    fn from_q(c: Q) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// Every rational coefficient is nonnegative.
    fn is_nonnegative(&self) -> bool;
}

impl Coeff for Q {
    fn zero() -> Self {
        <Q as Zero>::zero()
    }
    fn one() -> Self {
        <Q as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn from_q(c: Q) -> Self {
        c
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

/// A Laurent polynomial in one parameter `q` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<i32, Q>,
}

impl QPoly {
    pub fn constant(c: Q) -> Self {
        let mut p = QPoly::default();
        p.add_term(0, c);
        p
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i32, c: Q) -> Self {
        let mut p = QPoly::default();
        p.add_term(exp, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, <Q as One>::one())
    }

    pub fn add_term(&mut self, exp: i32, c: Q) {
        if Zero::is_zero(&c) {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(<Q as Zero>::zero);
        *e += c;
        if Zero::is_zero(e) {
            self.terms.remove(&exp);
        }
    }

    /// Terms by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exp: i32) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(<Q as Zero>::zero)
    }

    /// Lowest and highest exponents present.
    pub fn span(&self) -> Option<(i32, i32)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(<Q as Zero>::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Value at a rational point `q = x` (nonzero when negative powers occur).
    pub fn eval(&self, x: &Q) -> Q {
        let mut s = <Q as Zero>::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            s += c * p;
        }
        s
    }

    /// The first term with a negative coefficient.
    pub fn first_negative(&self) -> Option<(i32, Q)> {
        self.terms.iter().find(|(_, c)| c.is_negative()).map(|(e, c)| (*e, c.clone()))
    }
}

impl Coeff for QPoly {
    fn zero() -> Self {
        QPoly::default()
    }
    fn one() -> Self {
        QPoly::constant(<Q as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = QPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        QPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
    fn scale(&self, c: &Q) -> Self {
        let mut out = QPoly::default();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }
    fn from_q(c: Q) -> Self {
        QPoly::constant(c)
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(QPoly::monomial(-e, c.recip()))
    }
    fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest power first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match *e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if *e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}
