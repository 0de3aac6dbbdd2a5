//! Truncated power series in one variable `t`.

use std::fmt;

use super::coeff::Coeff;
use super::SeriesError;
use crate::rational::{factorial, Q};

/// Coefficients of `t^0..=t^truncation`.
#[derive(Clone, PartialEq)]
pub struct PowerSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn zero(truncation: usize) -> Self {
        PowerSeries { coeffs: vec![C::zero(); truncation + 1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>, truncation: usize) -> Self {
        coeffs.resize(truncation + 1, C::zero());
        PowerSeries { coeffs }
    }

    pub fn from_fn(truncation: usize, f: impl Fn(usize) -> C) -> Self {
        PowerSeries { coeffs: (0..=truncation).map(f).collect() }
    }

    /// The series `t`.
    pub fn t(truncation: usize) -> Self {
        Self::from_fn(truncation, |n| if n == 1 { C::one() } else { C::zero() })
    }

    pub fn constant(c: C, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = c;
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=n.min(self.truncation())].to_vec(), n.min(self.truncation()))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.truncation().min(o.truncation());
        Self::from_fn(n, |i| self.coeffs[i].add(&o.coeffs[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.truncation().min(o.truncation());
        Self::from_fn(n, |i| self.coeffs[i].sub(&o.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.truncation(), |i| self.coeffs[i].neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_fn(self.truncation(), |i| self.coeffs[i].scale(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.truncation().min(o.truncation());
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
            }
        }
        out
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].inverse().ok_or(SeriesError::NotInvertible)?;
        let n = self.truncation();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut s = C::zero();
            for j in 1..=k {
                s = s.add(&self.coeffs[j].mul(&out.coeffs[k - j]));
            }
            out.coeffs[k] = s.mul(&inv0).neg();
        }
        Ok(out)
    }

    /// `self ∘ g`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.truncation().min(g.truncation());
        let g = g.truncate(n);
        let mut h = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            h = h.mul(&g);
            h.coeffs[0] = h.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(h)
    }

    /// Compositional inverse; needs zero constant term and invertible linear term.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.truncation();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let inv1 = self.coeffs[1].inverse().ok_or(SeriesError::VanishingLinearTerm)?;
        let mut h = Self::zero(n);
        h.coeffs[1] = inv1.clone();
        for k in 2..=n {
            let r = self.compose(&h)?;
            h.coeffs[k] = r.coeffs[k].mul(&inv1).neg();
        }
        Ok(h)
    }

    pub fn derivative(&self) -> Self {
        let n = self.truncation();
        if n == 0 {
            return Self::zero(0);
        }
        Self::from_fn(n - 1, |i| self.coeffs[i + 1].scale(&crate::rational::q((i + 1) as i64)))
    }

    /// `f(-t)`.
    pub fn negate_argument(&self) -> Self {
        Self::from_fn(self.truncation(), |i| if i % 2 == 1 { self.coeffs[i].neg() } else { self.coeffs[i].clone() })
    }

    /// `f(c t)` for a coefficient `c`.
    pub fn scale_argument(&self, c: &C) -> Self {
        let mut p = C::one();
        let mut out = Self::zero(self.truncation());
        for i in 0..=self.truncation() {
            out.coeffs[i] = self.coeffs[i].mul(&p);
            p = p.mul(c);
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// First degree whose coefficient has a negative part.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_nonnegative())
    }
}

impl PowerSeries<Q> {
    /// Exponential generating function `Σ dims[n-1] t^n / n!` of arity
    /// dimensions starting at arity 1.
    pub fn egf_from_arity_dims(dims: &[usize]) -> Self {
        let n = dims.len();
        Self::from_fn(n, |k| if k == 0 { crate::rational::zero() } else { Q::new(dims[k - 1].into(), factorial(k)) })
    }

    /// EGF `Σ dims[n] t^n / n!` of dimensions starting at degree 0.
    pub fn egf_from_dims(dims: &[usize]) -> Self {
        Self::from_fn(dims.len().saturating_sub(1), |k| Q::new(dims[k].into(), factorial(k)))
    }

    /// `n! * [t^n]`, the dimensions encoded by an EGF.
    pub fn egf_dims(&self) -> Vec<Q> {
        self.coeffs.iter().enumerate().map(|(n, c)| c * Q::from_integer(factorial(n))).collect()
    }
}

impl<C: Coeff> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.truncation() + 1)
    }
}

impl<C: Coeff> fmt::Debug for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries({self})")
    }
}
