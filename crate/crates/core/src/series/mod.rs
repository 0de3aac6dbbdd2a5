//! Truncated power series, symmetric functions and the series test for PBW.
//!
//! If the enveloping functor of a Koszul operad `P` has the PBW property then
//! `f_{U⁰}(t) = -(d/dt f_{P!}(-t))^{-1}` and, at the level of characters,
//! `χ_{U⁰} = -(∂/∂p_1 χ_{P!}(-p_1, -p_2, …))^{-1}`. Both right-hand sides must
//! therefore be nonnegative, respectively Schur positive.

mod coeff;
pub mod named;
mod power;
mod schur;
mod symfun;

use std::collections::BTreeMap;

use thiserror::Error;

pub use coeff::{Coeff, QPoly};
pub use power::PowerSeries;
pub use schur::{character, first_negative_schur, schur_expand, schur_to_p};
pub use symfun::{Partition, SymFun};

use crate::rational::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("the linear coefficient vanishes, so the derivative is not invertible")]
    VanishingLinearTerm,
    #[error("unknown named series `{0}`")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesData {
    Egf(PowerSeries<QPoly>),
    Sym(SymFun),
}

/// Where a positivity check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub degree: usize,
    pub partition: Option<Partition>,
    /// Exponent of `q` for the offending monomial, when coefficients involve `q`.
    pub q_exponent: Option<i32>,
    pub value: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesReport {
    pub series: SeriesData,
    /// Every coefficient of the (specialized) series is nonnegative.
    pub nonnegative: bool,
    pub schur_positive: Option<bool>,
    pub schur: Option<BTreeMap<Partition, Q>>,
    pub first_violation: Option<Violation>,
}

impl SeriesReport {
    pub fn passes(&self) -> bool {
        self.nonnegative && self.schur_positive != Some(false)
    }
}

fn egf_violation(f: &PowerSeries<QPoly>) -> Option<Violation> {
    let degree = f.first_negative()?;
    let (e, value) = f.coeff(degree).first_negative()?;
    Some(Violation { degree, partition: None, q_exponent: Some(e), value })
}

/// `-(d/dt f_dual(-t))^{-1}`, flagged for negative coefficients. The result
/// is known one degree less than the input.
pub fn necessary_condition_egf(f_dual: &PowerSeries<QPoly>) -> Result<SeriesReport, SeriesError> {
    if !f_dual.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    if f_dual.truncation() < 1 || f_dual.coeff(1).is_zero() {
        return Err(SeriesError::VanishingLinearTerm);
    }
    let d = f_dual.negate_argument().derivative();
    let u = d.invert().map_err(|_| SeriesError::VanishingLinearTerm)?.neg();
    let first_violation = egf_violation(&u);
    Ok(SeriesReport {
        nonnegative: first_violation.is_none(),
        series: SeriesData::Egf(u),
        schur_positive: None,
        schur: None,
        first_violation,
    })
}

/// `-(∂/∂p_1 ε(χ_dual))^{-1}` with its Schur expansion.
pub fn necessary_condition_sym(chi_dual: &SymFun) -> Result<SeriesReport, SeriesError> {
    if !chi_dual.constant_term().is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    if chi_dual.coefficient(&Partition::new(vec![1])).is_zero() {
        return Err(SeriesError::VanishingLinearTerm);
    }
    let d = chi_dual.epsilon().d_dp1();
    let u = d.inverse()?.scale(&-Q::from_integer(1.into()));
    let schur = schur_expand(&u);
    let schur_neg = first_negative_schur(&schur);
    let egf = u.egf();
    let egf_neg = egf.first_negative().map(|n| Violation {
        degree: n,
        partition: None,
        q_exponent: None,
        value: egf.coeff(n).clone(),
    });
    let first_violation = match &schur_neg {
        Some((l, c)) => {
            Some(Violation { degree: l.size(), partition: Some(l.clone()), q_exponent: None, value: c.clone() })
        }
        None => egf_neg.clone(),
    };
    Ok(SeriesReport {
        nonnegative: egf_neg.is_none(),
        schur_positive: Some(schur_neg.is_none()),
        schur: Some(schur),
        series: SeriesData::Sym(u),
        first_violation,
    })
}

/// Composition of power series, with the constant-term precondition checked.
pub fn ps_compose<C: Coeff>(f: &PowerSeries<C>, g: &PowerSeries<C>) -> Result<PowerSeries<C>, SeriesError> {
    f.compose(g)
}

/// Multiplicative inverse of a power series.
pub fn ps_invert<C: Coeff>(f: &PowerSeries<C>) -> Result<PowerSeries<C>, SeriesError> {
    f.invert()
}

pub fn plethysm(outer: &SymFun, inner: &SymFun) -> Result<SymFun, SeriesError> {
    outer.plethysm(inner)
}

pub fn epsilon(chi: &SymFun) -> SymFun {
    chi.epsilon()
}

pub fn d_dp1(chi: &SymFun) -> SymFun {
    chi.d_dp1()
}
