//! Generating series of the standard operads.

use super::coeff::{Coeff, QPoly};
use super::power::PowerSeries;
use super::symfun::{Partition, SymFun};
use crate::rational::{factorial, one, zero, Q};

fn inv(n: usize) -> Q {
    Q::new(1.into(), n.into())
}

/// `e^t`.
pub fn exp_series(n: usize) -> PowerSeries<Q> {
    PowerSeries::from_fn(n, |k| Q::new(1.into(), factorial(k)))
}

/// `-ln(1-t)`.
pub fn log_series(n: usize) -> PowerSeries<Q> {
    PowerSeries::from_fn(n, |k| if k == 0 { zero() } else { inv(k) })
}

/// `1/(1-t)`.
pub fn geometric(n: usize) -> PowerSeries<Q> {
    PowerSeries::from_fn(n, |_| one())
}

/// `f_Com = e^t - 1`.
pub fn com_egf(n: usize) -> PowerSeries<Q> {
    PowerSeries::from_fn(n, |k| if k == 0 { zero() } else { Q::new(1.into(), factorial(k)) })
}

/// `f_Lie = -ln(1-t)`.
pub fn lie_egf(n: usize) -> PowerSeries<Q> {
    log_series(n)
}

/// `f_As = t/(1-t)`.
pub fn as_egf(n: usize) -> PowerSeries<Q> {
    PowerSeries::from_fn(n, |k| if k == 0 { zero() } else { one() })
}

/// `f_Pois(t, q) = f_Com ∘ (f_Lie(q t) / q)`.
pub fn pois_egf(n: usize) -> PowerSeries<QPoly> {
    let inner: PowerSeries<QPoly> =
        PowerSeries::from_fn(n, |k| if k == 0 { QPoly::zero() } else { QPoly::monomial(k as i32 - 1, inv(k)) });
    to_qpoly(&com_egf(n)).compose(&inner).expect("inner series has no constant term")
}

pub fn to_qpoly(f: &PowerSeries<Q>) -> PowerSeries<QPoly> {
    f.map(|c| QPoly::constant(c.clone()))
}

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// `Σ_{k≥1} p_k / k`.
fn sum_pk_over_k(n: usize) -> SymFun {
    SymFun::from_terms((1..=n).map(|k| (Partition::new(vec![k]), inv(k))), n)
}

/// `Σ_{k≥1} p_k`.
fn sum_pk(n: usize) -> SymFun {
    SymFun::from_terms((1..=n).map(|k| (Partition::new(vec![k]), one())), n)
}

/// `h = exp(Σ p_k/k)`, the character of the symmetric algebra.
pub fn h_series(n: usize) -> SymFun {
    sum_pk_over_k(n).exp().expect("no constant term")
}

/// `χ_Com = exp(Σ p_k/k) - 1`.
pub fn chi_com(n: usize) -> SymFun {
    h_series(n).sub(&SymFun::constant(one(), n))
}

/// `χ_Lie = Σ_d μ(d)/d · log(1/(1-p_d))`.
pub fn chi_lie(n: usize) -> SymFun {
    let mut out = SymFun::zero(n);
    for d in 1..=n {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        for k in 1..=n / d {
            let c = Q::from_integer(mu.into()) * inv(d) * inv(k);
            out.add_term(Partition::new(vec![d; k]), c);
        }
    }
    out
}

/// `χ_As = p_1/(1-p_1)`.
pub fn chi_as(n: usize) -> SymFun {
    SymFun::from_terms((1..=n).map(|k| (Partition::new(vec![1; k]), one())), n)
}

/// `(Σ p_k) · exp(Σ p_k/k)`, the character of the dual of the operad of two
/// compatible brackets.
pub fn lie2_dual(n: usize) -> SymFun {
    sum_pk(n).mul(&h_series(n))
}

/// `exp(Σ p_k/k) / (1 - Σ p_k)`.
pub fn lie2_u0_expected(n: usize) -> SymFun {
    let denom = SymFun::constant(one(), n).sub(&sum_pk(n));
    h_series(n).mul(&denom.inverse().expect("unit constant term"))
}

/// Names accepted by [`named_egf`].
pub const EGF_NAMES: &[&str] = &["exp", "log", "geometric", "com", "lie", "as", "pois"];

/// Names accepted by [`named_sym`].
pub const SYM_NAMES: &[&str] = &["com", "lie", "as", "h", "lie2_dual"];

pub fn named_egf(name: &str, n: usize) -> Option<PowerSeries<QPoly>> {
    Some(match name {
        "exp" => to_qpoly(&exp_series(n)),
        "log" => to_qpoly(&log_series(n)),
        "geometric" => to_qpoly(&geometric(n)),
        "com" => to_qpoly(&com_egf(n)),
        "lie" => to_qpoly(&lie_egf(n)),
        "as" => to_qpoly(&as_egf(n)),
        "pois" => pois_egf(n),
        _ => return None,
    })
}

pub fn named_sym(name: &str, n: usize) -> Option<SymFun> {
    Some(match name {
        "com" => chi_com(n),
        "lie" => chi_lie(n),
        "as" => chi_as(n),
        "h" => h_series(n),
        "lie2_dual" => lie2_dual(n),
        _ => return None,
    })
}
