//! Schur expansion through symmetric group characters.
//!
//! `p_μ = Σ_λ χ^λ(μ) s_λ`, with the characters computed by the
//! Murnaghan–Nakayama rule on beta-sets: removing a rim hook of length `r`
//! moves one bead from position `b` to the free position `b - r`, with sign
//! `(-1)^(beads strictly between)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::Zero;

use super::symfun::{Partition, SymFun};
use crate::rational::Q;

static CHAR_CACHE: Mutex<Option<HashMap<(Vec<usize>, Vec<usize>), i64>>> = Mutex::new(None);

fn beta_set(lambda: &[usize]) -> Vec<usize> {
    let l = lambda.len();
    lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect()
}

fn from_beta_set(beta: &[usize]) -> Vec<usize> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    let parts: Vec<usize> = b.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).filter(|&p| p > 0).collect();
    parts
}

fn character_uncached(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let r = mu[0];
    let rest = &mu[1..];
    let beta = beta_set(lambda);
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * character(&from_beta_set(&nb), rest);
    }
    total
}

/// The irreducible character `χ^λ` at the class of cycle type `μ`.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = CHAR_CACHE.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return *v;
    }
    let v = character_uncached(lambda, mu);
    CHAR_CACHE.lock().unwrap().get_or_insert_with(HashMap::new).insert(key, v);
    v
}

/// Coefficients in the Schur basis; zero coefficients are omitted.
pub fn schur_expand(f: &SymFun) -> BTreeMap<Partition, Q> {
    let mut out: BTreeMap<Partition, Q> = BTreeMap::new();
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &Q)>> = BTreeMap::new();
    for (mu, c) in f.terms() {
        by_degree.entry(mu.size()).or_default().push((mu, c));
    }
    for (n, terms) in by_degree {
        for lambda in Partition::all(n) {
            let mut s = Q::zero();
            for (mu, c) in &terms {
                s += *c * Q::from_integer(character(lambda.parts(), mu.parts()).into());
            }
            if !s.is_zero() {
                out.insert(lambda, s);
            }
        }
    }
    out
}

/// Back to the power-sum basis: `s_λ = Σ_μ χ^λ(μ) / z_μ p_μ`.
pub fn schur_to_p(coeffs: &BTreeMap<Partition, Q>, truncation: usize) -> SymFun {
    let mut out = SymFun::zero(truncation);
    for (lambda, c) in coeffs {
        for mu in Partition::all(lambda.size()) {
            let chi = character(lambda.parts(), mu.parts());
            if chi != 0 {
                out.add_term(mu.clone(), c * Q::from_integer(chi.into()) / mu.z());
            }
        }
    }
    out
}

/// The first Schur coefficient that is negative, by degree then partition.
pub fn first_negative_schur(coeffs: &BTreeMap<Partition, Q>) -> Option<(Partition, Q)> {
    let mut v: Vec<_> = coeffs.iter().filter(|(_, c)| c < &&Q::zero()).collect();
    v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then(b.0.cmp(a.0)));
    v.first().map(|(l, c)| ((*l).clone(), (*c).clone()))
}
