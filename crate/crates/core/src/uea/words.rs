//! Words in a free associative algebra and the truncated ideal span.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{EchelonBasis, SparseRow};
use crate::rational::Q;

pub type Word = Vec<usize>;

/// A noncommutative polynomial: words with nonzero coefficients.
pub type NcElement = BTreeMap<Word, Q>;

pub(crate) fn add(e: &mut NcElement, w: Word, c: &Q) {
    let entry = e.entry(w.clone()).or_insert_with(Q::zero);
    *entry += c;
    if entry.is_zero() {
        e.remove(&w);
    }
}

pub(crate) fn display(e: &NcElement, names: &[String]) -> String {
    if e.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in e.iter().rev().enumerate() {
        let neg = crate::rational::is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let body = if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| names[l].as_str()).collect::<Vec<_>>().join("*")
        };
        if abs == Q::from_integer(1.into()) {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{abs}*{body}"));
        }
    }
    out
}

/// Words of length at most `depth` on `letters` letters, numbered longest first.
#[derive(Debug, Clone)]
pub struct WordSpace {
    letters: usize,
    depth: usize,
    /// `start[len]` is the column of the first word of that length.
    start: Vec<usize>,
    total: usize,
}

impl WordSpace {
    pub fn count(letters: usize, depth: usize) -> usize {
        let mut total = 0usize;
        let mut p = 1usize;
        for _ in 0..=depth {
            total = total.saturating_add(p);
            p = p.saturating_mul(letters);
        }
        total
    }

    pub fn new(letters: usize, depth: usize) -> Self {
        let mut start = vec![0; depth + 1];
        let mut next = 0usize;
        for len in (0..=depth).rev() {
            start[len] = next;
            next += letters.pow(len as u32);
        }
        WordSpace { letters, depth, start, total: next }
    }

    pub fn columns(&self) -> usize {
        self.total
    }

    pub fn index(&self, w: &[usize]) -> usize {
        let mut v = 0usize;
        for &l in w {
            v = v * self.letters + l;
        }
        self.start[w.len()] + v
    }

    fn length_of(&self, col: usize) -> usize {
        (0..=self.depth)
            .rev()
            .find(|&len| col >= self.start[len] && col < self.start[len] + self.letters.pow(len as u32))
            .expect("column in range")
    }

    fn word_of(&self, col: usize) -> Word {
        let len = self.length_of(col);
        let mut v = col - self.start[len];
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = v % self.letters;
            v /= self.letters;
        }
        w
    }

    fn row_of(&self, e: &NcElement) -> SparseRow {
        e.iter().map(|(w, c)| (self.index(w), c.clone())).collect()
    }

    /// `dim F_n` for `n = 0..=depth` modulo the ideal generated by `relations`,
    /// truncated to the smallest subspace of words of length at most `depth`
    /// that contains the relations and is closed under multiplication by
    /// letters whenever the product stays inside the truncation.
    pub fn filtered_dims(&self, relations: &[NcElement]) -> Vec<usize> {
        let mut basis = EchelonBasis::new();
        for r in relations {
            if r.keys().all(|w| w.len() <= self.depth) {
                basis.insert(self.row_of(r));
            }
        }
        let mut next = 0;
        while next < basis.rank() {
            let row = basis.rows()[next].clone();
            next += 1;
            let len = self.length_of(*row.keys().next().expect("nonzero row"));
            if len == self.depth {
                continue;
            }
            let e: NcElement = row.iter().map(|(c, x)| (self.word_of(*c), x.clone())).collect();
            for l in 0..self.letters {
                let left: NcElement = e.iter().map(|(w, x)| ([vec![l], w.clone()].concat(), x.clone())).collect();
                let right: NcElement = e.iter().map(|(w, x)| ([w.clone(), vec![l]].concat(), x.clone())).collect();
                basis.insert(self.row_of(&left));
                basis.insert(self.row_of(&right));
            }
        }
        let mut ideal_by_len = vec![0usize; self.depth + 1];
        for p in basis.pivots() {
            ideal_by_len[self.length_of(p)] += 1;
        }
        let mut out = Vec::with_capacity(self.depth + 1);
        let (mut words, mut ideal) = (0usize, 0usize);
        for n in 0..=self.depth {
            words += self.letters.pow(n as u32);
            ideal += ideal_by_len[n];
            out.push(words - ideal);
        }
        out
    }
}
