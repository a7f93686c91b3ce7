//! Canonical representatives [x]_{m,n}.
//!
//! For m ≥ m(x) and n ≥ n(x) the word
//!
//! ```text
//! 1̄^m ⋯ n̄^m · n^{β_n} n̄^{α_n} ⋯ 1^{β_1} 1̄^{α_1},   β_i = α_i + w_i + m
//! ```
//!
//! depends only on the fingerprint of x and acts exactly like x.

use crate::error::{Error, Result};
use crate::semantics::{fingerprint, Fingerprint, SparseVec};
use crate::word::{power, Letter, Word};

/// The data a canonical word is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormParams {
    pub m: u32,
    pub n: u32,
    /// β^m_i for i = 1..=n.
    pub beta: SparseVec,
    /// α_i for i = 1..=n.
    pub alpha: SparseVec,
}

impl NormalFormParams {
    pub fn new(fp: &Fingerprint, m: u32, n: u32) -> Self {
        let mut beta = SparseVec::new();
        let mut alpha = SparseVec::new();
        for i in 1..=n {
            let a = fp.alpha.get(i);
            alpha.set(i, a);
            beta.set(i, a + fp.weight.get(i) + i64::from(m));
        }
        NormalFormParams { m, n, beta, alpha }
    }

    pub fn beta(&self, i: u32) -> usize {
        usize::try_from(self.beta.get(i)).expect("beta is nonnegative once m >= m(x)")
    }

    pub fn alpha(&self, i: u32) -> usize {
        self.alpha.get(i) as usize
    }

    /// Length of the barred prefix 1̄^m ⋯ n̄^m.
    pub fn prefix_len(&self) -> usize {
        self.m as usize * self.n as usize
    }

    /// 0-based position where block k^{β_k} k̄^{α_k} begins.
    pub fn block_start(&self, k: u32) -> usize {
        self.prefix_len()
            + (k + 1..=self.n)
                .map(|j| self.beta(j) + self.alpha(j))
                .sum::<usize>()
    }

    pub fn len(&self) -> usize {
        self.block_start(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_word(&self) -> Word {
        let prefix = (1..=self.n).flat_map(|i| power(Letter::down(i), self.m as usize));
        let blocks = (1..=self.n).rev().flat_map(|k| {
            power(Letter::up(k), self.beta(k)).chain(power(Letter::down(k), self.alpha(k)))
        });
        prefix.chain(blocks).collect()
    }
}

fn m_of_fingerprint(fp: &Fingerprint) -> u32 {
    // α_i + w_i can only be negative where w_i is
    fp.weight
        .iter()
        .map(|(i, w)| -(fp.alpha.get(i) + w))
        .max()
        .unwrap_or(0)
        .max(0) as u32
}

/// m(x) = max(0, max_i −(α_i(x) + w_i(x))).
pub fn m_of(x: &Word) -> u32 {
    m_of_fingerprint(&fingerprint(x))
}

/// n(x): the largest letter index of x, and 1 for the empty word.
pub fn n_of(x: &Word) -> u32 {
    x.max_index().max(1)
}

/// [x]_{m,n}.
pub fn canonical_word(x: &Word, m: u32, n: u32) -> Result<Word> {
    let fp = fingerprint(x);
    let (min_m, min_n) = (m_of_fingerprint(&fp), n_of(x));
    if m < min_m || n < min_n {
        return Err(Error::Params { m, n, min_m, min_n });
    }
    Ok(NormalFormParams::new(&fp, m, n).to_word())
}

/// Parameters (M, N) for which the inductive normalization of x goes
/// through: M is the largest m(p) over all prefixes p of x, N = n(x).
pub fn normalization_params(x: &Word) -> (u32, u32) {
    let m = (0..=x.len()).map(|j| m_of(&x.prefix(j))).max().unwrap_or(0);
    (m, n_of(x))
}
