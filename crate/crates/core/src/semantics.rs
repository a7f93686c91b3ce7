//! The action of words on partitions and the invariants that determine it.
//!
//! Two words act identically on Young's lattice exactly when their weight
//! vectors and α-vectors agree. [`equivalent`] decides this from the
//! [`Fingerprint`]; [`semantically_equal`] checks it independently by running
//! both words on a finite set of partitions that is complete for them.

use std::collections::BTreeMap;
use std::fmt;

use crate::partition::{enumerate_profiles, Partition};
use crate::word::{Kind, Letter, Word};

/// Integer vector indexed by 1, 2, … with finite support. Zero entries are
/// never stored, so structural equality is vector equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec(BTreeMap<u32, i64>);

pub type WeightVector = SparseVec;
pub type AlphaVector = SparseVec;

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    /// Builds a vector from a dense slice starting at index 1.
    pub fn from_dense(values: &[i64]) -> Self {
        let mut v = SparseVec::new();
        for (k, &x) in values.iter().enumerate() {
            v.set(k as u32 + 1, x);
        }
        v
    }

    pub fn get(&self, i: u32) -> i64 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: u32, value: i64) {
        if value == 0 {
            self.0.remove(&i);
        } else {
            self.0.insert(i, value);
        }
    }

    pub fn add(&mut self, i: u32, delta: i64) {
        let v = self.get(i) + delta;
        self.set(i, v);
    }

    /// Nonzero entries in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().map(|(&i, &v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index with a nonzero entry, or 0.
    pub fn support_max(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}: {v}")?;
        }
        f.write_str("}")
    }
}

/// Number of `i` minus number of ī, per index.
pub fn weight(x: &Word) -> WeightVector {
    let mut w = SparseVec::new();
    for l in x.iter() {
        w.add(l.index(), sign(*l));
    }
    w
}

fn sign(l: Letter) -> i64 {
    match l.kind() {
        Kind::Up => 1,
        Kind::Down => -1,
    }
}

/// α_i(x): the maximum over all suffixes x̃ (the empty one included) of
/// w_{i+1}(x̃) − w_i(x̃).
///
/// Computed in one right-to-left pass: prepending a letter with index k only
/// moves the differences at i = k − 1 and i = k.
pub fn alpha(x: &Word) -> AlphaVector {
    let mut diff = SparseVec::new();
    let mut best = SparseVec::new();
    for l in x.iter().rev() {
        let k = l.index();
        let s = sign(*l);
        if k >= 2 {
            diff.add(k - 1, s);
            raise(&mut best, k - 1, diff.get(k - 1));
        }
        diff.add(k, -s);
        raise(&mut best, k, diff.get(k));
    }
    best
}

fn raise(best: &mut SparseVec, i: u32, candidate: i64) {
    if candidate > best.get(i) {
        best.set(i, candidate);
    }
}

/// The pair (w, α): a complete invariant of a word's action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Fingerprint {
    pub weight: WeightVector,
    pub alpha: AlphaVector,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w: {}; alpha: {}", self.weight, self.alpha)
    }
}

pub fn fingerprint(x: &Word) -> Fingerprint {
    Fingerprint {
        weight: weight(x),
        alpha: alpha(x),
    }
}

/// Applies a single letter. `None` is the zero vector.
pub fn apply_letter(p: &Partition, l: Letter) -> Option<Partition> {
    let i = l.index() as usize;
    let r = match l.kind() {
        Kind::Up => p.add_box_column(i),
        Kind::Down => p.remove_box_column(i),
    };
    r.expect("letter indices are positive")
}

/// u_x(λ) by applying x_ℓ first and x_1 last.
pub fn apply_word(p: &Partition, x: &Word) -> Option<Partition> {
    let mut cur = p.clone();
    for &l in x.iter().rev() {
        cur = apply_letter(&cur, l)?;
    }
    Some(cur)
}

/// u_x(λ) in closed form: if λ′_i − λ′_{i+1} ≥ α_i(x) for every i, the
/// result is the partition with columns λ′_i + w_i(x); otherwise zero.
pub fn apply_word_closed(p: &Partition, x: &Word) -> Option<Partition> {
    let fp = fingerprint(x);
    let profile = p.profile();
    if fp
        .alpha
        .iter()
        .any(|(i, a)| (profile.diff(i as usize) as i64) < a)
    {
        return None;
    }
    let columns = p.conjugate();
    let width = columns.parts().len().max(x.max_index() as usize);
    let new_columns: Vec<usize> = (1..=width)
        .map(|i| {
            let h = columns.row(i) as i64 + fp.weight.get(i as u32);
            usize::try_from(h).expect("guard keeps column heights nonnegative")
        })
        .collect();
    Some(Partition::from_columns(&new_columns))
}

/// Whether `u_x` and `u_y` act identically on Young's lattice, decided by
/// comparing fingerprints.
pub fn equivalent(x: &Word, y: &Word) -> bool {
    fingerprint(x) == fingerprint(y)
}

/// The finite partition set on which [`semantically_equal`] compares `x`
/// and `y`: every column-difference profile on columns 1..=n+1 with
/// entries at most c, where n = (largest letter) + 1 and c = max length.
pub fn oracle_profiles(x: &Word, y: &Word) -> Vec<Partition> {
    let n = x.max_index().max(y.max_index()) as usize + 1;
    let c = x.len().max(y.len());
    enumerate_profiles(n, c)
}

/// First partition on which `x` and `y` act differently, searching the
/// complete set from [`oracle_profiles`].
pub fn distinguishing_partition(x: &Word, y: &Word) -> Option<Partition> {
    oracle_profiles(x, y)
        .into_iter()
        .find(|p| apply_word(p, x) != apply_word(p, y))
}

/// Brute-force semantic comparison, independent of the fingerprint.
pub fn semantically_equal(x: &Word, y: &Word) -> bool {
    distinguishing_partition(x, y).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    // x = 1 1 3̄ 3̄ 2̄ 3 2 1̄ 2 1
    fn example_word() -> Word {
        w("u1 u1 d3 d3 d2 u3 u2 d1 u2 u1")
    }

    // Recomputes α from scratch on every suffix.
    fn brute_alpha(x: &Word) -> AlphaVector {
        let mut out = SparseVec::new();
        for i in 1..=x.max_index() + 1 {
            let best = (0..=x.len())
                .map(|j| {
                    let wt = weight(&x.suffix(j));
                    wt.get(i + 1) - wt.get(i)
                })
                .max()
                .unwrap();
            out.set(i, best);
        }
        out
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&example_word()), SparseVec::from_dense(&[2, 1, -1]));
        assert!(weight(&Word::empty()).is_zero());
        assert_eq!(weight(&w("d2")), SparseVec::from_dense(&[0, -1]));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&example_word()), SparseVec::from_dense(&[2, 0, 1]));
        assert!(alpha(&Word::empty()).is_zero());
        assert_eq!(brute_alpha(&w("u2")), SparseVec::from_dense(&[1]));
        assert_eq!(alpha(&w("u2")), SparseVec::from_dense(&[1]));
    }

    #[test]
    fn fingerprint_examples() {
        let fp = fingerprint(&w("u2 d2"));
        assert!(fp.weight.is_zero());
        assert_eq!(fp.alpha, SparseVec::from_dense(&[0, 1]));
        assert_eq!(brute_alpha(&w("u2 d2")), fp.alpha);

        let a = fingerprint(&w("d2 u2"));
        let b = fingerprint(&w("u1 d1"));
        assert_eq!(a, b);
        assert!(a.weight.is_zero());
        assert_eq!(a.alpha, SparseVec::from_dense(&[1]));

        assert_eq!(fingerprint(&Word::empty()), Fingerprint::default());
        assert_eq!(
            fingerprint(&example_word()).to_string(),
            "w: {1: 2, 2: 1, 3: -1}; alpha: {1: 2, 3: 1}"
        );
        assert_eq!(fingerprint(&Word::empty()).to_string(), "w: {}; alpha: {}");
    }

    #[test]
    fn action_examples() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(apply_word(&p, &w("u2")), Some(Partition::new(vec![3, 2])));
        assert_eq!(apply_word(&p, &w("d1 d3 u2")), None);
        assert_eq!(apply_word(&p, &Word::empty()), Some(p.clone()));
        assert_eq!(
            apply_word_closed(&p, &w("d3 u2")),
            Some(Partition::new(vec![2, 2]))
        );
        assert_eq!(apply_word_closed(&Partition::empty(), &w("d1")), None);
    }

    #[test]
    fn closed_form_agrees_on_small_profiles() {
        let x = w("u2 d2");
        let y = w("d3 u3");
        for p in enumerate_profiles(3, 2) {
            assert_eq!(apply_word_closed(&p, &x), apply_word_closed(&p, &y));
            assert_eq!(apply_word_closed(&p, &x), apply_word(&p, &x));
            assert_eq!(apply_word_closed(&p, &y), apply_word(&p, &y));
        }
    }

    #[test]
    fn decider_examples() {
        assert!(equivalent(&w("d2 u2"), &w("u1 d1")));
        assert!(equivalent(&w("u1 u3"), &w("u3 u1")));
        assert!(!equivalent(&w("u1"), &w("u2")));

        assert!(semantically_equal(&w("d2 u2"), &w("u1 d1")));
        assert!(semantically_equal(&w("u1 u2 u1"), &w("u2 u1 u1")));
        assert!(!semantically_equal(&w("u1"), &w("d1")));
        let p = distinguishing_partition(&w("u1"), &w("d1")).unwrap();
        assert_ne!(apply_word(&p, &w("u1")), apply_word(&p, &w("d1")));
    }

    #[test]
    fn single_pass_alpha_matches_suffix_recomputation() {
        let letters = [1u32, 2, 3];
        let mut words = vec![Word::empty()];
        for _ in 0..5 {
            let mut next = Vec::new();
            for x in &words {
                for &i in &letters {
                    for l in [Letter::up(i), Letter::down(i)] {
                        let mut v = x.letters().to_vec();
                        v.push(l);
                        next.push(Word::new(v));
                    }
                }
            }
            for x in &next {
                let a = alpha(x);
                assert_eq!(a, brute_alpha(x), "{x:?}");
                let wt = weight(x);
                for i in 1..=4 {
                    assert!(a.get(i) >= 0);
                    assert!(a.get(i) >= wt.get(i + 1) - wt.get(i));
                }
            }
            words = next;
        }
    }
}
