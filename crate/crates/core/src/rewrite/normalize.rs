//! Certified normalization: a base-rule trace from any word x to its
//! canonical word [x]_{M,N}.
//!
//! The trace first inserts [ε]_{M,N} in front of x (built from the empty
//! word), then absorbs the letters of x one at a time, rewriting
//! [x_1 ⋯ x_{j−1}] · x_j into [x_1 ⋯ x_j] with the letters still to come
//! left untouched on the right.

use crate::error::{Error, Result};
use crate::normal_form::{n_of, normalization_params, NormalFormParams};
use crate::semantics::{equivalent, fingerprint, Fingerprint};
use crate::word::{Kind, Letter, Word};

use super::builder::TraceBuilder;
use super::macros::{identity, knuth_a, knuth_a_down, knuth_b, sandwich_down, sandwich_up};
use super::rule::{Direction, Rule, Step};
use super::trace::Trace;

/// Rewrites (n ⋯ 1) n at `offset` to n (n ⋯ 1).
fn commute_past_run(b: &mut TraceBuilder, offset: usize, n: u32) {
    if n < 2 {
        return;
    }
    let p = b.move_left(offset + n as usize, n as usize - 2);
    debug_assert_eq!(p, offset + 2);
    b.splice(&knuth_b(n - 1), offset);
}

/// Rewrites (n ⋯ 1) n^k (n−1)^k ⋯ 1^k at `offset` to n^{k+1} ⋯ 1^{k+1}.
fn absorb_run(b: &mut TraceBuilder, offset: usize, n: u32, k: usize) {
    if n < 2 {
        return;
    }
    for j in 0..k {
        commute_past_run(b, offset + j, n);
    }
    absorb_run(b, offset + k + 1, n - 1, k);
}

/// Rewrites (n ⋯ 1)^m at `offset` to n^m ⋯ 1^m.
fn runs_to_blocks(b: &mut TraceBuilder, offset: usize, n: u32, m: usize) {
    if m <= 1 {
        return;
    }
    runs_to_blocks(b, offset + n as usize, n, m - 1);
    absorb_run(b, offset, n, m - 1);
}

/// Trace from [ε]_{m,n} = 1̄^m ⋯ n̄^m n^m ⋯ 1^m to the empty word.
pub fn empty_normal_form_trace(m: u32, n: u32) -> Trace {
    let start = NormalFormParams::new(&Fingerprint::default(), m, n).to_word();
    let (mu, nu) = (m as usize, n as usize);

    let runs: Word = (0..m).flat_map(|_| (1..=n).rev().map(Letter::up)).collect();
    let mut ups = TraceBuilder::new(runs);
    runs_to_blocks(&mut ups, 0, n, mu);
    let ups = ups.finish();

    let mut b = TraceBuilder::new(start);
    // (1̄ ⋯ n̄)^m (n ⋯ 1)^m
    b.splice_reversed(&ups, mu * nu);
    b.splice_reversed(&ups.transpose(), 0);
    let cancel = identity(n);
    for k in (0..mu).rev() {
        b.splice(&cancel, k * nu);
    }
    b.finish()
}

/// Rewrites [y]_{m,n} · letter into [y · letter]_{m,n}, where `lay` describes
/// [y]_{m,n} and the letter sits right after it.
fn absorb_letter(b: &mut TraceBuilder, lay: &NormalFormParams, letter: Letter) {
    let t = letter.index();
    let end = lay.len();
    if t == 1 {
        // no block to the right of block 1
        if letter.kind() == Kind::Up && lay.alpha(1) > 0 {
            b.step(Rule::Cancel1, end - 1, Direction::Forward);
        }
        return;
    }
    let below = lay.block_start(t - 1);
    let beta_below = lay.beta(t - 1);
    let alpha_below = lay.alpha(t - 1);
    // past blocks t−2, …, 1
    let p = b.move_left(end, end - lay.block_start(t - 2));
    match letter.kind() {
        Kind::Up => {
            // past (t−1)̄^{α_{t−1}}
            let p = b.move_left(p, alpha_below);
            if lay.alpha(t) == 0 {
                // t t̄ t, then t̄ t → (t−1) (t−1)̄
                b.splice(&sandwich_up(t), p);
                b.step(Rule::Slide { i: t - 1 }, p + 1, Direction::Forward);
                let knuth = knuth_a(t - 1);
                for q in (below..p).rev() {
                    b.splice(&knuth, q);
                }
            } else {
                // bring the last t̄ of block t next to the new t
                b.move_right(below - 1, beta_below);
                b.step(Rule::Slide { i: t - 1 }, p - 1, Direction::Forward);
            }
        }
        Kind::Down => {
            if alpha_below == 0 {
                b.move_left(p, beta_below);
            } else {
                let bars = below + beta_below;
                let knuth = knuth_a_down(t - 1);
                for q in (bars..p - 1).rev() {
                    b.splice_reversed(&knuth, q);
                }
                // (t−1) (t−1)̄ t̄ → t̄ t t̄ → t̄
                b.step(Rule::Slide { i: t - 1 }, bars - 1, Direction::Backward);
                b.splice_reversed(&sandwich_down(t), bars - 1);
                b.move_left(bars - 1, beta_below - 1);
            }
        }
    }
}

/// Normalizes x with explicit parameters. Requires m to be at least m(p)
/// for every prefix p of x and n ≥ n(x).
pub fn normalize_with_params(x: &Word, m: u32, n: u32) -> Result<(Word, Trace)> {
    let (min_m, _) = normalization_params(x);
    let min_n = n_of(x);
    if m < min_m || n < min_n {
        return Err(Error::Params { m, n, min_m, min_n });
    }
    let mut b = TraceBuilder::new(x.clone());
    b.splice_reversed(&empty_normal_form_trace(m, n), 0);
    for j in 0..x.len() {
        let lay = NormalFormParams::new(&fingerprint(&x.prefix(j)), m, n);
        absorb_letter(&mut b, &lay, x[j]);
        debug_assert_eq!(
            &b.word()[..b.word().len() - (x.len() - j - 1)],
            NormalFormParams::new(&fingerprint(&x.prefix(j + 1)), m, n)
                .to_word()
                .letters(),
        );
    }
    let trace = b.finish();
    Ok((trace.end().clone(), trace))
}

/// [x]_{M,N} with (M, N) from [`normalization_params`], and a base-rule
/// trace from x to it.
pub fn normalize_with_trace(x: &Word) -> (Word, Trace) {
    let (m, n) = normalization_params(x);
    normalize_with_params(x, m, n).expect("parameters are large enough by construction")
}

/// A single base step taking x to y, if one exists.
fn single_step(x: &Word, y: &Word) -> Option<Step> {
    let mut candidates = Vec::new();
    for pos in 0..=x.len() {
        candidates.push(Step::backward(Rule::Cancel1, pos));
        if pos + 1 < x.len() {
            candidates.push(Step::forward(Rule::Cancel1, pos));
            if let Some((rule, dir)) = Rule::commuting(x[pos], x[pos + 1]) {
                candidates.push(Step::new(rule, pos, dir));
            }
            let i = x[pos].index();
            candidates.push(Step::forward(
                Rule::Slide {
                    i: i.saturating_sub(1),
                },
                pos,
            ));
            candidates.push(Step::backward(Rule::Slide { i }, pos));
        }
    }
    candidates
        .into_iter()
        .find(|s| super::rule::apply_step(x, s).ok().as_ref() == Some(y))
}

/// A base-rule certificate that x and y act identically, or `None` if they
/// do not. Both words are normalized to the same canonical word with shared
/// parameters, and y's trace is reversed onto the end of x's.
pub fn certify_equivalence(x: &Word, y: &Word) -> Option<Trace> {
    if !equivalent(x, y) {
        return None;
    }
    if x == y {
        return Some(Trace::identity(x.clone()));
    }
    if let Some(step) = single_step(x, y) {
        return Some(Trace::new(x.clone(), vec![step], y.clone()));
    }
    let (mx, nx) = normalization_params(x);
    let (my, ny) = normalization_params(y);
    let (m, n) = (mx.max(my), nx.max(ny));
    let (cx, tx) = normalize_with_params(x, m, n).expect("shared parameters dominate");
    let (cy, ty) = normalize_with_params(y, m, n).expect("shared parameters dominate");
    assert_eq!(cx, cy, "equivalent words share a canonical word");
    Some(tx.then(ty.reversed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::canonical_word;
    use crate::rewrite::verify_trace;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn empty_normal_forms_reduce_to_identity() {
        for m in 0..=3 {
            for n in 1..=4 {
                let t = empty_normal_form_trace(m, n);
                assert_eq!(t.start(), &canonical_word(&Word::empty(), m, n).unwrap());
                assert!(t.end().is_empty());
                verify_trace(&t).unwrap();
            }
        }
        assert!(empty_normal_form_trace(0, 3).is_empty());
    }

    #[test]
    fn normalize_examples() {
        let (c, t) = normalize_with_trace(&w("d2 u2"));
        assert_eq!(c, w("u1 d1"));
        verify_trace(&t).unwrap();

        let (c, t) = normalize_with_trace(&w("d1 u1"));
        assert!(c.is_empty());
        verify_trace(&t).unwrap();

        let (c, t) = normalize_with_trace(&Word::empty());
        assert!(c.is_empty());
        assert!(t.is_empty());
    }

    #[test]
    fn normalize_hits_every_case() {
        // each letter kind against zero and nonzero α on both sides
        for x in [
            "u2 u3",
            "d3 u3",
            "u3 d3 u3",
            "d2 d3",
            "u2 d3",
            "d2 d3 u3 d3",
            "u1 d2 d3 u1",
            "d1 d2 d3",
            "u3 u2 u1 d1 d2 d3",
        ] {
            let x = w(x);
            let (c, t) = normalize_with_trace(&x);
            let (m, n) = normalization_params(&x);
            assert_eq!(c, canonical_word(&x, m, n).unwrap());
            assert_eq!(t.start(), &x);
            verify_trace(&t).unwrap();
        }
    }

    #[test]
    fn params_are_checked() {
        assert!(normalize_with_params(&w("d1 d2 u1"), 0, 2).is_err());
        assert!(normalize_with_params(&w("u3"), 0, 2).is_err());
        assert!(normalize_with_params(&w("u3"), 2, 5).is_ok());
    }

    #[test]
    fn certify_examples() {
        let t = certify_equivalence(&w("u1 u3"), &w("u3 u1")).unwrap();
        assert_eq!(t.len(), 1);
        verify_trace(&t).unwrap();

        let t = certify_equivalence(&w("u1 u2 u1"), &w("u2 u1 u1")).unwrap();
        assert_eq!(t.start(), &w("u1 u2 u1"));
        assert_eq!(t.end(), &w("u2 u1 u1"));
        verify_trace(&t).unwrap();

        let x = w("d2 u1 u2");
        let t = certify_equivalence(&x, &x).unwrap();
        verify_trace(&t).unwrap();

        assert!(certify_equivalence(&w("u1"), &w("u2")).is_none());
    }
}
