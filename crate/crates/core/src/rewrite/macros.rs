//! Derived relations, each produced as a fully expanded base-rule trace.
//!
//! | macro               | from                | to                  |
//! |---------------------|---------------------|---------------------|
//! | [`identity`]`(n)`   | 1̄ ⋯ n̄ n ⋯ 1          | (empty)             |
//! | [`sandwich_up`]     | i                   | i ī i               |
//! | [`sandwich_down`]   | ī                   | ī i ī               |
//! | [`knuth_a`]         | i (i+1) i           | (i+1) i i           |
//! | [`knuth_b`]         | (i+1) i (i+1)       | (i+1) (i+1) i       |
//! | [`knuth_a_down`]    | ī (i+1)̄ ī           | ī ī (i+1)̄           |
//! | [`knuth_b_down`]    | (i+1)̄ ī (i+1)̄       | ī (i+1)̄ (i+1)̄       |
//!
//! The down versions are transposes of the up versions.

use crate::word::{Letter, Word};

use super::builder::TraceBuilder;
use super::rule::{Direction, Rule};
use super::trace::Trace;

fn word(letters: &[Letter]) -> Word {
    Word::new(letters.to_vec())
}

fn descending_ups(n: u32) -> impl Iterator<Item = Letter> {
    (1..=n).rev().map(Letter::up)
}

fn ascending_downs(n: u32) -> impl Iterator<Item = Letter> {
    (1..=n).map(Letter::down)
}

/// Rewrites k̄ k (k−1) ⋯ 1 at `offset` to (k−1) ⋯ 1: a run of slides
/// followed by one cancellation.
fn peel(b: &mut TraceBuilder, offset: usize, k: u32) {
    for s in (1..k).rev() {
        b.step(
            Rule::Slide { i: s },
            offset + (k - 1 - s) as usize,
            Direction::Forward,
        );
    }
    b.step(Rule::Cancel1, offset + k as usize - 1, Direction::Forward);
}

/// 1̄ ⋯ n̄ n ⋯ 1 → empty word. `n = 0` gives the empty trace.
pub fn identity(n: u32) -> Trace {
    let start: Word = ascending_downs(n).chain(descending_ups(n)).collect();
    let mut b = TraceBuilder::new(start);
    for k in (1..=n).rev() {
        peel(&mut b, k as usize - 1, k);
    }
    b.finish()
}

/// u_i → u_i d_i u_i.
pub fn sandwich_up(i: u32) -> Trace {
    assert!(i >= 1);
    let mut b = TraceBuilder::new(word(&[Letter::up(i)]));
    if i == 1 {
        b.step(Rule::Cancel1, 1, Direction::Backward);
        return b.finish();
    }
    let n = i as usize;
    // n · 1̄ ⋯ n̄ n ⋯ 1
    b.splice_reversed(&identity(i), 1);
    // 1̄ ⋯ (n−1)̄ n n̄ n ⋯ 1
    let p = b.move_right(0, n - 1);
    // 1̄ ⋯ (n−1)̄ (n+1)̄ (n+1) n ⋯ 1
    b.step(Rule::Slide { i }, p, Direction::Backward);
    // (n+1)̄ (n+1) n 1̄ ⋯ (n−1)̄ (n−1) ⋯ 1
    b.move_left(n - 1, n - 1);
    b.move_left(n, n - 1);
    b.move_left(n + 1, n - 1);
    b.splice(&identity(i - 1), 3);
    // (n+1)̄ (n+1) n → n n̄ n
    b.step(Rule::Slide { i }, 0, Direction::Forward);
    b.finish()
}

/// d_i → d_i u_i d_i.
pub fn sandwich_down(i: u32) -> Trace {
    sandwich_up(i).transpose()
}

/// u_i u_{i+1} u_i → u_{i+1} u_i u_i.
pub fn knuth_a(i: u32) -> Trace {
    assert!(i >= 1);
    let (lo, hi) = (Letter::up(i), Letter::up(i + 1));
    let mut b = TraceBuilder::new(word(&[lo, hi, lo]));
    // i (i+1) (i+1)̄ (i+1) i
    b.splice(&sandwich_up(i + 1), 1);
    // i (i+2)̄ (i+2) (i+1) i
    b.step(Rule::Slide { i: i + 1 }, 1, Direction::Backward);
    // (i+2)̄ (i+2) i (i+1) i
    b.move_right(0, 2);
    // (i+1) (i+1)̄ i (i+1) i
    b.step(Rule::Slide { i: i + 1 }, 0, Direction::Forward);
    // (i+1) i (i+1)̄ (i+1) i
    b.swap(1);
    // (i+1) i i ī i
    b.step(Rule::Slide { i }, 2, Direction::Forward);
    b.splice_reversed(&sandwich_up(i), 2);
    b.finish()
}

/// u_{i+1} u_i u_{i+1} → u_{i+1} u_{i+1} u_i.
pub fn knuth_b(i: u32) -> Trace {
    assert!(i >= 1);
    let (lo, hi) = (Letter::up(i), Letter::up(i + 1));
    let mut b = TraceBuilder::new(word(&[hi, lo, hi]));
    if i >= 2 {
        // (i+1) i ī i (i+1)
        b.splice(&sandwich_up(i), 1);
        // (i+1) i (i−1) (i−1)̄ (i+1)
        b.step(Rule::Slide { i: i - 1 }, 2, Direction::Forward);
        // (i+1) i (i+1) (i−1) (i−1)̄
        b.move_left(4, 2);
        // (i+1) i (i+1) ī i
        b.step(Rule::Slide { i: i - 1 }, 3, Direction::Backward);
    } else {
        // with no letter below 1, cancellation supplies the detour:
        // 2 1 2 1̄ 1
        b.step(Rule::Cancel1, 3, Direction::Backward);
    }
    // (i+1) i ī (i+1) i
    b.move_left(3, 1);
    // (i+1) (i+1)̄ (i+1) (i+1) i
    b.step(Rule::Slide { i }, 1, Direction::Backward);
    b.splice_reversed(&sandwich_up(i + 1), 0);
    b.finish()
}

/// d_i d_{i+1} d_i → d_i d_i d_{i+1}.
pub fn knuth_a_down(i: u32) -> Trace {
    knuth_a(i).transpose()
}

/// d_{i+1} d_i d_{i+1} → d_i d_{i+1} d_{i+1}.
pub fn knuth_b_down(i: u32) -> Trace {
    knuth_b(i).transpose()
}
