use crate::word::{Letter, Word};

use super::rule::{apply_in_place, Direction, Rule, Step};
use super::trace::Trace;

/// Records steps while rewriting a word in place. Derivations are
/// constructed, not searched, so a step that fails to match is a bug in the
/// derivation and panics.
pub(crate) struct TraceBuilder {
    start: Word,
    current: Vec<Letter>,
    steps: Vec<Step>,
}

impl TraceBuilder {
    pub fn new(start: Word) -> Self {
        let current = start.letters().to_vec();
        TraceBuilder {
            start,
            current,
            steps: Vec::new(),
        }
    }

    pub fn word(&self) -> &[Letter] {
        &self.current
    }

    pub fn step(&mut self, rule: Rule, pos: usize, dir: Direction) {
        self.push(Step::new(rule, pos, dir));
    }

    fn push(&mut self, step: Step) {
        let index = self.steps.len();
        if let Err(e) = apply_in_place(index, &mut self.current, &step) {
            panic!("derivation broke: {e}");
        }
        self.steps.push(step);
    }

    /// Replays `t` on the subword starting at `offset`.
    pub fn splice(&mut self, t: &Trace, offset: usize) {
        let n = t.start().len();
        assert_eq!(
            &self.current[offset..offset + n],
            t.start().letters(),
            "spliced trace does not start here"
        );
        for s in t.steps() {
            self.push(s.shifted(offset));
        }
    }

    /// Replays `t` backwards (from its end to its start) at `offset`.
    pub fn splice_reversed(&mut self, t: &Trace, offset: usize) {
        self.splice(&t.reversed(), offset);
    }

    /// Swaps the letters at `pos` and `pos + 1` with a commutation step.
    pub fn swap(&mut self, pos: usize) {
        let (a, b) = (self.current[pos], self.current[pos + 1]);
        let (rule, dir) =
            Rule::commuting(a, b).unwrap_or_else(|| panic!("{a} and {b} do not commute"));
        self.step(rule, pos, dir);
    }

    /// Moves the letter at `pos` left by `count` places; returns its new position.
    pub fn move_left(&mut self, pos: usize, count: usize) -> usize {
        for k in 0..count {
            self.swap(pos - k - 1);
        }
        pos - count
    }

    /// Moves the letter at `pos` right by `count` places; returns its new position.
    pub fn move_right(&mut self, pos: usize, count: usize) -> usize {
        for k in 0..count {
            self.swap(pos + k);
        }
        pos + count
    }

    pub fn finish(self) -> Trace {
        Trace::new(self.start, self.steps, Word::new(self.current))
    }
}
