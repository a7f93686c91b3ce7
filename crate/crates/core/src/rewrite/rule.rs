use std::fmt;

use crate::error::TraceError;
use crate::word::{Kind, Letter, Word};

/// The five quadratic relation families, read as rewrite rules
/// `lhs ↔ rhs` on words:
///
/// | family    | lhs      | rhs      | condition     |
/// |-----------|----------|----------|---------------|
/// | `COMM_UU` | u_i u_j  | u_j u_i  | \|i − j\| ≥ 2 |
/// | `COMM_DD` | d_i d_j  | d_j d_i  | \|i − j\| ≥ 2 |
/// | `COMM_DU` | d_i u_j  | u_j d_i  | i ≠ j         |
/// | `CANCEL_1`| d_1 u_1  | (empty)  |               |
/// | `SLIDE`   | d_{i+1} u_{i+1} | u_i d_i | i ≥ 1  |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    CommUU { i: u32, j: u32 },
    CommDD { i: u32, j: u32 },
    CommDU { i: u32, j: u32 },
    Cancel1,
    Slide { i: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CommUU,
    CommDD,
    CommDU,
    Cancel1,
    Slide,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::CommUU,
        Family::CommDD,
        Family::CommDU,
        Family::Cancel1,
        Family::Slide,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CommUU => "COMM_UU",
            Family::CommDD => "COMM_DD",
            Family::CommDU => "COMM_DU",
            Family::Cancel1 => "CANCEL_1",
            Family::Slide => "SLIDE",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// lhs → rhs
    Forward,
    /// rhs → lhs
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl Rule {
    pub fn family(&self) -> Family {
        match self {
            Rule::CommUU { .. } => Family::CommUU,
            Rule::CommDD { .. } => Family::CommDD,
            Rule::CommDU { .. } => Family::CommDU,
            Rule::Cancel1 => Family::Cancel1,
            Rule::Slide { .. } => Family::Slide,
        }
    }

    /// Checks the family's side condition on the parameters.
    pub fn check(&self) -> Result<(), String> {
        let positive = |i: u32| {
            if i == 0 {
                Err("indices must be at least 1".to_string())
            } else {
                Ok(())
            }
        };
        match *self {
            Rule::CommUU { i, j } | Rule::CommDD { i, j } => {
                positive(i)?;
                positive(j)?;
                if i.abs_diff(j) < 2 {
                    return Err(format!("|i - j| >= 2 fails for i = {i}, j = {j}"));
                }
                Ok(())
            }
            Rule::CommDU { i, j } => {
                positive(i)?;
                positive(j)?;
                if i == j {
                    return Err(format!("i != j fails for i = j = {i}"));
                }
                Ok(())
            }
            Rule::Cancel1 => Ok(()),
            Rule::Slide { i } => positive(i),
        }
    }

    /// Left side. Only meaningful once [`Rule::check`] passes.
    pub fn lhs(&self) -> Word {
        use Letter as L;
        match *self {
            Rule::CommUU { i, j } => vec![L::up(i), L::up(j)],
            Rule::CommDD { i, j } => vec![L::down(i), L::down(j)],
            Rule::CommDU { i, j } => vec![L::down(i), L::up(j)],
            Rule::Cancel1 => vec![L::down(1), L::up(1)],
            Rule::Slide { i } => vec![L::down(i + 1), L::up(i + 1)],
        }
        .into()
    }

    pub fn rhs(&self) -> Word {
        use Letter as L;
        match *self {
            Rule::CommUU { i, j } => vec![L::up(j), L::up(i)],
            Rule::CommDD { i, j } => vec![L::down(j), L::down(i)],
            Rule::CommDU { i, j } => vec![L::up(j), L::down(i)],
            Rule::Cancel1 => vec![],
            Rule::Slide { i } => vec![L::up(i), L::down(i)],
        }
        .into()
    }

    /// (matched side, replacement) for a direction.
    pub fn sides(&self, dir: Direction) -> (Word, Word) {
        match dir {
            Direction::Forward => (self.lhs(), self.rhs()),
            Direction::Backward => (self.rhs(), self.lhs()),
        }
    }

    /// The rule relating the transposed words (reverse, swap bars).
    pub fn transpose(&self) -> Rule {
        match *self {
            Rule::CommUU { i, j } => Rule::CommDD { i: j, j: i },
            Rule::CommDD { i, j } => Rule::CommUU { i: j, j: i },
            Rule::CommDU { i, j } => Rule::CommDU { i: j, j: i },
            Rule::Cancel1 => Rule::Cancel1,
            Rule::Slide { i } => Rule::Slide { i },
        }
    }

    /// A commutation rule and direction rewriting the adjacent pair `[a, b]`
    /// into `[b, a]`, if the five families allow it.
    pub fn commuting(a: Letter, b: Letter) -> Option<(Rule, Direction)> {
        let (i, j) = (a.index(), b.index());
        let (rule, dir) = match (a.kind(), b.kind()) {
            (Kind::Up, Kind::Up) => (Rule::CommUU { i, j }, Direction::Forward),
            (Kind::Down, Kind::Down) => (Rule::CommDD { i, j }, Direction::Forward),
            (Kind::Down, Kind::Up) => (Rule::CommDU { i, j }, Direction::Forward),
            (Kind::Up, Kind::Down) => (Rule::CommDU { i: j, j: i }, Direction::Backward),
        };
        rule.check().ok().map(|_| (rule, dir))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family().name();
        match *self {
            Rule::CommUU { i, j } | Rule::CommDD { i, j } | Rule::CommDU { i, j } => {
                write!(f, "{name}({i},{j})")
            }
            Rule::Cancel1 => f.write_str(name),
            Rule::Slide { i } => write!(f, "{name}({i})"),
        }
    }
}

/// One rewrite: `rule` applied in `dir` to the subword starting at the
/// 0-based position `pos`. A backward `CANCEL_1` inserts `d1 u1` at `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: Rule,
    pub pos: usize,
    pub dir: Direction,
}

impl Step {
    pub fn new(rule: Rule, pos: usize, dir: Direction) -> Self {
        Step { rule, pos, dir }
    }

    pub fn forward(rule: Rule, pos: usize) -> Self {
        Step::new(rule, pos, Direction::Forward)
    }

    pub fn backward(rule: Rule, pos: usize) -> Self {
        Step::new(rule, pos, Direction::Backward)
    }

    /// The step undoing this one.
    pub fn inverse(&self) -> Step {
        Step {
            dir: self.dir.flip(),
            ..*self
        }
    }

    /// Length of the matched side.
    pub fn matched_len(&self) -> usize {
        match (self.rule, self.dir) {
            (Rule::Cancel1, Direction::Backward) => 0,
            _ => 2,
        }
    }

    /// Length of the replacement side.
    pub fn replacement_len(&self) -> usize {
        match (self.rule, self.dir) {
            (Rule::Cancel1, Direction::Forward) => 0,
            _ => 2,
        }
    }

    /// The same rewrite on transposed words. `len` is the length of the word
    /// the step applies to.
    pub fn transpose(&self, len: usize) -> Step {
        Step {
            rule: self.rule.transpose(),
            pos: len - self.pos - self.matched_len(),
            dir: self.dir,
        }
    }

    pub(crate) fn shifted(&self, offset: usize) -> Step {
        Step {
            pos: self.pos + offset,
            ..*self
        }
    }
}

pub(crate) fn apply_in_place(
    index: usize,
    word: &mut Vec<Letter>,
    step: &Step,
) -> Result<(), TraceError> {
    step.rule
        .check()
        .map_err(|reason| TraceError::SideCondition {
            step: index,
            rule: step.rule.to_string(),
            reason,
        })?;
    let (from, to) = step.rule.sides(step.dir);
    let end = step.pos + from.len();
    if end > word.len() || word[step.pos..end] != from[..] {
        return Err(TraceError::mismatch(
            index,
            step.pos,
            &from,
            &Word::new(word.clone()),
        ));
    }
    word.splice(step.pos..end, to.iter().copied());
    Ok(())
}

/// Applies one step to `w`.
pub fn apply_step(w: &Word, s: &Step) -> Result<Word, TraceError> {
    let mut v = w.letters().to_vec();
    apply_in_place(0, &mut v, s)?;
    Ok(Word::new(v))
}
