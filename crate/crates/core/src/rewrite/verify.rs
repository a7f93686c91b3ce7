//! Certificate checker. It knows the five quadratic families and nothing
//! else: no macros, no normal forms. It deliberately does not reuse the
//! rewriting code the certificates are produced with.

use crate::error::TraceError;
use crate::semantics::fingerprint;
use crate::word::{Kind, Letter, Word};

use super::rule::{Direction, Rule, Step};
use super::trace::Trace;

type Side = Vec<(Kind, u32)>;

fn instance(rule: &Rule) -> Result<(Side, Side), String> {
    use Kind::{Down as D, Up as U};
    let sides = match *rule {
        Rule::CommUU { i, j } if i >= 1 && j >= 1 && i.abs_diff(j) >= 2 => {
            (vec![(U, i), (U, j)], vec![(U, j), (U, i)])
        }
        Rule::CommDD { i, j } if i >= 1 && j >= 1 && i.abs_diff(j) >= 2 => {
            (vec![(D, i), (D, j)], vec![(D, j), (D, i)])
        }
        Rule::CommDU { i, j } if i >= 1 && j >= 1 && i != j => {
            (vec![(D, i), (U, j)], vec![(U, j), (D, i)])
        }
        Rule::Cancel1 => (vec![(D, 1), (U, 1)], vec![]),
        Rule::Slide { i } if i >= 1 => (vec![(D, i + 1), (U, i + 1)], vec![(U, i), (D, i)]),
        _ => return Err(format!("{rule} is not an instance of a base relation")),
    };
    Ok(sides)
}

fn check_step(index: usize, word: &mut Vec<(Kind, u32)>, step: &Step) -> Result<(), TraceError> {
    let (lhs, rhs) = instance(&step.rule).map_err(|reason| TraceError::SideCondition {
        step: index,
        rule: step.rule.to_string(),
        reason,
    })?;
    let (from, to) = match step.dir {
        Direction::Forward => (lhs, rhs),
        Direction::Backward => (rhs, lhs),
    };
    let end = step.pos + from.len();
    if end > word.len() || word[step.pos..end] != from[..] {
        return Err(TraceError::Mismatch {
            step: index,
            position: step.pos,
            expected: render(&from).to_string(),
            word: render(word).to_string(),
        });
    }
    word.splice(step.pos..end, to);
    Ok(())
}

fn render(w: &[(Kind, u32)]) -> Word {
    w.iter()
        .map(|&(k, i)| Letter::new(k, i).expect("letters come from parsed words"))
        .collect()
}

/// Replays `t` from its start, checking every step's side condition and
/// match, then that the replay lands on `t.end()` and that start and end
/// share a fingerprint. Reports the first failing step.
pub fn verify_trace(t: &Trace) -> Result<(), TraceError> {
    let mut word: Vec<(Kind, u32)> = t.start().iter().map(|l| (l.kind(), l.index())).collect();
    for (k, step) in t.steps().iter().enumerate() {
        check_step(k, &mut word, step)?;
    }
    let actual = render(&word);
    if &actual != t.end() {
        return Err(TraceError::EndMismatch {
            claimed: t.end().to_string(),
            actual: actual.to_string(),
        });
    }
    if fingerprint(t.start()) != fingerprint(t.end()) {
        return Err(TraceError::Fingerprint {
            start: t.start().to_string(),
            end: t.end().to_string(),
        });
    }
    Ok(())
}
