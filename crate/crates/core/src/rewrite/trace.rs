use serde::{Deserialize, Serialize};

use crate::error::TraceError;
use crate::word::{parse_word, Word};

use super::rule::{apply_in_place, Direction, Family, Rule, Step};

/// A rewrite certificate: `steps` applied in order take `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    start: Word,
    steps: Vec<Step>,
    end: Word,
}

impl Trace {
    /// Builds a trace without checking it; use [`super::verify_trace`] for
    /// untrusted input.
    pub fn new(start: Word, steps: Vec<Step>, end: Word) -> Self {
        Trace { start, steps, end }
    }

    /// The empty trace from `w` to itself.
    pub fn identity(w: Word) -> Self {
        Trace {
            start: w.clone(),
            steps: Vec::new(),
            end: w,
        }
    }

    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn end(&self) -> &Word {
        &self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every word along the trace, `start` first.
    pub fn words(&self) -> Result<Vec<Word>, TraceError> {
        let mut cur = self.start.letters().to_vec();
        let mut out = vec![self.start.clone()];
        for (k, s) in self.steps.iter().enumerate() {
            apply_in_place(k, &mut cur, s)?;
            out.push(Word::new(cur.clone()));
        }
        Ok(out)
    }

    /// The trace run backwards, from `end` to `start`.
    pub fn reversed(&self) -> Trace {
        Trace {
            start: self.end.clone(),
            steps: self.steps.iter().rev().map(Step::inverse).collect(),
            end: self.start.clone(),
        }
    }

    /// Concatenation. Panics unless `self.end() == next.start()`.
    pub fn then(mut self, next: Trace) -> Trace {
        assert_eq!(self.end, next.start, "traces do not compose");
        self.steps.extend(next.steps);
        self.end = next.end;
        self
    }

    /// The trace between the transposed words. Every base family is closed
    /// under transposition, so this is again a base-rule certificate.
    pub fn transpose(&self) -> Trace {
        let mut len = self.start.len();
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let t = s.transpose(len);
                len = len + s.replacement_len() - s.matched_len();
                t
            })
            .collect();
        Trace {
            start: self.start.transpose(),
            steps,
            end: self.end.transpose(),
        }
    }

    /// Largest letter index appearing anywhere along the trace.
    pub fn max_index(&self) -> Result<u32, TraceError> {
        Ok(self.words()?.iter().map(Word::max_index).max().unwrap_or(0))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TraceRecord::from(self)).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Trace, TraceError> {
        let record: TraceRecord =
            serde_json::from_str(text).map_err(|e| TraceError::Format(e.to_string()))?;
        record.try_into()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceRecord {
    start: String,
    end: String,
    steps: Vec<StepRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepRecord {
    family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
    pos: usize,
    dir: String,
}

impl From<&Trace> for TraceRecord {
    fn from(t: &Trace) -> Self {
        TraceRecord {
            start: t.start.to_string(),
            end: t.end.to_string(),
            steps: t.steps.iter().map(StepRecord::from).collect(),
        }
    }
}

impl From<&Step> for StepRecord {
    fn from(s: &Step) -> Self {
        let (i, j) = match s.rule {
            Rule::CommUU { i, j } | Rule::CommDD { i, j } | Rule::CommDU { i, j } => {
                (Some(i), Some(j))
            }
            Rule::Cancel1 => (None, None),
            Rule::Slide { i } => (Some(i), None),
        };
        StepRecord {
            family: s.rule.family().name().to_string(),
            i,
            j,
            pos: s.pos,
            dir: match s.dir {
                Direction::Forward => "F",
                Direction::Backward => "B",
            }
            .to_string(),
        }
    }
}

impl StepRecord {
    fn into_step(self, index: usize) -> Result<Step, TraceError> {
        let bad = |msg: String| TraceError::Format(format!("step {index}: {msg}"));
        let family = Family::from_name(&self.family)
            .ok_or_else(|| bad(format!("unknown family {:?}", self.family)))?;
        let rule = match (family, self.i, self.j) {
            (Family::CommUU, Some(i), Some(j)) => Rule::CommUU { i, j },
            (Family::CommDD, Some(i), Some(j)) => Rule::CommDD { i, j },
            (Family::CommDU, Some(i), Some(j)) => Rule::CommDU { i, j },
            (Family::Cancel1, None, None) => Rule::Cancel1,
            (Family::Slide, Some(i), None) => Rule::Slide { i },
            (f, _, _) => return Err(bad(format!("wrong parameters for {}", f.name()))),
        };
        let dir = match self.dir.as_str() {
            "F" => Direction::Forward,
            "B" => Direction::Backward,
            other => {
                return Err(bad(format!(
                    "direction must be \"F\" or \"B\", got {other:?}"
                )))
            }
        };
        Ok(Step::new(rule, self.pos, dir))
    }
}

impl TryFrom<TraceRecord> for Trace {
    type Error = TraceError;

    fn try_from(r: TraceRecord) -> Result<Self, TraceError> {
        let word = |s: &str| parse_word(s).map_err(|e| TraceError::Format(e.to_string()));
        let steps = r
            .steps
            .into_iter()
            .enumerate()
            .map(|(k, s)| s.into_step(k))
            .collect::<Result<_, _>>()?;
        Ok(Trace {
            start: word(&r.start)?,
            steps,
            end: word(&r.end)?,
        })
    }
}
