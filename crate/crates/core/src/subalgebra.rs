//! The operators u_t and d_t for a single fixed t ≥ 2.
//!
//! A word over {t, t̄} is read as a lattice path, right to left, one diagonal
//! step per letter: up-left for t, down-left for t̄. Its highest point is
//! α_{t−1}, minus its lowest point is α_t, and its final height is w_t.

use std::fmt;

use crate::error::{Error, Result, TraceError};
use crate::semantics::fingerprint;
use crate::word::{power, Kind, Letter, Word};

fn check_t(t: u32) -> Result<()> {
    if t < 2 {
        return Err(Error::SubalgebraIndex { t, min: 2 });
    }
    Ok(())
}

fn check_letters(x: &Word, t: u32) -> Result<()> {
    match x.iter().position(|l| l.index() != t) {
        Some(position) => Err(Error::ForeignLetter {
            position,
            letter: x[position].to_string(),
            t,
        }),
        None => Ok(()),
    }
}

fn check(x: &Word, t: u32) -> Result<()> {
    check_t(t)?;
    check_letters(x, t)
}

/// Points (x_k, y_k) of the path, starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepGraph {
    pub points: Vec<(i64, i64)>,
}

impl StepGraph {
    pub fn contains(&self, p: (i64, i64)) -> bool {
        self.points.contains(&p)
    }

    pub fn last(&self) -> (i64, i64) {
        *self.points.last().expect("a graph has at least the origin")
    }
}

pub fn step_graph(x: &Word, t: u32) -> Result<StepGraph> {
    check(x, t)?;
    let mut points = vec![(0, 0)];
    let (mut px, mut py) = (0i64, 0i64);
    for l in x.iter().rev() {
        px -= 1;
        py += if l.is_up() { 1 } else { -1 };
        points.push((px, py));
    }
    Ok(StepGraph { points })
}

/// Peak, valley and endpoint heights of the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TWordStats {
    pub t: u32,
    pub peak: i64,
    pub valley: i64,
    pub endpoint: i64,
}

impl TWordStats {
    /// α_{t−1}
    pub fn alpha_below(&self) -> i64 {
        self.peak
    }

    /// α_t
    pub fn alpha_t(&self) -> i64 {
        -self.valley
    }

    /// w_t
    pub fn weight(&self) -> i64 {
        self.endpoint
    }
}

impl fmt::Display for TWordStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "peak={} valley={} endpoint={} alpha[t-1]={} alpha[t]={} w[t]={}",
            self.peak,
            self.valley,
            self.endpoint,
            self.alpha_below(),
            self.alpha_t(),
            self.weight()
        )
    }
}

pub fn t_stats(x: &Word, t: u32) -> Result<TWordStats> {
    let g = step_graph(x, t)?;
    Ok(TWordStats {
        t,
        peak: g.points.iter().map(|p| p.1).max().unwrap_or(0),
        valley: g.points.iter().map(|p| p.1).min().unwrap_or(0),
        endpoint: g.last().1,
    })
}

fn standard_word(t: u32, s: &TWordStats) -> Word {
    let (a, b, f) = (s.alpha_below(), s.alpha_t(), s.weight());
    power(Letter::up(t), (f + b) as usize)
        .chain(power(Letter::down(t), (a + b) as usize))
        .chain(power(Letter::up(t), a as usize))
        .collect()
}

/// t^{w_t+α_t} t̄^{α_{t−1}+α_t} t^{α_{t−1}}.
pub fn standard_form_t(x: &Word, t: u32) -> Result<Word> {
    Ok(standard_word(t, &t_stats(x, t)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TRule {
    /// t^{i+1} t̄^i ↔ t^{i+1} t̄^{i+1} t
    Udu(u32),
    /// t^i t̄^{i+1} ↔ t̄ t^{i+1} t̄^{i+1}
    Dud(u32),
}

impl TRule {
    pub fn param(self) -> u32 {
        match self {
            TRule::Udu(i) | TRule::Dud(i) => i,
        }
    }

    pub fn lhs(self, t: u32) -> Word {
        let (u, d) = (Letter::up(t), Letter::down(t));
        match self {
            TRule::Udu(i) => power(u, i as usize + 1)
                .chain(power(d, i as usize))
                .collect(),
            TRule::Dud(i) => power(u, i as usize)
                .chain(power(d, i as usize + 1))
                .collect(),
        }
    }

    pub fn rhs(self, t: u32) -> Word {
        let (u, d) = (Letter::up(t), Letter::down(t));
        let i = self.param() as usize;
        match self {
            TRule::Udu(_) => power(u, i + 1)
                .chain(power(d, i + 1))
                .chain(std::iter::once(u))
                .collect(),
            TRule::Dud(_) => std::iter::once(d)
                .chain(power(u, i + 1))
                .chain(power(d, i + 1))
                .collect(),
        }
    }
}

impl fmt::Display for TRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TRule::Udu(i) => write!(f, "UDU({i})"),
            TRule::Dud(i) => write!(f, "DUD({i})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TStep {
    pub rule: TRule,
    pub pos: usize,
    /// false applies the rule right to left.
    pub forward: bool,
}

impl TStep {
    fn sides(&self, t: u32) -> (Word, Word) {
        let (l, r) = (self.rule.lhs(t), self.rule.rhs(t));
        if self.forward {
            (l, r)
        } else {
            (r, l)
        }
    }
}

impl fmt::Display for TStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.forward { "F" } else { "B" };
        write!(f, "{} {} at {}", self.rule, dir, self.pos)
    }
}

pub fn apply_t_step(w: &Word, t: u32, index: usize, s: &TStep) -> Result<Word, TraceError> {
    let (from, to) = s.sides(t);
    let end = s.pos + from.len();
    if end > w.len() || w[s.pos..end] != from[..] {
        return Err(TraceError::mismatch(index, s.pos, &from, w));
    }
    let mut letters = w.letters().to_vec();
    letters.splice(s.pos..end, to.into_letters());
    Ok(Word::new(letters))
}

/// A rewrite certificate inside the {t, t̄} alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TTrace {
    pub t: u32,
    pub start: Word,
    pub steps: Vec<TStep>,
    pub end: Word,
}

impl TTrace {
    /// Largest rule parameter used, if any step exists.
    pub fn max_param(&self) -> Option<u32> {
        self.steps.iter().map(|s| s.rule.param()).max()
    }

    /// Every word along the trace, `start` first.
    pub fn words(&self) -> Result<Vec<Word>, TraceError> {
        let mut out = vec![self.start.clone()];
        for (k, s) in self.steps.iter().enumerate() {
            let next = apply_t_step(out.last().unwrap(), self.t, k, s)?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Replays the trace, then checks the end word and that the fingerprint
/// did not change.
pub fn verify_t_trace(tr: &TTrace) -> Result<(), TraceError> {
    let words = tr.words()?;
    let last = words.last().unwrap();
    if last != &tr.end {
        return Err(TraceError::EndMismatch {
            claimed: tr.end.to_string(),
            actual: last.to_string(),
        });
    }
    if fingerprint(&tr.start) != fingerprint(&tr.end) {
        return Err(TraceError::Fingerprint {
            start: tr.start.to_string(),
            end: tr.end.to_string(),
        });
    }
    Ok(())
}

/// Standard form of x with a certificate built from UDU/DUD steps.
///
/// Letters are taken right to left; the word is always x_1 ⋯ x_j followed
/// by the standard form of x_{j+1} ⋯ x_ℓ. Every letter is absorbed, so a word
/// that is already standard may still get a nonempty round trip (t goes
/// through t t̄ t). Only words on which no case fires, such as t̄^k, get the
/// empty trace.
pub fn normalize_t_with_trace(x: &Word, t: u32) -> Result<(Word, TTrace)> {
    let standard = standard_form_t(x, t)?;
    let mut cur = x.clone();
    let mut steps = Vec::new();
    // stats of the already normalized suffix
    let (mut a, mut b, mut f) = (0i64, 0i64, 0i64);
    for j in (0..x.len()).rev() {
        let step = match x[j].kind() {
            Kind::Up => {
                let s = (f == a).then(|| TStep {
                    rule: TRule::Udu((f + b) as u32),
                    pos: j,
                    forward: true,
                });
                f += 1;
                a = a.max(f);
                s
            }
            Kind::Down => {
                let s = (b != -f).then(|| TStep {
                    rule: TRule::Dud((f + b - 1) as u32),
                    pos: j,
                    forward: false,
                });
                f -= 1;
                b = b.max(-f);
                s
            }
        };
        if let Some(s) = step {
            cur = apply_t_step(&cur, t, steps.len(), &s).expect("case analysis matches");
            steps.push(s);
        }
    }
    let end = cur;
    debug_assert_eq!(end, standard);
    let tr = TTrace {
        t,
        start: x.clone(),
        steps,
        end: end.clone(),
    };
    Ok((end, tr))
}

/// A point of the chain with ρ + 1 elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainState {
    pub rho: u32,
    pub pos: u32,
}

impl ChainState {
    pub fn new(rho: u32, pos: u32) -> Option<Self> {
        (pos <= rho).then_some(ChainState { rho, pos })
    }
}

/// Rightmost letter first. `None` is zero.
pub fn chain_apply(s: ChainState, x: &Word, t: u32) -> Result<Option<ChainState>> {
    check(x, t)?;
    let mut pos = s.pos;
    for l in x.iter().rev() {
        match l.kind() {
            Kind::Up if pos < s.rho => pos += 1,
            Kind::Down if pos > 0 => pos -= 1,
            _ => return Ok(None),
        }
    }
    Ok(Some(ChainState { rho: s.rho, pos }))
}

/// Whether x sends every point of the chain to zero, by trying them all.
pub fn chain_annihilates(x: &Word, t: u32, rho: u32) -> Result<bool> {
    for pos in 0..=rho {
        if chain_apply(ChainState { rho, pos }, x, t)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (t^k, t^k t̄^k t^k): equivalent words whose normalization needs a
/// relation of degree growing with k.
pub fn unbounded_witness(k: usize, t: u32) -> Result<(Word, Word)> {
    check_t(t)?;
    let (u, d) = (Letter::up(t), Letter::down(t));
    let x = power(u, k).collect();
    let y = power(u, k).chain(power(d, k)).chain(power(u, k)).collect();
    Ok((x, y))
}

/// For t = 1 the only relation is d_1 u_1 = 1, so every word reduces to
/// u_1^a d_1^b. Cancels until no d_1 u_1 factor is left.
pub fn standard_form_t1(x: &Word) -> Result<Word> {
    check_letters(x, 1)?;
    let mut out: Vec<Letter> = Vec::with_capacity(x.len());
    for &l in x.iter() {
        if l.is_up() && out.last().is_some_and(|p| !p.is_up()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(Word::new(out))
}
