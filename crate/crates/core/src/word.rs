//! Letters and words over the alphabet of up- and down-operators.
//!
//! `Up(i)` is the unbarred letter `i` (operator u_i) and `Down(i)` the barred
//! letter ī (operator d_i). A word x_1 … x_ℓ denotes the product
//! u_{x_1} ⋯ u_{x_ℓ}, so when it acts on a partition the rightmost letter
//! acts first. Text form is whitespace-separated `u<k>` / `d<k>` tokens in
//! the same left-to-right order.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    kind: Kind,
    index: u32,
}

impl Letter {
    pub fn new(kind: Kind, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidIndex(0));
        }
        Ok(Letter { kind, index })
    }

    /// u_i. Panics if `i == 0`.
    pub fn up(i: u32) -> Self {
        assert!(i >= 1, "letter index must be at least 1");
        Letter {
            kind: Kind::Up,
            index: i,
        }
    }

    /// d_i. Panics if `i == 0`.
    pub fn down(i: u32) -> Self {
        assert!(i >= 1, "letter index must be at least 1");
        Letter {
            kind: Kind::Down,
            index: i,
        }
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_up(self) -> bool {
        self.kind == Kind::Up
    }

    /// The transpose letter: u_i ↔ d_i.
    pub fn bar(self) -> Self {
        let kind = match self.kind {
            Kind::Up => Kind::Down,
            Kind::Down => Kind::Up,
        };
        Letter { kind, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Up => write!(f, "u{}", self.index),
            Kind::Down => write!(f, "d{}", self.index),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Largest letter index, or 0 for the empty word.
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverses the word and swaps bars: the word of the transposed operator.
    pub fn transpose(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// The suffix x_j … x_ℓ for 0-based `start = j − 1`.
    pub fn suffix(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }
}

/// `letter^count`, as a run of identical letters.
pub fn power(letter: Letter, count: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(letter, count)
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

fn parse_token(position: usize, token: &str) -> Result<Letter> {
    let err = |reason: &str| Error::WordParse {
        position,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let kind = match token.as_bytes().first() {
        Some(b'u') => Kind::Up,
        Some(b'd') => Kind::Down,
        _ => return Err(err("expected `u<k>` or `d<k>`")),
    };
    let digits = &token[1..];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("index must be a decimal number"));
    }
    let index: u32 = digits.parse().map_err(|_| err("index out of range"))?;
    if index == 0 {
        return Err(err("index must be at least 1"));
    }
    if digits.starts_with('0') {
        return Err(err("leading zeros are not allowed"));
    }
    Ok(Letter { kind, index })
}

/// Parses whitespace-separated `u<k>` / `d<k>` tokens. Blank input is the
/// empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    text.split_whitespace()
        .enumerate()
        .map(|(k, tok)| parse_token(k, tok))
        .collect()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}
