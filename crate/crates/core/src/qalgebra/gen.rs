use std::cmp::Ordering;
use std::fmt;

use crate::arith::HalfInt;
use crate::error::{QvaError, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Kind {
    Y,
    X,
}

/// A generator `X_{i,m}` or `Y_{i,m}`; colors are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gen {
    pub kind: Kind,
    pub color: u16,
    pub mode: i32,
}

/// Product of generators, read left to right.
pub type Word = Vec<Gen>;

impl Gen {
    pub fn x(color: u16, mode: i32) -> Gen {
        Gen { kind: Kind::X, color, mode }
    }

    pub fn y(color: u16, mode: i32) -> Gen {
        Gen { kind: Kind::Y, color, mode }
    }

    /// Sort key of the canonical order: the negative block first, then color,
    /// then `Y` before `X`, then mode.
    pub fn key(&self) -> (bool, u16, Kind, i32) {
        (self.mode >= 0, self.color, self.kind, self.mode)
    }

    pub fn is_creation(&self) -> bool {
        self.mode < 0
    }

    /// Conformal weight `n - 1/2` of the mode `-n`.
    pub fn weight(&self) -> HalfInt {
        HalfInt::from_twice(-2 * self.mode as i64 - 1)
    }

    /// Degree `e_i` for `X` and `-e_i` for `Y`, as a signed color index.
    pub fn sign(&self) -> i64 {
        match self.kind {
            Kind::X => 1,
            Kind::Y => -1,
        }
    }

    pub fn with_mode(&self, mode: i32) -> Gen {
        Gen { mode, ..*self }
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::X => 'X',
            Kind::Y => 'Y',
        };
        write!(f, "{k}[{},{}]", self.color, self.mode)
    }
}

pub fn word_weight(w: &[Gen]) -> HalfInt {
    w.iter().fold(HalfInt::ZERO, |acc, g| acc + g.weight())
}

pub fn format_word(w: &[Gen]) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses `X[i,m] Y[j,n] ...`. An empty string is the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    let err = |msg: &str| QvaError::Parse(format!("{msg} in word {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let kind = match rest.as_bytes()[0] {
            b'X' => Kind::X,
            b'Y' => Kind::Y,
            _ => return Err(err("expected X or Y")),
        };
        rest = rest[1..].strip_prefix('[').ok_or_else(|| err("expected '['"))?;
        let close = rest.find(']').ok_or_else(|| err("missing ']'"))?;
        let (color, mode) = rest[..close].split_once(',').ok_or_else(|| err("expected 'color,mode'"))?;
        let color: u16 = color.parse().map_err(|_| err("bad color"))?;
        let mode: i32 = mode.parse().map_err(|_| err("bad mode"))?;
        if color == 0 {
            return Err(err("colors start at 1"));
        }
        out.push(Gen { kind, color, mode });
        rest = &rest[close + 1..];
    }
    Ok(out)
}

/// Parses a vacuum state written as a word followed by `|0>`.
pub fn parse_state_word(text: &str) -> Result<Word> {
    let t = text.trim();
    let body = t
        .strip_suffix("|0>")
        .ok_or_else(|| QvaError::Parse(format!("state must end with |0>: {text:?}")))?;
    parse_word(body)
}
