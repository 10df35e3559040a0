//! Letters of the one-row tableau alphabet.
//!
//! The alphabet is `0 < 1 < ... < n < nb < ... < 1b < 0b`, where `Nb`
//! denotes the barred letter with value `N`.  Barred letters compare
//! greater than every unbarred letter, and among barred letters a larger
//! value compares smaller.  The order does not depend on the rank `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
}

impl Letter {
    pub fn plain(value: u32) -> Self {
        Letter { value, barred: false }
    }

    pub fn bar(value: u32) -> Self {
        Letter { value, barred: true }
    }

    /// The barred partner of an unbarred letter, or vice versa.
    pub fn flipped(self) -> Self {
        Letter { value: self.value, barred: !self.barred }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0 && !self.barred
    }

    pub fn is_zero_bar(self) -> bool {
        self.value == 0 && self.barred
    }
}

/// True when `(a, b)` is a pair `(x, xb)` for one value `x`.
pub fn is_pair(a: Letter, b: Letter) -> bool {
    !a.barred && b.barred && a.value == b.value
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.barred, other.barred) {
            (false, false) => self.value.cmp(&other.value),
            (true, true) => other.value.cmp(&self.value),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}b", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (digits, barred) = match s.strip_suffix('b') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::WordParse(format!("bad letter token {s:?}")));
        }
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::WordParse(format!("bad letter token {s:?}")))?;
        Ok(Letter { value, barred })
    }
}

/// Renders a word as space-separated letter tokens.
pub fn word_to_string(word: &[Letter]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a space-separated word of letter tokens.
pub fn word_from_str(s: &str) -> Result<Vec<Letter>, Error> {
    s.split_whitespace().map(Letter::from_str).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        // 0 < 1 < 2 < 2b < 1b < 0b
        let seq = [
            Letter::plain(0),
            Letter::plain(1),
            Letter::plain(2),
            Letter::bar(2),
            Letter::bar(1),
            Letter::bar(0),
        ];
        for w in seq.windows(2) {
            assert!(w[0] < w[1], "{} < {} failed", w[0], w[1]);
        }
    }

    #[test]
    fn order_is_strict_and_total() {
        let mut all = Vec::new();
        for v in 0..=4 {
            all.push(Letter::plain(v));
            all.push(Letter::bar(v));
        }
        for &a in &all {
            for &b in &all {
                let lt = a < b;
                let gt = a > b;
                let eq = a == b;
                assert_eq!(1, usize::from(lt) + usize::from(gt) + usize::from(eq));
            }
        }
    }

    #[test]
    fn token_round_trip() {
        for tok in ["0", "3", "0b", "12b"] {
            let l: Letter = tok.parse().unwrap();
            assert_eq!(l.to_string(), tok);
        }
        assert!("".parse::<Letter>().is_err());
        assert!("b".parse::<Letter>().is_err());
        assert!("-1".parse::<Letter>().is_err());
        assert!("2bb".parse::<Letter>().is_err());
    }
}
