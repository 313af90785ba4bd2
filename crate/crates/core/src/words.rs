//! Words over the two-letter alphabet `{x, x*}`.
//!
//! A word labels an object of the category; the empty word is the unit
//! object. The involution [`Word::star`] (reverse and flip every letter)
//! gives the dual object, and the factorization into maximal alternating
//! parts drives both the simple-object projectors and the fusion recipe.

use crate::Error;
use std::fmt;

/// One boundary letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Xstar,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::X => Letter::Xstar,
            Letter::Xstar => Letter::X,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Letter::X => "x",
            Letter::Xstar => "x*",
        }
    }

    pub fn parse(token: &str) -> Result<Letter, Error> {
        match token.to_ascii_lowercase().as_str() {
            "x" => Ok(Letter::X),
            "x*" => Ok(Letter::Xstar),
            other => Err(Error::Parse(format!(
                "invalid letter `{other}` (expected `x` or `x*`)"
            ))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite string of letters; the empty word is the unit object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// The alternating word of length `len` starting with `first`.
    pub fn alternating(first: Letter, len: usize) -> Word {
        let mut letters = Vec::with_capacity(len);
        let mut cur = first;
        for _ in 0..len {
            letters.push(cur);
            cur = cur.flip();
        }
        Word(letters)
    }

    /// Parses a comma- or space-separated word, case-insensitive; a blank
    /// string is the empty word.
    pub fn parse(s: &str) -> Result<Word, Error> {
        let letters = s
            .split([',', ' ', '\t'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Letter::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The antimultiplicative involution: reverse the word and flip every
    /// letter.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    /// Flips every letter in place (orientation reversal without
    /// reordering).
    pub fn flip_letters(&self) -> Word {
        Word(self.0.iter().map(|l| l.flip()).collect())
    }

    /// `(|w|_+, |w|_-)`: the number of `x`'s and of `x*`'s.
    pub fn plus_minus_counts(&self) -> (usize, usize) {
        let plus = self.0.iter().filter(|l| **l == Letter::X).count();
        (plus, self.0.len() - plus)
    }

    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|pair| pair[0] != pair[1])
    }

    /// The unique factorization into maximal alternating parts. Adjacent
    /// parts repeat a letter at the junction; the empty word gives an empty
    /// list.
    pub fn alternating_decomposition(&self) -> Vec<Word> {
        let mut parts = Vec::new();
        let mut start = 0;
        for i in 1..self.0.len() {
            if self.0[i] == self.0[i - 1] {
                parts.push(Word(self.0[start..i].to_vec()));
                start = i;
            }
        }
        if start < self.0.len() {
            parts.push(Word(self.0[start..].to_vec()));
        }
        parts
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Whether at least one oriented Kauffman diagram of type `(w, w')` exists.
///
/// A diagram pairs each string start with a string end, so the number of
/// starts (`|w|_+ + |w'|_-`) must equal the number of ends
/// (`|w|_- + |w'|_+`); conversely, a balanced pair of words always admits a
/// non-crossing consistent matching (cap an adjacent start/end pair and
/// recurse). This predicate agrees with `diagrams::enumerate` returning a
/// nonempty list, which is tested exhaustively.
pub fn homset_nonempty(w: &Word, w_prime: &Word) -> bool {
    let (wp, wm) = w.plus_minus_counts();
    let (vp, vm) = w_prime.plus_minus_counts();
    wp + vm == wm + vp
}
