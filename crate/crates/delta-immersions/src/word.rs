//! Alphabets, letters, and words with involution.
//!
//! An alphabet consists of edge letters `X` (which come in positive and
//! inverted form) and cell letters `P_k` for dimensions `k >= 2`. Cell
//! letters are self-inverse and are never stored inverted.
//!
//! Word syntax: whitespace-separated tokens, `name` for a letter and
//! `name'` for its inverse; the single token `1` denotes the empty word.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

const P_BIT: u32 = 1 << 31;

/// A letter of a word, referring to an entry of an [`Alphabet`].
///
/// Packed so that the derived order is: edge letters in declared order
/// (positive before inverse), then cell letters in declared order. This
/// is the canonical label order used for breadth-first traversals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub(crate) fn x(index: u32, inverted: bool) -> Self {
        Letter(index << 1 | u32::from(inverted))
    }

    pub(crate) fn p(index: u32) -> Self {
        Letter(P_BIT | index)
    }

    /// True for cell letters.
    pub fn is_p(self) -> bool {
        self.0 & P_BIT != 0
    }

    /// True for an inverted edge letter; cell letters are never inverted.
    pub fn is_inverted(self) -> bool {
        !self.is_p() && self.0 & 1 == 1
    }

    /// The involution: flips edge letters, fixes cell letters.
    pub fn inverse(self) -> Self {
        if self.is_p() {
            self
        } else {
            Letter(self.0 ^ 1)
        }
    }

    /// The positive form of this letter.
    pub fn positive(self) -> Self {
        if self.is_p() {
            self
        } else {
            Letter(self.0 & !1)
        }
    }

    pub(crate) fn index(self) -> usize {
        if self.is_p() {
            (self.0 & !P_BIT) as usize
        } else {
            (self.0 >> 1) as usize
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_p() {
            write!(f, "p{}", self.index())
        } else if self.is_inverted() {
            write!(f, "x{}'", self.index())
        } else {
            write!(f, "x{}", self.index())
        }
    }
}

/// The labeling alphabet: edge letters `X` plus cell letters for each
/// dimension `k >= 2`. All names are distinct identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    xs: Vec<String>,
    ps: Vec<(String, usize)>,
    lookup: HashMap<String, Letter>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet from edge-letter names and `(name, dimension)`
    /// pairs for cell letters. Names must be distinct identifiers and
    /// cell dimensions at least 2.
    pub fn new<S: Into<String>>(xs: Vec<S>, ps: Vec<(S, usize)>) -> Result<Self> {
        let xs: Vec<String> = xs.into_iter().map(Into::into).collect();
        let ps: Vec<(String, usize)> = ps.into_iter().map(|(n, d)| (n.into(), d)).collect();
        let mut lookup = HashMap::new();
        for (i, name) in xs.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Schema(format!(
                    "`{name}` is not a valid letter name"
                )));
            }
            if lookup
                .insert(name.clone(), Letter::x(i as u32, false))
                .is_some()
            {
                return Err(Error::Schema(format!("duplicate letter name `{name}`")));
            }
        }
        for (i, (name, dim)) in ps.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Schema(format!(
                    "`{name}` is not a valid letter name"
                )));
            }
            if *dim < 2 {
                return Err(Error::Schema(format!(
                    "cell letter `{name}` has dimension {dim}; needs at least 2"
                )));
            }
            if lookup.insert(name.clone(), Letter::p(i as u32)).is_some() {
                return Err(Error::Schema(format!("duplicate letter name `{name}`")));
            }
        }
        Ok(Alphabet { xs, ps, lookup })
    }

    pub fn empty() -> Self {
        Alphabet {
            xs: Vec::new(),
            ps: Vec::new(),
            lookup: HashMap::new(),
        }
    }

    pub fn x_count(&self) -> usize {
        self.xs.len()
    }

    pub fn p_count(&self) -> usize {
        self.ps.len()
    }

    pub fn x_names(&self) -> impl Iterator<Item = &str> {
        self.xs.iter().map(String::as_str)
    }

    /// Cell letters with their dimensions, in declared order.
    pub fn p_entries(&self) -> impl Iterator<Item = (&str, usize)> {
        self.ps.iter().map(|(n, d)| (n.as_str(), *d))
    }

    /// The positive letter with the given name, if any.
    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, letter: Letter) -> &str {
        if letter.is_p() {
            &self.ps[letter.index()].0
        } else {
            &self.xs[letter.index()]
        }
    }

    /// Token form of a letter: the name, with a trailing apostrophe when
    /// inverted.
    pub fn token(&self, letter: Letter) -> String {
        if letter.is_inverted() {
            format!("{}'", self.name(letter))
        } else {
            self.name(letter).to_string()
        }
    }

    /// Dimension of a cell letter, `None` for edge letters.
    pub fn p_dimension(&self, letter: Letter) -> Option<usize> {
        if letter.is_p() {
            Some(self.ps[letter.index()].1)
        } else {
            None
        }
    }

    /// All letters in canonical order: edge letters in declared order,
    /// positive before inverse, then cell letters in declared order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let xs = (0..self.xs.len() as u32).flat_map(|i| [Letter::x(i, false), Letter::x(i, true)]);
        let ps = (0..self.ps.len() as u32).map(Letter::p);
        xs.chain(ps)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        if letter.is_p() {
            letter.index() < self.ps.len()
        } else {
            letter.index() < self.xs.len()
        }
    }

    /// Parses whitespace-separated tokens into a word. `name'` denotes the
    /// inverse; an apostrophe on a cell letter is normalized away; the
    /// token `1` contributes the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, inverted) = match token.strip_suffix('\'') {
                Some(stem) => (stem, true),
                None => (token, false),
            };
            if !is_identifier(name) {
                return Err(Error::Syntax(format!("malformed token `{token}`")));
            }
            let letter = self
                .letter(name)
                .ok_or_else(|| Error::UnknownLetter(name.to_string()))?;
            letters.push(if inverted { letter.inverse() } else { letter });
        }
        Ok(Word(letters))
    }

    /// Renders a word in the token syntax; the empty word prints as `1`.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|&l| self.token(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finite word over `X ∪ X⁻¹ ∪ P`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_letter(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// The involution: reverse the sequence and invert each letter.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
