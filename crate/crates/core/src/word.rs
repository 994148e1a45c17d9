//! Words over an ordered finite alphabet.
//!
//! Letters are the integers `1..=n`; letter `i` is written `a_i` (or `s_i`
//! when the alphabet is the generating set of a Coxeter system) and
//! `a_i < a_j` exactly when `i < j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter index, 1-based.
pub type Letter = u8;

/// The alphabet `{a_1, ..., a_n}` with its index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > Letter::MAX as usize {
            return Err(Error::Parse(format!(
                "alphabet size must lie in 1..={}, got {size}",
                Letter::MAX
            )));
        }
        Ok(Alphabet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The top letter `a_n`.
    pub fn top(&self) -> Letter {
        self.size as Letter
    }

    pub fn check_letter(&self, letter: usize) -> Result<Letter> {
        if letter == 0 || letter > self.size {
            Err(Error::InvalidLetter {
                letter,
                size: self.size,
            })
        } else {
            Ok(letter as Letter)
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.max_letter() {
            Some(m) if m as usize > self.size => Err(Error::AlphabetMismatch {
                letter: m as usize,
                size: self.size,
            }),
            _ => Ok(()),
        }
    }

    /// Builds a word, validating every letter.
    pub fn word(&self, letters: &[usize]) -> Result<Word> {
        letters
            .iter()
            .map(|&l| self.check_letter(l))
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }
}

/// A finite sequence of letters. The empty word is written `e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// The reversed word, which is `w⁻¹` both for words and for products of
    /// involutions.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Compact generator notation as used in tables, e.g. `s1s2s1`, or `e`.
    pub fn to_generator_string(&self) -> String {
        self.to_prefixed_string('s')
    }

    fn to_prefixed_string(&self, prefix: char) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        let mut out = String::with_capacity(self.len() * 2);
        for l in &self.0 {
            out.push(prefix);
            out.push_str(&l.to_string());
        }
        out
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(letters: [Letter; N]) -> Self {
        Word(letters.to_vec())
    }
}

/// Prints `a1 a2 a3`, or `e` for the empty word. [`FromStr`] reads this back.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{l}")?;
        }
        Ok(())
    }
}

/// Accepted syntaxes:
///
/// * `e` (or an empty string) for the empty word;
/// * whitespace-separated tokens `a3 a1 a2`, `s3 s1 s2` or `3 1 2`;
/// * concatenated tokens `a3a1a2` or `s3s1s2`;
/// * compact digits `312`, one letter per digit.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        if s.contains(char::is_whitespace) {
            return s
                .split_whitespace()
                .map(parse_token)
                .collect::<Result<Vec<_>>>()
                .map(Word);
        }
        if s.starts_with(['a', 's']) {
            return parse_prefixed_run(s);
        }
        if s.chars().all(|c| c.is_ascii_digit()) {
            return s
                .chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as Letter),
                    _ => Err(Error::Parse(format!("letter 0 in compact word {s:?}"))),
                })
                .collect::<Result<Vec<_>>>()
                .map(Word);
        }
        Err(Error::Parse(format!("unrecognised word syntax {s:?}")))
    }
}

fn parse_index(digits: &str, whole: &str) -> Result<Letter> {
    match digits.parse::<u16>() {
        Ok(v) if v >= 1 && v <= Letter::MAX as u16 => Ok(v as Letter),
        _ => Err(Error::Parse(format!("bad letter index in {whole:?}"))),
    }
}

fn parse_token(tok: &str) -> Result<Letter> {
    let digits = tok.strip_prefix(['a', 's']).unwrap_or(tok);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad letter token {tok:?}")));
    }
    parse_index(digits, tok)
}

fn parse_prefixed_run(s: &str) -> Result<Word> {
    let mut letters = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix(['a', 's'])
            .ok_or_else(|| Error::Parse(format!("expected `a` or `s` in {s:?}")))?;
        let end = body
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(body.len());
        if end == 0 {
            return Err(Error::Parse(format!("missing index in {s:?}")));
        }
        letters.push(parse_index(&body[..end], s)?);
        rest = &body[end..];
    }
    Ok(Word(letters))
}
