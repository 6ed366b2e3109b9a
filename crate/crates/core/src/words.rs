//! Gauss words, Gauss phrases, and their canonical forms.
//!
//! A phrase is stored as its external text: letters are ASCII alphanumeric
//! bytes and components are separated by `|`. Every position used by the
//! move engine is an index into that text, so a single `usize` names both a
//! letter and the component holding it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const SEPARATOR: u8 = b'|';

/// Text used for the empty word on the command line.
pub const EMPTY_WORD: &str = "-";

/// Number of letters in the canonical alphabet `A..Z a..z 0..9`.
pub const ALPHABET_SIZE: usize = 62;

/// Upper bound on the number of components of a phrase.
pub const MAX_COMPONENTS: usize = 64;

/// The `index`-th letter of the canonical alphabet.
pub fn canonical_letter(index: usize) -> Option<Letter> {
    let byte = match index {
        0..=25 => b'A' + index as u8,
        26..=51 => b'a' + (index - 26) as u8,
        52..=61 => b'0' + (index - 52) as u8,
        _ => return None,
    };
    Some(Letter(byte))
}

/// A single letter. Letters are ordered by their position in the canonical
/// alphabet, so `Z < a` and `z < 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(c: char) -> Result<Self> {
        if c.is_ascii_alphanumeric() {
            Ok(Letter(c as u8))
        } else {
            Err(Error::BadToken {
                token: c,
                offset: 0,
            })
        }
    }

    pub(crate) fn from_byte(b: u8) -> Self {
        debug_assert!(b.is_ascii_alphanumeric());
        Letter(b)
    }

    pub fn byte(self) -> u8 {
        self.0
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }

    /// Position in the canonical alphabet.
    pub fn index(self) -> usize {
        match self.0 {
            b'A'..=b'Z' => (self.0 - b'A') as usize,
            b'a'..=b'z' => 26 + (self.0 - b'a') as usize,
            _ => 52 + (self.0 - b'0') as usize,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Letter({})", self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Checks the double-occurrence condition on the letters of `text`,
/// ignoring separators.
fn check_gauss(text: &[u8]) -> Result<()> {
    let mut counts = [0usize; 128];
    for &b in text {
        if b != SEPARATOR {
            counts[b as usize] += 1;
        }
    }
    // Report the first offending letter in reading order.
    for &b in text {
        if b != SEPARATOR && counts[b as usize] != 2 {
            return Err(Error::NonGauss {
                letter: Letter(b),
                count: counts[b as usize],
            });
        }
    }
    Ok(())
}

fn check_tokens(text: &str, allow_separator: bool) -> Result<()> {
    for (offset, c) in text.char_indices() {
        let ok = c.is_ascii_alphanumeric() || (allow_separator && c == '|');
        if !ok {
            return Err(Error::BadToken { token: c, offset });
        }
    }
    Ok(())
}

/// A word in which every letter occurs exactly twice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussWord {
    letters: Vec<u8>,
}

impl GaussWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses a word; `"-"` and `""` both denote the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        if text == EMPTY_WORD {
            return Ok(Self::empty());
        }
        check_tokens(text, false)?;
        Self::from_bytes(text.as_bytes().to_vec())
    }

    pub fn from_bytes(letters: Vec<u8>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|b| !b.is_ascii_alphanumeric()) {
            return Err(Error::BadToken {
                token: letters[pos] as char,
                offset: pos,
            });
        }
        check_gauss(&letters)?;
        Ok(GaussWord { letters })
    }

    pub(crate) fn from_bytes_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(check_gauss(&letters).is_ok());
        GaussWord { letters }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.letters
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().map(|&b| Letter(b))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.letters.len() / 2
    }

    /// Distinct letters in order of first occurrence.
    pub fn distinct_letters(&self) -> Vec<Letter> {
        distinct_in_order(&self.letters)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.contains(&letter.0)
    }

    /// The one-component phrase with this word as its only component.
    pub fn to_phrase(&self) -> GaussPhrase {
        GaussPhrase {
            text: self.letters.clone(),
        }
    }

    /// Text form, with `"-"` for the empty word.
    pub fn to_external(&self) -> String {
        if self.is_empty() {
            EMPTY_WORD.to_string()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // letters are ASCII
        f.write_str(std::str::from_utf8(&self.letters).unwrap_or_default())
    }
}

impl fmt::Debug for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussWord({:?})", self.to_string())
    }
}

impl FromStr for GaussWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The decomposition `word = x · A · y · A · z` around the two occurrences
/// of a letter `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterSite<'a> {
    pub x: &'a [u8],
    pub y: &'a [u8],
    pub z: &'a [u8],
    /// Indices of the two occurrences.
    pub first: usize,
    pub second: usize,
}

/// Splits `word` at the two occurrences of `letter`.
pub fn letter_site(word: &GaussWord, letter: Letter) -> Result<LetterSite<'_>> {
    let bytes = word.as_bytes();
    let mut positions = bytes.iter().enumerate().filter(|(_, &b)| b == letter.0);
    let (first, second) = match (positions.next(), positions.next()) {
        (Some((i, _)), Some((j, _))) => (i, j),
        _ => return Err(Error::MissingLetter(letter)),
    };
    Ok(LetterSite {
        x: &bytes[..first],
        y: &bytes[first + 1..second],
        z: &bytes[second + 1..],
        first,
        second,
    })
}

fn distinct_in_order(text: &[u8]) -> Vec<Letter> {
    let mut seen = [false; 128];
    let mut out = Vec::new();
    for &b in text {
        if b != SEPARATOR && !seen[b as usize] {
            seen[b as usize] = true;
            out.push(Letter(b));
        }
    }
    out
}

/// An ordered sequence of words (components) whose concatenation is a
/// Gauss word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussPhrase {
    text: Vec<u8>,
}

impl GaussPhrase {
    /// Parses `component ('|' component)*`. A lone `"-"` is the empty
    /// one-component phrase.
    pub fn parse(text: &str) -> Result<Self> {
        if text == EMPTY_WORD {
            return Ok(Self::default());
        }
        check_tokens(text, true)?;
        Self::from_text(text.as_bytes().to_vec())
    }

    /// Builds a phrase from raw text bytes (letters and `|`).
    pub fn from_text(text: Vec<u8>) -> Result<Self> {
        if let Some(pos) = text
            .iter()
            .position(|&b| b != SEPARATOR && !b.is_ascii_alphanumeric())
        {
            return Err(Error::BadToken {
                token: text[pos] as char,
                offset: pos,
            });
        }
        let components = 1 + text.iter().filter(|&&b| b == SEPARATOR).count();
        if components > MAX_COMPONENTS {
            return Err(Error::Capacity(format!(
                "{components} components (at most {MAX_COMPONENTS} supported)"
            )));
        }
        check_gauss(&text)?;
        Ok(GaussPhrase { text })
    }

    pub fn from_components<S: AsRef<[u8]>>(components: &[S]) -> Result<Self> {
        let mut text = Vec::new();
        for (i, c) in components.iter().enumerate() {
            if i > 0 {
                text.push(SEPARATOR);
            }
            text.extend_from_slice(c.as_ref());
        }
        Self::from_text(text)
    }

    pub(crate) fn from_text_unchecked(text: Vec<u8>) -> Self {
        debug_assert!(
            check_gauss(&text).is_ok(),
            "{:?}",
            String::from_utf8_lossy(&text)
        );
        GaussPhrase { text }
    }

    /// The phrase text, separators included.
    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn components(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.text.split(|&b| b == SEPARATOR)
    }

    pub fn component(&self, k: usize) -> Option<&[u8]> {
        self.components().nth(k)
    }

    pub fn component_count(&self) -> usize {
        1 + self.text.iter().filter(|&&b| b == SEPARATOR).count()
    }

    /// Text index ranges `start..end` of each component.
    pub fn component_ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.component_count());
        let mut start = 0;
        for (i, &b) in self.text.iter().enumerate() {
            if b == SEPARATOR {
                out.push((start, i));
                start = i + 1;
            }
        }
        out.push((start, self.text.len()));
        out
    }

    /// Component index for every text position (separators get the index of
    /// the component they close).
    pub fn component_map(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.text.len());
        let mut k = 0;
        for &b in &self.text {
            out.push(k);
            if b == SEPARATOR {
                k += 1;
            }
        }
        out
    }

    /// For every letter position, the position of the other occurrence of
    /// the same letter; `usize::MAX` at separators.
    pub fn partners(&self) -> Vec<usize> {
        let mut first = [usize::MAX; 128];
        let mut out = vec![usize::MAX; self.text.len()];
        for (i, &b) in self.text.iter().enumerate() {
            if b == SEPARATOR {
                continue;
            }
            let slot = &mut first[b as usize];
            if *slot == usize::MAX {
                *slot = i;
            } else {
                out[i] = *slot;
                out[*slot] = i;
            }
        }
        out
    }

    pub fn letter_count(&self) -> usize {
        self.text.iter().filter(|&&b| b != SEPARATOR).count()
    }

    pub fn rank(&self) -> usize {
        self.letter_count() / 2
    }

    /// Distinct letters in reading order of first occurrence.
    pub fn distinct_letters(&self) -> Vec<Letter> {
        distinct_in_order(&self.text)
    }

    /// The concatenation of all components.
    pub fn concatenation(&self) -> GaussWord {
        GaussWord::from_bytes_unchecked(
            self.text
                .iter()
                .copied()
                .filter(|&b| b != SEPARATOR)
                .collect(),
        )
    }

    /// The word of a one-component phrase.
    pub fn as_word(&self) -> Option<GaussWord> {
        (self.component_count() == 1).then(|| GaussWord::from_bytes_unchecked(self.text.clone()))
    }

    /// Text form, with `"-"` for the empty one-component phrase.
    pub fn to_external(&self) -> String {
        if self.text.is_empty() {
            EMPTY_WORD.to_string()
        } else {
            self.to_string()
        }
    }
}

impl From<&GaussWord> for GaussPhrase {
    fn from(w: &GaussWord) -> Self {
        w.to_phrase()
    }
}

impl From<GaussWord> for GaussPhrase {
    fn from(w: GaussWord) -> Self {
        GaussPhrase { text: w.letters }
    }
}

impl fmt::Display for GaussPhrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.text).unwrap_or_default())
    }
}

impl fmt::Debug for GaussPhrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussPhrase({:?})", self.to_string())
    }
}

impl FromStr for GaussPhrase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

pub fn parse_word(text: &str) -> Result<GaussWord> {
    GaussWord::parse(text)
}

pub fn parse_phrase(text: &str) -> Result<GaussPhrase> {
    GaussPhrase::parse(text)
}

/// A phrase whose letters are renamed `A, B, C, ...` in order of first
/// occurrence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(GaussPhrase);

impl CanonicalForm {
    pub fn phrase(&self) -> &GaussPhrase {
        &self.0
    }

    pub fn into_phrase(self) -> GaussPhrase {
        self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.text()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.0.to_string())
    }
}

/// Relabels raw phrase text by first occurrence.
pub(crate) fn canonical_text(text: &[u8]) -> Vec<u8> {
    let mut map = [0u8; 128];
    let mut next = 0usize;
    text.iter()
        .map(|&b| {
            if b == SEPARATOR {
                return b;
            }
            let slot = &mut map[b as usize];
            if *slot == 0 {
                // rank never exceeds the alphabet size
                *slot = canonical_letter(next).map_or(b'?', Letter::byte);
                next += 1;
            }
            *slot
        })
        .collect()
}

pub fn canonicalize(phrase: &GaussPhrase) -> CanonicalForm {
    CanonicalForm(GaussPhrase::from_text_unchecked(canonical_text(
        phrase.text(),
    )))
}

pub fn canonicalize_word(word: &GaussWord) -> GaussWord {
    GaussWord::from_bytes_unchecked(canonical_text(word.as_bytes()))
}

pub fn is_isomorphic(a: &GaussPhrase, b: &GaussPhrase) -> bool {
    a.component_count() == b.component_count() && canonicalize(a) == canonicalize(b)
}
