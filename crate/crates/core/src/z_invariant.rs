//! Images of the `z` and `z_o` invariants of Gauss words.
//!
//! The true invariants live in free abelian groups on homotopy classes of
//! two-component phrases, reduced mod 2. Classes cannot be decided
//! directly, so each class is replaced by a key computed from a phrase
//! invariant (`S` modulo transposition for `z`, `S_m` for `z_o`) and the sum
//! is pushed forward to sets of keys with odd multiplicity. A nonempty
//! image proves the invariant nonzero; an empty image proves nothing.

use std::collections::BTreeSet;
use std::ops::{Add, AddAssign};

use crate::error::Result;
use crate::s_invariant::{compute_s_m, unordered_key};
use crate::words::{letter_site, GaussPhrase, GaussWord, Letter, SEPARATOR};

/// Element of a vector space over `Z/2` with a basis of class keys.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClassSumMod2 {
    odd_keys: BTreeSet<String>,
}

impl ClassSumMod2 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds one copy of the class with this key.
    pub fn toggle(&mut self, key: impl Into<String>) {
        let key = key.into();
        if !self.odd_keys.remove(&key) {
            self.odd_keys.insert(key);
        }
    }

    pub fn odd_keys(&self) -> &BTreeSet<String> {
        &self.odd_keys
    }

    pub fn contains(&self, key: &str) -> bool {
        self.odd_keys.contains(key)
    }

    pub fn len(&self) -> usize {
        self.odd_keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.odd_keys.is_empty()
    }
}

impl AddAssign<&ClassSumMod2> for ClassSumMod2 {
    fn add_assign(&mut self, rhs: &ClassSumMod2) {
        for k in &rhs.odd_keys {
            self.toggle(k.clone());
        }
    }
}

impl Add for ClassSumMod2 {
    type Output = ClassSumMod2;

    fn add(mut self, rhs: ClassSumMod2) -> ClassSumMod2 {
        self += &rhs;
        self
    }
}

impl FromIterator<String> for ClassSumMod2 {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        let mut sum = ClassSumMod2::zero();
        for k in iter {
            sum.toggle(k);
        }
        sum
    }
}

pub fn is_nonzero(sum: &ClassSumMod2) -> bool {
    !sum.is_empty()
}

/// `y|xz` for `word = x A y A z`.
pub fn phrase_for_letter(word: &GaussWord, letter: Letter) -> Result<GaussPhrase> {
    let site = letter_site(word, letter)?;
    let mut text = Vec::with_capacity(word.len() - 1);
    text.extend_from_slice(site.y);
    text.push(SEPARATOR);
    text.extend_from_slice(site.x);
    text.extend_from_slice(site.z);
    Ok(GaussPhrase::from_text_unchecked(text))
}

/// `∅|w`.
pub fn trivial_phrase(word: &GaussWord) -> GaussPhrase {
    let mut text = Vec::with_capacity(word.len() + 1);
    text.push(SEPARATOR);
    text.extend_from_slice(word.as_bytes());
    GaussPhrase::from_text_unchecked(text)
}

/// Sums `key(p(w, A)) - key(∅|w)` over all letters `A`; signs vanish mod 2.
fn letter_sum(
    word: &GaussWord,
    key: impl Fn(&GaussPhrase) -> Result<String>,
) -> Result<ClassSumMod2> {
    let mut sum = ClassSumMod2::zero();
    for letter in word.distinct_letters() {
        sum.toggle(key(&phrase_for_letter(word, letter)?)?);
    }
    if word.rank() % 2 == 1 {
        sum.toggle(key(&trivial_phrase(word))?);
    }
    Ok(sum)
}

pub fn z_key(phrase: &GaussPhrase) -> Result<String> {
    unordered_key(phrase).map(|k| k.0)
}

pub fn z_o_key(phrase: &GaussPhrase) -> Result<String> {
    compute_s_m(phrase).map(|s| s.encode())
}

/// Image of `z(w)` keyed by `S` modulo transposition.
pub fn compute_z(word: &GaussWord) -> ClassSumMod2 {
    letter_sum(word, z_key).expect("letter phrases always have two components")
}

/// Image of `z_o(w)` keyed by `S_m`.
pub fn compute_z_o(word: &GaussWord) -> ClassSumMod2 {
    letter_sum(word, z_o_key).expect("letter phrases always have two components")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_phrase, parse_word};

    fn w(s: &str) -> GaussWord {
        parse_word(s).unwrap()
    }

    fn letter(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    fn key(s: &str) -> String {
        z_key(&parse_phrase(s).unwrap()).unwrap()
    }

    fn key_m(s: &str) -> String {
        z_o_key(&parse_phrase(s).unwrap()).unwrap()
    }

    #[test]
    fn letter_phrases() {
        let word = w("ABACDCEBED");
        assert_eq!(
            phrase_for_letter(&word, letter('D')).unwrap().to_string(),
            "CEBE|ABAC"
        );
        assert_eq!(
            phrase_for_letter(&word, letter('B')).unwrap().to_string(),
            "ACDCE|AED"
        );
        assert_eq!(
            phrase_for_letter(&w("AA"), letter('A'))
                .unwrap()
                .to_string(),
            "|"
        );
        assert!(phrase_for_letter(&word, letter('Q')).is_err());
        assert_eq!(trivial_phrase(&word).to_string(), "|ABACDCEBED");
        assert_eq!(trivial_phrase(&w("")).to_string(), "|");
    }

    #[test]
    fn z_examples() {
        assert!(compute_z(&w("")).is_empty());
        assert!(compute_z(&w("AA")).is_empty());
        let z = compute_z(&w("ABACDCEBED"));
        let expected: ClassSumMod2 = [key("CEBE|ABAC"), key("|ABACDCEBED")].into_iter().collect();
        assert_eq!(z, expected);
        assert_eq!(z.len(), 2);
        assert!(is_nonzero(&z));
    }

    #[test]
    fn z_o_separates_open_homotopy() {
        let word = w("ABACDCBD");
        assert!(!is_nonzero(&compute_z(&word)));
        let zo = compute_z_o(&word);
        let expected: ClassSumMod2 = ["B|CDCBD", "ACDC|AD", "D|ABABD", "CB|ABAC"]
            .into_iter()
            .map(key_m)
            .collect();
        assert_eq!(zo.len(), 4);
        assert_eq!(zo, expected);
        assert!(compute_z_o(&w("")).is_empty());
    }

    #[test]
    fn sums_are_symmetric_difference() {
        let a: ClassSumMod2 = ["x".to_string(), "y".to_string()].into_iter().collect();
        let b: ClassSumMod2 = ["y".to_string(), "z".to_string()].into_iter().collect();
        let c = a.clone() + b.clone();
        assert_eq!(c.odd_keys().iter().collect::<Vec<_>>(), ["x", "z"]);
        assert_eq!(a.clone() + a.clone(), ClassSumMod2::zero());
        assert_eq!(a.clone() + b.clone(), b + a);
    }
}
