//! Letter parity, the even-parity covering, lifts, and height.

use crate::error::{Error, Result};
use crate::search::{are_homotopic_bounded, SearchConfig, Verdict};
use crate::words::{canonical_letter, GaussWord, Letter, ALPHABET_SIZE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of every letter, in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityTable {
    entries: Vec<(Letter, Parity)>,
}

impl ParityTable {
    pub fn entries(&self) -> &[(Letter, Parity)] {
        &self.entries
    }

    pub fn get(&self, letter: Letter) -> Option<Parity> {
        self.entries
            .iter()
            .find(|(l, _)| *l == letter)
            .map(|&(_, p)| p)
    }

    pub fn odd_letters(&self) -> Vec<Letter> {
        self.with(Parity::Odd)
    }

    pub fn even_letters(&self) -> Vec<Letter> {
        self.with(Parity::Even)
    }

    fn with(&self, parity: Parity) -> Vec<Letter> {
        self.entries
            .iter()
            .filter(|(_, p)| *p == parity)
            .map(|&(l, _)| l)
            .collect()
    }
}

/// A letter is odd when an odd number of letters lie strictly between its
/// two occurrences.
pub fn parity(word: &GaussWord) -> ParityTable {
    let bytes = word.as_bytes();
    let mut first = [usize::MAX; 128];
    let mut entries = Vec::with_capacity(word.rank());
    let mut slot_of = [usize::MAX; 128];
    for (i, &b) in bytes.iter().enumerate() {
        let f = &mut first[b as usize];
        if *f == usize::MAX {
            *f = i;
            slot_of[b as usize] = entries.len();
            entries.push((Letter::from_byte(b), Parity::Even));
        } else if (i - *f - 1) % 2 == 1 {
            entries[slot_of[b as usize]].1 = Parity::Odd;
        }
    }
    ParityTable { entries }
}

/// The word with every odd-parity letter deleted.
pub fn cover(word: &GaussWord) -> GaussWord {
    let table = parity(word);
    let odd = table.odd_letters();
    GaussWord::from_bytes_unchecked(
        word.as_bytes()
            .iter()
            .copied()
            .filter(|&b| !odd.contains(&Letter::from_byte(b)))
            .collect(),
    )
}

/// Fresh letters for a lift: canonical order after the largest letter in
/// use, then any unused letter before it.
fn lift_letters(word: &GaussWord, count: usize) -> Result<Vec<Letter>> {
    let used: Vec<Letter> = word.distinct_letters();
    let start = used.iter().map(|l| l.index() + 1).max().unwrap_or(0);
    let fresh: Vec<Letter> = (start..ALPHABET_SIZE)
        .chain(0..start)
        .filter_map(canonical_letter)
        .filter(|l| !used.contains(l))
        .take(count)
        .collect();
    if fresh.len() < count {
        return Err(Error::Capacity(format!(
            "lift needs {count} fresh letters but only {} remain",
            fresh.len()
        )));
    }
    Ok(fresh)
}

/// Wraps the first occurrence of each odd letter `A` as `XAX` with a fresh
/// letter `X`, so that `cover(lift(w)) == w`.
pub fn lift(word: &GaussWord) -> Result<GaussWord> {
    let odd = parity(word).odd_letters();
    let fresh = lift_letters(word, odd.len())?;
    let mut out = Vec::with_capacity(word.len() + 2 * odd.len());
    let mut done = vec![false; odd.len()];
    for &b in word.as_bytes() {
        let l = Letter::from_byte(b);
        match odd.iter().position(|&o| o == l) {
            Some(k) if !done[k] => {
                done[k] = true;
                let x = fresh[k].byte();
                out.extend_from_slice(&[x, b, x]);
            }
            _ => out.push(b),
        }
    }
    Ok(GaussWord::from_bytes_unchecked(out))
}

/// The `i`-fold lift.
pub fn lift_family(word: &GaussWord, i: usize) -> Result<GaussWord> {
    (0..i).try_fold(word.clone(), |w, _| lift(&w))
}

/// `w_0 = w, w_1 = cover(w_0), ...` up to and including the first fixed
/// point.
pub fn cover_tower(word: &GaussWord) -> Vec<GaussWord> {
    let mut tower = vec![word.clone()];
    loop {
        let next = cover(tower.last().expect("tower is never empty"));
        if &next == tower.last().unwrap() {
            return tower;
        }
        tower.push(next);
    }
}

/// Number of strict cover steps until the word stops changing, and the
/// fixed word reached. Bounds the homotopy height from above.
pub fn syntactic_height(word: &GaussWord) -> (usize, GaussWord) {
    let mut tower = cover_tower(word);
    let height = tower.len() - 1;
    (height, tower.pop().unwrap())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightReport {
    pub tower: Vec<GaussWord>,
    pub syntactic: usize,
    /// Smallest `n` for which the search proved `w_{n+1} ~ w_n`, if below
    /// the syntactic height.
    pub refined: Option<usize>,
}

impl HeightReport {
    /// Best available upper bound on the height.
    pub fn bound(&self) -> usize {
        self.refined.unwrap_or(self.syntactic)
    }

    /// Word at the reported height.
    pub fn base(&self) -> &GaussWord {
        &self.tower[self.bound()]
    }
}

/// Syntactic height, refined by bounded search for an earlier level whose
/// cover is homotopic to it. `cfg.rank_cap` is raised to cover each pair
/// of levels tested.
pub fn refined_height(word: &GaussWord, cfg: &SearchConfig) -> Result<HeightReport> {
    let tower = cover_tower(word);
    let syntactic = tower.len() - 1;
    let mut refined = None;
    for n in 0..syntactic {
        let (a, b) = (tower[n].to_phrase(), tower[n + 1].to_phrase());
        let mut level_cfg = cfg.clone();
        level_cfg.rank_cap = level_cfg.rank_cap.max(a.rank());
        if are_homotopic_bounded(&a, &b, &level_cfg)?.verdict == Verdict::Equivalent {
            refined = Some(n);
            break;
        }
    }
    Ok(HeightReport {
        tower,
        syntactic,
        refined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::HomotopyPolicy;
    use crate::words::{canonicalize_word, parse_word};

    fn w(s: &str) -> GaussWord {
        parse_word(s).unwrap()
    }

    fn letters(s: &str) -> Vec<Letter> {
        s.chars().map(|c| Letter::new(c).unwrap()).collect()
    }

    #[test]
    fn parity_examples() {
        let t = parity(&w("ABCADBECED"));
        assert_eq!(t.odd_letters(), letters("BE"));
        assert_eq!(t.even_letters(), letters("ACD"));
        assert_eq!(
            parity(&w("AA")).get(Letter::new('A').unwrap()),
            Some(Parity::Even)
        );
        assert_eq!(parity(&w("ABAB")).odd_letters(), letters("AB"));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(cover(&w("ABCADBECED")).to_string(), "ACADCD");
        assert_eq!(cover(&w("ABACDCEBED")).to_string(), "DD");
        assert_eq!(cover(&w("")), w(""));
    }

    #[test]
    fn lift_examples() {
        let l = lift(&w("ABCADBECED")).unwrap();
        assert_eq!(l.to_string(), "AFBFCADBGEGCED");
        assert_eq!(
            canonicalize_word(&l),
            canonicalize_word(&w("AXBXCADBYEYCED"))
        );
        assert_eq!(cover(&l), w("ABCADBECED"));
        assert_eq!(lift(&w("ABBA")).unwrap(), w("ABBA"));
        let l = lift(&w("ABAB")).unwrap();
        assert_eq!(canonicalize_word(&l), canonicalize_word(&w("XAXYBYAB")));
    }

    #[test]
    fn lift_wraps_past_the_last_letter() {
        let l = lift(&w("9A9A")).unwrap();
        assert_eq!(l.to_string(), "B9BCAC9A");
        assert_eq!(cover(&l), w("9A9A"));
    }

    #[test]
    fn heights() {
        assert_eq!(syntactic_height(&w("")), (0, w("")));
        assert_eq!(syntactic_height(&w("ABACDCEBED")), (1, w("DD")));
        for i in 0..4 {
            let wi = lift_family(&w("ABACDCEBED"), i).unwrap();
            assert_eq!(syntactic_height(&wi).0, 1 + i);
        }
        assert_eq!(lift_family(&w("AA"), 3).unwrap(), w("AA"));
        let w1 = lift_family(&w("ABACDCEBED"), 1).unwrap();
        assert_eq!(w1.rank(), 9);
        assert_eq!(cover(&w1), w("ABACDCEBED"));
    }

    #[test]
    fn refined_heights_under_both_homotopies() {
        let word = w("ABACDCBD");
        assert_eq!(syntactic_height(&word).0, 2);
        let closed =
            refined_height(&word, &SearchConfig::new(HomotopyPolicy::closed(), 5)).unwrap();
        assert_eq!(closed.refined, Some(0));
        let open = refined_height(&word, &SearchConfig::new(HomotopyPolicy::open(), 5)).unwrap();
        assert_eq!(open.refined, Some(1));
        assert_eq!(open.base().rank(), 2);
    }

    #[test]
    fn capacity() {
        // 62 letters in use and an odd letter to wrap
        let text: Vec<u8> = (0..ALPHABET_SIZE)
            .map(|i| canonical_letter(i).unwrap().byte())
            .collect();
        let doubled: Vec<u8> = text.iter().chain(text.iter()).copied().collect();
        let word = GaussWord::from_bytes(doubled).unwrap();
        // every span has 61 letters, all odd
        assert!(matches!(lift(&word), Err(Error::Capacity(_))));
    }
}
