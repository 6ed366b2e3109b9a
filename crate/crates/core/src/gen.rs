//! Seeded random Gauss words and phrases for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::words::{canonical_letter, GaussPhrase, GaussWord, SEPARATOR};

/// Uniformly shuffled word on the first `rank` canonical letters.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> GaussWord {
    let mut letters: Vec<u8> = (0..rank)
        .flat_map(|i| {
            let b = canonical_letter(i)
                .expect("rank within the alphabet")
                .byte();
            [b, b]
        })
        .collect();
    letters.shuffle(rng);
    GaussWord::from_bytes(letters).expect("two copies of each letter")
}

/// Random word cut into `components` pieces at random places.
pub fn random_phrase<R: Rng + ?Sized>(rng: &mut R, rank: usize, components: usize) -> GaussPhrase {
    assert!(components >= 1);
    let word = random_word(rng, rank);
    let mut cuts: Vec<usize> = (0..components - 1)
        .map(|_| rng.gen_range(0..=word.len()))
        .collect();
    cuts.sort_unstable();
    let mut text = Vec::with_capacity(word.len() + cuts.len());
    let mut prev = 0;
    for c in cuts {
        text.extend_from_slice(&word.as_bytes()[prev..c]);
        text.push(SEPARATOR);
        prev = c;
    }
    text.extend_from_slice(&word.as_bytes()[prev..]);
    GaussPhrase::from_text(text).expect("cut of a Gauss word")
}

/// Letters not among `used`, each placed twice at random inside `slots`
/// filler sequences.
pub fn random_fillers<R: Rng + ?Sized>(
    rng: &mut R,
    used: &[u8],
    extra_letters: usize,
    slots: usize,
) -> Vec<Vec<u8>> {
    let pool: Vec<u8> = (0..62)
        .filter_map(canonical_letter)
        .map(|l| l.byte())
        .filter(|b| !used.contains(b))
        .take(extra_letters)
        .collect();
    let mut fillers = vec![Vec::new(); slots];
    for &b in pool.iter().chain(pool.iter()) {
        let slot = &mut fillers[rng.gen_range(0..slots)];
        let at = rng.gen_range(0..=slot.len());
        slot.insert(at, b);
    }
    fillers
}

/// Every canonical word of the given rank, in lexicographic order. There
/// are `(2n)! / (2^n n!)` of them.
pub fn all_canonical_words(rank: usize) -> Vec<GaussWord> {
    fn extend(
        rank: usize,
        seen: &mut [u8; 62],
        opened: usize,
        cur: &mut Vec<u8>,
        out: &mut Vec<GaussWord>,
    ) {
        if cur.len() == 2 * rank {
            out.push(GaussWord::from_bytes_unchecked(cur.clone()));
            return;
        }
        for i in 0..opened {
            if seen[i] == 1 {
                seen[i] = 2;
                cur.push(canonical_letter(i).unwrap().byte());
                extend(rank, seen, opened, cur, out);
                cur.pop();
                seen[i] = 1;
            }
        }
        if opened < rank {
            seen[opened] = 1;
            cur.push(canonical_letter(opened).unwrap().byte());
            extend(rank, seen, opened + 1, cur, out);
            cur.pop();
            seen[opened] = 0;
        }
    }
    let mut out = Vec::new();
    extend(
        rank,
        &mut [0; 62],
        0,
        &mut Vec::with_capacity(2 * rank),
        &mut out,
    );
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_values_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rank in 0..8 {
            assert_eq!(random_word(&mut rng, rank).rank(), rank);
            let p = random_phrase(&mut rng, rank, 3);
            assert_eq!((p.rank(), p.component_count()), (rank, 3));
        }
        let f = random_fillers(&mut rng, b"ABCD", 3, 6);
        assert_eq!(f.iter().map(Vec::len).sum::<usize>(), 6);
    }

    #[test]
    fn canonical_word_counts() {
        let counts: Vec<usize> = (0..6).map(|n| all_canonical_words(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 15, 105, 945]);
        assert!(all_canonical_words(3)
            .iter()
            .all(|w| crate::words::canonicalize_word(w) == *w));
    }
}
