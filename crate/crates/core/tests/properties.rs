use gauss_core::gen::{all_canonical_words, random_phrase, random_word};
use gauss_core::s_invariant::BitVector;
use gauss_core::words::canonical_letter;
use gauss_core::z_invariant::z_key;
use gauss_core::{
    apply_move, canonicalize, canonicalize_word, compute_s, compute_z, cover, enumerate_moves,
    is_isomorphic, lift, linking_vector, parity, phrase_for_letter, transpose_s, GaussPhrase,
    GaussWord, HomotopyPolicy, Letter, Move, MoveKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word_strategy(max_rank: usize) -> impl Strategy<Value = GaussWord> {
    (0..=max_rank, any::<u64>())
        .prop_map(|(rank, seed)| random_word(&mut ChaCha8Rng::seed_from_u64(seed), rank))
}

fn phrase_strategy(max_rank: usize, max_components: usize) -> impl Strategy<Value = GaussPhrase> {
    (0..=max_rank, 1..=max_components, any::<u64>()).prop_map(|(rank, comps, seed)| {
        random_phrase(&mut ChaCha8Rng::seed_from_u64(seed), rank, comps)
    })
}

/// Brute-force isomorphism: try every bijection of the alphabets.
fn isomorphic_by_bijection(a: &GaussPhrase, b: &GaussPhrase) -> bool {
    let (la, lb) = (a.distinct_letters(), b.distinct_letters());
    if la.len() != lb.len() || a.text().len() != b.text().len() {
        return false;
    }
    fn permute(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return f(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(k + 1, perm, f) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    let mut perm: Vec<usize> = (0..la.len()).collect();
    permute(0, &mut perm, &mut |perm| {
        a.text()
            .iter()
            .zip(b.text())
            .all(|(&x, &y)| match la.iter().position(|l| l.byte() == x) {
                Some(i) => lb[perm[i]].byte() == y,
                None => x == y,
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_idempotent(phrase in phrase_strategy(8, 3)) {
        let c = canonicalize(&phrase).into_phrase();
        prop_assert_eq!(canonicalize(&c).into_phrase(), c.clone());
        prop_assert!(is_isomorphic(&phrase, &c));
    }

    #[test]
    fn cover_undoes_lift(word in word_strategy(12)) {
        let l = lift(&word).unwrap();
        prop_assert_eq!(cover(&l), word.clone());
        prop_assert_eq!(l == word, parity(&word).odd_letters().is_empty());
    }

    #[test]
    fn odd_letters_come_in_pairs(word in word_strategy(12)) {
        prop_assert_eq!(parity(&word).odd_letters().len() % 2, 0);
    }

    #[test]
    fn cover_drops_at_least_two_letters(word in word_strategy(12)) {
        let c = cover(&word);
        prop_assert!(c == word || c.rank() + 2 <= word.rank());
    }

    #[test]
    fn shift_keeps_parity(word in word_strategy(10).prop_filter("nonempty", |w| !w.is_empty())) {
        let shifted = apply_move(&word.to_phrase(), &Move::shift(0)).unwrap().as_word().unwrap();
        for (l, p) in parity(&word).entries() {
            prop_assert_eq!(parity(&shifted).get(*l), Some(*p));
        }
    }

    #[test]
    fn cover_z_survives_moves(word in word_strategy(6), pick in any::<prop::sample::Index>()) {
        let moves = enumerate_moves(&word.to_phrase(), &HomotopyPolicy::closed(), true);
        let mv = pick.get(&moves);
        let after = apply_move(&word.to_phrase(), mv).unwrap().as_word().unwrap();
        prop_assert_eq!(compute_z(&cover(&word)), compute_z(&cover(&after)));
    }

    #[test]
    fn swap_transposes_s(phrase in phrase_strategy(6, 2).prop_filter("two", |p| p.component_count() == 2)) {
        let swapped = apply_move(&phrase, &Move::swap(0)).unwrap();
        prop_assert_eq!(compute_s(&swapped), transpose_s(&compute_s(&phrase)).unwrap());
    }

    #[test]
    fn component_vectors_skip_their_own_component(phrase in phrase_strategy(8, 4)) {
        for (k, (start, end)) in phrase.component_ranges().into_iter().enumerate() {
            prop_assert!(!linking_vector(&phrase, start..end).unwrap().get(k));
        }
    }

    #[test]
    fn isomorphism_matches_brute_force(a in phrase_strategy(4, 2), seed in any::<u64>()) {
        let b = random_phrase(&mut ChaCha8Rng::seed_from_u64(seed), a.rank(), a.component_count());
        prop_assert_eq!(is_isomorphic(&a, &b), isomorphic_by_bijection(&a, &b));
        let c = canonicalize(&a).into_phrase();
        prop_assert!(isomorphic_by_bijection(&a, &c));
    }
}

#[test]
fn reflection_is_an_involution() {
    for n in 0..=4 {
        for v in BitVector::all(n) {
            for x in BitVector::all(n) {
                assert_eq!(v.reflect(v.reflect(x)), x);
                assert_eq!(
                    v.orbit_representative(x),
                    v.orbit_representative(v.reflect(x))
                );
            }
        }
    }
}

#[test]
fn rank_five_words() {
    let words = all_canonical_words(5);
    assert_eq!(words.len(), 945);
    assert!(words.iter().all(|w| canonicalize_word(w) == *w));
}

#[test]
fn h2_letters_share_a_key() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (a, b) = (canonical_letter(20).unwrap(), canonical_letter(21).unwrap());
    for _ in 0..200 {
        let rank = rand::Rng::gen_range(&mut rng, 0..=5);
        let base = random_word(&mut rng, rank);
        let n = base.len();
        let s1 = rand::Rng::gen_range(&mut rng, 0..=n);
        let s2 = rand::Rng::gen_range(&mut rng, s1..=n);
        let t = base.as_bytes();
        let letters = [
            &t[..s1],
            &[a.byte(), b.byte()],
            &t[s1..s2],
            &[b.byte(), a.byte()],
            &t[s2..],
        ]
        .concat();
        let word = GaussWord::from_bytes(letters).unwrap();
        let key = |l: Letter| z_key(&phrase_for_letter(&word, l).unwrap()).unwrap();
        assert_eq!(key(a), key(b), "{word}");
        let reduced = enumerate_moves(&word.to_phrase(), &HomotopyPolicy::closed(), false)
            .into_iter()
            .filter(|m| m.kind == MoveKind::H2)
            .any(|m| apply_move(&word.to_phrase(), &m).unwrap().text() == base.as_bytes());
        assert!(reduced, "{word}");
    }
}
