//! Gauss words and Gauss phrases under homotopy.
//!
//! The crate parses and canonicalizes words and phrases, enumerates and
//! applies the homotopy moves (shift, H1, H2, H3 and the derived H2a, H3a,
//! H3b, H3c), computes the `S` and `S_m` phrase invariants and the `z` and
//! `z_o` word invariants, builds parity coverings and lifts, and checks
//! equivalences by bounded breadth-first search.
//!
//! ```
//! use gauss_core::{compute_z, is_nonzero, parse_word};
//!
//! let w = parse_word("ABACDCEBED").unwrap();
//! assert!(is_nonzero(&compute_z(&w)));
//! ```

pub mod checks;
pub mod coverings;
pub mod error;
pub mod gen;
pub mod moves;
pub mod s_invariant;
pub mod search;
pub mod words;
pub mod z_invariant;

pub use coverings::{
    cover, cover_tower, lift, lift_family, parity, refined_height, syntactic_height, HeightReport,
    Parity, ParityTable,
};
pub use error::{Error, Result};
pub use moves::{
    apply_move, apply_move_under, enumerate_moves, inverse_moves, neighbors, replay, successors,
    Closure, Direction, HomotopyPolicy, Move, MoveKind,
};
pub use s_invariant::{
    compute_s, compute_s_m, letter_linking_vector, linking_vector, orbit_map, transpose_s,
    unordered_key, BitVector, Orbit, SComponent, SMValue, SValue, UnorderedKey,
};
pub use search::{
    are_homotopic_bounded, explore, reduce, Exploration, SearchConfig, SearchResult, Verdict,
};
pub use words::{
    canonicalize, canonicalize_word, is_isomorphic, letter_site, parse_phrase, parse_word,
    CanonicalForm, GaussPhrase, GaussWord, Letter, LetterSite,
};
pub use z_invariant::{
    compute_z, compute_z_o, is_nonzero, phrase_for_letter, trivial_phrase, ClassSumMod2,
};
