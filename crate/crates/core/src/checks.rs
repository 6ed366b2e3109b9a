//! Worked examples and randomized invariance trials, shared by the test
//! suites and the command-line self-test.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coverings::{cover, lift, parity, syntactic_height};
use crate::gen::{random_fillers, random_phrase, random_word};
use crate::moves::{
    apply_move, enumerate_moves, replay, successors, HomotopyPolicy, Move, MoveKind,
};
use crate::s_invariant::{compute_s, compute_s_m, transpose_s, unordered_key};
use crate::search::{are_homotopic_bounded, reduce, SearchConfig, SearchResult, Verdict};
use crate::words::{canonicalize, canonicalize_word, GaussPhrase, GaussWord, Letter};
use crate::z_invariant::{
    compute_z, compute_z_o, is_nonzero, phrase_for_letter, z_key, ClassSumMod2,
};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CaseReport {
    fn from_result(name: impl Into<String>, r: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CaseReport {
            name: name.into(),
            passed,
            detail,
        }
    }
}

type Check = std::result::Result<String, String>;
type NamedCheck = (&'static str, Box<dyn Fn() -> Check>);

fn p(s: &str) -> GaussPhrase {
    s.parse().expect("literal phrase")
}

fn w(s: &str) -> GaussWord {
    s.parse().expect("literal word")
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Check {
    if got == want {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn s_of(s: &str) -> String {
    compute_s(&p(s)).encode()
}

fn s_m_of(s: &str) -> String {
    compute_s_m(&p(s)).expect("two components").encode()
}

fn key(s: &str) -> String {
    z_key(&p(s)).expect("two components")
}

fn search(a: &str, b: &str, policy: HomotopyPolicy, cap: usize) -> SearchResult {
    are_homotopic_bounded(&p(a), &p(b), &SearchConfig::new(policy, cap)).expect("valid search")
}

/// The worked examples with known answers.
pub fn worked_cases() -> Vec<CaseReport> {
    let cases: Vec<NamedCheck> = vec![
        (
            "phrase ABA|B has two components",
            Box::new(|| expect_eq(p("ABA|B").component_count(), 2)),
        ),
        (
            "phrase AB|BAC|C has three components",
            Box::new(|| expect_eq(p("AB|BAC|C").component_count(), 3)),
        ),
        (
            "ABAB has rank 2",
            Box::new(|| expect_eq(w("ABAB").rank(), 2)),
        ),
        (
            "H3c on ABACDCBD",
            Box::new(|| {
                expect_eq(
                    apply_move(&p("ABACDCBD"), &"H3c@1:1,3,6".parse().unwrap())
                        .map(|x| x.to_string()),
                    Ok("BACADBCD".into()),
                )
            }),
        ),
        (
            "shift of BACADBCD",
            Box::new(|| {
                expect_eq(
                    apply_move(&p("BACADBCD"), &Move::shift(0)).map(|x| x.to_string()),
                    Ok("ACADBCDB".into()),
                )
            }),
        ),
        (
            "H2a on ACADBCDB",
            Box::new(|| {
                expect_eq(
                    apply_move(&p("ACADBCDB"), &"H2a@1:4,7".parse().unwrap())
                        .map(|x| x.to_string()),
                    Ok("ACAC".into()),
                )
            }),
        ),
        (
            "swap of CEBE|ABAC",
            Box::new(|| {
                expect_eq(
                    apply_move(&p("CEBE|ABAC"), &Move::swap(0)).map(|x| x.to_string()),
                    Ok("ABAC|CEBE".into()),
                )
            }),
        ),
        (
            "S(CEBE|ABAC)",
            Box::new(|| expect_eq(s_of("CEBE|ABAC"), "00;01/00;10".into())),
        ),
        (
            "S(|ABACDCEBED)",
            Box::new(|| expect_eq(s_of("|ABACDCEBED"), "00/00".into())),
        ),
        (
            "S(ABACDCEBED|)",
            Box::new(|| expect_eq(s_of("ABACDCEBED|"), "00/00".into())),
        ),
        (
            "S(CEBE|ABAC) is its own transpose",
            Box::new(|| {
                let s = compute_s(&p("CEBE|ABAC"));
                expect_eq(transpose_s(&s).map(|t| t.encode()), Ok(s.encode()))
            }),
        ),
        (
            "key(CEBE|ABAC) = key(ABAC|CEBE)",
            Box::new(|| expect_eq(key("CEBE|ABAC"), key("ABAC|CEBE"))),
        ),
        (
            "key(CEBE|ABAC) differs from key(|ABACDCEBED)",
            Box::new(|| expect_eq(key("CEBE|ABAC") != key("|ABACDCEBED"), true)),
        ),
        (
            "S_m(B|CDCBD)",
            Box::new(|| expect_eq(s_m_of("B|CDCBD"), "01/10;01;11".into())),
        ),
        (
            "S_m(ACDC|AD)",
            Box::new(|| expect_eq(s_m_of("ACDC|AD"), "00;01/00".into())),
        ),
        (
            "S_m(D|D)",
            Box::new(|| expect_eq(s_m_of("D|D"), "01/10".into())),
        ),
        (
            "S_m(CB|ABAC)",
            Box::new(|| expect_eq(s_m_of("CB|ABAC"), "00/00;10".into())),
        ),
        (
            "p(ABACDCEBED, A)",
            Box::new(|| {
                expect_eq(
                    phrase_for_letter(&w("ABACDCEBED"), letter('A')).map(|x| x.to_string()),
                    Ok("B|CDCEBED".into()),
                )
            }),
        ),
        (
            "p(ABACDCEBED, B)",
            Box::new(|| {
                expect_eq(
                    phrase_for_letter(&w("ABACDCEBED"), letter('B')).map(|x| x.to_string()),
                    Ok("ACDCE|AED".into()),
                )
            }),
        ),
        (
            "p(ABACDCEBED, D)",
            Box::new(|| {
                expect_eq(
                    phrase_for_letter(&w("ABACDCEBED"), letter('D')).map(|x| x.to_string()),
                    Ok("CEBE|ABAC".into()),
                )
            }),
        ),
        (
            "z of the empty word",
            Box::new(|| expect_eq(compute_z(&w("")), ClassSumMod2::zero())),
        ),
        (
            "z(ABACDCEBED) is nonzero",
            Box::new(|| {
                let want: ClassSumMod2 =
                    [key("CEBE|ABAC"), key("|ABACDCEBED")].into_iter().collect();
                expect_eq(compute_z(&w("ABACDCEBED")), want)
            }),
        ),
        (
            "z(ABACDCBD) is zero, z_o(ABACDCBD) is not",
            Box::new(|| {
                let want: ClassSumMod2 = ["B|CDCBD", "ACDC|AD", "D|ABABD", "CB|ABAC"]
                    .into_iter()
                    .map(s_m_of)
                    .collect();
                let word = w("ABACDCBD");
                expect_eq(
                    (compute_z(&word).is_empty(), compute_z_o(&word)),
                    (true, want),
                )
            }),
        ),
        (
            "parity of ABCADBECED",
            Box::new(|| {
                let t = parity(&w("ABCADBECED"));
                expect_eq(
                    (t.odd_letters(), t.even_letters()),
                    (letters("BE"), letters("ACD")),
                )
            }),
        ),
        (
            "cover(ABCADBECED)",
            Box::new(|| expect_eq(cover(&w("ABCADBECED")), w("ACADCD"))),
        ),
        (
            "cover(ABACDCEBED)",
            Box::new(|| expect_eq(cover(&w("ABACDCEBED")), w("DD"))),
        ),
        (
            "lift(ABCADBECED)",
            Box::new(|| {
                let l = lift(&w("ABCADBECED")).map_err(|e| e.to_string())?;
                expect_eq(
                    canonicalize_word(&l),
                    canonicalize_word(&w("AXBXCADBYEYCED")),
                )
            }),
        ),
        (
            "lift(ABAB)",
            Box::new(|| {
                let l = lift(&w("ABAB")).map_err(|e| e.to_string())?;
                expect_eq(canonicalize_word(&l), canonicalize_word(&w("XAXYBYAB")))
            }),
        ),
        (
            "lift fixes words without odd letters",
            Box::new(|| {
                expect_eq(
                    lift(&w("ABBACDDC")).map_err(|e| e.to_string())?,
                    w("ABBACDDC"),
                )
            }),
        ),
        (
            "ABACDCBD is trivial",
            Box::new(|| {
                let r = search("ABACDCBD", "-", HomotopyPolicy::closed(), 4);
                let cert = r.certificate.clone().unwrap_or_default();
                if r.verdict != Verdict::Equivalent || cert.len() > 5 {
                    return Err(format!("{} with {} moves", r.verdict.label(), cert.len()));
                }
                let end = replay(&p("ABACDCBD"), &cert, &HomotopyPolicy::closed())
                    .map_err(|e| e.to_string())?;
                expect_eq(end.rank(), 0)
            }),
        ),
        (
            "lift(ABAB) is homotopic to ABAB",
            Box::new(|| {
                expect_eq(
                    search("XAXYBYAB", "ABAB", HomotopyPolicy::closed(), 4).verdict,
                    Verdict::Equivalent,
                )
            }),
        ),
        (
            "ABACDCBD is not trivial under open homotopy",
            Box::new(|| {
                expect_eq(
                    search("ABACDCBD", "-", HomotopyPolicy::open(), 5).verdict,
                    Verdict::NotEquivalentWithinBounds,
                )
            }),
        ),
        (
            "reduce(ABACDCBD)",
            Box::new(|| {
                let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
                expect_eq(reduce(&p("ABACDCBD"), &cfg).map(|x| x.rank()), Ok(0))
            }),
        ),
        (
            "reduce(ABACDCEBED) is nonempty",
            Box::new(|| {
                let cfg = SearchConfig::new(HomotopyPolicy::closed(), 6).with_node_cap(200_000);
                let r = reduce(&p("ABACDCEBED"), &cfg).map_err(|e| e.to_string())?;
                if r.rank() == 0 {
                    Err("reduced to the empty word".into())
                } else {
                    Ok(r.to_string())
                }
            }),
        ),
        (
            "heights of the lift family",
            Box::new(|| {
                let mut heights = Vec::new();
                let mut nonzero = Vec::new();
                let mut word = w("ABACDCEBED");
                for _ in 0..6 {
                    heights.push(syntactic_height(&word).0);
                    nonzero.push(is_nonzero(&compute_z(&word)));
                    word = lift(&word).map_err(|e| e.to_string())?;
                }
                expect_eq(heights, vec![1, 2, 3, 4, 5, 6])
                    .map(|h| format!("heights {h}, z nonzero {nonzero:?}"))
            }),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, f)| CaseReport::from_result(name, f()))
        .collect()
}

fn letter(c: char) -> Letter {
    Letter::new(c).expect("literal letter")
}

fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(letter).collect()
}

/// Placements of a fourth letter `D` around an H3 move on `A`, `B`, `C`.
/// Lowercase letters stand for arbitrary filler sequences. The move kind
/// relates the two phrases for `D`.
pub const UNINVOLVED_LETTER_CASES: [(&str, MoveKind); 10] = [
    ("rDsDtABxACyBCz", MoveKind::H3),
    ("rDsABtDxACyBCz", MoveKind::H3),
    ("rDsABtACxDyBCz", MoveKind::H3),
    ("rDsABtACxBCyDz", MoveKind::H3),
    ("rABsDtDxACyBCz", MoveKind::H3),
    ("rABsDtACxDyBCz", MoveKind::H3c),
    ("rABsDtACxBCyDz", MoveKind::H3c),
    ("rABsACtDxDyBCz", MoveKind::H3),
    ("rABsACtDxBCyDz", MoveKind::H3b),
    ("rABsACtBCxDyDz", MoveKind::H3),
];

/// The other side of the H3 move: `AB`, `AC`, `BC` become `BA`, `CA`, `CB`.
fn h3_image(template: &str) -> String {
    template
        .replace("AB", "ba")
        .replace("AC", "ca")
        .replace("BC", "cb")
        .replace("ba", "BA")
        .replace("ca", "CA")
        .replace("cb", "CB")
}

fn instantiate(template: &str, fillers: &[Vec<u8>]) -> GaussWord {
    let mut out = Vec::new();
    for c in template.bytes() {
        match b"rstxyz".iter().position(|&f| f == c) {
            Some(k) => out.extend_from_slice(&fillers[k]),
            None => out.push(c),
        }
    }
    GaussWord::from_bytes(out).expect("fillers complete a Gauss word")
}

/// Instantiates row `row` with random fillers and checks that the phrases
/// for `D` have equal keys and are one move of the listed kind apart.
pub fn uninvolved_letter_trial<R: Rng + ?Sized>(rng: &mut R, row: usize) -> Check {
    let (template, kind) = UNINVOLVED_LETTER_CASES[row];
    let extra = rng.gen_range(0..=3);
    let fillers = random_fillers(rng, b"ABCD", extra, 6);
    let w1 = instantiate(template, &fillers);
    let w2 = instantiate(&h3_image(template), &fillers);
    let d = letter('D');
    let (p1, p2) = (
        phrase_for_letter(&w1, d).map_err(|e| e.to_string())?,
        phrase_for_letter(&w2, d).map_err(|e| e.to_string())?,
    );
    let (k1, k2) = (z_key(&p1).unwrap(), z_key(&p2).unwrap());
    if k1 != k2 {
        return Err(format!("{w1}: key({p1}) = {k1} but key({p2}) = {k2}"));
    }
    let target = canonicalize(&p2);
    let linked = successors(&p1, &HomotopyPolicy::closed(), p1.rank())
        .into_iter()
        .any(|(m, q)| m.kind == kind && canonicalize(&q) == target);
    if !linked {
        return Err(format!(
            "{p1} and {p2} are not one {} move apart",
            kind.name()
        ));
    }
    Ok(format!("{p1} ~ {p2}"))
}

/// Invariants checked against random moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// `S` under homotopy of phrases with every component closed.
    S,
    /// `S_m` under mixed homotopy.
    SM,
    /// Unordered key under unordered homotopy.
    UnorderedKey,
    /// `z` under homotopy of words.
    Z,
    /// `z_o` under open homotopy of words.
    ZO,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::S,
        Invariant::SM,
        Invariant::UnorderedKey,
        Invariant::Z,
        Invariant::ZO,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::S => "S under homotopy",
            Invariant::SM => "S_m under mixed homotopy",
            Invariant::UnorderedKey => "unordered key under unordered homotopy",
            Invariant::Z => "z under homotopy",
            Invariant::ZO => "z_o under open homotopy",
        }
    }

    fn policy(self) -> HomotopyPolicy {
        match self {
            Invariant::S | Invariant::Z => HomotopyPolicy::closed(),
            Invariant::SM => HomotopyPolicy::mixed(),
            Invariant::UnorderedKey => HomotopyPolicy::unordered(),
            Invariant::ZO => HomotopyPolicy::open(),
        }
    }

    fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> GaussPhrase {
        let rank = rng.gen_range(1..=6);
        match self {
            Invariant::S => {
                let comps = rng.gen_range(1..=3);
                random_phrase(rng, rank, comps)
            }
            Invariant::SM | Invariant::UnorderedKey => random_phrase(rng, rank, 2),
            Invariant::Z | Invariant::ZO => random_word(rng, rank).to_phrase(),
        }
    }

    fn evaluate(self, phrase: &GaussPhrase) -> String {
        match self {
            Invariant::S => compute_s(phrase).encode(),
            Invariant::SM => compute_s_m(phrase).expect("two components").encode(),
            Invariant::UnorderedKey => unordered_key(phrase).expect("two components").0,
            Invariant::Z | Invariant::ZO => {
                let word = phrase.as_word().expect("one component");
                let sum = if self == Invariant::Z {
                    compute_z(&word)
                } else {
                    compute_z_o(&word)
                };
                sum.odd_keys().iter().cloned().collect::<Vec<_>>().join(",")
            }
        }
    }
}

/// Applies one random legal move to a random phrase and compares the
/// invariant before and after. Insertions are drawn less often than the
/// other moves so that reductions and H3-type moves are well covered.
pub fn invariance_trial<R: Rng + ?Sized>(rng: &mut R, inv: Invariant) -> Check {
    let phrase = inv.sample(rng);
    let policy = inv.policy();
    let all = enumerate_moves(&phrase, &policy, true);
    let (plain, inserts): (Vec<Move>, Vec<Move>) = all.into_iter().partition(|m| !m.is_insertion());
    let pool = if !plain.is_empty() && rng.gen_bool(0.7) {
        plain
    } else {
        inserts
    };
    let mv = pool.choose(rng).expect("insertions always exist").clone();
    let after = apply_move(&phrase, &mv).map_err(|e| e.to_string())?;
    let (before_v, after_v) = (inv.evaluate(&phrase), inv.evaluate(&after));
    if before_v == after_v {
        Ok(format!("{phrase} --{mv}--> {after}"))
    } else {
        Err(format!(
            "{phrase} --{mv}--> {after}: {before_v} became {after_v}"
        ))
    }
}

/// Runs `trials` invariance trials and returns the failures.
pub fn invariance_suite<R: Rng + ?Sized>(
    rng: &mut R,
    inv: Invariant,
    trials: usize,
) -> Vec<String> {
    (0..trials)
        .filter_map(|_| invariance_trial(rng, inv).err())
        .collect()
}
