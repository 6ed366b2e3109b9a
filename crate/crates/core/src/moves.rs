//! Enumeration and application of homotopy moves on Gauss phrases.
//!
//! Every site is recorded as text positions (separators included), so a
//! move found on one phrase applies unchanged to any isomorphic phrase.
//! Pair moves store the position of the first letter of each matched pair;
//! insertions store insertion slots, where slot `s` means "before text
//! position `s`".

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{canonical_letter, canonicalize, GaussPhrase, ALPHABET_SIZE, SEPARATOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Shift,
    H1,
    H2,
    H3,
    H2a,
    H3a,
    H3b,
    H3c,
    Swap,
}

impl MoveKind {
    pub const ALL: [MoveKind; 9] = [
        MoveKind::Shift,
        MoveKind::H1,
        MoveKind::H2,
        MoveKind::H3,
        MoveKind::H2a,
        MoveKind::H3a,
        MoveKind::H3b,
        MoveKind::H3c,
        MoveKind::Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Shift => "SHIFT",
            MoveKind::H1 => "H1",
            MoveKind::H2 => "H2",
            MoveKind::H3 => "H3",
            MoveKind::H2a => "H2a",
            MoveKind::H3a => "H3a",
            MoveKind::H3b => "H3b",
            MoveKind::H3c => "H3c",
            MoveKind::Swap => "SWAP",
        }
    }

    /// Moves derived from H1, H2 and H3 rather than taken as generators.
    pub fn is_derived(self) -> bool {
        matches!(
            self,
            MoveKind::H2a | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c
        )
    }

    pub fn is_h3_family(self) -> bool {
        matches!(
            self,
            MoveKind::H3 | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c
        )
    }

    fn is_cancelling(self) -> bool {
        matches!(self, MoveKind::H1 | MoveKind::H2 | MoveKind::H2a)
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::MoveSyntax(s.to_string()))
    }
}

/// `Forward` reads the move table left to right. For H1, H2 and H2a that is
/// the reducing direction; `Backward` inserts fresh letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One instantiation of a move on a specific phrase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: MoveKind,
    pub direction: Direction,
    /// Component of the first site (Shift: the rotated component; Swap:
    /// the left one of the two exchanged components).
    pub component: usize,
    /// Zero-based text positions or insertion slots.
    pub positions: Vec<usize>,
}

impl Move {
    pub fn shift(component: usize) -> Self {
        Move {
            kind: MoveKind::Shift,
            direction: Direction::Forward,
            component,
            positions: Vec::new(),
        }
    }

    pub fn swap(component: usize) -> Self {
        Move {
            kind: MoveKind::Swap,
            direction: Direction::Forward,
            component,
            positions: Vec::new(),
        }
    }

    /// A pattern move at the given text positions; the component is read
    /// off `phrase`.
    pub fn at(
        phrase: &GaussPhrase,
        kind: MoveKind,
        direction: Direction,
        positions: Vec<usize>,
    ) -> Self {
        let component = positions
            .first()
            .map_or(0, |&p| component_of_slot(phrase.text(), p));
        Move {
            kind,
            direction,
            component,
            positions,
        }
    }

    pub fn is_insertion(&self) -> bool {
        self.kind.is_cancelling() && self.direction == Direction::Backward
    }

    pub fn is_reduction(&self) -> bool {
        self.kind.is_cancelling() && self.direction == Direction::Forward
    }

    /// Change in rank caused by the move.
    pub fn rank_delta(&self) -> isize {
        let size = match self.kind {
            MoveKind::H1 => 1,
            MoveKind::H2 | MoveKind::H2a => 2,
            _ => 0,
        };
        match self.direction {
            Direction::Forward => -size,
            Direction::Backward => size,
        }
    }
}

/// Serialized as `KIND@component:positions` with one-based component
/// numbers and one-based text positions; a trailing `'` on the kind marks
/// the right-to-left direction. Shift and swap are `SHIFT@c` and
/// `SWAP@c-(c+1)`.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Shift => write!(f, "SHIFT@{}", self.component + 1),
            MoveKind::Swap => write!(f, "SWAP@{}-{}", self.component + 1, self.component + 2),
            kind => {
                let prime = if self.direction == Direction::Backward {
                    "'"
                } else {
                    ""
                };
                write!(f, "{}{}@{}:", kind.name(), prime, self.component + 1)?;
                for (i, p) in self.positions.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", p + 1)?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MoveSyntax(s.to_string());
        let one_based = |t: &str| -> Result<usize> {
            match t.trim().parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n - 1),
                _ => Err(bad()),
            }
        };
        let (head, site) = s.trim().split_once('@').ok_or_else(bad)?;
        let (name, direction) = match head.strip_suffix('\'') {
            Some(name) => (name, Direction::Backward),
            None => (head, Direction::Forward),
        };
        let kind: MoveKind = name.parse().map_err(|_| bad())?;
        match kind {
            MoveKind::Shift => {
                if direction == Direction::Backward {
                    return Err(bad());
                }
                Ok(Move::shift(one_based(site)?))
            }
            MoveKind::Swap => {
                let (a, b) = site.split_once('-').ok_or_else(bad)?;
                let a = one_based(a)?;
                if direction == Direction::Backward || one_based(b)? != a + 1 {
                    return Err(bad());
                }
                Ok(Move::swap(a))
            }
            _ => {
                let (component, list) = site.split_once(':').ok_or_else(bad)?;
                let positions = list.split(',').map(one_based).collect::<Result<Vec<_>>>()?;
                if positions.len() != expected_sites(kind) {
                    return Err(bad());
                }
                Ok(Move {
                    kind,
                    direction,
                    component: one_based(component)?,
                    positions,
                })
            }
        }
    }
}

fn expected_sites(kind: MoveKind) -> usize {
    match kind {
        MoveKind::Shift | MoveKind::Swap => 0,
        MoveKind::H1 => 1,
        MoveKind::H2 | MoveKind::H2a => 2,
        _ => 3,
    }
}

/// Which components are closed (admit the shift move).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Closure {
    All,
    None,
    /// Zero-based indices of the closed components.
    Only(Vec<usize>),
}

/// Selects the homotopy relation: closed components, permutation of
/// components, and whether the derived moves are generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomotopyPolicy {
    pub closed: Closure,
    pub allow_permutation: bool,
    pub derived_moves: bool,
}

impl HomotopyPolicy {
    /// Homotopy: every component closed.
    pub fn closed() -> Self {
        HomotopyPolicy {
            closed: Closure::All,
            allow_permutation: false,
            derived_moves: true,
        }
    }

    /// Open homotopy: no shift moves.
    pub fn open() -> Self {
        HomotopyPolicy {
            closed: Closure::None,
            ..Self::closed()
        }
    }

    /// Mixed homotopy: first component closed, the rest open.
    pub fn mixed() -> Self {
        HomotopyPolicy {
            closed: Closure::Only(vec![0]),
            ..Self::closed()
        }
    }

    /// Unordered homotopy: all components closed and permutable.
    pub fn unordered() -> Self {
        HomotopyPolicy {
            allow_permutation: true,
            ..Self::closed()
        }
    }

    pub fn with_derived_moves(mut self, on: bool) -> Self {
        self.derived_moves = on;
        self
    }

    pub fn is_closed(&self, component: usize) -> bool {
        match &self.closed {
            Closure::All => true,
            Closure::None => false,
            Closure::Only(set) => set.contains(&component),
        }
    }

    /// Whether the policy admits this kind of move at all.
    pub fn permits(&self, mv: &Move) -> bool {
        match mv.kind {
            MoveKind::Shift => self.is_closed(mv.component),
            MoveKind::Swap => self.allow_permutation,
            k => self.derived_moves || !k.is_derived(),
        }
    }
}

impl FromStr for HomotopyPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Self::closed()),
            "open" => Ok(Self::open()),
            "mixed" => Ok(Self::mixed()),
            "unordered" => Ok(Self::unordered()),
            _ => Err(Error::Config(format!("unknown policy {s:?}"))),
        }
    }
}

fn is_letter(b: u8) -> bool {
    b != SEPARATOR
}

fn is_pair(text: &[u8], p: usize) -> bool {
    p < text.len().saturating_sub(1) && is_letter(text[p]) && is_letter(text[p + 1])
}

/// Component holding text position or insertion slot `s`.
fn component_of_slot(text: &[u8], s: usize) -> usize {
    text[..s.min(text.len())]
        .iter()
        .filter(|&&b| b == SEPARATOR)
        .count()
}

/// Determines which H3-family move, and in which direction, matches three
/// adjacent pairs starting at `p1 < p2 < p3`.
fn classify_triangle(text: &[u8], [p1, p2, p3]: [usize; 3]) -> Option<(MoveKind, Direction)> {
    if !(p2 >= p1 + 2
        && p3 >= p2 + 2
        && is_pair(text, p1)
        && is_pair(text, p2)
        && is_pair(text, p3))
    {
        return None;
    }
    let pair = |p: usize| (text[p], text[p + 1]);
    let (a, b) = pair(p1);
    let (c1, c2) = pair(p2);
    let (d1, d2) = pair(p3);
    if a == b || c1 == c2 || d1 == d2 {
        return None;
    }
    let shares_a = c1 == a || c2 == a;
    let shares_b = c1 == b || c2 == b;
    if shares_a == shares_b {
        return None;
    }
    // First pair reads AB on the left-hand side and BA on the right.
    let (la, lb, direction) = if shares_a {
        (a, b, Direction::Forward)
    } else {
        (b, a, Direction::Backward)
    };
    let c = if c1 == la { c2 } else { c1 };
    if c == a || c == b {
        return None;
    }
    let ac_first = (c1, c2) == (la, c);
    let bc_first = if (d1, d2) == (lb, c) {
        true
    } else if (d1, d2) == (c, lb) {
        false
    } else {
        return None;
    };
    let kind = match (direction, ac_first, bc_first) {
        (Direction::Forward, true, true) => MoveKind::H3,
        (Direction::Forward, false, true) => MoveKind::H3a,
        (Direction::Forward, false, false) => MoveKind::H3b,
        (Direction::Forward, true, false) => MoveKind::H3c,
        (Direction::Backward, false, false) => MoveKind::H3,
        (Direction::Backward, true, false) => MoveKind::H3a,
        (Direction::Backward, true, true) => MoveKind::H3b,
        (Direction::Backward, false, true) => MoveKind::H3c,
    };
    Some((kind, direction))
}

/// Classifies two adjacent pairs `p1 < p2` over the same two letters.
fn classify_cancelling_pairs(text: &[u8], p1: usize, p2: usize) -> Option<MoveKind> {
    if p2 < p1 + 2 || !is_pair(text, p1) || !is_pair(text, p2) {
        return None;
    }
    let (a, b) = (text[p1], text[p1 + 1]);
    if a == b {
        return None;
    }
    match (text[p2], text[p2 + 1]) {
        (x, y) if (x, y) == (b, a) => Some(MoveKind::H2),
        (x, y) if (x, y) == (a, b) => Some(MoveKind::H2a),
        _ => None,
    }
}

/// The `count` smallest canonical letters not used in `text`.
fn fresh_letters(text: &[u8], count: usize) -> Result<Vec<u8>> {
    let mut used = [false; 128];
    for &b in text {
        used[b as usize] = true;
    }
    let fresh: Vec<u8> = (0..ALPHABET_SIZE)
        .filter_map(canonical_letter)
        .map(|l| l.byte())
        .filter(|&b| !used[b as usize])
        .take(count)
        .collect();
    if fresh.len() < count {
        return Err(Error::Capacity(format!(
            "no {count} unused letters left in the {ALPHABET_SIZE}-letter alphabet"
        )));
    }
    Ok(fresh)
}

/// Lists every legal move on `phrase` under `policy`. Insertions are
/// included only when `include_insertions` is set.
pub fn enumerate_moves(
    phrase: &GaussPhrase,
    policy: &HomotopyPolicy,
    include_insertions: bool,
) -> Vec<Move> {
    let text = phrase.text();
    let n = text.len();
    let partners = phrase.partners();
    let mut out = Vec::new();

    for (k, (start, end)) in phrase.component_ranges().into_iter().enumerate() {
        if end > start && policy.is_closed(k) {
            out.push(Move::shift(k));
        }
    }

    for p in 0..n.saturating_sub(1) {
        if is_pair(text, p) && text[p] == text[p + 1] {
            out.push(Move::at(phrase, MoveKind::H1, Direction::Forward, vec![p]));
        }
    }

    for p in 0..n.saturating_sub(1) {
        if !is_pair(text, p) || text[p] == text[p + 1] {
            continue;
        }
        let (pa, pb) = (partners[p], partners[p + 1]);
        if pa.abs_diff(pb) != 1 || pa.min(pb) < p + 2 {
            continue;
        }
        if let Some(kind) = classify_cancelling_pairs(text, p, pa.min(pb)) {
            if policy.derived_moves || !kind.is_derived() {
                out.push(Move::at(
                    phrase,
                    kind,
                    Direction::Forward,
                    vec![p, pa.min(pb)],
                ));
            }
        }
    }

    let mut triangles = Vec::new();
    for p1 in 0..n.saturating_sub(1) {
        if !is_pair(text, p1) || text[p1] == text[p1 + 1] {
            continue;
        }
        let (pa, pb) = (partners[p1], partners[p1 + 1]);
        for qa in [pa.wrapping_sub(1), pa] {
            for qb in [pb.wrapping_sub(1), pb] {
                if qa < p1 + 2 || qb < p1 + 2 || qa.abs_diff(qb) < 2 {
                    continue;
                }
                let (p2, p3) = (qa.min(qb), qa.max(qb));
                if let Some(found) = classify_triangle(text, [p1, p2, p3]) {
                    triangles.push(([p1, p2, p3], found));
                }
            }
        }
    }
    triangles.sort();
    triangles.dedup();
    for (sites, (kind, direction)) in triangles {
        if policy.derived_moves || !kind.is_derived() {
            out.push(Move::at(phrase, kind, direction, sites.to_vec()));
        }
    }

    if policy.allow_permutation {
        for k in 0..phrase.component_count().saturating_sub(1) {
            out.push(Move::swap(k));
        }
    }

    if include_insertions {
        for s in 0..=n {
            out.push(Move::at(phrase, MoveKind::H1, Direction::Backward, vec![s]));
        }
        let mut kinds = vec![MoveKind::H2];
        if policy.derived_moves {
            kinds.push(MoveKind::H2a);
        }
        for kind in kinds {
            for s1 in 0..=n {
                for s2 in s1..=n {
                    out.push(Move::at(phrase, kind, Direction::Backward, vec![s1, s2]));
                }
            }
        }
    }

    out
}

/// Applies `mv` to `phrase`, re-checking that its pattern matches.
pub fn apply_move(phrase: &GaussPhrase, mv: &Move) -> Result<GaussPhrase> {
    let text = phrase.text();
    let n = text.len();
    let illegal = |reason: &str| Error::illegal(mv, reason);

    if mv.positions.len() != expected_sites(mv.kind) {
        return Err(illegal("wrong number of sites"));
    }
    if let Some(&p) = mv.positions.first() {
        if p <= n && component_of_slot(text, p) != mv.component {
            return Err(illegal("component does not match the site"));
        }
    }

    let out = match (mv.kind, mv.direction) {
        (MoveKind::Shift, _) => {
            let ranges = phrase.component_ranges();
            let &(start, end) = ranges
                .get(mv.component)
                .ok_or_else(|| illegal("no such component"))?;
            if start == end {
                return Err(illegal("cannot shift an empty component"));
            }
            let mut t = text.to_vec();
            t[start..end].rotate_left(1);
            t
        }
        (MoveKind::Swap, _) => {
            let k = mv.component;
            let mut parts: Vec<&[u8]> = phrase.components().collect();
            if k + 1 >= parts.len() {
                return Err(illegal("no such pair of adjacent components"));
            }
            parts.swap(k, k + 1);
            parts.join(&SEPARATOR)
        }
        (MoveKind::H1, Direction::Forward) => {
            let p = mv.positions[0];
            if !(is_pair(text, p) && text[p] == text[p + 1]) {
                return Err(illegal("no subword AA at the site"));
            }
            [&text[..p], &text[p + 2..]].concat()
        }
        (MoveKind::H2 | MoveKind::H2a, Direction::Forward) => {
            let (p, q) = (mv.positions[0], mv.positions[1]);
            if classify_cancelling_pairs(text, p, q) != Some(mv.kind) {
                return Err(illegal("pattern does not match"));
            }
            [&text[..p], &text[p + 2..q], &text[q + 2..]].concat()
        }
        (MoveKind::H1, Direction::Backward) => {
            let s = mv.positions[0];
            if s > n {
                return Err(illegal("slot out of range"));
            }
            let f = fresh_letters(text, 1)?;
            [&text[..s], &[f[0], f[0]][..], &text[s..]].concat()
        }
        (MoveKind::H2 | MoveKind::H2a, Direction::Backward) => {
            let (s1, s2) = (mv.positions[0], mv.positions[1]);
            if s1 > s2 || s2 > n {
                return Err(illegal("slots out of order or out of range"));
            }
            let f = fresh_letters(text, 2)?;
            let (a, b) = (f[0], f[1]);
            let second = if mv.kind == MoveKind::H2 {
                [b, a]
            } else {
                [a, b]
            };
            [
                &text[..s1],
                &[a, b][..],
                &text[s1..s2],
                &second[..],
                &text[s2..],
            ]
            .concat()
        }
        (kind, direction) => {
            let sites = [mv.positions[0], mv.positions[1], mv.positions[2]];
            if classify_triangle(text, sites) != Some((kind, direction)) {
                return Err(illegal("pattern does not match"));
            }
            let mut t = text.to_vec();
            for p in sites {
                t.swap(p, p + 1);
            }
            t
        }
    };
    Ok(GaussPhrase::from_text_unchecked(out))
}

/// Applies `mv` only if `policy` admits it.
pub fn apply_move_under(
    phrase: &GaussPhrase,
    mv: &Move,
    policy: &HomotopyPolicy,
) -> Result<GaussPhrase> {
    if !policy.permits(mv) {
        return Err(Error::illegal(mv, "not permitted by the homotopy policy"));
    }
    apply_move(phrase, mv)
}

/// Moves that undo `mv` when applied, in order, to `apply_move(before, mv)`
/// (up to isomorphism). A shift is undone by rotating the rest of the way
/// around its component.
pub fn inverse_moves(before: &GaussPhrase, mv: &Move) -> Result<Vec<Move>> {
    let after = apply_move(before, mv)?;
    let inv = match (mv.kind, mv.direction) {
        (MoveKind::Shift, _) => {
            let len = before.component(mv.component).map_or(0, <[u8]>::len);
            vec![Move::shift(mv.component); len - 1]
        }
        (MoveKind::Swap, _) => vec![mv.clone()],
        (MoveKind::H1, d) => vec![Move::at(
            &after,
            MoveKind::H1,
            d.flip(),
            mv.positions.clone(),
        )],
        (kind @ (MoveKind::H2 | MoveKind::H2a), Direction::Forward) => {
            let (p, q) = (mv.positions[0], mv.positions[1]);
            vec![Move::at(&after, kind, Direction::Backward, vec![p, q - 2])]
        }
        (kind @ (MoveKind::H2 | MoveKind::H2a), Direction::Backward) => {
            let (s1, s2) = (mv.positions[0], mv.positions[1]);
            vec![Move::at(&after, kind, Direction::Forward, vec![s1, s2 + 2])]
        }
        (kind, d) => vec![Move::at(&after, kind, d.flip(), mv.positions.clone())],
    };
    Ok(inv)
}

/// Every move together with its result, skipping insertions that would
/// exceed `rank_cap`.
pub fn successors(
    phrase: &GaussPhrase,
    policy: &HomotopyPolicy,
    rank_cap: usize,
) -> Vec<(Move, GaussPhrase)> {
    let rank = phrase.rank() as isize;
    let insert = rank < rank_cap as isize;
    enumerate_moves(phrase, policy, insert)
        .into_iter()
        .filter(|m| rank + m.rank_delta() <= rank_cap as isize)
        .filter_map(|m| apply_move(phrase, &m).ok().map(|p| (m, p)))
        .collect()
}

/// Canonical forms of all phrases one legal move away, deduplicated and
/// sorted.
pub fn neighbors(
    phrase: &GaussPhrase,
    policy: &HomotopyPolicy,
    rank_cap: usize,
) -> Vec<GaussPhrase> {
    let mut out: Vec<GaussPhrase> = successors(phrase, policy, rank_cap)
        .into_iter()
        .map(|(_, p)| canonicalize(&p).into_phrase())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Applies a sequence of moves, each checked against `policy`.
pub fn replay(
    source: &GaussPhrase,
    moves: &[Move],
    policy: &HomotopyPolicy,
) -> Result<GaussPhrase> {
    moves
        .iter()
        .try_fold(source.clone(), |p, mv| apply_move_under(&p, mv, policy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_isomorphic, parse_phrase};

    fn p(s: &str) -> GaussPhrase {
        parse_phrase(s).unwrap()
    }

    fn mv(s: &str) -> Move {
        s.parse().unwrap()
    }

    #[test]
    fn separator_blocks_h1() {
        let phrase = p("AB|BAC|C");
        let moves = enumerate_moves(&phrase, &HomotopyPolicy::closed(), false);
        let h2: Vec<_> = moves.iter().filter(|m| m.kind == MoveKind::H2).collect();
        assert_eq!(h2.len(), 1);
        assert_eq!(apply_move(&phrase, h2[0]).unwrap().to_string(), "|C|C");
        assert!(moves.iter().all(|m| m.kind != MoveKind::H1));
    }

    #[test]
    fn single_letter_moves() {
        let moves = enumerate_moves(&p("AA"), &HomotopyPolicy::closed(), false);
        assert_eq!(moves, vec![Move::shift(0), mv("H1@1:1")]);
        assert_eq!(apply_move(&p("AA"), &moves[0]).unwrap(), p("AA"));
        assert_eq!(apply_move(&p("AA"), &moves[1]).unwrap(), p("-"));
        assert!(enumerate_moves(&p("-"), &HomotopyPolicy::closed(), false).is_empty());
    }

    #[test]
    fn worked_reduction_sequence() {
        let w = p("ABACDCBD");
        let w = apply_move(&w, &mv("H3c@1:1,3,6")).unwrap();
        assert_eq!(w.to_string(), "BACADBCD");
        let w = apply_move(&w, &mv("SHIFT@1")).unwrap();
        assert_eq!(w.to_string(), "ACADBCDB");
        let w = apply_move(&w, &mv("H2a@1:4,7")).unwrap();
        assert_eq!(w.to_string(), "ACAC");
        let w = apply_move(&w, &mv("H2a@1:1,3")).unwrap();
        assert_eq!(w.to_string(), "");
    }

    #[test]
    fn lift_of_abab_reduces() {
        let w = p("XAXYBYAB");
        let w = apply_move(&w, &mv("H3c@1:1,3,6")).unwrap();
        assert_eq!(w.to_string(), "AXYXBAYB");
        let w = apply_move(&w, &mv("SHIFT@1")).unwrap();
        assert_eq!(w.to_string(), "XYXBAYBA");
        let w = apply_move(&w, &mv("H2a@1:4,7")).unwrap();
        assert_eq!(w.to_string(), "XYXY");
        assert!(is_isomorphic(&w, &p("ABAB")));
    }

    #[test]
    fn swap_components() {
        assert_eq!(
            apply_move(&p("AB|BA"), &mv("SWAP@1-2"))
                .unwrap()
                .to_string(),
            "BA|AB"
        );
        assert!(apply_move(&p("AA"), &mv("SWAP@1-2")).is_err());
        let moves = enumerate_moves(&p("A|A|"), &HomotopyPolicy::unordered(), false);
        assert_eq!(moves.iter().filter(|m| m.kind == MoveKind::Swap).count(), 2);
    }

    #[test]
    fn illegal_moves_rejected() {
        assert!(apply_move(&p("ABAB"), &mv("H1@1:1")).is_err());
        assert!(apply_move(&p("ABBA"), &mv("H2a@1:1,3")).is_err());
        assert!(apply_move(&p("ABACDCBD"), &mv("H3@1:1,3,6")).is_err());
        assert!(apply_move(&p("ABACDCBD"), &mv("H3c@2:1,3,6")).is_err());
        assert!(apply_move(&p("-"), &mv("SHIFT@1")).is_err());
        assert!(apply_move(&p("AB|AB"), &mv("H2a@1:1,4")).is_ok());
        assert!(apply_move_under(&p("AA"), &mv("SHIFT@1"), &HomotopyPolicy::open()).is_err());
    }

    #[test]
    fn insertions_use_smallest_fresh_letters() {
        let q = apply_move(&p("BB"), &mv("H1'@1:2")).unwrap();
        assert_eq!(q.to_string(), "BAAB");
        let q = apply_move(&p("A|A"), &mv("H2'@2:3,4")).unwrap();
        assert_eq!(q.to_string(), "A|BCACB");
        let q = apply_move(&p("A|A"), &mv("H2a'@1:1,2")).unwrap();
        assert_eq!(q.to_string(), "BCABC|A");
    }

    #[test]
    fn neighbor_sets() {
        let closed = HomotopyPolicy::closed();
        assert_eq!(neighbors(&p("AA"), &closed, 1), vec![p("-"), p("AA")]);
        assert_eq!(neighbors(&p("-"), &closed, 1), vec![p("AA")]);
        // H2a takes ABAB straight to the empty word.
        assert!(neighbors(&p("ABAB"), &closed, 2).contains(&p("-")));
        assert!(
            !neighbors(&p("ABAB"), &closed.clone().with_derived_moves(false), 2).contains(&p("-"))
        );
    }

    #[test]
    fn serialization() {
        for s in [
            "H3c@1:2,4,6",
            "SHIFT@2",
            "SWAP@1-2",
            "H1'@3:7",
            "H2a@1:1,3",
            "H3'@1:1,4,7",
        ] {
            assert_eq!(mv(s).to_string(), s);
        }
        for s in [
            "H4@1:1",
            "SWAP@1-3",
            "H1@1:1,2",
            "SHIFT'@1",
            "H3@0:1,2,3",
            "H1",
            "H3'@1:1,2",
        ] {
            assert!(s.parse::<Move>().is_err(), "{s}");
        }
    }

    #[test]
    fn h3_family_covers_all_orientations() {
        // Three pairs over A,B,C in every orientation are exactly one move.
        let orient = |x: u8, y: u8, flip: bool| if flip { [y, x] } else { [x, y] };
        let mut seen = std::collections::BTreeSet::new();
        for bits in 0..4u8 {
            for second_shares_first in [true, false] {
                let first = *b"AB";
                let (s2, s3) = if second_shares_first {
                    (b'A', b'B')
                } else {
                    (b'B', b'A')
                };
                let mut text = first.to_vec();
                text.extend(orient(s2, b'C', bits & 1 != 0));
                text.extend(orient(s3, b'C', bits & 2 != 0));
                let (kind, dir) = classify_triangle(&text, [0, 2, 4]).unwrap();
                seen.insert((kind, dir, text.clone()));
            }
        }
        let kinds: std::collections::BTreeSet<_> = seen.iter().map(|(k, d, _)| (*k, *d)).collect();
        assert_eq!(kinds.len(), 8);
    }

    #[test]
    fn inverse_round_trip() {
        let phrase = p("ABCA|CB");
        for m in enumerate_moves(&phrase, &HomotopyPolicy::unordered(), true) {
            let after = apply_move(&phrase, &m).unwrap();
            let back = replay(
                &after,
                &inverse_moves(&phrase, &m).unwrap(),
                &HomotopyPolicy::unordered(),
            )
            .unwrap();
            assert!(is_isomorphic(&back, &phrase), "{m}");
        }
    }
}
