//! Bounded breadth-first search over the move graph.
//!
//! States are canonical forms, so isomorphic phrases are one node. Every
//! move has an inverse reachable within the same rank cap, so the bounded
//! move graph is symmetric and an exhausted component is a proof of
//! inequivalence at that cap.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moves::{inverse_moves, successors, HomotopyPolicy, Move};
use crate::words::{canonical_text, GaussPhrase, ALPHABET_SIZE};

pub const DEFAULT_NODE_CAP: usize = 5_000_000;

/// Extra rank allowed above the larger endpoint by default.
pub const DEFAULT_RANK_SLACK: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub policy: HomotopyPolicy,
    /// Largest rank of any intermediate phrase.
    pub rank_cap: usize,
    /// Largest number of distinct canonical forms visited.
    pub node_cap: usize,
    pub emit_certificate: bool,
}

impl SearchConfig {
    pub fn new(policy: HomotopyPolicy, rank_cap: usize) -> Self {
        SearchConfig {
            policy,
            rank_cap,
            node_cap: DEFAULT_NODE_CAP,
            emit_certificate: true,
        }
    }

    /// Default caps for a search between `a` and `b`.
    pub fn for_endpoints(policy: HomotopyPolicy, a: &GaussPhrase, b: &GaussPhrase) -> Self {
        Self::new(policy, a.rank().max(b.rank()) + DEFAULT_RANK_SLACK)
    }

    pub fn with_node_cap(mut self, node_cap: usize) -> Self {
        self.node_cap = node_cap;
        self
    }

    fn validate(&self, endpoints: &[&GaussPhrase]) -> Result<()> {
        if self.node_cap == 0 {
            return Err(Error::Config("node cap must be positive".into()));
        }
        if self.rank_cap > ALPHABET_SIZE {
            return Err(Error::Config(format!(
                "rank cap {} exceeds the alphabet size {ALPHABET_SIZE}",
                self.rank_cap
            )));
        }
        if let Some(p) = endpoints.iter().find(|p| p.rank() > self.rank_cap) {
            return Err(Error::Config(format!(
                "rank cap {} is below the rank {} of {p}",
                self.rank_cap,
                p.rank()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    /// The whole bounded component of one endpoint was explored without
    /// meeting the other.
    NotEquivalentWithinBounds,
    ResourceExhausted,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Equivalent => "equivalent",
            Verdict::NotEquivalentWithinBounds => "not-equivalent-within-bounds",
            Verdict::ResourceExhausted => "resource-exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub verdict: Verdict,
    /// Moves taking the source to a phrase isomorphic to the target.
    pub certificate: Option<Vec<Move>>,
    /// Distinct canonical forms visited.
    pub explored: usize,
}

/// Breadth-first tree over canonical forms.
struct Tree {
    states: Vec<GaussPhrase>,
    parent: Vec<Option<(usize, Move)>>,
    index: HashMap<Vec<u8>, usize>,
    frontier: Vec<usize>,
}

impl Tree {
    fn new(root: &GaussPhrase) -> Self {
        let text = canonical_text(root.text());
        let mut index = HashMap::new();
        index.insert(text.clone(), 0);
        Tree {
            states: vec![GaussPhrase::from_text_unchecked(text)],
            parent: vec![None],
            index,
            frontier: vec![0],
        }
    }

    /// Successors of the whole frontier, in frontier order. Computed in
    /// parallel; the order of the result does not depend on scheduling.
    fn expand(&self, policy: &HomotopyPolicy, rank_cap: usize) -> Vec<(usize, Move, Vec<u8>)> {
        let per_node: Vec<Vec<(usize, Move, Vec<u8>)>> = self
            .frontier
            .par_iter()
            .map(|&i| {
                successors(&self.states[i], policy, rank_cap)
                    .into_iter()
                    .map(|(mv, p)| (i, mv, canonical_text(p.text())))
                    .collect()
            })
            .collect();
        per_node.into_iter().flatten().collect()
    }

    fn insert(&mut self, parent: usize, mv: Move, text: Vec<u8>) -> Option<usize> {
        if self.index.contains_key(&text) {
            return None;
        }
        let id = self.states.len();
        self.index.insert(text.clone(), id);
        self.states.push(GaussPhrase::from_text_unchecked(text));
        self.parent.push(Some((parent, mv)));
        Some(id)
    }

    /// `(state before, move)` pairs from the root to `id`.
    fn path(&self, mut id: usize) -> Vec<(usize, Move)> {
        let mut out = Vec::new();
        while let Some((p, mv)) = &self.parent[id] {
            out.push((*p, mv.clone()));
            id = *p;
        }
        out.reverse();
        out
    }

    fn forward_moves(&self, id: usize) -> Vec<Move> {
        self.path(id).into_iter().map(|(_, mv)| mv).collect()
    }

    /// Moves leading from state `id` back to the root.
    fn backward_moves(&self, id: usize) -> Result<Vec<Move>> {
        let mut out = Vec::new();
        for (before, mv) in self.path(id).into_iter().rev() {
            out.extend(inverse_moves(&self.states[before], &mv)?);
        }
        Ok(out)
    }
}

/// Decides `a ~ b` within the caps of `cfg`.
pub fn are_homotopic_bounded(
    a: &GaussPhrase,
    b: &GaussPhrase,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    cfg.validate(&[a, b])?;
    if a.component_count() != b.component_count() {
        return Err(Error::Config(format!(
            "endpoints have {} and {} components",
            a.component_count(),
            b.component_count()
        )));
    }

    let mut trees = [Tree::new(a), Tree::new(b)];
    let finish = |verdict, certificate, trees: &[Tree; 2]| SearchResult {
        verdict,
        certificate,
        explored: trees[0].states.len() + trees[1].states.len() - 1,
    };
    if trees[0].states[0] == trees[1].states[0] {
        let cert = cfg.emit_certificate.then(Vec::new);
        return Ok(finish(Verdict::Equivalent, cert, &trees));
    }

    // Expand from both ends unless one endpoint is the empty phrase.
    let active = match (a.rank() > 0, b.rank() > 0) {
        (true, true) => [true, true],
        (true, false) => [true, false],
        _ => [false, true],
    };

    loop {
        let side = match active {
            [true, true] if trees[1].frontier.len() < trees[0].frontier.len() => 1,
            [true, _] => 0,
            _ => 1,
        };
        if trees[side].frontier.is_empty() {
            return Ok(finish(Verdict::NotEquivalentWithinBounds, None, &trees));
        }
        let found = trees[side].expand(&cfg.policy, cfg.rank_cap);
        let mut next = Vec::new();
        for (parent, mv, text) in found {
            let Some(id) = trees[side].insert(parent, mv, text) else {
                continue;
            };
            let meet = trees[1 - side]
                .index
                .get(trees[side].states[id].text())
                .copied();
            if let Some(other) = meet {
                let cert = if cfg.emit_certificate {
                    let (from_a, from_b) = if side == 0 { (id, other) } else { (other, id) };
                    let mut moves = trees[0].forward_moves(from_a);
                    moves.extend(trees[1].backward_moves(from_b)?);
                    Some(moves)
                } else {
                    None
                };
                return Ok(finish(Verdict::Equivalent, cert, &trees));
            }
            next.push(id);
            if trees[0].states.len() + trees[1].states.len() > cfg.node_cap {
                return Ok(finish(Verdict::ResourceExhausted, None, &trees));
            }
        }
        trees[side].frontier = next;
    }
}

/// Result of exploring the bounded component of a phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exploration {
    /// Canonical forms in discovery order; the first is the start.
    pub states: Vec<GaussPhrase>,
    /// False when the node cap stopped the search early.
    pub complete: bool,
}

/// Visits every canonical form reachable from `phrase` within the caps.
/// With `stop_at_rank_zero`, stops as soon as a rank-0 phrase appears.
fn explore_inner(
    phrase: &GaussPhrase,
    cfg: &SearchConfig,
    stop_at_rank_zero: bool,
) -> Result<Exploration> {
    cfg.validate(&[phrase])?;
    let mut tree = Tree::new(phrase);
    while !tree.frontier.is_empty() {
        if stop_at_rank_zero && tree.states.iter().any(|s| s.rank() == 0) {
            break;
        }
        let mut next = Vec::new();
        for (parent, mv, text) in tree.expand(&cfg.policy, cfg.rank_cap) {
            if let Some(id) = tree.insert(parent, mv, text) {
                next.push(id);
                if tree.states.len() >= cfg.node_cap {
                    return Ok(Exploration {
                        states: tree.states,
                        complete: false,
                    });
                }
            }
        }
        tree.frontier = next;
    }
    let complete = tree.frontier.is_empty();
    Ok(Exploration {
        states: tree.states,
        complete,
    })
}

pub fn explore(phrase: &GaussPhrase, cfg: &SearchConfig) -> Result<Exploration> {
    explore_inner(phrase, cfg, false)
}

/// Minimum-rank canonical form reachable within the caps; ties go to the
/// smallest text.
pub fn reduce(phrase: &GaussPhrase, cfg: &SearchConfig) -> Result<GaussPhrase> {
    let found = explore_inner(phrase, cfg, true)?;
    Ok(found
        .states
        .into_iter()
        .min_by(|x, y| (x.rank(), x.text()).cmp(&(y.rank(), y.text())))
        .expect("the start state is always present"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::replay;
    use crate::words::{is_isomorphic, parse_phrase};

    fn p(s: &str) -> GaussPhrase {
        parse_phrase(s).unwrap()
    }

    fn check(a: &str, b: &str, cfg: &SearchConfig) -> SearchResult {
        let res = are_homotopic_bounded(&p(a), &p(b), cfg).unwrap();
        if let Some(cert) = &res.certificate {
            let end = replay(&p(a), cert, &cfg.policy).unwrap();
            assert!(is_isomorphic(&end, &p(b)), "{a} -> {b}: {end}");
        }
        res
    }

    #[test]
    fn trivial_under_homotopy() {
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
        let res = check("ABACDCBD", "-", &cfg);
        assert_eq!(res.verdict, Verdict::Equivalent);
        assert!(res.certificate.unwrap().len() <= 5);
    }

    #[test]
    fn nontrivial_under_open_homotopy() {
        let cfg = SearchConfig::new(HomotopyPolicy::open(), 5);
        assert_eq!(
            check("ABACDCBD", "-", &cfg).verdict,
            Verdict::NotEquivalentWithinBounds
        );
    }

    #[test]
    fn lift_of_abab_is_homotopic_to_abab() {
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
        assert_eq!(check("XAXYBYAB", "ABAB", &cfg).verdict, Verdict::Equivalent);
    }

    #[test]
    fn both_directions_and_empty_source() {
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
        assert_eq!(check("-", "ABACDCBD", &cfg).verdict, Verdict::Equivalent);
        assert_eq!(check("ABAB", "ABAB", &cfg).certificate, Some(vec![]));
    }

    #[test]
    fn reductions() {
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
        assert_eq!(reduce(&p("ABACDCBD"), &cfg).unwrap(), p("-"));
        assert_eq!(
            reduce(&p("AA"), &SearchConfig::new(HomotopyPolicy::closed(), 1)).unwrap(),
            p("-")
        );
    }

    #[test]
    fn config_errors() {
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 1);
        assert!(matches!(
            are_homotopic_bounded(&p("ABAB"), &p("-"), &cfg),
            Err(Error::Config(_))
        ));
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4).with_node_cap(0);
        assert!(are_homotopic_bounded(&p("AA"), &p("-"), &cfg).is_err());
        let cfg = SearchConfig::new(HomotopyPolicy::closed(), 4);
        assert!(are_homotopic_bounded(&p("AA"), &p("|"), &cfg).is_err());
    }

    #[test]
    fn node_cap_exhaustion() {
        let cfg = SearchConfig::new(HomotopyPolicy::open(), 5).with_node_cap(10);
        let res = check("ABACDCBD", "-", &cfg);
        assert_eq!(res.verdict, Verdict::ResourceExhausted);
    }
}
