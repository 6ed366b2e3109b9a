use std::fmt::Write as _;
use std::path::Path;

use gauss_core::checks::{
    invariance_suite, uninvolved_letter_trial, worked_cases, CaseReport, Invariant,
};
use gauss_core::search::DEFAULT_RANK_SLACK;
use gauss_core::{
    apply_move, apply_move_under, are_homotopic_bounded, canonicalize, compute_s, compute_s_m,
    compute_z, compute_z_o, cover_tower, enumerate_moves, lift_family, parity, reduce,
    refined_height, ClassSumMod2, GaussPhrase, GaussWord, HomotopyPolicy, Move, Parity, SComponent,
    SearchConfig, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::Command;
use crate::report::Report;

/// An input the command could not work with.
#[derive(Debug, Clone)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<Report, InputError>;

fn phrase_arg(s: &str) -> Result<GaussPhrase, InputError> {
    Ok(s.parse::<GaussPhrase>()?)
}

fn word_arg(s: &str) -> Result<GaussWord, InputError> {
    if s.contains('|') {
        return Err(InputError(format!(
            "{s:?} is a phrase; this command takes a single word"
        )));
    }
    Ok(s.parse::<GaussWord>()?)
}

fn policy_arg(s: &str) -> Result<HomotopyPolicy, InputError> {
    Ok(s.parse::<HomotopyPolicy>()?)
}

fn canon(p: &GaussPhrase) -> String {
    canonicalize(p).into_phrase().to_external()
}

fn nested(parts: &[SComponent]) -> Value {
    json!(parts.iter().map(SComponent::to_nested).collect::<Vec<_>>())
}

fn keys(sum: &ClassSumMod2) -> Vec<String> {
    sum.odd_keys().iter().cloned().collect()
}

pub fn execute(cmd: &Command) -> Outcome {
    let name = cmd.name();
    match cmd {
        Command::Validate { input } => validate(input),
        Command::Canon { input } => {
            let p = phrase_arg(input)?;
            let c = canon(&p);
            Ok(Report::new(
                name,
                json!(c),
                json!({ "canonical": c }),
                c.clone(),
            ))
        }
        Command::Moves {
            input,
            policy,
            insertions,
        } => moves(input, policy, *insertions),
        Command::Apply {
            input,
            moves,
            policy,
        } => apply(input, moves, policy.as_deref()),
        Command::S { input } => {
            let p = phrase_arg(input)?;
            let s = compute_s(&p);
            let result = json!({ "phrase": p.to_external(), "s": nested(&s.components), "encoding": s.encode() });
            Ok(Report::new(name, json!(canon(&p)), result, s.to_string()))
        }
        Command::Sm { input } => {
            let p = phrase_arg(input)?;
            let s = compute_s_m(&p)?;
            let parts = [s.first.clone(), s.second.clone()];
            let result =
                json!({ "phrase": p.to_external(), "s_m": nested(&parts), "encoding": s.encode() });
            Ok(Report::new(name, json!(canon(&p)), result, s.to_string()))
        }
        Command::Z { word } => z_report(name, word, false),
        Command::Zo { word } => z_report(name, word, true),
        Command::Parity { word } => {
            let w = word_arg(word)?;
            let t = parity(&w);
            let names =
                |ls: Vec<gauss_core::Letter>| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>();
            let (odd, even) = (names(t.odd_letters()), names(t.even_letters()));
            let mut text = String::new();
            for (l, p) in t.entries() {
                let _ = writeln!(
                    text,
                    "{l} {}",
                    if *p == Parity::Odd { "odd" } else { "even" }
                );
            }
            let result = json!({ "word": w.to_external(), "odd": odd, "even": even });
            Ok(Report::new(
                name,
                json!(w.to_external()),
                result,
                text.trim_end().to_string(),
            ))
        }
        Command::Cover { word, iterate } => {
            let w = word_arg(word)?;
            let tower: Vec<String> = cover_tower(&w).iter().map(GaussWord::to_external).collect();
            let cover = tower.get(1).unwrap_or(&tower[0]).clone();
            let text = if *iterate {
                tower.join("\n")
            } else {
                cover.clone()
            };
            let mut result = json!({ "word": w.to_external(), "cover": cover });
            if *iterate {
                result["tower"] = json!(tower);
            }
            Ok(Report::new(name, json!(w.to_external()), result, text))
        }
        Command::Lift { word, times } => {
            let w = word_arg(word)?;
            let l = lift_family(&w, *times)?.to_external();
            let result = json!({ "word": w.to_external(), "times": times, "lift": l });
            Ok(Report::new(name, json!(w.to_external()), result, l))
        }
        Command::Height {
            word,
            refine,
            policy,
            rank_cap,
            node_cap,
        } => height(word, *refine, policy, *rank_cap, *node_cap),
        Command::Search {
            a,
            b,
            policy,
            rank_cap,
            node_cap,
            certificate,
        } => search(a, b, policy, *rank_cap, *node_cap, certificate.as_deref()),
        Command::Reduce {
            input,
            policy,
            rank_cap,
            node_cap,
        } => {
            let p = phrase_arg(input)?;
            let mut cfg = SearchConfig::new(
                policy_arg(policy)?,
                rank_cap.unwrap_or(p.rank() + DEFAULT_RANK_SLACK),
            );
            if let Some(n) = node_cap {
                cfg = cfg.with_node_cap(*n);
            }
            let r = reduce(&p, &cfg)?;
            let result = json!({
                "policy": policy,
                "rank_cap": cfg.rank_cap,
                "node_cap": cfg.node_cap,
                "reduced": r.to_external(),
                "rank": r.rank(),
            });
            Ok(Report::new(name, json!(canon(&p)), result, r.to_external())
                .note("minimum rank reachable within the caps")
                .nontrivial(r.rank() > 0))
        }
        Command::PaperSelftest {
            seed,
            fillers,
            trials,
        } => Ok(selftest(*seed, *fillers, *trials)),
        Command::Batch { .. } => Err(InputError("batch cannot run inside batch".into())),
    }
}

fn validate(input: &str) -> Outcome {
    let p = phrase_arg(input)?;
    let result = json!({
        "valid": true,
        "components": p.component_count(),
        "rank": p.rank(),
        "length": p.letter_count(),
    });
    let text = format!(
        "valid: {} component(s), rank {}",
        p.component_count(),
        p.rank()
    );
    Ok(Report::new("validate", json!(canon(&p)), result, text))
}

fn moves(input: &str, policy: &str, insertions: bool) -> Outcome {
    let p = phrase_arg(input)?;
    let pol = policy_arg(policy)?;
    let mut list = Vec::new();
    let mut text = String::new();
    for mv in enumerate_moves(&p, &pol, insertions) {
        let after = apply_move(&p, &mv)?.to_external();
        let _ = writeln!(text, "{mv}\t{after}");
        list.push(json!({ "move": mv.to_string(), "kind": mv.kind.name(), "result": after }));
    }
    let result = json!({ "phrase": p.to_external(), "policy": policy, "moves": list });
    Ok(Report::new(
        "moves",
        json!(canon(&p)),
        result,
        text.trim_end().to_string(),
    ))
}

fn apply(input: &str, moves: &[String], policy: Option<&str>) -> Outcome {
    let start = phrase_arg(input)?;
    let pol = policy.map(policy_arg).transpose()?;
    let mut cur = start.clone();
    let mut steps = Vec::new();
    for m in moves {
        let mv: Move = m.parse()?;
        cur = match &pol {
            Some(pol) => apply_move_under(&cur, &mv, pol)?,
            None => apply_move(&cur, &mv)?,
        };
        steps.push(json!({ "move": mv.to_string(), "result": cur.to_external() }));
    }
    let result =
        json!({ "phrase": start.to_external(), "steps": steps, "result": cur.to_external() });
    Ok(Report::new(
        "apply",
        json!(canon(&start)),
        result,
        cur.to_external(),
    ))
}

fn z_report(name: &str, word: &str, open: bool) -> Outcome {
    let w = word_arg(word)?;
    let sum = if open { compute_z_o(&w) } else { compute_z(&w) };
    let label = if open {
        "z_o-image (S_m-keyed)"
    } else {
        "z-image (S-keyed)"
    };
    let field = if open { "z_o_keys" } else { "z_keys" };
    let nonzero = !sum.is_empty();
    let mut text = format!(
        "{label} of {}: {}",
        w.to_external(),
        if nonzero { "nonzero" } else { "zero" }
    );
    for k in sum.odd_keys() {
        let _ = write!(text, "\n  {k}");
    }
    let mut result = json!({ "word": w.to_external(), "nonzero": nonzero });
    result[field] = json!(keys(&sum));
    let mut report = Report::new(name, json!(w.to_external()), result, text)
        .note(label)
        .nontrivial(nonzero);
    if !nonzero {
        report = report.note("a zero image does not prove the word trivial");
    }
    Ok(report)
}

fn height(
    word: &str,
    refine: bool,
    policy: &str,
    rank_cap: Option<usize>,
    node_cap: Option<usize>,
) -> Outcome {
    let w = word_arg(word)?;
    let mut cfg = SearchConfig::new(policy_arg(policy)?, rank_cap.unwrap_or(w.rank() + 1));
    cfg = cfg.with_node_cap(node_cap.unwrap_or(1_000_000));
    let tower = cover_tower(&w);
    let syntactic = tower.len() - 1;
    let refined = if refine {
        refined_height(&w, &cfg)?.refined
    } else {
        None
    };
    let base = &tower[refined.unwrap_or(syntactic)];
    let mut text = format!(
        "syntactic height (upper bound of homotopy height): {syntactic}\nbase: {}",
        base.to_external()
    );
    if let Some(r) = refined {
        let _ = write!(text, "\nrefined height bound: {r}");
    }
    let result = json!({
        "word": w.to_external(),
        "syntactic_height": syntactic,
        "refined_height": refined,
        "base": base.to_external(),
        "tower": tower.iter().map(GaussWord::to_external).collect::<Vec<_>>(),
    });
    Ok(Report::new("height", json!(w.to_external()), result, text)
        .note("syntactic height (upper bound of homotopy height)"))
}

fn search(
    a: &str,
    b: &str,
    policy: &str,
    rank_cap: Option<usize>,
    node_cap: Option<usize>,
    certificate: Option<&Path>,
) -> Outcome {
    let (pa, pb) = (phrase_arg(a)?, phrase_arg(b)?);
    let pol = policy_arg(policy)?;
    let mut cfg = SearchConfig::for_endpoints(pol, &pa, &pb);
    if let Some(r) = rank_cap {
        cfg.rank_cap = r;
    }
    if let Some(n) = node_cap {
        cfg = cfg.with_node_cap(n);
    }
    let r = are_homotopic_bounded(&pa, &pb, &cfg)?;
    let cert: Option<Vec<String>> = r
        .certificate
        .as_ref()
        .map(|ms| ms.iter().map(Move::to_string).collect());
    let mut text = r.verdict.label().to_string();
    if let Some(lines) = &cert {
        for l in lines {
            let _ = write!(text, "\n{l}");
        }
    }
    let mut report = Report::new(
        "search",
        json!([canon(&pa), canon(&pb)]),
        json!({
            "a": pa.to_external(),
            "b": pb.to_external(),
            "policy": policy,
            "rank_cap": cfg.rank_cap,
            "node_cap": cfg.node_cap,
            "verdict": r.verdict.label(),
            "explored": r.explored,
            "certificate": cert,
        }),
        text,
    )
    .nontrivial(r.verdict != Verdict::Equivalent);
    if r.verdict == Verdict::NotEquivalentWithinBounds {
        report = report.note("inequivalence holds only within the rank cap");
    }
    if let Some(path) = certificate {
        match &cert {
            Some(lines) => {
                let mut body = lines.join("\n");
                if !body.is_empty() {
                    body.push('\n');
                }
                std::fs::write(path, body)
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            }
            None => report = report.note("no certificate written"),
        }
    }
    Ok(report)
}

fn selftest(seed: u64, fillers: usize, trials: usize) -> Report {
    let mut cases: Vec<CaseReport> = worked_cases();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for row in 0..10 {
        let failures: Vec<String> = (0..fillers)
            .filter_map(|_| uninvolved_letter_trial(&mut rng, row).err())
            .collect();
        cases.push(CaseReport {
            name: format!("uninvolved letter, case {}", row + 1),
            passed: failures.is_empty(),
            detail: failures
                .first()
                .cloned()
                .unwrap_or_else(|| format!("{fillers} fillers")),
        });
    }
    for inv in Invariant::ALL {
        let failures = invariance_suite(&mut rng, inv, trials);
        cases.push(CaseReport {
            name: inv.name().to_string(),
            passed: failures.is_empty(),
            detail: failures
                .first()
                .cloned()
                .unwrap_or_else(|| format!("{trials} trials")),
        });
    }
    let failed = cases.iter().filter(|c| !c.passed).count();
    let mut text = format!("seed {seed}\n");
    for c in &cases {
        let _ = writeln!(
            text,
            "{}  {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name
        );
        if !c.passed {
            let _ = writeln!(text, "      {}", c.detail);
        }
    }
    let _ = write!(text, "{} passed, {failed} failed", cases.len() - failed);
    let result = json!({
        "seed": seed,
        "passed": cases.len() - failed,
        "failed": failed,
        "cases": cases.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
    });
    let mut report = Report::new("paper-selftest", Value::Null, result, text);
    report.failed = failed > 0;
    report
}
