//! Fixture files with expected outcomes in their headers.
//!
//! Every fixture states what it should do in `# expect:` lines; arguments
//! containing formulas are separated by ` ; `.
//!
//! ```text
//! .prf  # expect: accept ljpp
//!       # expect: reject lj eigenvariable at 0.0.0
//!       # expect: qfs accept SW          (with `# hypothesis: F` lines)
//!       # expect: deskolemize cd.seq [order a_c a_f_c] [edge a_f_c a_c]
//!       # expect: correct ; <end-sequent>
//! .krp  # expect: forces w ; <formula>      # expect: refutes w ; <formula>
//!       # expect: atomic-shifts-hold
//! .fml  # expect: skolemize andrews ; <formula>
//!       # expect: prenex ; <formula> ; CD
//!       # expect: cd5-valid 2 / cd5-invalid 2
//!       # expect: crosscheck 2 2 agree
//! .cd5  # expect: eval ; <formula> ; (1,1,0)
//! ```
//!
//! `.seq` files are deSkolemization targets referenced from `.prf`
//! fixtures and are not verified on their own.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::calculus::{check, check_qfs, hypothesis_kinds, Proof, SideVariableGraph, System};
use crate::cd5::{crosscheck_parallel, eval, valid_bounded, Interpretation};
use crate::kripke::{atomic_shift_failures, forces, Model};
use crate::parser::{
    parse_formula, parse_formula_file, parse_interpretation, parse_model, parse_proof, parse_sequent,
    parse_sequent_file, print_formula, print_sequent,
};
use crate::shift::ShiftKind;
use crate::skolem::{match_up_to_renaming, skolemize, SkolemMode};
use crate::syntax::Formula;
use crate::transform::{correct_ljpp, deskolemize_traced, prenexify_traced};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub directive: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub file: String,
    pub outcomes: Vec<Outcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        !self.outcomes.is_empty() && self.outcomes.iter().all(|o| o.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub fixtures: Vec<FixtureReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.fixtures.iter().all(FixtureReport::passed)
    }

    /// `(file, directive, detail)` of every failed expectation.
    pub fn failures(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for f in &self.fixtures {
            if f.outcomes.is_empty() {
                out.push((f.file.clone(), String::new(), "no `# expect:` header".into()));
            }
            for o in f.outcomes.iter().filter(|o| !o.passed) {
                out.push((f.file.clone(), o.directive.clone(), o.detail.clone()));
            }
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read `{}`: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("no fixtures found in `{}`", .0.display())]
    Empty(PathBuf),
}

const FIXTURE_EXTENSIONS: [&str; 4] = ["prf", "krp", "fml", "cd5"];

/// Verifies every fixture under `dir`, recursively, in path order.
pub fn verify_dir(dir: &Path) -> Result<CorpusReport, CorpusError> {
    let mut files = Vec::new();
    collect(dir, &mut files)?;
    files.sort();
    if files.is_empty() {
        return Err(CorpusError::Empty(dir.to_path_buf()));
    }
    let mut fixtures = Vec::new();
    for path in files {
        let src = fs::read_to_string(&path).map_err(|e| io(&path, e))?;
        let name = path.strip_prefix(dir).unwrap_or(&path).display().to_string();
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        let base = path.parent().unwrap_or(dir);
        fixtures.push(verify_source(&name, ext, &src, base));
    }
    Ok(CorpusReport { fixtures })
}

fn io(path: &Path, e: std::io::Error) -> CorpusError {
    CorpusError::Io { path: path.to_path_buf(), message: e.to_string() }
}

fn collect(dir: &Path, out: &mut Vec<PathBuf>) -> Result<(), CorpusError> {
    let entries = fs::read_dir(dir).map_err(|e| io(dir, e))?;
    for entry in entries {
        let path = entry.map_err(|e| io(dir, e))?.path();
        if path.is_dir() {
            collect(&path, out)?;
        } else if path.extension().and_then(|e| e.to_str()).is_some_and(|e| FIXTURE_EXTENSIONS.contains(&e)) {
            out.push(path);
        }
    }
    Ok(())
}

fn header_values<'a>(src: &'a str, key: &str) -> Vec<&'a str> {
    src.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix(key))
        .filter_map(|l| l.strip_prefix(':'))
        .map(str::trim)
        .collect()
}

/// Verifies one fixture. `base` resolves file names mentioned in directives.
pub fn verify_source(name: &str, ext: &str, src: &str, base: &Path) -> FixtureReport {
    let outcomes = header_values(src, "expect")
        .into_iter()
        .map(|d| {
            let result = match ext {
                "prf" => proof_directive(d, src, base),
                "krp" => model_directive(d, src),
                "fml" => formula_directive(d, src),
                "cd5" => cd5_directive(d, src),
                _ => Err(format!("no directives for `.{ext}` files")),
            };
            match result {
                Ok(detail) => Outcome { directive: d.to_string(), passed: true, detail },
                Err(detail) => Outcome { directive: d.to_string(), passed: false, detail },
            }
        })
        .collect();
    FixtureReport { file: name.to_string(), outcomes }
}

type Check = Result<String, String>;

fn expect_eq(what: &str, expected: impl std::fmt::Display, actual: impl std::fmt::Display) -> Check {
    let (e, a) = (expected.to_string(), actual.to_string());
    if e == a {
        Ok(format!("{what}: {a}"))
    } else {
        Err(format!("{what}: expected {e}, got {a}"))
    }
}

fn split_args(d: &str) -> Vec<&str> {
    d.split(" ; ").map(str::trim).collect()
}

fn formula_arg(s: Option<&&str>) -> Result<Formula, String> {
    let s = s.ok_or("missing formula argument")?;
    parse_formula(s).map_err(|e| format!("bad formula `{s}`: {e}"))
}

fn system(s: Option<&str>) -> Result<System, String> {
    s.ok_or_else(|| "missing system".to_string())?.parse()
}

fn proof_directive(d: &str, src: &str, base: &Path) -> Check {
    let p = parse_proof(src).map_err(|e| format!("proof does not parse: {e}"))?;
    let words: Vec<&str> = d.split_whitespace().collect();
    match words.first().copied() {
        Some("accept") => {
            let r = check(&p, system(words.get(1).copied())?);
            if r.accepted() {
                Ok("accepted".into())
            } else {
                let v = &r.violations[0];
                Err(format!("expected accepted, got rejected: {} at {}: {}", v.condition, v.node, v.message))
            }
        }
        Some("reject") => {
            let r = check(&p, system(words.get(1).copied())?);
            if r.accepted() {
                return Err("expected rejected, got accepted".into());
            }
            let mut rest = &words[2..];
            if let Some(cond) = rest.first().filter(|w| **w != "at") {
                let kinds: Vec<&str> = r.conditions().into_iter().map(|c| c.name()).collect();
                if kinds != [*cond] {
                    return Err(format!("expected exactly the violation {cond}, got [{}]", kinds.join(", ")));
                }
                rest = &rest[1..];
            }
            if let ["at", node] = rest {
                let nodes: Vec<&str> = r.violations.iter().map(|v| v.node.as_str()).collect();
                if !nodes.contains(node) {
                    return Err(format!("expected a violation at {node}, got [{}]", nodes.join(", ")));
                }
            }
            let v = &r.violations[0];
            Ok(format!("rejected: {} at {}", v.condition, v.node))
        }
        Some("qfs") => {
            let hyps: Vec<Formula> = header_values(src, "hypothesis")
                .into_iter()
                .map(|h| parse_formula(h).map_err(|e| format!("bad hypothesis `{h}`: {e}")))
                .collect::<Result<_, _>>()?;
            let r = check_qfs(&p, &hyps);
            let accepted = r.accepted();
            let want_accept = words.get(1) == Some(&"accept");
            if accepted != want_accept {
                let why = r.violations.first().map(|v| format!(": {} at {}", v.condition, v.node)).unwrap_or_default();
                return Err(format!("expected {}, got {}{why}", words.get(1).unwrap_or(&"?"), if accepted { "accepted" } else { "rejected" }));
            }
            if let Some(want) = words.get(2) {
                let kinds: Vec<&str> = hypothesis_kinds(&hyps).into_iter().map(|k| k.map_or("none", ShiftKind::name)).collect();
                expect_eq("hypothesis kinds", want, kinds.join(","))
            } else {
                Ok(format!("{} under QFS", if accepted { "accepted" } else { "rejected" }))
            }
        }
        Some("deskolemize") => {
            let file = words.get(1).ok_or("missing target file")?;
            let path = base.join(file);
            let text = fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let target = parse_sequent_file(&text).map_err(|e| format!("bad target: {e}"))?;
            let t = deskolemize_traced(&p, &target).map_err(|e| e.to_string())?;
            let r = check(&t.proof, System::LJpp);
            if !r.accepted() {
                return Err(format!("output rejected by LJ++: {}", r.violations[0].message));
            }
            if t.proof.skeleton() != p.skeleton() {
                return Err("propositional skeleton changed".into());
            }
            deskolem_extras(&words[2..], &t.variables, &t.proof)?;
            Ok(format!("proof of {} accepted by LJ++", print_sequent(&t.proof.conclusion)))
        }
        Some("correct") => {
            let args = split_args(d);
            let want = parse_sequent(args.get(1).ok_or("missing end-sequent")?).map_err(|e| e.to_string())?;
            let r = correct_ljpp(&p).map_err(|e| e.to_string())?;
            let lj = check(&r.proof, System::LJ);
            if !lj.accepted() {
                return Err(format!("corrected proof rejected by LJ: {}", lj.violations[0].message));
            }
            if !r.proof.conclusion.alpha_eq(&want) {
                return Err(format!("expected end-sequent {}, got {}", print_sequent(&want), print_sequent(&r.proof.conclusion)));
            }
            Ok(format!("LJ proof of {}", print_sequent(&r.proof.conclusion)))
        }
        _ => Err(format!("unknown proof directive `{d}`")),
    }
}

fn deskolem_extras(words: &[&str], vars: &[(String, String)], proof: &Proof) -> Result<(), String> {
    let order: Vec<&str> = vars.iter().map(|(_, v)| v.as_str()).collect();
    let graph = SideVariableGraph::of(proof);
    let mut rest = words;
    while let Some((kw, tail)) = rest.split_first() {
        match *kw {
            "order" => {
                let n = tail.iter().take_while(|w| **w != "edge").count();
                if tail[..n] != order[..] {
                    return Err(format!("expected variable order [{}], got [{}]", tail[..n].join(", "), order.join(", ")));
                }
                rest = &tail[n..];
            }
            "edge" => {
                let [a, b, ..] = tail else {
                    return Err("`edge` needs two variables".into());
                };
                if !graph.edges.iter().any(|(x, y)| x == a && y == b) {
                    return Err(format!("side-variable edge {a} -> {b} missing (edges: {:?})", graph.edges));
                }
                if !graph.is_acyclic() {
                    return Err("side-variable relation is cyclic".into());
                }
                rest = &tail[2..];
            }
            other => return Err(format!("unknown deskolemize option `{other}`")),
        }
    }
    Ok(())
}

fn model_directive(d: &str, src: &str) -> Check {
    let m = parse_model(src).map_err(|e| format!("model does not parse: {e}"))?;
    let args = split_args(d);
    let words: Vec<&str> = args[0].split_whitespace().collect();
    match words.as_slice() {
        [kw @ ("forces" | "refutes"), world] => {
            let f = formula_arg(args.get(1))?;
            let got = force_at(&m, world, &f)?;
            let want = *kw == "forces";
            expect_eq(&format!("{world} ⊩ {}", print_formula(&f)), want, got)
        }
        ["atomic-shifts-hold"] => {
            let (n, failures) = atomic_shift_failures(&m);
            if failures.is_empty() {
                Ok(format!("{n} instances hold at every world"))
            } else {
                Err(format!("failing instances: {}", failures.join("; ")))
            }
        }
        _ => Err(format!("unknown model directive `{d}`")),
    }
}

fn force_at(m: &Model, world: &str, f: &Formula) -> Result<bool, String> {
    let w = m.frame.world(world).ok_or_else(|| format!("unknown world `{world}`"))?;
    forces(m, w, f).map_err(|e| e.to_string())
}

fn skolem_mode(s: &str) -> Result<SkolemMode, String> {
    match s {
        "structural" => Ok(SkolemMode::Structural),
        "andrews" => Ok(SkolemMode::Andrews),
        _ => match s.strip_prefix("parallel:").map(str::parse) {
            Some(Ok(n)) if n >= 1 => Ok(SkolemMode::Parallel(n)),
            _ => Err(format!("unknown Skolemization mode `{s}`")),
        },
    }
}

fn formula_directive(d: &str, src: &str) -> Check {
    let fs = parse_formula_file(src).map_err(|e| format!("formulas do not parse: {e}"))?;
    let args = split_args(d);
    let words: Vec<&str> = args[0].split_whitespace().collect();
    let single = || match fs.as_slice() {
        [f] => Ok(f),
        _ => Err(format!("expected exactly one formula, found {}", fs.len())),
    };
    match words.as_slice() {
        ["skolemize", mode] => {
            let f = single()?;
            let want = formula_arg(args.get(1))?;
            let (sk, sig) = skolemize(f, skolem_mode(mode)?).map_err(|e| e.to_string())?;
            let mut map = BTreeMap::new();
            if !match_up_to_renaming(&sk, &want, &sig.names(), &mut map) {
                return Err(format!("expected {}, got {}", print_formula(&want), print_formula(&sk)));
            }
            let renamed = sk.rename_functions(&map);
            expect_eq("Skolem form (after renaming Skolem symbols)", print_formula(&want), print_formula(&renamed))
        }
        ["prenex"] => {
            let f = single()?;
            let want = formula_arg(args.get(1))?;
            let r = prenexify_traced(f);
            if !r.formula.alpha_eq(&want) {
                return Err(format!("expected {}, got {}", print_formula(&want), print_formula(&r.formula)));
            }
            let shifts: Vec<&str> = r.shifts_used.iter().map(|k| k.name()).collect();
            expect_eq("shifts used", args.get(2).copied().unwrap_or(""), shifts.join(","))
        }
        [kw @ ("cd5-valid" | "cd5-invalid"), bound] => {
            let bound: usize = bound.parse().map_err(|_| format!("bad bound `{bound}`"))?;
            for f in &fs {
                let v = valid_bounded(f, bound).map_err(|e| e.to_string())?;
                if v.valid != (*kw == "cd5-valid") {
                    return Err(format!("{}: expected {kw}, got valid = {}", print_formula(f), v.valid));
                }
            }
            Ok(format!("{} formula(s) {kw} at bound {bound}", fs.len()))
        }
        ["crosscheck", degree, bound, "agree"] => {
            let degree: usize = degree.parse().map_err(|_| format!("bad degree `{degree}`"))?;
            let bound: usize = bound.parse().map_err(|_| format!("bad bound `{bound}`"))?;
            for f in &fs {
                let r = crosscheck_parallel(f, degree, bound).map_err(|e| e.to_string())?;
                if !r.agree {
                    return Err(format!(
                        "{}: original valid = {}, parallel form valid = {}",
                        r.formula, r.original.valid, r.parallel.valid
                    ));
                }
            }
            Ok(format!("{} formula(s) agree", fs.len()))
        }
        _ => Err(format!("unknown formula directive `{d}`")),
    }
}

fn cd5_directive(d: &str, src: &str) -> Check {
    let i: Interpretation = parse_interpretation(src).map_err(|e| format!("interpretation does not parse: {e}"))?;
    let args = split_args(d);
    match args.as_slice() {
        ["eval", f, value] => {
            let f = parse_formula(f).map_err(|e| e.to_string())?;
            let got = eval(&i, &f).map_err(|e| e.to_string())?;
            let want: String = value.chars().filter(|c| !c.is_whitespace()).collect();
            expect_eq(&format!("I({})", print_formula(&f)), want, got)
        }
        _ => Err(format!("unknown CD₅ directive `{d}`")),
    }
}
