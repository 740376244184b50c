//! Turning an LJ++ proof into an LJ proof from quantifier-shift hypotheses.
//!
//! A strong inference whose characteristic variable occurs in its conclusion
//! (or in a hypothesis collected above it) is replaced by an `→L` against
//! `α(a) = A(a) → ∀xA(x)` or `β(b) = ∃xB(x) → B(b)`:
//!
//! ```text
//!   Γ ⇒ A(a)   ∀xA(x) ⇒ ∀xA(x)          ∃xB(x) ⇒ ∃xB(x)   B(b), Γ ⇒ Δ
//!   --------------------------- →L      ------------------------------ →L
//!      α(a), Γ ⇒ ∀xA(x)                     β(b), ∃xB(x), Γ ⇒ Δ
//! ```
//!
//! The hypotheses travel down to the root, where `∃L` binds them one
//! characteristic variable at a time, in a topological order of the
//! side-variable relation.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::calculus::{check, format_path, quantifier_instance, trace_node, CheckReport, Proof, Rule, SideVariableGraph, System};
use crate::syntax::{fresh_or_same, Formula, Sequent, Term};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisKind {
    Alpha,
    Beta,
}

/// A replaced inference and the hypothesis standing in for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Replacement {
    pub path: Vec<usize>,
    pub rule: Rule,
    pub variable: String,
    pub kind: HypothesisKind,
    pub hypothesis: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionResult {
    pub proof: Proof,
    pub alpha_hypotheses: Vec<Formula>,
    pub beta_hypotheses: Vec<Formula>,
    /// The hypotheses as they occur in the end-sequent, bound at the root.
    pub closed_hypotheses: Vec<Formula>,
    pub replacements: Vec<Replacement>,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum CorrectionError {
    #[error("input is not an LJ++ proof: {}", summarize(.0))]
    NotLjpp(Box<CheckReport>),
    #[error("node {path}: {message}")]
    Internal { path: String, message: String },
}

fn summarize(r: &CheckReport) -> String {
    r.violations.iter().map(|v| format!("{} at {}", v.condition, v.node)).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq)]
struct Hyp {
    formula: Formula,
    var: String,
    kind: HypothesisKind,
}

fn with_hyps(s: &Sequent, extra: &[&Formula]) -> Sequent {
    let mut out = s.clone();
    out.antecedent.extend(extra.iter().map(|f| (*f).clone()));
    out
}

fn formulas(hs: &[Hyp]) -> Vec<&Formula> {
    hs.iter().map(|h| &h.formula).collect()
}

fn internal(path: &[usize], message: impl Into<String>) -> CorrectionError {
    CorrectionError::Internal { path: format_path(path), message: message.into() }
}

struct Corrector {
    replacements: Vec<Replacement>,
}

impl Corrector {
    fn go(&mut self, p: &Proof, path: &mut Vec<usize>) -> Result<(Proof, Vec<Hyp>), CorrectionError> {
        let mut premises = Vec::new();
        for (k, q) in p.premises.iter().enumerate() {
            path.push(k);
            premises.push(self.go(q, path)?);
            path.pop();
        }
        if let (true, Some(Term::Var(a))) = (p.rule.is_strong(), &p.term) {
            let clash = p.conclusion.has_free(a) || premises[0].1.iter().any(|h| h.formula.has_free(a));
            if clash {
                return self.replace(p, a, premises.pop().unwrap(), path);
            }
        }
        match premises.len() {
            0 => Ok((p.clone(), Vec::new())),
            1 => {
                let (q, hs) = premises.pop().unwrap();
                let conclusion = with_hyps(&p.conclusion, &formulas(&hs));
                Ok((Proof { conclusion, premises: vec![q], ..p.clone() }, hs))
            }
            _ => merge(p, premises, path),
        }
    }

    fn replace(&mut self, p: &Proof, a: &str, (q, hs): (Proof, Vec<Hyp>), path: &[usize]) -> Result<(Proof, Vec<Hyp>), CorrectionError> {
        let f = p.principal_formula().unwrap().clone();
        let inst = quantifier_instance(p).unwrap();
        let axiom = Proof::leaf(Rule::Ax, Sequent::new(vec![f.clone()], vec![f.clone()]));
        let (hyp, kind, prems) = match p.rule {
            Rule::ForallR => {
                if p.conclusion.succedent.len() != 1 {
                    return Err(internal(path, "∀R with a multi-formula succedent"));
                }
                (Formula::implies(inst, f), HypothesisKind::Alpha, vec![q, axiom])
            }
            _ => (Formula::implies(f, inst), HypothesisKind::Beta, vec![axiom, q]),
        };
        let mut conclusion = p.conclusion.clone();
        let principal = conclusion.antecedent.len();
        conclusion.antecedent.push(hyp.clone());
        conclusion.antecedent.extend(hs.iter().map(|h| h.formula.clone()));
        let node = Proof::node(Rule::ImpL, principal, conclusion, prems);
        trace_node(&node).map_err(|m| internal(path, m))?;
        self.replacements.push(Replacement {
            path: path.to_vec(),
            rule: p.rule,
            variable: a.to_string(),
            kind: kind.clone(),
            hypothesis: hyp.clone(),
        });
        let mut out = vec![Hyp { formula: hyp, var: a.to_string(), kind }];
        out.extend(hs);
        Ok((node, out))
    }
}

fn weaken(mut q: Proof, fs: &[&Formula]) -> Proof {
    for f in fs {
        let conclusion = with_hyps(&q.conclusion, &[f]);
        let i = conclusion.antecedent.len() - 1;
        q = Proof::node(Rule::Lw, i, conclusion, vec![q]);
    }
    q
}

/// Two-premise rules: either every premise carries all hypotheses (shared
/// context) or the hypotheses add up, with duplicates contracted below.
fn merge(p: &Proof, premises: Vec<(Proof, Vec<Hyp>)>, path: &[usize]) -> Result<(Proof, Vec<Hyp>), CorrectionError> {
    let mut union: Vec<Hyp> = Vec::new();
    for (_, hs) in &premises {
        for h in hs {
            if !union.contains(h) {
                union.push(h.clone());
            }
        }
    }
    let conclusion = with_hyps(&p.conclusion, &formulas(&union));
    let shared: Vec<Proof> = premises
        .iter()
        .map(|(q, hs)| {
            let missing: Vec<&Formula> = union.iter().filter(|h| !hs.contains(h)).map(|h| &h.formula).collect();
            weaken(q.clone(), &missing)
        })
        .collect();
    let node = Proof { conclusion, premises: shared, ..p.clone() };
    if trace_node(&node).is_ok() {
        return Ok((node, union));
    }

    let all: Vec<Hyp> = premises.iter().flat_map(|(_, hs)| hs.iter().cloned()).collect();
    let conclusion = with_hyps(&p.conclusion, &formulas(&all));
    let node = Proof { conclusion, premises: premises.into_iter().map(|(q, _)| q).collect(), ..p.clone() };
    trace_node(&node).map_err(|m| internal(path, m))?;
    Ok(contract_duplicates(node, all))
}

/// Contracts repeated hypotheses (the trailing antecedent formulas), keeping
/// the first copy of each.
fn contract_duplicates(mut node: Proof, hyps: Vec<Hyp>) -> (Proof, Vec<Hyp>) {
    let mut out: Vec<Hyp> = Vec::new();
    let mut conclusion = node.conclusion.clone();
    for h in hyps {
        if out.contains(&h) {
            let j = conclusion.antecedent.iter().rposition(|f| *f == h.formula).unwrap();
            conclusion.antecedent.remove(j);
            let i = conclusion.antecedent.iter().rposition(|f| *f == h.formula).unwrap();
            node = Proof::node(Rule::Lc, i, conclusion.clone(), vec![node]);
        } else {
            out.push(h);
        }
    }
    (node, out)
}

const BINDERS: [&str; 5] = ["y", "z", "u", "v", "w"];

fn bound_name(f: &Formula, preferred: &str) -> String {
    let used = f.all_vars();
    std::iter::once(preferred)
        .chain(BINDERS)
        .find(|n| !used.contains(*n))
        .map(str::to_string)
        .unwrap_or_else(|| fresh_or_same(preferred, &used))
}

pub fn correct_ljpp(p: &Proof) -> Result<CorrectionResult, CorrectionError> {
    let report = check(p, System::LJpp);
    if !report.accepted() {
        return Err(CorrectionError::NotLjpp(Box::new(report)));
    }
    let mut c = Corrector { replacements: Vec::new() };
    let (proof, hyps) = c.go(p, &mut Vec::new())?;
    let (mut proof, hyps) = contract_duplicates(proof, hyps);
    let base = p.conclusion.antecedent.len();

    let order = SideVariableGraph::of(p).topological_order().expect("LJ++ proofs have an acyclic side-variable relation");
    let mut open: Vec<usize> = (0..hyps.len()).collect();
    let mut closed: BTreeSet<usize> = BTreeSet::new();
    for v in order {
        let todo: Vec<usize> = (0..hyps.len()).filter(|&h| hyps[h].var == v && open.contains(&h)).collect();
        for h in todo {
            // Earlier closures mentioning `v` are generalized over it first.
            for &g in &closed {
                let f = &proof.conclusion.antecedent[base + g];
                if f.has_free(&v) {
                    let w = bound_name(f, "w");
                    let gen = Formula::forall(w.clone(), f.substitute(&v, &Term::var(w)));
                    let mut conclusion = proof.conclusion.clone();
                    conclusion.antecedent[base + g] = gen;
                    proof = Proof::quant(Rule::ForallL, base + g, Term::var(v.clone()), conclusion, proof);
                }
            }
            let f = proof.conclusion.antecedent[base + h].clone();
            let y = bound_name(&f, if hyps[h].kind == HypothesisKind::Alpha { "y" } else { "z" });
            let bound = Formula::exists(y.clone(), f.substitute(&v, &Term::var(y)));
            let mut conclusion = proof.conclusion.clone();
            conclusion.antecedent[base + h] = bound;
            proof = Proof::quant(Rule::ExistsL, base + h, Term::var(v.clone()), conclusion, proof);
            open.retain(|&o| o != h);
            closed.insert(h);
        }
    }
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for r in &c.replacements {
        let list = if r.kind == HypothesisKind::Alpha { &mut alpha } else { &mut beta };
        if !list.contains(&r.hypothesis) {
            list.push(r.hypothesis.clone());
        }
    }
    let closed_hypotheses = proof.conclusion.antecedent[base..].to_vec();
    Ok(CorrectionResult { proof, alpha_hypotheses: alpha, beta_hypotheses: beta, closed_hypotheses, replacements: c.replacements })
}
