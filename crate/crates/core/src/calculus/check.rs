//! Rule-by-rule checking for LK, LJ, LK++ and LJ++.
//!
//! Two-premise rules accept each side's context either shared between the
//! premises (as in the additive rules) or split between them (as in the
//! multiplicative ones); both readings are interderivable with weakening and
//! contraction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::proof::{format_path, Proof, Rule};
use crate::syntax::{Formula, Sequent, Side, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    LK,
    LJ,
    LKpp,
    LJpp,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::LK => "lk",
            System::LJ => "lj",
            System::LKpp => "lkpp",
            System::LJpp => "ljpp",
        }
    }

    pub fn intuitionistic(self) -> bool {
        matches!(self, System::LJ | System::LJpp)
    }

    /// LK++/LJ++: eigenvariable condition replaced by suitability.
    pub fn plus_plus(self) -> bool {
        matches!(self, System::LKpp | System::LJpp)
    }
}

impl std::str::FromStr for System {
    type Err = String;
    fn from_str(s: &str) -> Result<System, String> {
        match s.to_ascii_lowercase().as_str() {
            "lk" => Ok(System::LK),
            "lj" => Ok(System::LJ),
            "lkpp" | "lk++" => Ok(System::LKpp),
            "ljpp" | "lj++" => Ok(System::LJpp),
            _ => Err(format!("unknown system `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    RuleShape,
    SingleConclusion,
    Eigenvariable,
    WeakTermBoundVariable,
    Substitutability,
    SideVariableCycle,
    VeryWeakRegularity,
    NonAtomicAxiom,
    CutPresent,
    /// QFS only: a declared hypothesis is missing or not a shift instance.
    ShiftHypothesis,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::RuleShape => "rule-shape",
            Condition::SingleConclusion => "single-conclusion",
            Condition::Eigenvariable => "eigenvariable",
            Condition::WeakTermBoundVariable => "weak-term-bound-variable",
            Condition::Substitutability => "substitutability",
            Condition::SideVariableCycle => "side-variable-cycle",
            Condition::VeryWeakRegularity => "very-weak-regularity",
            Condition::NonAtomicAxiom => "non-atomic-axiom",
            Condition::CutPresent => "cut-present",
            Condition::ShiftHypothesis => "shift-hypothesis",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: Vec<usize>,
    pub node: String,
    pub condition: Condition,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub system: String,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    /// Edges `a <_π b` of the side-variable relation.
    pub side_variable_edges: Vec<(String, String)>,
}

impl CheckReport {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }

    pub fn conditions(&self) -> BTreeSet<Condition> {
        self.violations.iter().map(|v| v.condition).collect()
    }

    fn finish(system: String, violations: Vec<Violation>, edges: Vec<(String, String)>) -> CheckReport {
        CheckReport {
            system,
            verdict: if violations.is_empty() { Verdict::Accepted } else { Verdict::Rejected },
            violations,
            side_variable_edges: edges,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub require_cut_free: bool,
    pub require_atomic_axioms: bool,
}

/// Where a premise formula occurrence comes from in the conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Origin {
    /// Carried over unchanged from the conclusion occurrence at this index.
    Context(Side, usize),
    /// An auxiliary formula of the inference.
    Auxiliary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PremiseTrace {
    pub antecedent: Vec<Origin>,
    pub succedent: Vec<Origin>,
}

impl PremiseTrace {
    pub fn side(&self, side: Side) -> &Vec<Origin> {
        match side {
            Side::Antecedent => &self.antecedent,
            Side::Succedent => &self.succedent,
        }
    }
}

/// A premise with its auxiliary occurrences marked.
struct Marked<'a> {
    seq: &'a Sequent,
    aux: [Vec<bool>; 2],
}

fn side_ix(side: Side) -> usize {
    match side {
        Side::Antecedent => 0,
        Side::Succedent => 1,
    }
}

impl<'a> Marked<'a> {
    fn new(seq: &'a Sequent) -> Marked<'a> {
        Marked { seq, aux: [vec![false; seq.antecedent.len()], vec![false; seq.succedent.len()]] }
    }

    /// Marks one unmarked occurrence of `f` (exact match preferred, then α-equal).
    fn take(&mut self, side: Side, f: &Formula) -> Result<(), String> {
        let fs = self.seq.side(side);
        let marks = &mut self.aux[side_ix(side)];
        let pos = (0..fs.len())
            .find(|&i| !marks[i] && fs[i] == *f)
            .or_else(|| (0..fs.len()).find(|&i| !marks[i] && fs[i].alpha_eq(f)));
        match pos {
            Some(i) => {
                marks[i] = true;
                Ok(())
            }
            None => Err(format!(
                "premise `{}` lacks auxiliary formula `{}` in its {}",
                self.seq,
                f,
                side_word(side)
            )),
        }
    }

    fn rest(&self, side: Side) -> Vec<(usize, &'a Formula)> {
        self.seq
            .side(side)
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.aux[side_ix(side)][*i])
            .collect()
    }
}

fn side_word(side: Side) -> &'static str {
    match side {
        Side::Antecedent => "antecedent",
        Side::Succedent => "succedent",
    }
}

/// Assigns each premise occurrence to an unused conclusion occurrence of an
/// equal formula. `used` is shared when the context is split.
fn assign(
    rest: &[(usize, &Formula)],
    concl: &[(usize, &Formula)],
    used: &mut [bool],
    out: &mut [Option<Origin>],
    side: Side,
) -> bool {
    for &(pi, f) in rest {
        let Some(j) = (0..concl.len()).find(|&j| !used[j] && concl[j].1 == f) else {
            return false;
        };
        used[j] = true;
        out[pi] = Some(Origin::Context(side, concl[j].0));
    }
    used.iter().all(|u| *u)
}

fn finish_trace(m: &Marked, traces: [Vec<Option<Origin>>; 2]) -> PremiseTrace {
    let [a, s] = traces;
    let fill = |v: Vec<Option<Origin>>, marks: &Vec<bool>| {
        v.into_iter()
            .zip(marks)
            .map(|(o, &aux)| if aux { Origin::Auxiliary } else { o.unwrap() })
            .collect()
    };
    PremiseTrace { antecedent: fill(a, &m.aux[0]), succedent: fill(s, &m.aux[1]) }
}

/// Matches the contexts of the marked premises against the conclusion minus
/// its principal occurrence.
fn match_contexts(concl: &Sequent, principal: Option<(Side, usize)>, prems: &[Marked]) -> Result<Vec<PremiseTrace>, String> {
    let mut traces: Vec<[Vec<Option<Origin>>; 2]> = prems
        .iter()
        .map(|m| [vec![None; m.seq.antecedent.len()], vec![None; m.seq.succedent.len()]])
        .collect();
    for side in [Side::Antecedent, Side::Succedent] {
        let ctx: Vec<(usize, &Formula)> = concl
            .side(side)
            .iter()
            .enumerate()
            .filter(|(i, _)| principal != Some((side, *i)))
            .collect();
        let rests: Vec<Vec<(usize, &Formula)>> = prems.iter().map(|m| m.rest(side)).collect();
        // Shared: every premise carries the whole context.
        let mut shared = true;
        let mut tmp = traces.clone();
        for (k, rest) in rests.iter().enumerate() {
            let mut used = vec![false; ctx.len()];
            if !assign(rest, &ctx, &mut used, &mut tmp[k][side_ix(side)], side) {
                shared = false;
                break;
            }
        }
        if shared {
            traces = tmp;
            continue;
        }
        // Split: the premises' contexts add up to the conclusion's.
        let mut used = vec![false; ctx.len()];
        let mut ok = true;
        for (k, rest) in rests.iter().enumerate() {
            for &(pi, f) in rest {
                match (0..ctx.len()).find(|&j| !used[j] && ctx[j].1 == f) {
                    Some(j) => {
                        used[j] = true;
                        traces[k][side_ix(side)][pi] = Some(Origin::Context(side, ctx[j].0));
                    }
                    None => ok = false,
                }
            }
        }
        if !ok || !used.iter().all(|u| *u) {
            let want: Vec<String> = ctx.iter().map(|(_, f)| f.to_string()).collect();
            let have: Vec<String> = rests
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|(_, f)| f.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            return Err(format!(
                "{} context [{}] does not match the premises' {}",
                side_word(side),
                want.join(", "),
                have.join(" and ")
            ));
        }
    }
    Ok(prems.iter().zip(traces).map(|(m, t)| finish_trace(m, t)).collect())
}

fn instance(f: &Formula, t: &Term) -> Option<Formula> {
    let (_, x, body) = f.as_quant()?;
    Some(body.substitute(x, t))
}

/// Checks that `p`'s conclusion follows from its premises' conclusions by its
/// rule, returning how premise occurrences relate to the conclusion.
pub fn trace_node(p: &Proof) -> Result<Vec<PremiseTrace>, String> {
    let c = &p.conclusion;
    if p.premises.len() != p.rule.arity() {
        return Err(format!("{} takes {} premise(s), found {}", p.rule.name(), p.rule.arity(), p.premises.len()));
    }
    let principal = match p.rule.principal_side() {
        Some(side) => {
            let Some(f) = c.side(side).get(p.principal) else {
                return Err(format!("principal index {} out of range in the {}", p.principal, side_word(side)));
            };
            Some((side, p.principal, f))
        }
        None => None,
    };
    let shape_err = |want: &str| -> String {
        let (_, _, f) = principal.unwrap();
        format!("principal formula `{f}` is not {want}")
    };
    let mut prems: Vec<Marked> = p.premises.iter().map(|q| Marked::new(&q.conclusion)).collect();
    match p.rule {
        Rule::Ax => {
            let ok = c.antecedent.len() == 1 && c.succedent.len() == 1 && c.antecedent[0] == c.succedent[0];
            return if ok { Ok(Vec::new()) } else { Err(format!("`{c}` is not of the form A => A")) };
        }
        Rule::Bot => {
            let ok = c.antecedent == [Formula::Bottom] && c.succedent.is_empty();
            return if ok { Ok(Vec::new()) } else { Err(format!("`{c}` is not `_|_ =>`")) };
        }
        Rule::Top => {
            let ok = c.antecedent.is_empty() && c.succedent == [Formula::Top];
            return if ok { Ok(Vec::new()) } else { Err(format!("`{c}` is not `=> T`")) };
        }
        Rule::Lw | Rule::Rw => {}
        Rule::Lc | Rule::Rc => {
            let (side, _, f) = principal.unwrap();
            prems[0].take(side, f)?;
            prems[0].take(side, f)?;
        }
        Rule::AndL1 | Rule::AndL2 => {
            let Formula::And(a, b) = principal.unwrap().2 else {
                return Err(shape_err("a conjunction"));
            };
            prems[0].take(Side::Antecedent, if p.rule == Rule::AndL1 { a } else { b })?;
        }
        Rule::OrR1 | Rule::OrR2 => {
            let Formula::Or(a, b) = principal.unwrap().2 else {
                return Err(shape_err("a disjunction"));
            };
            prems[0].take(Side::Succedent, if p.rule == Rule::OrR1 { a } else { b })?;
        }
        Rule::AndR => {
            let Formula::And(a, b) = principal.unwrap().2 else {
                return Err(shape_err("a conjunction"));
            };
            prems[0].take(Side::Succedent, a)?;
            prems[1].take(Side::Succedent, b)?;
        }
        Rule::OrL => {
            let Formula::Or(a, b) = principal.unwrap().2 else {
                return Err(shape_err("a disjunction"));
            };
            prems[0].take(Side::Antecedent, a)?;
            prems[1].take(Side::Antecedent, b)?;
        }
        Rule::ImpL => {
            let Formula::Implies(a, b) = principal.unwrap().2 else {
                return Err(shape_err("an implication"));
            };
            prems[0].take(Side::Succedent, a)?;
            prems[1].take(Side::Antecedent, b)?;
        }
        Rule::ImpR => {
            let Formula::Implies(a, b) = principal.unwrap().2 else {
                return Err(shape_err("an implication"));
            };
            prems[0].take(Side::Antecedent, a)?;
            prems[0].take(Side::Succedent, b)?;
        }
        Rule::ForallL | Rule::ForallR | Rule::ExistsL | Rule::ExistsR => {
            let (side, _, f) = principal.unwrap();
            let want_forall = matches!(p.rule, Rule::ForallL | Rule::ForallR);
            let ok = if want_forall { matches!(f, Formula::Forall(..)) } else { matches!(f, Formula::Exists(..)) };
            if !ok {
                return Err(shape_err(if want_forall { "universal" } else { "existential" }));
            }
            let Some(t) = &p.term else {
                return Err(format!("{} needs a term or variable annotation", p.rule.name()));
            };
            if p.rule.is_strong() && !matches!(t, Term::Var(_)) {
                return Err(format!("characteristic variable `{t}` is not a variable"));
            }
            prems[0].take(side, &instance(f, t).unwrap())?;
        }
        Rule::Cut => {
            let (l, r) = (&p.premises[0].conclusion, &p.premises[1].conclusion);
            let mut seen = BTreeSet::new();
            let mut last_err = format!("premises `{l}` and `{r}` share no cut formula");
            for f in &l.succedent {
                if !r.antecedent.contains(f) || !seen.insert(f) {
                    continue;
                }
                let mut ms = vec![Marked::new(l), Marked::new(r)];
                ms[0].take(Side::Succedent, f)?;
                ms[1].take(Side::Antecedent, f)?;
                match match_contexts(c, None, &ms) {
                    Ok(t) => return Ok(t),
                    Err(e) => last_err = e,
                }
            }
            return Err(last_err);
        }
    }
    match_contexts(c, principal.map(|(s, i, _)| (s, i)), &prems)
}

/// The auxiliary formula the premise of a weak or strong quantifier node
/// should contain.
pub fn quantifier_instance(p: &Proof) -> Option<Formula> {
    instance(p.principal_formula()?, p.term.as_ref()?)
}

fn char_var(p: &Proof) -> Option<&str> {
    if !p.rule.is_strong() {
        return None;
    }
    match &p.term {
        Some(Term::Var(v)) => Some(v),
        _ => None,
    }
}

/// The side-variable relation of a proof.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SideVariableGraph {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl SideVariableGraph {
    pub fn of(p: &Proof) -> SideVariableGraph {
        let mut g = SideVariableGraph::default();
        let mut pending = Vec::new();
        p.walk(&mut |_, n| {
            if let (Some(a), Some(f)) = (char_var(n), n.principal_formula()) {
                g.nodes.insert(a.to_string());
                pending.push((a.to_string(), f.free_vars()));
            }
        });
        for (a, free) in pending {
            for b in free {
                if g.nodes.contains(&b) {
                    g.edges.insert((a.clone(), b));
                }
            }
        }
        g
    }

    fn graph(&self) -> (DiGraph<String, ()>, BTreeMap<String, NodeIndex>) {
        let mut g = DiGraph::new();
        let ix: BTreeMap<String, NodeIndex> = self.nodes.iter().map(|n| (n.clone(), g.add_node(n.clone()))).collect();
        for (a, b) in &self.edges {
            g.add_edge(ix[a], ix[b], ());
        }
        (g, ix)
    }

    /// Strongly connected components that contain a cycle (self-loops included).
    pub fn cycles(&self) -> Vec<Vec<String>> {
        let (g, _) = self.graph();
        let mut out: Vec<Vec<String>> = tarjan_scc(&g)
            .into_iter()
            .filter(|scc| scc.len() > 1 || g.contains_edge(scc[0], scc[0]))
            .map(|scc| {
                let mut names: Vec<String> = scc.iter().map(|&i| g[i].clone()).collect();
                names.sort();
                names
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycles().is_empty()
    }

    /// An order in which `a` precedes `b` whenever `a <_π b`.
    pub fn topological_order(&self) -> Option<Vec<String>> {
        let (g, _) = self.graph();
        toposort(&g, None).ok().map(|v| v.into_iter().map(|i| g[i].clone()).collect())
    }
}

pub fn check(p: &Proof, system: System) -> CheckReport {
    check_with(p, system, CheckOptions::default())
}

pub fn check_with(p: &Proof, system: System, opts: CheckOptions) -> CheckReport {
    let mut vs: Vec<Violation> = Vec::new();
    let mut push = |path: &[usize], condition: Condition, message: String| {
        vs.push(Violation { path: path.to_vec(), node: format_path(path), condition, message });
    };
    let end = &p.conclusion;
    let mut strong: Vec<(Vec<usize>, String, Formula)> = Vec::new();
    p.walk(&mut |path, n| {
        if let Err(msg) = trace_node(n) {
            push(path, Condition::RuleShape, format!("{}: {msg}", n.rule.name()));
        }
        if system.intuitionistic() && n.conclusion.succedent.len() > 1 {
            push(
                path,
                Condition::SingleConclusion,
                format!("succedent of `{}` has {} formulas", n.conclusion, n.conclusion.succedent.len()),
            );
        }
        if matches!(n.rule, Rule::ForallL | Rule::ExistsR) {
            if let Some(t) = &n.term {
                let bound: BTreeSet<String> = n.conclusion.formulas().flat_map(|f| f.bound_vars()).collect();
                let clash: Vec<String> = t.vars().intersection(&bound).cloned().collect();
                if !clash.is_empty() {
                    push(
                        path,
                        Condition::WeakTermBoundVariable,
                        format!("term `{t}` contains bound variable(s) {}", clash.join(", ")),
                    );
                }
            }
        }
        if let (Some(a), Some(f)) = (char_var(n), n.principal_formula()) {
            if !system.plus_plus() && n.conclusion.has_free(a) {
                push(
                    path,
                    Condition::Eigenvariable,
                    format!("characteristic variable `{a}` is free in the conclusion `{}`", n.conclusion),
                );
            }
            strong.push((path.to_vec(), a.to_string(), f.clone()));
        }
        if opts.require_cut_free && n.rule == Rule::Cut {
            push(path, Condition::CutPresent, "cut inference".into());
        }
        if opts.require_atomic_axioms && n.rule == Rule::Ax && !n.conclusion.antecedent.iter().all(Formula::is_atomic) {
            push(path, Condition::NonAtomicAxiom, format!("axiom `{}` is not atomic", n.conclusion));
        }
    });
    let graph = SideVariableGraph::of(p);
    if system.plus_plus() {
        for (path, a, _) in &strong {
            if end.has_free(a) {
                push(path, Condition::Substitutability, format!("characteristic variable `{a}` is free in the end-sequent"));
            }
        }
        let cycles = graph.cycles();
        for cyc in &cycles {
            // Report once, at the topmost-leftmost strong inference in the cycle.
            if let Some((path, _, _)) = strong.iter().find(|(_, a, _)| cyc.contains(a)) {
                push(path, Condition::SideVariableCycle, format!("side-variable cycle among {}", cyc.join(", ")));
            }
        }
        let mut first: BTreeMap<&str, &Formula> = BTreeMap::new();
        for (path, a, f) in &strong {
            match first.get(a.as_str()) {
                Some(g) if *g != f => push(
                    path,
                    Condition::VeryWeakRegularity,
                    format!("characteristic variable `{a}` has principal formulas `{g}` and `{f}`"),
                ),
                Some(_) => {}
                None => {
                    first.insert(a, f);
                }
            }
        }
    }
    vs.sort_by(|a, b| a.path.cmp(&b.path).then(a.condition.cmp(&b.condition)));
    let edges = graph.edges.into_iter().collect();
    CheckReport::finish(system.name().to_string(), vs, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_proof;

    const SW: &str = "\
exists-r 0 a ; forall x. A(x) -> B => exists x. (A(x) -> B)
  imp-r 0 ; forall x. A(x) -> B => A(a) -> B
    imp-l 1 ; A(a), forall x. A(x) -> B => B
      forall-r 0 a ; A(a) => forall x. A(x)
        ax ; A(a) => A(a)
      ax ; B => B
";

    #[test]
    fn sw_is_ljpp_but_not_lj() {
        let p = parse_proof(SW).unwrap();
        let r = check(&p, System::LJpp);
        assert!(r.accepted(), "{:?}", r.violations);
        let r = check(&p, System::LJ);
        assert_eq!(r.conditions(), [Condition::Eigenvariable].into());
        assert_eq!(r.violations[0].path, vec![0, 0, 0]);
    }

    #[test]
    fn substitutability() {
        let p = parse_proof("forall-r 0 a ; A(a) => forall x. A(x)\n  ax ; A(a) => A(a)\n").unwrap();
        assert_eq!(check(&p, System::LJpp).conditions(), [Condition::Substitutability].into());
    }

    #[test]
    fn side_variable_cycle() {
        let p = parse_proof(
            "\
exists-r 0 b ; forall x. exists y. A(x,y) => exists y. forall x. A(x,y)
  forall-l 0 a ; forall x. exists y. A(x,y) => forall x. A(x,b)
    forall-r 0 a ; exists y. A(a,y) => forall x. A(x,b)
      exists-l 0 b ; exists y. A(a,y) => A(a,b)
        ax ; A(a,b) => A(a,b)
",
        )
        .unwrap();
        let r = check(&p, System::LJpp);
        assert_eq!(r.conditions(), [Condition::SideVariableCycle].into(), "{:?}", r.violations);
        assert_eq!(r.side_variable_edges, vec![("a".into(), "b".into()), ("b".into(), "a".into())]);
    }

    #[test]
    fn very_weak_regularity() {
        let p = parse_proof(
            "\
cut ; exists x. A(x) => forall x. A(x)
  exists-l 0 a ; exists x. A(x) => A(a)
    ax ; A(a) => A(a)
  forall-r 0 a ; A(a) => forall x. A(x)
    ax ; A(a) => A(a)
",
        )
        .unwrap();
        assert_eq!(check(&p, System::LJpp).conditions(), [Condition::VeryWeakRegularity].into());
    }

    #[test]
    fn wrong_rule_is_a_shape_violation() {
        let p = parse_proof("and-l1 0 ; A & B => A\n  ax ; B => A\n").unwrap();
        assert_eq!(check(&p, System::LK).conditions(), [Condition::RuleShape].into());
    }

    #[test]
    fn additive_and_multiplicative_and_r() {
        let add = parse_proof("and-r 0 ; A, B => A & B\n  lw 1 ; A, B => A\n    ax ; A => A\n  lw 0 ; A, B => B\n    ax ; B => B\n").unwrap();
        assert!(check(&add, System::LJ).accepted());
        let mul = parse_proof("and-r 0 ; A, B => A & B\n  ax ; A => A\n  ax ; B => B\n").unwrap();
        assert!(check(&mul, System::LJ).accepted());
    }

    #[test]
    fn weak_term_with_bound_variable() {
        let p = parse_proof("forall-l 0 x ; forall x. P(x) => P(x)\n  ax ; P(x) => P(x)\n").unwrap();
        assert_eq!(check(&p, System::LK).conditions(), [Condition::WeakTermBoundVariable].into());
    }

    #[test]
    fn multi_conclusion_is_lk_only() {
        let p = parse_proof("rw 0 ; A => B, A\n  ax ; A => A\n").unwrap();
        assert!(check(&p, System::LK).accepted());
        assert_eq!(check(&p, System::LJ).conditions(), [Condition::SingleConclusion].into());
    }

    #[test]
    fn options_flag_cuts_and_compound_axioms() {
        let p = parse_proof("cut ; P & Q => P & Q\n  ax ; P & Q => P & Q\n  ax ; P & Q => P & Q\n").unwrap();
        let opts = CheckOptions { require_cut_free: true, require_atomic_axioms: true };
        let r = check_with(&p, System::LJ, opts);
        assert_eq!(r.conditions(), [Condition::CutPresent, Condition::NonAtomicAxiom].into());
    }
}
