//! deSkolemization of cut-free LJ++ proofs.
//!
//! Every formula occurrence of the input proof is an instance of a subformula
//! of the Skolemized target. A first pass walks the proof from the root and
//! annotates each occurrence with its position in the *unskolemized* target
//! formula plus one binder term per quantifier above that position. The
//! second pass rebuilds the proof from the leaves, displaying every
//! occurrence as the target subformula at its current *level* (an ancestor
//! of the annotated position reachable through strong quantifiers only),
//! with Skolem terms replaced by variables `a_t`. Raising a level by one is
//! an inserted `∀R`/`∃L` inference.
//!
//! Levels are raised eagerly, except that a strong inference whose principal
//! formula mentions another `a_s` not yet introduced on the branch waits for
//! it. Before two-premise rules, contractions and at the root every pending
//! inference is forced.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::calculus::{format_path, trace_node, Origin, PremiseTrace, Proof, Rule};
use crate::quant::{polarity_at, strength_of, Strength};
use crate::skolem::{match_up_to_renaming, skolemize_sequent, SkolemError, SkolemMode, SkolemSignature};
use crate::syntax::{fresh_or_same, Formula, Quantifier, Sequent, Side, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DeskolemizeError {
    #[error("input proof contains a cut at node {0}")]
    NotCutFree(String),
    #[error("axiom at node {0} is not atomic")]
    NonAtomicAxiom(String),
    #[error(transparent)]
    Skolem(#[from] SkolemError),
    #[error("end-sequent does not match the Skolemized target: no counterpart for `{0}`")]
    Mismatch(String),
    #[error("node {path}: {message}")]
    IllFormed { path: String, message: String },
}

/// One inserted strong-quantifier inference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Insertion {
    /// Input node whose (rebuilt) conclusion the inference was placed under.
    pub below: String,
    pub rule: Rule,
    pub variable: String,
    pub formula: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeskolemizationTrace {
    /// Skolem term (printed) and the variable standing for it.
    pub variables: Vec<(String, String)>,
    /// In insertion order.
    pub insertions: Vec<Insertion>,
    pub proof: Proof,
}

pub fn deskolemize(p: &Proof, target: &Sequent) -> Result<Proof, DeskolemizeError> {
    deskolemize_traced(p, target).map(|t| t.proof)
}

pub fn deskolemize_traced(p: &Proof, target: &Sequent) -> Result<DeskolemizationTrace, DeskolemizeError> {
    let mut bad = None;
    p.walk(&mut |path, n| {
        if bad.is_some() {
            return;
        }
        if n.rule == Rule::Cut {
            bad = Some(DeskolemizeError::NotCutFree(format_path(path)));
        } else if n.rule == Rule::Ax && !n.conclusion.antecedent.iter().all(Formula::is_atomic) {
            bad = Some(DeskolemizeError::NonAtomicAxiom(format_path(path)));
        }
    });
    if let Some(e) = bad {
        return Err(e);
    }
    let (sk, sig) = skolemize_sequent(target, SkolemMode::Structural)?;

    // Pair end-sequent formulas with target formulas under one renaming of
    // the proof's Skolem symbols into the signature's.
    let target_fns: BTreeSet<String> = target.formulas().flat_map(|f| f.functions()).map(|(f, _)| f).collect();
    let renamable: BTreeSet<String> = p
        .conclusion
        .formulas()
        .flat_map(|f| f.functions())
        .map(|(f, _)| f)
        .filter(|f| !target_fns.contains(f))
        .collect();
    let mut map = BTreeMap::new();
    let mut roots: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for side in [Side::Antecedent, Side::Succedent] {
        let mut used = vec![false; sk.side(side).len()];
        for f in p.conclusion.side(side) {
            let hit = sk.side(side).iter().enumerate().find_map(|(k, g)| {
                if used[k] {
                    return None;
                }
                let mut trial = map.clone();
                match_up_to_renaming(f, g, &renamable, &mut trial).then_some((k, trial))
            });
            let Some((k, trial)) = hit else {
                return Err(DeskolemizeError::Mismatch(f.to_string()));
            };
            used[k] = true;
            map = trial;
            roots[ix(side)].push(k);
        }
        if let Some(k) = used.iter().position(|u| !u) {
            return Err(DeskolemizeError::Mismatch(target.side(side)[k].to_string()));
        }
    }
    let proof_name: BTreeMap<String, String> = map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
    let skolem: BTreeSet<String> =
        sig.symbols.iter().map(|s| proof_name.get(&s.symbol).unwrap_or(&s.symbol).clone()).collect();
    let mut used: BTreeSet<String> = target.symbols();
    p.walk(&mut |_, n| {
        used.extend(n.conclusion.symbols());
        if let Some(t) = &n.term {
            t.vars_into(&mut used);
        }
    });

    let mut cx = Ctx {
        target,
        sig: &sig,
        proof_name,
        skolem,
        table: BTreeMap::new(),
        order: Vec::new(),
        used,
        log: Vec::new(),
    };
    let mut root_occs: [Vec<Occ>; 2] = [Vec::new(), Vec::new()];
    for side in [Side::Antecedent, Side::Succedent] {
        for &k in &roots[ix(side)] {
            let mut o = Occ { side, index: k, base: Vec::new(), binders: Vec::new() };
            cx.descend(&mut o);
            root_occs[ix(side)].push(o);
        }
    }
    let ann = cx.annotate(p, root_occs, &mut Vec::new())?;
    let mut built = cx.build(p, &ann, &mut Vec::new())?;
    let all = all_slots(&ann.occs);
    cx.force(&mut built, &ann.occs, &all, &[]);
    if built.proof.conclusion != *target {
        return Err(DeskolemizeError::IllFormed {
            path: "root".into(),
            message: format!("rebuilt end-sequent `{}` differs from the target", built.proof.conclusion),
        });
    }
    let variables = cx.order.iter().map(|t| (t.to_string(), cx.table[t].clone())).collect();
    Ok(DeskolemizationTrace { variables, insertions: cx.log, proof: built.proof })
}

fn ix(side: Side) -> usize {
    match side {
        Side::Antecedent => 0,
        Side::Succedent => 1,
    }
}

const SIDES: [Side; 2] = [Side::Antecedent, Side::Succedent];

fn all_slots(occs: &[Vec<Occ>; 2]) -> Vec<(Side, usize)> {
    SIDES.iter().flat_map(|&s| (0..occs[ix(s)].len()).map(move |i| (s, i))).collect()
}

/// An occurrence: target formula, position in it, and the (Skolemized)
/// term bound by each quantifier on the way down.
#[derive(Clone, Debug)]
struct Occ {
    side: Side,
    index: usize,
    base: Vec<usize>,
    binders: Vec<Term>,
}

struct Ann {
    occs: [Vec<Occ>; 2],
    premises: Vec<Ann>,
}

struct Built {
    proof: Proof,
    levels: [Vec<Vec<usize>>; 2],
    introduced: BTreeSet<String>,
}

struct Ctx<'a> {
    target: &'a Sequent,
    sig: &'a SkolemSignature,
    /// Signature symbol to the name the input proof uses for it.
    proof_name: BTreeMap<String, String>,
    skolem: BTreeSet<String>,
    table: BTreeMap<Term, String>,
    order: Vec<Term>,
    used: BTreeSet<String>,
    log: Vec<Insertion>,
}

fn ill(path: &[usize], message: impl Into<String>) -> DeskolemizeError {
    DeskolemizeError::IllFormed { path: format_path(path), message: message.into() }
}

fn flatten(t: &Term) -> String {
    match t {
        Term::Var(v) => v.clone(),
        Term::App(f, args) if args.is_empty() => f.clone(),
        Term::App(f, args) => {
            let mut s = f.clone();
            for a in args {
                s.push('_');
                s.push_str(&flatten(a));
            }
            s
        }
    }
}

impl<'a> Ctx<'a> {
    fn formula(&self, o: &Occ) -> &'a Formula {
        &self.target.side(o.side)[o.index]
    }

    fn strength(&self, o: &Occ, pos: &[usize]) -> Option<(Quantifier, Strength)> {
        let f = self.formula(o);
        let (q, _, _) = f.at(pos)?.as_quant()?;
        let mut pol = polarity_at(f, pos);
        if o.side == Side::Antecedent {
            pol = pol.flip();
        }
        Some((q, strength_of(q, pol)))
    }

    /// Binders of the quantifiers strictly above `pos`, keyed by variable.
    fn bindings(&self, o: &Occ, pos: &[usize], weak_only: bool, desk: bool) -> BTreeMap<String, Term> {
        let f = self.formula(o);
        let mut map = BTreeMap::new();
        let mut k = 0;
        for j in 0..pos.len() {
            if let Some((_, x, _)) = f.at(&pos[..j]).and_then(Formula::as_quant) {
                let weak = self.strength(o, &pos[..j]).map(|(_, s)| s) == Some(Strength::Weak);
                if !weak_only || weak {
                    let t = o.binders[k].clone();
                    map.insert(x.to_string(), if desk { self.desk_ro(&t) } else { t });
                }
                k += 1;
            }
        }
        map
    }

    /// Moves `o.base` below any strong quantifiers, binding their Skolem terms.
    fn descend(&self, o: &mut Occ) {
        while let Some((_, Strength::Strong)) = self.strength(o, &o.base) {
            let sym = self
                .sig
                .symbols
                .iter()
                .find(|s| s.side == o.side && s.index == o.index && s.path == o.base)
                .expect("every strong quantifier has a Skolem symbol");
            let weak = self.bindings(o, &o.base, true, false);
            let args = sym.dependencies.iter().map(|d| weak[d].clone()).collect();
            let name = self.proof_name.get(&sym.symbol).unwrap_or(&sym.symbol).clone();
            o.binders.push(Term::App(name, args));
            o.base.push(0);
        }
    }

    fn annotate(&mut self, p: &Proof, occs: [Vec<Occ>; 2], path: &mut Vec<usize>) -> Result<Ann, DeskolemizeError> {
        for side in SIDES {
            for (o, f) in occs[ix(side)].iter().zip(p.conclusion.side(side)) {
                let sub = self.formula(o).at(&o.base).unwrap();
                if sub.is_quantifier_free() {
                    let raw = sub.substitute_many(&self.bindings(o, &o.base, false, false));
                    if !raw.alpha_eq(f) {
                        return Err(ill(path, format!("`{f}` is not an instance of the target subformula `{raw}`")));
                    }
                }
            }
        }
        let traces = trace_node(p).map_err(|m| ill(path, m))?;
        if p.rule.is_strong() {
            return Err(ill(path, "strong quantifier inference in a proof of a Skolemized sequent"));
        }
        let principal = p.rule.principal_side().map(|s| occs[ix(s)][p.principal].clone());
        let mut premises = Vec::new();
        for (k, (q, tr)) in p.premises.iter().zip(&traces).enumerate() {
            let mut pocc: [Vec<Occ>; 2] = [Vec::new(), Vec::new()];
            for side in SIDES {
                for origin in tr.side(side) {
                    let o = match *origin {
                        Origin::Context(s, i) => occs[ix(s)][i].clone(),
                        Origin::Auxiliary => self.aux(p, k, side, principal.as_ref().unwrap()),
                    };
                    pocc[ix(side)].push(o);
                }
            }
            path.push(k);
            premises.push(self.annotate(q, pocc, path)?);
            path.pop();
        }
        Ok(Ann { occs, premises })
    }

    fn aux(&self, p: &Proof, k: usize, side: Side, principal: &Occ) -> Occ {
        let mut o = principal.clone();
        let child = match p.rule {
            Rule::Lc | Rule::Rc => return o,
            Rule::AndL1 | Rule::OrR1 => 0,
            Rule::AndL2 | Rule::OrR2 => 1,
            Rule::AndR | Rule::OrL | Rule::ImpL => k,
            Rule::ImpR => usize::from(side == Side::Succedent),
            Rule::ForallL | Rule::ExistsR => {
                o.binders.push(p.term.clone().unwrap());
                0
            }
            _ => unreachable!("rule without auxiliary formulas"),
        };
        o.base.push(child);
        self.descend(&mut o);
        o
    }

    fn desk_ro(&self, t: &Term) -> Term {
        match t {
            Term::App(f, _) if self.skolem.contains(f) => Term::Var(self.table[t].clone()),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| self.desk_ro(a)).collect()),
            Term::Var(_) => t.clone(),
        }
    }

    /// Registers every Skolem subterm of `t` in the variable table.
    fn register(&mut self, t: &Term) {
        if let Term::App(f, args) = t {
            args.iter().for_each(|a| self.register(a));
            if self.skolem.contains(f) && !self.table.contains_key(t) {
                let name = fresh_or_same(&format!("a_{}", flatten(t)), &self.used);
                self.used.insert(name.clone());
                self.table.insert(t.clone(), name);
                self.order.push(t.clone());
            }
        }
    }

    fn display(&mut self, o: &Occ, level: &[usize]) -> Formula {
        for t in &o.binders {
            self.register(t);
        }
        let map = self.bindings(o, level, false, true);
        self.formula(o).at(level).unwrap().substitute_many(&map)
    }

    fn conclusion(&mut self, occs: &[Vec<Occ>; 2], levels: &[Vec<Vec<usize>>; 2]) -> Sequent {
        let mut s = Sequent::default();
        for side in SIDES {
            for (o, l) in occs[ix(side)].iter().zip(&levels[ix(side)]) {
                let f = self.display(o, l);
                s.side_mut(side).push(f);
            }
        }
        s
    }

    fn max_level(&self, o: &Occ) -> Vec<usize> {
        let mut l = o.base.clone();
        while !l.is_empty() && matches!(self.strength(o, &l[..l.len() - 1]), Some((_, Strength::Strong))) {
            l.pop();
        }
        l
    }

    /// The strong inference raising occurrence `o` (sitting on proof side
    /// `side`) by one level, if any: rule, characteristic variable and
    /// principal formula.
    fn raise(&mut self, o: &Occ, level: &[usize], side: Side) -> Option<(Rule, String, Vec<usize>)> {
        let parent = level.split_last()?.1.to_vec();
        let (q, s) = self.strength(o, &parent)?;
        if s != Strength::Strong {
            return None;
        }
        let rule = match (q, side) {
            (Quantifier::Forall, Side::Succedent) => Rule::ForallR,
            (Quantifier::Exists, Side::Antecedent) => Rule::ExistsL,
            _ => return None,
        };
        let f = self.formula(o);
        let k = (0..parent.len()).filter(|&j| f.at(&parent[..j]).is_some_and(Formula::is_quantifier)).count();
        self.register(&o.binders[k]);
        let Term::Var(a) = self.desk_ro(&o.binders[k]) else {
            return None;
        };
        Some((rule, a, parent))
    }

    /// Performs the first admissible insertion among `slots`.
    fn lift_once(
        &mut self,
        b: &mut Built,
        occs: &[Vec<Occ>; 2],
        slots: &[(Side, usize)],
        allow_waiting: bool,
        below: &[usize],
    ) -> bool {
        for &(side, i) in slots {
            let o = &occs[ix(side)][i];
            let level = b.levels[ix(side)][i].clone();
            let Some((rule, a, parent)) = self.raise(o, &level, side) else {
                continue;
            };
            let principal = self.display(o, &parent);
            let chars: BTreeSet<&String> = self.table.values().collect();
            let waiting = principal
                .free_vars()
                .iter()
                .any(|v| *v != a && chars.contains(v) && !b.introduced.contains(v));
            if waiting && !allow_waiting {
                continue;
            }
            b.levels[ix(side)][i] = parent;
            let conclusion = self.conclusion(occs, &b.levels);
            let prev = std::mem::replace(&mut b.proof, Proof::leaf(Rule::Ax, Sequent::default()));
            b.proof = Proof::quant(rule, i, Term::Var(a.clone()), conclusion, prev);
            b.introduced.insert(a.clone());
            self.log.push(Insertion { below: format_path(below), rule, variable: a, formula: principal });
            return true;
        }
        false
    }

    fn eager(&mut self, b: &mut Built, occs: &[Vec<Occ>; 2], below: &[usize]) {
        let all = all_slots(occs);
        while self.lift_once(b, occs, &all, false, below) {}
    }

    fn force(&mut self, b: &mut Built, occs: &[Vec<Occ>; 2], slots: &[(Side, usize)], below: &[usize]) {
        while self.lift_once(b, occs, slots, false, below) || self.lift_once(b, occs, slots, true, below) {}
    }

    fn build(&mut self, p: &Proof, ann: &Ann, path: &mut Vec<usize>) -> Result<Built, DeskolemizeError> {
        if p.premises.is_empty() {
            let levels = [0, 1].map(|s| ann.occs[s].iter().map(|o| o.base.clone()).collect());
            let conclusion = self.conclusion(&ann.occs, &levels);
            let mut b = Built { proof: Proof::leaf(p.rule, conclusion), levels, introduced: BTreeSet::new() };
            self.eager(&mut b, &ann.occs, path);
            return Ok(b);
        }
        let traces: Vec<PremiseTrace> = trace_node(p).map_err(|m| ill(path, m))?;
        let merging = p.premises.len() > 1 || matches!(p.rule, Rule::Lc | Rule::Rc);
        let mut built = Vec::new();
        for (k, q) in p.premises.iter().enumerate() {
            path.push(k);
            let mut b = self.build(q, &ann.premises[k], path)?;
            path.pop();
            let occs = &ann.premises[k].occs;
            let slots: Vec<(Side, usize)> = if merging {
                all_slots(occs)
            } else {
                SIDES
                    .iter()
                    .flat_map(|&s| {
                        traces[k].side(s).iter().enumerate().filter(|(_, o)| **o == Origin::Auxiliary).map(move |(i, _)| (s, i))
                    })
                    .collect()
            };
            self.force(&mut b, occs, &slots, path);
            built.push(b);
        }
        let principal = p.rule.principal_side().map(|s| (s, p.principal));
        let mut levels: [Vec<Vec<usize>>; 2] = [Vec::new(), Vec::new()];
        for side in SIDES {
            for (i, o) in ann.occs[ix(side)].iter().enumerate() {
                let level = if principal == Some((side, i)) {
                    if matches!(p.rule, Rule::Lw | Rule::Rw) {
                        self.max_level(o)
                    } else {
                        o.base.clone()
                    }
                } else {
                    let mut found: Option<Vec<usize>> = None;
                    for (k, tr) in traces.iter().enumerate() {
                        for (j, origin) in tr.side(side).iter().enumerate() {
                            if *origin == Origin::Context(side, i) {
                                let l = &built[k].levels[ix(side)][j];
                                match &found {
                                    Some(prev) if prev != l => {
                                        return Err(ill(path, "context occurrence rebuilt at different levels"))
                                    }
                                    _ => found = Some(l.clone()),
                                }
                            }
                        }
                    }
                    found.ok_or_else(|| ill(path, "conclusion occurrence with no premise counterpart"))?
                };
                levels[ix(side)].push(level);
            }
        }
        let conclusion = self.conclusion(&ann.occs, &levels);
        let term = match &p.term {
            Some(t) => {
                self.register(t);
                Some(self.desk_ro(t))
            }
            None => None,
        };
        let mut introduced = BTreeSet::new();
        let mut premises = Vec::new();
        for b in built {
            introduced.extend(b.introduced);
            premises.push(b.proof);
        }
        let proof = Proof { rule: p.rule, principal: p.principal, term, conclusion, premises };
        let mut b = Built { proof, levels, introduced };
        self.eager(&mut b, &ann.occs, path);
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check, System};
    use crate::parser::{parse_proof, parse_sequent};

    const CD_SK: &str = "\
forall-l 0 c() ; forall x. (A(x) | B) => A(c()) | B
  or-l 0 ; A(c()) | B => A(c()) | B
    or-r1 0 ; A(c()) => A(c()) | B
      ax ; A(c()) => A(c())
    or-r2 0 ; B => A(c()) | B
      ax ; B => B
";

    const CD_DESK: &str = "\
forall-l 0 a_c ; forall x. (A(x) | B) => forall x. A(x) | B
  or-l 0 ; A(a_c) | B => forall x. A(x) | B
    or-r1 0 ; A(a_c) => forall x. A(x) | B
      forall-r 0 a_c ; A(a_c) => forall x. A(x)
        ax ; A(a_c) => A(a_c)
    or-r2 0 ; B => forall x. A(x) | B
      ax ; B => B
";

    const FORALL_EXISTS_SK: &str = "\
forall-l 0 c() ; forall x. A(x,f(x)) => exists y. A(c(),y)
  exists-r 0 f(c()) ; A(c(),f(c())) => exists y. A(c(),y)
    ax ; A(c(),f(c())) => A(c(),f(c()))
";

    const FORALL_EXISTS_DESK: &str = "\
forall-l 0 a_c ; forall x. exists y. A(x,y) => forall x. exists y. A(x,y)
  exists-l 0 a_f_c ; exists y. A(a_c,y) => forall x. exists y. A(x,y)
    forall-r 0 a_c ; A(a_c,a_f_c) => forall x. exists y. A(x,y)
      exists-r 0 a_f_c ; A(a_c,a_f_c) => exists y. A(a_c,y)
        ax ; A(a_c,a_f_c) => A(a_c,a_f_c)
";

    #[test]
    fn cd_worked_example() {
        let target = parse_sequent("forall x. (A(x) | B) => forall x. A(x) | B").unwrap();
        let t = deskolemize_traced(&parse_proof(CD_SK).unwrap(), &target).unwrap();
        assert_eq!(t.proof, parse_proof(CD_DESK).unwrap());
        assert_eq!(t.variables, vec![("c()".to_string(), "a_c".to_string())]);
        assert!(check(&t.proof, System::LJpp).accepted());
    }

    #[test]
    fn forall_exists_example() {
        let target = parse_sequent("forall x. exists y. A(x,y) => forall x. exists y. A(x,y)").unwrap();
        let t = deskolemize_traced(&parse_proof(FORALL_EXISTS_SK).unwrap(), &target).unwrap();
        assert_eq!(t.proof, parse_proof(FORALL_EXISTS_DESK).unwrap());
        let order: Vec<&str> = t.insertions.iter().map(|i| i.variable.as_str()).collect();
        assert_eq!(order, ["a_c", "a_f_c"]);
        let r = check(&t.proof, System::LJpp);
        assert!(r.accepted(), "{:?}", r.violations);
        assert_eq!(r.side_variable_edges, vec![("a_f_c".to_string(), "a_c".to_string())]);
    }

    #[test]
    fn quantifier_free_target_is_unchanged() {
        let p = parse_proof("or-r1 0 ; A & B => A | C\n  and-l1 0 ; A & B => A\n    ax ; A => A\n").unwrap();
        let target = parse_sequent("A & B => A | C").unwrap();
        assert_eq!(deskolemize(&p, &target).unwrap(), p);
    }

    #[test]
    fn reports_mismatch_and_preconditions() {
        let target = parse_sequent("forall x. (A(x) | B) => forall x. A(x) & B").unwrap();
        let e = deskolemize(&parse_proof(CD_SK).unwrap(), &target).unwrap_err();
        assert_eq!(e, DeskolemizeError::Mismatch("A(c()) | B".into()));
        let compound = parse_proof("ax ; A | B => A | B\n").unwrap();
        let e = deskolemize(&compound, &parse_sequent("A | B => A | B").unwrap()).unwrap_err();
        assert_eq!(e, DeskolemizeError::NonAtomicAxiom("root".into()));
    }
}
