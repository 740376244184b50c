//! The three-world model witnessing that QFS is not Kripke-complete.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{forcing::forces, Model};
use crate::parser::{parse_formula, parse_model, print_formula};
use crate::shift::{shift_axiom, ShiftKind};
use crate::syntax::{Formula, Term};

/// Root `w1` below `w2` and `w3`; domain `{a, b}` everywhere.
pub const INCOMPLETENESS_MODEL: &str = "\
worlds w1 w2 w3
order w1 < w2
order w1 < w3
domain *: a b
force w1: R(a)
force w2: R(a), R(b), P
force w3: R(a), R(b), Q
";

/// `((P→Q)∨(Q→P)) ∨ (∃xR(x)→∀xR(x))`, refuted at `w1`.
pub const LIN_OEP_INSTANCE: &str = "(P -> Q) | (Q -> P) | (exists x. R(x) -> forall x. R(x))";

pub fn incompleteness_model() -> Model {
    parse_model(INCOMPLETENESS_MODEL).expect("built-in model parses")
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub depth: usize,
    /// Semantic classes of formulas over `P, Q, R(x), R(y), ⊥, ⊤` up to the depth.
    pub classes: usize,
    /// Classes whose formulas have at most `x` free.
    pub unary_classes: usize,
    /// A formula `ψ(x)` separating `a` from `b` at `w2` or `w3`.
    pub counterexample: Option<String>,
    /// A representative on which the bit-vector evaluator and `forces` differ.
    pub oracle_mismatch: Option<String>,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.oracle_mismatch.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IncompletenessReport {
    pub lin_oep_refuted_at_w1: bool,
    pub atomic_instances_checked: usize,
    /// Instances (and world) where an atomic CD/ED/SW instance fails.
    pub failing_instances: Vec<String>,
    pub claim: ClaimReport,
}

impl IncompletenessReport {
    pub fn passed(&self) -> bool {
        self.lin_oep_refuted_at_w1 && self.failing_instances.is_empty() && self.claim.holds()
    }
}

pub fn check_incompleteness_witness(depth: usize) -> IncompletenessReport {
    let m = incompleteness_model();
    let w1 = m.frame.world("w1").unwrap();
    let lin = parse_formula(LIN_OEP_INSTANCE).unwrap();
    let lin_oep_refuted_at_w1 = !forces(&m, w1, &lin).unwrap();

    let (checked, failing_instances) = atomic_shift_failures(&m);
    IncompletenessReport {
        lin_oep_refuted_at_w1,
        atomic_instances_checked: checked,
        failing_instances,
        claim: check_claim(&m, depth),
    }
}

/// Every CD/ED/SW instance with `A(x)` among `R(x), P, Q, ⊥, ⊤` and `B`
/// among `P, Q, ⊥, ⊤`, checked at every world of `m`. Returns the number of
/// instances and the failures.
pub fn atomic_shift_failures(m: &Model) -> (usize, Vec<String>) {
    let x = Term::var("x");
    let a_choices = [
        Formula::atom("R", vec![x.clone()]),
        Formula::prop("P"),
        Formula::prop("Q"),
        Formula::Bottom,
        Formula::Top,
    ];
    let b_choices = [Formula::prop("P"), Formula::prop("Q"), Formula::Bottom, Formula::Top];
    let mut failing_instances = Vec::new();
    let mut checked = 0;
    for kind in ShiftKind::ALL {
        for a in &a_choices {
            for b in &b_choices {
                let inst = shift_axiom(kind, a, b, "x").unwrap();
                checked += 1;
                for w in 0..m.frame.len() {
                    if !forces(m, w, &inst).unwrap_or(false) {
                        failing_instances.push(format!("{} at {}", print_formula(&inst), m.frame.worlds[w]));
                    }
                }
            }
        }
    }
    (checked, failing_instances)
}

/// Truth of a formula with free variables among `x`, `y` at every
/// (world, x-value, y-value) point, packed into bits.
struct Space<'a> {
    m: &'a Model,
    e: usize,
}

impl Space<'_> {
    fn bit(&self, w: usize, ex: usize, ey: usize) -> u64 {
        1 << (w * self.e * self.e + ex * self.e + ey)
    }

    fn points(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let e = self.e;
        (0..self.m.frame.len()).flat_map(move |w| (0..e).flat_map(move |x| (0..e).map(move |y| (w, x, y))))
    }

    fn from_fn(&self, f: impl Fn(usize, usize, usize) -> bool) -> u64 {
        self.points().filter(|&(w, x, y)| f(w, x, y)).fold(0, |acc, (w, x, y)| acc | self.bit(w, x, y))
    }

    fn has(&self, v: u64, w: usize, x: usize, y: usize) -> bool {
        v & self.bit(w, x, y) != 0
    }

    fn imp(&self, a: u64, b: u64) -> u64 {
        self.from_fn(|w, x, y| self.m.frame.above(w).all(|v| !self.has(a, v, x, y) || self.has(b, v, x, y)))
    }

    fn forall(&self, a: u64, on_x: bool) -> u64 {
        self.from_fn(|w, x, y| {
            self.m.frame.above(w).all(|v| {
                self.m.frame.domains[v]
                    .iter()
                    .all(|&d| if on_x { self.has(a, v, d, y) } else { self.has(a, v, x, d) })
            })
        })
    }

    fn exists(&self, a: u64, on_x: bool) -> u64 {
        self.from_fn(|w, x, y| {
            self.m.frame.domains[w]
                .iter()
                .any(|&d| if on_x { self.has(a, w, d, y) } else { self.has(a, w, x, d) })
        })
    }
}

#[derive(Clone)]
struct Class {
    formula: Formula,
    free: u8,
    bits: u64,
}

fn check_claim(m: &Model, depth: usize) -> ClaimReport {
    let e = m.frame.elements.len();
    assert!(m.frame.len() * e * e <= 64, "claim space must fit in 64 bits");
    let sp = Space { m, e };
    let holds = |p: &str, w: usize, t: &[usize]| m.holds(p, w, t);
    let (x, y) = (Term::var("x"), Term::var("y"));
    let atoms = vec![
        Class { formula: Formula::prop("P"), free: 0, bits: sp.from_fn(|w, _, _| holds("P", w, &[])) },
        Class { formula: Formula::prop("Q"), free: 0, bits: sp.from_fn(|w, _, _| holds("Q", w, &[])) },
        Class { formula: Formula::atom("R", vec![x.clone()]), free: 1, bits: sp.from_fn(|w, a, _| holds("R", w, &[a])) },
        Class { formula: Formula::atom("R", vec![y.clone()]), free: 2, bits: sp.from_fn(|w, _, b| holds("R", w, &[b])) },
        Class { formula: Formula::Bottom, free: 0, bits: 0 },
        Class { formula: Formula::Top, free: 0, bits: sp.from_fn(|_, _, _| true) },
    ];
    let mut classes: Vec<Class> = Vec::new();
    let mut seen: HashMap<(u8, u64), usize> = HashMap::new();
    let mut add = |c: Class, classes: &mut Vec<Class>| {
        if let std::collections::hash_map::Entry::Vacant(v) = seen.entry((c.free, c.bits)) {
            v.insert(classes.len());
            classes.push(c);
        }
    };
    for a in atoms {
        add(a, &mut classes);
    }
    for _ in 0..depth {
        let prev = classes.clone();
        for c in &prev {
            for on_x in [true, false] {
                let (v, mask) = if on_x { ("x", 1) } else { ("y", 2) };
                add(
                    Class { formula: Formula::forall(v, c.formula.clone()), free: c.free & !mask, bits: sp.forall(c.bits, on_x) },
                    &mut classes,
                );
                add(
                    Class { formula: Formula::exists(v, c.formula.clone()), free: c.free & !mask, bits: sp.exists(c.bits, on_x) },
                    &mut classes,
                );
            }
        }
        for l in &prev {
            for r in &prev {
                let free = l.free | r.free;
                add(Class { formula: Formula::and(l.formula.clone(), r.formula.clone()), free, bits: l.bits & r.bits }, &mut classes);
                add(Class { formula: Formula::or(l.formula.clone(), r.formula.clone()), free, bits: l.bits | r.bits }, &mut classes);
                add(
                    Class { formula: Formula::implies(l.formula.clone(), r.formula.clone()), free, bits: sp.imp(l.bits, r.bits) },
                    &mut classes,
                );
            }
        }
    }

    let mut oracle_mismatch = None;
    'oracle: for c in &classes {
        for (w, ex, ey) in sp.points() {
            let mut sub = BTreeMap::new();
            sub.insert("x".to_string(), Term::constant(m.frame.elements[ex].clone()));
            sub.insert("y".to_string(), Term::constant(m.frame.elements[ey].clone()));
            let inst = c.formula.substitute_many(&sub);
            if forces(m, w, &inst).unwrap() != sp.has(c.bits, w, ex, ey) {
                oracle_mismatch = Some(print_formula(&c.formula));
                break 'oracle;
            }
        }
    }

    let maximal: Vec<usize> = ["w2", "w3"].iter().filter_map(|n| m.frame.world(n)).collect();
    let a = m.frame.element("a").unwrap();
    let b = m.frame.element("b").unwrap();
    let unary: Vec<&Class> = classes.iter().filter(|c| c.free & 2 == 0).collect();
    let counterexample = unary
        .iter()
        .find(|c| maximal.iter().any(|&w| sp.has(c.bits, w, a, 0) != sp.has(c.bits, w, b, 0)))
        .map(|c| print_formula(&c.formula));
    ClaimReport {
        depth,
        classes: classes.len(),
        unary_classes: unary.len(),
        counterexample,
        oracle_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_at_depth_two() {
        let r = check_incompleteness_witness(2);
        assert!(r.lin_oep_refuted_at_w1);
        assert!(r.failing_instances.is_empty(), "{:?}", r.failing_instances);
        assert!(r.claim.holds(), "{:?}", r.claim);
        assert_eq!(r.atomic_instances_checked, 60);
    }

    #[test]
    fn ed_instance_is_forced_at_root() {
        let m = incompleteness_model();
        let f = parse_formula("(Q -> exists x. R(x)) -> exists x. (Q -> R(x))").unwrap();
        assert!(forces(&m, m.frame.world("w1").unwrap(), &f).unwrap());
    }

    #[test]
    fn claim_detects_a_separating_formula_at_the_root() {
        // At w1 the model does separate a from b (R(a) vs R(b)); the claim is
        // only about the maximal worlds, so check the evaluator sees that.
        let m = incompleteness_model();
        let w1 = m.frame.world("w1").unwrap();
        assert!(forces(&m, w1, &parse_formula("R(a)").unwrap()).unwrap());
        assert!(!forces(&m, w1, &parse_formula("R(b)").unwrap()).unwrap());
    }
}
