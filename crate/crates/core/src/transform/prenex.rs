//! Prenex normal forms over QFS, and the `ndq` measure that drives them.

use serde::Serialize;

use crate::shift::ShiftKind;
use crate::syntax::{fresh_name, Connective, Formula, Quantifier, Term};

/// Nesting depth of quantifiers: each quantifier occurrence counts the
/// number of binary connectives above it, and the counts are summed.
pub fn ndq(f: &Formula) -> usize {
    fn go(f: &Formula, depth: usize) -> usize {
        match f {
            Formula::Atom(..) | Formula::Bottom | Formula::Top => 0,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => go(l, depth + 1) + go(r, depth + 1),
            Formula::Forall(_, b) | Formula::Exists(_, b) => depth + go(b, depth),
        }
    }
    go(f, 0)
}

pub fn is_prenex(f: &Formula) -> bool {
    ndq(f) == 0
}

/// One quantifier pulled across a connective. `shift` is `None` when the
/// equivalence already holds in IQC.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftStep {
    pub shift: Option<ShiftKind>,
    pub before: Formula,
    pub after: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prenexed {
    pub formula: Formula,
    /// The non-IQC shifts, in the order they were applied.
    pub shifts_used: Vec<ShiftKind>,
    pub steps: Vec<ShiftStep>,
}

pub fn prenexify(f: &Formula) -> Formula {
    prenexify_traced(f).formula
}

pub fn prenexify_traced(f: &Formula) -> Prenexed {
    let mut steps = Vec::new();
    let formula = prenex(f, &mut steps);
    let shifts_used = steps.iter().filter_map(|s| s.shift).collect();
    Prenexed { formula, shifts_used, steps }
}

fn prenex(f: &Formula, steps: &mut Vec<ShiftStep>) -> Formula {
    match f {
        Formula::Atom(..) | Formula::Bottom | Formula::Top => f.clone(),
        Formula::Forall(x, b) => Formula::forall(x.clone(), prenex(b, steps)),
        Formula::Exists(x, b) => Formula::exists(x.clone(), prenex(b, steps)),
        _ => {
            let (c, l, r) = f.as_binary().unwrap();
            let l = prenex(l, steps);
            let r = prenex(r, steps);
            pull(c, l, r, steps)
        }
    }
}

/// `l ∘ r` with both operands prenex. Quantifiers come out of the left
/// operand first.
fn pull(c: Connective, l: Formula, r: Formula, steps: &mut Vec<ShiftStep>) -> Formula {
    let before = Formula::binary(c, l.clone(), r.clone());
    let (left, (q, x, body), other) = if let Some(qb) = l.as_quant() {
        (true, qb, &r)
    } else if let Some(qb) = r.as_quant() {
        (false, qb, &l)
    } else {
        return before;
    };
    let (x, body) = if other.has_free(x) {
        let mut used = before.all_vars();
        used.extend(other.all_vars());
        let y = fresh_name(x, &used);
        (y.clone(), body.substitute(x, &Term::var(y)))
    } else {
        (x.to_string(), body.clone())
    };
    let (outer, shift) = law(c, q, left);
    let inner = if left {
        Formula::binary(c, body, other.clone())
    } else {
        Formula::binary(c, other.clone(), body)
    };
    let after = Formula::quant(outer, x.clone(), inner.clone());
    steps.push(ShiftStep { shift, before, after });
    let (il, ir) = match inner.as_binary() {
        Some((_, a, b)) => (a.clone(), b.clone()),
        None => unreachable!(),
    };
    Formula::quant(outer, x, pull(c, il, ir, steps))
}

/// The quantifier a pull produces and the shift it needs beyond IQC.
fn law(c: Connective, q: Quantifier, from_left: bool) -> (Quantifier, Option<ShiftKind>) {
    use Quantifier::{Exists, Forall};
    match (c, q, from_left) {
        (Connective::Or, Forall, _) => (Forall, Some(ShiftKind::CD)),
        (Connective::Implies, Forall, true) => (Exists, Some(ShiftKind::SW)),
        (Connective::Implies, Exists, true) => (Forall, None),
        (Connective::Implies, Exists, false) => (Exists, Some(ShiftKind::ED)),
        _ => (q, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn ndq_values() {
        assert_eq!(ndq(&f("forall x. exists y. P(x, y)")), 0);
        assert_eq!(ndq(&f("forall x. (P(x) | Q)")), 0);
        assert_eq!(ndq(&f("(forall x. P(x)) | Q")), 1);
        assert_eq!(ndq(&f("((forall x. P(x)) -> Q) -> exists x. (P(x) -> Q)")), 3);
    }

    #[test]
    fn cd_case() {
        let r = prenexify_traced(&f("(forall x. P(x)) | Q"));
        assert_eq!(r.formula, f("forall x. (P(x) | Q)"));
        assert_eq!(r.shifts_used, vec![ShiftKind::CD]);
    }

    #[test]
    fn sw_case() {
        let r = prenexify_traced(&f("(forall x. P(x)) -> Q"));
        assert_eq!(r.formula, f("exists x. (P(x) -> Q)"));
        assert_eq!(r.shifts_used, vec![ShiftKind::SW]);
    }

    #[test]
    fn ed_and_iqc_cases() {
        let r = prenexify_traced(&f("Q -> exists x. P(x)"));
        assert_eq!(r.formula, f("exists x. (Q -> P(x))"));
        assert_eq!(r.shifts_used, vec![ShiftKind::ED]);

        let r = prenexify_traced(&f("(exists x. P(x)) -> Q"));
        assert_eq!(r.formula, f("forall x. (P(x) -> Q)"));
        assert!(r.shifts_used.is_empty());
        assert_eq!(r.steps.len(), 1);
    }

    #[test]
    fn prenex_input_is_unchanged() {
        let g = f("forall x. exists y. (P(x, y) -> Q)");
        let r = prenexify_traced(&g);
        assert_eq!(r.formula, g);
        assert!(r.steps.is_empty());
    }

    #[test]
    fn left_operand_first_and_renaming() {
        let r = prenexify_traced(&f("(forall x. P(x)) & exists x. R(x)"));
        assert_eq!(r.formula, f("forall x. exists x_1. (P(x) & R(x_1))"));
        let r = prenexify_traced(&f("(forall x. P(x)) & R(x)"));
        assert_eq!(r.formula, f("forall x_1. (P(x_1) & R(x))"));
    }

    #[test]
    fn each_step_lowers_ndq() {
        let r = prenexify_traced(&f("((forall x. P(x)) -> exists y. Q(y)) | (forall z. R(z)) & S"));
        assert!(is_prenex(&r.formula));
        for s in &r.steps {
            assert!(ndq(&s.after) < ndq(&s.before), "{} / {}", s.before, s.after);
        }
    }
}
