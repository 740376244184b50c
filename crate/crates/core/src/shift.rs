//! Instances of the quantifier-shift schemata CD, ED and SW.

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{Formula, Quantifier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShiftKind {
    /// `∀x(A(x)∨B) → ∀xA(x)∨B`
    CD,
    /// `(B→∃xA(x)) → ∃x(B→A(x))`
    ED,
    /// `(∀xA(x)→B) → ∃x(A(x)→B)`
    SW,
}

impl ShiftKind {
    pub const ALL: [ShiftKind; 3] = [ShiftKind::CD, ShiftKind::ED, ShiftKind::SW];

    pub fn name(self) -> &'static str {
        match self {
            ShiftKind::CD => "CD",
            ShiftKind::ED => "ED",
            ShiftKind::SW => "SW",
        }
    }
}

impl std::str::FromStr for ShiftKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "CD" => Ok(ShiftKind::CD),
            "ED" => Ok(ShiftKind::ED),
            "SW" => Ok(ShiftKind::SW),
            _ => Err(format!("unknown shift `{s}` (expected CD, ED or SW)")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShiftError {
    #[error("variable `{0}` occurs free in B")]
    FreeInB(String),
}

/// Builds the shift instance with `A(x) := a` (where `x` may occur free in
/// `a`) and `B := b`.
pub fn shift_axiom(kind: ShiftKind, a: &Formula, b: &Formula, x: &str) -> Result<Formula, ShiftError> {
    if b.has_free(x) {
        return Err(ShiftError::FreeInB(x.to_string()));
    }
    let all_a = Formula::forall(x, a.clone());
    let ex_a = Formula::exists(x, a.clone());
    Ok(match kind {
        ShiftKind::CD => Formula::implies(
            Formula::forall(x, Formula::or(a.clone(), b.clone())),
            Formula::or(all_a, b.clone()),
        ),
        ShiftKind::ED => Formula::implies(
            Formula::implies(b.clone(), ex_a),
            Formula::exists(x, Formula::implies(b.clone(), a.clone())),
        ),
        ShiftKind::SW => Formula::implies(
            Formula::implies(all_a, b.clone()),
            Formula::exists(x, Formula::implies(a.clone(), b.clone())),
        ),
    })
}

/// Recognises a shift instance, possibly under a prefix of universal
/// quantifiers (its universal closure).
pub fn match_shift_instance(f: &Formula) -> Option<ShiftKind> {
    let mut cur = f;
    loop {
        if let Some(k) = match_bare(cur) {
            return Some(k);
        }
        match cur {
            Formula::Forall(_, b) => cur = b,
            _ => return None,
        }
    }
}

fn match_bare(f: &Formula) -> Option<ShiftKind> {
    let Formula::Implies(lhs, rhs) = f else {
        return None;
    };
    // CD: ∀x(A ∨ B) → ∀xA ∨ B
    if let (Formula::Forall(x, body), Formula::Or(all_a, b2)) = (&**lhs, &**rhs) {
        if let (Formula::Or(a, b), Some((Quantifier::Forall, _, _))) = (&**body, all_a.as_quant()) {
            if !b.has_free(x)
                && b.alpha_eq(b2)
                && Formula::forall(x.clone(), (**a).clone()).alpha_eq(all_a)
            {
                return Some(ShiftKind::CD);
            }
        }
    }
    // ED: (B → ∃xA) → ∃x(B → A)
    if let (Formula::Implies(b, ex_a), Formula::Exists(x, body)) = (&**lhs, &**rhs) {
        if let (Formula::Implies(b2, a2), Some((Quantifier::Exists, _, _))) =
            (&**body, ex_a.as_quant())
        {
            if !b2.has_free(x)
                && b.alpha_eq(b2)
                && Formula::exists(x.clone(), (**a2).clone()).alpha_eq(ex_a)
            {
                return Some(ShiftKind::ED);
            }
        }
    }
    // SW: (∀xA → B) → ∃x(A → B)
    if let (Formula::Implies(all_a, b), Formula::Exists(x, body)) = (&**lhs, &**rhs) {
        if let (Formula::Implies(a2, b2), Some((Quantifier::Forall, _, _))) =
            (&**body, all_a.as_quant())
        {
            if !b2.has_free(x)
                && b.alpha_eq(b2)
                && Formula::forall(x.clone(), (**a2).clone()).alpha_eq(all_a)
            {
                return Some(ShiftKind::SW);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;
    use crate::syntax::Term;

    fn p_x() -> Formula {
        Formula::atom("P", vec![Term::var("x")])
    }

    #[test]
    fn builds_sw_and_cd() {
        let q = Formula::prop("Q");
        assert_eq!(
            shift_axiom(ShiftKind::SW, &p_x(), &q, "x").unwrap(),
            parse_formula("(forall x. P(x) -> Q) -> exists x. (P(x) -> Q)").unwrap()
        );
        assert_eq!(
            shift_axiom(ShiftKind::CD, &p_x(), &q, "x").unwrap(),
            parse_formula("forall x. (P(x) | Q) -> forall x. P(x) | Q").unwrap()
        );
    }

    #[test]
    fn side_condition_on_b() {
        let py = Formula::atom("P", vec![Term::var("y")]);
        assert!(shift_axiom(ShiftKind::ED, &p_x(), &py, "x").is_ok());
        assert_eq!(
            shift_axiom(ShiftKind::ED, &p_x(), &p_x(), "x"),
            Err(ShiftError::FreeInB("x".into()))
        );
    }

    #[test]
    fn recognises_instances_and_closures() {
        for k in ShiftKind::ALL {
            let f = shift_axiom(k, &p_x(), &Formula::prop("Q"), "x").unwrap();
            assert_eq!(match_shift_instance(&f), Some(k));
        }
        let a = Formula::atom("R", vec![Term::var("x"), Term::var("z")]);
        let f = shift_axiom(ShiftKind::SW, &a, &Formula::prop("Q"), "x").unwrap();
        assert_eq!(match_shift_instance(&Formula::forall("z", f)), Some(ShiftKind::SW));
        let lin = parse_formula("(P -> Q) | (Q -> P)").unwrap();
        assert_eq!(match_shift_instance(&lin), None);
    }
}
