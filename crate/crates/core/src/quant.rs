//! Polarity and strong/weak classification of quantifier occurrences.

use serde::Serialize;

use crate::syntax::{Formula, Quantifier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Strong,
    Weak,
}

pub fn strength_of(q: Quantifier, polarity: Polarity) -> Strength {
    match (q, polarity) {
        (Quantifier::Forall, Polarity::Positive) | (Quantifier::Exists, Polarity::Negative) => {
            Strength::Strong
        }
        _ => Strength::Weak,
    }
}

/// One quantifier occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub path: Vec<usize>,
    pub polarity: Polarity,
    pub strength: Strength,
    pub quantifier: Quantifier,
    pub bound_var: String,
    /// Weak-quantifier variables whose scope contains this occurrence, outermost first.
    pub dominating_weak_vars: Vec<String>,
}

/// All quantifier occurrences in left-to-right textual order.
pub fn classify_quantifiers(f: &Formula) -> Vec<Occurrence> {
    classify_with_polarity(f, Polarity::Positive)
}

/// As [`classify_quantifiers`] with the root at the given polarity. Passing
/// `Negative` classifies an antecedent formula by strength-in-sequent.
pub fn classify_with_polarity(f: &Formula, root: Polarity) -> Vec<Occurrence> {
    let mut out = Vec::new();
    walk(f, root, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn walk(
    f: &Formula,
    pol: Polarity,
    path: &mut Vec<usize>,
    weak: &mut Vec<String>,
    out: &mut Vec<Occurrence>,
) {
    match f {
        Formula::Atom(..) | Formula::Bottom | Formula::Top => {}
        Formula::And(l, r) | Formula::Or(l, r) => {
            path.push(0);
            walk(l, pol, path, weak, out);
            path.pop();
            path.push(1);
            walk(r, pol, path, weak, out);
            path.pop();
        }
        Formula::Implies(l, r) => {
            path.push(0);
            walk(l, pol.flip(), path, weak, out);
            path.pop();
            path.push(1);
            walk(r, pol, path, weak, out);
            path.pop();
        }
        Formula::Forall(v, b) | Formula::Exists(v, b) => {
            let q = f.as_quant().unwrap().0;
            let strength = strength_of(q, pol);
            out.push(Occurrence {
                path: path.clone(),
                polarity: pol,
                strength,
                quantifier: q,
                bound_var: v.clone(),
                dominating_weak_vars: weak.clone(),
            });
            if strength == Strength::Weak {
                weak.push(v.clone());
            }
            path.push(0);
            walk(b, pol, path, weak, out);
            path.pop();
            if strength == Strength::Weak {
                weak.pop();
            }
        }
    }
}

/// Polarity of the node at `path` (root polarity positive).
pub fn polarity_at(f: &Formula, path: &[usize]) -> Polarity {
    let mut pol = Polarity::Positive;
    let mut cur = f;
    for &i in path {
        if matches!(cur, Formula::Implies(..)) && i == 0 {
            pol = pol.flip();
        }
        cur = cur.children()[i];
    }
    pol
}
