use std::collections::BTreeSet;

use super::proof::{Proof, Rule};
use crate::syntax::{fresh_name, Formula, Sequent, Term};

fn seq(a: Vec<Formula>, s: Vec<Formula>) -> Sequent {
    Sequent::new(a, s)
}

/// An LJ proof of `f ⇒ f` whose axioms are atomic, by induction on `f`.
/// The proof is regular: every strong inference has its own eigenvariable.
pub fn expand_axiom(f: &Formula) -> Proof {
    expand(f, &mut f.all_vars())
}

fn expand(f: &Formula, used: &mut BTreeSet<String>) -> Proof {
    let id = seq(vec![f.clone()], vec![f.clone()]);
    match f {
        Formula::Atom(..) => Proof::leaf(Rule::Ax, id),
        Formula::Bottom => Proof::node(Rule::Rw, 0, id, vec![Proof::leaf(Rule::Bot, seq(vec![Formula::Bottom], vec![]))]),
        Formula::Top => Proof::node(Rule::Lw, 0, id, vec![Proof::leaf(Rule::Top, seq(vec![], vec![Formula::Top]))]),
        Formula::And(a, b) => {
            let left = Proof::node(Rule::AndL1, 0, seq(vec![f.clone()], vec![(**a).clone()]), vec![expand(a, used)]);
            let right = Proof::node(Rule::AndL2, 0, seq(vec![f.clone()], vec![(**b).clone()]), vec![expand(b, used)]);
            Proof::node(Rule::AndR, 0, id, vec![left, right])
        }
        Formula::Or(a, b) => {
            let left = Proof::node(Rule::OrR1, 0, seq(vec![(**a).clone()], vec![f.clone()]), vec![expand(a, used)]);
            let right = Proof::node(Rule::OrR2, 0, seq(vec![(**b).clone()], vec![f.clone()]), vec![expand(b, used)]);
            Proof::node(Rule::OrL, 0, id, vec![left, right])
        }
        Formula::Implies(a, b) => {
            let imp_l = Proof::node(
                Rule::ImpL,
                0,
                seq(vec![f.clone(), (**a).clone()], vec![(**b).clone()]),
                vec![expand(a, used), expand(b, used)],
            );
            Proof::node(Rule::ImpR, 0, id, vec![imp_l])
        }
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            let y = fresh_name(x, used);
            used.insert(y.clone());
            let inst = body.substitute(x, &Term::var(y.clone()));
            let top = expand(&inst, used);
            if matches!(f, Formula::Forall(..)) {
                let weak = Proof::quant(Rule::ForallL, 0, Term::var(y.clone()), seq(vec![f.clone()], vec![inst]), top);
                Proof::quant(Rule::ForallR, 0, Term::var(y), id, weak)
            } else {
                let weak = Proof::quant(Rule::ExistsR, 0, Term::var(y.clone()), seq(vec![inst], vec![f.clone()]), top);
                Proof::quant(Rule::ExistsL, 0, Term::var(y), id, weak)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check, System};
    use crate::parser::parse_formula;

    #[test]
    fn expansions_check_in_lj() {
        for src in [
            "P",
            "_|_",
            "T",
            "A & B",
            "A | B",
            "A -> B",
            "forall x. A(x)",
            "exists x. forall y. (R(x,y) -> ~R(y,x) | T)",
            "forall x. forall x_1. R(x, x_1)",
            "(forall x. P(x)) -> forall x. P(x)",
        ] {
            let f = parse_formula(src).unwrap();
            let p = expand_axiom(&f);
            let r = check(&p, System::LJ);
            assert!(r.accepted(), "{src}: {:?}", r.violations);
            assert!(check(&p, System::LJpp).accepted(), "{src}");
            assert!(p.has_atomic_axioms(), "{src}");
            assert_eq!(p.conclusion, Sequent::new(vec![f.clone()], vec![f]));
        }
    }

    #[test]
    fn atom_is_a_single_axiom() {
        assert_eq!(expand_axiom(&parse_formula("P(x)").unwrap()).size(), 1);
    }
}
