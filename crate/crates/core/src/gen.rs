//! Seeded random formulas, Kripke models and proof mutations, for property
//! tests and the `--seed` flag of the command-line tool.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::calculus::{Proof, Rule};
use crate::kripke::{Frame, KripkeError, Model};
use crate::syntax::{Formula, Sequent, Term};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Predicates, constants and variable names a generator draws from.
#[derive(Clone, Debug)]
pub struct Signature {
    pub predicates: Vec<(String, usize)>,
    pub constants: Vec<String>,
    pub functions: Vec<(String, usize)>,
    pub variables: Vec<String>,
}

impl Default for Signature {
    fn default() -> Self {
        Signature {
            predicates: vec![("P".into(), 1), ("Q".into(), 0), ("R".into(), 2)],
            constants: vec!["c".into(), "d".into()],
            functions: vec![("f".into(), 1)],
            variables: vec!["x".into(), "y".into(), "z".into()],
        }
    }
}

impl Signature {
    /// Function-free, for evaluation over finite models.
    pub fn relational() -> Self {
        Signature { functions: Vec::new(), ..Signature::default() }
    }
}

fn random_term<R: Rng>(rng: &mut R, sig: &Signature, scope: &[String], depth: usize) -> Term {
    let roll = rng.gen_range(0..10);
    if depth > 0 && roll == 0 && !sig.functions.is_empty() {
        let (f, n) = sig.functions.choose(rng).unwrap();
        return Term::app(f.clone(), (0..*n).map(|_| random_term(rng, sig, scope, depth - 1)).collect());
    }
    if !scope.is_empty() && (roll < 7 || sig.constants.is_empty()) {
        return Term::var(scope.choose(rng).unwrap().clone());
    }
    Term::constant(sig.constants.choose(rng).unwrap().clone())
}

fn random_rec<R: Rng>(rng: &mut R, sig: &Signature, scope: &mut Vec<String>, depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_range(0..4) == 0;
    if leaf {
        return match rng.gen_range(0..12) {
            0 => Formula::Bottom,
            1 => Formula::Top,
            _ => {
                let (p, n) = sig.predicates.choose(rng).unwrap();
                Formula::atom(p.clone(), (0..*n).map(|_| random_term(rng, sig, scope, 1)).collect())
            }
        };
    }
    match rng.gen_range(0..5) {
        0 => Formula::and(random_rec(rng, sig, scope, depth - 1), random_rec(rng, sig, scope, depth - 1)),
        1 => Formula::or(random_rec(rng, sig, scope, depth - 1), random_rec(rng, sig, scope, depth - 1)),
        2 => Formula::implies(random_rec(rng, sig, scope, depth - 1), random_rec(rng, sig, scope, depth - 1)),
        k => {
            let x = sig.variables.choose(rng).unwrap().clone();
            scope.push(x.clone());
            let body = random_rec(rng, sig, scope, depth - 1);
            scope.pop();
            if k == 3 {
                Formula::forall(x, body)
            } else {
                Formula::exists(x, body)
            }
        }
    }
}

/// A closed formula of depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Formula {
    random_rec(rng, sig, &mut Vec::new(), depth)
}

/// A model with up to `max_worlds` worlds (a random tree order), growing
/// domains of up to `max_domain` elements and a random persistent
/// valuation of `sig.predicates`. Elements are named after `sig.constants`
/// first, so closed formulas over the signature can be evaluated.
pub fn random_model<R: Rng>(rng: &mut R, sig: &Signature, max_worlds: usize, max_domain: usize) -> Result<Model, KripkeError> {
    let n = rng.gen_range(1..=max_worlds.max(1));
    let worlds: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let parent: Vec<Option<usize>> = (0..n).map(|i| (i > 0).then(|| rng.gen_range(0..i))).collect();
    let order: Vec<(String, String)> = parent
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (worlds[p].clone(), worlds[i].clone())))
        .collect();

    let size = max_domain.max(sig.constants.len()).max(1);
    let elements: Vec<String> = sig
        .constants
        .iter()
        .cloned()
        .chain((sig.constants.len()..size).map(|i| format!("e{i}")))
        .collect();
    // Constants live everywhere; extra elements appear along the tree.
    let base = sig.constants.len().max(1);
    let mut sizes = vec![0usize; n];
    for i in 0..n {
        let floor = parent[i].map_or(base, |p| sizes[p]);
        sizes[i] = rng.gen_range(floor..=size.max(floor));
    }
    let domains: Vec<Vec<String>> = sizes.iter().map(|&k| elements[..k].to_vec()).collect();
    let frame = Frame::new(worlds, &order, domains)?;

    let mut atoms: Vec<Vec<(String, Vec<String>)>> = vec![Vec::new(); n];
    for i in 0..n {
        if let Some(p) = parent[i] {
            atoms[i] = atoms[p].clone();
        }
        for (pred, arity) in &sig.predicates {
            for tuple in tuples(sizes[i], *arity) {
                let fact = (pred.clone(), tuple.iter().map(|&e| elements[e].clone()).collect::<Vec<_>>());
                if !atoms[i].contains(&fact) && rng.gen_bool(0.35) {
                    atoms[i].push(fact);
                }
            }
        }
    }
    Model::new(frame, atoms)
}

fn tuples(size: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..size).map(move |e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out
}

/// Edits that turn a correct proof into an incorrect one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Adds a fresh atom to one side of a node's conclusion.
    ExtraFormula,
    DropPremise,
    /// Replaces a quantifier rule's term with a fresh variable, at a node
    /// whose bound variable occurs in the quantified body.
    FreshTerm,
    /// Relabels an `ax` leaf as `bot`.
    AxiomToBot,
    /// Replaces a rule tag by another tag of the same arity. Twin rules
    /// (`and-l1`/`and-l2`, `or-r1`/`or-r2`) are not swapped for each other,
    /// since both fit a principal formula `A ∧ A` or `A ∨ A`.
    SwapRule,
}

impl Mutation {
    pub const ALL: [Mutation; 5] =
        [Mutation::ExtraFormula, Mutation::DropPremise, Mutation::FreshTerm, Mutation::AxiomToBot, Mutation::SwapRule];
}

const FRESH_ATOM: &str = "Zmut";
const FRESH_VAR: &str = "vmut";

fn applies(m: Mutation, n: &Proof) -> bool {
    match m {
        Mutation::ExtraFormula => true,
        Mutation::DropPremise => !n.premises.is_empty(),
        Mutation::FreshTerm => {
            n.rule.is_quantifier()
                && n.principal_formula().and_then(Formula::as_quant).is_some_and(|(_, x, body)| body.has_free(x))
        }
        Mutation::AxiomToBot => n.rule == Rule::Ax,
        Mutation::SwapRule => !swaps(n.rule).is_empty(),
    }
}

fn twins(a: Rule, b: Rule) -> bool {
    use Rule::*;
    matches!((a, b), (AndL1, AndL2) | (AndL2, AndL1) | (OrR1, OrR2) | (OrR2, OrR1))
}

fn swaps(r: Rule) -> Vec<Rule> {
    Rule::ALL.into_iter().filter(|&s| s != r && s.arity() == r.arity() && !twins(r, s)).collect()
}

/// Applies `m` at a random applicable node; `None` when no node qualifies.
pub fn mutate<R: Rng>(rng: &mut R, p: &Proof, m: Mutation) -> Option<Proof> {
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    p.walk(&mut |path, n| {
        if applies(m, n) {
            candidates.push(path.to_vec());
        }
    });
    let path = candidates.choose(rng)?.clone();
    let mut out = p.clone();
    let n = out.at_mut(&path).unwrap();
    match m {
        Mutation::ExtraFormula => {
            let atom = Formula::prop(FRESH_ATOM);
            if rng.gen_bool(0.5) {
                n.conclusion.antecedent.push(atom);
            } else {
                n.conclusion.succedent.push(atom);
            }
        }
        Mutation::DropPremise => {
            let k = rng.gen_range(0..n.premises.len());
            n.premises.remove(k);
        }
        Mutation::FreshTerm => n.term = Some(Term::var(FRESH_VAR)),
        Mutation::AxiomToBot => n.rule = Rule::Bot,
        Mutation::SwapRule => n.rule = *swaps(n.rule).choose(rng).unwrap(),
    }
    Some(out)
}

/// A random identity proof `A ⇒ A` for a random formula `A`.
pub fn random_identity_proof<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Proof {
    crate::calculus::expand_axiom(&random_formula(rng, sig, depth))
}

/// A random sequent of closed formulas.
pub fn random_sequent<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Sequent {
    let a = (0..rng.gen_range(0..3)).map(|_| random_formula(rng, sig, depth)).collect();
    let s = (0..rng.gen_range(0..3)).map(|_| random_formula(rng, sig, depth)).collect();
    Sequent::new(a, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check, System};

    #[test]
    fn generators_are_deterministic() {
        let sig = Signature::default();
        let a: Vec<Formula> = (0..5).map(|_| random_formula(&mut seeded(7), &sig, 4)).collect();
        let b: Vec<Formula> = (0..5).map(|_| random_formula(&mut seeded(7), &sig, 4)).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(Formula::is_closed));
    }

    #[test]
    fn random_models_are_well_formed() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            random_model(&mut rng, &Signature::relational(), 4, 3).unwrap();
        }
    }

    #[test]
    fn mutations_break_identity_proofs() {
        let mut rng = seeded(11);
        let sig = Signature::default();
        for _ in 0..20 {
            let p = random_identity_proof(&mut rng, &sig, 3);
            assert!(check(&p, System::LJ).accepted());
            for m in Mutation::ALL {
                if let Some(q) = mutate(&mut rng, &p, m) {
                    assert!(!check(&q, System::LK).accepted(), "{m:?}");
                }
            }
        }
    }
}
