//! Shared strategies, oracles and property suites for the integration tests.
//! Each suite returns `Err` with a description of the first failure so the
//! acceptance target can report it as a line instead of panicking.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use qshift::calculus::{check, Proof, SideVariableGraph, System};
use qshift::cd5::{Cd5Value, Interpretation};
use qshift::gen::{self, Mutation, Signature};
use qshift::kripke::{forces, forces_naive, Model};
use qshift::parser::{parse_formula, parse_proof, parse_sequent_file, print_formula};
use qshift::quant::{classify_quantifiers, Strength};
use qshift::skolem::{skolemize, SkolemMode};
use qshift::syntax::Quantifier;
use qshift::transform::{correct_ljpp, deskolemize, ndq, prenexify_traced};
use qshift::{Formula, Sequent, Term};

/// Seed pinned for every property suite.
pub const SEED: [u8; 32] = *b"qshift-pinned-property-seed-0001";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_shrink_iters: 256, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

pub fn corpus_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(file)
}

pub fn corpus_text(file: &str) -> String {
    std::fs::read_to_string(corpus_path(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn corpus_proof(file: &str) -> Proof {
    parse_proof(&corpus_text(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn corpus_sequent(file: &str) -> Sequent {
    parse_sequent_file(&corpus_text(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

pub fn f(s: &str) -> Formula {
    parse_formula(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Corpus proofs accepted by LJ++.
pub const LJPP_PROOFS: [&str; 6] =
    ["sw_ljpp.prf", "ed_ljpp.prf", "cd_ljpp.prf", "unsound_ex.prf", "cd_sk.prf", "forall_exists_sk.prf"];

// ---------------------------------------------------------------- strategies

const VARS: [&str; 3] = ["x", "y", "z"];

fn arb_term(functions: bool) -> BoxedStrategy<Term> {
    let leaf = prop_oneof![
        3 => prop::sample::select(&VARS[..]).prop_map(Term::var),
        1 => prop::sample::select(&["c", "d"][..]).prop_map(Term::constant),
    ];
    if !functions {
        return leaf.boxed();
    }
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("f", vec![t])),
            (inner.clone(), inner).prop_map(|(a, b)| Term::app("g", vec![a, b])),
        ]
    })
    .boxed()
}

/// Formulas over `P/1, Q/0, R/2`, nesting depth at most `depth`.
pub fn arb_formula(depth: u32, functions: bool) -> BoxedStrategy<Formula> {
    let t = arb_term(functions);
    let leaf = prop_oneof![
        1 => Just(Formula::Bottom),
        1 => Just(Formula::Top),
        2 => Just(Formula::prop("Q")),
        4 => t.clone().prop_map(|a| Formula::atom("P", vec![a])),
        3 => (t.clone(), t).prop_map(|(a, b)| Formula::atom("R", vec![a, b])),
    ];
    leaf.prop_recursive(depth, 48, 2, |inner| {
        let var = prop::sample::select(&VARS[..]);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::not),
            (var.clone(), inner.clone()).prop_map(|(x, b)| Formula::forall(x, b)),
            (var, inner).prop_map(|(x, b)| Formula::exists(x, b)),
        ]
    })
    .boxed()
}

/// Universal closure.
pub fn close(f: Formula) -> Formula {
    f.free_vars().into_iter().rev().fold(f, |acc, x| Formula::forall(x, acc))
}

pub fn arb_closed(depth: u32, functions: bool) -> BoxedStrategy<Formula> {
    arb_formula(depth, functions).prop_map(close).boxed()
}

// ---------------------------------------------------- classical brute force

/// A classical structure for `P/1, Q/0, R/2` and constants `c, d`.
#[derive(Clone, Debug)]
pub struct Classical {
    pub size: usize,
    pub c: usize,
    pub d: usize,
    pub p: Vec<bool>,
    pub q: bool,
    pub r: Vec<Vec<bool>>,
}

/// Every structure with a domain of `size` elements.
pub fn classical_structures(size: usize) -> Vec<Classical> {
    let cells = size + 1 + size * size;
    let mut out = Vec::new();
    for bits in 0u32..(1 << cells) {
        let bit = |i: usize| bits >> i & 1 == 1;
        for c in 0..size {
            for d in 0..size {
                out.push(Classical {
                    size,
                    c,
                    d,
                    p: (0..size).map(bit).collect(),
                    q: bit(size),
                    r: (0..size).map(|a| (0..size).map(|b| bit(size + 1 + a * size + b)).collect()).collect(),
                });
            }
        }
    }
    out
}

fn classical_term(m: &Classical, t: &Term, env: &BTreeMap<String, usize>) -> usize {
    match t {
        Term::Var(v) => env[v],
        Term::App(n, args) if args.is_empty() && n == "c" => m.c,
        Term::App(n, args) if args.is_empty() && n == "d" => m.d,
        _ => panic!("term outside the relational signature: {t}"),
    }
}

pub fn classical_eval(m: &Classical, f: &Formula, env: &mut BTreeMap<String, usize>) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Top => true,
        Formula::Atom(p, args) => {
            let a: Vec<usize> = args.iter().map(|t| classical_term(m, t, env)).collect();
            match (p.as_str(), a.as_slice()) {
                ("P", [x]) => m.p[*x],
                ("Q", []) => m.q,
                ("R", [x, y]) => m.r[*x][*y],
                _ => panic!("atom outside the relational signature: {f}"),
            }
        }
        Formula::And(l, r) => classical_eval(m, l, env) && classical_eval(m, r, env),
        Formula::Or(l, r) => classical_eval(m, l, env) || classical_eval(m, r, env),
        Formula::Implies(l, r) => !classical_eval(m, l, env) || classical_eval(m, r, env),
        Formula::Forall(x, b) | Formula::Exists(x, b) => {
            let all = matches!(f, Formula::Forall(..));
            let saved = env.get(x).copied();
            let mut result = all;
            for e in 0..m.size {
                env.insert(x.clone(), e);
                if classical_eval(m, b, env) != all {
                    result = !all;
                    break;
                }
            }
            match saved {
                Some(e) => env.insert(x.clone(), e),
                None => env.remove(x),
            };
            result
        }
    }
}

/// `a` and `b` agree in every structure with 1 or 2 elements.
pub fn classically_equivalent(a: &Formula, b: &Formula) -> Result<(), String> {
    for size in 1..=2 {
        for m in classical_structures(size) {
            let va = classical_eval(&m, a, &mut BTreeMap::new());
            let vb = classical_eval(&m, b, &mut BTreeMap::new());
            if va != vb {
                return Err(format!("`{a}` and `{b}` differ in {m:?}"));
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------------- suites

pub fn parser_round_trip(cases: u32) -> Result<(), String> {
    run(cases, arb_formula(6, true), |g| {
        let text = print_formula(&g);
        let back = parse_formula(&text).map_err(|e| TestCaseError::fail(format!("`{text}`: {e}")))?;
        prop_assert_eq!(back, g, "text `{}`", text);
        Ok(())
    })
}

fn arb_model_and_formula() -> impl Strategy<Value = (u64, Formula)> {
    (any::<u64>(), arb_closed(4, false))
}

fn model_for(seed: u64) -> Model {
    gen::random_model(&mut gen::seeded(seed), &Signature::relational(), 4, 3).unwrap()
}

pub fn forcing_persistence(cases: u32) -> Result<(), String> {
    run(cases, arb_model_and_formula(), |(seed, g)| {
        let m = model_for(seed);
        let n = m.frame.len();
        let mut forced = Vec::with_capacity(n);
        for w in 0..n {
            let a = forces(&m, w, &g).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let b = forces_naive(&m, w, &g).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(a, b, "forces and the naive oracle differ at {}", m.frame.worlds[w]);
            forced.push(a);
        }
        for v in 0..n {
            for w in 0..n {
                if m.frame.leq[v][w] && forced[v] {
                    prop_assert!(forced[w], "`{}` forced at {} but not at {}", g, m.frame.worlds[v], m.frame.worlds[w]);
                }
            }
        }
        Ok(())
    })
}

/// Base proofs for the mutation fuzz and the system each is accepted in.
fn mutation_bases() -> Vec<(Proof, System)> {
    let mut out: Vec<(Proof, System)> = LJPP_PROOFS.iter().map(|p| (corpus_proof(p), System::LJpp)).collect();
    let mut rng = gen::seeded(5);
    for _ in 0..10 {
        out.push((gen::random_identity_proof(&mut rng, &Signature::default(), 3), System::LJ));
    }
    out
}

/// Every mutation of an accepted proof is rejected; returns the number of
/// mutations performed.
pub fn mutation_fuzz(cases: u32) -> Result<usize, String> {
    let bases = mutation_bases();
    for (p, sys) in &bases {
        if !check(p, *sys).accepted() {
            return Err(format!("base proof not accepted in {}:\n{}", sys.name(), qshift::parser::print_proof(p)));
        }
    }
    let count = std::cell::Cell::new(0usize);
    run(cases, (0..bases.len(), 0..Mutation::ALL.len(), any::<u64>()), |(b, m, seed)| {
        let (p, sys) = &bases[b];
        let mut rng = gen::seeded(seed);
        // The first applicable mutation, starting from `m`.
        let q = (0..Mutation::ALL.len())
            .find_map(|k| gen::mutate(&mut rng, p, Mutation::ALL[(m + k) % Mutation::ALL.len()]))
            .expect("some mutation applies");
        count.set(count.get() + 1);
        prop_assert!(!check(&q, *sys).accepted(), "mutant accepted:\n{}", qshift::parser::print_proof(&q));
        Ok(())
    })?;
    Ok(count.get())
}

pub fn lattice_laws() -> Result<(), String> {
    let all = Cd5Value::ALL;
    for a in all {
        if a.sup(a) != a || a.inf(a) != a {
            return Err(format!("idempotence fails at {a}"));
        }
        for b in all {
            if a.sup(b) != b.sup(a) || a.inf(b) != b.inf(a) {
                return Err(format!("commutativity fails at {a}, {b}"));
            }
            if a.sup(a.inf(b)) != a || a.inf(a.sup(b)) != a {
                return Err(format!("absorption fails at {a}, {b}"));
            }
            if all.iter().all(|&z| z != a.sup(b)) || all.iter().all(|&z| z != a.inf(b)) {
                return Err(format!("{a}, {b} leave the lattice"));
            }
            if a.implies(b).is_designated() != a.leq(b) {
                return Err(format!("{a} -> {b} designated iff {a} <= {b} fails"));
            }
            // Residuation: z ⊓ a ≤ b iff z ≤ (a → b).
            for z in all {
                if z.inf(a).leq(b) != z.leq(a.implies(b)) {
                    return Err(format!("residuation fails at {z}, {a}, {b}"));
                }
            }
            for c in all {
                if a.sup(b.sup(c)) != a.sup(b).sup(c) || a.inf(b.inf(c)) != a.inf(b).inf(c) {
                    return Err(format!("associativity fails at {a}, {b}, {c}"));
                }
            }
        }
    }
    Ok(())
}

// ----------------------------------------------------------- CD5 strategies

pub fn arb_value() -> impl Strategy<Value = Cd5Value> {
    prop::sample::select(&Cd5Value::ALL[..])
}

/// Interpretations of `P/1, Q/0, R/2, c, d` over one or two elements.
pub fn arb_interpretation() -> impl Strategy<Value = Interpretation> {
    (1usize..=2).prop_flat_map(|n| {
        (
            prop::collection::vec(arb_value(), n),
            arb_value(),
            prop::collection::vec(arb_value(), n * n),
            0..n,
            0..n,
        )
            .prop_map(move |(p, q, r, c, d)| {
                let domain: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
                let mut preds = BTreeMap::new();
                preds.insert("P".to_string(), p.into_iter().enumerate().map(|(i, v)| (vec![i], v)).collect());
                preds.insert("Q".to_string(), BTreeMap::from([(vec![], q)]));
                preds.insert("R".to_string(), r.into_iter().enumerate().map(|(i, v)| (vec![i / n, i % n], v)).collect());
                let mut funcs = BTreeMap::new();
                funcs.insert("c".to_string(), BTreeMap::from([(vec![], c)]));
                funcs.insert("d".to_string(), BTreeMap::from([(vec![], d)]));
                Interpretation { domain, predicates: preds, functions: funcs }
            })
    })
}

/// Formulas without implication, for monotonicity.
pub fn arb_positive(depth: u32) -> BoxedStrategy<Formula> {
    arb_closed(depth, false)
        .prop_filter("implication-free", |g| {
            let mut ok = true;
            g.walk(&mut |h| ok &= !matches!(h, Formula::Implies(..)));
            ok
        })
        .boxed()
}

// ------------------------------------------------------------------ helpers

pub fn strong_count(g: &Formula) -> usize {
    classify_quantifiers(g).iter().filter(|o| o.strength == Strength::Strong).count()
}

/// Erases strong quantifiers, tracking polarity independently of `quant`.
pub fn erase_strong(g: &Formula, positive: bool) -> Formula {
    match g {
        Formula::Atom(..) | Formula::Bottom | Formula::Top => g.clone(),
        Formula::And(l, r) => Formula::and(erase_strong(l, positive), erase_strong(r, positive)),
        Formula::Or(l, r) => Formula::or(erase_strong(l, positive), erase_strong(r, positive)),
        Formula::Implies(l, r) => Formula::implies(erase_strong(l, !positive), erase_strong(r, positive)),
        Formula::Forall(x, b) | Formula::Exists(x, b) => {
            let forall = matches!(g, Formula::Forall(..));
            let body = erase_strong(b, positive);
            if forall == positive {
                body
            } else {
                Formula::quant(if forall { Quantifier::Forall } else { Quantifier::Exists }, x.clone(), body)
            }
        }
    }
}

/// The connective and quantifier structure, with atoms reduced to their
/// predicate and bound variables dropped.
pub fn shape(g: &Formula) -> String {
    match g {
        Formula::Atom(p, _) => p.clone(),
        Formula::Bottom => "F".into(),
        Formula::Top => "T".into(),
        Formula::And(l, r) => format!("({}&{})", shape(l), shape(r)),
        Formula::Or(l, r) => format!("({}|{})", shape(l), shape(r)),
        Formula::Implies(l, r) => format!("({}>{})", shape(l), shape(r)),
        Formula::Forall(_, b) => format!("A{}", shape(b)),
        Formula::Exists(_, b) => format!("E{}", shape(b)),
    }
}

/// Renames every bound variable to `b0, b1, ...` in pre-order.
pub fn rename_all_bound(g: &Formula) -> Formula {
    fn go(g: &Formula, next: &mut usize) -> Formula {
        match g {
            Formula::Atom(..) | Formula::Bottom | Formula::Top => g.clone(),
            Formula::And(l, r) => Formula::and(go(l, next), go(r, next)),
            Formula::Or(l, r) => Formula::or(go(l, next), go(r, next)),
            Formula::Implies(l, r) => Formula::implies(go(l, next), go(r, next)),
            Formula::Forall(x, b) | Formula::Exists(x, b) => {
                let y = format!("b{next}");
                *next += 1;
                let body = go(&b.substitute(x, &Term::var(y.clone())), next);
                let q = if matches!(g, Formula::Forall(..)) { Quantifier::Forall } else { Quantifier::Exists };
                Formula::quant(q, y, body)
            }
        }
    }
    go(g, &mut 0)
}

/// Removes one copy of each of `hyps` from the antecedent of `s`.
pub fn without_hypotheses(s: &Sequent, hyps: &[Formula]) -> Option<Sequent> {
    let mut ante = s.antecedent.clone();
    for h in hyps {
        let i = ante.iter().position(|g| g.alpha_eq(h))?;
        ante.remove(i);
    }
    Some(Sequent::new(ante, s.succedent.clone()))
}

/// `correct_ljpp` on `p` gives an LJ proof of `p`'s end-sequent plus the
/// closed hypotheses.
pub fn correction_is_sound(p: &Proof) -> Result<(), String> {
    let r = correct_ljpp(p).map_err(|e| e.to_string())?;
    let report = check(&r.proof, System::LJ);
    if !report.accepted() {
        return Err(format!("corrected proof rejected by LJ: {:?}", report.violations));
    }
    let rest = without_hypotheses(&r.proof.conclusion, &r.closed_hypotheses)
        .ok_or_else(|| format!("hypotheses missing from `{}`", r.proof.conclusion))?;
    if !rest.alpha_eq(&p.conclusion) {
        return Err(format!("end-sequent `{}` minus hypotheses is not `{}`", r.proof.conclusion, p.conclusion));
    }
    Ok(())
}

/// deSkolemizing `sk` against `target` gives a cut-free LJ++ proof of the
/// target with the same propositional skeleton.
pub fn deskolemization_round_trip(sk: &Proof, target: &Sequent) -> Result<Proof, String> {
    let out = deskolemize(sk, target).map_err(|e| e.to_string())?;
    if !out.conclusion.alpha_eq(target) {
        return Err(format!("end-sequent `{}` is not `{target}`", out.conclusion));
    }
    if !check(&out, System::LJpp).accepted() {
        return Err(format!("LJ++ rejects the output: {:?}", check(&out, System::LJpp).violations));
    }
    if !out.is_cut_free() {
        return Err("output has cuts".into());
    }
    if out.skeleton() != sk.skeleton() {
        return Err("propositional skeleton changed".into());
    }
    Ok(out)
}

pub fn side_variable_dag(p: &Proof) -> Result<(), String> {
    let g = SideVariableGraph::of(p);
    if !g.is_acyclic() || g.topological_order().is_none() {
        return Err(format!("side-variable cycle: {:?}", g.cycles()));
    }
    Ok(())
}

pub fn prenex_suite(formulas: &[Formula]) -> Result<(), String> {
    for g in formulas {
        let r = prenexify_traced(g);
        if ndq(&r.formula) != 0 {
            return Err(format!("`{}` is not prenex", r.formula));
        }
        classically_equivalent(g, &r.formula)?;
    }
    Ok(())
}

pub fn skolem_modes() -> [SkolemMode; 3] {
    [SkolemMode::Structural, SkolemMode::Andrews, SkolemMode::Parallel(2)]
}

pub fn skolemize_ok(g: &Formula, mode: SkolemMode) -> (Formula, qshift::skolem::SkolemSignature) {
    skolemize(g, mode).unwrap_or_else(|e| panic!("{g} ({mode}): {e}"))
}
