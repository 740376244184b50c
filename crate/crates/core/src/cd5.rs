//! The 5-valued lattice logic CD₅.
//!
//! Values are triples `(a, b, c)` read as truth at the two maximal worlds
//! (`a`, `b`) and at the root (`c`) of a constant-domain fork, so the five
//! lattice points are exactly the upsets of that fork. Implication is the
//! Heyting implication of the lattice, which coincides with Kripke forcing
//! on the fork.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::skolem::{skolemize_parallel, SkolemError};
use crate::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cd5Value {
    a: bool,
    b: bool,
    c: bool,
}

impl Cd5Value {
    pub const TOP: Cd5Value = Cd5Value { a: true, b: true, c: true };
    pub const BOTTOM: Cd5Value = Cd5Value { a: false, b: false, c: false };

    /// All five points, bottom first, in the order used for enumeration.
    pub const ALL: [Cd5Value; 5] = [
        Cd5Value { a: false, b: false, c: false },
        Cd5Value { a: true, b: false, c: false },
        Cd5Value { a: false, b: true, c: false },
        Cd5Value { a: true, b: true, c: false },
        Cd5Value { a: true, b: true, c: true },
    ];

    /// Rejects `(0,1,1)`, `(1,0,1)` and `(0,0,1)`.
    pub fn new(a: u8, b: u8, c: u8) -> Result<Cd5Value, Cd5Error> {
        if a > 1 || b > 1 || c > 1 || (c == 1 && (a == 0 || b == 0)) {
            return Err(Cd5Error::NotALatticePoint(a, b, c));
        }
        Ok(Cd5Value { a: a == 1, b: b == 1, c: c == 1 })
    }

    pub fn bits(self) -> (u8, u8, u8) {
        (self.a as u8, self.b as u8, self.c as u8)
    }

    pub fn is_designated(self) -> bool {
        self == Cd5Value::TOP
    }

    pub fn leq(self, other: Cd5Value) -> bool {
        (!self.a || other.a) && (!self.b || other.b) && (!self.c || other.c)
    }

    pub fn sup(self, other: Cd5Value) -> Cd5Value {
        // The points are closed under componentwise or/and.
        Cd5Value { a: self.a || other.a, b: self.b || other.b, c: self.c || other.c }
    }

    pub fn inf(self, other: Cd5Value) -> Cd5Value {
        Cd5Value { a: self.a && other.a, b: self.b && other.b, c: self.c && other.c }
    }

    /// The largest `z` with `inf(z, self) ≤ other`.
    pub fn implies(self, other: Cd5Value) -> Cd5Value {
        let a = !self.a || other.a;
        let b = !self.b || other.b;
        let c = (!self.c || other.c) && a && b;
        Cd5Value { a, b, c }
    }
}

impl fmt::Display for Cd5Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.bits();
        write!(f, "({a},{b},{c})")
    }
}

impl Serialize for Cd5Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Cd5Error {
    #[error("({0},{1},{2}) is not a point of the lattice")]
    NotALatticePoint(u8, u8, u8),
    #[error("empty domain")]
    EmptyDomain,
    #[error("unknown domain element `{0}`")]
    UnknownElement(String),
    #[error("symbol `{0}` has no interpretation")]
    UnboundSymbol(String),
    #[error("variable `{0}` is free")]
    FreeVariable(String),
    #[error("`{symbol}` is not defined on ({})", args.join(","))]
    NotTotal { symbol: String, args: Vec<String> },
    #[error("`{0}` is used with inconsistent arities")]
    ArityMismatch(String),
    #[error("enumeration needs {needed} interpretations, budget is {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error(transparent)]
    Skolem(#[from] SkolemError),
}

/// Predicate tables map argument tuples (element indices) to values; function
/// tables map them to elements. Constants are 0-ary functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Interpretation {
    pub domain: Vec<String>,
    pub predicates: BTreeMap<String, BTreeMap<Vec<usize>, Cd5Value>>,
    pub functions: BTreeMap<String, BTreeMap<Vec<usize>, usize>>,
}

fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// Serialized with tables keyed by printed ground terms, e.g. `"P(a)"`.
impl Serialize for Interpretation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let key = |sym: &str, t: &[usize]| {
            if t.is_empty() {
                sym.to_string()
            } else {
                let args: Vec<&str> = t.iter().map(|&d| self.domain[d].as_str()).collect();
                format!("{sym}({})", args.join(","))
            }
        };
        let preds: BTreeMap<String, Cd5Value> =
            self.predicates.iter().flat_map(|(p, tab)| tab.iter().map(move |(t, v)| (key(p, t), *v))).collect();
        let funcs: BTreeMap<String, &str> = self
            .functions
            .iter()
            .flat_map(|(f, tab)| tab.iter().map(move |(t, d)| (key(f, t), self.domain[*d].as_str())))
            .collect();
        let mut st = s.serialize_struct("Interpretation", 3)?;
        st.serialize_field("domain", &self.domain)?;
        st.serialize_field("predicates", &preds)?;
        st.serialize_field("functions", &funcs)?;
        st.end()
    }
}

impl Interpretation {
    pub fn element(&self, name: &str) -> Option<usize> {
        self.domain.iter().position(|d| d == name)
    }

    fn names(&self, args: &[usize]) -> Vec<String> {
        args.iter().map(|&i| self.domain[i].clone()).collect()
    }

    /// Checks non-emptiness and that every table is total for its arity.
    pub fn validate(&self) -> Result<(), Cd5Error> {
        if self.domain.is_empty() {
            return Err(Cd5Error::EmptyDomain);
        }
        let n = self.domain.len();
        let check = |sym: &str, keys: Vec<&Vec<usize>>| -> Result<(), Cd5Error> {
            let arity = keys.first().map_or(0, |k| k.len());
            if keys.iter().any(|k| k.len() != arity) {
                return Err(Cd5Error::ArityMismatch(sym.to_string()));
            }
            let have: BTreeSet<&Vec<usize>> = keys.into_iter().collect();
            for t in tuples(n, arity) {
                if !have.contains(&t) {
                    return Err(Cd5Error::NotTotal { symbol: sym.to_string(), args: self.names(&t) });
                }
            }
            Ok(())
        };
        for (p, table) in &self.predicates {
            check(p, table.keys().collect())?;
        }
        for (f, table) in &self.functions {
            check(f, table.keys().collect())?;
            if table.values().any(|&d| d >= n) {
                return Err(Cd5Error::UnknownElement(f.clone()));
            }
        }
        Ok(())
    }

    fn term(&self, t: &Term, env: &BTreeMap<String, usize>) -> Result<usize, Cd5Error> {
        match t {
            Term::Var(v) => env.get(v).copied().ok_or_else(|| Cd5Error::FreeVariable(v.clone())),
            Term::App(f, args) => {
                if let Some(table) = self.functions.get(f) {
                    let vals = args.iter().map(|a| self.term(a, env)).collect::<Result<Vec<_>, _>>()?;
                    return table
                        .get(&vals)
                        .copied()
                        .ok_or_else(|| Cd5Error::NotTotal { symbol: f.clone(), args: self.names(&vals) });
                }
                if args.is_empty() {
                    if let Some(d) = self.element(f) {
                        return Ok(d);
                    }
                }
                Err(Cd5Error::UnboundSymbol(f.clone()))
            }
        }
    }

    fn eval_env(&self, f: &Formula, env: &mut BTreeMap<String, usize>) -> Result<Cd5Value, Cd5Error> {
        Ok(match f {
            Formula::Bottom => Cd5Value::BOTTOM,
            Formula::Top => Cd5Value::TOP,
            Formula::Atom(p, args) => {
                let table = self.predicates.get(p).ok_or_else(|| Cd5Error::UnboundSymbol(p.clone()))?;
                let vals = args.iter().map(|a| self.term(a, env)).collect::<Result<Vec<_>, _>>()?;
                *table
                    .get(&vals)
                    .ok_or_else(|| Cd5Error::NotTotal { symbol: p.clone(), args: self.names(&vals) })?
            }
            Formula::And(l, r) => self.eval_env(l, env)?.inf(self.eval_env(r, env)?),
            Formula::Or(l, r) => self.eval_env(l, env)?.sup(self.eval_env(r, env)?),
            Formula::Implies(l, r) => self.eval_env(l, env)?.implies(self.eval_env(r, env)?),
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                let forall = matches!(f, Formula::Forall(..));
                let saved = env.get(x).copied();
                let mut acc = if forall { Cd5Value::TOP } else { Cd5Value::BOTTOM };
                for d in 0..self.domain.len() {
                    env.insert(x.clone(), d);
                    let v = self.eval_env(body, env);
                    let v = match v {
                        Ok(v) => v,
                        Err(e) => {
                            restore(env, x, saved);
                            return Err(e);
                        }
                    };
                    acc = if forall { acc.inf(v) } else { acc.sup(v) };
                }
                restore(env, x, saved);
                acc
            }
        })
    }
}

fn restore(env: &mut BTreeMap<String, usize>, x: &str, saved: Option<usize>) {
    match saved {
        Some(d) => env.insert(x.to_string(), d),
        None => env.remove(x),
    };
}

pub fn eval(i: &Interpretation, f: &Formula) -> Result<Cd5Value, Cd5Error> {
    if i.domain.is_empty() {
        return Err(Cd5Error::EmptyDomain);
    }
    i.eval_env(f, &mut BTreeMap::new())
}

pub const DEFAULT_CD5_BUDGET: u128 = 2_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct BoundedVerdict {
    pub valid: bool,
    pub bound: usize,
    pub interpretations_checked: u64,
    pub countermodel: Option<Interpretation>,
    pub countervalue: Option<Cd5Value>,
}

/// Symbols a formula needs interpreted: predicates and function symbols
/// (constants included) with arities.
fn signature(f: &Formula) -> Result<(Vec<(String, usize)>, Vec<(String, usize)>), Cd5Error> {
    let preds: Vec<(String, usize)> = f.predicates().into_iter().collect();
    let funcs: Vec<(String, usize)> = f.functions().into_iter().collect();
    for list in [&preds, &funcs] {
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Cd5Error::ArityMismatch(w[0].0.clone()));
            }
        }
    }
    Ok((preds, funcs))
}

fn count_for(n: usize, preds: &[(String, usize)], funcs: &[(String, usize)]) -> u128 {
    let mut total: u128 = 1;
    for (_, k) in preds {
        let cells = (n as u128).saturating_pow(*k as u32);
        total = total.saturating_mul(5u128.saturating_pow(cells.min(u32::MAX as u128) as u32));
    }
    for (_, k) in funcs {
        let cells = (n as u128).saturating_pow(*k as u32);
        total = total.saturating_mul((n as u128).saturating_pow(cells.min(u32::MAX as u128) as u32));
    }
    total
}

/// Calls `visit` on every interpretation of the signature over domains of
/// size `1..=bound`, in lexicographic order of the predicate tables and then
/// the function tables; stops when `visit` returns `false`.
pub fn for_each_interpretation(
    f: &Formula,
    bound: usize,
    budget: u128,
    mut visit: impl FnMut(&Interpretation) -> Result<bool, Cd5Error>,
) -> Result<u64, Cd5Error> {
    if bound == 0 {
        return Err(Cd5Error::ZeroBound);
    }
    let (preds, funcs) = signature(f)?;
    let needed = (1..=bound).fold(0u128, |acc, n| acc.saturating_add(count_for(n, &preds, &funcs)));
    if needed > budget {
        return Err(Cd5Error::Budget { needed, budget });
    }
    let mut checked = 0u64;
    for n in 1..=bound {
        let domain: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
        // One digit per table cell: predicate cells range over the 5 values,
        // function cells over the domain.
        let mut cells: Vec<(bool, usize, Vec<usize>, usize)> = Vec::new();
        for (pi, (_, k)) in preds.iter().enumerate() {
            for t in tuples(n, *k) {
                cells.push((true, pi, t, 5));
            }
        }
        for (fi, (_, k)) in funcs.iter().enumerate() {
            for t in tuples(n, *k) {
                cells.push((false, fi, t, n));
            }
        }
        let mut digits = vec![0usize; cells.len()];
        loop {
            let mut interp = Interpretation { domain: domain.clone(), ..Default::default() };
            for (p, _) in &preds {
                interp.predicates.insert(p.clone(), BTreeMap::new());
            }
            for (g, _) in &funcs {
                interp.functions.insert(g.clone(), BTreeMap::new());
            }
            for ((is_pred, idx, t, _), &d) in cells.iter().zip(&digits) {
                if *is_pred {
                    interp.predicates.get_mut(&preds[*idx].0).unwrap().insert(t.clone(), Cd5Value::ALL[d]);
                } else {
                    interp.functions.get_mut(&funcs[*idx].0).unwrap().insert(t.clone(), d);
                }
            }
            checked += 1;
            if !visit(&interp)? {
                return Ok(checked);
            }
            // Last cell varies fastest, giving lexicographic order.
            let mut done = true;
            for k in (0..cells.len()).rev() {
                digits[k] += 1;
                if digits[k] < cells[k].3 {
                    done = false;
                    break;
                }
                digits[k] = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(checked)
}

pub fn valid_bounded(f: &Formula, bound: usize) -> Result<BoundedVerdict, Cd5Error> {
    valid_bounded_with_budget(f, bound, DEFAULT_CD5_BUDGET)
}

pub fn valid_bounded_with_budget(f: &Formula, bound: usize, budget: u128) -> Result<BoundedVerdict, Cd5Error> {
    if let Some(v) = f.free_vars().into_iter().next() {
        return Err(Cd5Error::FreeVariable(v));
    }
    let mut counter = None;
    let checked = for_each_interpretation(f, bound, budget, |i| {
        let v = eval(i, f)?;
        if v.is_designated() {
            Ok(true)
        } else {
            counter = Some((i.clone(), v));
            Ok(false)
        }
    })?;
    Ok(BoundedVerdict {
        valid: counter.is_none(),
        bound,
        interpretations_checked: checked,
        countervalue: counter.as_ref().map(|c| c.1),
        countermodel: counter.map(|c| c.0),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub formula: String,
    pub skolemized: String,
    pub degree: usize,
    pub bound: usize,
    pub original: BoundedVerdict,
    pub parallel: BoundedVerdict,
    pub agree: bool,
}

/// Bounded validity of `f` and of its degree-`n` parallel Skolem form. The
/// Skolem symbols are part of the interpretation, so a countermodel of the
/// Skolem form is found by searching all of their tables.
pub fn crosscheck_parallel(f: &Formula, n: usize, bound: usize) -> Result<CrosscheckReport, Cd5Error> {
    crosscheck_parallel_with_budget(f, n, bound, DEFAULT_CD5_BUDGET)
}

pub fn crosscheck_parallel_with_budget(
    f: &Formula,
    n: usize,
    bound: usize,
    budget: u128,
) -> Result<CrosscheckReport, Cd5Error> {
    let (sk, _) = skolemize_parallel(f, n)?;
    let original = valid_bounded_with_budget(f, bound, budget)?;
    let parallel = valid_bounded_with_budget(&sk, bound, budget)?;
    Ok(CrosscheckReport {
        formula: crate::parser::print_formula(f),
        skolemized: crate::parser::print_formula(&sk),
        degree: n,
        bound,
        agree: original.valid == parallel.valid,
        original,
        parallel,
    })
}
