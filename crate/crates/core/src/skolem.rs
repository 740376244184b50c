//! Structural, Andrews and parallel Skolemization of closed formulas and
//! sequents.
//!
//! Elimination follows the recursive definition literally: find the first
//! strong quantifier (left to right), remove it, substitute the Skolem term,
//! and start over on the result.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::quant::{classify_with_polarity, Occurrence, Polarity, Strength};
use crate::syntax::{Formula, Quantifier, Sequent, Side, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SkolemMode {
    Structural,
    Andrews,
    Parallel(usize),
}

impl fmt::Display for SkolemMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkolemMode::Structural => f.write_str("structural"),
            SkolemMode::Andrews => f.write_str("andrews"),
            SkolemMode::Parallel(n) => write!(f, "parallel({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Variant {
    Structural,
    Andrews,
    Parallel { index: usize, degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkolemSymbol {
    pub symbol: String,
    pub arity: usize,
    /// Which formula of the input the eliminated quantifier belongs to.
    pub side: Side,
    pub index: usize,
    /// Path of the eliminated quantifier in the input formula.
    pub path: Vec<usize>,
    pub dependencies: Vec<String>,
    pub variant: Variant,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SkolemSignature {
    pub symbols: Vec<SkolemSymbol>,
}

impl SkolemSignature {
    pub fn get(&self, symbol: &str) -> Option<&SkolemSymbol> {
        self.symbols.iter().find(|s| s.symbol == symbol)
    }

    pub fn names(&self) -> BTreeSet<String> {
        self.symbols.iter().map(|s| s.symbol.clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SkolemError {
    #[error("variable `{0}` is free in the input")]
    FreeVariable(String),
    #[error("the degree of parallel Skolemization must be at least 1")]
    ZeroDegree,
}

struct Namer {
    used: BTreeSet<String>,
    next: usize,
}

impl Namer {
    fn take(&mut self, degree: Option<usize>) -> Vec<String> {
        loop {
            let base = format!("sk{}", self.next);
            self.next += 1;
            let names: Vec<String> = match degree {
                None => vec![base],
                Some(n) => (1..=n).map(|i| format!("{base}_{i}")).collect(),
            };
            if names.iter().all(|n| !self.used.contains(n)) {
                self.used.extend(names.iter().cloned());
                return names;
            }
        }
    }
}

fn first_strong(occs: &[Occurrence]) -> Option<usize> {
    occs.iter().position(|o| o.strength == Strength::Strong)
}

fn skolemize_one(
    f: &Formula,
    root: Polarity,
    mode: SkolemMode,
    side: Side,
    index: usize,
    namer: &mut Namer,
    sig: &mut SkolemSignature,
) -> Formula {
    let mut cur = f.clone();
    // Original path of every quantifier occurrence of `cur`, in classify order.
    let mut origin: Vec<Vec<usize>> = classify_with_polarity(f, root).into_iter().map(|o| o.path).collect();
    loop {
        let occs = classify_with_polarity(&cur, root);
        debug_assert_eq!(occs.len(), origin.len());
        let Some(k) = first_strong(&occs) else {
            return cur;
        };
        let occ = &occs[k];
        let node = cur.at(&occ.path).unwrap();
        let (q, y, body) = node.as_quant().unwrap();
        let deps: Vec<String> = match mode {
            SkolemMode::Andrews => {
                let free = node.free_vars();
                occ.dominating_weak_vars.iter().filter(|v| free.contains(*v)).cloned().collect()
            }
            _ => occ.dominating_weak_vars.clone(),
        };
        let args: Vec<Term> = deps.iter().map(Term::var).collect();
        let inner_count = occs[k + 1..]
            .iter()
            .take_while(|o| o.path.starts_with(&occ.path))
            .count();
        let inner: Vec<Vec<usize>> = origin[k + 1..k + 1 + inner_count].to_vec();
        let (replacement, names, copies) = match mode {
            SkolemMode::Parallel(n) => {
                let names = namer.take(Some(n));
                let parts: Vec<Formula> = names
                    .iter()
                    .map(|s| body.substitute(y, &Term::app(s.clone(), args.clone())))
                    .collect();
                let join = if q == Quantifier::Exists { Formula::or } else { Formula::and };
                (parts.into_iter().reduce(join).unwrap(), names, n)
            }
            _ => {
                let names = namer.take(None);
                (body.substitute(y, &Term::app(names[0].clone(), args.clone())), names, 1)
            }
        };
        for (i, s) in names.iter().enumerate() {
            sig.symbols.push(SkolemSymbol {
                symbol: s.clone(),
                arity: deps.len(),
                side,
                index,
                path: origin[k].clone(),
                dependencies: deps.clone(),
                variant: match mode {
                    SkolemMode::Structural => Variant::Structural,
                    SkolemMode::Andrews => Variant::Andrews,
                    SkolemMode::Parallel(n) => Variant::Parallel { index: i + 1, degree: n },
                },
            });
        }
        let mut next_origin = origin[..k].to_vec();
        for _ in 0..copies {
            next_origin.extend(inner.iter().cloned());
        }
        next_origin.extend(origin[k + 1 + inner_count..].iter().cloned());
        origin = next_origin;
        cur = cur.replace_at(&occ.path.clone(), replacement);
    }
}

fn check_closed<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Result<(), SkolemError> {
    for f in fs {
        if let Some(v) = f.free_vars().into_iter().next() {
            return Err(SkolemError::FreeVariable(v));
        }
    }
    Ok(())
}

pub fn skolemize(f: &Formula, mode: SkolemMode) -> Result<(Formula, SkolemSignature), SkolemError> {
    check_closed([f])?;
    if mode == SkolemMode::Parallel(0) {
        return Err(SkolemError::ZeroDegree);
    }
    let mut namer = Namer { used: f.symbols(), next: 0 };
    let mut sig = SkolemSignature::default();
    let out = skolemize_one(f, Polarity::Positive, mode, Side::Succedent, 0, &mut namer, &mut sig);
    Ok((out, sig))
}

pub fn skolemize_structural(f: &Formula) -> Result<(Formula, SkolemSignature), SkolemError> {
    skolemize(f, SkolemMode::Structural)
}

pub fn skolemize_andrews(f: &Formula) -> Result<(Formula, SkolemSignature), SkolemError> {
    skolemize(f, SkolemMode::Andrews)
}

pub fn skolemize_parallel(f: &Formula, n: usize) -> Result<(Formula, SkolemSignature), SkolemError> {
    skolemize(f, SkolemMode::Parallel(n))
}

/// Eliminates the strong-in-sequent quantifiers: strong ones in the
/// succedent, weak ones (by formula polarity) in the antecedent. Each formula
/// gets its own Skolem symbols; numbering runs through the antecedent and
/// then the succedent.
pub fn skolemize_sequent(s: &Sequent, mode: SkolemMode) -> Result<(Sequent, SkolemSignature), SkolemError> {
    check_closed(s.formulas())?;
    if mode == SkolemMode::Parallel(0) {
        return Err(SkolemError::ZeroDegree);
    }
    let mut namer = Namer { used: s.symbols(), next: 0 };
    let mut sig = SkolemSignature::default();
    let mut out = Sequent::default();
    for (i, f) in s.antecedent.iter().enumerate() {
        let g = skolemize_one(f, Polarity::Negative, mode, Side::Antecedent, i, &mut namer, &mut sig);
        out.antecedent.push(g);
    }
    for (i, f) in s.succedent.iter().enumerate() {
        let g = skolemize_one(f, Polarity::Positive, mode, Side::Succedent, i, &mut namer, &mut sig);
        out.succedent.push(g);
    }
    Ok((out, sig))
}

/// True when `f` has no strong quantifier at root polarity `root`.
pub fn is_skolem_free(f: &Formula, root: Polarity) -> bool {
    first_strong(&classify_with_polarity(f, root)).is_none()
}

/// Tries to find a renaming of the function symbols in `from` (restricted to
/// `renamable`) that makes it α-equal to `to`. Returns the renaming.
pub fn match_up_to_renaming(
    from: &Formula,
    to: &Formula,
    renamable: &BTreeSet<String>,
    map: &mut BTreeMap<String, String>,
) -> bool {
    fn terms(a: &Term, b: &Term, ren: &BTreeSet<String>, map: &mut BTreeMap<String, String>) -> bool {
        match (a, b) {
            (Term::Var(x), Term::Var(y)) => x == y,
            (Term::App(f, xs), Term::App(g, ys)) => {
                if xs.len() != ys.len() {
                    return false;
                }
                if ren.contains(f) {
                    match map.get(f) {
                        Some(h) if h != g => return false,
                        Some(_) => {}
                        None => {
                            if map.values().any(|h| h == g) {
                                return false;
                            }
                            map.insert(f.clone(), g.clone());
                        }
                    }
                } else if f != g {
                    return false;
                }
                xs.iter().zip(ys).all(|(x, y)| terms(x, y, ren, map))
            }
            _ => false,
        }
    }
    // Bound variables are compared after normalising both sides to de Bruijn
    // style names, so renaming is checked on the normalised trees.
    let (a, b) = (debruijn(from), debruijn(to));
    fn rec(a: &Formula, b: &Formula, ren: &BTreeSet<String>, map: &mut BTreeMap<String, String>) -> bool {
        match (a, b) {
            (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
                p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| terms(x, y, ren, map))
            }
            (Formula::Bottom, Formula::Bottom) | (Formula::Top, Formula::Top) => true,
            (Formula::And(a1, a2), Formula::And(b1, b2))
            | (Formula::Or(a1, a2), Formula::Or(b1, b2))
            | (Formula::Implies(a1, a2), Formula::Implies(b1, b2)) => {
                rec(a1, b1, ren, map) && rec(a2, b2, ren, map)
            }
            (Formula::Forall(x, a1), Formula::Forall(y, b1)) | (Formula::Exists(x, a1), Formula::Exists(y, b1)) => {
                x == y && rec(a1, b1, ren, map)
            }
            _ => false,
        }
    }
    let snapshot = map.clone();
    let ok = rec(&a, &b, renamable, map);
    if !ok {
        *map = snapshot;
    }
    ok
}

/// Renames bound variables to `#0, #1, …` by binding depth.
fn debruijn(f: &Formula) -> Formula {
    fn go(f: &Formula, depth: usize) -> Formula {
        match f {
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                let q = f.as_quant().unwrap().0;
                let name = format!("#{depth}");
                let body = b.substitute(v, &Term::var(name.clone()));
                Formula::quant(q, name, go(&body, depth + 1))
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                Formula::binary(f.as_binary().unwrap().0, go(l, depth), go(r, depth))
            }
            _ => f.clone(),
        }
    }
    go(f, 0)
}
