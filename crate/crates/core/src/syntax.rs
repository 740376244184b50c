//! First-order terms, formulas and sequents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

/// A first-order term. `App(f, [])` is a constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::App(name.into(), Vec::new())
    }

    pub fn app(name: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(name.into(), args)
    }

    pub fn vars_into(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.vars_into(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.vars_into(&mut out);
        out
    }

    pub fn has_var(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v == name,
            Term::App(_, args) => args.iter().any(|a| a.has_var(name)),
        }
    }

    /// Function symbols with their arities.
    pub fn functions_into(&self, out: &mut BTreeSet<(String, usize)>) {
        if let Term::App(f, args) = self {
            out.insert((f.clone(), args.len()));
            args.iter().for_each(|a| a.functions_into(out));
        }
    }

    pub fn substitute_many(&self, map: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute_many(map)).collect())
            }
        }
    }

    pub fn contains(&self, sub: &Term) -> bool {
        self == sub
            || match self {
                Term::Var(_) => false,
                Term::App(_, args) => args.iter().any(|a| a.contains(sub)),
            }
    }
}

/// A first-order formula. Negation is `Implies(a, Bottom)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Bottom,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// Quantifier kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    Forall,
    Exists,
}

/// Binary connective kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
    Implies,
}

impl Formula {
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(pred.into(), args)
    }

    pub fn prop(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::implies(f, Formula::Bottom)
    }

    pub fn forall(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(v.into(), Box::new(body))
    }

    pub fn exists(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(v.into(), Box::new(body))
    }

    pub fn quant(q: Quantifier, v: impl Into<String>, body: Formula) -> Formula {
        match q {
            Quantifier::Forall => Formula::forall(v, body),
            Quantifier::Exists => Formula::exists(v, body),
        }
    }

    pub fn binary(c: Connective, l: Formula, r: Formula) -> Formula {
        match c {
            Connective::And => Formula::and(l, r),
            Connective::Or => Formula::or(l, r),
            Connective::Implies => Formula::implies(l, r),
        }
    }

    /// Splits a quantified formula into kind, bound variable and body.
    pub fn as_quant(&self) -> Option<(Quantifier, &str, &Formula)> {
        match self {
            Formula::Forall(v, b) => Some((Quantifier::Forall, v, b)),
            Formula::Exists(v, b) => Some((Quantifier::Exists, v, b)),
            _ => None,
        }
    }

    pub fn as_binary(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::And(l, r) => Some((Connective::And, l, r)),
            Formula::Or(l, r) => Some((Connective::Or, l, r)),
            Formula::Implies(l, r) => Some((Connective::Implies, l, r)),
            _ => None,
        }
    }

    /// Immediate subformulas, in child-index order.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(..) | Formula::Bottom | Formula::Top => Vec::new(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => vec![l, r],
            Formula::Forall(_, b) | Formula::Exists(_, b) => vec![b],
        }
    }

    /// The subformula at `path`, if the path is valid.
    pub fn at(&self, path: &[usize]) -> Option<&Formula> {
        let mut cur = self;
        for &i in path {
            cur = *cur.children().get(i)?;
        }
        Some(cur)
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(..))
    }

    pub fn is_quantifier(&self) -> bool {
        matches!(self, Formula::Forall(..) | Formula::Exists(..))
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Atom(..) | Formula::Bottom | Formula::Top => true,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.is_quantifier_free() && r.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.free_vars_into(&mut Vec::new(), &mut out);
        out
    }

    fn free_vars_into(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                for a in args {
                    for v in a.vars() {
                        if !bound.contains(&v) {
                            out.insert(v);
                        }
                    }
                }
            }
            Formula::Bottom | Formula::Top => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.free_vars_into(bound, out);
                r.free_vars_into(bound, out);
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                bound.push(v.clone());
                b.free_vars_into(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn has_free(&self, name: &str) -> bool {
        match self {
            Formula::Atom(_, args) => args.iter().any(|a| a.has_var(name)),
            Formula::Bottom | Formula::Top => false,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.has_free(name) || r.has_free(name)
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => v != name && b.has_free(name),
        }
    }

    /// Every variable name occurring in the formula, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.all_vars_into(&mut out);
        out
    }

    pub fn all_vars_into(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => args.iter().for_each(|a| a.vars_into(out)),
            Formula::Bottom | Formula::Top => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.all_vars_into(out);
                r.all_vars_into(out);
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                out.insert(v.clone());
                b.all_vars_into(out);
            }
        }
    }

    /// Variables bound somewhere in the formula.
    pub fn bound_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Some((_, v, _)) = f.as_quant() {
                out.insert(v.to_string());
            }
        });
        out
    }

    pub fn functions(&self) -> BTreeSet<(String, usize)> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Formula::Atom(_, args) = f {
                args.iter().for_each(|a| a.functions_into(&mut out));
            }
        });
        out
    }

    pub fn predicates(&self) -> BTreeSet<(String, usize)> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Formula::Atom(p, args) = f {
                out.insert((p.clone(), args.len()));
            }
        });
        out
    }

    /// All identifiers (variables, function and predicate symbols).
    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = self.all_vars();
        out.extend(self.functions().into_iter().map(|(f, _)| f));
        out.extend(self.predicates().into_iter().map(|(p, _)| p));
        out
    }

    /// Pre-order traversal.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        visit(self);
        for c in self.children() {
            c.walk(visit);
        }
    }

    pub fn quantifier_count(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |f| {
            if f.as_quant().is_some() {
                n += 1;
            }
        });
        n
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |_| n += 1);
        n
    }

    /// Capture-avoiding substitution of `t` for the free occurrences of `var`.
    pub fn substitute(&self, var: &str, t: &Term) -> Formula {
        let mut map = BTreeMap::new();
        map.insert(var.to_string(), t.clone());
        self.substitute_many(&map)
    }

    /// Simultaneous capture-avoiding substitution.
    pub fn substitute_many(&self, map: &BTreeMap<String, Term>) -> Formula {
        let mut used = self.all_vars();
        for (k, t) in map {
            used.insert(k.clone());
            t.vars_into(&mut used);
        }
        self.subst_rec(map, &mut used)
    }

    fn subst_rec(&self, map: &BTreeMap<String, Term>, used: &mut BTreeSet<String>) -> Formula {
        if map.is_empty() {
            return self.clone();
        }
        match self {
            Formula::Atom(p, args) => {
                Formula::Atom(p.clone(), args.iter().map(|a| a.substitute_many(map)).collect())
            }
            Formula::Bottom | Formula::Top => self.clone(),
            Formula::And(l, r) => Formula::and(l.subst_rec(map, used), r.subst_rec(map, used)),
            Formula::Or(l, r) => Formula::or(l.subst_rec(map, used), r.subst_rec(map, used)),
            Formula::Implies(l, r) => {
                Formula::implies(l.subst_rec(map, used), r.subst_rec(map, used))
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                let q = self.as_quant().unwrap().0;
                let mut inner: BTreeMap<String, Term> = map
                    .iter()
                    .filter(|(k, _)| *k != v && b.has_free(k))
                    .map(|(k, t)| (k.clone(), t.clone()))
                    .collect();
                if inner.is_empty() {
                    return self.clone();
                }
                let captures = inner.values().any(|t| t.has_var(v));
                if captures {
                    let fresh = fresh_name(v, used);
                    used.insert(fresh.clone());
                    inner.insert(v.clone(), Term::Var(fresh.clone()));
                    Formula::quant(q, fresh, b.subst_rec(&inner, used))
                } else {
                    Formula::quant(q, v.clone(), b.subst_rec(&inner, used))
                }
            }
        }
    }

    /// Replaces the subformula at `path` (which must be valid) by `new`.
    pub fn replace_at(&self, path: &[usize], new: Formula) -> Formula {
        let Some((&i, rest)) = path.split_first() else {
            return new;
        };
        match self {
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                let c = self.as_binary().unwrap().0;
                if i == 0 {
                    Formula::binary(c, l.replace_at(rest, new), (**r).clone())
                } else {
                    Formula::binary(c, (**l).clone(), r.replace_at(rest, new))
                }
            }
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                Formula::quant(self.as_quant().unwrap().0, v.clone(), b.replace_at(rest, new))
            }
            _ => panic!("path runs past a leaf"),
        }
    }

    /// Renames function symbols (terms only; predicates untouched).
    pub fn rename_functions(&self, map: &BTreeMap<String, String>) -> Formula {
        self.map_terms(&|t| rename_in_term(t, map))
    }

    /// Renames the bound variable of a quantified formula (no-op on other nodes).
    pub fn rename_bound(&self, to: &str) -> Formula {
        match self.as_quant() {
            Some((q, v, b)) if v != to => Formula::quant(q, to, b.substitute(v, &Term::var(to))),
            _ => self.clone(),
        }
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha_rec(self, other, &mut Vec::new(), &mut Vec::new())
    }

    /// Replaces every subterm equal to `from` by `to` (no binder handling:
    /// `from` must not contain variables bound in `self`).
    pub fn replace_term(&self, from: &Term, to: &Term) -> Formula {
        self.map_terms(&|t| replace_in_term(t, from, to))
    }

    pub fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Formula {
        match self {
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(f).collect()),
            Formula::Bottom | Formula::Top => self.clone(),
            Formula::And(l, r) => Formula::and(l.map_terms(f), r.map_terms(f)),
            Formula::Or(l, r) => Formula::or(l.map_terms(f), r.map_terms(f)),
            Formula::Implies(l, r) => Formula::implies(l.map_terms(f), r.map_terms(f)),
            Formula::Forall(v, b) => Formula::forall(v.clone(), b.map_terms(f)),
            Formula::Exists(v, b) => Formula::exists(v.clone(), b.map_terms(f)),
        }
    }
}

fn rename_in_term(t: &Term, map: &BTreeMap<String, String>) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, args) => Term::App(
            map.get(f).cloned().unwrap_or_else(|| f.clone()),
            args.iter().map(|a| rename_in_term(a, map)).collect(),
        ),
    }
}

fn replace_in_term(t: &Term, from: &Term, to: &Term) -> Term {
    if t == from {
        return to.clone();
    }
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, args) => {
            Term::App(f.clone(), args.iter().map(|a| replace_in_term(a, from, to)).collect())
        }
    }
}

fn alpha_term(a: &Term, b: &Term, ea: &[String], eb: &[String]) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => {
            let ix = ea.iter().rposition(|v| v == x);
            let iy = eb.iter().rposition(|v| v == y);
            match (ix, iy) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, ea, eb))
        }
        _ => false,
    }
}

fn alpha_rec(a: &Formula, b: &Formula, ea: &mut Vec<String>, eb: &mut Vec<String>) -> bool {
    match (a, b) {
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, ea, eb))
        }
        (Formula::Bottom, Formula::Bottom) | (Formula::Top, Formula::Top) => true,
        (Formula::And(a1, a2), Formula::And(b1, b2))
        | (Formula::Or(a1, a2), Formula::Or(b1, b2))
        | (Formula::Implies(a1, a2), Formula::Implies(b1, b2)) => {
            alpha_rec(a1, b1, ea, eb) && alpha_rec(a2, b2, ea, eb)
        }
        (Formula::Forall(x, a1), Formula::Forall(y, b1))
        | (Formula::Exists(x, a1), Formula::Exists(y, b1)) => {
            ea.push(x.clone());
            eb.push(y.clone());
            let ok = alpha_rec(a1, b1, ea, eb);
            ea.pop();
            eb.pop();
            ok
        }
        _ => false,
    }
}

/// `base_k` for the smallest `k >= 1` not in `used`.
pub fn fresh_name(base: &str, used: &BTreeSet<String>) -> String {
    (1..)
        .map(|k| format!("{base}_{k}"))
        .find(|n| !used.contains(n))
        .expect("unbounded search")
}

/// `base` itself when unused, otherwise [`fresh_name`].
pub fn fresh_or_same(base: &str, used: &BTreeSet<String>) -> String {
    if used.contains(base) {
        fresh_name(base, used)
    } else {
        base.to_string()
    }
}

/// Which side of a sequent a formula sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Antecedent,
    Succedent,
}

/// A sequent `Γ ⇒ Δ`. Equality is multiset equality.
#[derive(Clone, Debug, Default, Eq, Serialize)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Vec<Formula>,
}

impl PartialEq for Sequent {
    fn eq(&self, other: &Self) -> bool {
        multiset_eq(&self.antecedent, &other.antecedent)
            && multiset_eq(&self.succedent, &other.succedent)
    }
}

pub fn multiset_eq(a: &[Formula], b: &[Formula]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x: Vec<&Formula> = a.iter().collect();
    let mut y: Vec<&Formula> = b.iter().collect();
    x.sort();
    y.sort();
    x == y
}

/// Removes one occurrence of `f`; `None` if absent.
pub fn multiset_remove(v: &[Formula], f: &Formula) -> Option<Vec<Formula>> {
    let i = v.iter().position(|g| g == f)?;
    let mut out = v.to_vec();
    out.remove(i);
    Some(out)
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Vec<Formula>) -> Sequent {
        Sequent { antecedent, succedent }
    }

    pub fn side(&self, side: Side) -> &Vec<Formula> {
        match side {
            Side::Antecedent => &self.antecedent,
            Side::Succedent => &self.succedent,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut Vec<Formula> {
        match side {
            Side::Antecedent => &mut self.antecedent,
            Side::Succedent => &mut self.succedent,
        }
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.antecedent.iter().chain(self.succedent.iter())
    }

    pub fn len(&self) -> usize {
        self.antecedent.len() + self.succedent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        self.formulas().flat_map(|f| f.free_vars()).collect()
    }

    pub fn has_free(&self, name: &str) -> bool {
        self.formulas().any(|f| f.has_free(name))
    }

    pub fn symbols(&self) -> BTreeSet<String> {
        self.formulas().flat_map(|f| f.symbols()).collect()
    }

    /// The formula `⋀Γ → ⋁Δ` (empty conjunction `⊤`, empty disjunction `⊥`).
    pub fn to_formula(&self) -> Formula {
        let conj = self
            .antecedent
            .iter()
            .cloned()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top);
        let disj = self
            .succedent
            .iter()
            .cloned()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom);
        Formula::implies(conj, disj)
    }

    /// Multiset equality where formulas are compared up to α-equivalence.
    pub fn alpha_eq(&self, other: &Sequent) -> bool {
        alpha_multiset_eq(&self.antecedent, &other.antecedent)
            && alpha_multiset_eq(&self.succedent, &other.succedent)
    }
}

fn alpha_multiset_eq(a: &[Formula], b: &[Formula]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for f in a {
        for (j, g) in b.iter().enumerate() {
            if !used[j] && f.alpha_eq(g) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::print_term(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::print_formula(self))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::print_sequent(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(args: Vec<Term>) -> Formula {
        Formula::atom("P", args)
    }

    #[test]
    fn free_vars_examples() {
        let f = Formula::forall("x", p(vec![Term::var("x")]));
        assert!(f.free_vars().is_empty());
        let g = Formula::or(p(vec![Term::var("x")]), Formula::prop("Q"));
        assert_eq!(g.free_vars(), BTreeSet::from(["x".to_string()]));
        let h = Formula::exists(
            "x",
            Formula::implies(Formula::prop("B"), Formula::atom("A", vec![Term::var("x")])),
        );
        assert!(h.is_closed());
    }

    #[test]
    fn substitute_plain() {
        let f = p(vec![Term::var("y")]);
        assert_eq!(f.substitute("y", &Term::constant("c")), p(vec![Term::constant("c")]));
    }

    #[test]
    fn substitute_renames_on_capture() {
        let f = Formula::forall("x", p(vec![Term::var("x"), Term::var("y")]));
        let t = Term::app("f", vec![Term::var("x")]);
        let expected = Formula::forall("x_1", p(vec![Term::var("x_1"), t.clone()]));
        assert_eq!(f.substitute("y", &t), expected);
    }

    #[test]
    fn substitute_respects_binding() {
        let f = Formula::forall("x", p(vec![Term::var("x")]));
        assert_eq!(f.substitute("x", &Term::constant("c")), f);
    }

    #[test]
    fn fresh_suffix_is_smallest_unused() {
        let used: BTreeSet<String> = ["x", "x_1", "x_3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(fresh_name("x", &used), "x_2");
    }

    #[test]
    fn alpha_equivalence() {
        let a = Formula::forall("x", p(vec![Term::var("x")]));
        let b = Formula::forall("y", p(vec![Term::var("y")]));
        let c = Formula::forall("y", p(vec![Term::var("x")]));
        assert!(a.alpha_eq(&b));
        assert!(!a.alpha_eq(&c));
    }

    #[test]
    fn sequent_equality_is_multiset() {
        let a = Formula::prop("A");
        let b = Formula::prop("B");
        let s1 = Sequent::new(vec![a.clone(), b.clone()], vec![]);
        let s2 = Sequent::new(vec![b.clone(), a.clone()], vec![]);
        let s3 = Sequent::new(vec![a.clone(), a.clone(), b], vec![]);
        assert_eq!(s1, s2);
        assert_ne!(s1, s3);
    }
}
