use serde::Serialize;

use crate::syntax::{Sequent, Side, Term};

/// Inference rules of LK/LJ, plus the `⇒ ⊤` axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    Ax,
    Bot,
    Top,
    Lw,
    Rw,
    Lc,
    Rc,
    AndL1,
    AndL2,
    AndR,
    OrR1,
    OrR2,
    OrL,
    ImpL,
    ImpR,
    ForallL,
    ForallR,
    ExistsL,
    ExistsR,
    Cut,
}

impl Rule {
    pub const ALL: [Rule; 20] = [
        Rule::Ax,
        Rule::Bot,
        Rule::Top,
        Rule::Lw,
        Rule::Rw,
        Rule::Lc,
        Rule::Rc,
        Rule::AndL1,
        Rule::AndL2,
        Rule::AndR,
        Rule::OrR1,
        Rule::OrR2,
        Rule::OrL,
        Rule::ImpL,
        Rule::ImpR,
        Rule::ForallL,
        Rule::ForallR,
        Rule::ExistsL,
        Rule::ExistsR,
        Rule::Cut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Ax => "ax",
            Rule::Bot => "bot",
            Rule::Top => "top",
            Rule::Lw => "lw",
            Rule::Rw => "rw",
            Rule::Lc => "lc",
            Rule::Rc => "rc",
            Rule::AndL1 => "and-l1",
            Rule::AndL2 => "and-l2",
            Rule::AndR => "and-r",
            Rule::OrR1 => "or-r1",
            Rule::OrR2 => "or-r2",
            Rule::OrL => "or-l",
            Rule::ImpL => "imp-l",
            Rule::ImpR => "imp-r",
            Rule::ForallL => "forall-l",
            Rule::ForallR => "forall-r",
            Rule::ExistsL => "exists-l",
            Rule::ExistsR => "exists-r",
            Rule::Cut => "cut",
        }
    }

    pub fn from_name(s: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::Ax | Rule::Bot | Rule::Top => 0,
            Rule::AndR | Rule::OrL | Rule::ImpL | Rule::Cut => 2,
            _ => 1,
        }
    }

    /// Side of the conclusion holding the principal formula.
    pub fn principal_side(self) -> Option<Side> {
        match self {
            Rule::Ax | Rule::Bot | Rule::Top | Rule::Cut => None,
            Rule::Lw
            | Rule::Lc
            | Rule::AndL1
            | Rule::AndL2
            | Rule::OrL
            | Rule::ImpL
            | Rule::ForallL
            | Rule::ExistsL => Some(Side::Antecedent),
            _ => Some(Side::Succedent),
        }
    }

    pub fn is_quantifier(self) -> bool {
        matches!(self, Rule::ForallL | Rule::ForallR | Rule::ExistsL | Rule::ExistsR)
    }

    /// `∀R` and `∃L`, the rules with a characteristic variable.
    pub fn is_strong(self) -> bool {
        matches!(self, Rule::ForallR | Rule::ExistsL)
    }

    pub fn needs_annotation(self) -> bool {
        self.is_quantifier()
    }
}

/// A proof tree. `principal` indexes the conclusion's antecedent (left rules)
/// or succedent (right rules) and is ignored for axioms and cut. `term` is the
/// instantiating term (`∀L`, `∃R`) or the characteristic variable (`∀R`, `∃L`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Proof {
    pub rule: Rule,
    pub principal: usize,
    pub term: Option<Term>,
    pub conclusion: Sequent,
    pub premises: Vec<Proof>,
}

impl Proof {
    pub fn leaf(rule: Rule, conclusion: Sequent) -> Proof {
        Proof { rule, principal: 0, term: None, conclusion, premises: Vec::new() }
    }

    pub fn node(rule: Rule, principal: usize, conclusion: Sequent, premises: Vec<Proof>) -> Proof {
        Proof { rule, principal, term: None, conclusion, premises }
    }

    pub fn quant(rule: Rule, principal: usize, term: Term, conclusion: Sequent, premise: Proof) -> Proof {
        Proof { rule, principal, term: Some(term), conclusion, premises: vec![premise] }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Proof::height).max().unwrap_or(0)
    }

    /// Pre-order traversal with node paths.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&[usize], &'a Proof)) {
        fn go<'a>(p: &'a Proof, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize], &'a Proof)) {
            visit(path, p);
            for (i, c) in p.premises.iter().enumerate() {
                path.push(i);
                go(c, path, visit);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), visit);
    }

    pub fn at(&self, path: &[usize]) -> Option<&Proof> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get(i)?;
        }
        Some(cur)
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Proof> {
        let mut cur = self;
        for &i in path {
            cur = cur.premises.get_mut(i)?;
        }
        Some(cur)
    }

    pub fn principal_formula(&self) -> Option<&crate::syntax::Formula> {
        self.conclusion.side(self.rule.principal_side()?).get(self.principal)
    }

    /// The tree of non-quantifier rule tags, obtained by splicing out every
    /// quantifier inference.
    pub fn skeleton(&self) -> Vec<Skeleton> {
        if self.rule.is_quantifier() && self.premises.len() == 1 {
            return self.premises[0].skeleton();
        }
        vec![Skeleton {
            rule: self.rule,
            children: self.premises.iter().flat_map(Proof::skeleton).collect(),
        }]
    }

    pub fn is_cut_free(&self) -> bool {
        self.rule != Rule::Cut && self.premises.iter().all(Proof::is_cut_free)
    }

    /// Every leaf is `⊥ ⇒` or `A ⇒ A` with `A` atomic.
    pub fn has_atomic_axioms(&self) -> bool {
        if self.premises.is_empty() {
            return match self.rule {
                Rule::Bot | Rule::Top => true,
                Rule::Ax => self.conclusion.antecedent.iter().all(|f| f.is_atomic()),
                _ => false,
            };
        }
        self.premises.iter().all(Proof::has_atomic_axioms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub rule: Rule,
    pub children: Vec<Skeleton>,
}

pub fn format_path(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }
}
