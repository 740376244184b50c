use super::{KripkeError, Model};
use crate::syntax::{Formula, Term};

/// `M, w ⊩ f`. Free names in `f` must be elements of `D_w`, written either
/// as bare names or as constants `a()`.
pub fn forces(m: &Model, w: usize, f: &Formula) -> Result<bool, KripkeError> {
    validate(m, w, f, &mut Vec::new())?;
    Ok(eval(m, w, f, &mut Vec::new()))
}

fn validate(m: &Model, w: usize, f: &Formula, bound: &mut Vec<String>) -> Result<(), KripkeError> {
    match f {
        Formula::Atom(_, args) => {
            for a in args {
                match a {
                    Term::Var(v) if bound.contains(v) => {}
                    Term::Var(c) | Term::App(c, _) => {
                        if let Term::App(_, xs) = a {
                            if !xs.is_empty() {
                                return Err(KripkeError::FunctionSymbol(c.clone()));
                            }
                        }
                        let fr = &m.frame;
                        if !fr.element(c).is_some_and(|e| fr.domains[w].contains(&e)) {
                            return Err(KripkeError::ConstantOutsideDomain {
                                world: fr.worlds[w].clone(),
                                constant: c.clone(),
                            });
                        }
                    }
                }
            }
            Ok(())
        }
        Formula::Bottom | Formula::Top => Ok(()),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            validate(m, w, l, bound)?;
            validate(m, w, r, bound)
        }
        Formula::Forall(v, b) | Formula::Exists(v, b) => {
            bound.push(v.clone());
            let res = validate(m, w, b, bound);
            bound.pop();
            res
        }
    }
}

fn resolve(m: &Model, t: &Term, env: &[(String, usize)]) -> usize {
    match t {
        Term::Var(v) => env
            .iter()
            .rev()
            .find(|(n, _)| n == v)
            .map(|(_, e)| *e)
            .or_else(|| m.frame.element(v))
            .expect("validated term"),
        Term::App(c, _) => m.frame.element(c).expect("validated term"),
    }
}

fn eval(m: &Model, w: usize, f: &Formula, env: &mut Vec<(String, usize)>) -> bool {
    match f {
        Formula::Atom(p, args) => {
            let tuple: Vec<usize> = args.iter().map(|a| resolve(m, a, env)).collect();
            m.holds(p, w, &tuple)
        }
        Formula::Bottom => false,
        Formula::Top => true,
        Formula::And(l, r) => eval(m, w, l, env) && eval(m, w, r, env),
        Formula::Or(l, r) => eval(m, w, l, env) || eval(m, w, r, env),
        Formula::Implies(l, r) => {
            let above: Vec<usize> = m.frame.above(w).collect();
            above.into_iter().all(|v| !eval(m, v, l, env) || eval(m, v, r, env))
        }
        Formula::Forall(x, b) => {
            let above: Vec<usize> = m.frame.above(w).collect();
            above.into_iter().all(|v| {
                let dom: Vec<usize> = m.frame.domains[v].iter().copied().collect();
                dom.into_iter().all(|d| {
                    env.push((x.clone(), d));
                    let ok = eval(m, v, b, env);
                    env.pop();
                    ok
                })
            })
        }
        Formula::Exists(x, b) => {
            let dom: Vec<usize> = m.frame.domains[w].iter().copied().collect();
            dom.into_iter().any(|d| {
                env.push((x.clone(), d));
                let ok = eval(m, w, b, env);
                env.pop();
                ok
            })
        }
    }
}

/// Reference forcing that instantiates quantifiers by substituting element
/// constants, clause by clause from the definition.
pub fn forces_naive(m: &Model, w: usize, f: &Formula) -> Result<bool, KripkeError> {
    validate(m, w, f, &mut Vec::new())?;
    Ok(naive(m, w, f))
}

fn naive(m: &Model, w: usize, f: &Formula) -> bool {
    let fr = &m.frame;
    let constant = |d: usize| Term::constant(fr.elements[d].clone());
    match f {
        Formula::Atom(p, args) => {
            let tuple: Vec<usize> = args.iter().map(|a| resolve(m, a, &[])).collect();
            m.holds(p, w, &tuple)
        }
        Formula::Bottom => false,
        Formula::Top => true,
        Formula::And(l, r) => naive(m, w, l) && naive(m, w, r),
        Formula::Or(l, r) => naive(m, w, l) || naive(m, w, r),
        Formula::Implies(l, r) => fr.above(w).all(|v| !naive(m, v, l) || naive(m, v, r)),
        Formula::Forall(x, b) => fr
            .above(w)
            .all(|v| fr.domains[v].iter().all(|&d| naive(m, v, &b.substitute(x, &constant(d))))),
        Formula::Exists(x, b) => fr.domains[w].iter().any(|&d| naive(m, w, &b.substitute(x, &constant(d)))),
    }
}
