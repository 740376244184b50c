//! Kripke model files (`.krp`):
//!
//! ```text
//! worlds w v1 v2
//! order w < v1
//! domain *: a b          # `*` sets every world's domain
//! domain v1: a b c
//! force v1: P(a), Q
//! ```

use std::collections::BTreeMap;

use super::{content_lines, parse_formula_list, ParseError, SourceSpan};
use crate::kripke::{format_atom, Model};
use crate::kripke::{Frame, KripkeError};
use crate::syntax::{Formula, Term};

#[derive(Debug, thiserror::Error)]
pub enum ModelFileError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] KripkeError),
}

fn err(offset: usize, len: usize, expected: &[&str], found: &str) -> ParseError {
    ParseError::new(SourceSpan::new(offset, offset + len), expected, found)
}

pub fn parse_model(src: &str) -> Result<Model, ModelFileError> {
    let mut worlds: Option<Vec<String>> = None;
    let mut order = Vec::new();
    let mut default_domain: Option<Vec<String>> = None;
    let mut domains: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut forced: Vec<(usize, String, usize, Vec<Formula>)> = Vec::new();
    for (off, line) in content_lines(src) {
        let body = line.split('#').next().unwrap_or("").trim_end();
        let lead = body.len() - body.trim_start().len();
        let body = body.trim_start();
        let off = off + lead;
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest_off = off + (body.len() - rest.len());
        match kw {
            "worlds" => {
                let ws: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if ws.is_empty() {
                    return Err(err(off, body.len(), &["world names"], "nothing").into());
                }
                worlds = Some(ws);
            }
            "order" => {
                for pair in rest.split(',') {
                    let Some((u, v)) = pair.split_once('<') else {
                        return Err(err(rest_off, rest.len(), &["`u < v`"], pair.trim()).into());
                    };
                    order.push((u.trim().to_string(), v.trim().to_string()));
                }
            }
            "domain" => {
                let Some((w, elems)) = rest.split_once(':') else {
                    return Err(err(rest_off, rest.len(), &["`world: elements`"], rest).into());
                };
                let elems: Vec<String> = elems.split_whitespace().map(str::to_string).collect();
                if w.trim() == "*" {
                    default_domain = Some(elems);
                } else {
                    domains.insert(w.trim().to_string(), elems);
                }
            }
            "force" => {
                let Some((w, atoms)) = rest.split_once(':') else {
                    return Err(err(rest_off, rest.len(), &["`world: atoms`"], rest).into());
                };
                let colon = rest.find(':').unwrap();
                let atoms_off = rest_off + colon + 1;
                let fs = parse_formula_list(atoms).map_err(|e| e.shifted(atoms_off))?;
                forced.push((atoms_off, w.trim().to_string(), atoms.len(), fs));
            }
            _ => {
                return Err(err(off, kw.len(), &["`worlds`", "`order`", "`domain`", "`force`"], kw).into());
            }
        }
    }
    let worlds = worlds.ok_or_else(|| err(src.len(), 0, &["`worlds` line"], "end of input"))?;
    for w in domains.keys() {
        if !worlds.contains(w) {
            return Err(KripkeError::UnknownWorld(w.clone()).into());
        }
    }
    let doms: Vec<Vec<String>> = worlds
        .iter()
        .map(|w| domains.get(w).or(default_domain.as_ref()).cloned().unwrap_or_default())
        .collect();
    let frame = Frame::new(worlds.clone(), &order, doms)?;
    let mut atoms: Vec<Vec<(String, Vec<String>)>> = vec![Vec::new(); worlds.len()];
    for (off, w, len, fs) in forced {
        let wi = frame.world(&w).ok_or(KripkeError::UnknownWorld(w.clone()))?;
        for f in fs {
            let Formula::Atom(p, args) = f else {
                return Err(err(off, len, &["ground atom"], "compound formula").into());
            };
            let mut names = Vec::new();
            for a in args {
                match a {
                    Term::Var(n) => names.push(n),
                    Term::App(n, xs) if xs.is_empty() => names.push(n),
                    Term::App(..) => return Err(err(off, len, &["element name"], "function term").into()),
                }
            }
            atoms[wi].push((p, names));
        }
    }
    Ok(Model::new(frame, atoms)?)
}

pub fn print_model(m: &Model) -> String {
    let fr = &m.frame;
    let mut out = format!("worlds {}\n", fr.worlds.join(" "));
    for (u, v) in fr.covers() {
        out.push_str(&format!("order {} < {}\n", fr.worlds[u], fr.worlds[v]));
    }
    for (w, d) in fr.worlds.iter().zip(&fr.domains) {
        let names: Vec<&str> = d.iter().map(|&e| fr.elements[e].as_str()).collect();
        out.push_str(&format!("domain {w}: {}\n", names.join(" ")));
    }
    for (w, name) in fr.worlds.iter().enumerate() {
        let atoms: Vec<String> = m.atoms_at(w).iter().map(|(p, a)| format_atom(p, a)).collect();
        if !atoms.is_empty() {
            out.push_str(&format!("force {name}: {}\n", atoms.join(", ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_printer() {
        let src = "worlds w v1 v2\norder w < v1, w < v2\ndomain *: a b\nforce v1: P(a)\nforce v2: P(b), Q\n";
        let m = parse_model(src).unwrap();
        assert_eq!(m.frame.len(), 3);
        let again = parse_model(&print_model(&m)).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn rejects_non_persistent_valuation() {
        let src = "worlds w v\norder w < v\ndomain *: a\nforce w: P(a)\n";
        assert!(matches!(parse_model(src), Err(ModelFileError::Invalid(KripkeError::NotPersistent { .. }))));
    }

    #[test]
    fn rejects_unknown_keyword() {
        assert!(matches!(parse_model("world w\n"), Err(ModelFileError::Syntax(_))));
    }
}
