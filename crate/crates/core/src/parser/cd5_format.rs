//! CD₅ interpretation files (`.cd5`):
//!
//! ```text
//! domain a b
//! P(a) = (1,0,0)        # or 100
//! Q = 111
//! f(a) = b              # lowercase left-hand sides are functions
//! ```
//!
//! Every table must be total over the domain.

use super::{content_lines, parse_formula, parse_term, ParseError, SourceSpan};
use crate::cd5::{Cd5Error, Cd5Value, Interpretation};
use crate::syntax::{Formula, Term};

#[derive(Debug, thiserror::Error)]
pub enum Cd5FileError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] Cd5Error),
}

fn err(offset: usize, len: usize, expected: &[&str], found: &str) -> ParseError {
    ParseError::new(SourceSpan::new(offset, offset + len), expected, found)
}

fn parse_value(s: &str) -> Option<Result<Cd5Value, Cd5Error>> {
    let digits: String = s.chars().filter(|c| !matches!(c, '(' | ')' | ',' | ' ')).collect();
    if digits.len() != 3 || !digits.chars().all(|c| c == '0' || c == '1') {
        return None;
    }
    let d: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
    Some(Cd5Value::new(d[0], d[1], d[2]))
}

pub fn parse_interpretation(src: &str) -> Result<Interpretation, Cd5FileError> {
    let mut interp = Interpretation::default();
    let mut have_domain = false;
    for (off, line) in content_lines(src) {
        let body = line.split('#').next().unwrap_or("").trim_end();
        let lead = body.len() - body.trim_start().len();
        let body = body.trim_start();
        let off = off + lead;
        if let Some(rest) = body.strip_prefix("domain ") {
            interp.domain = rest.split_whitespace().map(str::to_string).collect();
            have_domain = true;
            continue;
        }
        let Some((lhs, rhs)) = body.split_once('=') else {
            return Err(err(off, body.len(), &["`domain`", "`lhs = value`"], body).into());
        };
        if !have_domain {
            return Err(err(off, body.len(), &["`domain` line first"], body).into());
        }
        let rhs_off = off + lhs.len() + 1;
        let (rhs, lhs) = (rhs.trim(), lhs.trim());
        let upper = lhs.starts_with(|c: char| c.is_ascii_uppercase());
        let (sym, args) = if upper {
            match parse_formula(lhs).map_err(|e| e.shifted(off))? {
                Formula::Atom(p, args) => (p, args),
                _ => return Err(err(off, lhs.len(), &["atom"], lhs).into()),
            }
        } else {
            match parse_term(lhs).map_err(|e| e.shifted(off))? {
                Term::App(f, args) => (f, args),
                Term::Var(f) => (f, Vec::new()),
            }
        };
        let mut tuple = Vec::new();
        for a in &args {
            let name = match a {
                Term::Var(n) => n,
                Term::App(n, xs) if xs.is_empty() => n,
                Term::App(..) => return Err(err(off, lhs.len(), &["element name"], "function term").into()),
            };
            tuple.push(interp.element(name).ok_or_else(|| Cd5Error::UnknownElement(name.clone()))?);
        }
        if upper {
            let v = parse_value(rhs).ok_or_else(|| err(rhs_off, rhs.len(), &["lattice value"], rhs))??;
            interp.predicates.entry(sym).or_default().insert(tuple, v);
        } else {
            let d = interp.element(rhs).ok_or_else(|| Cd5Error::UnknownElement(rhs.to_string()))?;
            interp.functions.entry(sym).or_default().insert(tuple, d);
        }
    }
    interp.validate()?;
    Ok(interp)
}

pub fn print_interpretation(i: &Interpretation) -> String {
    let mut out = format!("domain {}\n", i.domain.join(" "));
    let args = |t: &[usize]| {
        if t.is_empty() {
            String::new()
        } else {
            format!("({})", t.iter().map(|&d| i.domain[d].as_str()).collect::<Vec<_>>().join(","))
        }
    };
    for (p, table) in &i.predicates {
        for (t, v) in table {
            out.push_str(&format!("{p}{} = {v}\n", args(t)));
        }
    }
    for (f, table) in &i.functions {
        for (t, d) in table {
            out.push_str(&format!("{f}{} = {}\n", args(t), i.domain[*d]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cd5::eval;

    #[test]
    fn parses_and_round_trips() {
        let src = "domain a b\nP(a) = (1,0,0)\nP(b) = 010\nQ = 111\nc = b\n";
        let i = parse_interpretation(src).unwrap();
        assert_eq!(i.domain, vec!["a", "b"]);
        let f = parse_formula("exists x. P(x)").unwrap();
        assert_eq!(eval(&i, &f).unwrap(), Cd5Value::new(1, 1, 0).unwrap());
        assert_eq!(parse_interpretation(&print_interpretation(&i)).unwrap(), i);
    }

    #[test]
    fn rejects_partial_tables_and_bad_points() {
        assert!(matches!(
            parse_interpretation("domain a b\nP(a) = 100\n"),
            Err(Cd5FileError::Invalid(Cd5Error::NotTotal { .. }))
        ));
        assert!(matches!(
            parse_interpretation("domain a\nP(a) = 011\n"),
            Err(Cd5FileError::Invalid(Cd5Error::NotALatticePoint(0, 1, 1)))
        ));
    }
}
