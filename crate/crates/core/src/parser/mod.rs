//! Concrete syntax: lexer, recursive-descent parser and minimal-parenthesis
//! printer for terms, formulas and sequents. Proof, model and CD5
//! interpretation file formats live in the submodules.
//!
//! Grammar (loosest first): `->` (right-assoc), `|`, `&` (both left-assoc),
//! then the prefix operators `~`, `forall x.` and `exists x.`, which bind as
//! tightly as negation. Lowercase identifiers are variables, or function
//! symbols when followed by `(`; `c()` is a constant. Uppercase identifiers
//! are predicates. `_|_` is falsum, `T` verum.

mod cd5_format;
mod model_format;
mod proof_format;

pub use cd5_format::{parse_interpretation, print_interpretation, Cd5FileError};
pub use model_format::{parse_model, print_model, ModelFileError};
pub use proof_format::{parse_proof, print_proof};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::syntax::{Formula, Sequent, Term};

/// Byte offsets into the parsed input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> SourceSpan {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }

    pub fn shifted(self, by: usize) -> SourceSpan {
        SourceSpan::new(self.start + by, self.end + by)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("syntax error at {}..{}: expected {}, found {found}", span.start, span.end, expected.join(" or "))]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(span: SourceSpan, expected: &[&str], found: impl Into<String>) -> ParseError {
        ParseError {
            span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }

    pub fn shifted(mut self, by: usize) -> ParseError {
        self.span = self.span.shifted(by);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Amp,
    Bar,
    Arrow,
    FatArrow,
    Tilde,
    Bottom,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::FatArrow => f.write_str("`=>`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Bottom => f.write_str("`_|_`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(src: &str) -> Result<Vec<(Tok, SourceSpan)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < src.len() {
        let c = src[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let start = i;
        let tok = if src[i..].starts_with("_|_") {
            i += 3;
            Tok::Bottom
        } else if src[i..].starts_with("->") {
            i += 2;
            Tok::Arrow
        } else if src[i..].starts_with("=>") {
            i += 2;
            Tok::FatArrow
        } else if is_ident_start(c) {
            while i < src.len() && is_ident_char(bytes[i] as char) {
                i += 1;
            }
            Tok::Ident(src[start..i].to_string())
        } else {
            i += c.len_utf8();
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '&' => Tok::Amp,
                '|' => Tok::Bar,
                '~' => Tok::Tilde,
                _ => {
                    return Err(ParseError::new(
                        SourceSpan::new(start, i),
                        &["a token"],
                        format!("`{c}`"),
                    ))
                }
            }
        };
        out.push((tok, SourceSpan::new(start, i)));
    }
    out.push((Tok::Eof, SourceSpan::new(src.len(), src.len())));
    Ok(out)
}

fn is_upper(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser { toks: lex(src)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> SourceSpan {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::new(self.span(), expected, self.peek().to_string())
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(kw) if kw == "forall" || kw == "exists" => {
                self.bump();
                let var = match self.peek().clone() {
                    Tok::Ident(v) if !is_upper(&v) && v != "forall" && v != "exists" => {
                        self.bump();
                        v
                    }
                    _ => return Err(self.error(&["variable"])),
                };
                self.expect(Tok::Dot, "`.`")?;
                let body = self.unary()?;
                Ok(if kw == "forall" {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Bottom => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Ident(name) if is_upper(&name) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    let args = self.args()?;
                    Ok(Formula::Atom(name, args))
                } else if name == "T" {
                    Ok(Formula::Top)
                } else {
                    Ok(Formula::Atom(name, Vec::new()))
                }
            }
            _ => Err(self.error(&["formula"])),
        }
    }

    fn args(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RParen => {
                    self.bump();
                    return Ok(args);
                }
                _ => return Err(self.error(&["`,`", "`)`"])),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if !is_upper(&name) && name != "forall" && name != "exists" => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    Ok(Term::App(name, self.args()?))
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => Err(self.error(&["term"])),
        }
    }

    fn formula_list(&mut self, stop: &Tok) -> Result<Vec<Formula>, ParseError> {
        let mut out = Vec::new();
        if self.peek() == stop {
            return Ok(out);
        }
        loop {
            out.push(self.formula()?);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                return Ok(out);
            }
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    p.end()?;
    Ok(f)
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.end()?;
    Ok(t)
}

pub fn parse_sequent(src: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(src)?;
    let ante = p.formula_list(&Tok::FatArrow)?;
    if *p.peek() != Tok::FatArrow {
        return Err(p.error(&["`,`", "`=>`"]));
    }
    p.bump();
    let succ = p.formula_list(&Tok::Eof)?;
    p.end()?;
    Ok(Sequent::new(ante, succ))
}

/// Parses a comma-separated list of formulas (possibly empty).
pub fn parse_formula_list(src: &str) -> Result<Vec<Formula>, ParseError> {
    let mut p = Parser::new(src)?;
    let fs = p.formula_list(&Tok::Eof)?;
    p.end()?;
    Ok(fs)
}

pub fn print_term(t: &Term) -> String {
    let mut s = String::new();
    write_term(t, &mut s);
    s
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::App(f, args) => {
            out.push_str(f);
            write_args(args, out);
        }
    }
}

fn write_args(args: &[Term], out: &mut String) {
    out.push('(');
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_term(a, out);
    }
    out.push(')');
}

const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;
const PREC_ATOM: u8 = 5;

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Implies(_, r) if **r == Formula::Bottom => PREC_UNARY,
        Formula::Implies(..) => PREC_IMP,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        Formula::Forall(..) | Formula::Exists(..) => PREC_UNARY,
        Formula::Atom(..) | Formula::Bottom | Formula::Top => PREC_ATOM,
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(f, 0, &mut s);
    s
}

fn write_formula(f: &Formula, min: u8, out: &mut String) {
    let paren = prec(f) < min;
    if paren {
        out.push('(');
    }
    match f {
        Formula::Atom(p, args) => {
            out.push_str(p);
            if !args.is_empty() || p == "T" {
                write_args(args, out);
            }
        }
        Formula::Bottom => out.push_str("_|_"),
        Formula::Top => out.push('T'),
        Formula::Implies(l, r) if **r == Formula::Bottom => {
            out.push('~');
            // Quantifier scope under negation is easy to misread; keep the parentheses.
            let min = if l.is_quantifier() { PREC_ATOM } else { PREC_UNARY };
            write_formula(l, min, out);
        }
        Formula::Implies(l, r) => {
            write_formula(l, PREC_OR, out);
            out.push_str(" -> ");
            write_formula(r, PREC_IMP, out);
        }
        Formula::Or(l, r) => {
            write_formula(l, PREC_OR, out);
            out.push_str(" | ");
            write_formula(r, PREC_AND, out);
        }
        Formula::And(l, r) => {
            write_formula(l, PREC_AND, out);
            out.push_str(" & ");
            write_formula(r, PREC_UNARY, out);
        }
        Formula::Forall(v, b) | Formula::Exists(v, b) => {
            out.push_str(if matches!(f, Formula::Forall(..)) { "forall " } else { "exists " });
            out.push_str(v);
            out.push_str(". ");
            write_formula(b, PREC_UNARY, out);
        }
    }
    if paren {
        out.push(')');
    }
}

pub fn print_formula_list(fs: &[Formula]) -> String {
    fs.iter().map(print_formula).collect::<Vec<_>>().join(", ")
}

pub fn print_sequent(s: &Sequent) -> String {
    let ante = print_formula_list(&s.antecedent);
    let succ = print_formula_list(&s.succedent);
    match (ante.is_empty(), succ.is_empty()) {
        (true, true) => "=>".to_string(),
        (true, false) => format!("=> {succ}"),
        (false, true) => format!("{ante} =>"),
        (false, false) => format!("{ante} => {succ}"),
    }
}

/// Strips `#` comment lines and blank lines, returning the remaining lines
/// with their byte offsets.
pub(crate) fn content_lines(src: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in src.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        let trimmed = body.trim_start();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            out.push((offset, body));
        }
        offset += line.len();
    }
    out
}

/// Parses a `.fml` file: one formula per non-comment line.
pub fn parse_formula_file(src: &str) -> Result<Vec<Formula>, ParseError> {
    content_lines(src)
        .into_iter()
        .map(|(off, line)| parse_formula(line).map_err(|e| e.shifted(off)))
        .collect()
}

/// Parses a `.seq` file: exactly one sequent.
pub fn parse_sequent_file(src: &str) -> Result<Sequent, ParseError> {
    let lines = content_lines(src);
    match lines.as_slice() {
        [(off, line)] => parse_sequent(line).map_err(|e| e.shifted(*off)),
        [] => Err(ParseError::new(SourceSpan::new(src.len(), src.len()), &["sequent"], "end of input")),
        [_, (off, line), ..] => Err(ParseError::new(
            SourceSpan::new(*off, off + line.len()),
            &["end of input"],
            "a second sequent",
        )),
    }
}
