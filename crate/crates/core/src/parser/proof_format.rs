//! Indented proof blocks: one node per line,
//! `rule [principal-index] [term] ; conclusion`, premises indented two spaces
//! below their conclusion.

use super::{content_lines, parse_sequent, parse_term, print_sequent, print_term, ParseError, SourceSpan};
use crate::calculus::{Proof, Rule};

struct Line {
    offset: usize,
    depth: usize,
    proof: Proof,
}

pub fn parse_proof(src: &str) -> Result<Proof, ParseError> {
    let mut lines = Vec::new();
    for (offset, text) in content_lines(src) {
        lines.push(parse_line(offset, text)?);
    }
    let Some(first) = lines.first() else {
        return Err(ParseError::new(SourceSpan::new(src.len(), src.len()), &["proof line"], "end of input"));
    };
    if first.depth != 0 {
        return Err(ParseError::new(
            SourceSpan::new(first.offset, first.offset + first.depth * 2),
            &["unindented root line"],
            "indentation",
        ));
    }
    // Stack of open nodes; a line at depth d becomes the next premise of the
    // node at depth d-1.
    let mut stack: Vec<(usize, Proof)> = Vec::new();
    let mut root: Option<Proof> = None;
    for line in lines {
        if root.is_some() {
            return Err(ParseError::new(
                SourceSpan::new(line.offset, line.offset),
                &["end of proof"],
                "a second root",
            ));
        }
        while let Some((d, _)) = stack.last() {
            if *d >= line.depth {
                let (_, done) = stack.pop().unwrap();
                attach(&mut stack, &mut root, done);
            } else {
                break;
            }
        }
        let parent_depth = stack.last().map(|(d, _)| *d);
        let ok = match parent_depth {
            None => line.depth == 0 && root.is_none(),
            Some(d) => line.depth == d + 1,
        };
        if !ok {
            return Err(ParseError::new(
                SourceSpan::new(line.offset, line.offset + line.depth * 2),
                &["indentation one level below the conclusion"],
                format!("depth {}", line.depth),
            ));
        }
        stack.push((line.depth, line.proof));
    }
    while let Some((_, done)) = stack.pop() {
        attach(&mut stack, &mut root, done);
    }
    Ok(root.expect("at least one line"))
}

fn attach(stack: &mut [(usize, Proof)], root: &mut Option<Proof>, done: Proof) {
    match stack.last_mut() {
        Some((_, parent)) => parent.premises.push(done),
        None => *root = Some(done),
    }
}

fn parse_line(offset: usize, text: &str) -> Result<Line, ParseError> {
    let indent = text.len() - text.trim_start_matches(' ').len();
    if text[indent..].starts_with('\t') || indent % 2 != 0 {
        return Err(ParseError::new(
            SourceSpan::new(offset, offset + indent + 1),
            &["indentation by multiples of two spaces"],
            "irregular indentation",
        ));
    }
    let Some(semi) = text.find(';') else {
        return Err(ParseError::new(
            SourceSpan::new(offset + text.len(), offset + text.len()),
            &["`;`"],
            "end of line",
        ));
    };
    let head = &text[indent..semi];
    let head_off = offset + indent;
    let name_len = head.find(char::is_whitespace).unwrap_or(head.len());
    let name = &head[..name_len];
    let rule = Rule::from_name(name).ok_or_else(|| {
        ParseError::new(SourceSpan::new(head_off, head_off + name_len), &["rule name"], format!("`{name}`"))
    })?;
    let mut rest = &head[name_len..];
    let mut rest_off = head_off + name_len;
    let trimmed = rest.trim_start();
    rest_off += rest.len() - trimmed.len();
    rest = trimmed;
    let digits = rest.len() - rest.trim_start_matches(|c: char| c.is_ascii_digit()).len();
    let mut principal = 0;
    if digits > 0 {
        principal = rest[..digits].parse().map_err(|_| {
            ParseError::new(SourceSpan::new(rest_off, rest_off + digits), &["index"], "oversized number")
        })?;
        let after = &rest[digits..];
        let t = after.trim_start();
        rest_off += digits + after.len() - t.len();
        rest = t;
    }
    let rest = rest.trim_end();
    let term = if rest.is_empty() {
        None
    } else {
        Some(parse_term(rest).map_err(|e| e.shifted(rest_off))?)
    };
    if rule.needs_annotation() && term.is_none() {
        return Err(ParseError::new(
            SourceSpan::new(offset + semi, offset + semi),
            &["term annotation"],
            "`;`",
        ));
    }
    let conclusion = parse_sequent(&text[semi + 1..]).map_err(|e| e.shifted(offset + semi + 1))?;
    Ok(Line {
        offset,
        depth: indent / 2,
        proof: Proof { rule, principal, term, conclusion, premises: Vec::new() },
    })
}

pub fn print_proof(p: &Proof) -> String {
    let mut out = String::new();
    write_node(p, 0, &mut out);
    out
}

fn write_node(p: &Proof, depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push_str(p.rule.name());
    if p.rule.principal_side().is_some() {
        out.push(' ');
        out.push_str(&p.principal.to_string());
    }
    if let Some(t) = &p.term {
        out.push(' ');
        out.push_str(&print_term(t));
    }
    out.push_str(" ; ");
    out.push_str(&print_sequent(&p.conclusion));
    out.push('\n');
    for c in &p.premises {
        write_node(c, depth + 1, out);
    }
}
