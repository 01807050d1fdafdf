//! Edge lists: one `a b` or `a -> b` pair per line, a lone label declares
//! a vertex, `#` starts a comment. Any `->` makes the graph directed, and
//! plain pairs in a directed list stand for both directions.

use super::{GraphDocument, ParseError, ParseErrorKind};
use crate::error::Error;
use crate::relations::FiniteSpace;

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut column = 0;
    let mut start_col = 0;
    for (byte, ch) in line.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &line[s..byte]));
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = column;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &line[s..]));
    }
    out
}

fn valid_label(label: &str) -> bool {
    !label.is_empty() && label != "->" && !label.contains("->") && !label.contains('#') && !label.contains(char::is_whitespace)
}

pub(crate) fn parse(text: &str) -> Result<GraphDocument, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut intern = |label: &str, line: usize, column: usize| -> Result<usize, ParseError> {
        if !valid_label(label) {
            return Err(ParseError::at(line, column, ParseErrorKind::Syntax(format!("invalid label `{label}`"))));
        }
        Ok(labels.iter().position(|l| l == label).unwrap_or_else(|| {
            labels.push(label.to_owned());
            labels.len() - 1
        }))
    };
    let mut pairs: Vec<(usize, usize, bool)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split_once('#').map_or(raw, |(c, _)| c);
        match tokens(content)[..] {
            [] => {}
            [(c, a)] => {
                intern(a, line, c)?;
            }
            [(ca, a), (cb, b)] => {
                let (i, j) = (intern(a, line, ca)?, intern(b, line, cb)?);
                pairs.push((i, j, false));
            }
            [(ca, a), (_, "->"), (cb, b)] => {
                let (i, j) = (intern(a, line, ca)?, intern(b, line, cb)?);
                pairs.push((i, j, true));
            }
            [_, (_, "->"), _, (c, t), ..] | [_, _, (c, t), ..] => {
                return Err(ParseError::at(line, c, ParseErrorKind::Syntax(format!("unexpected token `{t}`"))));
            }
        }
    }
    let directed = pairs.iter().any(|p| p.2);
    let edges = pairs
        .into_iter()
        .flat_map(|(i, j, arrow)| {
            let both = directed && !arrow && i != j;
            std::iter::once((i, j)).chain(both.then_some((j, i)))
        })
        .collect();
    let space = FiniteSpace::new(labels).map_err(|e| ParseError::at(1, 1, ParseErrorKind::Invalid(e)))?;
    Ok(GraphDocument { space, edges, directed })
}

pub(crate) fn serialize(g: &GraphDocument) -> Result<String, Error> {
    let labels = g.space.labels();
    if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
        return Err(Error::InvalidParameter(format!("label `{bad}` cannot be written to an edge list")));
    }
    let mut out = String::new();
    for l in labels {
        out.push_str(l);
        out.push('\n');
    }
    let sep = if g.directed { " -> " } else { " " };
    for &(i, j) in &g.edges {
        out.push_str(&labels[i]);
        out.push_str(sep);
        out.push_str(&labels[j]);
        out.push('\n');
    }
    Ok(out)
}
