//! Distance matrices as CSV: a header row of labels (optionally after an
//! empty corner cell), then one row per point, label first.

use csv::{ReaderBuilder, StringRecord, Trim, WriterBuilder};

use super::{ParseError, ParseErrorKind};
use crate::error::Error;
use crate::relations::{FiniteSpace, SemiPseudometric};

fn line_of(rec: &StringRecord) -> usize {
    rec.position().map_or(0, |p| p.line() as usize)
}

fn csv_error(e: csv::Error) -> ParseError {
    let line = e.position().map_or(0, |p| p.line() as usize);
    ParseError::at(line, 1, ParseErrorKind::Syntax(e.to_string()))
}

pub(crate) fn parse(text: &str) -> Result<SemiPseudometric, ParseError> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        None => return Err(ParseError::at(1, 1, ParseErrorKind::Invalid(Error::EmptySpace))),
        Some(r) => r.map_err(csv_error)?,
    };
    let header_line = line_of(&header);
    let corner = header.get(0).is_some_and(str::is_empty);
    let offset = usize::from(corner);
    let labels: Vec<String> = header.iter().skip(offset).map(str::to_owned).collect();
    for (k, label) in labels.iter().enumerate() {
        let column = k + 1 + offset;
        if label.is_empty() {
            return Err(ParseError::at(header_line, column, ParseErrorKind::Syntax("empty label".into())));
        }
        if labels[..k].contains(label) {
            return Err(ParseError::at(header_line, column, ParseErrorKind::DuplicateLabel(label.clone())));
        }
    }
    let n = labels.len();
    if n == 0 {
        return Err(ParseError::at(header_line, 1, ParseErrorKind::Invalid(Error::EmptySpace)));
    }

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut last_line = header_line;
    for rec in records {
        let rec = rec.map_err(csv_error)?;
        let line = line_of(&rec);
        last_line = line;
        let i = rows.len();
        if i == n {
            return Err(ParseError::at(line, 1, ParseErrorKind::NotSquare { expected: n, found: n + 1 }));
        }
        if rec.len() != n + 1 {
            return Err(ParseError::at(line, rec.len().min(n + 1), ParseErrorKind::NotSquare { expected: n, found: rec.len().saturating_sub(1) }));
        }
        if rec[0] != labels[i] {
            return Err(ParseError::at(
                line,
                1,
                ParseErrorKind::Syntax(format!("row label `{}` does not match column label `{}`", &rec[0], labels[i])),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (j, field) in rec.iter().skip(1).enumerate() {
            let column = j + 2;
            let v: f64 = field
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite() && *v >= 0.0)
                .map(|v| v + 0.0)
                .ok_or_else(|| ParseError::at(line, column, ParseErrorKind::InvalidDistance(field.to_owned())))?;
            if i == j && v != 0.0 {
                return Err(ParseError::at(line, column, ParseErrorKind::NonzeroDiagonal(v)));
            }
            if j < i && rows[j][i] != v {
                return Err(ParseError::at(line, column, ParseErrorKind::Asymmetric { value: v, transpose: rows[j][i] }));
            }
            row.push(v);
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::at(last_line + 1, 1, ParseErrorKind::NotSquare { expected: n, found: rows.len() }));
    }
    let space = FiniteSpace::new(labels).map_err(|e| ParseError::at(header_line, 1, ParseErrorKind::Invalid(e)))?;
    SemiPseudometric::new(space, rows).map_err(|e| ParseError::at(header_line, 1, ParseErrorKind::Invalid(e)))
}

pub(crate) fn serialize(d: &SemiPseudometric) -> String {
    let mut w = WriterBuilder::new().from_writer(Vec::new());
    let labels = d.space().labels();
    let header: Vec<&str> = std::iter::once("").chain(labels.iter().map(String::as_str)).collect();
    w.write_record(&header).expect("in-memory write");
    for (i, row) in d.rows().iter().enumerate() {
        let fields: Vec<String> = std::iter::once(labels[i].clone()).chain(row.iter().map(|v| v.to_string())).collect();
        w.write_record(&fields).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
