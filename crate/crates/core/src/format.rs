//! Cayley table text format.
//!
//! ```text
//! # names: e a
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated indices (row = left factor). Lines starting with `#`
//! are comments; a `# names:` comment labels the elements for reports.

use crate::cayley::Semigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub semigroup: Semigroup,
    pub names: Option<Vec<String>>,
}

impl TableFile {
    pub fn name_of(&self, x: usize) -> String {
        element_name(self.names.as_deref(), x)
    }

    /// Accepts an index or a declared element name.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        let n = self.semigroup.order();
        if let Some(k) = self
            .names
            .as_ref()
            .and_then(|names| names.iter().position(|m| m == token))
        {
            return Ok(k);
        }
        match token.parse::<usize>() {
            Ok(k) if k < n => Ok(k),
            _ => Err(Error::InvalidSpec(format!("`{token}` is not an element of this table"))),
        }
    }
}

pub fn element_name(names: Option<&[String]>, x: usize) -> String {
    names.and_then(|ns| ns.get(x).cloned()).unwrap_or_else(|| x.to_string())
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens with 1-based column numbers.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_table(text: &str) -> Result<TableFile> {
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(list) = comment.trim_start().strip_prefix("names:") {
                names = Some((line_no, list.split_whitespace().map(str::to_string).collect()));
            }
            continue;
        }
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        let Some(n) = order else {
            if toks.len() != 1 {
                return Err(parse_error(line_no, toks[1].0, "expected the order alone on its line"));
            }
            let n = toks[0]
                .1
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| parse_error(line_no, toks[0].0, "order must be a positive integer"))?;
            order = Some(n);
            continue;
        };
        if rows.len() == n {
            return Err(parse_error(line_no, toks[0].0, format!("more than {n} table rows")));
        }
        if toks.len() != n {
            let column = toks.get(n).map_or(raw.len() + 1, |t| t.0);
            return Err(parse_error(
                line_no,
                column,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let v = tok
                .parse::<usize>()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| parse_error(line_no, col, format!("`{tok}` is not an element index below {n}")))?;
            row.push(v);
        }
        rows.push(row);
    }

    let n = order.ok_or_else(|| parse_error(last_line.max(1), 1, "missing order line"))?;
    if rows.len() != n {
        return Err(parse_error(
            last_line.max(1),
            1,
            format!("expected {n} table rows, found {}", rows.len()),
        ));
    }
    let names = match names {
        Some((line, list)) if list.len() != n => {
            return Err(parse_error(
                line,
                1,
                format!("names lists {} elements, expected {n}", list.len()),
            ));
        }
        other => other.map(|(_, list)| list),
    };
    Ok(TableFile {
        semigroup: Semigroup::new(n, rows)?,
        names,
    })
}

pub fn write_table(s: &Semigroup, names: Option<&[String]>) -> String {
    let mut out = String::new();
    if let Some(names) = names {
        out.push_str("# names: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("{}\n", s.order()));
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_names() {
        let f = parse_table("# Z2\n# names: e a\n2\n0 1\n# mid\n1 0\n").unwrap();
        assert_eq!(f.semigroup.table(), &[0, 1, 1, 0]);
        assert_eq!(f.names.as_deref(), Some(&["e".to_string(), "a".to_string()][..]));
        assert_eq!(f.resolve("a").unwrap(), 1);
        assert_eq!(f.resolve("0").unwrap(), 0);
        assert!(f.resolve("b").is_err());
        assert_eq!(f.name_of(1), "a");
    }

    #[test]
    fn round_trip() {
        let s = Semigroup::new(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        let f = parse_table(&write_table(&s, Some(&names))).unwrap();
        assert_eq!(f.semigroup, s);
        assert_eq!(f.names, Some(names));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_table("2\n0 1\n1 7\n").unwrap_err(),
            Error::Parse {
                line: 3,
                column: 3,
                message: "`7` is not an element index below 2".into()
            }
        );
        assert!(matches!(
            parse_table("2\n0 1 1\n"),
            Err(Error::Parse { line: 2, column: 5, .. })
        ));
        assert!(matches!(parse_table("2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_table("# only\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_table("x\n"),
            Err(Error::Parse { line: 1, column: 1, .. })
        ));
        assert!(matches!(
            parse_table("2\n1 1\n0 0\n"),
            Err(Error::Associativity { i: 0, j: 0, k: 0, .. })
        ));
    }
}
