//! Plain-text grid format.
//!
//! ```text
//! # optional comment lines
//! k=2
//! 1 2 3 4
//! 3 4 1 2
//! . . . .
//! . . . .
//! ```
//!
//! The header `k=<int>` is followed by exactly `n = k²` rows of `n`
//! whitespace-separated tokens. A token is a decimal value in `1..=n` or `.`
//! for an empty cell; `0` is also read as empty. Lines whose first non-blank
//! character is `#` are comments, and blank lines are ignored. Output always
//! uses single spaces and `.`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::grid::{Order, SudokuGrid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    /// 1-based line of the input.
    pub line: usize,
    /// 1-based character column within the line.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `k=<int>` header")]
    MissingHeader,
    #[error("bad header {0:?}; expected `k=<int>`")]
    BadHeader(String),
    #[error("invalid order: {0}")]
    BadOrder(String),
    #[error("bad token {0:?}")]
    BadToken(String),
    #[error("value {value} outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("row has {found} cells, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("found {found} rows, expected {expected} for k={k}")]
    RowCount { k: usize, expected: usize, found: usize },
}

/// Parses the text format into a grid. Conflicting values are accepted;
/// validity is a separate question answered by [`SudokuGrid::validate`].
pub fn parse(text: &str) -> Result<SudokuGrid, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let header_col = header.len() - header.trim_start().len() + 1;
    let k = header
        .trim()
        .strip_prefix("k=")
        .and_then(|s| s.trim().parse::<usize>().ok())
        .ok_or_else(|| ParseError {
            line: header_line,
            column: header_col,
            kind: ParseErrorKind::BadHeader(header.trim().to_string()),
        })?;
    let order = Order::new(k).map_err(|e| ParseError {
        line: header_line,
        column: header_col,
        kind: ParseErrorKind::BadOrder(e.to_string()),
    })?;
    let n = order.n();

    let mut grid = SudokuGrid::new(order);
    let mut rows = 0;
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows == n {
            return Err(ParseError {
                line: line_no,
                column: 1,
                kind: ParseErrorKind::RowCount {
                    k,
                    expected: n,
                    found: rows + 1,
                },
            });
        }
        let mut count = 0;
        for (column, token) in tokens(line) {
            count += 1;
            if count > n {
                return Err(ParseError {
                    line: line_no,
                    column,
                    kind: ParseErrorKind::RowLength {
                        expected: n,
                        found: tokens(line).count(),
                    },
                });
            }
            let err = |kind| ParseError {
                line: line_no,
                column,
                kind,
            };
            if token == "." {
                continue;
            }
            let value: usize = if token.bytes().all(|b| b.is_ascii_digit()) {
                token
                    .parse()
                    .map_err(|_| err(ParseErrorKind::BadToken(token.to_string())))?
            } else {
                return Err(err(ParseErrorKind::BadToken(token.to_string())));
            };
            if value == 0 {
                continue;
            }
            if value > n {
                return Err(err(ParseErrorKind::ValueOutOfRange { value, n }));
            }
            grid.put(rows, count - 1, value);
        }
        if count < n {
            return Err(ParseError {
                line: line_no,
                column: line.trim_end().chars().count() + 1,
                kind: ParseErrorKind::RowLength {
                    expected: n,
                    found: count,
                },
            });
        }
        rows += 1;
    }
    if rows < n {
        return Err(ParseError {
            line: last_line,
            column: 1,
            kind: ParseErrorKind::RowCount {
                k,
                expected: n,
                found: rows,
            },
        });
    }
    Ok(grid)
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skipped = rest.len() - rest.trim_start().len();
        offset += skipped;
        rest = &rest[skipped..];
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let column = line[..offset].chars().count() + 1;
        offset += end;
        rest = &rest[end..];
        Some((column, token))
    })
}

/// Renders the canonical text form, newline-terminated.
pub fn render(grid: &SudokuGrid) -> String {
    let n = grid.n();
    let mut out = format!("k={}\n", grid.k());
    for r in 0..n {
        for c in 0..n {
            if c > 0 {
                out.push(' ');
            }
            match grid.at(r, c) {
                0 => out.push('.'),
                v => write!(out, "{v}").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
