//! Line-oriented polynomial text format.
//!
//! One term per line, `<coefficient> <e1> <e2> … <eK>`, in descending
//! graded-lex order. Lines starting with `#` are comments. The zero
//! polynomial has no term lines at all. Since term lines carry no variable
//! count, writers emit a `# nvars K` header comment that readers honor when
//! the body is empty.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::PolyError;
use crate::poly::{ExactPoly, Monomial};

pub fn to_text(p: &ExactPoly) -> String {
    to_text_with_comments(p, &[])
}

/// Serializes with extra `#` comment lines after the `nvars` header.
pub fn to_text_with_comments(p: &ExactPoly, comments: &[String]) -> String {
    let mut s = String::new();
    writeln!(s, "# nvars {}", p.nvars()).unwrap();
    for c in comments {
        for line in c.lines() {
            writeln!(s, "# {line}").unwrap();
        }
    }
    for (m, c) in p.terms() {
        write!(s, "{c}").unwrap();
        for e in m.exponents() {
            write!(s, " {e}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// Parses the text format. `nvars` may be supplied by the caller; otherwise
/// it is taken from the header comment or the first term line.
pub fn from_text(text: &str, nvars: Option<usize>) -> Result<ExactPoly, PolyError> {
    let mut header: Option<usize> = None;
    let mut terms = Vec::new();
    let mut width = nvars;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut it = rest.split_whitespace();
            if it.next() == Some("nvars") {
                if let Some(v) = it.next().and_then(|v| v.parse().ok()) {
                    header = Some(v);
                    width = width.or(Some(v));
                }
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let coeff: BigInt = fields
            .next()
            .unwrap()
            .parse()
            .map_err(|_| PolyError::Parse {
                line: line_no,
                msg: "bad coefficient".into(),
            })?;
        let exps: Vec<u32> = fields
            .map(|f| {
                f.parse().map_err(|_| PolyError::Parse {
                    line: line_no,
                    msg: format!("bad exponent {f:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        let w = *width.get_or_insert(exps.len());
        if exps.len() != w {
            return Err(PolyError::MonomialLength {
                expected: w,
                got: exps.len(),
            });
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    let n = width.or(header).ok_or(PolyError::Parse {
        line: 0,
        msg: "empty polynomial without a `# nvars` header".into(),
    })?;
    Ok(ExactPoly::from_terms(n, terms))
}
