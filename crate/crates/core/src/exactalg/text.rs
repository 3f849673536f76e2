//! Plain-text matrix format.
//!
//! ```text
//! field gf 2        # or: field rat
//! size 3 2
//! 1 0
//! 0 1
//! 0 0
//! ```
//!
//! Blank lines and `#` comments are ignored. Rational entries are `a` or `a/b`.

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Line cursor over significant (non-blank, comment-stripped) lines.
pub(crate) struct Lines<'a> {
    inner: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then_some((i + 1, l))
            })
            .collect();
        Lines { inner, pos: 0 }
    }

    pub(crate) fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let line = self.inner.get(self.pos).copied().ok_or_else(|| {
            let last = self.inner.last().map_or(0, |l| l.0);
            Error::parse(last + 1, format!("unexpected end of input, expected {what}"))
        })?;
        self.pos += 1;
        Ok(line)
    }

    pub(crate) fn peek(&self) -> Option<&'a str> {
        self.inner.get(self.pos).map(|l| l.1)
    }

    pub(crate) fn finish(&self) -> Result<()> {
        match self.inner.get(self.pos) {
            Some((n, l)) => Err(Error::parse(*n, format!("trailing content `{l}`"))),
            None => Ok(()),
        }
    }

    /// `keyword <args...>`, returning the arguments.
    pub(crate) fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = self.next_line(keyword)?;
        let mut toks = line.split_whitespace();
        if toks.next() != Some(keyword) {
            return Err(Error::parse(n, format!("expected `{keyword}`, found `{line}`")));
        }
        Ok((n, toks.collect()))
    }

    pub(crate) fn header(&mut self) -> Result<(Field, usize, usize)> {
        let (n, args) = self.keyword("field")?;
        let field = match args.as_slice() {
            ["rat"] => Field::Rational,
            ["gf", p] => {
                let p: u64 = p.parse().map_err(|_| Error::parse(n, format!("bad modulus `{p}`")))?;
                Field::prime(p).map_err(|e| Error::parse(n, e.to_string()))?
            }
            _ => return Err(Error::parse(n, "expected `field gf <p>` or `field rat`")),
        };
        let (n, args) = self.keyword("size")?;
        let dims = parse_usizes(n, &args, 2)?;
        Ok((field, dims[0], dims[1]))
    }

    /// `rows` lines of `cols` entries.
    pub(crate) fn block(&mut self, field: Field, rows: usize, cols: usize) -> Result<Matrix> {
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let (n, line) = self.next_line("matrix row")?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != cols {
                return Err(Error::parse(n, format!("expected {cols} entries, found {}", toks.len())));
            }
            for t in toks {
                entries.push(field.parse_scalar(t).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::parse(n, message),
                    other => other,
                })?);
            }
        }
        Matrix::from_scalars(field, rows, cols, &entries)
    }
}

pub(crate) fn parse_usizes(line: usize, args: &[&str], count: usize) -> Result<Vec<usize>> {
    if args.len() != count {
        return Err(Error::parse(line, format!("expected {count} integers")));
    }
    args.iter().map(|a| a.parse().map_err(|_| Error::parse(line, format!("bad integer `{a}`")))).collect()
}

pub(crate) fn write_header(out: &mut String, field: Field, rows: usize, cols: usize) {
    out.push_str(&format!("field {field}\nsize {rows} {cols}\n"));
}

pub(crate) fn write_block(out: &mut String, m: &Matrix) {
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

impl Matrix {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_header(&mut out, self.field(), self.nrows(), self.ncols());
        write_block(&mut out, self);
        out
    }

    pub fn from_text(text: &str) -> Result<Matrix> {
        let mut lines = Lines::new(text);
        let (field, rows, cols) = lines.header()?;
        let m = lines.block(field, rows, cols)?;
        lines.finish()?;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_comments() {
        let m = Matrix::from_text("# pencil\nfield rat\nsize 2 2\n1/2 -3\n\n0 4/8\n").unwrap();
        assert_eq!(m.get(0, 0), Field::Rational.from_ratio(1, 2));
        assert_eq!(m.get(1, 1), Field::Rational.from_ratio(1, 2));
        assert_eq!(Matrix::from_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(Matrix::from_text("field gf 4\nsize 1 1\n0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Matrix::from_text("field gf 2\nsize 1 2\n0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Matrix::from_text("field gf 2\nsize 1 1\n0\n1\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(Matrix::from_text("field gf 2\nsize 2 1\n0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Matrix::from_text("field rat\nsize 1 1\nx\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn empty_matrix_roundtrip() {
        let m = Matrix::zeros(Field::gf3(), 0, 4);
        assert_eq!(Matrix::from_text(&m.to_text()).unwrap(), m);
    }
}
