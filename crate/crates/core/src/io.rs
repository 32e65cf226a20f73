//! Text formats for braces and construction data.
//!
//! Brace file:
//! ```text
//! skewbrace v1
//! n=<N>
//! dot:
//! <N lines of N space-separated indices>
//! circ:
//! <N lines>
//! # optional trailing comment lines
//! ```
//!
//! Construction file: header `skewbrace-construction v1`, then `B:` followed
//! by a brace block (without header), `C:` followed by `n=` and `table:`
//! with `|C|` rows, then `phi:`, `gamma:` and `psi:`, each with `|C|` lines
//! of `|B|` images. Lines end in LF.

use std::fmt::Write as _;

use crate::brace::SkewBrace;
use crate::construction::ConstructionData;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

pub const BRACE_HEADER: &str = "skewbrace v1";
pub const CONSTRUCTION_HEADER: &str = "skewbrace-construction v1";

/// A brace together with the comment lines of its file, without the `# `.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceFile {
    pub brace: SkewBrace,
    pub comments: Vec<String>,
}

impl BraceFile {
    pub fn new(brace: SkewBrace) -> Self {
        BraceFile {
            brace,
            comments: Vec::new(),
        }
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{BRACE_HEADER}\n");
        write_brace_block(&mut s, &self.brace);
        for c in &self.comments {
            let _ = writeln!(s, "# {c}");
        }
        s
    }

    /// Parses and fully re-validates the brace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        cur.expect_exact(BRACE_HEADER)?;
        let brace = cur.brace_block()?;
        let comments = cur.trailing_comments()?;
        Ok(BraceFile { brace, comments })
    }
}

pub fn brace_to_text(brace: &SkewBrace) -> String {
    BraceFile::new(brace.clone()).to_text()
}

pub fn parse_brace(text: &str) -> Result<SkewBrace> {
    Ok(BraceFile::parse(text)?.brace)
}

pub fn construction_to_text(data: &ConstructionData) -> String {
    let mut s = format!("{CONSTRUCTION_HEADER}\nB:\n");
    write_brace_block(&mut s, data.b());
    let _ = writeln!(s, "C:\nn={}\ntable:", data.c().order());
    write_rows(&mut s, data.c());
    for (name, maps) in [
        ("phi", data.phi_all()),
        ("gamma", data.gamma_all()),
        ("psi", data.psi_all()),
    ] {
        let _ = writeln!(s, "{name}:");
        for m in maps {
            let _ = writeln!(s, "{m}");
        }
    }
    s
}

/// Parses and re-runs every check of [`ConstructionData::new`].
pub fn parse_construction(text: &str) -> Result<ConstructionData> {
    let mut cur = Cursor::new(text);
    cur.expect_exact(CONSTRUCTION_HEADER)?;
    cur.expect_exact("B:")?;
    let b = cur.brace_block()?;
    cur.expect_exact("C:")?;
    let nc = cur.size()?;
    cur.expect_exact("table:")?;
    let c = Group::from_table(&cur.rows(nc, nc)?)?;
    let mut maps = Vec::new();
    for name in ["phi:", "gamma:", "psi:"] {
        cur.expect_exact(name)?;
        let line = cur.line_no + 1;
        let perms = cur
            .rows(nc, b.order())?
            .into_iter()
            .enumerate()
            .map(|(k, row)| {
                Permutation::from_images(row).map_err(|_| Error::Parse {
                    line: line + k,
                    msg: format!("{name} row {k} is not a permutation"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(perms);
    }
    cur.trailing_comments()?;
    let psi = maps.pop().expect("three blocks");
    let gamma = maps.pop().expect("three blocks");
    let phi = maps.pop().expect("three blocks");
    ConstructionData::new(b, c, phi, gamma, psi)
}

fn write_rows(s: &mut String, g: &Group) {
    let n = g.order();
    for row in g.flat_table().chunks(n) {
        let _ = writeln!(s, "{}", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
}

fn write_brace_block(s: &mut String, brace: &SkewBrace) {
    let _ = writeln!(s, "n={}\ndot:", brace.order());
    write_rows(s, brace.dot());
    s.push_str("circ:\n");
    write_rows(s, brace.circ());
}

struct Cursor<'a> {
    lines: Vec<&'a str>,
    /// Number of lines consumed; the next line is `line_no + 1` (1-based).
    line_no: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        Cursor { lines, line_no: 0 }
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }

    fn next(&mut self) -> Result<&'a str> {
        let line = self
            .lines
            .get(self.line_no)
            .copied()
            .ok_or_else(|| self.err(self.line_no + 1, "unexpected end of file"))?;
        self.line_no += 1;
        Ok(line.strip_suffix('\r').unwrap_or(line))
    }

    fn expect_exact(&mut self, want: &str) -> Result<()> {
        let got = self.next()?;
        if got != want {
            return Err(self.err(self.line_no, format!("expected `{want}`, found `{got}`")));
        }
        Ok(())
    }

    fn size(&mut self) -> Result<usize> {
        let line = self.next()?;
        line.strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .filter(|&n: &usize| n > 0)
            .ok_or_else(|| self.err(self.line_no, format!("expected `n=<positive integer>`, found `{line}`")))
    }

    fn rows(&mut self, count: usize, width: usize) -> Result<Vec<Vec<usize>>> {
        (0..count)
            .map(|_| {
                let line = self.next()?;
                let row = line
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<std::result::Result<Vec<usize>, _>>()
                    .map_err(|_| self.err(self.line_no, "expected decimal indices"))?;
                if row.len() != width {
                    return Err(self.err(self.line_no, format!("expected {width} entries, found {}", row.len())));
                }
                Ok(row)
            })
            .collect()
    }

    fn brace_block(&mut self) -> Result<SkewBrace> {
        let n = self.size()?;
        self.expect_exact("dot:")?;
        let dot = self.rows(n, n)?;
        self.expect_exact("circ:")?;
        let circ = self.rows(n, n)?;
        SkewBrace::from_tables(&dot, &circ)
    }

    fn trailing_comments(&mut self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        while self.line_no < self.lines.len() {
            let line = self.next()?;
            let body = line
                .strip_prefix('#')
                .ok_or_else(|| self.err(self.line_no, format!("unexpected content `{line}`")))?;
            out.push(body.strip_prefix(' ').unwrap_or(body).to_string());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    #[test]
    fn brace_round_trip() {
        let file = BraceFile::new(SkewBrace::trivial(&groups::symmetric(3))).with_comment("trivial on S3");
        let text = file.to_text();
        let back = BraceFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn exact_layout() {
        let text = brace_to_text(&SkewBrace::trivial(&groups::cyclic(2)));
        assert_eq!(text, "skewbrace v1\nn=2\ndot:\n0 1\n1 0\ncirc:\n0 1\n1 0\n");
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad = "skewbrace v1\nn=2\ndot:\n0 1\n1 0\ncirc:\n0 1\n";
        assert_eq!(
            parse_brace(bad),
            Err(Error::Parse {
                line: 8,
                msg: "unexpected end of file".into()
            })
        );
        let junk = "skewbrace v1\nn=2\ndot:\n0 1\n1 x\n";
        assert!(matches!(parse_brace(junk), Err(Error::Parse { line: 5, .. })));
    }
}
