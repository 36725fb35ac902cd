//! The `.mcode` text format.
//!
//! ```text
//! # optional comments
//! nmaj=16
//! 0101010101010101
//! 0011001100110011
//! ```
//!
//! The header gives the number of modes; each following line is one stored
//! generator with γ_1 leftmost. Fermion parity is implicit and never listed.

use crate::code::{MajoranaCode, Violation};
use crate::error::{Error, Result};
use crate::f2::MajoranaOperator;

/// A parsed file: the code plus the source line of each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McodeFile {
    pub code: MajoranaCode,
    pub lines: Vec<usize>,
}

impl McodeFile {
    /// Syntactic parse only; group conditions are checked by [`McodeFile::validated`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut nmaj: Option<usize> = None;
        let mut gens = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            match nmaj {
                None => {
                    let value = line
                        .strip_prefix("nmaj")
                        .map(str::trim_start)
                        .and_then(|r| r.strip_prefix('='))
                        .ok_or_else(|| err(format!("expected header nmaj=<N>, got {line:?}")))?;
                    let n: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("bad mode count {:?}", value.trim())))?;
                    MajoranaOperator::identity(n).map_err(|e| err(e.to_string()))?;
                    nmaj = Some(n);
                }
                Some(n) => {
                    let op: MajoranaOperator =
                        line.parse().map_err(|e: Error| err(e.to_string()))?;
                    if op.nmaj() != n {
                        return Err(err(format!("expected {n} characters, got {}", op.nmaj())));
                    }
                    gens.push(op);
                    lines.push(line_no);
                }
            }
        }
        let nmaj = nmaj.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing nmaj=<N> header".into(),
        })?;
        Ok(Self {
            code: MajoranaCode::new(nmaj, gens)?,
            lines,
        })
    }

    /// Source line a violation refers to (the later generator for pairs).
    pub fn line_of(&self, v: &Violation) -> Option<usize> {
        let idx = match v {
            Violation::OddModeCount(_) => return None,
            Violation::ZeroGenerator { index }
            | Violation::OddWeight { index, .. }
            | Violation::DependentGenerator { index }
            | Violation::ParityInSpan { index } => *index,
            Violation::AnticommutingPair { second, .. } => *second,
        };
        self.lines.get(idx).copied()
    }

    /// The code, or the first violation reported against its source line.
    pub fn validated(self) -> Result<MajoranaCode> {
        match self.code.validate() {
            Ok(_) => Ok(self.code),
            Err(vs) => {
                let v = &vs[0];
                Err(Error::Parse {
                    line: self.line_of(v).unwrap_or(1),
                    msg: v.to_string(),
                })
            }
        }
    }
}

/// Parses and validates a `.mcode` document.
pub fn read_mcode(text: &str) -> Result<MajoranaCode> {
    McodeFile::parse(text)?.validated()
}

/// Serializes a code; stored generators are written verbatim in order.
pub fn write_mcode(code: &MajoranaCode) -> String {
    let mut out = format!("nmaj={}\n", code.nmaj());
    for g in code.stored() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Like [`write_mcode`] with leading `#` comment lines.
pub fn write_mcode_with_comments(code: &MajoranaCode, comments: &[String]) -> String {
    let mut out: String = comments.iter().map(|c| format!("# {c}\n")).collect();
    out.push_str(&write_mcode(code));
    out
}
