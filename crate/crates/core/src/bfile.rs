//! OEIS-style b-files: one `index value` pair per line, `#` comments,
//! indices contiguous from the first one.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::rational::{is_integer, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFile {
    pub offset: i64,
    pub values: Vec<Rational>,
}

impl SequenceFile {
    pub fn new(offset: i64, values: Vec<Rational>) -> Self {
        SequenceFile { offset, values }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &Rational)> {
        (self.offset..).zip(&self.values)
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let err = |line: usize, message: String| Error::BFile {
            path: path.to_path_buf(),
            line,
            message,
        };
        let mut offset = None;
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(lineno, "expected `index value`".into()));
            };
            let idx: i64 = idx
                .parse()
                .map_err(|_| err(lineno, format!("invalid index `{idx}`")))?;
            let val =
                parse_rational(val).ok_or_else(|| err(lineno, format!("invalid value `{val}`")))?;
            let start = *offset.get_or_insert(idx);
            if idx != start + values.len() as i64 {
                return Err(err(lineno, "non-contiguous index".into()));
            }
            values.push(val);
        }
        Ok(SequenceFile {
            offset: offset.unwrap_or(0),
            values,
        })
    }

    /// Renders the b-file text; every value must be an integer.
    pub fn to_bfile_string(&self) -> Result<String> {
        let mut out = String::new();
        for (index, value) in self.entries() {
            if !is_integer(value) {
                return Err(Error::NonIntegerValue {
                    index,
                    value: value.to_string(),
                });
            }
            out.push_str(&format!("{index} {value}\n"));
        }
        Ok(out)
    }
}

pub fn read_bfile(path: impl AsRef<Path>) -> Result<SequenceFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    SequenceFile::parse(&text, path)
}

pub fn write_bfile(seq: &SequenceFile, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path.as_ref(), &seq.to_bfile_string()?)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Index as numbered in the reference file.
    pub index: i64,
    pub expected: Rational,
    pub actual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    /// Number of terms compared.
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl CompareReport {
    pub fn is_match(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "match over {} terms", self.checked),
            Some(m) => write!(
                f,
                "mismatch at index {}: expected {}, computed {}",
                m.index, m.expected, m.actual
            ),
        }
    }
}

/// Compares `computed` position by position against the reference, over
/// `min(count, reference length, computed length)` terms.
pub fn compare(computed: &[Rational], reference: &SequenceFile, count: usize) -> CompareReport {
    let checked = count.min(reference.values.len()).min(computed.len());
    let mismatch = reference
        .entries()
        .zip(computed)
        .take(checked)
        .find(|((_, e), a)| e != a)
        .map(|((index, e), a)| Mismatch {
            index,
            expected: e.clone(),
            actual: a.clone(),
        });
    CompareReport { checked, mismatch }
}
