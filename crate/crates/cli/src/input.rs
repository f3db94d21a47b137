//! Reading FDDS, forests and polynomial manifests from files or inline
//! literals.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use fdds::{Fdds, FddsPolynomial, Forest, ForestPolynomial, Polynomial, Semiring};

/// A user input problem; reported on stderr with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

/// Text of an argument and a name to report errors under. An argument that
/// names an existing file is read; anything else is an inline literal.
struct Source {
    name: String,
    text: String,
    dir: Option<PathBuf>,
}

fn resolve(arg: &str, base: Option<&Path>) -> Result<Source> {
    let path = match base {
        Some(dir) if Path::new(arg).is_relative() => dir.join(arg),
        _ => PathBuf::from(arg),
    };
    if path.is_file() {
        let text = fs::read_to_string(&path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        Ok(Source {
            name: path.display().to_string(),
            text,
            dir: path.parent().map(Path::to_path_buf),
        })
    } else {
        Ok(Source {
            name: format!("inline literal {arg:?}"),
            text: arg.to_string(),
            dir: None,
        })
    }
}

/// Values that can be read from an FDDS file or a forest file.
pub trait Value: Semiring + fmt::Display + Sized {
    fn parse_text(text: &str) -> fdds::Result<Self>;
}

impl Value for Fdds {
    fn parse_text(text: &str) -> fdds::Result<Self> {
        Fdds::parse(text)
    }
}

impl Value for Forest {
    /// One forest literal per line, summed; a bare tree is a one-tree forest.
    fn parse_text(text: &str) -> fdds::Result<Self> {
        let mut f = Forest::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let part: Forest = line.parse().map_err(|e| with_line(e, i + 1))?;
            f = f.sum(&part);
        }
        Ok(f)
    }
}

fn with_line(e: fdds::Error, n: usize) -> fdds::Error {
    match e {
        fdds::Error::MalformedInput {
            line: None,
            token,
            message,
        } => fdds::Error::MalformedInput {
            line: Some(n),
            token,
            message,
        },
        other => other,
    }
}

fn load_from<V: Value>(arg: &str, base: Option<&Path>) -> Result<V> {
    let src = resolve(arg, base)?;
    V::parse_text(&src.text).map_err(|e| InputError(format!("{}: {e}", src.name)))
}

pub fn load<V: Value>(arg: &str) -> Result<V> {
    load_from(arg, None)
}

pub fn load_fdds(arg: &str) -> Result<Fdds> {
    load(arg)
}

/// Reads a polynomial manifest: one term per line, `<exponent> <path |
/// inline literal>`, `#` comments. Paths are relative to the manifest. An
/// argument that is not a file is read as an inline manifest whose terms are
/// separated by `;` or newlines.
pub fn load_poly<V: Value>(arg: &str) -> Result<Polynomial<V>> {
    let src = resolve(arg, None)?;
    let inline = src.dir.is_none();
    let lines: Vec<&str> = if inline {
        src.text.split([';', '\n']).collect()
    } else {
        src.text.lines().collect()
    };
    let mut seen = BTreeSet::new();
    let mut terms = Vec::new();
    for (i, raw) in lines.iter().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| InputError(format!("{}: line {}: {msg}", src.name, i + 1));
        let (exp, coef) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| at(format!("expected `<exponent> <coefficient>`, found {line:?}")))?;
        let exp: u32 = exp.parse().map_err(|_| at(format!("invalid exponent {exp:?}")))?;
        if !seen.insert(exp) {
            return Err(at(format!("exponent {exp} appears twice")));
        }
        let coef = coef.trim();
        let value: V = load_from(coef, src.dir.as_deref()).map_err(|e| at(e.0))?;
        terms.push((exp, value));
    }
    Polynomial::new(terms).map_err(|e| InputError(format!("{}: {e}", src.name)))
}

pub fn load_fdds_poly(arg: &str) -> Result<FddsPolynomial> {
    load_poly(arg)
}

pub fn load_forest_poly(arg: &str) -> Result<ForestPolynomial> {
    load_poly(arg)
}
