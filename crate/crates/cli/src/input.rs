use std::fmt;
use std::io::Read;
use std::path::Path;

use serde_json::Value;
use num_traits::ToPrimitive;
use string_complex::io as formats;
use string_complex::scalar::parse_rational;
use string_complex::{GapSpace, Mode, Scalar, StringComplex, StringSet, DEFAULT_TOLERANCE};

/// A problem with the files or flags given on the command line (exit code 2).
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(InputError(msg.into()))
}

pub enum Content {
    Json(Value),
    Csv(String),
    Faces(String),
}

pub struct Source {
    pub name: String,
    pub content: Content,
}

pub fn read_text(path: &Path) -> anyhow::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_error(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn looks_like_faces(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .all(|l| l.split_whitespace().all(|t| t.parse::<usize>().is_ok()))
}

impl Source {
    pub fn read(path: &Path) -> anyhow::Result<Source> {
        let name = path.display().to_string();
        let text = read_text(path)?;
        let content = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            Content::Csv(text)
        } else {
            match serde_json::from_str(&text) {
                Ok(v) => Content::Json(v),
                Err(_) if !text.trim().is_empty() && looks_like_faces(&text) => Content::Faces(text),
                Err(e) => return Err(input_error(format!("{name}: invalid JSON at line {}, column {}: {e}", e.line(), e.column()))),
            }
        };
        Ok(Source { name, content })
    }

    pub fn declared_mode(&self) -> anyhow::Result<Option<Mode>> {
        match &self.content {
            Content::Json(v) if v.is_object() => {
                formats::declared_mode(v).map_err(|e| input_error(format!("{}: {e}", self.name)))
            }
            _ => Ok(None),
        }
    }

    pub fn declared_tolerance(&self) -> Option<f64> {
        match &self.content {
            Content::Json(v) => v.get("tolerance").and_then(Value::as_f64),
            _ => None,
        }
    }
}

pub enum Loaded<S> {
    Space(GapSpace<S>),
    Strings(StringSet<S>),
    Complex(StringComplex<S>),
}

impl<S> Loaded<S> {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Space(_) => "gap space",
            Loaded::Strings(_) => "string set",
            Loaded::Complex(_) => "complex",
        }
    }
}

fn wrap(name: &str, e: string_complex::Error) -> anyhow::Error {
    if e.is_input_error() {
        input_error(format!("{name}: {e}"))
    } else {
        anyhow::Error::new(e).context(name.to_string())
    }
}

pub fn load<S: Scalar>(src: &Source, tolerance: Option<f64>) -> anyhow::Result<Loaded<S>> {
    let name = &src.name;
    let tol = tolerance.or(src.declared_tolerance()).unwrap_or(DEFAULT_TOLERANCE);
    match &src.content {
        Content::Csv(text) => Ok(Loaded::Space(formats::space_from_csv(text, tol).map_err(|e| wrap(name, e))?)),
        Content::Faces(text) => Ok(Loaded::Complex(formats::complex_from_faces(text).map_err(|e| wrap(name, e))?)),
        Content::Json(v) if v.get("gaps").is_some() => {
            Ok(Loaded::Space(formats::space_from_json(v, Some(tol)).map_err(|e| wrap(name, e))?))
        }
        Content::Json(v) if v.get("simplices").is_some() => {
            Ok(Loaded::Complex(formats::complex_from_json(v).map_err(|e| wrap(name, e))?))
        }
        Content::Json(v) if v.is_array() => {
            Ok(Loaded::Strings(formats::strings_from_json(v).map_err(|e| wrap(name, e))?))
        }
        Content::Json(_) => Err(input_error(format!(
            "{name}: expected a gap space (\"gaps\"), a complex (\"simplices\") or a string list"
        ))),
    }
}

pub fn load_space<S: Scalar>(src: &Source, tolerance: Option<f64>) -> anyhow::Result<GapSpace<S>> {
    match load::<S>(src, tolerance)? {
        Loaded::Space(s) => Ok(s),
        other => Err(input_error(format!("{}: expected a gap space, found a {}", src.name, other.kind()))),
    }
}

/// Raw matrix of a gap space file, for validation without construction.
pub fn load_matrix<S: Scalar>(src: &Source) -> anyhow::Result<(Vec<Vec<S>>, Option<Vec<String>>)> {
    let name = &src.name;
    match &src.content {
        Content::Csv(text) => {
            let (labels, rows) = formats::matrix_from_csv(text).map_err(|e| wrap(name, e))?;
            Ok((rows, Some(labels)))
        }
        Content::Json(v) if v.get("gaps").is_some() => {
            let rows = formats::matrix_from_json(v).map_err(|e| wrap(name, e))?;
            let labels = v
                .get("labels")
                .and_then(Value::as_array)
                .map(|l| l.iter().map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string)).collect());
            Ok((rows, labels))
        }
        _ => Err(input_error(format!("{name}: expected a gap space"))),
    }
}

/// Parses a flag value; in float mode `p/q` literals are accepted and rounded.
pub fn parse_scalar<S: Scalar>(flag: &str, text: &str) -> anyhow::Result<S> {
    let text = text.trim();
    S::parse_scalar(text)
        .or_else(|e| match S::MODE {
            Mode::Float => parse_rational(text).ok().and_then(|r| r.to_f64()).and_then(S::from_f64).ok_or(e),
            Mode::Exact => Err(e),
        })
        .map_err(|e| input_error(format!("--{flag} {text}: {e}")))
}

pub fn parse_list<S: Scalar>(flag: &str, text: &str) -> anyhow::Result<Vec<S>> {
    text.split(',').map(|t| parse_scalar(flag, t)).collect()
}

/// Resolves a point given by index or label.
pub fn point<S: Scalar>(space: &GapSpace<S>, text: &str) -> anyhow::Result<usize> {
    if let Ok(i) = text.parse::<usize>() {
        if i < space.len() {
            return Ok(i);
        }
    }
    (0..space.len())
        .find(|&i| space.label(i) == text)
        .ok_or_else(|| input_error(format!("no point with index or label `{text}`")))
}
