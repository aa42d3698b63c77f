//! File formats.
//!
//! * Gap space JSON: `{"labels": [...], "gaps": [[...]], "mode": "exact"|"float", "tolerance": t}`.
//!   Exact scalars may be JSON numbers or strings holding decimals or `p/q`.
//!   Gap space CSV: a header row of labels followed by the square matrix, optionally
//!   with a first column of row labels under an empty corner cell.
//! * String sets: a JSON list of `{"set": [...], "birth": s, "witness": [...]}`,
//!   sorted lexicographically by set.
//! * Complexes: `{"dim": d, "simplices": {"0": [...], ...}, "birth": {"0,1": s, ...}}`
//!   or a face list with one simplex per line.
//! * Barcodes: a JSON list of `{"degree": k, "birth": s, "death": s|"inf"}` or
//!   text lines `degree birth death`.
//! * Triangulations: `{"vertices": [...], "edges": [[a, b], ...], "triangles": [[a, b, c], ...]}`
//!   with zero-based vertex indices, or OFF text (faces only; edges inferred).

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::complex::{HomologyResult, StringComplex};
use crate::construct::{Triangulation2D, VerificationReport};
use crate::error::{Error, Result};
use crate::gapspace::{GapSpace, DEFAULT_TOLERANCE};
use crate::persistence::Barcode;
use crate::scalar::{Mode, Scalar};
use crate::strings::{Level, StringSet};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn as_index(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .map(|i| i as usize)
        .ok_or_else(|| parse_err(format!("{ctx}: expected a nonnegative integer, found {v}")))
}

fn index_list(v: &Value, ctx: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{ctx}: expected a list of indices")))?
        .iter()
        .enumerate()
        .map(|(i, x)| as_index(x, &format!("{ctx}[{i}]")))
        .collect()
}

fn scalar_at<S: Scalar>(v: &Value, ctx: &str) -> Result<S> {
    S::from_json(v).map_err(|e| parse_err(format!("{ctx}: {e}")))
}

/// The `"mode"` field of a gap space document, if present.
pub fn declared_mode(doc: &Value) -> Result<Option<Mode>> {
    match doc.get("mode") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.parse()?)),
        Some(other) => Err(parse_err(format!("mode: expected a string, found {other}"))),
    }
}

pub fn space_to_json<S: Scalar>(space: &GapSpace<S>) -> Value {
    let mut obj = Map::new();
    let labels: Vec<String> = (0..space.len()).map(|i| space.label(i)).collect();
    obj.insert("labels".into(), json!(labels));
    let gaps: Vec<Value> = space
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(Scalar::to_json).collect()))
        .collect();
    obj.insert("gaps".into(), Value::Array(gaps));
    obj.insert("mode".into(), json!(S::MODE.as_str()));
    obj.insert("tolerance".into(), json!(space.tolerance()));
    Value::Object(obj)
}

/// Reads the gap matrix of a JSON document without validating it.
pub fn matrix_from_json<S: Scalar>(doc: &Value) -> Result<Vec<Vec<S>>> {
    if let Some(mode) = declared_mode(doc)? {
        if mode != S::MODE {
            return Err(parse_err(format!(
                "document declares {mode} mode but {} scalars were requested",
                S::MODE
            )));
        }
    }
    let rows = doc
        .get("gaps")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("gaps: missing or not a list"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or_else(|| parse_err(format!("gaps[{i}]: expected a list")))?
                .iter()
                .enumerate()
                .map(|(j, v)| scalar_at(v, &format!("gaps[{i}][{j}]")))
                .collect()
        })
        .collect()
}

pub fn tolerance_from_json(doc: &Value) -> Result<f64> {
    match doc.get("tolerance") {
        None | Some(Value::Null) => Ok(DEFAULT_TOLERANCE),
        Some(v) => v.as_f64().ok_or_else(|| parse_err(format!("tolerance: expected a number, found {v}"))),
    }
}

fn labels_from_json(doc: &Value) -> Result<Option<Vec<String>>> {
    match doc.get("labels") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Array(items)) => Ok(Some(
            items
                .iter()
                .map(|v| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect(),
        )),
        Some(other) => Err(parse_err(format!("labels: expected a list, found {other}"))),
    }
}

/// Parses and validates a gap space document. `tolerance` overrides the
/// document's own.
pub fn space_from_json<S: Scalar>(doc: &Value, tolerance: Option<f64>) -> Result<GapSpace<S>> {
    let rows = matrix_from_json::<S>(doc)?;
    let tol = match tolerance {
        Some(t) => t,
        None => tolerance_from_json(doc)?,
    };
    let space = GapSpace::with_tolerance(rows, tol)?;
    match labels_from_json(doc)? {
        Some(labels) => space.with_labels(labels),
        None => Ok(space),
    }
}

/// Reads a CSV matrix whose first row holds the labels. A first column of
/// row labels under an empty corner cell is skipped.
pub fn matrix_from_csv<S: Scalar>(text: &str) -> Result<(Vec<String>, Vec<Vec<S>>)> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut labels: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let skip = usize::from(labels.first().is_some_and(String::is_empty));
    labels.drain(..skip);
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .enumerate()
            .skip(skip)
            .map(|(j, cell)| {
                S::parse_scalar(cell).map_err(|e| parse_err(format!("csv row {}, column {}: {e}", i + 2, j + 1)))
            })
            .collect::<Result<Vec<S>>>()?;
        rows.push(row);
    }
    Ok((labels, rows))
}

pub fn space_from_csv<S: Scalar>(text: &str, tolerance: f64) -> Result<GapSpace<S>> {
    let (labels, rows) = matrix_from_csv::<S>(text)?;
    GapSpace::with_tolerance(rows, tolerance)?.with_labels(labels)
}

pub fn space_to_csv<S: Scalar>(space: &GapSpace<S>) -> String {
    let mut out = String::new();
    let labels: Vec<String> = (0..space.len()).map(|i| space.label(i)).collect();
    out.push_str(&labels.join(","));
    out.push('\n');
    for r in space.rows() {
        out.push_str(&r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub fn strings_to_json<S: Scalar>(strings: &StringSet<S>) -> Value {
    Value::Array(
        strings
            .iter()
            .map(|(set, e)| json!({ "set": set, "birth": e.birth.to_json(), "witness": e.witness }))
            .collect(),
    )
}

pub fn strings_from_json<S: Scalar>(doc: &Value) -> Result<StringSet<S>> {
    let items = doc.as_array().ok_or_else(|| parse_err("string set: expected a list"))?;
    let mut parsed = Vec::with_capacity(items.len());
    let mut points = 0;
    for (i, item) in items.iter().enumerate() {
        let set = index_list(item.get("set").unwrap_or(&Value::Null), &format!("[{i}].set"))?;
        let witness = index_list(item.get("witness").unwrap_or(&Value::Null), &format!("[{i}].witness"))?;
        let birth = scalar_at::<S>(item.get("birth").unwrap_or(&Value::Null), &format!("[{i}].birth"))?;
        let mut sorted = witness.clone();
        sorted.sort_unstable();
        let mut key = set.clone();
        key.sort_unstable();
        if sorted != key || key.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(format!("[{i}]: witness {witness:?} does not order set {set:?}")));
        }
        points = points.max(key.last().map_or(0, |v| v + 1));
        parsed.push((key, birth, witness));
    }
    let mut out = StringSet::new(points);
    for (set, birth, witness) in parsed {
        out.offer(set, birth, witness);
    }
    Ok(out)
}

fn simplex_key(s: &[usize]) -> String {
    s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn complex_to_json<S: Scalar>(complex: &StringComplex<S>) -> Value {
    let mut simplices = Map::new();
    let mut births = Map::new();
    for d in 0..=complex.dim().unwrap_or(0) {
        let list = complex.simplices(d);
        if list.is_empty() {
            continue;
        }
        simplices.insert(d.to_string(), json!(list));
    }
    for (s, b) in complex.iter() {
        births.insert(simplex_key(s), b.to_json());
    }
    let mut obj = Map::new();
    obj.insert("dim".into(), json!(complex.dim().map_or(-1, |d| d as i64)));
    obj.insert("simplices".into(), Value::Object(simplices));
    obj.insert("birth".into(), Value::Object(births));
    if let Some(labels) = complex.labels() {
        obj.insert("labels".into(), json!(labels));
    }
    Value::Object(obj)
}

pub fn complex_from_json<S: Scalar>(doc: &Value) -> Result<StringComplex<S>> {
    let simplices = doc
        .get("simplices")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("complex: missing simplices object"))?;
    let births = doc.get("birth").and_then(Value::as_object);
    let mut all = Vec::new();
    for (dim, list) in simplices {
        let items = list.as_array().ok_or_else(|| parse_err(format!("simplices.{dim}: expected a list")))?;
        for (i, s) in items.iter().enumerate() {
            let mut s = index_list(s, &format!("simplices.{dim}[{i}]"))?;
            s.sort_unstable();
            let birth = match births.and_then(|b| b.get(&simplex_key(&s))) {
                Some(v) => scalar_at::<S>(v, &format!("birth.{}", simplex_key(&s)))?,
                None => S::zero(),
            };
            all.push((s, birth));
        }
    }
    let labels = labels_from_json(doc)?;
    Ok(StringComplex::from_simplices(all)?.with_labels(labels.as_deref()))
}

/// One simplex per line, vertices separated by spaces, by dimension then
/// lexicographically.
pub fn complex_to_faces<S: Scalar>(complex: &StringComplex<S>) -> String {
    let mut out = String::new();
    for d in 0..=complex.dim().unwrap_or(0) {
        for s in complex.simplices(d) {
            out.push_str(&s.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
    }
    out
}

/// Reads a face list and closes it downward; every simplex is born at zero.
pub fn complex_from_faces<S: Scalar>(text: &str) -> Result<StringComplex<S>> {
    let mut all = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let face: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(format!("line {}: bad vertex `{t}`", lineno + 1))))
            .collect::<Result<_>>()?;
        if face.len() > 20 {
            return Err(parse_err(format!("line {}: face too large", lineno + 1)));
        }
        for m in 1u32..(1 << face.len()) {
            let mut sub: Vec<usize> =
                (0..face.len()).filter(|i| m & (1 << i) != 0).map(|i| face[i]).collect();
            sub.sort_unstable();
            sub.dedup();
            all.insert(sub);
        }
    }
    StringComplex::from_simplices(all.into_iter().map(|s| (s, S::zero())))
}

fn level_to_json<S: Scalar>(l: &Level<S>) -> Value {
    match l {
        Level::Finite(v) => v.to_json(),
        Level::Infinite => json!("inf"),
    }
}

pub fn barcode_to_json<S: Scalar>(bars: &Barcode<S>) -> Value {
    Value::Array(
        bars.intervals
            .iter()
            .map(|iv| json!({ "degree": iv.degree, "birth": iv.birth.to_json(), "death": level_to_json(&iv.death) }))
            .collect(),
    )
}

/// `degree birth death` per line, `inf` for classes that never die.
pub fn barcode_to_text<S: Scalar>(bars: &Barcode<S>) -> String {
    bars.intervals
        .iter()
        .map(|iv| {
            let death = match &iv.death {
                Level::Finite(v) => v.to_string(),
                Level::Infinite => "inf".into(),
            };
            format!("{} {} {}\n", iv.degree, iv.birth, death)
        })
        .collect()
}

pub fn homology_to_json(h: &HomologyResult) -> Value {
    let mut obj = Map::new();
    obj.insert("betti_mod2".into(), json!(h.betti_mod2));
    obj.insert("euler_characteristic".into(), json!(h.euler_characteristic()));
    if let Some(z) = &h.integer {
        obj.insert("integer".into(), json!({ "ranks": z.ranks, "torsion": z.torsion }));
    }
    Value::Object(obj)
}

pub fn verification_to_json(r: &VerificationReport) -> Value {
    json!({
        "flags": r.flags,
        "three_point_strings": r.three_point_strings,
        "flags_exact": r.flags_exact,
        "edge_in_middle": r.edge_in_middle,
        "longer_strings": r.longer_strings,
        "isomorphic": r.isomorphic,
        "passed": r.passed(),
    })
}

pub fn triangulation_to_json(t: &Triangulation2D) -> Value {
    json!({ "vertices": t.vertices(), "edges": t.edges(), "triangles": t.triangles() })
}

/// Parses a triangulation document. When `infer_edges` is set, or the
/// document has no `edges`, edges are taken from the triangles.
pub fn triangulation_from_json(doc: &Value, infer_edges: bool) -> Result<Triangulation2D> {
    let vertices = labels_from_json(&json!({ "labels": doc.get("vertices").cloned().unwrap_or(Value::Null) }))?
        .ok_or_else(|| parse_err("vertices: missing"))?;
    let triangles: Vec<[usize; 3]> = doc
        .get("triangles")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("triangles: missing or not a list"))?
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let v = index_list(t, &format!("triangles[{i}]"))?;
            <[usize; 3]>::try_from(v).map_err(|_| parse_err(format!("triangles[{i}]: expected 3 vertices")))
        })
        .collect::<Result<_>>()?;
    match doc.get("edges").and_then(Value::as_array) {
        Some(edges) if !infer_edges => {
            let edges: Vec<[usize; 2]> = edges
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let v = index_list(e, &format!("edges[{i}]"))?;
                    <[usize; 2]>::try_from(v).map_err(|_| parse_err(format!("edges[{i}]: expected 2 vertices")))
                })
                .collect::<Result<_>>()?;
            Triangulation2D::new(vertices, edges, triangles)
        }
        _ => Triangulation2D::from_triangles(vertices, triangles),
    }
}

/// Reads the faces of an OFF file (coordinates are ignored) and infers edges.
pub fn triangulation_from_off(text: &str) -> Result<Triangulation2D> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err("OFF: empty input"))?;
    let counts_line = if header == "OFF" {
        lines.next().ok_or_else(|| parse_err("OFF: missing counts"))?
    } else if let Some(rest) = header.strip_prefix("OFF") {
        (1, rest.trim())
    } else {
        return Err(parse_err("OFF: missing OFF header"));
    };
    let counts: Vec<usize> = counts_line
        .1
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(format!("line {}: bad count `{t}`", counts_line.0))))
        .collect::<Result<_>>()?;
    if counts.len() < 2 {
        return Err(parse_err(format!("line {}: expected vertex and face counts", counts_line.0)));
    }
    let (nv, nf) = (counts[0], counts[1]);
    for _ in 0..nv {
        lines.next().ok_or_else(|| parse_err("OFF: truncated vertex list"))?;
    }
    let mut triangles = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (lineno, line) = lines.next().ok_or_else(|| parse_err("OFF: truncated face list"))?;
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(format!("line {lineno}: bad index `{t}`"))))
            .collect::<Result<_>>()?;
        if nums.first() != Some(&3) || nums.len() < 4 {
            return Err(parse_err(format!("line {lineno}: only triangular faces are supported")));
        }
        triangles.push([nums[1], nums[2], nums[3]]);
    }
    Triangulation2D::from_triangles((0..nv).map(|i| i.to_string()).collect(), triangles)
}
