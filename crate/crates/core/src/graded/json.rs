//! `{"window": [d0, d1], "dims": {"v": [..]}, "actions": {"a": {"degree n": [[..]]}}}`
//!
//! `dims` lists, per vertex, the dimensions for every degree of the window.
//! Missing actions are zero. Entries are integers or strings like `"1/2"`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::GradedRepresentation;
use crate::error::{QgrError, Result};
use crate::linalg::{fmt_rational, parse_rational, QMatrix, Rational};
use crate::quiver::Quiver;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    window: (i64, i64),
    dims: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    actions: BTreeMap<String, BTreeMap<String, Vec<Vec<Value>>>>,
    #[serde(default)]
    generated_by: Option<i64>,
}

fn entry(v: &Value, at: &str) -> Result<Rational> {
    let parsed = match v {
        Value::Number(n) => n.as_i64().map(|x| Rational::from_integer(x.into())),
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| QgrError::parse(at.to_string(), format!("bad matrix entry {v}")))
}

pub(super) fn parse(q: &Quiver, text: &str) -> Result<GradedRepresentation> {
    let file: RepresentationFile = serde_json::from_str(text).map_err(|e| {
        QgrError::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let (d0, d1) = file.window;
    if d1 < d0 {
        return Err(QgrError::parse("window", format!("empty window [{d0}, {d1}]")));
    }
    let len = (d1 - d0) as usize;
    let mut dims = vec![vec![0; q.vertex_count()]; len + 1];
    for (name, list) in &file.dims {
        let i = q
            .vertex_index(name)
            .ok_or_else(|| QgrError::parse(format!("dims.{name}"), "unknown vertex"))?;
        if list.len() != len + 1 {
            return Err(QgrError::parse(
                format!("dims.{name}"),
                format!("expected {} entries, one per degree", len + 1),
            ));
        }
        for (k, &d) in list.iter().enumerate() {
            dims[k][i] = d;
        }
    }
    let mut actions: Vec<Vec<QMatrix>> = q
        .arrows()
        .iter()
        .map(|a| {
            (0..len)
                .map(|k| QMatrix::zeros(dims[k + 1][a.target], dims[k][a.source]))
                .collect()
        })
        .collect();
    for (name, by_degree) in &file.actions {
        let a = q
            .arrow_index(name)
            .ok_or_else(|| QgrError::parse(format!("actions.{name}"), "unknown arrow"))?;
        for (key, rows) in by_degree {
            let at = format!("actions.{name}.{key}");
            let d: i64 = key
                .strip_prefix("degree ")
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| QgrError::parse(at.clone(), "keys must read \"degree n\""))?;
            if d < d0 || d >= d1 {
                return Err(QgrError::parse(at, format!("degree {d} has no outgoing action in the window")));
            }
            let k = (d - d0) as usize;
            let target = &mut actions[a][k];
            if rows.len() != target.rows() || rows.iter().any(|r| r.len() != target.cols()) {
                return Err(QgrError::parse(
                    at,
                    format!("matrix must be {}x{}", target.rows(), target.cols()),
                ));
            }
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    target.set(r, c, entry(v, &at)?);
                }
            }
        }
    }
    let m = GradedRepresentation::new(q, file.window, dims, actions)?;
    match file.generated_by {
        Some(g) => m.with_generated_by(g),
        None => Ok(m),
    }
}

fn entry_json(v: &Rational) -> Value {
    if v.is_integer() {
        if let Ok(x) = i64::try_from(v.numer()) {
            return json!(x);
        }
    }
    json!(fmt_rational(v))
}

pub(super) fn to_value(m: &GradedRepresentation) -> Value {
    let q = &m.quiver;
    let (d0, d1) = m.window;
    let mut dims = Map::new();
    for (i, v) in q.vertices().iter().enumerate() {
        dims.insert(v.clone(), json!(m.dims.iter().map(|d| d[i]).collect::<Vec<_>>()));
    }
    let mut actions = Map::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let mut by_degree = Map::new();
        for d in d0..d1 {
            let mat = m.action(a, d);
            if mat.rows() == 0 || mat.cols() == 0 {
                continue;
            }
            let rows: Vec<Value> = mat
                .to_dense()
                .iter()
                .map(|r| Value::Array(r.iter().map(entry_json).collect()))
                .collect();
            by_degree.insert(format!("degree {d}"), Value::Array(rows));
        }
        actions.insert(arrow.name.clone(), Value::Object(by_degree));
    }
    let mut out = json!({"window": [d0, d1], "dims": dims, "actions": actions});
    if let Some(g) = m.generated_by {
        out["generated_by"] = json!(g);
    }
    out
}
