//! The family interchange format:
//! `{"n": 6, "k": 2, "edges": [[1,2],[1,3]]}`
//!
//! Edges are written in colex order with ascending 1-based vertices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use super::family::Family;
use super::set::VertexSet;
use crate::error::{Error, Result, MAX_VERTICES};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    n: i64,
    k: i64,
    edges: Vec<Vec<i64>>,
}

pub fn to_json(family: &Family) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\": {}, \"k\": {}, \"edges\": [", family.n(), family.k()).unwrap();
    for (i, e) in family.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, v) in e.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "{v}").unwrap();
        }
        out.push(']');
    }
    out.push_str("]}");
    out
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

pub fn from_json(text: &str) -> Result<Family> {
    let raw: RawFamily = serde_json::from_str(text).map_err(|e| {
        parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    if raw.n < 0 || raw.n as usize > MAX_VERTICES {
        return Err(parse_err("n", format!("n={} outside [0, {MAX_VERTICES}]", raw.n)));
    }
    if raw.k < 0 || raw.k > raw.n {
        return Err(parse_err("k", format!("k={} outside [0, n={}]", raw.k, raw.n)));
    }
    let (n, k) = (raw.n as usize, raw.k as usize);
    let mut edges = BTreeSet::new();
    for (i, list) in raw.edges.iter().enumerate() {
        let loc = format!("edges[{i}]");
        if list.len() != k {
            return Err(parse_err(loc, format!("edge has {} vertices, expected k={k}", list.len())));
        }
        if let Some(&bad) = list.iter().find(|&&v| v < 1 || v > raw.n) {
            return Err(parse_err(loc, format!("vertex {bad} outside [1, {n}]")));
        }
        let e = VertexSet::from_vertices(list.iter().map(|&v| v as usize))
            .map_err(|e| parse_err(loc.clone(), e.to_string()))?;
        if !edges.insert(e) {
            return Err(parse_err(loc, format!("duplicate edge {e}")));
        }
    }
    Ok(Family::from_parts_unchecked(n, k, edges))
}
