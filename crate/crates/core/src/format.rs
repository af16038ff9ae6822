//! JSON files for polytopes, realizations and construction logs.
//!
//! Polytope: `{"dim": d, "num_vertices": n, "facets": [[0,1,2], …]}`.
//! Realization: `{"dim": d, "points": [["1", "-3/2", …], …]}` with exact
//! rational coordinates as strings; plain JSON integers are accepted too.
//! Construction log: an array of `{"n", "beyond", "beneath", "affine"}`.
//!
//! Writers are deterministic: the same value always gives the same bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;

use crate::comb::{CombPolytope, Face};
use crate::construction::Step;
use crate::error::{Error, Result};
use crate::realization::{Rational, RationalPoint, Realization};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    num_vertices: usize,
    facets: Vec<Face>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RealizationFile {
    dim: usize,
    points: Vec<Vec<Coord>>,
}

fn json_list<T: serde::Serialize>(items: &[T]) -> String {
    serde_json::to_string(items).expect("plain data serializes")
}

fn join_lines(lines: impl IntoIterator<Item = String>) -> String {
    lines
        .into_iter()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join(",\n")
}

pub fn polytope_to_json(p: &CombPolytope) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"dim\": {},", p.dim()).unwrap();
    writeln!(out, "  \"num_vertices\": {},", p.num_vertices()).unwrap();
    writeln!(out, "  \"facets\": [").unwrap();
    let body = join_lines(p.facets().iter().map(|f| json_list(f.vertices())));
    if !body.is_empty() {
        writeln!(out, "{body}").unwrap();
    }
    writeln!(out, "  ]").unwrap();
    writeln!(out, "}}").unwrap();
    out
}

pub fn polytope_from_json(text: &str) -> Result<CombPolytope> {
    let f: PolytopeFile = serde_json::from_str(text)?;
    CombPolytope::new(f.dim, f.num_vertices, f.facets)
}

pub fn realization_to_json(r: &Realization) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"dim\": {},", r.dim()).unwrap();
    writeln!(out, "  \"points\": [").unwrap();
    let body = join_lines(r.points().iter().map(|p| {
        let coords: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
        json_list(&coords)
    }));
    if !body.is_empty() {
        writeln!(out, "{body}").unwrap();
    }
    writeln!(out, "  ]").unwrap();
    writeln!(out, "}}").unwrap();
    out
}

fn parse_coord(c: Coord) -> Result<Rational> {
    match c {
        Coord::Int(v) => Ok(Rational::from_integer(v.into())),
        Coord::Text(s) => Rational::from_str(s.trim())
            .map_err(|_| Error::Parse(format!("not a rational number: {s:?}"))),
    }
}

pub fn realization_from_json(text: &str) -> Result<Realization> {
    let f: RealizationFile = serde_json::from_str(text)?;
    let points = f
        .points
        .into_iter()
        .map(|p| {
            p.into_iter()
                .map(parse_coord)
                .collect::<Result<Vec<_>>>()
                .map(RationalPoint::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Realization::new(f.dim, points)
}

pub fn log_to_json(log: &[Step]) -> String {
    let mut out = String::from("[\n");
    let steps: Vec<String> = log
        .iter()
        .map(|s| {
            let group = |name: &str, faces: &[Face]| {
                let body = faces
                    .iter()
                    .map(|f| format!("      {}", json_list(f.vertices())))
                    .collect::<Vec<_>>()
                    .join(",\n");
                if body.is_empty() {
                    format!("    \"{name}\": []")
                } else {
                    format!("    \"{name}\": [\n{body}\n    ]")
                }
            };
            format!(
                "  {{\n    \"n\": {},\n{},\n{},\n{}\n  }}",
                s.n,
                group("beyond", &s.beyond),
                group("beneath", &s.beneath),
                group("affine", &s.affine)
            )
        })
        .collect();
    if !steps.is_empty() {
        out.push_str(&steps.join(",\n"));
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

/// Parses a log. Each group is sorted on read, so the order within a group
/// in the file does not matter.
pub fn log_from_json(text: &str) -> Result<Vec<Step>> {
    let mut steps: Vec<Step> = serde_json::from_str(text)?;
    for s in &mut steps {
        s.beyond.sort();
        s.beneath.sort();
        s.affine.sort();
    }
    Ok(steps)
}
