// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Reading and writing the file formats used by the command-line tool.
//!
//! Instances: JSON `{"k": 2, "intervals": [["0", "1.5"], [2, 3]]}` or text
//! with a header line `n k` followed by `n` lines `lo hi`. Colorings: JSON
//! `{"colors": [...]}` or whitespace-separated integers. Arcs: JSON
//! `{"k": 2, "circumference": "10", "arcs": [[start, length], ...]}`.
//! Matrices: header `n m`, then `n` rows of `m` digits 0/1. Formulas:
//! `c` comment lines, a header `p nae <vars> <clauses>`, then one triple per
//! line (a trailing `0` is allowed). Boxes: JSON `{"d", "k", "boxes"}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arcs::ArcInstance;
use crate::error::{ParseError, Result};
use crate::hardness::{BoxInstance, NaeFormula, Provenance};
use crate::interval::{Coord, Instance};
use crate::k_color::BinaryMatrix;

fn json_err(e: serde_json::Error) -> ParseError {
    ParseError::Json(e.to_string())
}

/// Nonblank lines with 1-based line numbers, `#` starting a comment.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::line(line, format!("expected {what}, found {token:?}")))
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    k: usize,
    intervals: Vec<(Coord, Coord)>,
}

pub fn parse_instance_json(input: &str) -> Result<Instance> {
    let raw: InstanceJson = serde_json::from_str(input).map_err(json_err)?;
    Instance::new(raw.intervals, raw.k)
}

/// Text instance. An input without any content is the empty instance with
/// `default_k` colors.
pub fn parse_instance_text(input: &str, default_k: usize) -> Result<Instance> {
    let mut lines = content_lines(input);
    let Some((first, header)) = lines.next() else {
        return Instance::new([], default_k);
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = fields[..] else {
        return Err(ParseError::line(first, "header must be `n k`").into());
    };
    let n: usize = number(first, n, "interval count")?;
    let k: usize = number(first, k, "color count")?;
    let mut bounds = Vec::with_capacity(n.min(1 << 20));
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [lo, hi] = fields[..] else {
            return Err(ParseError::line(line, "expected `lo hi`").into());
        };
        let lo: Coord = lo
            .parse()
            .map_err(|e: ParseError| ParseError::line(line, e.to_string()))?;
        let hi: Coord = hi
            .parse()
            .map_err(|e: ParseError| ParseError::line(line, e.to_string()))?;
        bounds.push((lo, hi));
    }
    if bounds.len() != n {
        return Err(ParseError::Format(format!("header announces {n} intervals, found {}", bounds.len())).into());
    }
    Instance::new(bounds, k)
}

/// JSON when the first non-space character is `{`, text otherwise.
pub fn parse_instance(input: &str, default_k: usize) -> Result<Instance> {
    if input.trim_start().starts_with('{') {
        parse_instance_json(input)
    } else {
        parse_instance_text(input, default_k)
    }
}

pub fn instance_to_json(instance: &Instance) -> String {
    let raw = InstanceJson {
        k: instance.k(),
        intervals: instance
            .intervals()
            .iter()
            .map(|i| (i.lo.clone(), i.hi.clone()))
            .collect(),
    };
    serde_json::to_string(&raw).expect("instance serializes")
}

pub fn instance_to_text(instance: &Instance) -> String {
    let mut out = format!("{} {}\n", instance.len(), instance.k());
    for i in instance.intervals() {
        let _ = writeln!(out, "{} {}", i.lo, i.hi);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    colors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    imbalance: Option<usize>,
}

/// Raw colors; range checks happen against an instance.
pub fn parse_coloring(input: &str) -> Result<Vec<usize>> {
    if input.trim_start().starts_with('{') {
        let raw: ColoringJson = serde_json::from_str(input).map_err(json_err)?;
        return Ok(raw.colors);
    }
    let mut colors = Vec::new();
    for (line, text) in content_lines(input) {
        for token in text.split_whitespace() {
            colors.push(number(line, token, "a color")?);
        }
    }
    Ok(colors)
}

pub fn coloring_to_json(colors: &[usize], imbalance: usize) -> String {
    let raw = ColoringJson {
        colors: colors.to_vec(),
        imbalance: Some(imbalance),
    };
    serde_json::to_string(&raw).expect("coloring serializes")
}

#[derive(Deserialize)]
struct ArcsJson {
    k: usize,
    circumference: Coord,
    arcs: Vec<(Coord, Coord)>,
}

pub fn parse_arcs_json(input: &str) -> Result<ArcInstance> {
    let raw: ArcsJson = serde_json::from_str(input).map_err(json_err)?;
    ArcInstance::new(raw.circumference, raw.arcs, raw.k)
}

pub fn parse_matrix(input: &str) -> Result<BinaryMatrix> {
    let mut lines = content_lines(input);
    let Some((first, header)) = lines.next() else {
        return BinaryMatrix::new(0, 0, Vec::new());
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(ParseError::line(first, "header must be `n m`").into());
    };
    let n: usize = number(first, n, "row count")?;
    let m: usize = number(first, m, "column count")?;
    let mut rows = Vec::with_capacity(n.min(1 << 16));
    for (line, text) in lines {
        let row: Vec<bool> = text
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(ParseError::line(line, format!("expected 0 or 1, found {t:?}"))),
            })
            .collect::<Result<_, _>>()?;
        if row.len() != m {
            return Err(ParseError::line(line, format!("expected {m} entries, found {}", row.len())).into());
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::Format(format!("header announces {n} rows, found {}", rows.len())).into());
    }
    BinaryMatrix::new(n, m, rows.into_iter().flatten().collect())
}

pub fn parse_nae(input: &str) -> Result<NaeFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    for (line, text) in content_lines(input) {
        let fields: Vec<&str> = text.split_whitespace().collect();
        match fields[..] {
            ["c", ..] => {}
            ["p", "nae", v, c] if header.is_none() => {
                header = Some((number(line, v, "variable count")?, number(line, c, "clause count")?));
            }
            ["p", ..] => return Err(ParseError::line(line, "expected a single `p nae <vars> <clauses>`").into()),
            _ if header.is_none() => return Err(ParseError::line(line, "clause before the `p nae` header").into()),
            [a, b, c] | [a, b, c, "0"] => {
                clauses.push([
                    number(line, a, "a variable")?,
                    number(line, b, "a variable")?,
                    number(line, c, "a variable")?,
                ]);
            }
            _ => return Err(ParseError::line(line, "expected three variables").into()),
        }
    }
    let Some((vars, count)) = header else {
        return Err(ParseError::Format("missing `p nae` header".into()).into());
    };
    if clauses.len() != count {
        return Err(ParseError::Format(format!("header announces {count} clauses, found {}", clauses.len())).into());
    }
    NaeFormula::new(vars, clauses)
}

pub fn nae_to_text(formula: &NaeFormula) -> String {
    let mut out = format!("p nae {} {}\n", formula.num_vars(), formula.clauses().len());
    for [a, b, c] in formula.clauses() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

pub fn parse_boxes_json(input: &str) -> Result<BoxInstance> {
    let raw: BoxInstance = serde_json::from_str(input).map_err(json_err)?;
    raw.validated()
}

pub fn boxes_to_json(instance: &BoxInstance) -> String {
    serde_json::to_string(instance).expect("boxes serialize")
}

/// Outline drawing of a two-dimensional instance, `y` pointing up.
pub fn boxes_to_svg(instance: &BoxInstance) -> Result<String> {
    if instance.d != 2 {
        return Err(ParseError::Format(format!("SVG needs two dimensions, got {}", instance.d)).into());
    }
    let coords = |j: usize| {
        instance
            .boxes
            .iter()
            .flat_map(move |b| [b.sides[j].0.to_f64(), b.sides[j].1.to_f64()])
    };
    let fold = |it: &mut dyn Iterator<Item = f64>| {
        it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    };
    let (x0, x1) = fold(&mut coords(0));
    let (y0, y1) = fold(&mut coords(1));
    let (x0, x1, y0, y1) = if instance.is_empty() {
        (0.0, 1.0, 0.0, 1.0)
    } else {
        (x0, x1, y0, y1)
    };
    let pad = 0.02 * (x1 - x0).max(y1 - y0).max(1.0);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"{}\">\n",
        x0 - pad,
        -(y1 + pad),
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad,
        pad / 8.0
    );
    for b in &instance.boxes {
        let stroke = match b.tag {
            Some(Provenance::Clause { .. }) => "red",
            Some(Provenance::Variable { .. }) => "blue",
            Some(Provenance::Crossing { .. }) => "green",
            Some(Provenance::Cover { .. }) => "gray",
            _ => "black",
        };
        let (bx0, bx1) = (b.sides[0].0.to_f64(), b.sides[0].1.to_f64());
        let (by0, by1) = (b.sides[1].0.to_f64(), b.sides[1].1.to_f64());
        let _ = writeln!(
            out,
            "<rect x=\"{bx0}\" y=\"{by0}\" width=\"{}\" height=\"{}\" stroke=\"{stroke}\"/>",
            bx1 - bx0,
            by1 - by0
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
