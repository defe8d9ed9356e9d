//! The `xray/1` JSON document format.
//!
//! ```text
//! {"format":"xray/1","rank":2,
//!  "strata":[
//!   {"id":"F1","stabilizer":[[1,0],[0,1]],"vertices":[["0","0"]]},
//!   ...],
//!  "order":[["F1","E1"],...]}
//! ```
//!
//! Rationals are strings `"n"` or `"p/q"`. `order` lists covering pairs
//! `[lower, upper]`. The canonical encoding sorts strata by id, writes vertices
//! in canonical order and the order as its transitive reduction.

use serde::{Deserialize, Serialize};

use crate::exactgeom::{format_scalar, parse_scalar, Point, Polytope};

use super::{Stabilizer, Stratum, XRay, XRayError};

pub const FORMAT: &str = "xray/1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumDoc {
    id: String,
    stabilizer: Vec<Vec<i64>>,
    vertices: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    format: String,
    rank: usize,
    strata: Vec<StratumDoc>,
    order: Vec<(String, String)>,
}

fn parse_err(context: impl Into<String>, message: impl ToString) -> XRayError {
    XRayError::Parse {
        context: context.into(),
        message: message.to_string(),
    }
}

/// Canonical UTF-8 encoding.
pub fn save(x: &XRay) -> Vec<u8> {
    let mut out = format!(
        "{{\"format\":\"{FORMAT}\",\"rank\":{},\n \"strata\":[",
        x.rank()
    );
    for (i, s) in x.strata().iter().enumerate() {
        let doc = StratumDoc {
            id: s.id.clone(),
            stabilizer: s.stabilizer.generators().to_vec(),
            vertices: s
                .polytope
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(format_scalar).collect())
                .collect(),
        };
        out.push_str(if i == 0 { "\n  " } else { ",\n  " });
        out.push_str(&serde_json::to_string(&doc).expect("stratum serializes"));
    }
    out.push_str("],\n \"order\":[");
    for (i, pair) in x.covers().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&serde_json::to_string(pair).expect("pair serializes"));
    }
    out.push_str("]}\n");
    out.into_bytes()
}

pub fn load(bytes: &[u8]) -> Result<XRay, XRayError> {
    let doc: Doc = serde_json::from_slice(bytes)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e))?;
    if doc.format != FORMAT {
        return Err(parse_err(
            "format",
            format!("expected {FORMAT:?}, found {:?}", doc.format),
        ));
    }
    let mut strata = Vec::with_capacity(doc.strata.len());
    for (si, s) in doc.strata.into_iter().enumerate() {
        let ctx = format!("strata[{si}] ({})", s.id);
        let stabilizer = Stabilizer::new(doc.rank, s.stabilizer)
            .map_err(|e| parse_err(format!("{ctx}.stabilizer"), e))?;
        let mut points = Vec::with_capacity(s.vertices.len());
        for (vi, v) in s.vertices.iter().enumerate() {
            if v.len() != doc.rank {
                return Err(parse_err(
                    format!("{ctx}.vertices[{vi}]"),
                    format!("expected {} coordinates, found {}", doc.rank, v.len()),
                ));
            }
            let coords = v
                .iter()
                .enumerate()
                .map(|(ci, c)| {
                    parse_scalar(c).map_err(|e| parse_err(format!("{ctx}.vertices[{vi}][{ci}]"), e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            points.push(Point::new(coords));
        }
        if points.is_empty() {
            return Err(parse_err(format!("{ctx}.vertices"), "empty vertex list"));
        }
        let polytope =
            Polytope::hull(&points).map_err(|e| parse_err(format!("{ctx}.vertices"), e))?;
        if polytope.vertices().len() != points.len() {
            let extra = points
                .iter()
                .find(|p| !polytope.vertices().contains(p))
                .or_else(|| {
                    points
                        .iter()
                        .enumerate()
                        .find(|(i, p)| points[..*i].contains(p))
                        .map(|(_, p)| p)
                })
                .expect("some point was dropped");
            return Err(parse_err(
                format!("{ctx}.vertices"),
                format!("{extra} is not an extreme point"),
            ));
        }
        strata.push(Stratum::new(s.id, stabilizer, polytope));
    }
    XRay::new(doc.rank, strata, doc.order).map_err(|e| match e {
        XRayError::UnknownId(id) => parse_err("order", format!("unknown stratum id {id:?}")),
        other => other,
    })
}
