//! Browser bindings for the `linecover` toolkit.
//!
//! Every export takes the current point set as a JSON array of integer
//! pairs (`[[0,0],[1,2]]`) and returns a JSON string. Errors come back as
//! plain strings, which wasm-bindgen throws as JavaScript exceptions.

use linecover::geometry::Line;
use linecover::io::describe_line;
use linecover::order_type::{canonical_ordering, otr};
use linecover::plc::{kernelize, solve};
use linecover::{PlcInstance, Point};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn parse_points(points_json: &str) -> Result<Vec<Point>, String> {
    let pairs: Vec<(i64, i64)> =
        serde_json::from_str(points_json).map_err(|e| format!("bad point list: {e}"))?;
    Ok(pairs
        .into_iter()
        .map(|(x, y)| Point::from_ints(x, y))
        .collect())
}

fn instance(points_json: &str, k: usize) -> Result<PlcInstance, String> {
    PlcInstance::new(parse_points(points_json)?, k).map_err(|e| e.to_string())
}

fn line_json(line: &Line, points: &[Point]) -> Value {
    let covers: Vec<usize> = (0..points.len())
        .filter(|&i| line.contains(&points[i]))
        .collect();
    json!({
        "a": line.a().to_string(),
        "b": line.b().to_string(),
        "c": line.c().to_string(),
        "label": describe_line(line),
        "covers": covers,
    })
}

fn point_json(p: &Point) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

/// Decide whether `k` lines cover the points; on "yes" also return a cover.
///
/// `{"answer": bool, "lines": [{"a","b","c","label","covers"}]}`
#[wasm_bindgen]
pub fn solve_cover(points_json: &str, k: usize) -> Result<String, String> {
    let inst = instance(points_json, k)?;
    let out = match solve(&inst) {
        Some(cover) => json!({
            "answer": true,
            "lines": cover.iter().map(|l| line_json(l, inst.points())).collect::<Vec<_>>(),
        }),
        None => json!({ "answer": false, "lines": [] }),
    };
    Ok(out.to_string())
}

/// Run the kernel rules.
///
/// `{"decided": true|false|null, "mandatory": [line + "k_before"], "remaining": [[x,y]], "k": n}`
#[wasm_bindgen]
pub fn kernelize_points(points_json: &str, k: usize) -> Result<String, String> {
    let inst = instance(points_json, k)?;
    let report = kernelize(&inst);
    let mandatory: Vec<Value> = report
        .mandatory_lines
        .iter()
        .map(|m| {
            let mut v = line_json(&m.line, inst.points());
            v["k_before"] = json!(m.k_before);
            v
        })
        .collect();
    Ok(json!({
        "decided": report.decided,
        "mandatory": mandatory,
        "remaining": report.reduced.points().iter().map(point_json).collect::<Vec<_>>(),
        "k": report.reduced.k,
    })
    .to_string())
}

/// Order type in input order and the canonical order type with the point
/// ordering that realizes it.
///
/// `{"otr": "+-0", "canonical": "...", "ordering": [indices]}`
#[wasm_bindgen]
pub fn order_type(points_json: &str) -> Result<String, String> {
    let points = parse_points(points_json)?;
    let direct = otr(&points).map_err(|e| e.to_string())?;
    let (canon, ordering) = canonical_ordering(&points).map_err(|e| e.to_string())?;
    Ok(json!({
        "otr": direct.symbols(),
        "canonical": canon.symbols(),
        "ordering": ordering,
    })
    .to_string())
}
