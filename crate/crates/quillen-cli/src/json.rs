//! JSON rendering of kernel reports. All maps are sorted (serde_json's
//! default BTreeMap), all coefficient values are decimal strings, and every
//! document carries `"schema": 1`, so byte-identical output for identical
//! inputs is guaranteed.

use quillen::report::HomologyReport;
use serde_json::{json, Map, Value};

pub fn document(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(1));
    m.insert("command".into(), json!(command));
    match body {
        Value::Object(o) => {
            for (k, v) in o {
                m.insert(k, v);
            }
        }
        other => {
            m.insert("result".into(), other);
        }
    }
    Value::Object(m)
}

pub fn homology_report(r: &HomologyReport) -> Value {
    json!({
        "degree": r.degree,
        "free_rank": r.free_rank,
        "torsion": r.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "dimension": r.dimension,
        "presentation": r.presentation.map(|(g, rl)| json!({"generators": g, "relations": rl})),
    })
}

pub fn error_value(e: &quillen::Error) -> Value {
    json!({
        "schema": 1,
        "error": e.name(),
        "message": e.to_string(),
    })
}

/// Plain-text table rendering: one `key: value` line per top-level field.
pub fn render(v: &Value, format: &str) -> String {
    if format == "table" {
        let mut out = String::new();
        if let Value::Object(m) = v {
            for (k, val) in m {
                out.push_str(&format!("{k}: {}\n", compact(val)));
            }
        } else {
            out.push_str(&compact(v));
            out.push('\n');
        }
        out
    } else {
        let mut s = serde_json::to_string_pretty(v).expect("serializable");
        s.push('\n');
        s
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Chain complex serialization: degrees, ranks, dense coefficient-string
/// boundary matrices.
pub fn chain_complex(c: &quillen::complex::ChainComplex) -> Value {
    json!({
        "degrees": (c.min_degree..=c.max_degree()).collect::<Vec<_>>(),
        "ranks": c.ranks,
        "boundaries": c
            .boundaries
            .iter()
            .map(|b| matrix_strings_scalar(b))
            .collect::<Vec<_>>(),
    })
}

/// Polynomial complex serialization (entries rendered as expressions).
pub fn poly_complex(c: &quillen::complex::PolyComplex) -> Value {
    json!({
        "degrees": (c.min_degree..=c.max_degree()).collect::<Vec<_>>(),
        "ranks": c.ranks,
        "boundaries": c
            .boundaries
            .iter()
            .map(|b| {
                (0..b.rows)
                    .map(|i| (0..b.cols).map(|j| format!("{}", b.at(i, j))).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    })
}

fn matrix_strings_scalar(m: &quillen::matrix::SMat) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| m.at(i, j).to_decimal_string())
                .collect()
        })
        .collect()
}

/// Truncated simplicial module serialization: {N, ranks, d, s}.
pub fn simplicial_module(m: &quillen::smod::TruncatedSimplicialModule) -> Value {
    json!({
        "N": m.trunc,
        "ranks": m.ranks,
        "d": m
            .faces
            .iter()
            .map(|lvl| lvl.iter().map(matrix_strings_scalar).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "s": m
            .degens
            .iter()
            .map(|lvl| lvl.iter().map(matrix_strings_scalar).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}
