//! Deterministic text and JSON rendering of results.

use num_bigint::BigInt;
use serde_json::{json, Value};

use weylchi_core::arith::{format_rational, Q};
use weylchi_core::{AdjunctionTerm, ChiResult, IntersectionNumber, RationalPolytope};

/// Integers stay JSON integers while they fit; larger values degrade to
/// decimal strings so nothing is ever rounded.
pub fn json_int(x: &BigInt) -> Value {
    match i64::try_from(x.clone()) {
        Ok(n) => json!(n),
        Err(_) => json!(x.to_string()),
    }
}

pub fn json_rational(x: &Q) -> Value {
    if x.is_integer() {
        json_int(x.numer())
    } else {
        json!(format_rational(x))
    }
}

pub fn json_intersection(x: &IntersectionNumber) -> Value {
    json!({
        "value": json_rational(&x.value),
        "expected_integer": x.expected_integer,
    })
}

pub fn text_intersection(x: &IntersectionNumber) -> String {
    format_rational(&x.value)
}

pub fn json_vertex(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|c| json!(format_rational(c))).collect())
}

pub fn json_polytope(name: &str, p: &RationalPolytope) -> Value {
    json!({
        "name": name,
        "ambient_dim": p.dim_ambient(),
        "affine_dim": p.affine_dim(),
        "vertices": Value::Array(p.vertices().iter().map(|v| json_vertex(v)).collect()),
        "facets": Value::Array(
            p.facets()
                .iter()
                .map(|f| {
                    json!({
                        "normal": Value::Array(f.normal.iter().map(json_int).collect()),
                        "offset": json!(format_rational(&f.offset)),
                        "vertices": f.vertex_indices.clone(),
                    })
                })
                .collect(),
        ),
    })
}

pub fn text_polytope(name: &str, p: &RationalPolytope) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "polytope {name}: ambient dim {}, affine dim {}\n",
        p.dim_ambient(),
        p.affine_dim()
    ));
    out.push_str("vertices:\n");
    for v in p.vertices() {
        let coords: Vec<String> = v.iter().map(format_rational).collect();
        out.push_str(&format!("  ({})\n", coords.join(", ")));
    }
    out.push_str("facets (<normal, x> <= offset):\n");
    for f in p.facets() {
        let n: Vec<String> = f.normal.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!(
            "  [{}] <= {}\n",
            n.join(", "),
            format_rational(&f.offset)
        ));
    }
    out
}

/// Formal monomial like `+ S_2 . H_1^3 . H_2^2` (S_0 omitted).
pub fn term_text(term: &AdjunctionTerm, labels: &[String]) -> String {
    let mut parts = Vec::new();
    if term.chern_index > 0 {
        parts.push(format!("S_{}", term.chern_index));
    }
    for (i, &e) in term.exponents.iter().enumerate() {
        let base = labels
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("H_{}", i + 1));
        if e == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{e}"));
        }
    }
    format!(
        "{} {}",
        if term.sign >= 0 { "+" } else { "-" },
        parts.join(" · ")
    )
}

pub fn term_json(term: &AdjunctionTerm) -> Value {
    json!({
        "chern_index": term.chern_index,
        "exponents": term.exponents.clone(),
        "sign": term.sign,
        "evaluable": term.evaluable,
    })
}

pub fn chi_text(chi: &ChiResult, labels: &[String]) -> String {
    match &chi.value {
        Some(v) => format!("chi = {v}\n"),
        None => {
            let mut out = format!("chi = {}", chi.evaluated_part);
            for term in &chi.symbolic_residual {
                out.push_str(&format!(" {} deg({})", if term.sign >= 0 { "+" } else { "-" }, {
                    // strip the sign prefix from term_text
                    let t = term_text(term, labels);
                    t[2..].to_string()
                }));
            }
            out.push('\n');
            out
        }
    }
}

pub fn chi_json(chi: &ChiResult) -> Value {
    json!({
        "value": chi.value.as_ref().map(|v| json_int(v)),
        "evaluated_part": json_int(&chi.evaluated_part),
        "symbolic_residual": Value::Array(chi.symbolic_residual.iter().map(term_json).collect()),
    })
}
