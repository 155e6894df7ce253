//! Plain-text rendering of the JSON output.

use flagj_core::ring::FlagShape;
use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

/// `[{exponents, coeff}, ...]` as a readable polynomial.
fn poly(terms: &[Value], shape: Option<&FlagShape>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let name = |i: usize| shape.map_or_else(|| format!("x{i}"), |s| s.var_name(i));
    let parts: Vec<String> = terms
        .iter()
        .map(|t| {
            let coeff = t["coeff"].as_str().unwrap_or("?");
            let coeff = coeff.strip_suffix("/1").unwrap_or(coeff);
            let vars: Vec<String> = t["exponents"]
                .as_array()
                .into_iter()
                .flatten()
                .enumerate()
                .filter_map(|(i, e)| match e.as_u64() {
                    Some(0) | None => None,
                    Some(1) => Some(name(i)),
                    Some(k) => Some(format!("{}^{k}", name(i))),
                })
                .collect();
            match (coeff, vars.is_empty()) {
                (c, true) => c.to_string(),
                ("1", false) => vars.join("*"),
                ("-1", false) => format!("-{}", vars.join("*")),
                (c, false) => format!("{c}*{}", vars.join("*")),
            }
        })
        .collect();
    parts.join(" + ").replace("+ -", "- ")
}

fn table(rows: &[Value]) -> String {
    let mut headers: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !headers.contains(k) {
                    headers.push(k.clone());
                }
            }
        }
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| headers.iter().map(|h| r.get(h).map_or_else(String::new, scalar)).collect()).collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: &[String]| {
        items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(&headers)];
    out.extend(cells.iter().map(|c| line(c)));
    out.join("\n")
}

pub fn render_table(v: &Value) -> String {
    let shape: Option<FlagShape> = v.get("space").and_then(Value::as_str).and_then(|s| s.parse().ok());
    match v {
        Value::Object(m) => {
            let mut out = Vec::new();
            for (k, val) in m {
                match val {
                    Value::Array(items) if k == "terms" => {
                        out.push("hbar  coefficient".to_string());
                        for t in items {
                            let terms = t["poly"].as_array().map_or(&[][..], |a| a.as_slice());
                            out.push(format!("{:<4}  {}", t["hbar"].to_string(), poly(terms, shape.as_ref())));
                        }
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push(format!("{k}:"));
                        out.push(table(items));
                    }
                    other => out.push(format!("{k}: {}", scalar(other))),
                }
            }
            out.join("\n")
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(|i| i.get("checks").is_some()) => {
            items.iter().map(render_table).collect::<Vec<_>>().join("\n\n")
        }
        Value::Array(items) if items.iter().all(Value::is_object) => table(items),
        other => scalar(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_a_j_coefficient() {
        let v = json!({
            "space": "grass:1,3",
            "degree": [1],
            "terms": [
                {"hbar": -3, "poly": [{"exponents": [0], "coeff": "1/1"}]},
                {"hbar": -4, "poly": [{"exponents": [1], "coeff": "-3/1"}]},
                {"hbar": -5, "poly": [{"exponents": [2], "coeff": "6/1"}]}
            ]
        });
        let t = render_table(&v);
        assert!(t.contains("degree: 1"));
        assert!(t.contains("-4    -3*H[1,1]"), "{t}");
        assert!(t.contains("-5    6*H[1,1]^2"), "{t}");
    }

    #[test]
    fn renders_records() {
        let v = json!([{"a": 1, "value": "1/1"}, {"a": 2, "value": "0/1"}]);
        assert_eq!(render_table(&v), "a  value\n1  1/1\n2  0/1");
    }
}
