//! Plain-text rendering of result documents.

use serde_json::Value;

pub fn table(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, None, value, 0);
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Arrays of scalars print inline as tuples.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.iter().all(is_scalar) => {
            Some(format!("({})", items.iter().map(scalar).collect::<Vec<_>>().join(", ")))
        }
        v if is_scalar(v) => Some(scalar(v)),
        _ => None,
    }
}

fn write_value(out: &mut String, key: Option<&str>, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let label = key.map(|k| format!("{k}:")).unwrap_or_else(|| "-".to_string());
    if let Some(s) = inline(v) {
        out.push_str(&format!("{pad}{label} {s}\n"));
        return;
    }
    if key.is_some() || depth > 0 {
        out.push_str(&format!("{pad}{label}\n"));
    }
    let inner = if key.is_some() || depth > 0 { depth + 1 } else { depth };
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                write_value(out, Some(k), item, inner);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{}(none)\n", "  ".repeat(inner)));
            }
            for item in items {
                write_value(out, None, item, inner);
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_document() {
        let v = json!({ "found": false, "apexes": [["1", "0"], ["0", "1/2"]], "wedge": { "dim": 2 } });
        assert_eq!(
            table(&v),
            "apexes:\n  - (1, 0)\n  - (0, 1/2)\nfound: false\nwedge:\n  dim: 2\n"
        );
    }
}
