use serde_json::Value;

use crate::commands::Format;
use crate::document::Document;

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Table => table(doc),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// One `key  value` line per payload field; arrays of objects get a line each.
fn table(doc: &Document) -> String {
    let mut lines = vec![format!(
        "kind  {}",
        serde_json::to_value(doc.kind).expect("kind").as_str().unwrap_or("")
    )];
    if let Value::Object(map) = &doc.payload {
        let width = map.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in map {
            match v {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    lines.push(k.clone());
                    lines.extend(items.iter().map(|it| format!("  {}", scalar(it))));
                }
                Value::Object(inner) if inner.values().all(|x| !x.is_object() && !x.is_array()) && inner.len() > 4 => {
                    lines.push(k.clone());
                    lines.extend(inner.iter().map(|(ik, iv)| format!("  {ik}  {}", scalar(iv))));
                }
                _ => lines.push(format!("{k:width$}  {}", scalar(v))),
            }
        }
    }
    lines.join("\n")
}
