use crate::Format;

/// Renders `(n, value)` rows in the requested format.
pub fn rows(format: Format, rows: &[(usize, String)]) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for (n, v) in rows {
                out.push_str(&format!("{n}\t{v}\n"));
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in rows {
                out.push_str(&format!("{n},{}\n", csv_field(v)));
            }
        }
        Format::JsonLines => {
            for (n, v) in rows {
                out.push_str(&serde_json::json!({ "n": n, "value": v }).to_string());
                out.push('\n');
            }
        }
    }
    out
}

/// Renders two-column text tables (bijections, check reports).
pub fn pairs(format: Format, head: (&str, &str), rows: &[(String, String)]) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for (a, b) in rows {
                out.push_str(&format!("{a}\t{b}\n"));
            }
        }
        Format::Csv => {
            out.push_str(&format!("{},{}\n", head.0, head.1));
            for (a, b) in rows {
                out.push_str(&format!("{},{}\n", csv_field(a), csv_field(b)));
            }
        }
        Format::JsonLines => {
            for (a, b) in rows {
                let mut obj = serde_json::Map::new();
                obj.insert(head.0.into(), a.clone().into());
                obj.insert(head.1.into(), b.clone().into());
                out.push_str(&serde_json::Value::Object(obj).to_string());
                out.push('\n');
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
