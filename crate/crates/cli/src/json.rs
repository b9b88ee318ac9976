//! Deterministic report rendering: JSON with fixed key order and fixed
//! float formatting (17 significant digits, no locale), plus a plain
//! indented table view of the same tree. Identical inputs and flags must
//! produce byte-identical output, which rules out map-ordered or
//! shortest-roundtrip serializers.

use num_complex::Complex64;

#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn complex(z: Complex64) -> Json {
        Json::Array(vec![Json::Float(z.re), Json::Float(z.im)])
    }

    pub fn ints(values: impl IntoIterator<Item = i64>) -> Json {
        Json::Array(values.into_iter().map(Json::Int).collect())
    }

    pub fn floats(values: impl IntoIterator<Item = f64>) -> Json {
        Json::Array(values.into_iter().map(Json::Float).collect())
    }

    pub fn to_json_string(&self) -> String {
        let mut out = String::new();
        self.write_json(&mut out, 0);
        out.push('\n');
        out
    }

    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        self.write_table(&mut out, "", 0);
        out
    }

    fn is_scalar(&self) -> bool {
        !matches!(self, Json::Array(_) | Json::Object(_))
    }

    fn write_json(&self, out: &mut String, depth: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Float(x) => out.push_str(&fmt_float(*x)),
            Json::Str(s) => push_quoted(out, s),
            Json::Array(items) => {
                if items.iter().all(Json::is_scalar) {
                    out.push('[');
                    for (i, item) in items.iter().enumerate() {
                        if i > 0 {
                            out.push_str(", ");
                        }
                        item.write_json(out, depth);
                    }
                    out.push(']');
                } else {
                    out.push('[');
                    for (i, item) in items.iter().enumerate() {
                        out.push_str(if i > 0 { ",\n" } else { "\n" });
                        push_indent(out, depth + 1);
                        item.write_json(out, depth + 1);
                    }
                    out.push('\n');
                    push_indent(out, depth);
                    out.push(']');
                }
            }
            Json::Object(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    out.push_str(if i > 0 { ",\n" } else { "\n" });
                    push_indent(out, depth + 1);
                    push_quoted(out, key);
                    out.push_str(": ");
                    value.write_json(out, depth + 1);
                }
                out.push('\n');
                push_indent(out, depth);
                out.push('}');
            }
        }
    }

    fn write_table(&self, out: &mut String, key: &str, depth: usize) {
        let label = |out: &mut String| {
            push_indent(out, depth);
            if !key.is_empty() {
                out.push_str(key);
                out.push_str(": ");
            }
        };
        match self {
            Json::Object(fields) => {
                if !key.is_empty() {
                    push_indent(out, depth);
                    out.push_str(key);
                    out.push_str(":\n");
                }
                let child = if key.is_empty() { depth } else { depth + 1 };
                for (k, v) in fields {
                    v.write_table(out, k, child);
                }
            }
            Json::Array(items) if items.iter().all(Json::is_scalar) => {
                label(out);
                let rendered: Vec<String> = items.iter().map(Json::scalar_string).collect();
                out.push_str(&rendered.join(" "));
                out.push('\n');
            }
            Json::Array(items) => {
                if !key.is_empty() {
                    push_indent(out, depth);
                    out.push_str(key);
                    out.push_str(":\n");
                }
                for item in items {
                    item.write_table(out, "-", depth + 1);
                }
            }
            scalar => {
                label(out);
                out.push_str(&scalar.scalar_string());
                out.push('\n');
            }
        }
    }

    fn scalar_string(&self) -> String {
        match self {
            Json::Null => "null".to_string(),
            Json::Bool(b) => b.to_string(),
            Json::Int(i) => i.to_string(),
            Json::Float(x) => fmt_float(*x),
            Json::Str(s) => s.clone(),
            _ => unreachable!("scalar_string on a composite"),
        }
    }
}

fn push_indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn push_quoted(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// 17 significant digits, sign-normalized zero. All values in reports are
/// finite by construction.
pub fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width() {
        assert_eq!(fmt_float(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_float(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn json_shape() {
        let doc = Json::Object(vec![
            ("n", Json::Int(2)),
            ("xs", Json::ints([1, -2])),
            ("tag", Json::Str("a\"b".into())),
        ]);
        let text = doc.to_json_string();
        assert!(text.starts_with("{\n  \"n\": 2,\n  \"xs\": [1, -2],"));
        assert!(text.contains("\"a\\\"b\""));
    }
}
