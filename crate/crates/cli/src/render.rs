use std::fmt::Display;

use serde_json::{json, Map, Value};

use extlift::scalar::{to_display_string, to_fraction_string};
use extlift::{
    ExtMonomial, ExtOrderSpec, ExtPolynomial, FreeOrderSpec, FreePolynomial, Scalar, Word,
};

/// `[["p/q", "x1x3"], ...]`, terms in descending order.
pub fn ext_poly(f: &ExtPolynomial, order: &ExtOrderSpec) -> Value {
    Value::Array(
        f.terms_descending(order)
            .iter()
            .map(|(m, c)| json!([to_fraction_string(c), m.to_string()]))
            .collect(),
    )
}

pub fn free_poly(f: &FreePolynomial, order: &FreeOrderSpec) -> Value {
    Value::Array(
        f.terms_descending(order)
            .iter()
            .map(|(w, c)| json!([to_fraction_string(c), w.to_string()]))
            .collect(),
    )
}

fn terms_text(terms: impl Iterator<Item = (String, Scalar)>) -> String {
    let mut s = String::new();
    for (k, (m, c)) in terms.enumerate() {
        let neg = c < Scalar::from_integer(0.into());
        let abs = if neg { -c } else { c };
        s.push_str(match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let one = abs == Scalar::from_integer(1.into());
        match (m.as_str(), one) {
            ("1", _) => s.push_str(&to_display_string(&abs)),
            (_, true) => s.push_str(&m),
            (_, false) => s.push_str(&format!("{}*{m}", to_display_string(&abs))),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn ext_poly_text(f: &ExtPolynomial, order: &ExtOrderSpec) -> String {
    terms_text(
        f.terms_descending(order)
            .into_iter()
            .map(|(m, c)| (m.to_string(), c)),
    )
}

pub fn free_poly_text(f: &FreePolynomial, order: &FreeOrderSpec) -> String {
    terms_text(
        f.terms_descending(order)
            .into_iter()
            .map(|(w, c)| (w.to_string(), c)),
    )
}

pub fn words(ws: &[Word]) -> Value {
    Value::Array(ws.iter().map(|w| Value::String(w.to_string())).collect())
}

pub fn monomials(ms: &[ExtMonomial]) -> Value {
    Value::Array(ms.iter().map(|m| Value::String(m.to_string())).collect())
}

pub fn joined<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Parallel JSON object and text lines.
#[derive(Default)]
pub struct Report {
    map: Map<String, Value>,
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.map
            .insert("command".into(), Value::String(command.into()));
        r
    }

    /// A field shown in both forms.
    pub fn put(&mut self, key: &str, value: Value, text: impl Display) {
        self.map.insert(key.into(), value);
        self.lines
            .push(format!("{}: {text}", key.replace('_', " ")));
    }

    /// A field shown only in JSON.
    pub fn put_json(&mut self, key: &str, value: Value) {
        self.map.insert(key.into(), value);
    }

    /// A multi-line block shown only as text.
    pub fn block(&mut self, title: &str, lines: impl IntoIterator<Item = String>) {
        self.lines.push(format!("{}:", title.replace('_', " ")));
        self.lines
            .extend(lines.into_iter().map(|l| format!("  {l}")));
    }

    pub fn finish(self, json: bool) -> String {
        if json {
            let mut s =
                serde_json::to_string_pretty(&Value::Object(self.map)).expect("serializable");
            s.push('\n');
            s
        } else {
            let mut s = self.lines.join("\n");
            s.push('\n');
            s
        }
    }
}
