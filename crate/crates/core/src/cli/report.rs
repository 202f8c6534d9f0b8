//! Structured command output, rendered as compact JSON or aligned text.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub rows: Vec<Map<String, Value>>,
    pub verdict: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn row<K: Into<String>>(&mut self, fields: impl IntoIterator<Item = (K, Value)>) {
        self.rows
            .push(fields.into_iter().map(|(k, v)| (k.into(), v)).collect());
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        if self.command.is_empty() && self.params.is_empty() && self.verdict.is_none() {
            out.insert("rows".into(), Value::Array(self.rows_json()));
            return Value::Object(out);
        }
        out.insert("command".into(), Value::String(self.command.clone()));
        out.insert("params".into(), Value::Object(self.params.clone()));
        out.insert("rows".into(), Value::Array(self.rows_json()));
        out.insert(
            "verdict".into(),
            self.verdict.clone().map_or(Value::Null, Value::String),
        );
        Value::Object(out)
    }

    fn rows_json(&self) -> Vec<Value> {
        self.rows.iter().cloned().map(Value::Object).collect()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.to_json().to_string();
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    /// Parameters on one line, then one aligned table per run of rows that
    /// share the same columns, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.command.is_empty() {
            out.push_str(&self.command);
            for (k, v) in &self.params {
                out.push_str(&format!(" {k}={}", cell(v)));
            }
            out.push('\n');
        }
        let mut start = 0;
        while start < self.rows.len() {
            let keys: Vec<&String> = self.rows[start].keys().collect();
            let mut end = start + 1;
            while end < self.rows.len() && self.rows[end].keys().eq(keys.iter().copied()) {
                end += 1;
            }
            if start > 0 {
                out.push('\n');
            }
            table(&mut out, &keys, &self.rows[start..end]);
            start = end;
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out
    }
}

fn table(out: &mut String, keys: &[&String], rows: &[Map<String, Value>]) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| cell(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| {
            cells
                .iter()
                .map(|c| c[i].chars().count())
                .chain([k.chars().count()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, &w)| format!("{f:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    out.push_str(&line(keys.iter().map(|k| k.as_str()).collect()));
    for c in &cells {
        out.push_str(&line(c.iter().map(String::as_str).collect()));
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(cell).collect();
            format!("[{}]", inner.join(","))
        }
        other => other.to_string(),
    }
}
