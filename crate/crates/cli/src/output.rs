use serde_json::{json, Map, Value};

use braidlab_core::report::LawReport;

/// One `key=value` block, optionally followed by table rows.
#[derive(Debug, Default)]
pub struct Block {
    pub fields: Vec<(String, String)>,
    pub rows: Vec<Vec<String>>,
    pub passed: Option<bool>,
}

impl Block {
    pub fn new() -> Block {
        Block::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Block {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn from_report(r: &LawReport) -> Block {
        Block { fields: r.pairs(), rows: Vec::new(), passed: Some(r.passed) }
    }
}

pub fn render_text(blocks: &[Block]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|b| {
            let mut lines: Vec<String> = b.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
            lines.extend(b.rows.iter().map(|r| r.join(" ")));
            lines.join("\n") + "\n"
        })
        .collect();
    parts.join("\n")
}

pub fn render_json(blocks: &[Block]) -> String {
    let docs: Vec<Value> = blocks
        .iter()
        .map(|b| {
            let mut m = Map::new();
            for (k, v) in &b.fields {
                m.insert(k.clone(), Value::String(v.clone()));
            }
            if !b.rows.is_empty() {
                m.insert("rows".into(), json!(b.rows));
            }
            Value::Object(m)
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "reports": docs })).expect("serialisable") + "\n"
}
