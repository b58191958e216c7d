use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

/// Output of one invocation. Object keys are sorted, so identical inputs
/// give identical bytes.
#[derive(Serialize, Debug)]
pub struct Report {
    pub verb: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn write_json(&self, out: &mut impl Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    /// A `rows` array of flat objects becomes a table; anything else is
    /// flattened to `key,value` lines.
    pub fn write_csv(&self, out: &mut impl Write) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(Value::Array(rows)) = self.results.get("rows") {
            if let Some(Value::Object(first)) = rows.first() {
                let header: Vec<&String> = first.keys().collect();
                w.write_record(&header)?;
                for row in rows {
                    let record: Vec<String> =
                        header.iter().map(|k| scalar(row.get(k.as_str()).unwrap_or(&Value::Null))).collect();
                    w.write_record(&record)?;
                }
                w.flush()?;
                return Ok(());
            }
        }
        w.write_record(["key", "value"])?;
        w.write_record(["verb", &self.verb])?;
        let mut flat = Vec::new();
        flatten("results", &self.results, &mut flat);
        for (k, v) in flat {
            w.write_record([k, v])?;
        }
        if let Some(p) = self.pass {
            w.write_record(["pass", if p { "true" } else { "false" }])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}
