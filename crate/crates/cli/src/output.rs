use serde_json::{Map, Value};

use gh1d::harness::fmt12;

/// Named results, printed as `name value` lines or as one JSON object.
#[derive(Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn num(&mut self, name: &str, v: f64) -> &mut Self {
        let value = serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number);
        self.fields.push((name.into(), value));
        self
    }

    pub fn int(&mut self, name: &str, v: u128) -> &mut Self {
        let value = u64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from);
        self.fields.push((name.into(), value));
        self
    }

    pub fn flag(&mut self, name: &str, v: bool) -> &mut Self {
        self.fields.push((name.into(), Value::Bool(v)));
        self
    }

    pub fn text(&mut self, name: &str, v: impl Into<String>) -> &mut Self {
        self.fields.push((name.into(), Value::String(v.into())));
        self
    }

    pub fn value(&mut self, name: &str, v: Value) -> &mut Self {
        self.fields.push((name.into(), v));
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            return Value::Object(map).to_string();
        }
        self.fields
            .iter()
            .map(|(k, v)| format!("{k} {}", plain(v)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => fmt12(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Null => "NaN".into(),
        other => other.to_string(),
    }
}
