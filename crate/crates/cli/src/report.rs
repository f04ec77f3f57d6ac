//! Machine-readable reports. Integers go out as decimal strings so that
//! values past 2^53 survive JSON parsers.

use std::fmt::Display;
use std::time::Duration;

use serde_json::{json, Map, Value};
use sturdy_core::{serialize_family, SetFamily};

pub fn int(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn ints<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

pub fn family(f: &SetFamily) -> Value {
    Value::String(serialize_family(f))
}

pub struct Report {
    command: String,
    parameters: Map<String, Value>,
    results: Map<String, Value>,
    verdicts: Map<String, Value>,
    witnesses: Map<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            parameters: Map::new(),
            results: Map::new(),
            verdicts: Map::new(),
            witnesses: Map::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.into(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), value.into());
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.verdicts.insert(key.into(), value.into());
        self
    }

    pub fn witness(&mut self, key: &str, f: &SetFamily) -> &mut Self {
        self.witnesses.insert(key.into(), family(f));
        self
    }

    pub fn to_json(&self, timing: Option<Duration>) -> String {
        let mut doc = json!({
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
        });
        if let Some(t) = timing {
            doc["timing"] = json!({ "seconds": format!("{:.6}", t.as_secs_f64()) });
        }
        let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
        out.push('\n');
        out
    }
}
