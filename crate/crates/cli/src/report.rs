use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Ok,
    Fail,
    Error,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Ok
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub payload: Value,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Two-column table: header rows, then one row per payload field.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("command".into(), self.command.clone()),
            ("verdict".into(), self.verdict.label().into()),
        ];
        match &self.payload {
            Value::Object(map) => {
                for (k, v) in map {
                    rows.push((k.clone(), cell(v)));
                }
            }
            other => rows.push(("payload".into(), cell(other))),
        }
        rows.push(("elapsed_ms".into(), self.elapsed_ms.to_string()));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(Value::is_string) => items
            .iter()
            .map(|s| s.as_str().unwrap_or_default())
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_lists_payload_fields() {
        let r = RunReport {
            command: "eval".into(),
            inputs: json!({}),
            verdict: Verdict::Ok,
            payload: json!({"value": "{3,4,6}", "classes": ["[1]", "[2]"], "n": 3}),
            elapsed_ms: 0,
        };
        let t = r.to_table();
        assert!(t.contains("verdict     ok"));
        assert!(t.contains("value       {3,4,6}"));
        assert!(t.contains("classes     [1] [2]"));
    }
}
