//! Golden values and frozen tables, embedded or read from `TRANSVECT_FIXTURES`.

use serde_json::{Map, Value};
use std::path::PathBuf;

const GOLDEN: &str = include_str!("../../core/data/golden.json");
const CASES: &str = include_str!("../../core/data/dilation_cases.json");

fn dir() -> Option<PathBuf> {
    std::env::var_os("TRANSVECT_FIXTURES").map(PathBuf::from)
}

fn read(name: &str, embedded: &str) -> Result<String, String> {
    match dir() {
        Some(d) => {
            let p = d.join(name);
            std::fs::read_to_string(&p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        None => Ok(embedded.to_string()),
    }
}

/// The `values` map of golden.json.
pub fn golden() -> Result<Map<String, Value>, String> {
    let v: Value = serde_json::from_str(&read("golden.json", GOLDEN)?).map_err(|e| e.to_string())?;
    match v.get("values") {
        Some(Value::Object(m)) => Ok(m.clone()),
        _ => Err("golden.json has no values map".into()),
    }
}

pub fn lookup(key: &str) -> Option<Value> {
    golden().ok()?.get(key).cloned()
}

/// Raw JSON of the frozen dilation case table.
pub fn dilation_cases() -> Result<String, String> {
    read("dilation_cases.json", CASES)
}
