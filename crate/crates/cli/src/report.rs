use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

/// One named check inside a run.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub name: String,
    pub ok: bool,
    pub detail: Value,
}

impl Outcome {
    pub fn new(name: impl Into<String>, ok: bool, detail: Value) -> Outcome {
        Outcome { name: name.into(), ok, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub input_hash: String,
    pub started: Option<u64>,
    pub elapsed_ms: Option<u64>,
    pub results: Vec<Outcome>,
    pub ok: bool,
}

impl RunReport {
    pub fn new(command: &str, parameters: Map<String, Value>) -> RunReport {
        let canonical = serde_json::to_vec(&json!({ "command": command, "parameters": parameters }))
            .expect("parameters serialize");
        RunReport {
            command: command.to_string(),
            input_hash: hex::encode(Sha256::digest(&canonical)),
            parameters,
            started: SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs()),
            elapsed_ms: None,
            results: Vec::new(),
            ok: true,
        }
    }

    pub fn push(&mut self, o: Outcome) {
        self.ok &= o.ok;
        self.results.push(o);
    }

    pub fn finish(&mut self, t0: Instant) {
        self.ok = self.results.iter().all(|o| o.ok);
        self.elapsed_ms = Some(t0.elapsed().as_millis() as u64);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the timing fields cleared.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.started = None;
        r.elapsed_ms = None;
        r.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ok_is_conjunction_and_hash_tracks_parameters() {
        let mut p = Map::new();
        p.insert("ring".into(), json!("zmod:9"));
        let mut r = RunReport::new("orbits", p.clone());
        r.push(Outcome::new("a", true, Value::Null));
        assert!(r.ok);
        r.push(Outcome::new("b", false, Value::Null));
        r.finish(Instant::now());
        assert!(!r.ok);
        let again = RunReport::new("orbits", p.clone());
        assert_eq!(r.input_hash, again.input_hash);
        p.insert("ring".into(), json!("zmod:3"));
        assert_ne!(r.input_hash, RunReport::new("orbits", p).input_hash);
        assert!(!r.canonical_json().contains("elapsed_ms\": 0"));
        assert!(r.canonical_json().contains("\"elapsed_ms\": null"));
    }
}
