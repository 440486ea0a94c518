//! JSON envelopes and file output.

use crate::config::RunConfig;
use crate::Failure;
use serde::Serialize;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

/// Run metadata; the timestamp is the only field that varies between
/// identical runs.
#[derive(Serialize)]
pub struct Metadata {
    pub command: &'static str,
    pub version: &'static str,
    pub timestamp_unix: u64,
}

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub metadata: Metadata,
    pub config: &'a RunConfig,
    pub seed: u64,
    pub results: T,
}

pub fn envelope<'a, T: Serialize>(command: &'static str, config: &'a RunConfig, seed: u64, results: T) -> Envelope<'a, T> {
    let timestamp_unix = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    Envelope {
        metadata: Metadata {
            command,
            version: env!("CARGO_PKG_VERSION"),
            timestamp_unix,
        },
        config,
        seed,
        results,
    }
}

/// Writes pretty JSON to `path`, or stdout when it is empty.
pub fn write_json<T: Serialize>(path: &str, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::io(e.to_string()))?;
    text.push('\n');
    if path.is_empty() {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(e.to_string()))
    } else {
        std::fs::write(path, text).map_err(|e| Failure::io(format!("cannot write {path}: {e}")))
    }
}

/// Opens `path` for CSV output with the resolved config as metadata lines.
pub fn csv_file(path: &str, command: &str, config: &RunConfig) -> Result<std::io::BufWriter<std::fs::File>, Failure> {
    let file = std::fs::File::create(path).map_err(|e| Failure::io(format!("cannot create {path}: {e}")))?;
    let mut w = std::io::BufWriter::new(file);
    let cfg = serde_json::to_string(config).map_err(|e| Failure::io(e.to_string()))?;
    writeln!(w, "# command = {command}").map_err(|e| Failure::io(e.to_string()))?;
    writeln!(w, "# config = {cfg}").map_err(|e| Failure::io(e.to_string()))?;
    Ok(w)
}

pub fn io_err(e: std::io::Error) -> Failure {
    Failure::io(e.to_string())
}
