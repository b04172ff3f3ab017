use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliResult;

/// Sidecar written next to every data file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub version: String,
    pub output: String,
    pub sha256: String,
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `x` with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// `x` with 12 significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

pub fn json_bytes<T: Serialize>(value: &T) -> CliResult<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes `bytes` to `out` and the manifest beside it.
pub fn write_with_manifest(out: &Path, bytes: &[u8], command: &str, parameters: serde_json::Value) -> CliResult<RunManifest> {
    fs::write(out, bytes)?;
    let manifest = RunManifest {
        command: command.to_string(),
        parameters,
        version: greedy_energy::VERSION.to_string(),
        output: out.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
        sha256: sha256_hex(bytes),
    };
    fs::write(manifest_path(out), json_bytes(&manifest)?)?;
    Ok(manifest)
}
