//! Output metadata and atomic file writes.
//!
//! Every output carries the tool version, config hash, seed and the SHA-256
//! of each input (keyed by file name, so reruns from another directory are
//! byte-identical). Delimited text gets `# key: value` lines ahead of its
//! header; JSON gets a top-level `metadata` object.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

/// Reads an input file and records its digest.
pub fn read_input(path: &Path, inputs: &mut Vec<InputDigest>) -> CliResult<Vec<u8>> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    inputs.push(InputDigest {
        name: path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    });
    Ok(bytes)
}

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config_hash: String,
    pub seed: u64,
    pub inputs: Vec<InputDigest>,
    pub config: serde_json::Value,
}

impl Metadata {
    pub fn new(command: &'static str, cfg: &RunConfig, inputs: Vec<InputDigest>) -> Self {
        Self {
            tool: env!("CARGO_BIN_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            config_hash: cfg.hash(),
            seed: cfg.seed,
            inputs,
            config: cfg.canonical_json(),
        }
    }

    /// Comment block for TSV/CSV outputs.
    pub fn comment_lines(&self) -> String {
        let mut s = format!(
            "# tool: {} {}\n# command: {}\n# config_hash: {}\n# seed: {}\n",
            self.tool, self.version, self.command, self.config_hash, self.seed
        );
        for input in &self.inputs {
            s.push_str(&format!("# input: {} sha256={}\n", input.name, input.sha256));
        }
        s.push_str(&format!("# config: {}\n", self.config));
        s
    }

    /// Pretty JSON document `{"metadata": ..., <body fields>}`.
    pub fn wrap_json<T: Serialize>(&self, body: &T) -> CliResult<Vec<u8>> {
        let mut value = serde_json::to_value(body).map_err(|e| CliError::Data(e.to_string()))?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| CliError::Data("report body must be a JSON object".into()))?;
        let mut out = serde_json::Map::new();
        out.insert("metadata".into(), serde_json::to_value(self).expect("metadata serializes"));
        out.append(obj);
        let mut bytes = serde_json::to_vec_pretty(&serde_json::Value::Object(out)).expect("json serializes");
        bytes.push(b'\n');
        Ok(bytes)
    }
}

/// Output directory helper; files appear only once fully written.
pub struct OutDir {
    dir: PathBuf,
    written: Vec<PathBuf>,
}

impl OutDir {
    pub fn create(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> CliResult<PathBuf> {
        let path = self.dir.join(name);
        let tmp = self.dir.join(format!(".{name}.tmp"));
        let result = fs::File::create(&tmp)
            .and_then(|mut f| {
                f.write_all(bytes)?;
                f.sync_all()
            })
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = result {
            let _ = fs::remove_file(&tmp);
            return Err(CliError::io(&path, e));
        }
        self.written.push(path.clone());
        Ok(path)
    }

    /// Writes `comment block + body` for delimited text outputs.
    pub fn write_text(&mut self, name: &str, meta: &Metadata, body: &[u8]) -> CliResult<PathBuf> {
        let mut bytes = meta.comment_lines().into_bytes();
        bytes.extend_from_slice(body);
        self.write(name, &bytes)
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }
}
