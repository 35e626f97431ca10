//! Corpus JSON-lines input, target-spec JSON and score CSV output.

use std::collections::BTreeMap;
use std::io::{BufRead, Read, Write};

use serde::Deserialize;

use super::{CotermScore, Document, TargetSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Deserialize)]
#[serde(untagged)]
enum Id {
    Text(String),
    Number(serde_json::Number),
}

#[derive(Deserialize)]
struct RawDocument {
    id: Id,
    text: String,
    #[serde(default)]
    year: Option<i32>,
    #[serde(default)]
    region: Option<String>,
}

/// Streams documents from JSON lines; blank lines are skipped.
pub struct JsonlDocuments<R> {
    lines: std::io::Lines<R>,
    lineno: usize,
}

impl<R: BufRead> JsonlDocuments<R> {
    pub fn new(reader: R) -> Self {
        Self {
            lines: reader.lines(),
            lineno: 0,
        }
    }
}

impl<R: BufRead> Iterator for JsonlDocuments<R> {
    type Item = Result<Document>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(e.into())),
            };
            self.lineno += 1;
            if line.trim().is_empty() {
                continue;
            }
            let parsed = serde_json::from_str::<RawDocument>(&line)
                .map_err(|e| Error::parse(self.lineno, e.to_string()))
                .map(|raw| {
                    let id = match raw.id {
                        Id::Text(s) => s,
                        Id::Number(n) => n.to_string(),
                    };
                    Document::new(id, raw.text, raw.year, raw.region)
                });
            return Some(parsed);
        }
    }
}

pub fn read_corpus_jsonl<R: BufRead>(reader: R) -> Result<Vec<Document>> {
    JsonlDocuments::new(reader).collect()
}

/// Reads `{"name": ["surface", ...], ...}`; targets come back in name order.
pub fn read_targets_json<R: Read>(reader: R) -> Result<Vec<TargetSpec>> {
    let map: BTreeMap<String, Vec<String>> =
        serde_json::from_reader(reader).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    map.into_iter().map(|(name, terms)| TargetSpec::new(name, terms)).collect()
}

pub const SCORES_CSV_HEADER: &str = "target,dimension,score,n_docs,n_tokens,n_high,n_low";

/// Writes `target,dimension,score,n_docs,n_tokens,n_high,n_low` rows.
pub fn write_scores_csv<'a, S: Scalar, W: Write>(
    rows: impl IntoIterator<Item = &'a CotermScore<S>>,
    out: W,
) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io = |e: csv::Error| Error::Io(e.into());
    wtr.write_record(SCORES_CSV_HEADER.split(',')).map_err(io)?;
    for r in rows {
        wtr.write_record([
            r.target.clone(),
            r.dimension.to_string(),
            r.score.to_string(),
            r.n_docs.to_string(),
            r.n_tokens.to_string(),
            r.n_high.to_string(),
            r.n_low.to_string(),
        ])
        .map_err(io)?;
    }
    wtr.flush()?;
    Ok(())
}
