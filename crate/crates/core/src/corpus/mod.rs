//! Applying a lexicon to a corpus.
//!
//! Two readings of a target are supported: looking its surface terms up in
//! the lexicon directly, and scoring the words that co-occur with it
//! ([`coterm_score`]): the share of high-dimension tokens minus the share of
//! low-dimension tokens among the documents that mention the target.
//! Co-term scores sit at a corpus-wide offset, so targets are read against
//! a [`Baseline`] computed the same way over the whole corpus.

mod analysis;
mod coterm;
mod io;
mod tokenize;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub use analysis::{
    analyze_target, baselines, ingroup_outgroup, quadrant, stability_by_group, Baselines, GroupKey,
    GroupRow, GroupValue, InGroupCell, InGroupMatrix, QuadrantLabel, Stability, TargetReport,
    DEFAULT_MIN_GROUP_DOCS,
};
pub use coterm::{
    baseline, coterm_score, direct_lookup, filter_documents, Baseline, CotermCounts, CotermScore,
    CountingConfig, Denominator, PolarityIndex,
};
pub use io::{read_corpus_jsonl, read_targets_json, write_scores_csv, JsonlDocuments, SCORES_CSV_HEADER};
pub use tokenize::tokenize;

/// A post with its derived token list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub year: Option<i32>,
    pub region: Option<String>,
    text: String,
    tokens: Vec<String>,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>, year: Option<i32>, region: Option<String>) -> Self {
        let text = text.into();
        let tokens = tokenize(&text);
        Self {
            id: id.into(),
            year,
            region,
            text,
            tokens,
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }
}

/// A target entity and the single-token terms used to find it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetSpec {
    pub name: String,
    surface_terms: Vec<String>,
}

impl TargetSpec {
    /// Terms are lowercased and deduplicated keeping first occurrence; each
    /// must survive tokenization as exactly itself.
    pub fn new(name: impl Into<String>, terms: impl IntoIterator<Item = impl AsRef<str>>) -> Result<Self> {
        let name = name.into();
        let mut seen = HashSet::new();
        let mut surface_terms = Vec::new();
        for term in terms {
            let term = term.as_ref().to_lowercase();
            if tokenize(&term) != [term.as_str()] {
                return Err(Error::data(format!("target {name:?}: {term:?} is not a single token")));
            }
            if seen.insert(term.clone()) {
                surface_terms.push(term);
            }
        }
        if surface_terms.is_empty() {
            return Err(Error::data(format!("target {name:?} has no surface terms")));
        }
        Ok(Self { name, surface_terms })
    }

    pub fn surface_terms(&self) -> &[String] {
        &self.surface_terms
    }

    pub fn mentioned_in(&self, doc: &Document) -> bool {
        doc.tokens().iter().any(|t| self.surface_terms.contains(t))
    }

    /// The surface terms as an exclusion set for co-term counting.
    pub fn exclusion_set(&self) -> HashSet<String> {
        self.surface_terms.iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests;
