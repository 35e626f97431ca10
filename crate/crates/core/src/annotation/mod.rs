//! From raw annotator responses to a single-dimension lexicon.
//!
//! The pipeline is: per-annotator gold accuracy ([`compute_annotator_stats`]),
//! annotator-atomic filtering ([`filter_annotations`]), then per-term mean
//! aggregation ([`aggregate_term`]). [`build_dimension_lexicon`] composes the
//! three.

mod csv_io;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{Dimension, Lexicon, LexiconEntry};
use crate::scalar::{ratio, Scalar};

pub use csv_io::{parse_annotations_csv, write_annotations_csv};

/// Lowest and highest point on the response scale.
pub const RESPONSE_MIN: i8 = -3;
pub const RESPONSE_MAX: i8 = 3;

/// Default half-width of the band around a gold answer that counts as correct.
pub const DEFAULT_GOLD_TOLERANCE: u8 = 1;
/// Annotators whose gold accuracy falls below this are discarded.
pub const DEFAULT_ACCURACY_FLOOR: f64 = 0.8;
/// Default open exclusion band on candidate valence.
pub const DEFAULT_VALENCE_BAND: (f64, f64) = (-0.2, 0.2);

#[derive(Debug, Clone, PartialEq)]
pub struct TermCandidate<S> {
    pub term: String,
    pub valence: S,
}

impl<S: Scalar> TermCandidate<S> {
    pub fn new(term: impl Into<String>, valence: S) -> Result<Self> {
        if !valence.is_finite() || valence.abs() > S::one() {
            return Err(Error::domain(format!("valence {valence} outside [-1, 1]")));
        }
        Ok(Self {
            term: term.into(),
            valence,
        })
    }
}

/// Keeps candidates whose valence is outside the open band `(lo, hi)`.
pub fn select_terms<S: Scalar>(candidates: &[TermCandidate<S>], lo: S, hi: S) -> Vec<String> {
    candidates
        .iter()
        .filter(|c| c.valence <= lo || c.valence >= hi)
        .map(|c| c.term.clone())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoldKind {
    NotGold,
    /// Gold question that shows immediate feedback on a wrong answer.
    PopupGold,
    NoPopupGold,
}

impl GoldKind {
    pub fn is_gold(self) -> bool {
        self != GoldKind::NotGold
    }
}

/// One annotator's response to one term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnotationRecord {
    annotator_id: String,
    term: String,
    dimension: Dimension,
    response: i8,
    gold_kind: GoldKind,
    gold_answer: Option<i8>,
}

fn check_response(value: i8, what: &str) -> Result<i8> {
    if (RESPONSE_MIN..=RESPONSE_MAX).contains(&value) {
        Ok(value)
    } else {
        Err(Error::domain(format!("{what} {value} outside [{RESPONSE_MIN}, {RESPONSE_MAX}]")))
    }
}

impl AnnotationRecord {
    pub fn new(
        annotator_id: impl Into<String>,
        term: &str,
        dimension: Dimension,
        response: i8,
        gold_kind: GoldKind,
        gold_answer: Option<i8>,
    ) -> Result<Self> {
        if !matches!(dimension, Dimension::Trust | Dimension::Sociability) {
            return Err(Error::domain(format!("annotations cover trust or sociability, not {dimension}")));
        }
        let term = term.trim().to_lowercase();
        if term.is_empty() {
            return Err(Error::data("empty term"));
        }
        check_response(response, "response")?;
        match (gold_kind.is_gold(), gold_answer) {
            (true, Some(g)) => {
                check_response(g, "gold answer")?;
            }
            (false, None) => {}
            (true, None) => return Err(Error::data(format!("gold record for {term:?} lacks a gold answer"))),
            (false, Some(_)) => return Err(Error::data(format!("non-gold record for {term:?} has a gold answer"))),
        }
        Ok(Self {
            annotator_id: annotator_id.into(),
            term,
            dimension,
            response,
            gold_kind,
            gold_answer,
        })
    }

    /// Shorthand for a non-gold record.
    pub fn response(annotator_id: impl Into<String>, term: &str, dimension: Dimension, response: i8) -> Result<Self> {
        Self::new(annotator_id, term, dimension, response, GoldKind::NotGold, None)
    }

    pub fn annotator_id(&self) -> &str {
        &self.annotator_id
    }

    pub fn term(&self) -> &str {
        &self.term
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn value(&self) -> i8 {
        self.response
    }

    pub fn gold_kind(&self) -> GoldKind {
        self.gold_kind
    }

    pub fn gold_answer(&self) -> Option<i8> {
        self.gold_answer
    }
}

/// A gold response is correct when it lies within `tolerance` of the answer.
pub fn gold_correct(response: i8, gold_answer: i8, tolerance: u8) -> bool {
    (i16::from(response) - i16::from(gold_answer)).unsigned_abs() <= u16::from(tolerance)
}

/// Quality-control knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QcConfig {
    pub gold_tolerance: u8,
    /// Inclusive: an annotator exactly at the floor is retained.
    pub accuracy_floor: f64,
    /// Aggregate gold records alongside ordinary ones.
    pub include_gold: bool,
}

impl Default for QcConfig {
    fn default() -> Self {
        Self {
            gold_tolerance: DEFAULT_GOLD_TOLERANCE,
            accuracy_floor: DEFAULT_ACCURACY_FLOOR,
            include_gold: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GoldTally {
    pub seen: usize,
    pub correct: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnotatorStats<S> {
    pub annotator_id: String,
    pub gold_seen: usize,
    pub gold_correct: usize,
    /// `None` when the annotator saw no gold questions.
    pub accuracy: Option<S>,
    pub retained: bool,
    pub popup: GoldTally,
    pub no_popup: GoldTally,
}

/// Gold accuracy per annotator, pooling popup and no-popup gold.
pub fn compute_annotator_stats<S: Scalar>(
    records: &[AnnotationRecord],
    qc: &QcConfig,
) -> BTreeMap<String, AnnotatorStats<S>> {
    let mut tallies: BTreeMap<&str, (GoldTally, GoldTally)> = BTreeMap::new();
    for r in records {
        let (popup, no_popup) = tallies.entry(&r.annotator_id).or_default();
        let tally = match r.gold_kind {
            GoldKind::NotGold => continue,
            GoldKind::PopupGold => popup,
            GoldKind::NoPopupGold => no_popup,
        };
        tally.seen += 1;
        if gold_correct(r.response, r.gold_answer.expect("gold record has an answer"), qc.gold_tolerance) {
            tally.correct += 1;
        }
    }
    let floor = S::lit(qc.accuracy_floor);
    tallies
        .into_iter()
        .map(|(id, (popup, no_popup))| {
            let seen = popup.seen + no_popup.seen;
            let correct = popup.correct + no_popup.correct;
            let accuracy = (seen > 0).then(|| ratio::<S>(correct as i64, seen));
            let stats = AnnotatorStats {
                annotator_id: id.to_string(),
                gold_seen: seen,
                gold_correct: correct,
                accuracy,
                retained: accuracy.is_none_or(|a| a >= floor),
                popup,
                no_popup,
            };
            (id.to_string(), stats)
        })
        .collect()
}

/// Records of retained annotators; gold records are dropped unless
/// `include_gold` is set. Annotators missing from `stats` are dropped.
pub fn filter_annotations<S>(
    records: &[AnnotationRecord],
    stats: &BTreeMap<String, AnnotatorStats<S>>,
    include_gold: bool,
) -> Vec<AnnotationRecord> {
    records
        .iter()
        .filter(|r| include_gold || !r.gold_kind.is_gold())
        .filter(|r| stats.get(&r.annotator_id).is_some_and(|s| s.retained))
        .cloned()
        .collect()
}

/// Mean of integer responses, rounded once.
pub fn aggregate_term<S: Scalar>(responses: &[i8]) -> Result<S> {
    if responses.is_empty() {
        return Err(Error::domain("cannot aggregate an empty response list"));
    }
    let mut sum = 0i64;
    for &r in responses {
        sum += i64::from(check_response(r, "response")?);
    }
    Ok(ratio(sum, responses.len()))
}

/// Groups responses by term, in term order.
pub fn responses_by_term(records: &[AnnotationRecord]) -> BTreeMap<String, Vec<i8>> {
    let mut map: BTreeMap<String, Vec<i8>> = BTreeMap::new();
    for r in records {
        map.entry(r.term.clone()).or_default().push(r.response);
    }
    map
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregationStats<S> {
    pub dimension: Dimension,
    pub n_terms: usize,
    pub n_annotations: usize,
    pub mean_annotations_per_term: S,
}

#[derive(Debug, Clone)]
pub struct DimensionBuild<S> {
    pub lexicon: Lexicon<S>,
    pub aggregation: AggregationStats<S>,
    pub annotators: BTreeMap<String, AnnotatorStats<S>>,
}

/// Quality control, filtering and aggregation for one dimension.
pub fn build_dimension_lexicon<S: Scalar>(
    records: &[AnnotationRecord],
    dim: Dimension,
    qc: &QcConfig,
) -> Result<DimensionBuild<S>> {
    if let Some(r) = records.iter().find(|r| r.dimension != dim) {
        return Err(Error::data(format!(
            "record for {:?} is {}, expected {dim}",
            r.term, r.dimension
        )));
    }
    let annotators = compute_annotator_stats::<S>(records, qc);
    let kept = filter_annotations(records, &annotators, qc.include_gold);
    if kept.is_empty() {
        return Err(Error::data("no surviving annotations"));
    }
    let grouped = responses_by_term(&kept);
    let entries = grouped
        .iter()
        .map(|(term, responses)| {
            let mean = aggregate_term::<S>(responses)?;
            match dim {
                Dimension::Trust => LexiconEntry::new(term, None, Some(mean), None),
                _ => LexiconEntry::new(term, Some(mean), None, None),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let aggregation = AggregationStats {
        dimension: dim,
        n_terms: grouped.len(),
        n_annotations: kept.len(),
        mean_annotations_per_term: ratio(kept.len() as i64, grouped.len()),
    };
    let lexicon = Lexicon::from_entries(entries, format!("{dim} annotations"))?;
    Ok(DimensionBuild {
        lexicon,
        aggregation,
        annotators,
    })
}
