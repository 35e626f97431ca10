//! Target-level analyses built on co-term counts.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::coterm::{direct_lookup, filter_documents, Baseline, CotermCounts, CotermScore, CountingConfig, PolarityIndex};
use super::{Document, TargetSpec};
use crate::error::{Error, Result};
use crate::lexicon::{Dimension, Lexicon};
use crate::scalar::Scalar;

/// Groups with fewer target documents than this are flagged low-confidence.
pub const DEFAULT_MIN_GROUP_DOCS: usize = 50;

/// Region of the warmth-competence plane relative to a baseline origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuadrantLabel {
    #[serde(rename = "HighW_HighC")]
    HighWHighC,
    #[serde(rename = "HighW_LowC")]
    HighWLowC,
    #[serde(rename = "LowW_HighC")]
    LowWHighC,
    #[serde(rename = "LowW_LowC")]
    LowWLowC,
}

impl QuadrantLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            QuadrantLabel::HighWHighC => "HighW_HighC",
            QuadrantLabel::HighWLowC => "HighW_LowC",
            QuadrantLabel::LowWHighC => "LowW_HighC",
            QuadrantLabel::LowWLowC => "LowW_LowC",
        }
    }
}

impl fmt::Display for QuadrantLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Equality with a baseline counts as high.
pub fn quadrant<S: Scalar>(w: S, c: S, base_w: S, base_c: S) -> QuadrantLabel {
    match (w >= base_w, c >= base_c) {
        (true, true) => QuadrantLabel::HighWHighC,
        (true, false) => QuadrantLabel::HighWLowC,
        (false, true) => QuadrantLabel::LowWHighC,
        (false, false) => QuadrantLabel::LowWLowC,
    }
}

/// Corpus-wide baselines per dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Baselines<S> {
    pub by_dimension: BTreeMap<Dimension, Baseline<S>>,
}

impl<S: Scalar> Baselines<S> {
    pub fn get(&self, dim: Dimension) -> Option<&Baseline<S>> {
        self.by_dimension.get(&dim)
    }
}

pub fn baselines<S: Scalar>(
    corpus: &[Document],
    lex: &Lexicon<S>,
    dims: &[Dimension],
    cfg: &CountingConfig,
) -> Result<Baselines<S>> {
    let none = HashSet::new();
    let mut by_dimension = BTreeMap::new();
    for &dim in dims {
        let index = PolarityIndex::new(lex, dim, &cfg.cutoffs)?;
        let score: CotermScore<S> = index.count(corpus, &none, cfg.denominator).score("", dim);
        by_dimension.insert(dim, Baseline::from(score));
    }
    Ok(Baselines { by_dimension })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKey {
    Year,
    Region,
}

impl FromStr for GroupKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "year" => Ok(GroupKey::Year),
            "region" => Ok(GroupKey::Region),
            other => Err(Error::domain(format!("unknown group key {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum GroupValue {
    Year(i32),
    Region(String),
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Year(y) => write!(f, "{y}"),
            GroupValue::Region(r) => f.write_str(r),
        }
    }
}

impl GroupKey {
    pub fn value_of(self, doc: &Document) -> Option<GroupValue> {
        match self {
            GroupKey::Year => doc.year.map(GroupValue::Year),
            GroupKey::Region => doc.region.clone().map(GroupValue::Region),
        }
    }
}

/// Co-term scores of a target within one group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupRow<S> {
    pub group: GroupValue,
    pub n_docs: usize,
    pub low_confidence: bool,
    pub scores: BTreeMap<Dimension, CotermScore<S>>,
}

fn group_rows<S: Scalar>(
    docs: &[&Document],
    indexes: &[PolarityIndex<'_>],
    target: &str,
    exclude: &HashSet<String>,
    key: GroupKey,
    cfg: &CountingConfig,
    min_docs: usize,
) -> Vec<GroupRow<S>> {
    let mut groups: BTreeMap<GroupValue, Vec<&Document>> = BTreeMap::new();
    for &doc in docs {
        if let Some(g) = key.value_of(doc) {
            groups.entry(g).or_default().push(doc);
        }
    }
    groups
        .into_iter()
        .map(|(group, members)| {
            let scores = indexes
                .iter()
                .map(|idx| {
                    let counts = idx.count(members.iter().copied(), exclude, cfg.denominator);
                    (idx.dimension(), counts.score(target, idx.dimension()))
                })
                .collect();
            GroupRow {
                group,
                n_docs: members.len(),
                low_confidence: members.len() < min_docs,
                scores,
            }
        })
        .collect()
}

fn spread<S: Scalar>(scores: impl Iterator<Item = S>) -> S {
    let (lo, hi) = scores.fold((S::infinity(), S::neg_infinity()), |(lo, hi), s| (lo.min(s), hi.max(s)));
    if lo > hi {
        S::zero()
    } else {
        hi - lo
    }
}

fn exclusion(target: &TargetSpec, cfg: &CountingConfig) -> HashSet<String> {
    if cfg.exclude_target {
        target.exclusion_set()
    } else {
        HashSet::new()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityRow<S> {
    pub group: GroupValue,
    pub low_confidence: bool,
    pub score: CotermScore<S>,
}

/// Per-group co-term scores of one target for one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stability<S> {
    pub dimension: Dimension,
    pub rows: Vec<StabilityRow<S>>,
    /// Largest minus smallest group score.
    pub spread: S,
}

pub fn stability_by_group<S: Scalar>(
    corpus: &[Document],
    lex: &Lexicon<S>,
    target: &TargetSpec,
    key: GroupKey,
    dim: Dimension,
    cfg: &CountingConfig,
    min_docs: usize,
) -> Result<Stability<S>> {
    let docs: Vec<&Document> = filter_documents(corpus, target).collect();
    let index = PolarityIndex::new(lex, dim, &cfg.cutoffs)?;
    let rows = group_rows::<S>(&docs, &[index], &target.name, &exclusion(target, cfg), key, cfg, min_docs);
    if rows.is_empty() {
        return Err(Error::data(format!(
            "no documents mentioning {:?} carry a {key:?} value",
            target.name
        )));
    }
    let rows: Vec<StabilityRow<S>> = rows
        .into_iter()
        .map(|mut r| StabilityRow {
            score: r.scores.remove(&dim).expect("row scored for dim"),
            group: r.group,
            low_confidence: r.low_confidence,
        })
        .collect();
    let spread = spread(rows.iter().map(|r| r.score.score));
    Ok(Stability { dimension: dim, rows, spread })
}

/// Direct and co-term view of one target.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TargetReport<S> {
    pub target: String,
    pub surface_terms: Vec<String>,
    pub direct: BTreeMap<Dimension, Option<S>>,
    pub coterm: BTreeMap<Dimension, CotermScore<S>>,
    /// Quadrant of the co-term (W, C) point against the corpus baselines;
    /// absent when either score or baseline is missing or degenerate.
    pub quadrant: Option<QuadrantLabel>,
    pub by_group: Vec<GroupRow<S>>,
    pub group_spread: BTreeMap<Dimension, S>,
}

pub fn analyze_target<S: Scalar>(
    corpus: &[Document],
    lex: &Lexicon<S>,
    target: &TargetSpec,
    dims: &[Dimension],
    baselines: Option<&Baselines<S>>,
    cfg: &CountingConfig,
    group_by: Option<(GroupKey, usize)>,
) -> Result<TargetReport<S>> {
    let docs: Vec<&Document> = filter_documents(corpus, target).collect();
    let exclude = exclusion(target, cfg);
    let indexes = dims
        .iter()
        .map(|&d| PolarityIndex::new(lex, d, &cfg.cutoffs))
        .collect::<Result<Vec<_>>>()?;

    let coterm: BTreeMap<Dimension, CotermScore<S>> = indexes
        .iter()
        .map(|idx| {
            let counts: CotermCounts = idx.count(docs.iter().copied(), &exclude, cfg.denominator);
            (idx.dimension(), counts.score(&target.name, idx.dimension()))
        })
        .collect();

    let usable = |dim: Dimension| -> Option<(S, S)> {
        let c = coterm.get(&dim).filter(|c| !c.degenerate)?;
        let b = baselines?.get(dim).filter(|b| !b.degenerate)?;
        Some((c.score, b.score))
    };
    let quadrant = match (usable(Dimension::Warmth), usable(Dimension::Competence)) {
        (Some((w, bw)), Some((c, bc))) => Some(quadrant(w, c, bw, bc)),
        _ => None,
    };

    let (by_group, group_spread) = match group_by {
        Some((key, min_docs)) => {
            let rows = group_rows::<S>(&docs, &indexes, &target.name, &exclude, key, cfg, min_docs);
            let spreads = dims
                .iter()
                .filter(|_| !rows.is_empty())
                .map(|&d| (d, spread(rows.iter().map(|r| r.scores[&d].score))))
                .collect();
            (rows, spreads)
        }
        None => (Vec::new(), BTreeMap::new()),
    };

    Ok(TargetReport {
        target: target.name.clone(),
        surface_terms: target.surface_terms().to_vec(),
        direct: direct_lookup(lex, target),
        coterm,
        quadrant,
        by_group,
        group_spread,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InGroupCell<S> {
    pub source_region: String,
    pub score: CotermScore<S>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionBaseline<S> {
    pub region: String,
    pub baseline: Baseline<S>,
}

/// Scores of two targets as talked about from two source regions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InGroupMatrix<S> {
    pub regions: [String; 2],
    pub targets: [String; 2],
    /// Region-major, then target, then dimension.
    pub cells: Vec<InGroupCell<S>>,
    pub baselines: Vec<RegionBaseline<S>>,
}

impl<S: Scalar> InGroupMatrix<S> {
    pub fn cell(&self, region: &str, target: &str, dim: Dimension) -> Option<&CotermScore<S>> {
        self.cells
            .iter()
            .find(|c| c.source_region == region && c.score.target == target && c.score.dimension == dim)
            .map(|c| &c.score)
    }
}

pub fn ingroup_outgroup<S: Scalar>(
    corpus: &[Document],
    lex: &Lexicon<S>,
    regions: [&str; 2],
    targets: [&TargetSpec; 2],
    dims: &[Dimension],
    cfg: &CountingConfig,
) -> Result<InGroupMatrix<S>> {
    let indexes = dims
        .iter()
        .map(|&d| PolarityIndex::new(lex, d, &cfg.cutoffs))
        .collect::<Result<Vec<_>>>()?;
    let none = HashSet::new();
    let mut cells = Vec::new();
    let mut region_baselines = Vec::new();
    for region in regions {
        let local: Vec<&Document> = corpus.iter().filter(|d| d.region.as_deref() == Some(region)).collect();
        for idx in &indexes {
            let counts = idx.count(local.iter().copied(), &none, cfg.denominator);
            region_baselines.push(RegionBaseline {
                region: region.to_string(),
                baseline: Baseline::from(counts.score::<S>("", idx.dimension())),
            });
        }
        for target in targets {
            let exclude = exclusion(target, cfg);
            let mentions: Vec<&Document> = filter_documents(local.iter().copied(), target).collect();
            for idx in &indexes {
                let counts = idx.count(mentions.iter().copied(), &exclude, cfg.denominator);
                cells.push(InGroupCell {
                    source_region: region.to_string(),
                    score: counts.score(&target.name, idx.dimension()),
                });
            }
        }
    }
    Ok(InGroupMatrix {
        regions: regions.map(str::to_string),
        targets: targets.map(|t| t.name.clone()),
        cells,
        baselines: region_baselines,
    })
}
