use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use super::{Document, TargetSpec};
use crate::lexicon::{Dimension, Lexicon, Polarity3, PolarityCutoffs};
use crate::scalar::{ratio, Scalar};
use crate::error::Result;

/// What the high-minus-low difference is divided by.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Denominator {
    /// Every non-excluded token.
    #[default]
    AllTokens,
    /// Only tokens with a lexicon score for the dimension.
    LexiconCovered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CountingConfig {
    pub denominator: Denominator,
    /// Exclude the target's own surface terms from its co-term counts.
    pub exclude_target: bool,
    pub cutoffs: PolarityCutoffs,
}

impl Default for CountingConfig {
    fn default() -> Self {
        Self {
            denominator: Denominator::AllTokens,
            exclude_target: true,
            cutoffs: PolarityCutoffs::default(),
        }
    }
}

/// Polarity of every lexicon term that has a score for one dimension.
#[derive(Debug, Clone)]
pub struct PolarityIndex<'a> {
    dimension: Dimension,
    classes: HashMap<&'a str, Polarity3>,
}

impl<'a> PolarityIndex<'a> {
    pub fn new<S: Scalar>(lex: &'a Lexicon<S>, dim: Dimension, cutoffs: &PolarityCutoffs) -> Result<Self> {
        let mut classes = HashMap::with_capacity(lex.len());
        for e in lex.iter() {
            if let Some(score) = e.score(dim) {
                classes.insert(e.term(), cutoffs.classify(score, dim)?);
            }
        }
        Ok(Self { dimension: dim, classes })
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn get(&self, token: &str) -> Option<Polarity3> {
        self.classes.get(token).copied()
    }

    /// Counts over one document.
    pub fn count_document(&self, doc: &Document, exclude: &HashSet<String>, denominator: Denominator) -> CotermCounts {
        let mut c = CotermCounts { n_docs: 1, ..CotermCounts::default() };
        for tok in doc.tokens() {
            if exclude.contains(tok.as_str()) {
                continue;
            }
            let class = self.get(tok);
            match class {
                Some(Polarity3::High) => c.n_high += 1,
                Some(Polarity3::Low) => c.n_low += 1,
                _ => {}
            }
            if denominator == Denominator::AllTokens || class.is_some() {
                c.n_tokens += 1;
            }
        }
        c
    }

    pub fn count<'d>(
        &self,
        docs: impl IntoIterator<Item = &'d Document>,
        exclude: &HashSet<String>,
        denominator: Denominator,
    ) -> CotermCounts {
        docs.into_iter()
            .map(|d| self.count_document(d, exclude, denominator))
            .fold(CotermCounts::default(), Add::add)
    }
}

/// Additive token tallies; merging two corpora adds their counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CotermCounts {
    pub n_docs: usize,
    pub n_tokens: usize,
    pub n_high: usize,
    pub n_low: usize,
}

impl Add for CotermCounts {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            n_docs: self.n_docs + o.n_docs,
            n_tokens: self.n_tokens + o.n_tokens,
            n_high: self.n_high + o.n_high,
            n_low: self.n_low + o.n_low,
        }
    }
}

impl AddAssign for CotermCounts {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl CotermCounts {
    pub fn score<S: Scalar>(&self, target: &str, dimension: Dimension) -> CotermScore<S> {
        let degenerate = self.n_tokens == 0;
        let score = if degenerate {
            S::zero()
        } else {
            ratio(self.n_high as i64 - self.n_low as i64, self.n_tokens)
        };
        CotermScore {
            target: target.to_string(),
            dimension,
            score,
            n_docs: self.n_docs,
            n_tokens: self.n_tokens,
            n_high: self.n_high,
            n_low: self.n_low,
            degenerate,
        }
    }
}

/// High-minus-low share of co-occurring tokens for one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CotermScore<S> {
    pub target: String,
    pub dimension: Dimension,
    pub score: S,
    pub n_docs: usize,
    pub n_tokens: usize,
    pub n_high: usize,
    pub n_low: usize,
    /// No counted tokens; `score` is 0 by convention.
    pub degenerate: bool,
}

/// Documents mentioning the target as a whole token, in input order.
pub fn filter_documents<'d, 't, I>(corpus: I, target: &'t TargetSpec) -> impl Iterator<Item = &'d Document> + 't
where
    I: IntoIterator<Item = &'d Document>,
    I::IntoIter: 't,
{
    corpus.into_iter().filter(move |d| target.mentioned_in(d))
}

/// For each dimension, the score of the first surface term present in the
/// lexicon with a score for that dimension.
pub fn direct_lookup<S: Scalar>(lex: &Lexicon<S>, target: &TargetSpec) -> BTreeMap<Dimension, Option<S>> {
    Dimension::ALL
        .into_iter()
        .map(|dim| {
            let score = target
                .surface_terms()
                .iter()
                .find_map(|t| lex.get(t).and_then(|e| e.score(dim)));
            (dim, score)
        })
        .collect()
}

/// Co-term score of `docs` (already filtered to the target) for `dim`.
pub fn coterm_score<'d, S: Scalar>(
    target: &str,
    docs: impl IntoIterator<Item = &'d Document>,
    lex: &Lexicon<S>,
    dim: Dimension,
    exclude: &HashSet<String>,
    cfg: &CountingConfig,
) -> Result<CotermScore<S>> {
    let index = PolarityIndex::new(lex, dim, &cfg.cutoffs)?;
    Ok(index.count(docs, exclude, cfg.denominator).score(target, dim))
}

/// Corpus-wide co-term score, the reference point for quadrants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Baseline<S> {
    pub dimension: Dimension,
    pub score: S,
    pub n_docs: usize,
    pub n_tokens: usize,
    pub n_high: usize,
    pub n_low: usize,
    pub degenerate: bool,
}

impl<S: Scalar> From<CotermScore<S>> for Baseline<S> {
    fn from(c: CotermScore<S>) -> Self {
        Self {
            dimension: c.dimension,
            score: c.score,
            n_docs: c.n_docs,
            n_tokens: c.n_tokens,
            n_high: c.n_high,
            n_low: c.n_low,
            degenerate: c.degenerate,
        }
    }
}

pub fn baseline<'d, S: Scalar>(
    corpus: impl IntoIterator<Item = &'d Document>,
    lex: &Lexicon<S>,
    dim: Dimension,
    cfg: &CountingConfig,
) -> Result<Baseline<S>> {
    coterm_score("", corpus, lex, dim, &HashSet::new(), cfg).map(Baseline::from)
}
