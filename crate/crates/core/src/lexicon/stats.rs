//! Per-class counts over a lexicon.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{BinEdges, Category7, Dimension, Lexicon, WarmthSource};
use crate::scalar::{ratio, Scalar};

/// Counts and percentages of entries per seven-level category for one
/// dimension, plus the coarse neither/positive/negative shares.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassDistribution<S> {
    pub dimension: Dimension,
    pub total: usize,
    pub counts: BTreeMap<Category7, usize>,
    pub percentages: BTreeMap<Category7, S>,
    pub pct_neither: S,
    pub pct_positive: S,
    pub pct_negative: S,
}

/// Competence has no seven-level scale, so its distribution is always empty.
pub fn class_distribution<S: Scalar>(lex: &Lexicon<S>, dim: Dimension, edges: &BinEdges) -> ClassDistribution<S> {
    let mut counts: BTreeMap<Category7, usize> = Category7::ALL.iter().map(|&c| (c, 0)).collect();
    for cat in lex.iter().filter_map(|e| category(e.score(dim), dim, edges)) {
        *counts.entry(cat).or_default() += 1;
    }
    let total: usize = counts.values().sum();
    let pct = |n: usize| -> S {
        if total == 0 {
            S::zero()
        } else {
            ratio::<S>(100 * n as i64, total)
        }
    };
    let by_sign = |sign: i8| counts.iter().filter(|(c, _)| c.sign() == sign).map(|(_, &n)| n).sum::<usize>();
    ClassDistribution {
        dimension: dim,
        total,
        percentages: counts.iter().map(|(&c, &n)| (c, pct(n))).collect(),
        pct_neither: pct(by_sign(0)),
        pct_positive: pct(by_sign(1)),
        pct_negative: pct(by_sign(-1)),
        counts,
    }
}

fn category<S: Scalar>(score: Option<S>, dim: Dimension, edges: &BinEdges) -> Option<Category7> {
    if dim == Dimension::Competence {
        return None;
    }
    // entries are range-checked on construction
    score.map(|v| edges.bin(v).expect("lexicon scores lie in range"))
}

/// How many warmth entries in each class came from each facet.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SourceBreakdown {
    pub rows: BTreeMap<Category7, BTreeMap<WarmthSource, usize>>,
}

pub fn warmth_source_breakdown<S: Scalar>(lex: &Lexicon<S>, edges: &BinEdges) -> SourceBreakdown {
    let mut rows: BTreeMap<Category7, BTreeMap<WarmthSource, usize>> = Category7::ALL
        .iter()
        .map(|&c| (c, WarmthSource::ALL.iter().map(|&s| (s, 0)).collect()))
        .collect();
    for e in lex.iter() {
        if let (Some(cat), Some(src)) = (category(e.warmth(), Dimension::Warmth, edges), e.warmth_source()) {
            *rows.entry(cat).or_default().entry(src).or_default() += 1;
        }
    }
    SourceBreakdown { rows }
}
