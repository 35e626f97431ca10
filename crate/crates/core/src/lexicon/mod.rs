//! Lexicon data types, categorical binning and the warmth combination rule.

mod category;
mod stats;
mod tsv;
mod warmth;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use category::{
    bin_score, check_range, polarity_class, BinEdges, Category7, Polarity3, PolarityCutoffs,
    COMPETENCE_BOUND, HIGH_EDGE, MODERATE_EDGE, POLAR_CUTOFF_COMPETENCE, POLAR_CUTOFF_WTS,
    SLIGHT_EDGE, WTS_BOUND,
};
pub use stats::{class_distribution, warmth_source_breakdown, ClassDistribution, SourceBreakdown};
pub use tsv::{parse_lexicon_tsv, write_lexicon_tsv};
pub use warmth::{build_warmth_lexicon, combine_warmth, WarmthSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Warmth,
    Competence,
    Trust,
    Sociability,
}

impl Dimension {
    pub const ALL: [Dimension; 4] = [
        Dimension::Warmth,
        Dimension::Competence,
        Dimension::Trust,
        Dimension::Sociability,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Dimension::Warmth => "warmth",
            Dimension::Competence => "competence",
            Dimension::Trust => "trust",
            Dimension::Sociability => "sociability",
        }
    }

    /// Scores for this dimension lie in `[-bound, bound]`.
    pub fn bound(self) -> f64 {
        match self {
            Dimension::Competence => COMPETENCE_BOUND,
            _ => WTS_BOUND,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "warmth" | "w" => Ok(Dimension::Warmth),
            "competence" | "c" => Ok(Dimension::Competence),
            "trust" | "t" => Ok(Dimension::Trust),
            "sociability" | "s" => Ok(Dimension::Sociability),
            other => Err(Error::domain(format!("unknown dimension {other:?}"))),
        }
    }
}

/// One term with its dimension scores.
///
/// Category labels and the warmth source are derived on construction and
/// cannot drift from the scores.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LexiconEntry<S> {
    term: String,
    sociability: Option<S>,
    trust: Option<S>,
    warmth: Option<S>,
    competence: Option<S>,
    category_s: Option<Category7>,
    category_t: Option<Category7>,
    category_w: Option<Category7>,
    warmth_source: Option<WarmthSource>,
}

impl<S: Scalar> LexiconEntry<S> {
    /// Builds an entry from its facets; warmth is derived with
    /// [`combine_warmth`] when trust or sociability is present.
    pub fn new(
        term: &str,
        sociability: Option<S>,
        trust: Option<S>,
        competence: Option<S>,
    ) -> Result<Self> {
        let combined = if trust.is_some() || sociability.is_some() {
            Some(combine_warmth(trust, sociability)?)
        } else {
            None
        };
        Self::assemble(term, sociability, trust, combined, competence)
    }

    /// Builds an entry with an explicitly stated warmth score, which must be
    /// the value the combination rule allows for the given facets.
    pub fn with_warmth(
        term: &str,
        sociability: Option<S>,
        trust: Option<S>,
        warmth: Option<S>,
        competence: Option<S>,
    ) -> Result<Self> {
        let combined = match (warmth, trust, sociability) {
            (None, None, None) => None,
            (None, ..) => Some(combine_warmth(trust, sociability)?),
            (Some(_), None, None) => {
                return Err(Error::data(format!(
                    "term {term:?}: warmth given without trust or sociability"
                )))
            }
            (Some(w), t, s) => {
                let (expected, source) = combine_warmth(t, s)?;
                let source = if w == expected {
                    source
                } else if t.is_some() && s.is_some() && t.map(S::abs) == s.map(S::abs) && Some(w) == s {
                    // opposite-sign tie stated in favour of sociability
                    WarmthSource::FromSociability
                } else {
                    return Err(Error::data(format!(
                        "term {term:?}: warmth {w} inconsistent with trust/sociability (expected {expected})"
                    )));
                };
                Some((w, source))
            }
        };
        Self::assemble(term, sociability, trust, combined, competence)
    }

    fn assemble(
        term: &str,
        sociability: Option<S>,
        trust: Option<S>,
        warmth: Option<(S, WarmthSource)>,
        competence: Option<S>,
    ) -> Result<Self> {
        let term = normalize_term(term)?;
        let bin = |score: Option<S>, dim: Dimension| -> Result<Option<Category7>> {
            score
                .map(|s| {
                    check_range(s, dim)?;
                    bin_score(s)
                })
                .transpose()
        };
        let category_s = bin(sociability, Dimension::Sociability)?;
        let category_t = bin(trust, Dimension::Trust)?;
        let category_w = bin(warmth.map(|w| w.0), Dimension::Warmth)?;
        if let Some(c) = competence {
            check_range(c, Dimension::Competence)?;
        }
        Ok(Self {
            term,
            sociability,
            trust,
            warmth: warmth.map(|w| w.0),
            competence,
            category_s,
            category_t,
            category_w,
            warmth_source: warmth.map(|w| w.1),
        })
    }

    pub fn term(&self) -> &str {
        &self.term
    }

    pub fn sociability(&self) -> Option<S> {
        self.sociability
    }

    pub fn trust(&self) -> Option<S> {
        self.trust
    }

    pub fn warmth(&self) -> Option<S> {
        self.warmth
    }

    pub fn competence(&self) -> Option<S> {
        self.competence
    }

    pub fn warmth_source(&self) -> Option<WarmthSource> {
        self.warmth_source
    }

    pub fn score(&self, dim: Dimension) -> Option<S> {
        match dim {
            Dimension::Warmth => self.warmth,
            Dimension::Competence => self.competence,
            Dimension::Trust => self.trust,
            Dimension::Sociability => self.sociability,
        }
    }

    /// Seven-level label; always `None` for competence.
    pub fn category(&self, dim: Dimension) -> Option<Category7> {
        match dim {
            Dimension::Warmth => self.category_w,
            Dimension::Trust => self.category_t,
            Dimension::Sociability => self.category_s,
            Dimension::Competence => None,
        }
    }
}

fn normalize_term(term: &str) -> Result<String> {
    if term.is_empty() {
        return Err(Error::data("empty term"));
    }
    if term.contains(['\t', '\n', '\r']) {
        return Err(Error::data(format!("term {term:?} contains a tab or line break")));
    }
    Ok(term.to_lowercase())
}

/// An immutable term-keyed collection of [`LexiconEntry`] values.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon<S> {
    entries: BTreeMap<String, LexiconEntry<S>>,
    provenance: String,
}

impl<S: Scalar> Lexicon<S> {
    /// Fails with a data error on a repeated term.
    pub fn from_entries(
        entries: impl IntoIterator<Item = LexiconEntry<S>>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for entry in entries {
            if let Some(prev) = map.insert(entry.term.clone(), entry) {
                return Err(Error::data(format!("duplicate term {:?}", prev.term)));
            }
        }
        let provenance = provenance.into();
        if provenance.contains(['\n', '\r']) {
            return Err(Error::data("provenance note must be a single line"));
        }
        Ok(Self {
            entries: map,
            provenance,
        })
    }

    pub fn empty(provenance: impl Into<String>) -> Self {
        Self::from_entries([], provenance).expect("empty lexicon is valid")
    }

    pub fn get(&self, term: &str) -> Option<&LexiconEntry<S>> {
        self.entries.get(term)
    }

    pub fn contains(&self, term: &str) -> bool {
        self.entries.contains_key(term)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic term order.
    pub fn iter(&self) -> impl Iterator<Item = &LexiconEntry<S>> {
        self.entries.values()
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// True when at least one entry carries a score for `dim`.
    pub fn has_dimension(&self, dim: Dimension) -> bool {
        self.iter().any(|e| e.score(dim).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_derives_categories() {
        let e = LexiconEntry::new("Wedding", Some(2.88), Some(2.22), None).unwrap();
        assert_eq!(e.term(), "wedding");
        assert_eq!(e.warmth(), Some(2.88));
        assert_eq!(e.category(Dimension::Warmth), Some(Category7::HighPos));
        assert_eq!(e.category(Dimension::Trust), Some(Category7::ModeratePos));
        assert_eq!(e.category(Dimension::Competence), None);
        assert_eq!(e.warmth_source(), Some(WarmthSource::FromSociability));
    }

    #[test]
    fn competence_only_entry_has_no_warmth() {
        let e = LexiconEntry::new("power", None, None, Some(0.9)).unwrap();
        assert_eq!(e.warmth(), None);
        assert_eq!(e.category(Dimension::Warmth), None);
    }

    #[test]
    fn entry_rejects_bad_terms_and_ranges() {
        assert!(LexiconEntry::<f64>::new("", Some(1.0), None, None).is_err());
        assert!(LexiconEntry::<f64>::new("a\tb", Some(1.0), None, None).is_err());
        assert!(LexiconEntry::<f64>::new("a\nb", Some(1.0), None, None).is_err());
        assert!(matches!(
            LexiconEntry::<f64>::new("x", Some(3.5), None, None),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            LexiconEntry::<f64>::new("x", None, None, Some(1.2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn stated_warmth_must_follow_the_rule() {
        assert!(LexiconEntry::with_warmth("x", Some(1.0), Some(2.0), Some(2.0), None).is_ok());
        assert!(LexiconEntry::with_warmth("x", Some(1.0), Some(2.0), Some(1.5), None).is_err());
        assert!(LexiconEntry::with_warmth("x", None, None, Some(1.5), None).is_err());
        let tie = LexiconEntry::with_warmth("x", Some(-1.0), Some(1.0), Some(-1.0), None).unwrap();
        assert_eq!(tie.warmth_source(), Some(WarmthSource::FromSociability));
    }

    #[test]
    fn duplicate_terms_rejected() {
        let a = LexiconEntry::new("a", Some(1.0), None, None).unwrap();
        let b = LexiconEntry::new("A", Some(2.0), None, None).unwrap();
        assert!(matches!(Lexicon::from_entries([a, b], ""), Err(Error::Data(_))));
    }

    #[test]
    fn lookup_returns_exact_entry() {
        let a = LexiconEntry::new("a", Some(1.0), None, None).unwrap();
        let b = LexiconEntry::new("b", None, Some(-2.0), None).unwrap();
        let lex = Lexicon::from_entries([b.clone(), a.clone()], "test").unwrap();
        assert_eq!(lex.get("a"), Some(&a));
        assert_eq!(lex.get("b"), Some(&b));
        assert_eq!(lex.get("c"), None);
        assert_eq!(lex.terms().collect::<Vec<_>>(), ["a", "b"]);
    }

    #[test]
    fn dimension_parsing() {
        assert_eq!("Trust".parse::<Dimension>().unwrap(), Dimension::Trust);
        assert_eq!("c".parse::<Dimension>().unwrap(), Dimension::Competence);
        assert!("valence".parse::<Dimension>().is_err());
    }
}
