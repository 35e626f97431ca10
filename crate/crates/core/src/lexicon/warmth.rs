use serde::{Deserialize, Serialize};

use super::{Dimension, Lexicon, LexiconEntry};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which facet supplied a warmth score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WarmthSource {
    FromTrust,
    FromSociability,
    /// Trust and sociability scores are identical.
    Equal,
}

impl WarmthSource {
    pub const ALL: [WarmthSource; 3] = [
        WarmthSource::FromTrust,
        WarmthSource::FromSociability,
        WarmthSource::Equal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WarmthSource::FromTrust => "from_trust",
            WarmthSource::FromSociability => "from_sociability",
            WarmthSource::Equal => "equal",
        }
    }
}

/// Warmth is whichever facet score has the larger magnitude.
///
/// Opposite-sign scores of equal magnitude resolve to the trust score.
pub fn combine_warmth<S: Scalar>(trust: Option<S>, sociability: Option<S>) -> Result<(S, WarmthSource)> {
    match (trust, sociability) {
        (None, None) => Err(Error::domain("warmth needs a trust or sociability score")),
        (Some(t), None) => Ok((t, WarmthSource::FromTrust)),
        (None, Some(s)) => Ok((s, WarmthSource::FromSociability)),
        (Some(t), Some(s)) => {
            if t == s {
                Ok((t, WarmthSource::Equal))
            } else if s.abs() > t.abs() {
                Ok((s, WarmthSource::FromSociability))
            } else {
                Ok((t, WarmthSource::FromTrust))
            }
        }
    }
}

/// Unions a trust lexicon and a sociability lexicon into one warmth lexicon,
/// copying competence scores from `competence` where the term exists there.
pub fn build_warmth_lexicon<S: Scalar>(
    trust: &Lexicon<S>,
    sociability: &Lexicon<S>,
    competence: Option<&Lexicon<S>>,
) -> Result<Lexicon<S>> {
    let facet = |lex: &Lexicon<S>, term: &str, dim: Dimension| -> Result<Option<S>> {
        match lex.get(term) {
            None => Ok(None),
            Some(e) => e.score(dim).map(Some).ok_or_else(|| {
                Error::data(format!("{dim} lexicon entry {term:?} has no {dim} score"))
            }),
        }
    };

    let mut terms: Vec<&str> = trust.terms().chain(sociability.terms()).collect();
    terms.sort_unstable();
    terms.dedup();

    let entries = terms
        .into_iter()
        .map(|term| {
            let t = facet(trust, term, Dimension::Trust)?;
            let s = facet(sociability, term, Dimension::Sociability)?;
            let c = competence.and_then(|lex| lex.get(term)).and_then(|e| e.competence());
            LexiconEntry::new(term, s, t, c)
        })
        .collect::<Result<Vec<_>>>()?;

    let provenance = format!(
        "warmth union of trust[{}] and sociability[{}]{}",
        trust.provenance(),
        sociability.provenance(),
        competence
            .map(|c| format!(" with competence[{}]", c.provenance()))
            .unwrap_or_default()
    );
    Lexicon::from_entries(entries, provenance.replace(['\n', '\r'], " "))
}
