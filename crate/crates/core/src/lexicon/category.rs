//! Seven-level categorical bins and three-level polarity classes.
//!
//! Every threshold lives here as a named constant. [`BinEdges`] and
//! [`PolarityCutoffs`] carry the configurable copies, defaulting to these.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Dimension;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Lower edge of the slight bins (and outer edge of the neutral band).
pub const SLIGHT_EDGE: f64 = 0.5;
/// Lower edge of the moderate bins.
pub const MODERATE_EDGE: f64 = 1.5;
/// Lower edge of the high bins.
pub const HIGH_EDGE: f64 = 2.5;

/// Polar cutoff for warmth, trust and sociability. Shared with the
/// moderate bin edge so that `High` polarity is exactly the union of the
/// moderate-positive and high-positive bins.
pub const POLAR_CUTOFF_WTS: f64 = MODERATE_EDGE;
/// Polar cutoff for competence scores on the [-1, 1] scale.
pub const POLAR_CUTOFF_COMPETENCE: f64 = 0.33;

/// Magnitude bound of warmth, trust and sociability scores.
pub const WTS_BOUND: f64 = 3.0;
/// Magnitude bound of competence scores.
pub const COMPETENCE_BOUND: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category7 {
    HighNeg,
    ModerateNeg,
    SlightNeg,
    Neither,
    SlightPos,
    ModeratePos,
    HighPos,
}

impl Category7 {
    /// All categories from most negative to most positive.
    pub const ALL: [Category7; 7] = [
        Category7::HighNeg,
        Category7::ModerateNeg,
        Category7::SlightNeg,
        Category7::Neither,
        Category7::SlightPos,
        Category7::ModeratePos,
        Category7::HighPos,
    ];

    /// -1 for the negative bins, 0 for `Neither`, +1 for the positive bins.
    pub fn sign(self) -> i8 {
        match self {
            Category7::HighNeg | Category7::ModerateNeg | Category7::SlightNeg => -1,
            Category7::Neither => 0,
            Category7::SlightPos | Category7::ModeratePos | Category7::HighPos => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Category7::HighNeg => "high_neg",
            Category7::ModerateNeg => "moderate_neg",
            Category7::SlightNeg => "slight_neg",
            Category7::Neither => "neither",
            Category7::SlightPos => "slight_pos",
            Category7::ModeratePos => "moderate_pos",
            Category7::HighPos => "high_pos",
        }
    }
}

impl fmt::Display for Category7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity3 {
    Low,
    Neutral,
    High,
}

impl Polarity3 {
    pub fn is_polar(self) -> bool {
        self != Polarity3::Neutral
    }
}

/// Bin edges on the positive side; the negative side mirrors them.
///
/// Positive bins are closed below (`score >= edge`), negative bins are
/// closed above (`score <= -edge`), and the neutral band is open.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BinEdges {
    pub slight: f64,
    pub moderate: f64,
    pub high: f64,
}

impl Default for BinEdges {
    fn default() -> Self {
        Self {
            slight: SLIGHT_EDGE,
            moderate: MODERATE_EDGE,
            high: HIGH_EDGE,
        }
    }
}

impl BinEdges {
    pub fn validate(&self) -> Result<()> {
        let ok = self.slight > 0.0
            && self.slight < self.moderate
            && self.moderate < self.high
            && self.high <= WTS_BOUND;
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "bin edges must satisfy 0 < slight < moderate < high <= {WTS_BOUND}: {self:?}"
            )))
        }
    }

    pub fn bin<S: Scalar>(&self, score: S) -> Result<Category7> {
        check_range(score, Dimension::Warmth)?;
        let (slight, moderate, high) = (S::lit(self.slight), S::lit(self.moderate), S::lit(self.high));
        let cat = if score >= high {
            Category7::HighPos
        } else if score >= moderate {
            Category7::ModeratePos
        } else if score >= slight {
            Category7::SlightPos
        } else if score > -slight {
            Category7::Neither
        } else if score > -moderate {
            Category7::SlightNeg
        } else if score > -high {
            Category7::ModerateNeg
        } else {
            Category7::HighNeg
        };
        Ok(cat)
    }
}

/// Cutoffs separating `Low`/`Neutral`/`High`; both ends are inclusive on the
/// polar side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PolarityCutoffs {
    /// Cutoff for warmth, trust and sociability.
    pub wts: f64,
    pub competence: f64,
}

impl Default for PolarityCutoffs {
    fn default() -> Self {
        Self {
            wts: POLAR_CUTOFF_WTS,
            competence: POLAR_CUTOFF_COMPETENCE,
        }
    }
}

impl PolarityCutoffs {
    pub fn validate(&self) -> Result<()> {
        if self.wts > 0.0 && self.wts <= WTS_BOUND && self.competence > 0.0 && self.competence <= COMPETENCE_BOUND {
            Ok(())
        } else {
            Err(Error::domain(format!("polarity cutoffs out of range: {self:?}")))
        }
    }

    pub fn cutoff(&self, dim: Dimension) -> f64 {
        match dim {
            Dimension::Competence => self.competence,
            _ => self.wts,
        }
    }

    pub fn classify<S: Scalar>(&self, score: S, dim: Dimension) -> Result<Polarity3> {
        check_range(score, dim)?;
        let cut = S::lit(self.cutoff(dim));
        Ok(if score >= cut {
            Polarity3::High
        } else if score <= -cut {
            Polarity3::Low
        } else {
            Polarity3::Neutral
        })
    }
}

/// Bins a warmth, trust or sociability score with the default edges.
pub fn bin_score<S: Scalar>(score: S) -> Result<Category7> {
    BinEdges::default().bin(score)
}

/// Classifies a score as low, neutral or high for `dim` with the default cutoffs.
pub fn polarity_class<S: Scalar>(score: S, dim: Dimension) -> Result<Polarity3> {
    PolarityCutoffs::default().classify(score, dim)
}

/// Rejects non-finite scores and scores outside the range of `dim`.
pub fn check_range<S: Scalar>(score: S, dim: Dimension) -> Result<()> {
    let bound = S::lit(dim.bound());
    if score.is_finite() && score >= -bound && score <= bound {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{dim} score {score} outside [-{b}, {b}]",
            b = dim.bound()
        )))
    }
}

impl FromStr for Category7 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category7::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::domain(format!("unknown category {s:?}")))
    }
}
