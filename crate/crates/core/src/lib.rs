//! Warmth, competence, trust and sociability (WCTS) lexicons.
//!
//! The crate covers the whole path from raw crowd annotations to corpus-level
//! analysis:
//!
//! * [`annotation`]: gold-question quality control and mean aggregation into
//!   a single-dimension lexicon.
//! * [`lexicon`]: entries, seven-level bins, polarity classes, the warmth
//!   combination rule and TSV I/O.
//! * [`reliability`]: Pearson/Spearman correlation and split-half reliability.
//! * [`corpus`]: tokenization, direct lookup and co-term scoring of targets,
//!   baselines, quadrants and per-group stability.
//! * [`aoa`]: per-age shares of high, low and neutral words.
//!
//! Scores are generic over [`Scalar`] (`f32` or `f64`); the aliases below fix
//! the common `f64` instantiation.

pub mod annotation;
pub mod aoa;
pub mod corpus;
pub mod error;
pub mod lexicon;
pub mod reliability;
pub mod scalar;

pub use error::{Error, Result};
pub use lexicon::{Category7, Dimension, Polarity3, WarmthSource};
pub use scalar::Scalar;

pub type Lexicon64 = lexicon::Lexicon<f64>;
pub type Lexicon32 = lexicon::Lexicon<f32>;
pub type LexiconEntry64 = lexicon::LexiconEntry<f64>;
pub type LexiconEntry32 = lexicon::LexiconEntry<f32>;
pub type ReliabilityReport64 = reliability::ReliabilityReport<f64>;
pub type CotermScore64 = corpus::CotermScore<f64>;
pub type TargetReport64 = corpus::TargetReport<f64>;
pub type AcquisitionProfile64 = aoa::AcquisitionProfile<f64>;
