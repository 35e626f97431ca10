//! Split-half reliability of aggregated annotation scores.
//!
//! Each trial splits every term's responses into two random halves,
//! aggregates each half into a mean, and correlates the two score vectors
//! across terms. The report averages Spearman and Pearson over all trials.
//! Trial `t` draws from a ChaCha stream `t` under the run seed, so trials are
//! independent of execution order.

mod correlation;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::annotation::aggregate_term;
use crate::error::{Error, Result};
use crate::lexicon::Dimension;
use crate::scalar::Scalar;

pub use correlation::{average_ranks, pearson, spearman};

pub const DEFAULT_TRIALS: usize = 1000;

/// Correlations from one random split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitHalf<S> {
    pub spearman: S,
    pub pearson: S,
    pub n_terms_used: usize,
}

/// Fills `order` with a random permutation of `0..n` and returns the cut:
/// `order[..cut]` is half A, `order[cut..]` half B.
pub(crate) fn random_halves<R: Rng + ?Sized>(n: usize, rng: &mut R, order: &mut Vec<usize>) -> usize {
    order.clear();
    order.extend(0..n);
    order.shuffle(rng);
    if n % 2 == 1 && rng.gen::<bool>() {
        n / 2 + 1
    } else {
        n / 2
    }
}

/// Splits each term's responses at random into halves of sizes `n/2`
/// rounded down and up (which half gets the extra response is random) and
/// correlates the half means. Terms with fewer than two responses are skipped.
pub fn split_half_once<S: Scalar, R: Rng + ?Sized>(
    per_term: &BTreeMap<String, Vec<i8>>,
    rng: &mut R,
) -> Result<SplitHalf<S>> {
    let mut half_a = Vec::with_capacity(per_term.len());
    let mut half_b = Vec::with_capacity(per_term.len());
    let mut order = Vec::new();
    let mut values = Vec::new();
    for responses in per_term.values().filter(|r| r.len() >= 2) {
        let cut = random_halves(responses.len(), rng, &mut order);
        values.clear();
        values.extend(order.iter().map(|&i| responses[i]));
        half_a.push(aggregate_term::<S>(&values[..cut])?);
        half_b.push(aggregate_term::<S>(&values[cut..])?);
    }
    if half_a.is_empty() {
        return Err(Error::data("no term has at least two responses"));
    }
    Ok(SplitHalf {
        spearman: spearman(&half_a, &half_b)?,
        pearson: pearson(&half_a, &half_b)?,
        n_terms_used: half_a.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReliabilityReport<S> {
    pub dimension: Dimension,
    pub trials: usize,
    pub seed: u64,
    pub mean_spearman: S,
    pub mean_pearson: S,
    pub n_terms_used: usize,
    /// Terms skipped for having fewer than two responses.
    pub n_terms_excluded: usize,
}

/// Deterministic generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Mean split-half Spearman and Pearson correlation over `trials` splits.
pub fn shr<S: Scalar>(
    per_term: &BTreeMap<String, Vec<i8>>,
    dimension: Dimension,
    trials: usize,
    seed: u64,
) -> Result<ReliabilityReport<S>> {
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let (mut sum_rho, mut sum_r) = (S::zero(), S::zero());
    let mut used = 0;
    for t in 0..trials {
        let split = split_half_once::<S, _>(per_term, &mut trial_rng(seed, t))?;
        sum_rho = sum_rho + split.spearman;
        sum_r = sum_r + split.pearson;
        used = split.n_terms_used;
    }
    let n = S::from_count(trials);
    Ok(ReliabilityReport {
        dimension,
        trials,
        seed,
        mean_spearman: sum_rho / n,
        mean_pearson: sum_r / n,
        n_terms_used: used,
        n_terms_excluded: per_term.len() - used,
    })
}

#[cfg(test)]
mod tests;
