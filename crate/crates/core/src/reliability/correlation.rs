//! Product-moment and rank correlation.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_pair<S: Scalar>(xs: &[S], ys: &[S]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::domain(format!("length mismatch: {} vs {}", xs.len(), ys.len())));
    }
    if xs.len() < 2 {
        return Err(Error::domain(format!("need at least 2 pairs, got {}", xs.len())));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(Error::domain("non-finite value in correlation input"));
    }
    Ok(())
}

/// Pearson's r, accumulated in a single streaming pass (Welford co-moments).
pub fn pearson<S: Scalar>(xs: &[S], ys: &[S]) -> Result<S> {
    check_pair(xs, ys)?;
    let (mut mean_x, mut mean_y) = (S::zero(), S::zero());
    let (mut m2x, mut m2y, mut cxy) = (S::zero(), S::zero(), S::zero());
    for (k, (&x, &y)) in xs.iter().zip(ys).enumerate() {
        let n = S::from_count(k + 1);
        let dx = x - mean_x;
        mean_x = mean_x + dx / n;
        let dy = y - mean_y;
        mean_y = mean_y + dy / n;
        m2x = m2x + dx * (x - mean_x);
        m2y = m2y + dy * (y - mean_y);
        cxy = cxy + dx * (y - mean_y);
    }
    if m2x <= S::zero() || m2y <= S::zero() {
        return Err(Error::UndefinedCorrelation("zero variance".into()));
    }
    let r = cxy / (m2x * m2y).sqrt();
    Ok(r.max(-S::one()).min(S::one()))
}

/// 1-based ranks; tied values share the average of the ranks they span.
pub fn average_ranks<S: Scalar>(values: &[S]) -> Vec<S> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(Ordering::Equal));
    let mut ranks = vec![S::zero(); values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let avg = S::from_count(start + 1 + end) / S::lit(2.0);
        for &i in &order[start..end] {
            ranks[i] = avg;
        }
        start = end;
    }
    ranks
}

/// Spearman's rho: Pearson correlation of average ranks.
pub fn spearman<S: Scalar>(xs: &[S], ys: &[S]) -> Result<S> {
    check_pair(xs, ys)?;
    pearson(&average_ranks(xs), &average_ranks(ys))
}
