use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

/// Naive two-pass Pearson used as an oracle.
fn naive_pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

/// Quadratic-time average ranks used as an oracle.
fn naive_ranks(xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|x| {
            let below = xs.iter().filter(|y| *y < x).count() as f64;
            let equal = xs.iter().filter(|y| *y == x).count() as f64;
            below + (equal + 1.0) / 2.0
        })
        .collect()
}

fn terms(rows: &[(&str, &[i8])]) -> BTreeMap<String, Vec<i8>> {
    rows.iter().map(|(t, r)| (t.to_string(), r.to_vec())).collect()
}

/// `n_terms` terms, `per_term` responses each: true score in -2..=2 plus
/// noise drawn uniformly from -noise..=noise, clamped to the scale.
fn noisy(n_terms: usize, per_term: usize, noise: i8, seed: u64) -> BTreeMap<String, Vec<i8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_terms)
        .map(|t| {
            let truth: i8 = rng.gen_range(-2..=2);
            let rs = (0..per_term)
                .map(|_| (truth + rng.gen_range(-noise..=noise)).clamp(-3, 3))
                .collect();
            (format!("t{t}"), rs)
        })
        .collect()
}

#[test]
fn pearson_matches_naive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let xs: Vec<f64> = (0..50).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let ys: Vec<f64> = (0..50).map(|_| rng.gen_range(-3.0..3.0)).collect();
        assert!((pearson(&xs, &ys).unwrap() - naive_pearson(&xs, &ys)).abs() < 1e-12);
    }
}

#[test]
fn spearman_matches_rank_then_pearson_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(3..60);
        let xs: Vec<f64> = (0..n).map(|_| rng.gen_range(-3..=3) as f64).collect();
        let ys: Vec<f64> = (0..n).map(|_| rng.gen_range(-3..=3) as f64 / 2.0).collect();
        let rx = naive_ranks(&xs);
        let ry = naive_ranks(&ys);
        assert_eq!(average_ranks(&xs), rx);
        match spearman(&xs, &ys) {
            Ok(rho) => assert!((rho - naive_pearson(&rx, &ry)).abs() < 1e-12),
            Err(_) => assert!(rx.iter().all(|r| *r == rx[0]) || ry.iter().all(|r| *r == ry[0])),
        }
    }
}

#[test]
fn constant_within_term_gives_unit_reliability() {
    let data = terms(&[("a", &[2, 2, 2]), ("b", &[-1, -1]), ("c", &[0, 0, 0, 0])]);
    let split = split_half_once::<f64, _>(&data, &mut trial_rng(1, 0)).unwrap();
    assert_eq!((split.spearman, split.pearson), (1.0, 1.0));
}

#[test]
fn two_constant_terms() {
    let data = terms(&[("A", &[3, 3]), ("B", &[-3, -3])]);
    let split = split_half_once::<f64, _>(&data, &mut trial_rng(5, 3)).unwrap();
    assert_eq!((split.spearman, split.pearson), (1.0, 1.0));
}

#[test]
fn short_terms_are_excluded_not_fatal() {
    let data = terms(&[("A", &[3, 3]), ("B", &[-3, -3]), ("C", &[1])]);
    let report = shr::<f64>(&data, Dimension::Trust, 10, 0).unwrap();
    assert_eq!((report.n_terms_used, report.n_terms_excluded), (2, 1));
    let all_short = terms(&[("A", &[3]), ("B", &[1])]);
    assert!(matches!(shr::<f64>(&all_short, Dimension::Trust, 10, 0), Err(Error::Data(_))));
    assert!(matches!(shr::<f64>(&data, Dimension::Trust, 0, 0), Err(Error::Domain(_))));
}

#[test]
fn noisy_terms_correlate_highly() {
    let data = noisy(500, 12, 1, 3);
    let split = split_half_once::<f64, _>(&data, &mut trial_rng(9, 0)).unwrap();
    assert!(split.pearson > 0.9, "{split:?}");
    assert!(split.spearman > 0.9, "{split:?}");
}

#[test]
fn noise_free_report_is_unity() {
    let data = noisy(200, 6, 0, 4);
    let report = shr::<f64>(&data, Dimension::Sociability, 50, 42).unwrap();
    assert!((report.mean_spearman - 1.0).abs() <= 1e-9);
    assert!((report.mean_pearson - 1.0).abs() <= 1e-9);
}

#[test]
fn random_responses_have_near_zero_reliability() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let data: BTreeMap<String, Vec<i8>> =
        (0..500).map(|t| (format!("t{t}"), (0..8).map(|_| rng.gen_range(-3..=3)).collect())).collect();
    let report = shr::<f64>(&data, Dimension::Trust, 200, 1).unwrap();
    assert!(report.mean_spearman.abs() < 0.1, "{report:?}");
    assert!(report.mean_pearson.abs() < 0.1, "{report:?}");
}

#[test]
fn same_seed_same_report() {
    let data = noisy(100, 7, 2, 8);
    let a = shr::<f64>(&data, Dimension::Trust, 30, 5).unwrap();
    let b = shr::<f64>(&data, Dimension::Trust, 30, 5).unwrap();
    assert_eq!(a, b);
    let c = shr::<f64>(&data, Dimension::Trust, 30, 6).unwrap();
    assert_ne!(a.mean_pearson, c.mean_pearson);
}

#[test]
fn more_noise_never_raises_reliability() {
    // 3 noise levels x 20 seeds; allow a one-sided 0.01 margin.
    for seed in 0..20 {
        let means: Vec<f64> = [0i8, 1, 2]
            .iter()
            .map(|&noise| shr::<f64>(&noisy(150, 8, noise, seed), Dimension::Trust, 20, seed).unwrap().mean_pearson)
            .collect();
        assert!(means[1] <= means[0] + 0.01 && means[2] <= means[1] + 0.01, "seed {seed}: {means:?}");
    }
}

#[test]
fn split_is_fair() {
    for n in [2usize, 5, 8, 9] {
        let trials = 20_000;
        let mut in_a = vec![0usize; n];
        let mut order = Vec::new();
        let mut rng = trial_rng(17, n);
        for _ in 0..trials {
            let cut = random_halves(n, &mut rng, &mut order);
            assert!(cut == n / 2 || cut == n.div_ceil(2));
            for &i in &order[..cut] {
                in_a[i] += 1;
            }
        }
        for (i, &k) in in_a.iter().enumerate() {
            let freq = k as f64 / trials as f64;
            assert!((freq - 0.5).abs() <= 0.02, "n={n} response {i}: {freq}");
        }
    }
}

#[test]
fn single_precision_runs() {
    let data = noisy(50, 6, 1, 2);
    let r32 = shr::<f32>(&data, Dimension::Trust, 10, 3).unwrap();
    let r64 = shr::<f64>(&data, Dimension::Trust, 10, 3).unwrap();
    assert!((r32.mean_pearson as f64 - r64.mean_pearson).abs() < 1e-4);
}
