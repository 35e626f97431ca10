//! Per-age shares of high, low and neutral words.
//!
//! A lexicon is joined with an age-of-acquisition table; each joined word
//! falls in the integer-year bucket `[b, b + 1)` of its acquisition age,
//! with ages outside the configured range clamped into the end buckets.

use std::collections::HashSet;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{Dimension, Lexicon, Polarity3, PolarityCutoffs};
use crate::scalar::{ratio, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct AoaRecord<S> {
    pub term: String,
    pub age: S,
}

impl<S: Scalar> AoaRecord<S> {
    pub fn new(term: &str, age: S) -> Result<Self> {
        if !age.is_finite() || age <= S::zero() {
            return Err(Error::domain(format!("age {age} for {term:?} must be positive")));
        }
        Ok(Self {
            term: term.trim().to_lowercase(),
            age,
        })
    }
}

/// Reads a `term,age` CSV.
pub fn read_aoa_csv<S: Scalar, R: Read>(reader: R) -> Result<Vec<AoaRecord<S>>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header = rdr.headers().map_err(|e| Error::parse(1, e.to_string()))?;
    if header.iter().map(str::trim).ne(["term", "age"]) {
        return Err(Error::parse(1, "expected header `term,age`"));
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::parse(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let age: S = row[1]
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("bad age {:?}", &row[1])))?;
        out.push(AoaRecord::new(&row[0], age).map_err(|e| Error::parse(line, e.to_string()))?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinedTerm<S> {
    pub term: String,
    pub age: S,
    pub polarity: Polarity3,
}

/// Inner join of a lexicon dimension with acquisition ages, plus coverage.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AoaJoin<S> {
    pub dimension: Dimension,
    pub rows: Vec<JoinedTerm<S>>,
    pub n_aoa_records: usize,
    /// AoA terms absent from the lexicon.
    pub n_missing_from_lexicon: usize,
    /// AoA terms in the lexicon but without a score for the dimension.
    pub n_missing_dimension: usize,
    /// Repeated AoA terms after the first occurrence.
    pub n_duplicates: usize,
}

pub fn join_aoa<S: Scalar>(
    lex: &Lexicon<S>,
    aoa: &[AoaRecord<S>],
    dim: Dimension,
    cutoffs: &PolarityCutoffs,
) -> Result<AoaJoin<S>> {
    let mut seen = HashSet::new();
    let mut join = AoaJoin {
        dimension: dim,
        rows: Vec::new(),
        n_aoa_records: aoa.len(),
        n_missing_from_lexicon: 0,
        n_missing_dimension: 0,
        n_duplicates: 0,
    };
    for rec in aoa {
        if !seen.insert(rec.term.as_str()) {
            join.n_duplicates += 1;
            continue;
        }
        let Some(entry) = lex.get(&rec.term) else {
            join.n_missing_from_lexicon += 1;
            continue;
        };
        let Some(score) = entry.score(dim) else {
            join.n_missing_dimension += 1;
            continue;
        };
        join.rows.push(JoinedTerm {
            term: rec.term.clone(),
            age: rec.age,
            polarity: cutoffs.classify(score, dim)?,
        });
    }
    if join.rows.is_empty() {
        return Err(Error::data(format!("no AoA term has a {dim} score in the lexicon")));
    }
    Ok(join)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ProfileConfig {
    pub age_lo: i32,
    pub age_hi: i32,
    /// Bucket `b` holds every word acquired by age `b + 1` rather than at `b`.
    pub cumulative: bool,
}

impl Default for ProfileConfig {
    fn default() -> Self {
        Self {
            age_lo: 3,
            age_hi: 17,
            cumulative: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileRow<S> {
    pub age: i32,
    pub pct_high: S,
    pub pct_low: S,
    pub pct_neutral: S,
    pub n_words: usize,
    pub n_high: usize,
    pub n_low: usize,
    pub n_neutral: usize,
    /// Empty bucket; percentages reported as zero.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AcquisitionProfile<S> {
    pub dimension: Dimension,
    pub cumulative: bool,
    pub rows: Vec<ProfileRow<S>>,
}

fn bucket_of<S: Scalar>(age: S, cfg: &ProfileConfig) -> i32 {
    let floor = age.floor().to_i64().unwrap_or(i64::MAX);
    floor.clamp(i64::from(cfg.age_lo), i64::from(cfg.age_hi)) as i32
}

pub fn acquisition_profile<S: Scalar>(joined: &AoaJoin<S>, cfg: &ProfileConfig) -> Result<AcquisitionProfile<S>> {
    if cfg.age_lo > cfg.age_hi {
        return Err(Error::domain(format!("age range {}..{} is empty", cfg.age_lo, cfg.age_hi)));
    }
    let width = (cfg.age_hi - cfg.age_lo + 1) as usize;
    // [high, low, neutral] per bucket
    let mut counts = vec![[0usize; 3]; width];
    for row in &joined.rows {
        let slot = match row.polarity {
            Polarity3::High => 0,
            Polarity3::Low => 1,
            Polarity3::Neutral => 2,
        };
        counts[(bucket_of(row.age, cfg) - cfg.age_lo) as usize][slot] += 1;
    }
    if cfg.cumulative {
        for i in 1..width {
            let prev = counts[i - 1];
            for (c, p) in counts[i].iter_mut().zip(prev) {
                *c += p;
            }
        }
    }
    let rows = counts
        .iter()
        .enumerate()
        .map(|(i, &[high, low, neutral])| {
            let n = high + low + neutral;
            let pct = |k: usize| if n == 0 { S::zero() } else { ratio::<S>(100 * k as i64, n) };
            ProfileRow {
                age: cfg.age_lo + i as i32,
                pct_high: pct(high),
                pct_low: pct(low),
                pct_neutral: pct(neutral),
                n_words: n,
                n_high: high,
                n_low: low,
                n_neutral: neutral,
                degenerate: n == 0,
            }
        })
        .collect();
    Ok(AcquisitionProfile {
        dimension: joined.dimension,
        cumulative: cfg.cumulative,
        rows,
    })
}

/// Share of polar (high or low) words per bucket.
pub fn polar_fraction<S: Scalar>(profile: &AcquisitionProfile<S>) -> Vec<(i32, S)> {
    profile.rows.iter().map(|r| (r.age, r.pct_high + r.pct_low)).collect()
}

pub const PROFILE_CSV_HEADER: &str = "dimension,age,pct_high,pct_low,pct_neutral,n_words";

/// Writes profiles as `dimension,age,pct_high,pct_low,pct_neutral,n_words`.
pub fn write_profile_csv<'a, S: Scalar, W: Write>(
    profiles: impl IntoIterator<Item = &'a AcquisitionProfile<S>>,
    mut out: W,
) -> std::io::Result<()> {
    writeln!(out, "{PROFILE_CSV_HEADER}")?;
    for p in profiles {
        for r in &p.rows {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                p.dimension, r.age, r.pct_high, r.pct_low, r.pct_neutral, r.n_words
            )?;
        }
    }
    Ok(())
}
