use std::path::PathBuf;

use serde::Serialize;
use wcts::aoa::{acquisition_profile, join_aoa, polar_fraction, read_aoa_csv, write_profile_csv, AcquisitionProfile};
use wcts::Dimension;

use super::{csv_err, csv_writer, dimensions, finish, out_dir, read_lexicon, require};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::{read_input, Metadata};

pub const PROFILE_FILE: &str = "aoa_profile.csv";

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Merged lexicon TSV.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// Age-of-acquisition CSV with header `term,age`.
    #[arg(long)]
    pub aoa: Option<PathBuf>,
    /// Dimensions to profile (default: all the lexicon covers).
    #[arg(long, value_delimiter = ',')]
    pub dimensions: Vec<Dimension>,
    /// Count every word acquired by each age rather than at it.
    #[arg(long)]
    pub cumulative: bool,
}

/// Join coverage for one dimension.
#[derive(Serialize)]
struct Coverage {
    dimension: Dimension,
    n_joined: usize,
    n_aoa_records: usize,
    n_missing_from_lexicon: usize,
    n_missing_dimension: usize,
    n_duplicates: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    coverage: Vec<Coverage>,
    profiles: &'a [AcquisitionProfile<f64>],
}

pub fn run(args: Args, mut cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    cfg.aoa.cumulative |= args.cumulative;
    let lex_path = require(args.lexicon, &cfg.paths.lexicon, "lexicon")?;
    let aoa_path = require(args.aoa, &cfg.paths.aoa, "aoa")?;

    let mut inputs = Vec::new();
    let lex = read_lexicon(&lex_path, &mut inputs)?;
    let aoa_bytes = read_input(&aoa_path, &mut inputs)?;
    let aoa = read_aoa_csv::<f64, _>(aoa_bytes.as_slice()).map_err(|e| CliError::at(&aoa_path, e))?;
    let dims = dimensions(args.dimensions, &lex)?;

    let mut coverage = Vec::new();
    let mut profiles = Vec::new();
    for &dim in &dims {
        let join = join_aoa(&lex, &aoa, dim, &cfg.polarity)?;
        profiles.push(acquisition_profile(&join, &cfg.aoa)?);
        coverage.push(Coverage {
            dimension: dim,
            n_joined: join.rows.len(),
            n_aoa_records: join.n_aoa_records,
            n_missing_from_lexicon: join.n_missing_from_lexicon,
            n_missing_dimension: join.n_missing_dimension,
            n_duplicates: join.n_duplicates,
        });
    }
    let meta = Metadata::new("aoa", &cfg, inputs);

    let mut profile_csv = Vec::new();
    write_profile_csv(&profiles, &mut profile_csv).map_err(|e| CliError::Io(e.to_string()))?;

    let mut polar_csv = Vec::new();
    let mut wtr = csv_writer(&mut polar_csv);
    wtr.write_record(["dimension", "age", "pct_polar", "n_words"]).map_err(csv_err)?;
    for p in &profiles {
        for ((age, pct), row) in polar_fraction(p).into_iter().zip(&p.rows) {
            wtr.write_record([p.dimension.as_str(), &age.to_string(), &pct.to_string(), &row.n_words.to_string()])
                .map_err(csv_err)?;
        }
    }
    finish(wtr)?;

    let report = Report {
        coverage,
        profiles: &profiles,
    };
    let mut out = out_dir(&cfg)?;
    out.write_text(PROFILE_FILE, &meta, &profile_csv)?;
    out.write_text("aoa_polar.csv", &meta, &polar_csv)?;
    out.write("aoa_join.json", &meta.wrap_json(&report)?)?;
    Ok(out.written().to_vec())
}
