use std::path::PathBuf;

use serde::Serialize;
use wcts::annotation::{compute_annotator_stats, filter_annotations, responses_by_term};
use wcts::reliability::{shr, ReliabilityReport};
use wcts::Dimension;

use super::{annotation_paths, facet, out_dir, read_annotations};
use crate::config::RunConfig;
use crate::error::CliResult;
use crate::meta::Metadata;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Dimension to assess; rows for other dimensions are ignored.
    #[arg(long)]
    pub dimension: Dimension,
    /// Number of random splits (default: config `reliability.trials`).
    #[arg(long)]
    pub trials: Option<usize>,
    /// Skip annotator quality control and keep every annotator's responses.
    #[arg(long)]
    pub raw: bool,
    /// Annotation CSV files (default: config `paths.annotations`).
    pub files: Vec<PathBuf>,
}

#[derive(Serialize)]
struct Report {
    reliability: ReliabilityReport<f64>,
    quality_controlled: bool,
    n_annotations: usize,
}

pub fn run(args: Args, mut cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    let dim = facet(args.dimension)?;
    if let Some(trials) = args.trials {
        cfg.reliability.trials = trials;
    }
    cfg.reliability.raw |= args.raw;
    cfg.validate()?;

    let paths = annotation_paths(args.files, &cfg)?;
    let mut inputs = Vec::new();
    let (records, _) = read_annotations(&paths, dim, &mut inputs)?;
    let used = if cfg.reliability.raw {
        records
            .into_iter()
            .filter(|r| cfg.qc.include_gold || !r.gold_kind().is_gold())
            .collect()
    } else {
        let stats = compute_annotator_stats::<f64>(&records, &cfg.qc);
        filter_annotations(&records, &stats, cfg.qc.include_gold)
    };
    let per_term = responses_by_term(&used);
    let reliability = shr::<f64>(&per_term, dim, cfg.reliability.trials, cfg.seed)?;

    let meta = Metadata::new("validate", &cfg, inputs);
    let report = Report {
        reliability,
        quality_controlled: !cfg.reliability.raw,
        n_annotations: used.len(),
    };
    let mut out = out_dir(&cfg)?;
    out.write(&format!("{dim}_reliability.json"), &meta.wrap_json(&report)?)?;
    Ok(out.written().to_vec())
}
