use std::path::PathBuf;

use serde::Serialize;
use wcts::annotation::{build_dimension_lexicon, AggregationStats, AnnotatorStats};
use wcts::lexicon::write_lexicon_tsv;
use wcts::Dimension;

use super::{annotation_paths, facet, out_dir, read_annotations};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::Metadata;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Dimension to build; rows for other dimensions are ignored.
    #[arg(long)]
    pub dimension: Dimension,
    /// Annotation CSV files (default: config `paths.annotations`).
    pub files: Vec<PathBuf>,
}

#[derive(Serialize)]
struct StatsReport<'a> {
    aggregation: &'a AggregationStats<f64>,
    n_records_read: usize,
    n_records_other_dimension: usize,
    n_annotators: usize,
    n_annotators_retained: usize,
    annotators: Vec<&'a AnnotatorStats<f64>>,
}

pub fn run(args: Args, cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    let dim = facet(args.dimension)?;
    let paths = annotation_paths(args.files, &cfg)?;
    let mut inputs = Vec::new();
    let (records, other) = read_annotations(&paths, dim, &mut inputs)?;
    let built = build_dimension_lexicon::<f64>(&records, dim, &cfg.qc)?;
    let meta = Metadata::new("build", &cfg, inputs);

    let mut tsv = Vec::new();
    write_lexicon_tsv(&built.lexicon, &mut tsv).map_err(|e| CliError::Io(e.to_string()))?;
    let report = StatsReport {
        aggregation: &built.aggregation,
        n_records_read: records.len() + other,
        n_records_other_dimension: other,
        n_annotators: built.annotators.len(),
        n_annotators_retained: built.annotators.values().filter(|a| a.retained).count(),
        annotators: built.annotators.values().collect(),
    };

    let mut out = out_dir(&cfg)?;
    out.write_text(&format!("{dim}.tsv"), &meta, &tsv)?;
    out.write(&format!("{dim}_stats.json"), &meta.wrap_json(&report)?)?;
    Ok(out.written().to_vec())
}
