use std::path::PathBuf;

use serde::Serialize;
use wcts::lexicon::{build_warmth_lexicon, class_distribution, warmth_source_breakdown, write_lexicon_tsv};
use wcts::lexicon::{ClassDistribution, SourceBreakdown};
use wcts::Dimension;

use super::{csv_err, csv_writer, finish, out_dir, read_lexicon, require};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::Metadata;

pub const LEXICON_FILE: &str = "wcts_lexicon.tsv";

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Trust lexicon TSV.
    #[arg(long)]
    pub trust: Option<PathBuf>,
    /// Sociability lexicon TSV.
    #[arg(long)]
    pub sociability: Option<PathBuf>,
    /// Competence lexicon TSV; its scores are copied onto matching terms.
    #[arg(long)]
    pub competence: Option<PathBuf>,
}

/// How the union was formed.
#[derive(Debug, Serialize)]
pub struct UnionCounts {
    pub n_trust: usize,
    pub n_sociability: usize,
    pub n_both: usize,
    pub n_union: usize,
    pub n_competence_matched: usize,
}

#[derive(Serialize)]
struct Report {
    union: UnionCounts,
    distributions: Vec<ClassDistribution<f64>>,
    warmth_sources: SourceBreakdown,
}

pub fn run(args: Args, cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    let trust_path = require(args.trust, &cfg.paths.trust_lexicon, "trust")?;
    let soc_path = require(args.sociability, &cfg.paths.sociability_lexicon, "sociability")?;
    let comp_path = args.competence.or_else(|| cfg.paths.competence_lexicon.clone());

    let mut inputs = Vec::new();
    let trust = read_lexicon(&trust_path, &mut inputs)?;
    let soc = read_lexicon(&soc_path, &mut inputs)?;
    let comp = comp_path.map(|p| read_lexicon(&p, &mut inputs)).transpose()?;
    let merged = build_warmth_lexicon(&trust, &soc, comp.as_ref()).map_err(CliError::from)?;
    let meta = Metadata::new("merge", &cfg, inputs);

    let union = UnionCounts {
        n_trust: trust.len(),
        n_sociability: soc.len(),
        n_both: trust.terms().filter(|t| soc.contains(t)).count(),
        n_union: merged.len(),
        n_competence_matched: merged.iter().filter(|e| e.competence().is_some()).count(),
    };
    let distributions: Vec<_> = [Dimension::Trust, Dimension::Sociability, Dimension::Warmth]
        .into_iter()
        .map(|d| class_distribution(&merged, d, &cfg.bins))
        .collect();
    let sources = warmth_source_breakdown(&merged, &cfg.bins);

    let mut tsv = Vec::new();
    write_lexicon_tsv(&merged, &mut tsv).map_err(|e| CliError::Io(e.to_string()))?;

    let mut dist_csv = Vec::new();
    let mut wtr = csv_writer(&mut dist_csv);
    wtr.write_record(["dimension", "category", "count", "percentage"]).map_err(csv_err)?;
    for d in &distributions {
        for (cat, n) in &d.counts {
            let pct = d.percentages[cat];
            wtr.write_record([d.dimension.as_str(), cat.as_str(), &n.to_string(), &pct.to_string()])
                .map_err(csv_err)?;
        }
    }
    finish(wtr)?;

    let mut src_csv = Vec::new();
    let mut wtr = csv_writer(&mut src_csv);
    wtr.write_record(["category", "source", "count"]).map_err(csv_err)?;
    for (cat, row) in &sources.rows {
        for (src, n) in row {
            wtr.write_record([cat.as_str(), src.as_str(), &n.to_string()]).map_err(csv_err)?;
        }
    }
    finish(wtr)?;

    // Terms scored on both facets, for the trust-sociability scatter.
    let mut scatter = Vec::new();
    let mut wtr = csv_writer(&mut scatter);
    wtr.write_record(["term", "trust", "sociability", "warmth", "source"]).map_err(csv_err)?;
    for e in merged.iter() {
        if let (Some(t), Some(s), Some(w), Some(src)) = (e.trust(), e.sociability(), e.warmth(), e.warmth_source()) {
            wtr.write_record([e.term(), &t.to_string(), &s.to_string(), &w.to_string(), src.as_str()])
                .map_err(csv_err)?;
        }
    }
    finish(wtr)?;

    let report = Report {
        union,
        distributions,
        warmth_sources: sources,
    };
    let mut out = out_dir(&cfg)?;
    out.write_text(LEXICON_FILE, &meta, &tsv)?;
    out.write("distribution.json", &meta.wrap_json(&report)?)?;
    out.write_text("distribution.csv", &meta, &dist_csv)?;
    out.write_text("warmth_sources.csv", &meta, &src_csv)?;
    out.write_text("ts_scatter.csv", &meta, &scatter)?;
    Ok(out.written().to_vec())
}
