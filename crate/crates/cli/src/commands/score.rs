use std::path::PathBuf;

use serde::Serialize;
use wcts::corpus::{
    analyze_target, baselines, ingroup_outgroup, read_corpus_jsonl, read_targets_json, write_scores_csv, Baselines,
    CotermScore, GroupKey, InGroupMatrix, TargetReport, TargetSpec,
};
use wcts::Dimension;

use super::{csv_err, csv_writer, dimensions, finish, out_dir, read_lexicon, require};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::{read_input, Metadata};

pub const REPORT_FILE: &str = "report.json";
/// Target column value for corpus-wide baseline rows.
pub const BASELINE_TARGET: &str = "(baseline)";

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Merged lexicon TSV.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    /// JSON-lines corpus.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// JSON map of target name to surface terms.
    #[arg(long)]
    pub targets: Option<PathBuf>,
    /// Also score each target per year or per region.
    #[arg(long, value_name = "year|region")]
    pub group_by: Option<GroupKey>,
    /// Two `region=target` pairs, e.g. `us=america,ca=canada`.
    #[arg(long, value_name = "PAIRS")]
    pub ingroup_outgroup: Option<String>,
    /// Dimensions to score (default: all the lexicon covers).
    #[arg(long, value_delimiter = ',')]
    pub dimensions: Vec<Dimension>,
}

#[derive(Serialize)]
struct Report<'a> {
    dimensions: &'a [Dimension],
    n_docs: usize,
    n_targets: usize,
    baselines: &'a Baselines<f64>,
    targets: &'a [TargetReport<f64>],
    ingroup_outgroup: Option<&'a InGroupMatrix<f64>>,
}

/// Parses `region=target,region=target`.
fn parse_pairs(raw: &str) -> CliResult<[(String, String); 2]> {
    let pairs = raw
        .split(',')
        .map(|p| {
            let (region, target) = p
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--ingroup-outgroup pair {p:?} is not region=target")))?;
            let (region, target) = (region.trim(), target.trim());
            if region.is_empty() || target.is_empty() {
                return Err(CliError::Usage(format!("--ingroup-outgroup pair {p:?} has an empty side")));
            }
            Ok((region.to_string(), target.to_string()))
        })
        .collect::<CliResult<Vec<_>>>()?;
    <[(String, String); 2]>::try_from(pairs)
        .map_err(|_| CliError::Usage("--ingroup-outgroup takes exactly two region=target pairs".into()))
}

fn find<'t>(targets: &'t [TargetSpec], name: &str) -> CliResult<&'t TargetSpec> {
    targets
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| CliError::Data(format!("target {name:?} is not in the targets file")))
}

fn baseline_rows(b: &Baselines<f64>) -> Vec<CotermScore<f64>> {
    b.by_dimension
        .values()
        .map(|b| CotermScore {
            target: BASELINE_TARGET.to_string(),
            dimension: b.dimension,
            score: b.score,
            n_docs: b.n_docs,
            n_tokens: b.n_tokens,
            n_high: b.n_high,
            n_low: b.n_low,
            degenerate: b.degenerate,
        })
        .collect()
}

pub fn run(args: Args, cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    let lex_path = require(args.lexicon, &cfg.paths.lexicon, "lexicon")?;
    let corpus_path = require(args.corpus, &cfg.paths.corpus, "corpus")?;
    let targets_path = require(args.targets, &cfg.paths.targets, "targets")?;
    let pairs = args.ingroup_outgroup.as_deref().map(parse_pairs).transpose()?;

    let mut inputs = Vec::new();
    let lex = read_lexicon(&lex_path, &mut inputs)?;
    let corpus_bytes = read_input(&corpus_path, &mut inputs)?;
    let corpus = read_corpus_jsonl(corpus_bytes.as_slice()).map_err(|e| CliError::at(&corpus_path, e))?;
    let targets_bytes = read_input(&targets_path, &mut inputs)?;
    let targets = read_targets_json(targets_bytes.as_slice()).map_err(|e| CliError::at(&targets_path, e))?;
    let dims = dimensions(args.dimensions, &lex)?;
    let counting = cfg.counting();

    let base = baselines(&corpus, &lex, &dims, &counting)?;
    let group_by = args.group_by.map(|k| (k, cfg.corpus.min_group_docs));
    let reports = targets
        .iter()
        .map(|t| analyze_target(&corpus, &lex, t, &dims, Some(&base), &counting, group_by))
        .collect::<wcts::Result<Vec<_>>>()?;
    let matrix = match &pairs {
        Some([(r1, t1), (r2, t2)]) => {
            let specs = [find(&targets, t1)?, find(&targets, t2)?];
            Some(ingroup_outgroup(&corpus, &lex, [r1, r2], specs, &dims, &counting)?)
        }
        None => None,
    };
    let meta = Metadata::new("score", &cfg, inputs);

    let mut scores = Vec::new();
    let rows = baseline_rows(&base);
    write_scores_csv(rows.iter().chain(reports.iter().flat_map(|r| r.coterm.values())), &mut scores)?;

    let report = Report {
        dimensions: &dims,
        n_docs: corpus.len(),
        n_targets: targets.len(),
        baselines: &base,
        targets: &reports,
        ingroup_outgroup: matrix.as_ref(),
    };

    let mut out = out_dir(&cfg)?;
    out.write_text("scores.csv", &meta, &scores)?;
    out.write(REPORT_FILE, &meta.wrap_json(&report)?)?;

    if group_by.is_some() {
        let mut buf = Vec::new();
        let mut wtr = csv_writer(&mut buf);
        wtr.write_record([
            "target", "dimension", "group", "n_docs", "low_confidence", "score", "n_tokens", "n_high", "n_low", "spread",
        ])
        .map_err(csv_err)?;
        for r in &reports {
            for row in &r.by_group {
                for (dim, s) in &row.scores {
                    wtr.write_record([
                        r.target.clone(),
                        dim.to_string(),
                        row.group.to_string(),
                        row.n_docs.to_string(),
                        row.low_confidence.to_string(),
                        s.score.to_string(),
                        s.n_tokens.to_string(),
                        s.n_high.to_string(),
                        s.n_low.to_string(),
                        r.group_spread[dim].to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
        }
        finish(wtr)?;
        out.write_text("stability.csv", &meta, &buf)?;
    }

    if let Some(m) = &matrix {
        let mut buf = Vec::new();
        let mut wtr = csv_writer(&mut buf);
        wtr.write_record(["source_region", "target", "dimension", "score", "n_docs", "n_tokens", "n_high", "n_low"])
            .map_err(csv_err)?;
        let base_rows = m.baselines.iter().map(|b| (&b.region, BASELINE_TARGET, b.baseline.dimension, b.baseline.score, b.baseline.n_docs, b.baseline.n_tokens, b.baseline.n_high, b.baseline.n_low));
        let cell_rows = m.cells.iter().map(|c| {
            let s = &c.score;
            (&c.source_region, s.target.as_str(), s.dimension, s.score, s.n_docs, s.n_tokens, s.n_high, s.n_low)
        });
        for (region, target, dim, score, n_docs, n_tokens, n_high, n_low) in base_rows.chain(cell_rows) {
            wtr.write_record([
                region.clone(),
                target.to_string(),
                dim.to_string(),
                score.to_string(),
                n_docs.to_string(),
                n_tokens.to_string(),
                n_high.to_string(),
                n_low.to_string(),
            ])
            .map_err(csv_err)?;
        }
        finish(wtr)?;
        out.write_text("ingroup_outgroup.csv", &meta, &buf)?;
    }
    Ok(out.written().to_vec())
}
