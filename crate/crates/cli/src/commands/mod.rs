//! One module per subcommand, plus the input helpers they share.

pub mod aoa;
pub mod build;
pub mod merge;
pub mod plot;
pub mod score;
pub mod validate;

use std::path::{Path, PathBuf};

use wcts::annotation::{parse_annotations_csv, AnnotationRecord};
use wcts::lexicon::{parse_lexicon_tsv, Lexicon};
use wcts::Dimension;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::{read_input, InputDigest, OutDir};

/// A flag value, else the config path, else a usage error.
pub fn require(flag: Option<PathBuf>, config: &Option<PathBuf>, name: &str) -> CliResult<PathBuf> {
    flag.or_else(|| config.clone())
        .ok_or_else(|| CliError::Usage(format!("missing --{name} (or paths.{} in the config)", name.replace('-', "_"))))
}

pub fn out_dir(cfg: &RunConfig) -> CliResult<OutDir> {
    OutDir::create(cfg.paths.out_dir.as_deref().unwrap_or(Path::new(".")))
}

pub fn read_lexicon(path: &Path, inputs: &mut Vec<InputDigest>) -> CliResult<Lexicon<f64>> {
    let bytes = read_input(path, inputs)?;
    parse_lexicon_tsv(bytes.as_slice()).map_err(|e| CliError::at(path, e))
}

/// Records for `dim` from every file, in file order.
pub fn read_annotations(
    paths: &[PathBuf],
    dim: Dimension,
    inputs: &mut Vec<InputDigest>,
) -> CliResult<(Vec<AnnotationRecord>, usize)> {
    let mut kept = Vec::new();
    let mut other = 0;
    for path in paths {
        let bytes = read_input(path, inputs)?;
        for r in parse_annotations_csv(bytes.as_slice()).map_err(|e| CliError::at(path, e))? {
            if r.dimension() == dim {
                kept.push(r);
            } else {
                other += 1;
            }
        }
    }
    Ok((kept, other))
}

/// Annotation files from the command line, else from the config.
pub fn annotation_paths(files: Vec<PathBuf>, cfg: &RunConfig) -> CliResult<Vec<PathBuf>> {
    let paths = if files.is_empty() { cfg.paths.annotations.clone() } else { files };
    if paths.is_empty() {
        return Err(CliError::Usage("no annotation files given".into()));
    }
    Ok(paths)
}

pub fn facet(dim: Dimension) -> CliResult<Dimension> {
    match dim {
        Dimension::Trust | Dimension::Sociability => Ok(dim),
        other => Err(CliError::Usage(format!("annotations cover trust or sociability, not {other}"))),
    }
}

/// Requested dimensions, defaulting to every dimension the lexicon scores.
pub fn dimensions(requested: Vec<Dimension>, lex: &Lexicon<f64>) -> CliResult<Vec<Dimension>> {
    let mut dims = if requested.is_empty() {
        Dimension::ALL.into_iter().filter(|&d| lex.has_dimension(d)).collect()
    } else {
        requested
    };
    dims.sort();
    dims.dedup();
    if let Some(d) = dims.iter().find(|&&d| !lex.has_dimension(d)) {
        return Err(CliError::Data(format!("lexicon has no {d} scores")));
    }
    if dims.is_empty() {
        return Err(CliError::Data("lexicon has no scores".into()));
    }
    Ok(dims)
}

pub fn csv_writer(buf: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(buf)
}

/// Finishes a CSV writer into its buffer.
pub fn finish(wtr: csv::Writer<&mut Vec<u8>>) -> CliResult<()> {
    wtr.into_inner().map(|_| ()).map_err(|e| CliError::Io(e.to_string()))
}

pub fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}
