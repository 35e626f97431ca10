//! `wcts`: build, validate and apply warmth/competence/trust/sociability
//! lexicons from the command line.

mod commands;
mod config;
mod error;
mod meta;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{aoa, build, merge, plot, score, validate};
use crate::config::RunConfig;
use crate::error::CliResult;

#[derive(Debug, Parser)]
#[command(name = "wcts", version, about = "Warmth, competence, trust and sociability lexicon toolkit")]
struct Cli {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Random seed for reliability trials.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
    /// Output directory (default: config `paths.out_dir`, else the current directory).
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Aggregate crowd annotations into a trust or sociability lexicon.
    Build(build::Args),
    /// Union trust and sociability lexicons into a warmth lexicon.
    Merge(merge::Args),
    /// Split-half reliability of a set of annotations.
    Validate(validate::Args),
    /// Direct and co-term scores for targets in a corpus.
    Score(score::Args),
    /// Age-of-acquisition profiles of a lexicon.
    Aoa(aoa::Args),
    /// Render SVG scatter plots and plot-ready CSV from earlier outputs.
    Plot(plot::Args),
}

fn load_config(cli: &Cli) -> CliResult<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &cli.out {
        cfg.paths.out_dir = Some(out.clone());
    }
    Ok(cfg)
}

fn run(cli: Cli) -> CliResult<()> {
    let cfg = load_config(&cli)?;
    let written = match cli.command {
        Command::Build(args) => build::run(args, cfg)?,
        Command::Merge(args) => merge::run(args, cfg)?,
        Command::Validate(args) => validate::run(args, cfg)?,
        Command::Score(args) => score::run(args, cfg)?,
        Command::Aoa(args) => aoa::run(args, cfg)?,
        Command::Plot(args) => plot::run(args, cfg)?,
    };
    for path in written {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wcts: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn global_flags_override_config() {
        let cli = Cli::try_parse_from(["wcts", "--seed", "7", "validate", "--dimension", "trust", "--out", "x", "a.csv"])
            .unwrap();
        let cfg = load_config(&cli).unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.paths.out_dir.as_deref(), Some(std::path::Path::new("x")));
    }
}
