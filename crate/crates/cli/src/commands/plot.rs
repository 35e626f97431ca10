use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use wcts::aoa::PROFILE_CSV_HEADER;
use wcts::corpus::quadrant;
use wcts::Dimension;

use super::{csv_err, csv_writer, finish, out_dir};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::meta::{read_input, InputDigest, Metadata};
use crate::svg::{Point, Scatter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Co-term scores, with corpus baselines as the reference point.
    Coterm,
    /// Lexicon scores, with the scale midpoints as the reference point.
    Direct,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// `report.json` from `score`; drawn on the warmth-competence plane.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// `aoa_profile.csv` from `aoa`; converted to stream-chart layers.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// `ts_scatter.csv` from `merge`; drawn on the trust-sociability plane.
    #[arg(long)]
    pub scatter: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "coterm")]
    pub mode: Mode,
}

#[derive(Deserialize)]
struct ScoreIn {
    score: f64,
    degenerate: bool,
}

#[derive(Deserialize)]
struct BaselinesIn {
    by_dimension: BTreeMap<Dimension, ScoreIn>,
}

#[derive(Deserialize)]
struct TargetIn {
    target: String,
    direct: BTreeMap<Dimension, Option<f64>>,
    coterm: BTreeMap<Dimension, ScoreIn>,
}

#[derive(Deserialize)]
struct ReportIn {
    baselines: BaselinesIn,
    targets: Vec<TargetIn>,
}

fn malformed(path: &Path, what: impl std::fmt::Display) -> CliError {
    CliError::Data(format!("{}: malformed input: {what}", path.display()))
}

/// Warmth-competence points and the reference point for one report.
fn wc_points(report: &ReportIn, mode: Mode, path: &Path) -> CliResult<(Vec<Point>, (f64, f64))> {
    let origin = match mode {
        Mode::Direct => (0.0, 0.0),
        Mode::Coterm => {
            let base = |dim: Dimension| -> CliResult<f64> {
                match report.baselines.by_dimension.get(&dim) {
                    Some(b) if !b.degenerate => Ok(b.score),
                    Some(_) => Err(malformed(path, format!("{dim} baseline is degenerate"))),
                    None => Err(malformed(path, format!("no {dim} baseline"))),
                }
            };
            (base(Dimension::Warmth)?, base(Dimension::Competence)?)
        }
    };
    let score = |t: &TargetIn, dim: Dimension| -> Option<f64> {
        match mode {
            Mode::Direct => t.direct.get(&dim).copied().flatten(),
            Mode::Coterm => t.coterm.get(&dim).filter(|s| !s.degenerate).map(|s| s.score),
        }
    };
    let points = report
        .targets
        .iter()
        .filter_map(|t| {
            let (w, c) = (score(t, Dimension::Warmth)?, score(t, Dimension::Competence)?);
            Some(Point {
                label: t.target.clone(),
                x: w,
                y: c,
                class: Some(quadrant(w, c, origin.0, origin.1).as_str().to_string()),
            })
        })
        .collect();
    Ok((points, origin))
}

/// Reads a `#`-commented CSV, checks its header and returns its rows.
fn read_csv(path: &Path, header: &[&str], inputs: &mut Vec<InputDigest>) -> CliResult<Vec<csv::StringRecord>> {
    let bytes = read_input(path, inputs)?;
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(bytes.as_slice());
    let found = rdr.headers().map_err(|e| malformed(path, e))?;
    if found.iter().ne(header.iter().copied()) {
        return Err(malformed(path, format!("expected header {}", header.join(","))));
    }
    rdr.records().map(|r| r.map_err(|e| malformed(path, e))).collect()
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, path: &Path) -> CliResult<T> {
    let line = rec.position().map_or(0, |p| p.line());
    rec[i]
        .parse()
        .map_err(|_| malformed(path, format!("line {line}: bad value {:?}", &rec[i])))
}

pub fn run(args: Args, cfg: RunConfig) -> CliResult<Vec<PathBuf>> {
    if args.report.is_none() && args.profile.is_none() && args.scatter.is_none() {
        return Err(CliError::Usage("plot needs at least one of --report, --profile, --scatter".into()));
    }
    let mut out = out_dir(&cfg)?;

    if let Some(path) = &args.report {
        let mut inputs = Vec::new();
        let bytes = read_input(path, &mut inputs)?;
        let report: ReportIn = serde_json::from_slice(&bytes).map_err(|e| malformed(path, e))?;
        let (points, origin) = wc_points(&report, args.mode, path)?;
        let meta = Metadata::new("plot", &cfg, inputs);

        let mut buf = Vec::new();
        let mut wtr = csv_writer(&mut buf);
        wtr.write_record(["target", "warmth", "competence", "quadrant"]).map_err(csv_err)?;
        wtr.write_record([super::score::BASELINE_TARGET, &origin.0.to_string(), &origin.1.to_string(), ""])
            .map_err(csv_err)?;
        for p in &points {
            let q = p.class.as_deref().unwrap_or("");
            wtr.write_record([p.label.as_str(), &p.x.to_string(), &p.y.to_string(), q]).map_err(csv_err)?;
        }
        finish(wtr)?;

        let title = match args.mode {
            Mode::Coterm => "Co-term warmth and competence",
            Mode::Direct => "Direct warmth and competence",
        };
        let svg = Scatter {
            title: title.into(),
            x_label: "warmth".into(),
            y_label: "competence".into(),
            points,
            origin,
            shade_quadrants: true,
        }
        .render(&meta.comment_lines());
        out.write("wc_plot.svg", svg.as_bytes())?;
        out.write_text("wc_points.csv", &meta, &buf)?;
    }

    if let Some(path) = &args.profile {
        let mut inputs = Vec::new();
        let header: Vec<&str> = PROFILE_CSV_HEADER.split(',').collect();
        let rows = read_csv(path, &header, &mut inputs)?;
        let meta = Metadata::new("plot", &cfg, inputs);

        let mut buf = Vec::new();
        let mut wtr = csv_writer(&mut buf);
        wtr.write_record(["dimension", "age", "layer", "y0", "y1", "n_words"]).map_err(csv_err)?;
        for rec in &rows {
            let dim: Dimension = field(rec, 0, path)?;
            let age: i32 = field(rec, 1, path)?;
            let (high, low, neutral): (f64, f64, f64) = (field(rec, 2, path)?, field(rec, 3, path)?, field(rec, 4, path)?);
            let n: usize = field(rec, 5, path)?;
            let mut y0 = 0.0;
            for (layer, pct) in [("low", low), ("neutral", neutral), ("high", high)] {
                let y1 = y0 + pct;
                wtr.write_record([dim.as_str(), &age.to_string(), layer, &y0.to_string(), &y1.to_string(), &n.to_string()])
                    .map_err(csv_err)?;
                y0 = y1;
            }
        }
        finish(wtr)?;
        out.write_text("aoa_stream.csv", &meta, &buf)?;
    }

    if let Some(path) = &args.scatter {
        let mut inputs = Vec::new();
        let rows = read_csv(path, &["term", "trust", "sociability", "warmth", "source"], &mut inputs)?;
        let meta = Metadata::new("plot", &cfg, inputs);

        let mut points = Vec::with_capacity(rows.len());
        let mut buf = Vec::new();
        let mut wtr = csv_writer(&mut buf);
        wtr.write_record(["term", "trust", "sociability", "source"]).map_err(csv_err)?;
        for rec in &rows {
            let (t, s): (f64, f64) = (field(rec, 1, path)?, field(rec, 2, path)?);
            wtr.write_record([&rec[0], &t.to_string(), &s.to_string(), &rec[4]]).map_err(csv_err)?;
            points.push(Point {
                label: rec[0].to_string(),
                x: t,
                y: s,
                class: Some(rec[4].to_string()),
            });
        }
        finish(wtr)?;
        let svg = Scatter {
            title: "Trust and sociability".into(),
            x_label: "trust".into(),
            y_label: "sociability".into(),
            points,
            origin: (0.0, 0.0),
            shade_quadrants: false,
        }
        .render(&meta.comment_lines());
        out.write("ts_plot.svg", svg.as_bytes())?;
        out.write_text("ts_points.csv", &meta, &buf)?;
    }
    Ok(out.written().to_vec())
}
