//! Helpers shared by the command-line test targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    #[track_caller]
    pub fn ok(self) -> Self {
        assert_eq!(self.code, 0, "stderr: {}", self.stderr);
        self
    }
}

pub fn wcts<I, S>(args: I) -> Run
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_wcts"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: status.code().expect("exited normally"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

/// Text without the `# key: value` metadata lines (provenance is kept).
pub fn body(path: &Path) -> String {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .filter(|l| !l.starts_with('#') || l.starts_with("# provenance:"))
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Rows of a metadata-prefixed CSV, header included.
pub fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    body(path)
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

/// Runs the whole pipeline on the shipped fixtures into `out`.
pub fn golden_run(out: &Path) {
    let o = out.to_str().unwrap();
    let lex = out.join("wcts_lexicon.tsv");
    let lex = lex.to_str().unwrap();
    let f = |n: &str| fixture(n).to_str().unwrap().to_string();
    let p = |n: &str| out.join(n).to_str().unwrap().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["build".into(), "--dimension".into(), "trust".into(), f("annotations_trust.csv")],
        vec!["build".into(), "--dimension".into(), "sociability".into(), f("annotations_sociability.csv")],
        vec![
            "merge".into(),
            "--trust".into(),
            p("trust.tsv"),
            "--sociability".into(),
            p("sociability.tsv"),
            "--competence".into(),
            f("competence.tsv"),
        ],
        vec!["validate".into(), "--dimension".into(), "trust".into(), "--trials".into(), "200".into(), f("annotations_trust.csv")],
        vec!["validate".into(), "--dimension".into(), "sociability".into(), "--trials".into(), "200".into(), f("annotations_sociability.csv")],
        vec![
            "score".into(),
            "--lexicon".into(),
            lex.into(),
            "--corpus".into(),
            f("corpus.jsonl"),
            "--targets".into(),
            f("targets.json"),
            "--group-by".into(),
            "year".into(),
            "--ingroup-outgroup".into(),
            "us=america,ca=canada".into(),
        ],
        vec!["aoa".into(), "--lexicon".into(), lex.into(), "--aoa".into(), f("aoa.csv")],
        vec![
            "plot".into(),
            "--report".into(),
            p("report.json"),
            "--profile".into(),
            p("aoa_profile.csv"),
            "--scatter".into(),
            p("ts_scatter.csv"),
        ],
    ];
    for args in runs {
        let mut full = vec!["--seed".to_string(), "2024".into(), "--out".into(), o.into()];
        full.extend(args);
        wcts(&full).ok();
    }
}
