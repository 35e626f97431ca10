//! Run configuration: every threshold and flag in one schema.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wcts::annotation::QcConfig;
use wcts::aoa::ProfileConfig;
use wcts::corpus::{CountingConfig, Denominator, DEFAULT_MIN_GROUP_DOCS};
use wcts::lexicon::{BinEdges, PolarityCutoffs};
use wcts::reliability::DEFAULT_TRIALS;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub bins: BinEdges,
    pub polarity: PolarityCutoffs,
    pub qc: QcConfig,
    pub reliability: ReliabilityConfig,
    pub corpus: CorpusConfig,
    pub aoa: ProfileConfig,
    /// Input and output locations; never echoed into outputs or hashed.
    #[serde(skip_serializing)]
    pub paths: Paths,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReliabilityConfig {
    pub trials: usize,
    /// Skip annotator filtering before computing reliability.
    pub raw: bool,
}

impl Default for ReliabilityConfig {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            raw: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub denominator: Denominator,
    pub exclude_target: bool,
    pub min_group_docs: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            denominator: Denominator::AllTokens,
            exclude_target: true,
            min_group_docs: DEFAULT_MIN_GROUP_DOCS,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Paths {
    pub trust_lexicon: Option<PathBuf>,
    pub sociability_lexicon: Option<PathBuf>,
    pub competence_lexicon: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub annotations: Vec<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub targets: Option<PathBuf>,
    pub aoa: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
}

impl RunConfig {
    /// Loads a TOML config; relative paths inside it resolve against the
    /// config file's directory.
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg: RunConfig =
            toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new(""));
        cfg.paths.resolve(base);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> CliResult<()> {
        self.bins.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        self.polarity.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        if self.reliability.trials == 0 {
            return Err(CliError::Usage("reliability.trials must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.qc.accuracy_floor) {
            return Err(CliError::Usage("qc.accuracy_floor must lie in [0, 1]".into()));
        }
        Ok(())
    }

    pub fn counting(&self) -> CountingConfig {
        CountingConfig {
            denominator: self.corpus.denominator,
            exclude_target: self.corpus.exclude_target,
            cutoffs: self.polarity,
        }
    }

    /// Canonical JSON of every setting except paths.
    pub fn canonical_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serializes")
    }

    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(&self.canonical_json()).expect("config serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

impl Paths {
    fn resolve(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        for p in [
            &mut self.trust_lexicon,
            &mut self.sociability_lexicon,
            &mut self.competence_lexicon,
            &mut self.lexicon,
            &mut self.corpus,
            &mut self.targets,
            &mut self.aoa,
            &mut self.out_dir,
        ]
        .into_iter()
        .flatten()
        {
            fix(p);
        }
        self.annotations.iter_mut().for_each(fix);
    }
}
