//! Run configuration read from TOML.
//!
//! ```toml
//! [operator]
//! family = "double_gaussian"   # harmonic | gaussian_bump | double_gaussian
//! alpha = 36.787944117144235   # 100/e
//! beta = 10.0
//! gamma = 0.03
//!
//! [run]
//! m_range = [30, 32, 34]
//! grid_points = 4001
//! output_dir = "out"
//! ```
//!
//! Every key has a default equal to the value used for the published runs.

use std::f64::consts::{E, FRAC_PI_8};
use std::path::{Path, PathBuf};

use jwkb_core::modefit::CutoffInit;
use jwkb_core::potentials::PotentialSpec;
use jwkb_core::Complex64;
use serde::{Deserialize, Serialize};

/// Operator family names accepted in `[operator] family`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    /// `W = (c x)²`.
    Harmonic,
    /// `V(x) = x² exp(-x²/b²)` dilated by `c`.
    GaussianBump,
    /// `V(x) = α (exp(-γ(x-β)²) + exp(-γ(x+β)²))` dilated by `c`.
    DoubleGaussian,
}

/// `[operator]` section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OperatorConfig {
    /// Potential family.
    pub family: FamilyName,
    /// Bump width `b`.
    pub b: f64,
    /// Double-well height `α`.
    pub alpha: f64,
    /// Double-well offset `β`.
    pub beta: f64,
    /// Double-well stiffness `γ`.
    pub gamma: f64,
    /// `arg c`.
    pub c_angle: f64,
    /// `|c|`.
    pub c_modulus: f64,
}

impl Default for OperatorConfig {
    fn default() -> Self {
        Self {
            family: FamilyName::DoubleGaussian,
            b: 10.0,
            alpha: 100.0 / E,
            beta: 10.0,
            gamma: 0.03,
            c_angle: FRAC_PI_8,
            c_modulus: 1.0,
        }
    }
}

impl OperatorConfig {
    /// Operator of the given family with all other keys at their defaults.
    pub fn of(family: FamilyName) -> Self {
        Self {
            family,
            ..Self::default()
        }
    }

    /// The dilation parameter `c`.
    pub fn c(&self) -> Complex64 {
        Complex64::from_polar(self.c_modulus, self.c_angle)
    }

    /// Core potential description.
    pub fn spec(&self) -> jwkb_core::Result<PotentialSpec> {
        match self.family {
            FamilyName::Harmonic => PotentialSpec::harmonic(self.c()),
            FamilyName::GaussianBump => PotentialSpec::gaussian_bump(self.b, self.c()),
            FamilyName::DoubleGaussian => {
                PotentialSpec::double_gaussian(self.alpha, self.beta, self.gamma, self.c())
            }
        }
    }

    /// Short name used in file names.
    pub fn label(&self) -> String {
        match self.family {
            FamilyName::Harmonic => "harmonic".into(),
            FamilyName::GaussianBump => format!("gaussian_bump_b{}", self.b),
            FamilyName::DoubleGaussian => "double_gaussian".into(),
        }
    }
}

/// `[run]` section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunSection {
    /// Eigenvalue indices, strictly increasing. Empty selects the default of
    /// the table or command being run.
    pub m_range: Vec<usize>,
    /// Eigenfunction and mode grid size.
    pub grid_points: usize,
    /// Truncation radius `X`; chosen from the potential when absent.
    pub truncation_radius: Option<f64>,
    /// Semiclassical parameter of the modes.
    pub jwkb_h: f64,
    /// Eigenvalue seeds `[re, im]`, one per entry of `m_range`; bypasses the
    /// index march.
    pub seeds: Option<Vec<[f64; 2]>>,
    /// Directory receiving the CSV files.
    pub output_dir: PathBuf,
}

impl Default for RunSection {
    fn default() -> Self {
        Self {
            m_range: Vec::new(),
            grid_points: 4001,
            truncation_radius: None,
            jwkb_h: 1.0,
            seeds: None,
            output_dir: PathBuf::from("out"),
        }
    }
}

/// Cut-off seeding rule names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum CutoffInitName {
    /// Largest `|Re y'/y|` with the decaying sign.
    #[default]
    LogDerivativePeak,
    /// Nearest local minima of `|y|`.
    LocalMinimum,
}

impl From<CutoffInitName> for CutoffInit {
    fn from(value: CutoffInitName) -> Self {
        match value {
            CutoffInitName::LogDerivativePeak => CutoffInit::LogDerivativePeak,
            CutoffInitName::LocalMinimum => CutoffInit::LocalMinimum,
        }
    }
}

/// `[fit]` section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FitSection {
    /// Largest number of modes combined.
    pub max_modes: usize,
    /// Cut-off seeding rule.
    pub cutoff_init: CutoffInitName,
    /// Nelder–Mead evaluation budget per run.
    pub max_evals: usize,
    /// Replace each eigenfunction by its own first cut mode (a sanity run
    /// whose `Δ` must vanish).
    pub self_fit: bool,
}

impl Default for FitSection {
    fn default() -> Self {
        Self {
            max_modes: 2,
            cutoff_init: CutoffInitName::default(),
            max_evals: 2000,
            self_fit: false,
        }
    }
}

/// Full run configuration.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Operator selection.
    pub operator: OperatorConfig,
    /// Indices, grids and output.
    pub run: RunSection,
    /// Mode fitting.
    pub fit: FitSection,
}

/// Configuration problems.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    /// Unreadable file.
    #[error("cannot read {path}: {source}")]
    Io {
        /// File.
        path: PathBuf,
        /// Cause.
        source: std::io::Error,
    },
    /// Malformed TOML or unknown key.
    #[error("invalid config: {0}")]
    Parse(#[from] toml::de::Error),
    /// A value outside its admissible range.
    #[error("invalid config: {0}")]
    Invalid(String),
}

impl RunConfig {
    /// Parses and validates TOML text.
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let config: RunConfig = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Reads and validates a TOML file.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.into(),
            source,
        })?;
        Self::from_toml(&text)
    }

    /// TOML rendering, accepted back by [`RunConfig::from_toml`].
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Checks positivity, ordering and seed count.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |msg: &str| Err(ConfigError::Invalid(msg.into()));
        let op = &self.operator;
        let positive = |v: f64| v > 0.0 && v.is_finite();
        if !(positive(op.b)
            && positive(op.alpha)
            && positive(op.beta)
            && positive(op.gamma)
            && positive(op.c_modulus))
        {
            return bad("operator parameters must be positive");
        }
        if !(op.c_angle >= 0.0 && op.c_angle <= std::f64::consts::FRAC_PI_4) {
            return bad("c_angle must lie in [0, π/4]");
        }
        if let Err(e) = op.spec() {
            return Err(ConfigError::Invalid(e.to_string()));
        }
        let run = &self.run;
        if run.grid_points < 4000 || run.grid_points > 100_000 {
            return bad("grid_points must lie in [4000, 100000]");
        }
        if run.truncation_radius.is_some_and(|x| !positive(x)) {
            return bad("truncation_radius must be positive");
        }
        if !positive(run.jwkb_h) {
            return bad("jwkb_h must be positive");
        }
        if run.m_range.windows(2).any(|w| w[1] <= w[0]) {
            return bad("m_range must be strictly increasing");
        }
        if let Some(seeds) = &run.seeds {
            if seeds.len() != run.m_range.len() {
                return bad("seeds needs one entry per m_range index");
            }
            if seeds.iter().flatten().any(|v| !v.is_finite()) {
                return bad("seeds must be finite");
            }
        }
        if self.fit.max_modes == 0 || self.fit.max_evals == 0 {
            return bad("max_modes and max_evals must be positive");
        }
        Ok(())
    }

    /// `m_range`, or `default` when the config leaves it empty.
    pub fn indices_or(&self, default: &[usize]) -> Vec<usize> {
        if self.run.m_range.is_empty() {
            default.to_vec()
        } else {
            self.run.m_range.clone()
        }
    }
}

/// Even indices `lo, lo + 2, …, hi`.
pub fn even_range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).step_by(2).collect()
}
