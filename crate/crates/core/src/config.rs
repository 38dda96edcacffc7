//! Pipeline configuration: one TOML file drives every stage.
//!
//! Sections may be omitted entirely (code defaults apply), but a section
//! that is present must state its own seed — no seed is ever taken from the
//! clock. Relative paths are resolved against the config file's directory.
//! Validation failures name the offending field so the CLI can report them
//! at exit code 2.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::analysis::{default_alpha, DEFAULT_BETA, DEFAULT_LDA_ITERS, DEFAULT_TOPICS};
use crate::classifier::{LinearHyper, SequenceHyper};
use crate::cohort::{LabelSchema, SamplingConfig};
use crate::encoder::{EncoderBackend, EncoderSpec, DEFAULT_HASHING_DIM, DEFAULT_MAX_TOKENS};
use crate::synth::{SynthConfig, SynthVariant, DEFAULT_SYNTH_USERS};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: &str, message: impl fmt::Display) -> ConfigError {
    ConfigError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

/// A numeric setting that may instead be derived from the data ("auto").
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AutoOr {
    Auto,
    Value(f64),
}

impl AutoOr {
    pub fn resolve(self, auto: f64) -> f64 {
        match self {
            AutoOr::Auto => auto,
            AutoOr::Value(v) => v,
        }
    }
}

impl Serialize for AutoOr {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            AutoOr::Auto => ser.serialize_str("auto"),
            AutoOr::Value(v) => ser.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for AutoOr {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(v) => Ok(AutoOr::Value(v)),
            Raw::Str(s) if s.eq_ignore_ascii_case("auto") => Ok(AutoOr::Auto),
            Raw::Str(s) => Err(D::Error::custom(format!(
                "expected a number or \"auto\", got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSection {
    #[serde(default)]
    pub submissions: Vec<PathBuf>,
    #[serde(default)]
    pub comments: Vec<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemaSection {
    pub target_subreddit: String,
    pub neutral_subreddits: Vec<String>,
}

impl Default for SchemaSection {
    fn default() -> Self {
        let schema = LabelSchema::default();
        SchemaSection {
            target_subreddit: schema.target_subreddit,
            neutral_subreddits: schema.neutral_subreddits.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplingSection {
    /// Target mean post count; "auto" uses the antiwork-class mean.
    #[serde(default = "auto")]
    pub mu: AutoOr,
    /// Weight spread; "auto" uses the antiwork-class standard deviation.
    #[serde(default = "auto")]
    pub sigma: AutoOr,
    pub seed: u64,
}

fn auto() -> AutoOr {
    AutoOr::Auto
}

impl Default for SamplingSection {
    fn default() -> Self {
        SamplingSection {
            mu: AutoOr::Auto,
            sigma: AutoOr::Auto,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitSection {
    #[serde(default = "default_ratio")]
    pub ratio: f64,
    pub seed: u64,
}

fn default_ratio() -> f64 {
    0.75
}

impl Default for SplitSection {
    fn default() -> Self {
        SplitSection {
            ratio: 0.75,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EncoderSection {
    #[serde(default = "default_backend")]
    pub backend: EncoderBackend,
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default = "default_max_tokens")]
    pub max_tokens: usize,
    /// Checkpoint name for the transformer backend; ignored by hashing.
    #[serde(default = "default_model_name")]
    pub model_name: String,
    pub seed: u64,
}

fn default_backend() -> EncoderBackend {
    EncoderBackend::Hashing
}
fn default_dim() -> usize {
    DEFAULT_HASHING_DIM
}
fn default_max_tokens() -> usize {
    DEFAULT_MAX_TOKENS
}
fn default_model_name() -> String {
    "roberta-base".to_string()
}

impl Default for EncoderSection {
    fn default() -> Self {
        EncoderSection {
            backend: default_backend(),
            dim: default_dim(),
            max_tokens: default_max_tokens(),
            model_name: default_model_name(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    #[serde(default = "default_hidden")]
    pub hidden: usize,
    #[serde(default = "default_epochs")]
    pub epochs: usize,
    #[serde(default = "default_lr")]
    pub lr: f64,
    #[serde(default = "default_clip")]
    pub grad_clip: f64,
    pub seed: u64,
}

fn default_hidden() -> usize {
    32
}
fn default_epochs() -> usize {
    20
}
fn default_lr() -> f64 {
    1e-2
}
fn default_clip() -> f64 {
    5.0
}

impl Default for ModelSection {
    fn default() -> Self {
        ModelSection {
            hidden: default_hidden(),
            epochs: default_epochs(),
            lr: default_lr(),
            grad_clip: default_clip(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSection {
    #[serde(default = "default_l2")]
    pub l2: f64,
    #[serde(default = "default_linear_epochs")]
    pub epochs: usize,
    #[serde(default = "default_linear_lr")]
    pub lr: f64,
    pub seed: u64,
}

fn default_l2() -> f64 {
    1e-3
}
fn default_linear_epochs() -> usize {
    200
}
fn default_linear_lr() -> f64 {
    0.1
}

impl Default for LinearSection {
    fn default() -> Self {
        LinearSection {
            l2: default_l2(),
            epochs: default_linear_epochs(),
            lr: default_linear_lr(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttributionSection {
    #[serde(default = "default_steps")]
    pub steps: usize,
}

fn default_steps() -> usize {
    128
}

impl Default for AttributionSection {
    fn default() -> Self {
        AttributionSection {
            steps: default_steps(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSection {
    /// Category lexicon file; the built-in lexicon is used when absent.
    #[serde(default)]
    pub lexicon: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LdaSection {
    #[serde(default = "default_topics")]
    pub topics: usize,
    /// Document prior; "auto" means 50/K.
    #[serde(default = "auto")]
    pub alpha: AutoOr,
    #[serde(default = "default_beta")]
    pub beta: f64,
    #[serde(default = "default_iters")]
    pub iters: usize,
    pub seed: u64,
}

fn default_topics() -> usize {
    DEFAULT_TOPICS
}
fn default_beta() -> f64 {
    DEFAULT_BETA
}
fn default_iters() -> usize {
    DEFAULT_LDA_ITERS
}

impl Default for LdaSection {
    fn default() -> Self {
        LdaSection {
            topics: default_topics(),
            alpha: AutoOr::Auto,
            beta: default_beta(),
            iters: default_iters(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthSection {
    #[serde(default = "default_synth_users")]
    pub users: usize,
    #[serde(default = "default_variant")]
    pub variant: SynthVariant,
    pub seed: u64,
}

fn default_synth_users() -> usize {
    DEFAULT_SYNTH_USERS
}
fn default_variant() -> SynthVariant {
    SynthVariant::Mixed
}

impl Default for SynthSection {
    fn default() -> Self {
        SynthSection {
            users: default_synth_users(),
            variant: default_variant(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    pub output_dir: PathBuf,
    #[serde(default)]
    pub input: InputSection,
    #[serde(default)]
    pub schema: SchemaSection,
    #[serde(default)]
    pub sampling: SamplingSection,
    #[serde(default)]
    pub split: SplitSection,
    #[serde(default)]
    pub encoder: EncoderSection,
    #[serde(default)]
    pub model: ModelSection,
    #[serde(default)]
    pub linear: LinearSection,
    #[serde(default)]
    pub attribution: AttributionSection,
    #[serde(default)]
    pub analysis: AnalysisSection,
    #[serde(default)]
    pub lda: LdaSection,
    #[serde(default)]
    pub synth: SynthSection,
}

impl PipelineConfig {
    /// Read, parse, resolve relative paths against the config's directory,
    /// and validate.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::from_toml(&text, base)
    }

    /// Parse from a string; `base` anchors relative paths.
    pub fn from_toml(text: &str, base: &Path) -> Result<Self, ConfigError> {
        let mut cfg: PipelineConfig =
            toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.resolve_paths(base);
        cfg.validate()?;
        Ok(cfg)
    }

    fn resolve_paths(&mut self, base: &Path) {
        let anchor = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&p);
            }
        };
        anchor(&mut self.output_dir);
        self.input.submissions.iter_mut().for_each(anchor);
        self.input.comments.iter_mut().for_each(anchor);
        if let Some(p) = self.analysis.lexicon.as_mut() {
            anchor(p);
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.output_dir.as_os_str().is_empty() {
            return Err(field_err("output_dir", "must not be empty"));
        }
        if self.output_dir.exists() && !self.output_dir.is_dir() {
            return Err(field_err("output_dir", "exists but is not a directory"));
        }
        for (name, paths) in [
            ("input.submissions", &self.input.submissions),
            ("input.comments", &self.input.comments),
        ] {
            for p in paths {
                if !p.is_file() {
                    return Err(field_err(name, format!("no such file: {}", p.display())));
                }
            }
        }
        self.schema_config()?;
        if let AutoOr::Value(mu) = self.sampling.mu {
            if !mu.is_finite() {
                return Err(field_err("sampling.mu", "must be finite"));
            }
        }
        if let AutoOr::Value(sigma) = self.sampling.sigma {
            if !(sigma > 0.0 && sigma.is_finite()) {
                return Err(field_err("sampling.sigma", "must be a positive number"));
            }
        }
        if !(self.split.ratio > 0.0 && self.split.ratio < 1.0) {
            return Err(field_err("split.ratio", "must lie strictly between 0 and 1"));
        }
        self.encoder_spec()
            .validate()
            .map_err(|e| field_err("encoder", e))?;
        if self.model.hidden == 0 {
            return Err(field_err("model.hidden", "must be positive"));
        }
        if self.model.epochs == 0 {
            return Err(field_err("model.epochs", "must be positive"));
        }
        if !(self.model.lr > 0.0 && self.model.lr.is_finite()) {
            return Err(field_err("model.lr", "must be a positive number"));
        }
        if !(self.model.grad_clip > 0.0) {
            return Err(field_err("model.grad_clip", "must be positive"));
        }
        if self.linear.l2 < 0.0 {
            return Err(field_err("linear.l2", "must be non-negative"));
        }
        if self.linear.epochs == 0 {
            return Err(field_err("linear.epochs", "must be positive"));
        }
        if !(self.linear.lr > 0.0 && self.linear.lr.is_finite()) {
            return Err(field_err("linear.lr", "must be a positive number"));
        }
        if self.attribution.steps == 0 {
            return Err(field_err("attribution.steps", "must be positive"));
        }
        if let Some(p) = &self.analysis.lexicon {
            if !p.is_file() {
                return Err(field_err(
                    "analysis.lexicon",
                    format!("no such file: {}", p.display()),
                ));
            }
        }
        if self.lda.topics < 2 {
            return Err(field_err("lda.topics", "need at least 2 topics"));
        }
        if let AutoOr::Value(alpha) = self.lda.alpha {
            if !(alpha > 0.0 && alpha.is_finite()) {
                return Err(field_err("lda.alpha", "must be a positive number"));
            }
        }
        if !(self.lda.beta > 0.0 && self.lda.beta.is_finite()) {
            return Err(field_err("lda.beta", "must be a positive number"));
        }
        if self.lda.iters == 0 {
            return Err(field_err("lda.iters", "must be positive"));
        }
        if self.synth.users < 2 {
            return Err(field_err("synth.users", "need at least 2 users"));
        }
        Ok(())
    }

    pub fn schema_config(&self) -> Result<LabelSchema, ConfigError> {
        LabelSchema::new(
            self.schema.target_subreddit.clone(),
            self.schema.neutral_subreddits.iter().cloned(),
        )
        .map_err(|e| field_err("schema", e))
    }

    pub fn encoder_spec(&self) -> EncoderSpec {
        EncoderSpec {
            backend: self.encoder.backend,
            dim: self.encoder.dim,
            max_tokens: self.encoder.max_tokens,
        }
    }

    /// Concrete sampler parameters; `auto_stats` supplies the (mu, sigma)
    /// measured on the antiwork class, `n_samples` the cohort size to match.
    pub fn sampling_config(&self, auto_stats: (f64, f64), n_samples: usize) -> SamplingConfig {
        SamplingConfig {
            mu: self.sampling.mu.resolve(auto_stats.0),
            sigma: self.sampling.sigma.resolve(auto_stats.1),
            n_samples,
            seed: self.sampling.seed,
        }
    }

    pub fn sequence_hyper(&self) -> SequenceHyper {
        SequenceHyper {
            lr: self.model.lr,
            epochs: self.model.epochs,
            hidden: self.model.hidden,
            seed: self.model.seed,
            grad_clip: self.model.grad_clip,
        }
    }

    pub fn linear_hyper(&self) -> LinearHyper {
        LinearHyper {
            l2: self.linear.l2,
            epochs: self.linear.epochs,
            lr: self.linear.lr,
            seed: self.linear.seed,
        }
    }

    pub fn lda_alpha(&self) -> f64 {
        self.lda.alpha.resolve(default_alpha(self.lda.topics))
    }

    pub fn synth_config(&self) -> SynthConfig {
        SynthConfig {
            n_users: self.synth.users,
            variant: self.synth.variant,
            seed: self.synth.seed,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    /// Set every stage seed to one value — the `--seed` flag's semantics.
    pub fn override_seeds(&mut self, seed: u64) {
        self.sampling.seed = seed;
        self.split.seed = seed;
        self.encoder.seed = seed;
        self.model.seed = seed;
        self.linear.seed = seed;
        self.lda.seed = seed;
        self.synth.seed = seed;
    }
}

/// A fully commented template with every section present.
pub fn example_toml() -> &'static str {
    r#"# Every stage reads this one file. Omitted sections fall back to the
# defaults shown here, except that a section written out must state its seed.
output_dir = "out"

[input]
submissions = []  # newline-delimited JSON dump files (title + selftext)
comments = []     # newline-delimited JSON dump files (body)

[schema]
target_subreddit = "antiwork"
neutral_subreddits = ["recruiting", "recruitinghell", "work", "jobs"]

[sampling]
mu = "auto"     # mean post count to match; "auto" = antiwork-class mean
sigma = "auto"  # spread; "auto" = antiwork-class standard deviation
seed = 0

[split]
ratio = 0.75
seed = 0

[encoder]
backend = "hashing"  # "hashing" (offline) or "transformer"
dim = 64
max_tokens = 512
model_name = "roberta-base"
seed = 0

[model]
hidden = 32
epochs = 20
lr = 0.01
grad_clip = 5.0
seed = 0

[linear]
l2 = 0.001
epochs = 200
lr = 0.1
seed = 0

[attribution]
steps = 128

[analysis]
# lexicon = "lexicon.txt"  # built-in categories when omitted

[lda]
topics = 10
alpha = "auto"  # 50 / topics
beta = 0.01
iters = 200
seed = 0

[synth]
users = 2000
variant = "mixed"  # or "order_only"
seed = 0
"#
}
