//! Stage runners with file handoffs.
//!
//! Every subcommand body lives here: each stage reads its predecessor's
//! newline-delimited JSON artifact from the output directory, writes its own
//! artifacts, and records an entry in `manifest.json` (config hash, stage
//! seed, input/output digests). A `.lock` file serializes runs over one
//! output directory. No artifact embeds wall-clock state, so rerunning a
//! stage with the same config reproduces identical bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::analysis::{
    compare_groups, corpus_term_frequencies, fit_lda, perplexity, results_to_csv, salient_terms,
    unigram_perplexity, Lexicon, Stars,
};
use crate::attribution::{integrated_gradients, normalize_scores, AttributionResult};
use crate::classifier::{
    evaluate, evaluate_linear, metrics_table, train_linear, train_sequence, LinearModel, Metrics,
    RandomBaseline, SequenceModel,
};
use crate::cohort::{label_user, post_count_stats, sample_neutral, split, CohortDataset, Label,
    LabeledUser};
use crate::config::{ConfigError, PipelineConfig};
use crate::corpus::{clean_text, group_users, parse_dump, PostKind, RejectCounts, UserRecord};
use crate::encoder::{build_encoder, EncoderBackend};
use crate::features::tagger::RuleTagger;
use crate::features::{fit_tfidf, transform, user_document, TfIdfVocab};
use crate::report::{render_report, ReportMeta};
use crate::synth;

pub const SYNTH_FILE: &str = "synth_submissions.ndjson";
pub const USERS_FILE: &str = "users.ndjson";
pub const INGEST_SUMMARY_FILE: &str = "ingest_summary.json";
pub const LABELED_FILE: &str = "labeled.ndjson";
pub const LABEL_COUNTS_FILE: &str = "label_counts.json";
pub const COHORT_FILE: &str = "cohort.ndjson";
pub const SAMPLE_SUMMARY_FILE: &str = "sample_summary.json";
pub const TRAIN_FILE: &str = "train.ndjson";
pub const VAL_FILE: &str = "val.ndjson";
pub const SPLIT_SUMMARY_FILE: &str = "split_summary.json";
pub const MODEL_FILE: &str = "model.json";
pub const LINEAR_FILE: &str = "linear.json";
pub const TRAIN_SUMMARY_FILE: &str = "train_summary.json";
pub const METRICS_FILE: &str = "metrics.json";
pub const METRICS_TABLE_FILE: &str = "metrics.txt";
pub const ATTRIBUTIONS_FILE: &str = "attributions.ndjson";
pub const ANALYSIS_CSV_FILE: &str = "analysis.csv";
pub const ANALYSIS_JSON_FILE: &str = "analysis.json";
pub const TOPICS_FILE: &str = "topics.json";
pub const REPORT_FILE: &str = "report.html";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const EXPORT_DIR: &str = "export";
pub const EXPORT_FILE: &str = "export/antiwork_users.ndjson";
pub const EXPORT_CHECKPOINT_FILE: &str = "export/model.json";
pub const LOCK_FILE: &str = ".lock";

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("stage {stage} failed: {message}")]
    Stage {
        stage: &'static str,
        message: String,
    },
}

impl PipelineError {
    pub fn stage_name(&self) -> Option<&'static str> {
        match self {
            PipelineError::Stage { stage, .. } => Some(stage),
            PipelineError::Config(_) => None,
        }
    }
}

fn serr(stage: &'static str, message: impl fmt::Display) -> PipelineError {
    PipelineError::Stage {
        stage,
        message: message.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Manifest

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct StageRecord {
    pub seed: Option<u64>,
    /// Input path → SHA-256 of its bytes.
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
}

/// One manifest per output directory, one entry per stage that has run.
/// Re-running a stage overwrites only its own entry; the config hash always
/// reflects the config of the most recent stage.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub config_sha256: String,
    pub stages: BTreeMap<String, StageRecord>,
}

impl Manifest {
    pub fn load(path: &Path) -> Manifest {
        fs::read_to_string(path)
            .ok()
            .and_then(|text| serde_json::from_str(&text).ok())
            .unwrap_or_default()
    }
}

fn hex_digest(hasher: Sha256) -> String {
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn sha256_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hex_digest(hasher)
}

pub fn sha256_file(path: &Path) -> std::io::Result<String> {
    let mut file = fs::File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = file.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex_digest(hasher))
}

/// Hash of the fully resolved config; recorded in every manifest entry.
pub fn config_digest(config: &PipelineConfig) -> String {
    sha256_bytes(serde_json::to_string(config).expect("config serializes").as_bytes())
}

// ---------------------------------------------------------------------------
// Directory lock

/// Exclusive ownership of an output directory, released on drop. A stale
/// lock (ger crashed process) must be removed by hand; the error says where.
pub struct DirLock {
    path: PathBuf,
}

impl DirLock {
    pub fn acquire(dir: &Path, stage: &'static str) -> Result<DirLock, PipelineError> {
        fs::create_dir_all(dir).map_err(|e| serr(stage, e))?;
        let path = dir.join(LOCK_FILE);
        match OpenOptions::new().write(true).create_new(true).open(&path) {
            Ok(mut f) => {
                let _ = writeln!(f, "pid {}", std::process::id());
                Ok(DirLock { path })
            }
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => Err(serr(
                stage,
                format!(
                    "output directory is locked by another run (remove {} if stale)",
                    path.display()
                ),
            )),
            Err(e) => Err(serr(stage, e)),
        }
    }
}

impl Drop for DirLock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

// ---------------------------------------------------------------------------
// NDJSON helpers

fn write_ndjson<T: Serialize>(path: &Path, items: &[T]) -> std::io::Result<()> {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item)?);
        out.push('\n');
    }
    fs::write(path, out)
}

fn read_ndjson<T: DeserializeOwned>(path: &Path) -> std::io::Result<Vec<T>> {
    let reader = BufReader::new(fs::File::open(path)?);
    let mut items = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        items.push(serde_json::from_str(&line)?);
    }
    Ok(items)
}

/// One attribution row in `attributions.ndjson`: the owning user plus the
/// per-token result for one target post.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UserAttribution {
    pub author: String,
    #[serde(flatten)]
    pub result: AttributionResult,
}

// ---------------------------------------------------------------------------
// Pipeline

pub struct Pipeline {
    pub config: PipelineConfig,
}

impl Pipeline {
    pub fn new(config: PipelineConfig) -> Pipeline {
        Pipeline { config }
    }

    fn out(&self, name: &str) -> PathBuf {
        self.config.output_dir.join(name)
    }

    /// Artifact path for error messages and manifest keys: relative to the
    /// output directory when inside it, absolute otherwise.
    fn display_path(&self, path: &Path) -> String {
        path.strip_prefix(&self.config.output_dir)
            .unwrap_or(path)
            .display()
            .to_string()
    }

    fn require(&self, stage: &'static str, name: &str, hint: &str) -> Result<PathBuf, PipelineError> {
        let path = self.out(name);
        if !path.is_file() {
            return Err(serr(
                stage,
                format!("missing artifact {name} ({hint})"),
            ));
        }
        Ok(path)
    }

    fn record_stage(
        &self,
        stage: &'static str,
        seed: Option<u64>,
        inputs: &[PathBuf],
        outputs: &[PathBuf],
    ) -> Result<(), PipelineError> {
        let digest_all = |paths: &[PathBuf]| -> Result<BTreeMap<String, String>, PipelineError> {
            let mut map = BTreeMap::new();
            for p in paths {
                let digest = sha256_file(p).map_err(|e| {
                    serr(stage, format!("digesting {}: {e}", p.display()))
                })?;
                map.insert(self.display_path(p), digest);
            }
            Ok(map)
        };
        let manifest_path = self.out(MANIFEST_FILE);
        let mut manifest = Manifest::load(&manifest_path);
        manifest.config_sha256 = config_digest(&self.config);
        manifest.stages.insert(
            stage.to_string(),
            StageRecord {
                seed,
                inputs: digest_all(inputs)?,
                outputs: digest_all(outputs)?,
            },
        );
        let mut text = serde_json::to_string_pretty(&manifest).map_err(|e| serr(stage, e))?;
        text.push('\n');
        fs::write(&manifest_path, text).map_err(|e| serr(stage, e))
    }

    // -- synth --------------------------------------------------------------

    pub fn run_synth(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "synth";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let cfg = self.config.synth_config();
        let posts = synth::generate(&cfg);
        let ndjson = synth::to_raw_ndjson(&posts);
        let path = self.out(SYNTH_FILE);
        fs::write(&path, &ndjson).map_err(|e| serr(STAGE, e))?;
        self.record_stage(STAGE, Some(cfg.seed), &[], &[path.clone()])?;
        Ok(json!({
            "stage": STAGE,
            "variant": cfg.variant,
            "users": cfg.n_users - cfg.n_users % 2,
            "posts": posts.len(),
            "seed": cfg.seed,
            "file": self.display_path(&path),
            "sha256": sha256_bytes(ndjson.as_bytes()),
        }))
    }

    // -- ingest -------------------------------------------------------------

    pub fn run_ingest(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "ingest";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let schema = self.config.schema_config()?;
        let filter: std::collections::HashSet<String> =
            schema.all_subreddits().into_iter().collect();

        // explicit inputs, or the synthetic dump when none are configured
        let mut submissions: Vec<PathBuf> = self.config.input.submissions.clone();
        let comments: Vec<PathBuf> = self.config.input.comments.clone();
        if submissions.is_empty() && comments.is_empty() {
            let fallback = self.out(SYNTH_FILE);
            if fallback.is_file() {
                submissions.push(fallback);
            } else {
                return Err(serr(
                    STAGE,
                    "no input files configured and no synthetic dump present \
                     (set [input] or run synth first)",
                ));
            }
        }

        let mut posts = Vec::new();
        let mut rejects = RejectCounts::default();
        let mut filtered_out = 0u64;
        let mut removed_placeholders = 0u64;
        let mut parse_all = |files: &[PathBuf], kind: PostKind| -> Result<(), PipelineError> {
            for file in files {
                let reader = BufReader::new(
                    fs::File::open(file)
                        .map_err(|e| serr(STAGE, format!("{}: {e}", file.display())))?,
                );
                let outcome = parse_dump(reader, kind, &filter)
                    .map_err(|e| serr(STAGE, format!("{}: {e}", file.display())))?;
                posts.extend(outcome.posts);
                rejects.malformed += outcome.rejects.malformed;
                rejects.missing_text += outcome.rejects.missing_text;
                rejects.deleted_author += outcome.rejects.deleted_author;
                filtered_out += outcome.filtered_out;
                removed_placeholders += outcome.removed_placeholders;
            }
            Ok(())
        };
        parse_all(&submissions, PostKind::Submission)?;
        parse_all(&comments, PostKind::Comment)?;

        let n_posts = posts.len();
        let users = group_users(posts);
        let users_path = self.out(USERS_FILE);
        write_ndjson(&users_path, &users).map_err(|e| serr(STAGE, e))?;
        let summary = json!({
            "stage": STAGE,
            "files": submissions
                .iter()
                .chain(&comments)
                .map(|p| p.display().to_string())
                .collect::<Vec<_>>(),
            "posts": n_posts,
            "users": users.len(),
            "rejects": rejects,
            "filtered_out": filtered_out,
            "removed_placeholders": removed_placeholders,
        });
        let summary_path = self.out(INGEST_SUMMARY_FILE);
        fs::write(&summary_path, pretty(&summary)).map_err(|e| serr(STAGE, e))?;
        let inputs: Vec<PathBuf> = submissions.iter().chain(&comments).cloned().collect();
        self.record_stage(STAGE, None, &inputs, &[users_path, summary_path])?;
        Ok(summary)
    }

    // -- label --------------------------------------------------------------

    pub fn run_label(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "label";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let users_path = self.require(STAGE, USERS_FILE, "run ingest first")?;
        let schema = self.config.schema_config()?;
        let users: Vec<UserRecord> =
            read_ndjson(&users_path).map_err(|e| serr(STAGE, e))?;
        let labeled: Vec<LabeledUser> = users
            .into_iter()
            .map(|record| {
                let label = label_user(&record, &schema);
                LabeledUser { record, label }
            })
            .collect();
        let count = |l: Label| labeled.iter().filter(|u| u.label == l).count();
        let counts = json!({
            "antiwork": count(Label::Antiwork),
            "neutral": count(Label::Neutral),
            "excluded": count(Label::Excluded),
        });
        let labeled_path = self.out(LABELED_FILE);
        write_ndjson(&labeled_path, &labeled).map_err(|e| serr(STAGE, e))?;
        let counts_path = self.out(LABEL_COUNTS_FILE);
        fs::write(&counts_path, pretty(&counts)).map_err(|e| serr(STAGE, e))?;
        self.record_stage(STAGE, None, &[users_path], &[labeled_path, counts_path])?;
        Ok(json!({ "stage": STAGE, "counts": counts }))
    }

    // -- sample -------------------------------------------------------------

    pub fn run_sample(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "sample";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let labeled_path = self.require(STAGE, LABELED_FILE, "run label first")?;
        let labeled: Vec<LabeledUser> =
            read_ndjson(&labeled_path).map_err(|e| serr(STAGE, e))?;
        let antiwork: Vec<LabeledUser> = labeled
            .iter()
            .filter(|u| u.label == Label::Antiwork)
            .cloned()
            .collect();
        let pool: Vec<LabeledUser> = labeled
            .iter()
            .filter(|u| u.label == Label::Neutral)
            .cloned()
            .collect();
        if antiwork.is_empty() {
            return Err(serr(STAGE, "no antiwork users to balance against"));
        }
        let stats = post_count_stats(&antiwork);
        let sampling = self.config.sampling_config(stats, antiwork.len());
        let drawn = sample_neutral(&pool, &sampling).map_err(|e| serr(STAGE, e))?;
        let mut cohort = antiwork;
        let n_antiwork = cohort.len();
        cohort.extend(drawn);
        let cohort_path = self.out(COHORT_FILE);
        write_ndjson(&cohort_path, &cohort).map_err(|e| serr(STAGE, e))?;
        let summary = json!({
            "stage": STAGE,
            "antiwork": n_antiwork,
            "neutral_pool": pool.len(),
            "drawn": cohort.len() - n_antiwork,
            "mu": sampling.mu,
            "sigma": sampling.sigma,
            "seed": sampling.seed,
        });
        let summary_path = self.out(SAMPLE_SUMMARY_FILE);
        fs::write(&summary_path, pretty(&summary)).map_err(|e| serr(STAGE, e))?;
        self.record_stage(
            STAGE,
            Some(sampling.seed),
            &[labeled_path],
            &[cohort_path, summary_path],
        )?;
        Ok(summary)
    }

    // -- split --------------------------------------------------------------

    pub fn run_split(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "split";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let cohort_path = self.require(STAGE, COHORT_FILE, "run sample first")?;
        let cohort: Vec<LabeledUser> =
            read_ndjson(&cohort_path).map_err(|e| serr(STAGE, e))?;
        let ratio = self.config.split.ratio;
        let seed = self.config.split.seed;
        let ds = split(cohort, ratio, seed).map_err(|e| serr(STAGE, e))?;
        let train_path = self.out(TRAIN_FILE);
        let val_path = self.out(VAL_FILE);
        write_ndjson(&train_path, &ds.train).map_err(|e| serr(STAGE, e))?;
        write_ndjson(&val_path, &ds.val).map_err(|e| serr(STAGE, e))?;
        let count = |users: &[LabeledUser], l: Label| users.iter().filter(|u| u.label == l).count();
        let summary = json!({
            "stage": STAGE,
            "ratio": ratio,
            "seed": seed,
            "train": {
                "total": ds.train.len(),
                "antiwork": count(&ds.train, Label::Antiwork),
                "neutral": count(&ds.train, Label::Neutral),
            },
            "val": {
                "total": ds.val.len(),
                "antiwork": count(&ds.val, Label::Antiwork),
                "neutral": count(&ds.val, Label::Neutral),
            },
        });
        let summary_path = self.out(SPLIT_SUMMARY_FILE);
        fs::write(&summary_path, pretty(&summary)).map_err(|e| serr(STAGE, e))?;
        self.record_stage(
            STAGE,
            Some(seed),
            &[cohort_path],
            &[train_path, val_path, summary_path],
        )?;
        Ok(summary)
    }

    // -- train --------------------------------------------------------------

    fn load_split(&self, stage: &'static str) -> Result<CohortDataset, PipelineError> {
        let train_path = self.require(stage, TRAIN_FILE, "run split first")?;
        let val_path = self.require(stage, VAL_FILE, "run split first")?;
        Ok(CohortDataset {
            train: read_ndjson(&train_path).map_err(|e| serr(stage, e))?,
            val: read_ndjson(&val_path).map_err(|e| serr(stage, e))?,
            split_ratio: self.config.split.ratio,
            seed: self.config.split.seed,
        })
    }

    /// Per-user bag-of-words documents and binary labels; excluded users are
    /// skipped.
    fn documents(users: &[LabeledUser]) -> (Vec<String>, Vec<bool>) {
        let mut docs = Vec::new();
        let mut labels = Vec::new();
        for user in users {
            let positive = match user.label {
                Label::Antiwork => true,
                Label::Neutral => false,
                Label::Excluded => continue,
            };
            docs.push(user_document(&user.record));
            labels.push(positive);
        }
        (docs, labels)
    }

    pub fn run_train(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "train";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let dataset = self.load_split(STAGE)?;
        let spec = self.config.encoder_spec();
        if spec.backend == EncoderBackend::Transformer {
            build_encoder(&spec, self.config.encoder.seed, &self.config.encoder.model_name)
                .map_err(|e| serr(STAGE, e))?;
        }
        let tagger = RuleTagger::new();
        let hyper = self.config.sequence_hyper();
        let (model, best) =
            train_sequence(&dataset, &spec, self.config.encoder.seed, &tagger, &hyper)
                .map_err(|e| serr(STAGE, e))?;
        let model_path = self.out(MODEL_FILE);
        fs::write(&model_path, model.to_json()).map_err(|e| serr(STAGE, e))?;

        let (train_docs, train_y) = Self::documents(&dataset.train);
        let (val_docs, val_y) = Self::documents(&dataset.val);
        let vocab = fit_tfidf(&train_docs).map_err(|e| serr(STAGE, e))?;
        let x: Vec<Vec<f64>> = train_docs
            .iter()
            .map(|d| transform(d, &vocab).to_dense())
            .collect();
        let names: Vec<String> = vocab.terms_in_order().iter().map(|s| s.to_string()).collect();
        let linear = train_linear(&x, &train_y, names, self.config.linear_hyper())
            .map_err(|e| serr(STAGE, e))?;
        let val_x: Vec<Vec<f64>> = val_docs
            .iter()
            .map(|d| transform(d, &vocab).to_dense())
            .collect();
        let linear_val = evaluate_linear(&linear, &val_x, &val_y);
        let linear_path = self.out(LINEAR_FILE);
        let linear_json = json!({
            "vocab": serde_json::from_str::<Value>(&vocab.to_json()).map_err(|e| serr(STAGE, e))?,
            "model": linear,
        });
        fs::write(&linear_path, pretty(&linear_json)).map_err(|e| serr(STAGE, e))?;

        let summary = json!({
            "stage": STAGE,
            "train_users": dataset.train.len(),
            "val_users": dataset.val.len(),
            "input_dim": model.input_dim,
            "hidden_dim": model.hidden_dim,
            "epochs": hyper.epochs,
            "seed": hyper.seed,
            "sequence_val": best,
            "tfidf_val": linear_val,
            "vocab_size": vocab.len(),
        });
        let summary_path = self.out(TRAIN_SUMMARY_FILE);
        fs::write(&summary_path, pretty(&summary)).map_err(|e| serr(STAGE, e))?;
        self.record_stage(
            STAGE,
            Some(hyper.seed),
            &[self.out(TRAIN_FILE), self.out(VAL_FILE)],
            &[model_path, linear_path, summary_path],
        )?;
        Ok(summary)
    }

    // -- evaluate -----------------------------------------------------------

    fn load_model(&self, stage: &'static str) -> Result<SequenceModel, PipelineError> {
        let path = self.require(stage, MODEL_FILE, "run train first")?;
        let text = fs::read_to_string(&path).map_err(|e| serr(stage, e))?;
        SequenceModel::from_json(&text).map_err(|e| serr(stage, e))
    }

    fn load_linear(&self, stage: &'static str) -> Result<(TfIdfVocab, LinearModel), PipelineError> {
        let path = self.require(stage, LINEAR_FILE, "run train first")?;
        let text = fs::read_to_string(&path).map_err(|e| serr(stage, e))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| serr(stage, e))?;
        let vocab = TfIdfVocab::from_json(&value["vocab"].to_string())
            .map_err(|e| serr(stage, e))?;
        let model: LinearModel =
            serde_json::from_value(value["model"].clone()).map_err(|e| serr(stage, e))?;
        Ok((vocab, model))
    }

    pub fn run_evaluate(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "evaluate";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let val_path = self.require(STAGE, VAL_FILE, "run split first")?;
        let val: Vec<LabeledUser> = read_ndjson(&val_path).map_err(|e| serr(STAGE, e))?;
        let model = self.load_model(STAGE)?;
        let (vocab, linear) = self.load_linear(STAGE)?;

        let sequence = evaluate(&model, &val).map_err(|e| serr(STAGE, e))?;
        let (val_docs, val_y) = Self::documents(&val);
        let val_x: Vec<Vec<f64>> = val_docs
            .iter()
            .map(|d| transform(d, &vocab).to_dense())
            .collect();
        let tfidf = evaluate_linear(&linear, &val_x, &val_y);
        let preds = RandomBaseline::new(self.config.model.seed).predict_n(val_y.len());
        let random = Metrics::from_predictions(&preds, &val_y);

        let metrics = json!({ "sequence": sequence, "tfidf": tfidf, "random": random });
        let metrics_path = self.out(METRICS_FILE);
        fs::write(&metrics_path, pretty(&metrics)).map_err(|e| serr(STAGE, e))?;
        let table = metrics_table(&[
            ("sequence", sequence),
            ("tfidf", tfidf),
            ("random", random),
        ]);
        let table_path = self.out(METRICS_TABLE_FILE);
        fs::write(&table_path, table).map_err(|e| serr(STAGE, e))?;
        self.record_stage(
            STAGE,
            Some(self.config.model.seed),
            &[val_path, self.out(MODEL_FILE), self.out(LINEAR_FILE)],
            &[metrics_path, table_path],
        )?;
        Ok(metrics)
    }

    // -- attribute ----------------------------------------------------------

    /// Integrated-gradients attributions for validation users. `authors`
    /// selects specific users; when empty the first `limit` users are taken
    /// (0 = all). The target is each user's most recent post.
    pub fn run_attribute(&self, authors: &[String], limit: usize) -> Result<Value, PipelineError> {
        const STAGE: &str = "attribute";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let val_path = self.require(STAGE, VAL_FILE, "run split first")?;
        let val: Vec<LabeledUser> = read_ndjson(&val_path).map_err(|e| serr(STAGE, e))?;
        let model = self.load_model(STAGE)?;
        let tagger = RuleTagger::new();
        let steps = self.config.attribution.steps;

        let selected: Vec<&LabeledUser> = if authors.is_empty() {
            let take = if limit == 0 { val.len() } else { limit.min(val.len()) };
            val.iter().take(take).collect()
        } else {
            let mut picked = Vec::new();
            for author in authors {
                match val.iter().find(|u| &u.record.author == author) {
                    Some(u) => picked.push(u),
                    None => {
                        return Err(serr(
                            STAGE,
                            format!("user {author:?} not in the validation split"),
                        ))
                    }
                }
            }
            picked
        };

        let mut rows = Vec::new();
        for user in selected {
            let posts = &user.record.posts;
            if posts.is_empty() {
                continue;
            }
            let target = posts.len() - 1;
            let result = integrated_gradients(&model, posts, target, steps, &tagger)
                .map_err(|e| serr(STAGE, format!("user {}: {e}", user.record.author)))?;
            rows.push(UserAttribution {
                author: user.record.author.clone(),
                result,
            });
        }
        let path = self.out(ATTRIBUTIONS_FILE);
        write_ndjson(&path, &rows).map_err(|e| serr(STAGE, e))?;
        let max_delta = rows
            .iter()
            .map(|r| r.result.convergence_delta)
            .fold(0.0f64, f64::max);
        let summary = json!({
            "stage": STAGE,
            "users": rows.len(),
            "steps": steps,
            "max_delta": max_delta,
        });
        self.record_stage(STAGE, None, &[val_path, self.out(MODEL_FILE)], &[path])?;
        Ok(summary)
    }

    // -- analyze ------------------------------------------------------------

    fn load_lexicon(&self, stage: &'static str) -> Result<Lexicon, PipelineError> {
        match &self.config.analysis.lexicon {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| serr(stage, format!("{}: {e}", path.display())))?;
                Lexicon::parse(&text).map_err(|e| serr(stage, e))
            }
            None => Ok(Lexicon::builtin()),
        }
    }

    /// Rank-sum comparison of category rates between the cohort's antiwork
    /// and sampled neutral users.
    pub fn run_analyze(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "analyze";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let cohort_path = self.require(STAGE, COHORT_FILE, "run sample first")?;
        let cohort: Vec<LabeledUser> = read_ndjson(&cohort_path).map_err(|e| serr(STAGE, e))?;
        let lexicon = self.load_lexicon(STAGE)?;
        let docs = |label: Label| -> Vec<String> {
            cohort
                .iter()
                .filter(|u| u.label == label)
                .map(|u| user_document(&u.record))
                .collect()
        };
        let antiwork_docs = docs(Label::Antiwork);
        let neutral_docs = docs(Label::Neutral);
        let results =
            compare_groups(&antiwork_docs, &neutral_docs, &lexicon).map_err(|e| serr(STAGE, e))?;
        let csv_path = self.out(ANALYSIS_CSV_FILE);
        fs::write(&csv_path, results_to_csv(&results)).map_err(|e| serr(STAGE, e))?;
        let json_path = self.out(ANALYSIS_JSON_FILE);
        fs::write(&json_path, pretty(&serde_json::to_value(&results).unwrap()))
            .map_err(|e| serr(STAGE, e))?;
        let significant = results.iter().filter(|r| r.stars != Stars::None).count();
        let summary = json!({
            "stage": STAGE,
            "categories": results.len(),
            "significant": significant,
            "antiwork_users": antiwork_docs.len(),
            "neutral_users": neutral_docs.len(),
        });
        self.record_stage(STAGE, None, &[cohort_path], &[csv_path, json_path])?;
        Ok(summary)
    }

    // -- topics -------------------------------------------------------------

    /// LDA over the cohort's antiwork user documents. Every tenth document
    /// is held out for fold-in perplexity.
    pub fn run_topics(&self) -> Result<Value, PipelineError> {
        const STAGE: &str = "topics";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let cohort_path = self.require(STAGE, COHORT_FILE, "run sample first")?;
        let cohort: Vec<LabeledUser> = read_ndjson(&cohort_path).map_err(|e| serr(STAGE, e))?;
        let tokenized: Vec<Vec<String>> = cohort
            .iter()
            .filter(|u| u.label == Label::Antiwork)
            .map(|u| crate::features::tfidf_tokenize(&user_document(&u.record)))
            .collect();
        if tokenized.is_empty() {
            return Err(serr(STAGE, "no antiwork users in cohort"));
        }
        let mut train_docs = Vec::new();
        let mut held_out = Vec::new();
        for (i, doc) in tokenized.into_iter().enumerate() {
            if i % 10 == 9 {
                held_out.push(doc);
            } else {
                train_docs.push(doc);
            }
        }
        let k = self.config.lda.topics;
        let alpha = self.config.lda_alpha();
        let beta = self.config.lda.beta;
        let iters = self.config.lda.iters;
        let seed = self.config.lda.seed;
        let fit =
            fit_lda(&train_docs, k, alpha, beta, iters, seed).map_err(|e| serr(STAGE, e))?;
        let topics: Vec<Value> = (0..k)
            .map(|t| {
                json!({
                    "topic": t,
                    "terms": fit.model.top_terms(t, 10),
                })
            })
            .collect();
        let counts = corpus_term_frequencies(&train_docs);
        let salient = salient_terms(&fit.model, &counts, 10);
        let (ppl, uni_ppl) = if held_out.iter().any(|d| !d.is_empty()) {
            (
                Some(perplexity(&fit.model, &held_out, alpha, seed)),
                Some(unigram_perplexity(&train_docs, &held_out)),
            )
        } else {
            (None, None)
        };
        let out = json!({
            "stage": STAGE,
            "k": k,
            "alpha": alpha,
            "beta": beta,
            "iters": iters,
            "seed": seed,
            "documents": train_docs.len(),
            "held_out": held_out.len(),
            "dropped_empty": fit.dropped_empty,
            "topic_proportions": fit.model.topic_proportions(),
            "topics": topics,
            "salient_terms": salient,
            "perplexity": ppl,
            "unigram_perplexity": uni_ppl,
        });
        let path = self.out(TOPICS_FILE);
        fs::write(&path, pretty(&out)).map_err(|e| serr(STAGE, e))?;
        self.record_stage(STAGE, Some(seed), &[cohort_path], &[path])?;
        Ok(out)
    }

    // -- report -------------------------------------------------------------

    /// Render attributions as HTML. Scores are normalized per post before
    /// bucketing. `timestamp` is embedded verbatim when given; otherwise the
    /// output is byte-identical across runs.
    pub fn run_report(&self, timestamp: Option<String>) -> Result<Value, PipelineError> {
        const STAGE: &str = "report";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let attr_path = self.require(STAGE, ATTRIBUTIONS_FILE, "run attribute first")?;
        let rows: Vec<UserAttribution> = read_ndjson(&attr_path).map_err(|e| serr(STAGE, e))?;
        let mut zero_posts = 0usize;
        let normalized: Vec<AttributionResult> = rows
            .iter()
            .map(|row| {
                let (result, all_zero) = normalize_scores(&row.result);
                if all_zero {
                    zero_posts += 1;
                }
                result
            })
            .collect();
        let meta = ReportMeta {
            title: "Antiwork propensity attribution report".to_string(),
            timestamp,
        };
        let html = render_report(&normalized, &meta);
        let path = self.out(REPORT_FILE);
        fs::write(&path, &html).map_err(|e| serr(STAGE, e))?;
        let summary = json!({
            "stage": STAGE,
            "posts": normalized.len(),
            "zero_attribution_posts": zero_posts,
            "bytes": html.len(),
        });
        self.record_stage(STAGE, None, &[attr_path], &[path])?;
        Ok(summary)
    }

    // -- export -------------------------------------------------------------

    /// Publishable subset: antiwork-labeled users only, with authors and
    /// platform post ids dropped and all text cleaned (URLs → `url`, digit
    /// runs → `@`, emoji removed). The trained checkpoint is only copied
    /// when `include_checkpoint` is set.
    pub fn run_export(&self, include_checkpoint: bool) -> Result<Value, PipelineError> {
        const STAGE: &str = "export";
        let _lock = DirLock::acquire(&self.config.output_dir, STAGE)?;
        let labeled_path = self.require(STAGE, LABELED_FILE, "run label first")?;
        let labeled: Vec<LabeledUser> = read_ndjson(&labeled_path).map_err(|e| serr(STAGE, e))?;
        let export_dir = self.out(EXPORT_DIR);
        fs::create_dir_all(&export_dir).map_err(|e| serr(STAGE, e))?;

        let mut lines = Vec::new();
        let mut n_posts = 0usize;
        for (index, user) in labeled
            .iter()
            .filter(|u| u.label == Label::Antiwork)
            .enumerate()
        {
            let posts: Vec<Value> = user
                .record
                .posts
                .iter()
                .map(|p| {
                    n_posts += 1;
                    json!({
                        "subreddit": p.subreddit,
                        "created_utc": p.created_utc,
                        "kind": p.kind,
                        "title": clean_text(&p.title),
                        "body": clean_text(&p.body),
                        "score": p.score,
                        "ups": p.ups,
                        "downs": p.downs,
                        "num_comments": p.num_comments,
                        "gilded": p.gilded,
                        "pinned": p.pinned,
                    })
                })
                .collect();
            lines.push(json!({ "user": index, "label": "antiwork", "posts": posts }));
        }
        let export_path = self.out(EXPORT_FILE);
        write_ndjson(&export_path, &lines).map_err(|e| serr(STAGE, e))?;

        let mut outputs = vec![export_path];
        if include_checkpoint {
            let model_path = self.require(STAGE, MODEL_FILE, "run train first")?;
            let dest = self.out(EXPORT_CHECKPOINT_FILE);
            fs::copy(&model_path, &dest).map_err(|e| serr(STAGE, e))?;
            outputs.push(dest);
        }
        let summary = json!({
            "stage": STAGE,
            "users": lines.len(),
            "posts": n_posts,
            "checkpoint": include_checkpoint,
        });
        self.record_stage(STAGE, None, &[labeled_path], &outputs)?;
        Ok(summary)
    }
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json serializes");
    text.push('\n');
    text
}
