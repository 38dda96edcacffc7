//! Python bindings for the core pipeline: text cleaning, cohort labeling,
//! TF-IDF, the hashing encoder, rank tests, LDA, the trained sequence model
//! with integrated-gradients attribution, and the file-based stage runner.
//!
//! Errors map onto two Python exception types: `ValueError` for bad inputs or
//! configuration, `RuntimeError` for stage and model failures.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use antiwork_core::analysis;
use antiwork_core::attribution;
use antiwork_core::classifier::{forward_sequence, prepare_user, SequenceModel};
use antiwork_core::cohort;
use antiwork_core::config::{example_toml, PipelineConfig};
use antiwork_core::corpus;
use antiwork_core::encoder::{Encoder, EncoderBackend, EncoderSpec, HashingEncoder};
use antiwork_core::features::tagger::RuleTagger;
use antiwork_core::features::{self, TfIdfVocab};
use antiwork_core::pipeline::{Pipeline, PipelineError};
use antiwork_core::{LabelSchema, Post, PostKind, UserRecord};

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// Replace URLs with `url`, emoji with `emoji`, and number patterns with `@`.
#[pyfunction]
fn clean_text(text: &str) -> String {
    corpus::clean_text(text)
}

/// Lowercased word tokens as used by TF-IDF and the topic models.
#[pyfunction]
fn tokenize(text: &str) -> Vec<String> {
    features::tfidf_tokenize(text)
}

/// Unnormalized cohort sampling weight for a user with `n_posts` posts.
#[pyfunction]
fn gaussian_weight(n_posts: usize, mu: f64, sigma: f64) -> f64 {
    cohort::gaussian_weight(n_posts, mu, sigma)
}

fn bare_post(i: usize, subreddit: &str, created_utc: i64, body: &str) -> Post {
    Post {
        id: format!("p{i}"),
        author: "user".into(),
        subreddit: subreddit.to_lowercase(),
        created_utc,
        title: String::new(),
        body: body.into(),
        kind: PostKind::Comment,
        score: 0,
        ups: 0,
        downs: 0,
        num_comments: 0,
        gilded: 0,
        pinned: false,
    }
}

/// Label one posting history from `(subreddit, created_utc)` pairs.
///
/// Returns `"antiwork"`, `"neutral"`, or `"excluded"`. The default schema
/// targets r/antiwork against the recruiting/recruitinghell/work/jobs pool;
/// pass `target` and `neutral` to override it.
#[pyfunction]
#[pyo3(signature = (posts, target=None, neutral=None))]
fn label_history(
    posts: Vec<(String, i64)>,
    target: Option<String>,
    neutral: Option<Vec<String>>,
) -> PyResult<String> {
    let schema = if target.is_none() && neutral.is_none() {
        LabelSchema::default()
    } else {
        let default = LabelSchema::default();
        LabelSchema::new(
            target.unwrap_or(default.target_subreddit.clone()),
            neutral.unwrap_or_else(|| default.neutral_subreddits.iter().cloned().collect()),
        )
        .map_err(value_err)?
    };
    let mut record = UserRecord {
        author: "user".into(),
        posts: posts
            .iter()
            .enumerate()
            .map(|(i, (sub, ts))| bare_post(i, sub, *ts, ""))
            .collect(),
    };
    record.posts.sort_by_key(|p| p.created_utc);
    Ok(match cohort::label_user(&record, &schema) {
        cohort::Label::Antiwork => "antiwork",
        cohort::Label::Neutral => "neutral",
        cohort::Label::Excluded => "excluded",
    }
    .into())
}

/// Category hits per the built-in lexicon: `{category: (count, rate_per_100w)}`.
#[pyfunction]
fn lexicon_counts(text: &str) -> BTreeMap<String, (u32, f64)> {
    let counts = analysis::lexicon_counts(text, &analysis::Lexicon::builtin());
    counts
        .categories
        .into_iter()
        .map(|(name, stats)| (name, (stats.count, stats.rate)))
        .collect()
}

/// Two-sided Mann-Whitney rank test; returns `(z, p)`.
#[pyfunction]
fn rank_test(a: Vec<f64>, b: Vec<f64>) -> PyResult<(f64, f64)> {
    analysis::rank_test(&a, &b).map_err(value_err)
}

/// Two-sided Wilcoxon signed-rank test on paired samples; returns `(z, p)`.
#[pyfunction]
fn signed_rank_test(x: Vec<f64>, y: Vec<f64>) -> PyResult<(f64, f64)> {
    analysis::signed_rank_test(&x, &y).map_err(value_err)
}

/// TF-IDF vocabulary fitted on a document list.
#[pyclass]
struct TfIdf {
    vocab: TfIdfVocab,
}

#[pymethods]
impl TfIdf {
    #[new]
    fn new(docs: Vec<String>) -> PyResult<Self> {
        Ok(TfIdf {
            vocab: features::fit_tfidf(&docs).map_err(value_err)?,
        })
    }

    /// Dense TF-IDF vector for one document, in vocabulary order.
    fn transform(&self, doc: &str) -> Vec<f64> {
        features::transform(doc, &self.vocab).to_dense()
    }

    fn terms(&self) -> Vec<String> {
        self.vocab
            .terms_in_order()
            .into_iter()
            .map(String::from)
            .collect()
    }

    fn idf(&self, term: &str) -> Option<f64> {
        self.vocab.idf(term)
    }

    fn __len__(&self) -> usize {
        self.vocab.len()
    }
}

/// Deterministic hashing text encoder: seeded token table, mean pooling.
#[pyclass]
struct TextEncoder {
    inner: HashingEncoder,
}

#[pymethods]
impl TextEncoder {
    #[new]
    #[pyo3(signature = (dim=64, max_tokens=512, seed=0))]
    fn new(dim: usize, max_tokens: usize, seed: u64) -> PyResult<Self> {
        let spec = EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim,
            max_tokens,
        };
        Ok(TextEncoder {
            inner: HashingEncoder::new(&spec, seed).map_err(value_err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Encode one post text: `(tokens, per_token_vectors, pooled_vector)`.
    fn encode(&self, text: &str) -> PyResult<(Vec<String>, Vec<Vec<f64>>, Vec<f64>)> {
        let seq = self.inner.encode(text).map_err(runtime_err)?;
        let rows = seq
            .vectors
            .rows()
            .into_iter()
            .map(|row| row.to_vec())
            .collect();
        Ok((seq.tokens, rows, seq.pooled.to_vec()))
    }
}

/// Fitted LDA topic model plus the corpus term frequencies it was fit on.
#[pyclass]
struct TopicModel {
    fit: analysis::LdaFit,
    counts: BTreeMap<String, usize>,
}

/// Collapsed-Gibbs LDA over tokenized documents. `alpha` defaults to `50/k`.
/// Empty documents are dropped; `dropped_empty` reports how many.
#[pyfunction]
#[pyo3(signature = (docs, k, alpha=None, beta=0.01, iters=200, seed=0))]
fn fit_lda(
    docs: Vec<Vec<String>>,
    k: usize,
    alpha: Option<f64>,
    beta: f64,
    iters: usize,
    seed: u64,
) -> PyResult<TopicModel> {
    let alpha = alpha.unwrap_or_else(|| analysis::default_alpha(k));
    let counts = analysis::corpus_term_frequencies(&docs);
    let fit = analysis::fit_lda(&docs, k, alpha, beta, iters, seed).map_err(value_err)?;
    Ok(TopicModel { fit, counts })
}

#[pymethods]
impl TopicModel {
    #[getter]
    fn k(&self) -> usize {
        self.fit.model.k
    }

    #[getter]
    fn vocab(&self) -> Vec<String> {
        self.fit.model.vocab.clone()
    }

    #[getter]
    fn dropped_empty(&self) -> usize {
        self.fit.dropped_empty
    }

    /// Highest-probability `(term, p)` pairs for one topic.
    fn top_terms(&self, topic: usize, n: usize) -> PyResult<Vec<(String, f64)>> {
        if topic >= self.fit.model.k {
            return Err(PyIndexError::new_err(format!(
                "topic {topic} out of range for k={}",
                self.fit.model.k
            )));
        }
        Ok(self.fit.model.top_terms(topic, n))
    }

    /// Terms ranked by saliency = frequency x topic distinctiveness.
    fn salient_terms(&self, n: usize) -> Vec<(String, f64)> {
        analysis::salient_terms(&self.fit.model, &self.counts, n)
    }

    fn topic_proportions(&self) -> Vec<f64> {
        self.fit.model.topic_proportions()
    }

    /// K x V topic-word probabilities as nested lists.
    fn topic_word(&self) -> Vec<Vec<f64>> {
        self.fit
            .model
            .topic_word
            .rows()
            .into_iter()
            .map(|row| row.to_vec())
            .collect()
    }

    /// D x K mixtures for the retained documents, in `retained` order.
    fn doc_topic(&self) -> Vec<Vec<f64>> {
        self.fit
            .model
            .doc_topic
            .rows()
            .into_iter()
            .map(|row| row.to_vec())
            .collect()
    }

    /// Original indices of the documents that survived the empty-doc filter.
    fn retained(&self) -> Vec<usize> {
        self.fit.retained.clone()
    }
}

/// A trained per-post-embedding + GRU propensity model loaded from a
/// `model.json` checkpoint.
#[pyclass]
struct SequenceClassifier {
    model: SequenceModel,
}

impl SequenceClassifier {
    /// A posting history from bare texts: chronological, one comment each.
    fn history(texts: &[String]) -> UserRecord {
        UserRecord {
            author: "user".into(),
            posts: texts
                .iter()
                .enumerate()
                .map(|(i, t)| bare_post(i, "antiwork", i as i64, t))
                .collect(),
        }
    }
}

#[pymethods]
impl SequenceClassifier {
    /// Load a checkpoint written by the train stage.
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        let json = fs::read_to_string(&path).map_err(runtime_err)?;
        Ok(SequenceClassifier {
            model: SequenceModel::from_json(&json).map_err(value_err)?,
        })
    }

    #[getter]
    fn input_dim(&self) -> usize {
        self.model.input_dim
    }

    #[getter]
    fn hidden_dim(&self) -> usize {
        self.model.hidden_dim
    }

    /// Raw logit for a posting history given as a list of post texts.
    fn logit(&self, posts: Vec<String>) -> PyResult<f64> {
        let record = Self::history(&posts);
        let encoder =
            HashingEncoder::new(&self.model.encoder, self.model.encoder_seed).map_err(value_err)?;
        let tagger = RuleTagger::new();
        let inputs = prepare_user(&record, &encoder, &tagger, &self.model.standardizer)
            .map_err(runtime_err)?;
        forward_sequence(&self.model, &inputs).map_err(runtime_err)
    }

    /// Antiwork-propensity prediction: logit thresholded at zero.
    fn predict(&self, posts: Vec<String>) -> PyResult<bool> {
        Ok(self.logit(posts)? > 0.0)
    }

    /// Integrated-gradients word attribution for one post of a history.
    ///
    /// Returns `(tokens, scores, completeness_delta)` for the post at
    /// `target_index`, attributing the history's final logit.
    #[pyo3(signature = (posts, target_index, steps=64))]
    fn attribute(
        &self,
        posts: Vec<String>,
        target_index: usize,
        steps: usize,
    ) -> PyResult<(Vec<String>, Vec<f64>, f64)> {
        let record = Self::history(&posts);
        let tagger = RuleTagger::new();
        let result = attribution::integrated_gradients(
            &self.model,
            &record.posts,
            target_index,
            steps,
            &tagger,
        )
        .map_err(value_err)?;
        Ok((result.tokens, result.scores, result.convergence_delta))
    }
}

/// Run one pipeline stage against a TOML config file and return its summary
/// as a JSON string.
///
/// `stage` is one of: synth, ingest, label, sample, split, train, evaluate,
/// attribute, analyze, topics, report, export. `users`/`limit` apply to
/// attribute, `timestamp` to report, `include_checkpoint` to export.
#[pyfunction]
#[pyo3(signature = (config_path, stage, users=None, limit=0, timestamp=None, include_checkpoint=false))]
fn run_stage(
    config_path: PathBuf,
    stage: &str,
    users: Option<Vec<String>>,
    limit: usize,
    timestamp: Option<String>,
    include_checkpoint: bool,
) -> PyResult<String> {
    let config = PipelineConfig::load(&config_path).map_err(value_err)?;
    let pipeline = Pipeline::new(config);
    let users = users.unwrap_or_default();
    let summary = match stage {
        "synth" => pipeline.run_synth(),
        "ingest" => pipeline.run_ingest(),
        "label" => pipeline.run_label(),
        "sample" => pipeline.run_sample(),
        "split" => pipeline.run_split(),
        "train" => pipeline.run_train(),
        "evaluate" => pipeline.run_evaluate(),
        "attribute" => pipeline.run_attribute(&users, limit),
        "analyze" => pipeline.run_analyze(),
        "topics" => pipeline.run_topics(),
        "report" => pipeline.run_report(timestamp),
        "export" => pipeline.run_export(include_checkpoint),
        other => {
            return Err(PyValueError::new_err(format!("unknown stage {other:?}")));
        }
    };
    match summary {
        Ok(value) => Ok(value.to_string()),
        Err(e @ PipelineError::Config(_)) => Err(value_err(e)),
        Err(e) => Err(runtime_err(e)),
    }
}

/// The annotated default pipeline configuration, as TOML text.
#[pyfunction]
fn example_config() -> &'static str {
    example_toml()
}

#[pymodule]
fn antiwork_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(clean_text, m)?)?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_weight, m)?)?;
    m.add_function(wrap_pyfunction!(label_history, m)?)?;
    m.add_function(wrap_pyfunction!(lexicon_counts, m)?)?;
    m.add_function(wrap_pyfunction!(rank_test, m)?)?;
    m.add_function(wrap_pyfunction!(signed_rank_test, m)?)?;
    m.add_function(wrap_pyfunction!(fit_lda, m)?)?;
    m.add_function(wrap_pyfunction!(run_stage, m)?)?;
    m.add_function(wrap_pyfunction!(example_config, m)?)?;
    m.add_class::<TfIdf>()?;
    m.add_class::<TextEncoder>()?;
    m.add_class::<TopicModel>()?;
    m.add_class::<SequenceClassifier>()?;
    Ok(())
}
