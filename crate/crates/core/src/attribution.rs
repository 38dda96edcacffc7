//! Integrated-gradients word attribution for the sequence model.
//!
//! One integration core handles every target through [`DifferentiableTarget`]:
//! simple probes in tests and the full sequence model in production. For the
//! model, the interpolation surface is the token-embedding matrix of the
//! target post only — the user's other posts and the post's linguistic
//! features stay fixed, and the baseline zeroes the embeddings.

use ndarray::Array1;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{input_gradients, prepare_user, SequenceModel};
use crate::corpus::{Post, UserRecord};
use crate::encoder::{Encoder, HashingEncoder};
use crate::features::post_document;
use crate::features::tagger::PosTagger;

#[derive(Debug, Error)]
pub enum AttributionError {
    #[error("integration needs at least 2 steps, got {0}")]
    InvalidSteps(usize),
    #[error("target post index {index} out of range for {n_posts} posts")]
    InvalidTarget { index: usize, n_posts: usize },
    #[error(transparent)]
    Backend(#[from] crate::encoder::EncoderError),
    #[error(transparent)]
    Classifier(#[from] crate::classifier::ClassifierError),
}

/// Word-level attribution for one post.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributionResult {
    pub post_id: String,
    pub tokens: Vec<String>,
    pub scores: Vec<f64>,
    #[serde(rename = "delta")]
    pub convergence_delta: f64,
    pub steps: usize,
}

impl AttributionResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("attribution serializes")
    }

    pub fn from_json(json: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(json)
    }
}

/// A scalar function with an analytic gradient, the integration substrate.
pub trait DifferentiableTarget {
    fn value(&self, x: &[f64]) -> f64;
    fn gradient(&self, x: &[f64]) -> Vec<f64>;
}

/// Right-sum integrated gradients over a flattened input.
///
/// attribution_j = (x_j − b_j) · (1/steps)·Σ_{k=1..steps} ∂F/∂x_j at
/// b + (k/steps)(x−b). Returns per-coordinate attributions and the
/// completeness gap |Σ attributions − (F(x) − F(b))|.
pub fn integrate_flat(
    target: &dyn DifferentiableTarget,
    x: &[f64],
    baseline: &[f64],
    steps: usize,
) -> Result<(Vec<f64>, f64), AttributionError> {
    if steps < 2 {
        return Err(AttributionError::InvalidSteps(steps));
    }
    assert_eq!(x.len(), baseline.len(), "baseline shape must match input");
    let dim = x.len();
    let mut avg_grad = vec![0.0; dim];
    let mut point = vec![0.0; dim];
    for k in 1..=steps {
        let alpha = k as f64 / steps as f64;
        for j in 0..dim {
            point[j] = baseline[j] + alpha * (x[j] - baseline[j]);
        }
        let grad = target.gradient(&point);
        for (a, g) in avg_grad.iter_mut().zip(&grad) {
            *a += g / steps as f64;
        }
    }
    let attributions: Vec<f64> = x
        .iter()
        .zip(baseline)
        .zip(&avg_grad)
        .map(|((xi, bi), g)| (xi - bi) * g)
        .collect();
    let total: f64 = attributions.iter().sum();
    let delta = (total - (target.value(x) - target.value(baseline))).abs();
    Ok((attributions, delta))
}

/// The sequence model viewed as a function of ONE post's flattened
/// token-embedding matrix (row-major, n_tokens × e_dim). Mean pooling makes
/// the pooled vector α-linear in the matrix, and the gradient of each cell
/// (i, j) is the pooled-gradient component j divided by the token count.
struct SequenceTarget<'a> {
    model: &'a SequenceModel,
    inputs: Vec<Array1<f64>>,
    target_index: usize,
    target_ling: Vec<f64>,
    n_tokens: usize,
    e_dim: usize,
}

impl SequenceTarget<'_> {
    fn assemble(&self, flat: &[f64]) -> Vec<Array1<f64>> {
        let mut pooled = vec![0.0; self.e_dim];
        if self.n_tokens > 0 {
            for row in 0..self.n_tokens {
                for j in 0..self.e_dim {
                    pooled[j] += flat[row * self.e_dim + j];
                }
            }
            for v in &mut pooled {
                *v /= self.n_tokens as f64;
            }
        }
        let mut inputs = self.inputs.clone();
        let mut target_vec = pooled;
        target_vec.extend(self.target_ling.iter().copied());
        inputs[self.target_index] = Array1::from(target_vec);
        inputs
    }
}

impl DifferentiableTarget for SequenceTarget<'_> {
    fn value(&self, x: &[f64]) -> f64 {
        let inputs = self.assemble(x);
        input_gradients(self.model, &inputs).expect("shapes fixed by construction").0
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let inputs = self.assemble(x);
        let (_, dx) = input_gradients(self.model, &inputs).expect("shapes fixed by construction");
        let pooled_grad = &dx[self.target_index];
        let mut grad = vec![0.0; self.n_tokens * self.e_dim];
        for row in 0..self.n_tokens {
            for j in 0..self.e_dim {
                grad[row * self.e_dim + j] = pooled_grad[j] / self.n_tokens as f64;
            }
        }
        grad
    }
}

/// Attribute the model's logit over the words of `posts[target_index]`.
pub fn integrated_gradients(
    model: &SequenceModel,
    posts: &[Post],
    target_index: usize,
    steps: usize,
    tagger: &dyn PosTagger,
) -> Result<AttributionResult, AttributionError> {
    if steps < 2 {
        return Err(AttributionError::InvalidSteps(steps));
    }
    if target_index >= posts.len() {
        return Err(AttributionError::InvalidTarget {
            index: target_index,
            n_posts: posts.len(),
        });
    }
    let encoder = HashingEncoder::new(&model.encoder, model.encoder_seed)?;
    let record = UserRecord {
        author: posts[target_index].author.clone(),
        posts: posts.to_vec(),
    };
    let inputs = prepare_user(&record, &encoder, tagger, &model.standardizer)?;

    let target_post = &posts[target_index];
    let embedded = encoder.encode(&post_document(target_post))?;
    let n_tokens = embedded.tokens.len();
    let e_dim = model.encoder.dim;
    let target_ling: Vec<f64> = inputs[target_index].iter().skip(e_dim).copied().collect();

    if n_tokens == 0 {
        return Ok(AttributionResult {
            post_id: target_post.id.clone(),
            tokens: Vec::new(),
            scores: Vec::new(),
            convergence_delta: 0.0,
            steps,
        });
    }

    let flat_x: Vec<f64> = embedded.vectors.iter().copied().collect();
    let baseline = vec![0.0; flat_x.len()];
    let target = SequenceTarget {
        model,
        inputs,
        target_index,
        target_ling,
        n_tokens,
        e_dim,
    };
    let (cell_attributions, delta) = integrate_flat(&target, &flat_x, &baseline, steps)?;

    // token score = sum of its embedding-cell attributions
    let scores: Vec<f64> = (0..n_tokens)
        .map(|row| cell_attributions[row * e_dim..(row + 1) * e_dim].iter().sum())
        .collect();

    Ok(AttributionResult {
        post_id: target_post.id.clone(),
        tokens: embedded.tokens,
        scores,
        convergence_delta: delta,
        steps,
    })
}

/// Merge continuation-marked subword tokens into whole words by summing
/// scores. The hashing backend never emits the marker, so merging is the
/// identity there.
pub fn merge_subwords(
    tokens: &[String],
    scores: &[f64],
    continuation_marker: &str,
) -> (Vec<String>, Vec<f64>) {
    assert_eq!(tokens.len(), scores.len());
    let mut out_tokens: Vec<String> = Vec::new();
    let mut out_scores: Vec<f64> = Vec::new();
    for (token, &score) in tokens.iter().zip(scores) {
        if let Some(stripped) = token.strip_prefix(continuation_marker) {
            if !continuation_marker.is_empty() && !out_tokens.is_empty() {
                let last = out_tokens.last_mut().unwrap();
                last.push_str(stripped);
                *out_scores.last_mut().unwrap() += score;
                continue;
            }
            out_tokens.push(stripped.to_string());
            out_scores.push(score);
        } else {
            out_tokens.push(token.clone());
            out_scores.push(score);
        }
    }
    (out_tokens, out_scores)
}

/// Scale scores into [−1, 1] by the maximum magnitude. All-zero scores come
/// back unchanged with the flag set.
pub fn normalize_scores(result: &AttributionResult) -> (AttributionResult, bool) {
    let max_abs = result.scores.iter().fold(0.0f64, |m, s| m.max(s.abs()));
    if max_abs == 0.0 {
        return (result.clone(), true);
    }
    let mut normalized = result.clone();
    for s in &mut normalized.scores {
        *s /= max_abs;
    }
    (normalized, false)
}
