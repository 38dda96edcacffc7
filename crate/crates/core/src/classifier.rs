//! The model ladder: random baseline, hinge-loss linear models, and the
//! per-post embedding + gated-recurrent sequence model, with training,
//! evaluation, and weight inspection.

use ndarray::{Array1, Array2};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohort::{CohortDataset, Label, LabeledUser};
use crate::corpus::UserRecord;
use crate::encoder::{Encoder, EncoderSpec, HashingEncoder};
use crate::features::tagger::PosTagger;
use crate::features::{post_document, post_linguistic_features, LinguisticFeatures};

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("training labels contain a single class; need both classes")]
    SingleClass,
    #[error("shape mismatch: expected {expected}, got {actual}")]
    Shape { expected: String, actual: String },
    #[error("{0} split is empty")]
    EmptySplit(&'static str),
    #[error("training diverged: non-finite loss at step {step}")]
    Diverged { step: usize },
    #[error("invalid checkpoint: {0}")]
    InvalidCheckpoint(String),
    #[error(transparent)]
    Encoder(#[from] crate::encoder::EncoderError),
    #[error(transparent)]
    Feature(#[from] crate::features::FeatureError),
}

// ---------------------------------------------------------------------------
// Metrics

/// Binary classification metrics with antiwork as the positive class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl Metrics {
    pub fn from_confusion(tp: usize, fp: usize, fn_: usize, tn: usize) -> Metrics {
        let n = (tp + fp + fn_ + tn) as f64;
        assert!(n > 0.0, "empty confusion matrix");
        let accuracy = (tp + tn) as f64 / n;
        let precision = if tp + fp > 0 {
            tp as f64 / (tp + fp) as f64
        } else {
            0.0
        };
        let recall = if tp + fn_ > 0 {
            tp as f64 / (tp + fn_) as f64
        } else {
            0.0
        };
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        Metrics {
            accuracy,
            precision,
            recall,
            f1,
        }
    }

    /// `preds` and `labels` use true = antiwork.
    pub fn from_predictions(preds: &[bool], labels: &[bool]) -> Metrics {
        assert_eq!(preds.len(), labels.len());
        let (mut tp, mut fp, mut fn_, mut tn) = (0, 0, 0, 0);
        for (&p, &y) in preds.iter().zip(labels) {
            match (p, y) {
                (true, true) => tp += 1,
                (true, false) => fp += 1,
                (false, true) => fn_ += 1,
                (false, false) => tn += 1,
            }
        }
        Metrics::from_confusion(tp, fp, fn_, tn)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("metrics serialize")
    }
}

/// Fixed-width text table of per-model metrics.
pub fn metrics_table(rows: &[(&str, Metrics)]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<28}{:>9}{:>10}{:>8}{:>10}\n",
        "Model", "Accuracy", "Precision", "Recall", "F1-score"
    ));
    for (name, m) in rows {
        out.push_str(&format!(
            "{:<28}{:>9.2}{:>10.2}{:>8.2}{:>10.2}\n",
            name, m.accuracy, m.precision, m.recall, m.f1
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// Random baseline

/// Coin-flip predictor; the floor of the model ladder.
pub struct RandomBaseline {
    rng: ChaCha8Rng,
}

impl RandomBaseline {
    pub fn new(seed: u64) -> Self {
        RandomBaseline {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn predict(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn predict_n(&mut self, n: usize) -> Vec<bool> {
        (0..n).map(|_| self.predict()).collect()
    }
}

pub fn random_baseline(seed: u64) -> RandomBaseline {
    RandomBaseline::new(seed)
}

// ---------------------------------------------------------------------------
// Linear models

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub feature_names: Vec<String>,
}

impl LinearModel {
    pub fn new(weights: Vec<f64>, bias: f64, feature_names: Vec<String>) -> Self {
        assert_eq!(
            weights.len(),
            feature_names.len(),
            "one name per weight"
        );
        LinearModel {
            weights,
            bias,
            feature_names,
        }
    }

    pub fn score(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.weights.len());
        self.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>() + self.bias
    }

    pub fn predict(&self, x: &[f64]) -> bool {
        self.score(x) > 0.0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct LinearHyper {
    pub l2: f64,
    pub epochs: usize,
    pub lr: f64,
    pub seed: u64,
}

impl Default for LinearHyper {
    fn default() -> Self {
        LinearHyper {
            l2: 1e-3,
            epochs: 200,
            lr: 0.1,
            seed: 0,
        }
    }
}

/// Full-batch subgradient descent on mean hinge loss + l2·‖w‖².
/// Deterministic: zero initialization, fixed iteration order.
pub fn train_linear(
    x: &[Vec<f64>],
    y: &[bool],
    feature_names: Vec<String>,
    hyper: LinearHyper,
) -> Result<LinearModel, ClassifierError> {
    if x.len() != y.len() {
        return Err(ClassifierError::Shape {
            expected: format!("{} labels", x.len()),
            actual: format!("{} labels", y.len()),
        });
    }
    if y.iter().all(|&v| v) || y.iter().all(|&v| !v) {
        return Err(ClassifierError::SingleClass);
    }
    let dim = feature_names.len();
    for row in x {
        if row.len() != dim {
            return Err(ClassifierError::Shape {
                expected: format!("feature dim {dim}"),
                actual: format!("feature dim {}", row.len()),
            });
        }
    }
    assert!(hyper.l2 > 0.0, "l2 must be positive");
    let n = x.len() as f64;
    let objective = |w: &[f64], b: f64| -> f64 {
        let hinge: f64 = x
            .iter()
            .zip(y)
            .map(|(row, &label)| {
                let sign = if label { 1.0 } else { -1.0 };
                let score = row.iter().zip(w).map(|(v, wi)| v * wi).sum::<f64>() + b;
                (1.0 - sign * score).max(0.0)
            })
            .sum::<f64>()
            / n;
        hinge + hyper.l2 * w.iter().map(|wi| wi * wi).sum::<f64>()
    };
    let mut w = vec![0.0; dim];
    let mut b = 0.0;
    let mut lr = hyper.lr;
    let mut best = objective(&w, b);
    for _ in 0..hyper.epochs {
        let mut gw = vec![0.0; dim];
        let mut gb = 0.0;
        for (row, &label) in x.iter().zip(y) {
            let sign = if label { 1.0 } else { -1.0 };
            let margin = sign * (row.iter().zip(&w).map(|(v, wi)| v * wi).sum::<f64>() + b);
            if margin < 1.0 {
                for (g, v) in gw.iter_mut().zip(row) {
                    *g -= sign * v / n;
                }
                gb -= sign / n;
            }
        }
        for (g, wi) in gw.iter_mut().zip(&w) {
            *g += 2.0 * hyper.l2 * wi;
        }
        let next_w: Vec<f64> = w.iter().zip(&gw).map(|(wi, g)| wi - lr * g).collect();
        let next_b = b - lr * gb;
        // subgradient steps can overshoot near the optimum; reverting the
        // epoch and halving the step keeps the loss trace non-increasing
        let next = objective(&next_w, next_b);
        if next <= best {
            w = next_w;
            b = next_b;
            best = next;
        } else {
            lr *= 0.5;
        }
    }
    Ok(LinearModel::new(w, b, feature_names))
}

/// Mean hinge + l2 objective, exposed for loss-trace tests.
pub fn hinge_objective(model: &LinearModel, x: &[Vec<f64>], y: &[bool], l2: f64) -> f64 {
    let n = x.len() as f64;
    let hinge: f64 = x
        .iter()
        .zip(y)
        .map(|(row, &label)| {
            let sign = if label { 1.0 } else { -1.0 };
            (1.0 - sign * model.score(row)).max(0.0)
        })
        .sum::<f64>()
        / n;
    hinge + l2 * model.weights.iter().map(|w| w * w).sum::<f64>()
}

/// Top-k features by |weight|, ties broken by feature name; k clamped to dim.
pub fn inspect_weights(model: &LinearModel, k: usize) -> Vec<(String, f64)> {
    let mut pairs: Vec<(String, f64)> = model
        .feature_names
        .iter()
        .cloned()
        .zip(model.weights.iter().copied())
        .collect();
    pairs.sort_by(|a, b| {
        b.1.abs()
            .partial_cmp(&a.1.abs())
            .unwrap()
            .then_with(|| a.0.cmp(&b.0))
    });
    pairs.truncate(k.min(model.weights.len()));
    pairs
}

pub fn evaluate_linear(model: &LinearModel, x: &[Vec<f64>], y: &[bool]) -> Metrics {
    let preds: Vec<bool> = x.iter().map(|row| model.predict(row)).collect();
    Metrics::from_predictions(&preds, y)
}

// ---------------------------------------------------------------------------
// Gated recurrent sequence model

/// Single-layer gated recurrent cell plus a hidden → logit head.
///
/// W_* are (H × D), U_* are (H × H); the update is
///   z = σ(W_z x + U_z h + b_z)
///   r = σ(W_r x + U_r h + b_r)
///   ĥ = tanh(W_h x + U_h (r⊙h) + b_h)
///   h' = (1−z)⊙h + z⊙ĥ
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GruParams {
    pub w_z: Array2<f64>,
    pub u_z: Array2<f64>,
    pub b_z: Array1<f64>,
    pub w_r: Array2<f64>,
    pub u_r: Array2<f64>,
    pub b_r: Array1<f64>,
    pub w_h: Array2<f64>,
    pub u_h: Array2<f64>,
    pub b_h: Array1<f64>,
    pub w_out: Array1<f64>,
    pub b_out: f64,
}

impl GruParams {
    pub fn zeros(input_dim: usize, hidden_dim: usize) -> Self {
        GruParams {
            w_z: Array2::zeros((hidden_dim, input_dim)),
            u_z: Array2::zeros((hidden_dim, hidden_dim)),
            b_z: Array1::zeros(hidden_dim),
            w_r: Array2::zeros((hidden_dim, input_dim)),
            u_r: Array2::zeros((hidden_dim, hidden_dim)),
            b_r: Array1::zeros(hidden_dim),
            w_h: Array2::zeros((hidden_dim, input_dim)),
            u_h: Array2::zeros((hidden_dim, hidden_dim)),
            b_h: Array1::zeros(hidden_dim),
            w_out: Array1::zeros(hidden_dim),
            b_out: 0.0,
        }
    }

    pub fn seeded(input_dim: usize, hidden_dim: usize, rng: &mut ChaCha8Rng) -> Self {
        let scale = 1.0 / ((input_dim + hidden_dim) as f64).sqrt();
        let mat = |rows: usize, cols: usize, rng: &mut ChaCha8Rng| {
            Array2::from_shape_fn((rows, cols), |_| (2.0 * rng.random::<f64>() - 1.0) * scale)
        };
        let w_z = mat(hidden_dim, input_dim, rng);
        let u_z = mat(hidden_dim, hidden_dim, rng);
        let w_r = mat(hidden_dim, input_dim, rng);
        let u_r = mat(hidden_dim, hidden_dim, rng);
        let w_h = mat(hidden_dim, input_dim, rng);
        let u_h = mat(hidden_dim, hidden_dim, rng);
        let w_out =
            Array1::from_shape_fn(hidden_dim, |_| (2.0 * rng.random::<f64>() - 1.0) * scale);
        GruParams {
            w_z,
            u_z,
            b_z: Array1::zeros(hidden_dim),
            w_r,
            u_r,
            b_r: Array1::zeros(hidden_dim),
            w_h,
            u_h,
            b_h: Array1::zeros(hidden_dim),
            w_out,
            b_out: 0.0,
        }
    }

    pub fn input_dim(&self) -> usize {
        self.w_z.ncols()
    }

    pub fn hidden_dim(&self) -> usize {
        self.w_z.nrows()
    }

    fn slices_mut(&mut self) -> Vec<&mut [f64]> {
        vec![
            self.w_z.as_slice_mut().unwrap(),
            self.u_z.as_slice_mut().unwrap(),
            self.b_z.as_slice_mut().unwrap(),
            self.w_r.as_slice_mut().unwrap(),
            self.u_r.as_slice_mut().unwrap(),
            self.b_r.as_slice_mut().unwrap(),
            self.w_h.as_slice_mut().unwrap(),
            self.u_h.as_slice_mut().unwrap(),
            self.b_h.as_slice_mut().unwrap(),
            self.w_out.as_slice_mut().unwrap(),
            std::slice::from_mut(&mut self.b_out),
        ]
    }

    fn slices(&self) -> Vec<&[f64]> {
        vec![
            self.w_z.as_slice().unwrap(),
            self.u_z.as_slice().unwrap(),
            self.b_z.as_slice().unwrap(),
            self.w_r.as_slice().unwrap(),
            self.u_r.as_slice().unwrap(),
            self.b_r.as_slice().unwrap(),
            self.w_h.as_slice().unwrap(),
            self.u_h.as_slice().unwrap(),
            self.b_h.as_slice().unwrap(),
            self.w_out.as_slice().unwrap(),
            std::slice::from_ref(&self.b_out),
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.slices().iter().all(|s| s.iter().all(|v| v.is_finite()))
    }
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

struct StepCache {
    x: Array1<f64>,
    h_prev: Array1<f64>,
    z: Array1<f64>,
    r: Array1<f64>,
    hh: Array1<f64>,
}

struct ForwardPass {
    steps: Vec<StepCache>,
    h_last: Array1<f64>,
    logit: f64,
}

fn forward_cached(params: &GruParams, inputs: &[Array1<f64>]) -> ForwardPass {
    let hidden = params.hidden_dim();
    let mut h = Array1::zeros(hidden);
    let mut steps = Vec::with_capacity(inputs.len());
    for x in inputs {
        let z = (params.w_z.dot(x) + params.u_z.dot(&h) + &params.b_z).mapv(sigmoid);
        let r = (params.w_r.dot(x) + params.u_r.dot(&h) + &params.b_r).mapv(sigmoid);
        let rh = &r * &h;
        let hh = (params.w_h.dot(x) + params.u_h.dot(&rh) + &params.b_h).mapv(f64::tanh);
        let h_next = (1.0 - &z) * &h + &z * &hh;
        steps.push(StepCache {
            x: x.clone(),
            h_prev: h,
            z,
            r,
            hh,
        });
        h = h_next;
    }
    let logit = params.w_out.dot(&h) + params.b_out;
    ForwardPass {
        steps,
        h_last: h,
        logit,
    }
}

/// Parameter gradients, same shapes as [`GruParams`].
#[derive(Debug, Clone)]
pub struct GruGrads {
    pub w_z: Array2<f64>,
    pub u_z: Array2<f64>,
    pub b_z: Array1<f64>,
    pub w_r: Array2<f64>,
    pub u_r: Array2<f64>,
    pub b_r: Array1<f64>,
    pub w_h: Array2<f64>,
    pub u_h: Array2<f64>,
    pub b_h: Array1<f64>,
    pub w_out: Array1<f64>,
    pub b_out: f64,
}

impl GruGrads {
    fn zeros_like(p: &GruParams) -> Self {
        GruGrads {
            w_z: Array2::zeros(p.w_z.raw_dim()),
            u_z: Array2::zeros(p.u_z.raw_dim()),
            b_z: Array1::zeros(p.b_z.raw_dim()),
            w_r: Array2::zeros(p.w_r.raw_dim()),
            u_r: Array2::zeros(p.u_r.raw_dim()),
            b_r: Array1::zeros(p.b_r.raw_dim()),
            w_h: Array2::zeros(p.w_h.raw_dim()),
            u_h: Array2::zeros(p.u_h.raw_dim()),
            b_h: Array1::zeros(p.b_h.raw_dim()),
            w_out: Array1::zeros(p.w_out.raw_dim()),
            b_out: 0.0,
        }
    }

    fn slices_mut(&mut self) -> Vec<&mut [f64]> {
        vec![
            self.w_z.as_slice_mut().unwrap(),
            self.u_z.as_slice_mut().unwrap(),
            self.b_z.as_slice_mut().unwrap(),
            self.w_r.as_slice_mut().unwrap(),
            self.u_r.as_slice_mut().unwrap(),
            self.b_r.as_slice_mut().unwrap(),
            self.w_h.as_slice_mut().unwrap(),
            self.u_h.as_slice_mut().unwrap(),
            self.b_h.as_slice_mut().unwrap(),
            self.w_out.as_slice_mut().unwrap(),
            std::slice::from_mut(&mut self.b_out),
        ]
    }

    fn global_norm(&mut self) -> f64 {
        self.slices_mut()
            .iter()
            .map(|s| s.iter().map(|v| v * v).sum::<f64>())
            .sum::<f64>()
            .sqrt()
    }

    fn scale(&mut self, factor: f64) {
        for s in self.slices_mut() {
            for v in s {
                *v *= factor;
            }
        }
    }
}

fn outer(a: &Array1<f64>, b: &Array1<f64>) -> Array2<f64> {
    let mut out = Array2::zeros((a.len(), b.len()));
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[(i, j)] = ai * bj;
        }
    }
    out
}

/// Backpropagate `d_logit` through the unrolled cell. Returns parameter
/// gradients and per-step input gradients (the attribution surface).
fn backward(params: &GruParams, pass: &ForwardPass, d_logit: f64) -> (GruGrads, Vec<Array1<f64>>) {
    let mut grads = GruGrads::zeros_like(params);
    grads.w_out = &pass.h_last * d_logit;
    grads.b_out = d_logit;
    let mut dh = &params.w_out * d_logit;
    let mut dx_list = vec![Array1::zeros(params.input_dim()); pass.steps.len()];
    for (t, step) in pass.steps.iter().enumerate().rev() {
        let dz = &dh * &(&step.hh - &step.h_prev);
        let dhh = &dh * &step.z;
        let dhh_pre = dhh * step.hh.mapv(|v| 1.0 - v * v);
        let dr = params.u_h.t().dot(&dhh_pre) * &step.h_prev;
        let dr_pre = dr * step.r.mapv(|v| v * (1.0 - v));
        let dz_pre = dz * step.z.mapv(|v| v * (1.0 - v));

        grads.w_z = grads.w_z + outer(&dz_pre, &step.x);
        grads.u_z = grads.u_z + outer(&dz_pre, &step.h_prev);
        grads.b_z = grads.b_z + &dz_pre;
        grads.w_r = grads.w_r + outer(&dr_pre, &step.x);
        grads.u_r = grads.u_r + outer(&dr_pre, &step.h_prev);
        grads.b_r = grads.b_r + &dr_pre;
        grads.w_h = grads.w_h + outer(&dhh_pre, &step.x);
        let rh = &step.r * &step.h_prev;
        grads.u_h = grads.u_h + outer(&dhh_pre, &rh);
        grads.b_h = grads.b_h + &dhh_pre;

        dx_list[t] = params.w_z.t().dot(&dz_pre)
            + params.w_r.t().dot(&dr_pre)
            + params.w_h.t().dot(&dhh_pre);

        dh = &dh * &(1.0 - &step.z)
            + params.u_z.t().dot(&dz_pre)
            + params.u_r.t().dot(&dr_pre)
            + params.u_h.t().dot(&dhh_pre) * &step.r;
    }
    (grads, dx_list)
}

/// Standardization constants for the linguistic feature block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Standardizer {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

impl Standardizer {
    /// Population mean/std per component; zero spread clamps to 1 so the
    /// transform stays defined.
    pub fn fit(rows: &[[f64; LinguisticFeatures::DIM]]) -> Standardizer {
        let dim = LinguisticFeatures::DIM;
        let n = rows.len().max(1) as f64;
        let mut mean = vec![0.0; dim];
        for row in rows {
            for (m, v) in mean.iter_mut().zip(row) {
                *m += v;
            }
        }
        for m in &mut mean {
            *m /= n;
        }
        let mut var = vec![0.0; dim];
        for row in rows {
            for ((s, v), m) in var.iter_mut().zip(row).zip(&mean) {
                *s += (v - m) * (v - m);
            }
        }
        let std = var
            .into_iter()
            .map(|s| {
                let sd = (s / n).sqrt();
                if sd > 0.0 {
                    sd
                } else {
                    1.0
                }
            })
            .collect();
        Standardizer { mean, std }
    }

    pub fn identity() -> Standardizer {
        Standardizer {
            mean: vec![0.0; LinguisticFeatures::DIM],
            std: vec![1.0; LinguisticFeatures::DIM],
        }
    }

    pub fn apply(&self, features: &LinguisticFeatures) -> [f64; LinguisticFeatures::DIM] {
        let mut v = features.to_vec();
        for ((x, m), s) in v.iter_mut().zip(&self.mean).zip(&self.std) {
            *x = (*x - m) / s;
        }
        v
    }
}

/// Sequence model checkpoint: cell parameters plus everything needed to
/// reproduce the per-post input vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceModel {
    pub version: u32,
    pub input_dim: usize,
    pub hidden_dim: usize,
    pub params: GruParams,
    pub encoder: EncoderSpec,
    pub encoder_seed: u64,
    pub standardizer: Standardizer,
}

pub const CHECKPOINT_VERSION: u32 = 1;

impl SequenceModel {
    pub fn zeros(input_dim: usize, hidden_dim: usize) -> Self {
        SequenceModel {
            version: CHECKPOINT_VERSION,
            input_dim,
            hidden_dim,
            params: GruParams::zeros(input_dim, hidden_dim),
            encoder: EncoderSpec::hashing(input_dim - LinguisticFeatures::DIM),
            encoder_seed: 0,
            standardizer: Standardizer::identity(),
        }
    }

    fn check_shapes(&self) -> Result<(), ClassifierError> {
        let p = &self.params;
        let ok = p.input_dim() == self.input_dim
            && p.hidden_dim() == self.hidden_dim
            && p.u_z.dim() == (self.hidden_dim, self.hidden_dim)
            && p.w_out.len() == self.hidden_dim
            && self.standardizer.mean.len() == LinguisticFeatures::DIM
            && self.encoder.dim + LinguisticFeatures::DIM == self.input_dim;
        if ok {
            Ok(())
        } else {
            Err(ClassifierError::InvalidCheckpoint(format!(
                "inconsistent shapes for input_dim={} hidden_dim={}",
                self.input_dim, self.hidden_dim
            )))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serializes")
    }

    pub fn from_json(json: &str) -> Result<Self, ClassifierError> {
        let model: SequenceModel = serde_json::from_str(json)
            .map_err(|e| ClassifierError::InvalidCheckpoint(e.to_string()))?;
        if model.version != CHECKPOINT_VERSION {
            return Err(ClassifierError::InvalidCheckpoint(format!(
                "unsupported checkpoint version {}",
                model.version
            )));
        }
        model.check_shapes()?;
        Ok(model)
    }
}

/// Run the cell over a user's per-post vectors and return the logit.
pub fn forward_sequence(
    model: &SequenceModel,
    posts: &[Array1<f64>],
) -> Result<f64, ClassifierError> {
    if posts.is_empty() {
        return Err(ClassifierError::EmptySplit("input sequence"));
    }
    for p in posts {
        if p.len() != model.input_dim {
            return Err(ClassifierError::Shape {
                expected: format!("per-post dim {}", model.input_dim),
                actual: format!("per-post dim {}", p.len()),
            });
        }
    }
    Ok(forward_cached(&model.params, posts).logit)
}

/// Logit gradient with respect to each per-post input vector.
pub fn input_gradients(
    model: &SequenceModel,
    posts: &[Array1<f64>],
) -> Result<(f64, Vec<Array1<f64>>), ClassifierError> {
    if posts.is_empty() {
        return Err(ClassifierError::EmptySplit("input sequence"));
    }
    let pass = forward_cached(&model.params, posts);
    let (_, dx) = backward(&model.params, &pass, 1.0);
    Ok((pass.logit, dx))
}

/// Logit gradient with respect to every cell parameter and input vector.
pub fn parameter_gradients(
    model: &SequenceModel,
    posts: &[Array1<f64>],
) -> Result<(f64, GruGrads, Vec<Array1<f64>>), ClassifierError> {
    if posts.is_empty() {
        return Err(ClassifierError::EmptySplit("input sequence"));
    }
    let pass = forward_cached(&model.params, posts);
    let (grads, dx) = backward(&model.params, &pass, 1.0);
    Ok((pass.logit, grads, dx))
}

#[derive(Debug, Clone, Copy)]
pub struct SequenceHyper {
    pub lr: f64,
    pub epochs: usize,
    pub hidden: usize,
    pub seed: u64,
    pub grad_clip: f64,
}

impl Default for SequenceHyper {
    fn default() -> Self {
        SequenceHyper {
            lr: 1e-3,
            epochs: 30,
            hidden: 128,
            seed: 0,
            grad_clip: 1.0,
        }
    }
}

/// One user's prepared input sequence plus its binary label.
#[derive(Debug, Clone)]
pub struct SequenceExample {
    pub inputs: Vec<Array1<f64>>,
    pub label: bool,
}

struct Adam {
    m: Vec<Vec<f64>>,
    v: Vec<Vec<f64>>,
    t: u64,
    lr: f64,
}

impl Adam {
    const BETA1: f64 = 0.9;
    const BETA2: f64 = 0.999;
    const EPS: f64 = 1e-8;

    fn new(params: &GruParams, lr: f64) -> Adam {
        let shapes: Vec<usize> = params.slices().iter().map(|s| s.len()).collect();
        Adam {
            m: shapes.iter().map(|&n| vec![0.0; n]).collect(),
            v: shapes.iter().map(|&n| vec![0.0; n]).collect(),
            t: 0,
            lr,
        }
    }

    fn step(&mut self, params: &mut GruParams, grads: &mut GruGrads) {
        self.t += 1;
        let bc1 = 1.0 - Self::BETA1.powi(self.t as i32);
        let bc2 = 1.0 - Self::BETA2.powi(self.t as i32);
        for ((param, grad), (m, v)) in params
            .slices_mut()
            .into_iter()
            .zip(grads.slices_mut())
            .zip(self.m.iter_mut().zip(self.v.iter_mut()))
        {
            for i in 0..param.len() {
                m[i] = Self::BETA1 * m[i] + (1.0 - Self::BETA1) * grad[i];
                v[i] = Self::BETA2 * v[i] + (1.0 - Self::BETA2) * grad[i] * grad[i];
                let m_hat = m[i] / bc1;
                let v_hat = v[i] / bc2;
                param[i] -= self.lr * m_hat / (v_hat.sqrt() + Self::EPS);
            }
        }
    }
}

fn bce_with_logit(logit: f64, label: bool) -> (f64, f64) {
    let y = if label { 1.0 } else { 0.0 };
    // stable: max(l,0) − l·y + ln(1 + e^{−|l|})
    let loss = logit.max(0.0) - logit * y + (-logit.abs()).exp().ln_1p();
    let d_logit = sigmoid(logit) - y;
    (loss, d_logit)
}

/// Train the cell on prepared sequences. Single-threaded and deterministic
/// under `hyper.seed`; returns the parameters of the best validation-F1 epoch.
pub fn train_on_sequences(
    train: &[SequenceExample],
    val: &[SequenceExample],
    input_dim: usize,
    hyper: &SequenceHyper,
) -> Result<(GruParams, Metrics), ClassifierError> {
    if train.is_empty() {
        return Err(ClassifierError::EmptySplit("train"));
    }
    if val.is_empty() {
        return Err(ClassifierError::EmptySplit("validation"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
    let mut params = GruParams::seeded(input_dim, hyper.hidden, &mut rng);
    let mut adam = Adam::new(&params, hyper.lr);
    let eval = |params: &GruParams| -> Metrics {
        let preds: Vec<bool> = val
            .iter()
            .map(|ex| forward_cached(params, &ex.inputs).logit > 0.0)
            .collect();
        let labels: Vec<bool> = val.iter().map(|ex| ex.label).collect();
        Metrics::from_predictions(&preds, &labels)
    };
    let mut best = params.clone();
    let mut best_metrics = eval(&params);
    let mut step = 0usize;
    let mut order: Vec<usize> = (0..train.len()).collect();
    for _ in 0..hyper.epochs {
        order.shuffle(&mut rng);
        for &idx in &order {
            let ex = &train[idx];
            if ex.inputs.is_empty() {
                continue;
            }
            let pass = forward_cached(&params, &ex.inputs);
            let (loss, d_logit) = bce_with_logit(pass.logit, ex.label);
            if !loss.is_finite() {
                return Err(ClassifierError::Diverged { step });
            }
            let (mut grads, _) = backward(&params, &pass, d_logit);
            let norm = grads.global_norm();
            if norm > hyper.grad_clip && norm > 0.0 {
                grads.scale(hyper.grad_clip / norm);
            }
            adam.step(&mut params, &mut grads);
            if !params.is_finite() {
                return Err(ClassifierError::Diverged { step });
            }
            step += 1;
        }
        let metrics = eval(&params);
        if metrics.f1 > best_metrics.f1 {
            best_metrics = metrics;
            best = params.clone();
        }
    }
    Ok((best, best_metrics))
}

/// Build the per-post input vector sequence for one user: pooled embedding
/// concatenated with standardized linguistic counts, chronological order.
pub fn prepare_user(
    record: &UserRecord,
    encoder: &dyn Encoder,
    tagger: &dyn PosTagger,
    standardizer: &Standardizer,
) -> Result<Vec<Array1<f64>>, ClassifierError> {
    let mut inputs = Vec::with_capacity(record.posts.len());
    for post in &record.posts {
        let text = post_document(post);
        let embedded = encoder.encode(&text)?;
        let ling = standardizer.apply(&post_linguistic_features(post, tagger)?);
        let mut v = Vec::with_capacity(encoder.dim() + LinguisticFeatures::DIM);
        v.extend(embedded.pooled.iter().copied());
        v.extend(ling);
        inputs.push(Array1::from(v));
    }
    Ok(inputs)
}

fn labeled_examples(
    users: &[LabeledUser],
    encoder: &dyn Encoder,
    tagger: &dyn PosTagger,
    standardizer: &Standardizer,
) -> Result<Vec<SequenceExample>, ClassifierError> {
    let mut out = Vec::new();
    for user in users {
        let label = match user.label {
            Label::Antiwork => true,
            Label::Neutral => false,
            Label::Excluded => continue,
        };
        let inputs = prepare_user(&user.record, encoder, tagger, standardizer)?;
        if inputs.is_empty() {
            continue;
        }
        out.push(SequenceExample { inputs, label });
    }
    Ok(out)
}

/// End-to-end sequence-model training from a labeled cohort.
pub fn train_sequence(
    dataset: &CohortDataset,
    encoder_spec: &EncoderSpec,
    encoder_seed: u64,
    tagger: &dyn PosTagger,
    hyper: &SequenceHyper,
) -> Result<(SequenceModel, Metrics), ClassifierError> {
    let encoder = HashingEncoder::new(encoder_spec, encoder_seed)?;
    // standardization constants come from train posts only
    let mut train_rows = Vec::new();
    for user in &dataset.train {
        if user.label == Label::Excluded {
            continue;
        }
        for post in &user.record.posts {
            train_rows.push(post_linguistic_features(post, tagger)?.to_vec());
        }
    }
    let standardizer = Standardizer::fit(&train_rows);
    let train = labeled_examples(&dataset.train, &encoder, tagger, &standardizer)?;
    let val = labeled_examples(&dataset.val, &encoder, tagger, &standardizer)?;
    let input_dim = encoder_spec.dim + LinguisticFeatures::DIM;
    let (params, best_metrics) = train_on_sequences(&train, &val, input_dim, hyper)?;
    let model = SequenceModel {
        version: CHECKPOINT_VERSION,
        input_dim,
        hidden_dim: hyper.hidden,
        params,
        encoder: encoder_spec.clone(),
        encoder_seed,
        standardizer,
    };
    Ok((model, best_metrics))
}

/// Evaluate the sequence model on prepared examples; threshold logit at 0.
pub fn evaluate_sequences(model: &SequenceModel, examples: &[SequenceExample]) -> Metrics {
    assert!(!examples.is_empty(), "empty evaluation split");
    let preds: Vec<bool> = examples
        .iter()
        .map(|ex| forward_cached(&model.params, &ex.inputs).logit > 0.0)
        .collect();
    let labels: Vec<bool> = examples.iter().map(|ex| ex.label).collect();
    Metrics::from_predictions(&preds, &labels)
}

/// Evaluate a trained model on a labeled user split.
pub fn evaluate(model: &SequenceModel, users: &[LabeledUser]) -> Result<Metrics, ClassifierError> {
    let encoder = HashingEncoder::new(&model.encoder, model.encoder_seed)?;
    let tagger = crate::features::tagger::RuleTagger::new();
    let examples = labeled_examples(users, &encoder, &tagger, &model.standardizer)?;
    if examples.is_empty() {
        return Err(ClassifierError::EmptySplit("evaluation"));
    }
    Ok(evaluate_sequences(model, &examples))
}
