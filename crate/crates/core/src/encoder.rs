//! Text-to-vector embedding backends behind one interface.
//!
//! The hashing backend is fully offline and deterministic: each whitespace
//! token hashes to a row of a seeded pseudo-random table and a post is the
//! mean of its token rows. The transformer backend is an interface stub:
//! loading pretrained weights needs a model runtime this crate does not
//! bundle, so construction reports the backend as unavailable.

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EncoderError {
    #[error("invalid encoder spec: {0}")]
    InvalidSpec(String),
    #[error(
        "transformer backend unavailable (no bundled weights or model runtime); \
         configure backend = \"hashing\" instead"
    )]
    BackendUnavailable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncoderBackend {
    Transformer,
    Hashing,
}

/// Which backend to build and its shape parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncoderSpec {
    pub backend: EncoderBackend,
    pub dim: usize,
    pub max_tokens: usize,
}

pub const TRANSFORMER_DIM: usize = 768;
pub const DEFAULT_HASHING_DIM: usize = 64;
pub const DEFAULT_MAX_TOKENS: usize = 512;

impl EncoderSpec {
    pub fn transformer() -> Self {
        EncoderSpec {
            backend: EncoderBackend::Transformer,
            dim: TRANSFORMER_DIM,
            max_tokens: DEFAULT_MAX_TOKENS,
        }
    }

    pub fn hashing(dim: usize) -> Self {
        EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim,
            max_tokens: DEFAULT_MAX_TOKENS,
        }
    }

    pub fn validate(&self) -> Result<(), EncoderError> {
        if self.dim == 0 {
            return Err(EncoderError::InvalidSpec("dim must be positive".into()));
        }
        if self.max_tokens == 0 {
            return Err(EncoderError::InvalidSpec(
                "max_tokens must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl Default for EncoderSpec {
    fn default() -> Self {
        EncoderSpec::hashing(DEFAULT_HASHING_DIM)
    }
}

/// Per-post embedding: one row per kept token plus the mean-pooled vector.
#[derive(Debug, Clone, PartialEq)]
pub struct TokenEmbeddingSequence {
    pub tokens: Vec<String>,
    pub vectors: Array2<f64>,
    pub pooled: Array1<f64>,
}

impl TokenEmbeddingSequence {
    /// Build from token rows; pooling is the token mean, or the zero vector
    /// when there are no tokens.
    pub fn from_rows(tokens: Vec<String>, vectors: Array2<f64>) -> Self {
        assert_eq!(tokens.len(), vectors.nrows(), "one row per token");
        let dim = vectors.ncols();
        let pooled = if tokens.is_empty() {
            Array1::zeros(dim)
        } else {
            let mut sum = Array1::zeros(dim);
            for row in vectors.rows() {
                sum = sum + &row;
            }
            sum / tokens.len() as f64
        };
        TokenEmbeddingSequence {
            tokens,
            vectors,
            pooled,
        }
    }

    pub fn dim(&self) -> usize {
        self.pooled.len()
    }
}

pub trait Encoder: Send + Sync {
    fn dim(&self) -> usize;
    fn encode(&self, text: &str) -> Result<TokenEmbeddingSequence, EncoderError>;
}

const TABLE_ROWS: u64 = 1 << 16;

/// FNV-1a, fixed here so hashes never drift across toolchains.
fn fnv1a64(s: &str) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in s.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Deterministic seeded-table encoder.
#[derive(Debug, Clone)]
pub struct HashingEncoder {
    dim: usize,
    max_tokens: usize,
    seed: u64,
}

impl HashingEncoder {
    pub fn new(spec: &EncoderSpec, seed: u64) -> Result<Self, EncoderError> {
        spec.validate()?;
        if spec.backend != EncoderBackend::Hashing {
            return Err(EncoderError::InvalidSpec(
                "HashingEncoder requires backend = hashing".into(),
            ));
        }
        Ok(HashingEncoder {
            dim: spec.dim,
            max_tokens: spec.max_tokens,
            seed,
        })
    }

    pub fn with_defaults(seed: u64) -> Self {
        HashingEncoder {
            dim: DEFAULT_HASHING_DIM,
            max_tokens: DEFAULT_MAX_TOKENS,
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Table row index for a token.
    pub fn row_index(token: &str) -> usize {
        (fnv1a64(token) % TABLE_ROWS) as usize
    }

    /// Materialize one row of the embedding table: dim pseudo-random values
    /// in [-1, 1)/sqrt(dim), derived only from (seed, index).
    pub fn table_row(&self, index: usize) -> Array1<f64> {
        let stream = self
            .seed
            .wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(index as u64 + 1));
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        let scale = 1.0 / (self.dim as f64).sqrt();
        Array1::from_iter((0..self.dim).map(|_| (2.0 * rng.random::<f64>() - 1.0) * scale))
    }

    pub fn token_vector(&self, token: &str) -> Array1<f64> {
        self.table_row(Self::row_index(token))
    }
}

impl Encoder for HashingEncoder {
    fn dim(&self) -> usize {
        self.dim
    }

    fn encode(&self, text: &str) -> Result<TokenEmbeddingSequence, EncoderError> {
        let tokens: Vec<String> = text
            .split_whitespace()
            .take(self.max_tokens)
            .map(str::to_string)
            .collect();
        let mut vectors = Array2::zeros((tokens.len(), self.dim));
        for (i, token) in tokens.iter().enumerate() {
            vectors.row_mut(i).assign(&self.token_vector(token));
        }
        Ok(TokenEmbeddingSequence::from_rows(tokens, vectors))
    }
}

/// Pretrained-transformer backend stub. Kept so configs referencing it fail
/// loudly with a actionable message rather than silently downgrading.
#[derive(Debug)]
pub struct TransformerEncoder;

impl TransformerEncoder {
    pub fn load(_model_name: &str) -> Result<Self, EncoderError> {
        Err(EncoderError::BackendUnavailable)
    }
}

/// Build the encoder named by a spec.
pub fn build_encoder(
    spec: &EncoderSpec,
    seed: u64,
    model_name: &str,
) -> Result<Box<dyn Encoder>, EncoderError> {
    spec.validate()?;
    match spec.backend {
        EncoderBackend::Hashing => Ok(Box::new(HashingEncoder::new(spec, seed)?)),
        EncoderBackend::Transformer => {
            TransformerEncoder::load(model_name)?;
            unreachable!("transformer load cannot currently succeed")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn empty_text_pools_to_zero() {
        let enc = HashingEncoder::with_defaults(7);
        let seq = enc.encode("").unwrap();
        assert!(seq.tokens.is_empty());
        assert_eq!(seq.vectors.nrows(), 0);
        assert_eq!(seq.pooled.len(), DEFAULT_HASHING_DIM);
        assert!(seq.pooled.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn identical_strings_are_bitwise_identical() {
        let enc = HashingEncoder::with_defaults(1234);
        let a = enc.encode("my boss quit today").unwrap();
        let b = enc.encode("my boss quit today").unwrap();
        assert_eq!(a.pooled.as_slice().unwrap(), b.pooled.as_slice().unwrap());
        assert_eq!(a.tokens, b.tokens);
    }

    #[test]
    fn pooled_is_mean_of_table_rows() {
        let enc = HashingEncoder::with_defaults(99);
        let seq = enc.encode("hello world").unwrap();
        let expected = (enc.table_row(HashingEncoder::row_index("hello"))
            + enc.table_row(HashingEncoder::row_index("world")))
            / 2.0;
        assert_eq!(seq.tokens, vec!["hello", "world"]);
        for (got, want) in seq.pooled.iter().zip(expected.iter()) {
            assert_relative_eq!(got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn pooled_dim_matches_spec_for_any_text() {
        let spec = EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim: 17,
            max_tokens: 8,
        };
        let enc = HashingEncoder::new(&spec, 5).unwrap();
        for text in ["", "x", "a b c d e f g h i j k l"] {
            assert_eq!(enc.encode(text).unwrap().pooled.len(), 17);
        }
    }

    #[test]
    fn mean_pooling_is_permutation_invariant() {
        let enc = HashingEncoder::with_defaults(3);
        let abc = enc.encode("a b c").unwrap();
        let cba = enc.encode("c b a").unwrap();
        for (x, y) in abc.pooled.iter().zip(cba.pooled.iter()) {
            assert_relative_eq!(x, y, epsilon = 1e-15);
        }
        let norm = abc.pooled.dot(&abc.pooled).sqrt();
        let cosine_self = abc.pooled.dot(&abc.pooled) / (norm * norm);
        assert_relative_eq!(cosine_self, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn truncates_to_max_tokens() {
        let spec = EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim: 4,
            max_tokens: 3,
        };
        let enc = HashingEncoder::new(&spec, 0).unwrap();
        let long: String = (0..50).map(|i| format!("w{i} ")).collect();
        let seq = enc.encode(&long).unwrap();
        assert_eq!(seq.tokens.len(), 3);
        assert_eq!(seq.vectors.nrows(), 3);
    }

    #[test]
    fn transformer_backend_reports_unavailable() {
        let err = match build_encoder(&EncoderSpec::transformer(), 0, "roberta-base") {
            Err(e) => e,
            Ok(_) => panic!("transformer backend unexpectedly available"),
        };
        let msg = err.to_string();
        assert!(msg.contains("unavailable"));
        assert!(msg.contains("hashing"));
    }

    #[test]
    fn seed_changes_table() {
        let a = HashingEncoder::with_defaults(1);
        let b = HashingEncoder::with_defaults(2);
        assert_ne!(
            a.encode("hello").unwrap().pooled.as_slice().unwrap(),
            b.encode("hello").unwrap().pooled.as_slice().unwrap()
        );
    }

    #[test]
    fn invalid_specs_rejected() {
        let zero_dim = EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim: 0,
            max_tokens: 1,
        };
        assert!(HashingEncoder::new(&zero_dim, 0).is_err());
        let zero_tokens = EncoderSpec {
            backend: EncoderBackend::Hashing,
            dim: 1,
            max_tokens: 0,
        };
        assert!(HashingEncoder::new(&zero_tokens, 0).is_err());
    }
}
