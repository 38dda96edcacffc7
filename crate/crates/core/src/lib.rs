//! Cohort construction, propensity models, and attribution analysis for
//! work-related forum dumps.
//!
//! The crate is organized as a pipeline:
//!
//! 1. [`corpus`] — parse newline-delimited dump records into [`corpus::Post`]s,
//!    group them into per-user chronological histories, and sanitize text.
//! 2. [`cohort`] — assign antiwork/neutral labels from the temporal
//!    subreddit-proxy rule, balance classes by Gaussian-weighted sampling,
//!    and split into train/validation sets.
//! 3. [`features`] / [`encoder`] — TF-IDF, linguistic and engagement
//!    features; pluggable text embedding (hashing backend for offline use).
//! 4. [`classifier`] — linear baselines and the per-post embedding + GRU
//!    sequence model, with training and metrics.
//! 5. [`attribution`] — integrated-gradients word attribution with
//!    completeness diagnostics.
//! 6. [`analysis`] — lexicon category counts, rank tests with Bonferroni
//!    stars, and LDA topic modeling with salient-term extraction.
//! 7. [`report`] — color-coded static HTML rendering of attributions.
//!
//! [`synth`] generates seeded synthetic corpora so the whole pipeline can be
//! exercised without any real dump data; [`pipeline`] wires the stages
//! together behind file-based artifacts and is what the CLI calls into.

pub mod analysis;
pub mod attribution;
pub mod classifier;
pub mod cohort;
pub mod config;
pub mod corpus;
pub mod encoder;
pub mod features;
pub mod pipeline;
pub mod report;
pub mod synth;

pub use cohort::{CohortDataset, Label, LabelSchema, LabeledUser, SamplingConfig};
pub use corpus::{clean_text, group_users, parse_dump, Post, PostKind, UserRecord};
