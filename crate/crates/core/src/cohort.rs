//! Temporal subreddit-proxy labeling, Gaussian-weighted class balancing,
//! and stratified train/validation splitting.
//!
//! A user is `antiwork` when some target-subreddit post comes strictly after
//! a neutral-subreddit post of theirs, `neutral` when every post is in a
//! neutral subreddit, and `excluded` otherwise. No time window is applied;
//! only the existence of the temporal order matters.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::UserRecord;

#[derive(Debug, Error)]
pub enum CohortError {
    #[error("neutral pool has {available} users, need {needed}")]
    PoolTooSmall { needed: usize, available: usize },
    #[error("class {label:?} has {size} users, need at least 2 to split")]
    ClassTooSmall { label: Label, size: usize },
    #[error("invalid cohort configuration: {0}")]
    InvalidConfig(String),
}

/// Which subreddits stand in for each class.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LabelSchema {
    pub target_subreddit: String,
    pub neutral_subreddits: BTreeSet<String>,
}

impl Default for LabelSchema {
    fn default() -> Self {
        Self {
            target_subreddit: "antiwork".into(),
            neutral_subreddits: ["recruiting", "recruitinghell", "work", "jobs"]
                .into_iter()
                .map(String::from)
                .collect(),
        }
    }
}

impl LabelSchema {
    pub fn new(
        target: impl Into<String>,
        neutral: impl IntoIterator<Item = String>,
    ) -> Result<Self, CohortError> {
        let schema = Self {
            target_subreddit: target.into().to_lowercase(),
            neutral_subreddits: neutral.into_iter().map(|s| s.to_lowercase()).collect(),
        };
        schema.validate()?;
        Ok(schema)
    }

    pub fn validate(&self) -> Result<(), CohortError> {
        if self.target_subreddit.is_empty() {
            return Err(CohortError::InvalidConfig("empty target subreddit".into()));
        }
        if self.neutral_subreddits.is_empty() {
            return Err(CohortError::InvalidConfig("empty neutral set".into()));
        }
        if self.neutral_subreddits.contains(&self.target_subreddit) {
            return Err(CohortError::InvalidConfig(format!(
                "target subreddit {:?} also in neutral set",
                self.target_subreddit
            )));
        }
        Ok(())
    }

    /// All subreddits the pipeline ingests.
    pub fn all_subreddits(&self) -> BTreeSet<String> {
        let mut set = self.neutral_subreddits.clone();
        set.insert(self.target_subreddit.clone());
        set
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Antiwork,
    Neutral,
    Excluded,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledUser {
    pub record: UserRecord,
    pub label: Label,
}

/// Parameters for Gaussian-weighted sampling of the neutral pool.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SamplingConfig {
    /// Mean posts per antiwork user.
    pub mu: f64,
    /// Standard deviation of the same; must be positive.
    pub sigma: f64,
    pub n_samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CohortDataset {
    pub train: Vec<LabeledUser>,
    pub val: Vec<LabeledUser>,
    pub split_ratio: f64,
    pub seed: u64,
}

/// Apply the temporal proxy rule to one user history.
///
/// The history is scanned once: a target post counts only if a strictly
/// earlier neutral post exists.
pub fn label_user(record: &UserRecord, schema: &LabelSchema) -> Label {
    let mut earliest_neutral: Option<i64> = None;
    let mut all_neutral = true;
    let mut target_after_neutral = false;

    for post in &record.posts {
        let is_neutral = schema.neutral_subreddits.contains(&post.subreddit);
        let is_target = post.subreddit == schema.target_subreddit;
        if is_neutral {
            earliest_neutral = Some(match earliest_neutral {
                Some(t) => t.min(post.created_utc),
                None => post.created_utc,
            });
        } else {
            all_neutral = false;
        }
        if is_target {
            if let Some(t) = earliest_neutral {
                if post.created_utc > t {
                    target_after_neutral = true;
                }
            }
        }
    }

    if target_after_neutral {
        Label::Antiwork
    } else if all_neutral {
        Label::Neutral
    } else {
        Label::Excluded
    }
}

/// Unnormalized sampling weight for a user with `n_posts` posts.
pub fn gaussian_weight(n_posts: usize, mu: f64, sigma: f64) -> f64 {
    let d = n_posts as f64 - mu;
    (-d * d / (2.0 * sigma * sigma)).exp()
}

/// Mean and population standard deviation of per-user post counts, the
/// "auto" source for [`SamplingConfig`]. A degenerate deviation (all users
/// with the same count) is clamped to 1; weights are equal either way.
pub fn post_count_stats(users: &[LabeledUser]) -> (f64, f64) {
    if users.is_empty() {
        return (0.0, 1.0);
    }
    let n = users.len() as f64;
    let counts: Vec<f64> = users.iter().map(|u| u.record.post_count() as f64).collect();
    let mu = counts.iter().sum::<f64>() / n;
    let var = counts.iter().map(|c| (c - mu) * (c - mu)).sum::<f64>() / n;
    let sigma = var.sqrt();
    (mu, if sigma > 0.0 { sigma } else { 1.0 })
}

/// Draw `cfg.n_samples` distinct users without replacement, each draw
/// proportional to the Gaussian weight of the user's post count, with
/// renormalization after every draw. Deterministic given `cfg.seed`.
pub fn sample_neutral(
    pool: &[LabeledUser],
    cfg: &SamplingConfig,
) -> Result<Vec<LabeledUser>, CohortError> {
    if cfg.sigma <= 0.0 {
        return Err(CohortError::InvalidConfig(format!(
            "sigma must be > 0, got {}",
            cfg.sigma
        )));
    }
    if pool.len() < cfg.n_samples {
        return Err(CohortError::PoolTooSmall {
            needed: cfg.n_samples,
            available: pool.len(),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut remaining: Vec<(usize, f64)> = pool
        .iter()
        .enumerate()
        .map(|(i, u)| (i, gaussian_weight(u.record.post_count(), cfg.mu, cfg.sigma)))
        .collect();

    let mut chosen = Vec::with_capacity(cfg.n_samples);
    for _ in 0..cfg.n_samples {
        let total: f64 = remaining.iter().map(|(_, w)| w).sum();
        let pick = if total > 0.0 && total.is_finite() {
            let mut r = rng.random::<f64>() * total;
            let mut pick = remaining.len() - 1;
            for (j, (_, w)) in remaining.iter().enumerate() {
                r -= w;
                if r <= 0.0 {
                    pick = j;
                    break;
                }
            }
            pick
        } else {
            // every remaining weight underflowed; fall back to uniform
            rng.random_range(0..remaining.len())
        };
        let (idx, _) = remaining.swap_remove(pick);
        chosen.push(pool[idx].clone());
    }
    Ok(chosen)
}

fn round_half_up(x: f64) -> usize {
    (x + 0.5).floor() as usize
}

/// Stratified split. Per class, train gets `round(ratio * class_size)`
/// users (half-up) after a seeded shuffle; the rest go to validation.
pub fn split(
    users: Vec<LabeledUser>,
    ratio: f64,
    seed: u64,
) -> Result<CohortDataset, CohortError> {
    if !(0.0..1.0).contains(&ratio) || ratio == 0.0 {
        return Err(CohortError::InvalidConfig(format!(
            "split ratio must be in (0, 1), got {ratio}"
        )));
    }

    // fixed label order so the rng stream does not depend on input order
    let classes = [Label::Antiwork, Label::Neutral, Label::Excluded];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train = Vec::new();
    let mut val = Vec::new();

    for class in classes {
        let mut members: Vec<LabeledUser> =
            users.iter().filter(|u| u.label == class).cloned().collect();
        if members.is_empty() {
            continue;
        }
        if members.len() < 2 {
            return Err(CohortError::ClassTooSmall {
                label: class,
                size: members.len(),
            });
        }
        members.shuffle(&mut rng);
        let n_train = round_half_up(ratio * members.len() as f64);
        let rest = members.split_off(n_train.min(members.len()));
        train.extend(members);
        val.extend(rest);
    }

    Ok(CohortDataset {
        train,
        val,
        split_ratio: ratio,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{Post, PostKind};

    pub(crate) fn post(subreddit: &str, t: i64) -> Post {
        Post {
            id: format!("{subreddit}-{t}"),
            author: "u".into(),
            subreddit: subreddit.into(),
            created_utc: t,
            title: String::new(),
            body: String::new(),
            kind: PostKind::Submission,
            score: 0,
            ups: 0,
            downs: 0,
            num_comments: 0,
            gilded: 0,
            pinned: false,
        }
    }

    fn record(posts: Vec<Post>) -> UserRecord {
        UserRecord {
            author: "u".into(),
            posts,
        }
    }

    fn user(label: Label, n_posts: usize) -> LabeledUser {
        LabeledUser {
            record: record((0..n_posts as i64).map(|t| post("jobs", t)).collect()),
            label,
        }
    }

    #[test]
    fn label_rules() {
        let schema = LabelSchema::default();
        let antiwork = record(vec![post("jobs", 1), post("antiwork", 2)]);
        assert_eq!(label_user(&antiwork, &schema), Label::Antiwork);

        let neutral = record(vec![post("jobs", 1), post("work", 2)]);
        assert_eq!(label_user(&neutral, &schema), Label::Neutral);

        let excluded = record(vec![post("antiwork", 1), post("jobs", 2)]);
        assert_eq!(label_user(&excluded, &schema), Label::Excluded);

        // only target posts: not all-neutral, no order either
        let only_target = record(vec![post("antiwork", 1)]);
        assert_eq!(label_user(&only_target, &schema), Label::Excluded);

        // equal timestamps do not satisfy the strict order
        let tie = record(vec![post("jobs", 5), post("antiwork", 5)]);
        assert_eq!(label_user(&tie, &schema), Label::Excluded);
    }

    #[test]
    fn schema_validation() {
        assert!(LabelSchema::new("antiwork", ["antiwork".to_string()]).is_err());
        assert!(LabelSchema::new("", ["jobs".to_string()]).is_err());
        let ok = LabelSchema::new("Antiwork", ["Jobs".to_string()]).unwrap();
        assert_eq!(ok.target_subreddit, "antiwork");
        assert!(ok.neutral_subreddits.contains("jobs"));
    }

    #[test]
    fn gaussian_weight_ratio_matches_high_precision_oracle() {
        // exp(-(7-7.55)^2/(2*11.29^2)) / exp(-(40-7.55)^2/(2*11.29^2)),
        // evaluated with 50-digit arithmetic
        let ratio = gaussian_weight(7, 7.55, 11.29) / gaussian_weight(40, 7.55, 11.29);
        let expected = 62.140_503_278_910_39;
        assert!(
            ((ratio - expected) / expected).abs() < 1e-12,
            "ratio {ratio}"
        );
    }

    #[test]
    fn sampling_whole_pool_returns_everyone() {
        let pool: Vec<LabeledUser> = (1..=5).map(|n| user(Label::Neutral, n)).collect();
        for seed in [0, 7, 99] {
            let cfg = SamplingConfig {
                mu: 3.0,
                sigma: 1.0,
                n_samples: 5,
                seed,
            };
            let got = sample_neutral(&pool, &cfg).unwrap();
            assert_eq!(got.len(), 5);
            let mut counts: Vec<usize> = got.iter().map(|u| u.record.post_count()).collect();
            counts.sort_unstable();
            assert_eq!(counts, vec![1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn sampling_pool_too_small_errors() {
        let pool: Vec<LabeledUser> = (0..3).map(|_| user(Label::Neutral, 2)).collect();
        let cfg = SamplingConfig {
            mu: 2.0,
            sigma: 1.0,
            n_samples: 4,
            seed: 0,
        };
        assert!(matches!(
            sample_neutral(&pool, &cfg),
            Err(CohortError::PoolTooSmall { .. })
        ));
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let pool: Vec<LabeledUser> = (1..=50).map(|n| user(Label::Neutral, n % 9 + 1)).collect();
        let cfg = SamplingConfig {
            mu: 4.0,
            sigma: 2.0,
            n_samples: 10,
            seed: 42,
        };
        let a = sample_neutral(&pool, &cfg).unwrap();
        let b = sample_neutral(&pool, &cfg).unwrap();
        let ids = |v: &[LabeledUser]| -> Vec<String> {
            v.iter().map(|u| u.record.posts[0].id.clone()).collect()
        };
        assert_eq!(ids(&a), ids(&b));
    }

    #[test]
    fn split_matches_reference_cohort_sizes() {
        let antiwork: Vec<LabeledUser> = (0..855).map(|_| user(Label::Antiwork, 3)).collect();
        let ds = split(antiwork, 0.75, 0).unwrap();
        assert_eq!(ds.train.len(), 641);
        assert_eq!(ds.val.len(), 214);

        let neutral: Vec<LabeledUser> = (0..1000).map(|_| user(Label::Neutral, 3)).collect();
        let ds = split(neutral, 0.75, 0).unwrap();
        assert_eq!(ds.train.len(), 750);
        assert_eq!(ds.val.len(), 250);
    }

    #[test]
    fn split_exact_halves_disjoint() {
        let users: Vec<LabeledUser> = (0..4)
            .map(|i| {
                let mut u = user(Label::Antiwork, 1);
                u.record.author = format!("u{i}");
                u
            })
            .collect();
        let ds = split(users, 0.5, 3).unwrap();
        assert_eq!(ds.train.len(), 2);
        assert_eq!(ds.val.len(), 2);
        let train: BTreeSet<String> = ds.train.iter().map(|u| u.record.author.clone()).collect();
        let val: BTreeSet<String> = ds.val.iter().map(|u| u.record.author.clone()).collect();
        assert!(train.is_disjoint(&val));
    }

    #[test]
    fn split_rejects_tiny_class_and_bad_ratio() {
        let users = vec![user(Label::Antiwork, 1)];
        assert!(matches!(
            split(users, 0.5, 0),
            Err(CohortError::ClassTooSmall { .. })
        ));
        assert!(split(vec![], 0.0, 0).is_err());
        assert!(split(vec![], 1.0, 0).is_err());
    }

    #[test]
    fn post_count_stats_clamps_degenerate_sigma() {
        let users: Vec<LabeledUser> = (0..3).map(|_| user(Label::Neutral, 4)).collect();
        let (mu, sigma) = post_count_stats(&users);
        assert_eq!(mu, 4.0);
        assert_eq!(sigma, 1.0);
    }
}
