//! Seeded synthetic Reddit-style corpora for end-to-end testing.
//!
//! Two variants:
//! - `Mixed`: positive users plant signal words in their later posts, so
//!   both bag-of-words and sequence models can separate the classes.
//! - `OrderOnly`: each positive user is paired with a negative user holding
//!   the *same* multiset of post texts in a different order — signal posts
//!   last versus first. Bag-of-words features are class-identical by
//!   construction; only order-aware models can separate the classes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Post, PostKind};

pub const DEFAULT_SYNTH_USERS: usize = 2000;

const NEUTRAL_WORDS: [&str; 20] = [
    "meeting", "resume", "schedule", "commute", "office", "email", "printer", "coffee",
    "deadline", "calendar", "badge", "parking", "desk", "training", "handbook", "timesheet",
    "payroll", "lobby", "elevator", "cubicle",
];

const SIGNAL_WORDS: [&str; 8] = [
    "quit", "exploit", "burnout", "wageslave", "overworked", "underpaid", "grind", "unionize",
];

const NEUTRAL_SUBS: [&str; 4] = ["recruiting", "recruitinghell", "work", "jobs"];
const TARGET_SUB: &str = "antiwork";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SynthVariant {
    Mixed,
    OrderOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    /// Total user count; rounded down to an even number for class balance.
    pub n_users: usize,
    pub variant: SynthVariant,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            n_users: DEFAULT_SYNTH_USERS,
            variant: SynthVariant::Mixed,
            seed: 0,
        }
    }
}

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &[&'a str]) -> &'a str {
    pool[rng.random_range(0..pool.len())]
}

fn words(rng: &mut ChaCha8Rng, pool: &[&str], n: usize) -> String {
    (0..n).map(|_| pick(rng, pool)).collect::<Vec<_>>().join(" ")
}

#[allow(clippy::too_many_arguments)]
fn post(
    rng: &mut ChaCha8Rng,
    id: usize,
    author: &str,
    subreddit: &str,
    ts: i64,
    title: String,
    body: String,
) -> Post {
    Post {
        id: format!("s{id:06}"),
        author: author.to_string(),
        subreddit: subreddit.to_string(),
        created_utc: ts,
        title,
        body,
        kind: PostKind::Submission,
        score: rng.random_range(-3..30),
        ups: rng.random_range(0..40),
        downs: rng.random_range(0..5),
        num_comments: rng.random_range(0..20),
        gilded: if rng.random_range(0..50) == 0 { 1 } else { 0 },
        pinned: rng.random_range(0..20) == 0,
    }
}

const BASE_TS: i64 = 1_600_000_000;

fn generate_mixed(n_users: usize, rng: &mut ChaCha8Rng) -> Vec<Post> {
    let mut posts = Vec::new();
    let mut next_id = 0usize;
    for u in 0..n_users {
        let positive = u % 2 == 0;
        let author = format!("user_{u:05}");
        let n_posts = rng.random_range(3..=6);
        let signal_from = n_posts / 2; // signal only in the later half
        for t in 0..n_posts {
            let ts = BASE_TS + (u as i64) * 10_000 + (t as i64) * 100;
            let late = t >= signal_from;
            let (subreddit, title, body) = if positive && late {
                let sub = if t == n_posts - 1 {
                    TARGET_SUB
                } else {
                    pick(rng, &NEUTRAL_SUBS)
                };
                let title = format!(
                    "{} {}",
                    pick(rng, &SIGNAL_WORDS),
                    pick(rng, &NEUTRAL_WORDS)
                );
                let body = format!(
                    "{} {} {}",
                    words(rng, &SIGNAL_WORDS, 3),
                    words(rng, &NEUTRAL_WORDS, 4),
                    pick(rng, &SIGNAL_WORDS)
                );
                (sub, title, body)
            } else {
                (
                    pick(rng, &NEUTRAL_SUBS),
                    words(rng, &NEUTRAL_WORDS, 2),
                    words(rng, &NEUTRAL_WORDS, 7),
                )
            };
            posts.push(post(rng, next_id, &author, subreddit, ts, title, body));
            next_id += 1;
        }
    }
    posts
}

fn generate_order_only(n_users: usize, rng: &mut ChaCha8Rng) -> Vec<Post> {
    let mut posts = Vec::new();
    let mut next_id = 0usize;
    let pairs = n_users / 2;
    for pair in 0..pairs {
        // four shared texts per pair: two signal-bearing, two neutral
        let filler_a = pick(rng, &NEUTRAL_WORDS);
        let filler_b = pick(rng, &NEUTRAL_WORDS);
        let signal_texts = [
            (
                format!("{} {}", pick(rng, &SIGNAL_WORDS), filler_a),
                format!("{} {} {}", words(rng, &SIGNAL_WORDS, 2), filler_b, pick(rng, &SIGNAL_WORDS)),
            ),
            (
                format!("{} {}", pick(rng, &SIGNAL_WORDS), filler_b),
                format!("{} {}", words(rng, &SIGNAL_WORDS, 3), filler_a),
            ),
        ];
        let neutral_texts = [
            (
                words(rng, &NEUTRAL_WORDS, 2),
                format!("{} {}", words(rng, &NEUTRAL_WORDS, 4), filler_a),
            ),
            (
                words(rng, &NEUTRAL_WORDS, 2),
                format!("{} {}", words(rng, &NEUTRAL_WORDS, 4), filler_b),
            ),
        ];

        // positive: neutral posts first, signal posts last (final one on the
        // target forum); negative: same four texts, signal first
        let pos_author = format!("user_{:05}", pair * 2);
        let neg_author = format!("user_{:05}", pair * 2 + 1);
        let pos_order: [(&(String, String), &str); 4] = [
            (&neutral_texts[0], NEUTRAL_SUBS[pair % 4]),
            (&neutral_texts[1], NEUTRAL_SUBS[(pair + 1) % 4]),
            (&signal_texts[0], NEUTRAL_SUBS[(pair + 2) % 4]),
            (&signal_texts[1], TARGET_SUB),
        ];
        let neg_order: [(&(String, String), &str); 4] = [
            (&signal_texts[0], NEUTRAL_SUBS[pair % 4]),
            (&signal_texts[1], NEUTRAL_SUBS[(pair + 1) % 4]),
            (&neutral_texts[0], NEUTRAL_SUBS[(pair + 2) % 4]),
            (&neutral_texts[1], NEUTRAL_SUBS[(pair + 3) % 4]),
        ];
        for (author, order) in [(&pos_author, pos_order), (&neg_author, neg_order)] {
            for (t, ((title, body), subreddit)) in order.iter().enumerate() {
                let ts = BASE_TS + (pair as i64) * 10_000 + (t as i64) * 100;
                posts.push(post(
                    rng,
                    next_id,
                    author,
                    subreddit,
                    ts,
                    title.clone(),
                    body.clone(),
                ));
                next_id += 1;
            }
        }
    }
    posts
}

/// Generate the corpus for a config. Even user indices are the positive
/// class. Deterministic under `config.seed`.
pub fn generate(config: &SynthConfig) -> Vec<Post> {
    let n_users = config.n_users - config.n_users % 2;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.variant {
        SynthVariant::Mixed => generate_mixed(n_users, &mut rng),
        SynthVariant::OrderOnly => generate_order_only(n_users, &mut rng),
    }
}

/// Serialize as a raw newline-delimited dump in the ingest schema
/// (submissions with `selftext`).
pub fn to_raw_ndjson(posts: &[Post]) -> String {
    let mut out = String::new();
    for p in posts {
        let line = serde_json::json!({
            "id": p.id,
            "author": p.author,
            "subreddit": p.subreddit,
            "created_utc": p.created_utc,
            "title": p.title,
            "selftext": p.body,
            "score": p.score,
            "ups": p.ups,
            "downs": p.downs,
            "num_comments": p.num_comments,
            "gilded": p.gilded,
            "pinned": p.pinned,
        });
        out.push_str(&line.to_string());
        out.push('\n');
    }
    out
}
