//! Dump parsing, per-user grouping, and text sanitization.
//!
//! Raw dump files are newline-delimited JSON, one record per line, in the
//! usual archive format for forum dumps: submissions carry `title` and
//! `selftext`, comments carry `body`. Records are filtered to a configured
//! subreddit set and grouped into chronologically sorted per-user histories.

mod clean;
mod emoji_table;

pub use clean::clean_text;

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read dump stream: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PostKind {
    Submission,
    Comment,
}

/// One submission or comment. Comments have an empty `title` and their text
/// in `body`; the two are otherwise treated uniformly downstream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Post {
    pub id: String,
    pub author: String,
    /// Lowercased subreddit name.
    pub subreddit: String,
    /// Seconds since epoch.
    pub created_utc: i64,
    pub title: String,
    pub body: String,
    pub kind: PostKind,
    pub score: i64,
    pub ups: i64,
    pub downs: i64,
    pub num_comments: i64,
    pub gilded: i64,
    pub pinned: bool,
}

/// A user's posts sorted ascending by `created_utc`, ties broken by id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UserRecord {
    pub author: String,
    pub posts: Vec<Post>,
}

impl UserRecord {
    /// Total post count, the quantity the cohort sampler weights on.
    pub fn post_count(&self) -> usize {
        self.posts.len()
    }
}

/// Counters for everything `parse_dump` dropped. Subreddit-filtered records
/// are excluded on purpose: they are valid records outside the configured
/// set, not rejects.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectCounts {
    /// Lines that did not parse as a JSON record.
    pub malformed: u64,
    /// Submissions with absent/null `title` or `selftext`, comments with
    /// absent/null `body`.
    pub missing_text: u64,
    /// Records with no author or author `[deleted]`.
    pub deleted_author: u64,
}

impl RejectCounts {
    pub fn total(&self) -> u64 {
        self.malformed + self.missing_text + self.deleted_author
    }
}

/// Output of one `parse_dump` call.
#[derive(Debug, Clone, Default)]
pub struct ParseOutcome {
    pub posts: Vec<Post>,
    pub rejects: RejectCounts,
    /// Records whose subreddit was outside the filter set.
    pub filtered_out: u64,
    /// Retained posts whose title or body is a `[removed]`/`[deleted]`
    /// placeholder. Kept in the corpus, reported so runs can audit them.
    pub removed_placeholders: u64,
}

/// The wire shape of one dump record. Unknown fields are ignored; absent and
/// null both deserialize to `None` so the missing-field rules can tell empty
/// strings (kept) from missing ones (dropped).
#[derive(Debug, Deserialize)]
struct RawRecord {
    #[serde(default)]
    id: Option<String>,
    #[serde(default)]
    author: Option<String>,
    #[serde(default)]
    subreddit: Option<String>,
    #[serde(default, deserialize_with = "flexible_i64")]
    created_utc: Option<i64>,
    #[serde(default)]
    title: Option<String>,
    #[serde(default)]
    selftext: Option<String>,
    #[serde(default)]
    body: Option<String>,
    #[serde(default, deserialize_with = "flexible_i64")]
    score: Option<i64>,
    #[serde(default, deserialize_with = "flexible_i64")]
    ups: Option<i64>,
    #[serde(default, deserialize_with = "flexible_i64")]
    downs: Option<i64>,
    #[serde(default, deserialize_with = "flexible_i64")]
    num_comments: Option<i64>,
    #[serde(default, deserialize_with = "flexible_i64")]
    gilded: Option<i64>,
    #[serde(default)]
    pinned: Option<bool>,
}

/// Dump archives are inconsistent about numeric types; `created_utc` in
/// particular shows up as `1610000000`, `1610000000.0`, and `"1610000000"`
/// across vintages.
fn flexible_i64<'de, D>(de: D) -> Result<Option<i64>, D::Error>
where
    D: serde::Deserializer<'de>,
{
    let value = Option::<serde_json::Value>::deserialize(de)?;
    Ok(match value {
        None | Some(serde_json::Value::Null) => None,
        Some(serde_json::Value::Number(n)) => n.as_i64().or_else(|| n.as_f64().map(|f| f as i64)),
        Some(serde_json::Value::String(s)) => s.trim().parse::<i64>().ok(),
        Some(_) => None,
    })
}

fn is_placeholder(text: &str) -> bool {
    matches!(text, "[removed]" | "[deleted]")
}

/// Parse a newline-delimited record stream into posts.
///
/// `kind` states what the stream holds (dump files are split into
/// submission and comment files). Submissions missing `title` or `selftext`
/// and comments missing `body` are dropped; so are records with no usable
/// author. Malformed lines are counted, never fatal. Only an unreadable
/// stream aborts.
pub fn parse_dump<R: BufRead>(
    reader: R,
    kind: PostKind,
    subreddit_filter: &HashSet<String>,
) -> Result<ParseOutcome, CorpusError> {
    let filter: HashSet<String> = subreddit_filter.iter().map(|s| s.to_lowercase()).collect();
    let mut out = ParseOutcome::default();

    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(_) => {
                out.rejects.malformed += 1;
                continue;
            }
        };

        let subreddit = match &raw.subreddit {
            Some(s) => s.to_lowercase(),
            None => {
                out.rejects.malformed += 1;
                continue;
            }
        };
        if !filter.contains(&subreddit) {
            out.filtered_out += 1;
            continue;
        }

        let author = match raw.author.as_deref() {
            Some("[deleted]") | None => {
                out.rejects.deleted_author += 1;
                continue;
            }
            Some(a) => a.to_string(),
        };

        let (title, body) = match kind {
            PostKind::Submission => match (raw.title, raw.selftext) {
                (Some(t), Some(s)) => (t, s),
                _ => {
                    out.rejects.missing_text += 1;
                    continue;
                }
            },
            PostKind::Comment => match raw.body {
                Some(b) => (String::new(), b),
                None => {
                    out.rejects.missing_text += 1;
                    continue;
                }
            },
        };

        if is_placeholder(&title) || is_placeholder(&body) {
            out.removed_placeholders += 1;
        }

        out.posts.push(Post {
            id: raw.id.unwrap_or_default(),
            author,
            subreddit,
            created_utc: raw.created_utc.unwrap_or(0),
            title,
            body,
            kind,
            score: raw.score.unwrap_or(0),
            ups: raw.ups.unwrap_or(0),
            downs: raw.downs.unwrap_or(0),
            num_comments: if kind == PostKind::Comment {
                0
            } else {
                raw.num_comments.unwrap_or(0)
            },
            gilded: raw.gilded.unwrap_or(0),
            pinned: raw.pinned.unwrap_or(false),
        });
    }

    Ok(out)
}

/// Group posts into one `UserRecord` per author, each chronologically
/// sorted (ties broken by post id). Records come back sorted by author so
/// merged multi-file output is deterministic.
pub fn group_users(posts: Vec<Post>) -> Vec<UserRecord> {
    let mut by_author: BTreeMap<String, Vec<Post>> = BTreeMap::new();
    for post in posts {
        by_author.entry(post.author.clone()).or_default().push(post);
    }
    by_author
        .into_iter()
        .map(|(author, mut posts)| {
            posts.sort_by(|a, b| {
                a.created_utc
                    .cmp(&b.created_utc)
                    .then_with(|| a.id.cmp(&b.id))
            });
            UserRecord { author, posts }
        })
        .collect()
}
