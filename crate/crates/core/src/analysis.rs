//! Group-difference statistics over lexicon categories and LDA topic
//! modeling with salient-term extraction.

use std::collections::BTreeMap;

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("{0} sample is empty")]
    EmptySample(&'static str),
    #[error("paired samples differ in length: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("invalid lexicon: {0}")]
    InvalidLexicon(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

// ---------------------------------------------------------------------------
// Lexicon

#[derive(Debug, Clone, Default, PartialEq)]
struct CategoryPatterns {
    literals: Vec<String>,
    prefixes: Vec<String>,
    punctuation: Vec<String>,
}

/// Category → word patterns. Literal words match whole tokens, `stem*`
/// patterns match any token starting with the stem, and patterns without
/// any alphanumeric character (like `?`) are counted as raw substrings of
/// the text rather than tokens.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Lexicon {
    categories: BTreeMap<String, CategoryPatterns>,
}

impl Lexicon {
    /// Parse the `#Category` + one-pattern-per-line format.
    pub fn parse(text: &str) -> Result<Lexicon, AnalysisError> {
        let mut categories: BTreeMap<String, CategoryPatterns> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('#') {
                let name = name.trim().to_lowercase();
                if name.is_empty() {
                    return Err(AnalysisError::InvalidLexicon(format!(
                        "line {}: empty category name",
                        lineno + 1
                    )));
                }
                categories.entry(name.clone()).or_default();
                current = Some(name);
            } else {
                let Some(ref cat) = current else {
                    return Err(AnalysisError::InvalidLexicon(format!(
                        "line {}: pattern before any #Category header",
                        lineno + 1
                    )));
                };
                let pattern = line.to_lowercase();
                let entry = categories.get_mut(cat).unwrap();
                if let Some(stem) = pattern.strip_suffix('*') {
                    if stem.is_empty() {
                        return Err(AnalysisError::InvalidLexicon(format!(
                            "line {}: bare wildcard",
                            lineno + 1
                        )));
                    }
                    entry.prefixes.push(stem.to_string());
                } else if pattern.chars().any(|c| c.is_alphanumeric()) {
                    entry.literals.push(pattern);
                } else {
                    entry.punctuation.push(pattern);
                }
            }
        }
        let lexicon = Lexicon { categories };
        lexicon.validate()?;
        Ok(lexicon)
    }

    fn validate(&self) -> Result<(), AnalysisError> {
        if self.categories.is_empty() {
            return Err(AnalysisError::InvalidLexicon("no categories".into()));
        }
        for (name, patterns) in &self.categories {
            if patterns.literals.is_empty()
                && patterns.prefixes.is_empty()
                && patterns.punctuation.is_empty()
            {
                return Err(AnalysisError::InvalidLexicon(format!(
                    "category {name:?} has no patterns"
                )));
            }
        }
        Ok(())
    }

    pub fn category_names(&self) -> Vec<&str> {
        self.categories.keys().map(String::as_str).collect()
    }

    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    /// Small built-in demo lexicon covering the category names used in the
    /// group-difference tables; an open stand-in, not a licensed dictionary.
    pub fn builtin() -> Lexicon {
        Lexicon::parse(BUILTIN_LEXICON).expect("builtin lexicon parses")
    }
}

const BUILTIN_LEXICON: &str = "\
#work
work*
job*
boss*
manager*
employ*
office
salary
wage*
career*
union*
shift*
interview*
resume
#money
money
pay*
cash
rent
debt*
dollar*
price*
afford*
bill*
income
#tone_pos
good
great
love*
nice
happy
hope*
thank*
#emo_pos
happy
joy*
love*
excit*
glad
#physical
sick
tired
pain*
sleep*
body
head*
#illness
ill*
flu
covid
cancer
disease*
injur*
#mental
stress*
anxi*
depress*
burnout
therap*
#food
food
eat*
lunch
dinner
pizza
coffee
#want
want*
wish*
need*
desire*
#allure
new
free
easy
best
amazing
#focuspresent
is
are
am
now
today
#qmark
?
#comma
,
#swear
damn
hell
shit*
fuck*
#i
i
me
my
mine
myself
#we
we
us
our
ours
#you
you
your
yours
#shehe
he
she
him
her
his
hers
#they
they
them
their
theirs
#ipron
it
that
this
what
something
anything
nothing
";

/// Per-category occurrence count and rate per 100 words.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CategoryStats {
    pub count: u32,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexiconCounts {
    pub word_count: usize,
    pub categories: BTreeMap<String, CategoryStats>,
}

fn lexicon_tokens(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !(c.is_alphanumeric() || c == '\''))
        .map(|t| t.trim_matches('\''))
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

/// Count category hits in cleaned text. A token may hit several categories;
/// punctuation patterns are counted over the raw text.
pub fn lexicon_counts(text: &str, lexicon: &Lexicon) -> LexiconCounts {
    let tokens = lexicon_tokens(text);
    let word_count = tokens.len();
    let mut categories = BTreeMap::new();
    for (name, patterns) in &lexicon.categories {
        let mut count = 0u32;
        for token in &tokens {
            let hit = patterns.literals.iter().any(|p| p == token)
                || patterns.prefixes.iter().any(|p| token.starts_with(p.as_str()));
            if hit {
                count += 1;
            }
        }
        for punct in &patterns.punctuation {
            count += text.matches(punct.as_str()).count() as u32;
        }
        let rate = if word_count > 0 {
            count as f64 * 100.0 / word_count as f64
        } else {
            0.0
        };
        categories.insert(name.clone(), CategoryStats { count, rate });
    }
    LexiconCounts {
        word_count,
        categories,
    }
}

// ---------------------------------------------------------------------------
// Rank tests

fn midranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j (0-based) share midrank of 1-based positions
        let midrank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = midrank;
        }
        i = j + 1;
    }
    ranks
}

fn has_ties(values: &[f64]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Exact two-sided p for the rank-sum statistic with no ties: distribution
/// of rank sums over all C(n, n_a) assignments, by dynamic programming.
fn exact_rank_sum_p(n_a: usize, n_b: usize, u_obs: u64) -> f64 {
    let n = n_a + n_b;
    let max_sum = n * (n + 1) / 2;
    // ways[k][s] = subsets of {1..n} of size k with rank sum s
    let mut ways = vec![vec![0.0f64; max_sum + 1]; n_a + 1];
    ways[0][0] = 1.0;
    for rank in 1..=n {
        for k in (1..=n_a.min(rank)).rev() {
            for s in (rank..=max_sum).rev() {
                ways[k][s] += ways[k - 1][s - rank];
            }
        }
    }
    let offset = n_a * (n_a + 1) / 2;
    let nanb = (n_a * n_b) as i64;
    // compare |2U − n_a·n_b| in integers to avoid float equality issues
    let d_obs = (2 * u_obs as i64 - nanb).abs();
    let mut extreme = 0.0;
    let mut total = 0.0;
    for (s, &count) in ways[n_a].iter().enumerate() {
        if count == 0.0 || s < offset {
            continue;
        }
        let u = (s - offset) as i64;
        total += count;
        if (2 * u - nanb).abs() >= d_obs {
            extreme += count;
        }
    }
    extreme / total
}

/// Two-sample rank-sum test (Mann–Whitney) with midranks, tie-corrected
/// variance, and continuity correction. For small untied samples
/// (n_a + n_b ≤ 12) the p-value comes from the exact permutation
/// distribution; otherwise from the normal approximation. Returns (z, p).
pub fn rank_test(a: &[f64], b: &[f64]) -> Result<(f64, f64), AnalysisError> {
    if a.is_empty() {
        return Err(AnalysisError::EmptySample("first"));
    }
    if b.is_empty() {
        return Err(AnalysisError::EmptySample("second"));
    }
    let n_a = a.len();
    let n_b = b.len();
    let n = n_a + n_b;
    let pooled: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    let ranks = midranks(&pooled);
    let r_a: f64 = ranks[..n_a].iter().sum();
    let u = r_a - (n_a * (n_a + 1)) as f64 / 2.0;
    let mu = (n_a * n_b) as f64 / 2.0;

    // tie correction: Σ(t³−t) over tie groups of the pooled sample
    let mut sorted = pooled.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = (n_a * n_b) as f64 / 12.0
        * ((n + 1) as f64 - tie_term / (n as f64 * (n as f64 - 1.0)));
    if var <= 0.0 {
        return Ok((0.0, 1.0));
    }
    let sigma = var.sqrt();
    let diff = u - mu;
    let correction = 0.5 * diff.signum();
    let z = if diff == 0.0 {
        0.0
    } else {
        (diff - correction) / sigma
    };

    let p = if !has_ties(&pooled) && n <= 12 {
        exact_rank_sum_p(n_a, n_b, u.round() as u64)
    } else {
        let normal = Normal::new(0.0, 1.0).unwrap();
        (2.0 * (1.0 - normal.cdf(z.abs()))).min(1.0)
    };
    Ok((z, p))
}

/// Paired Wilcoxon signed-rank test for equal-length samples; zero
/// differences are dropped. Returns (z, p) by normal approximation with
/// tie correction and continuity correction.
pub fn signed_rank_test(x: &[f64], y: &[f64]) -> Result<(f64, f64), AnalysisError> {
    if x.is_empty() {
        return Err(AnalysisError::EmptySample("first"));
    }
    if x.len() != y.len() {
        return Err(AnalysisError::LengthMismatch {
            a: x.len(),
            b: y.len(),
        });
    }
    let diffs: Vec<f64> = x
        .iter()
        .zip(y)
        .map(|(xi, yi)| xi - yi)
        .filter(|d| *d != 0.0)
        .collect();
    let n = diffs.len();
    if n == 0 {
        return Ok((0.0, 1.0));
    }
    let abs: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let ranks = midranks(&abs);
    let w_plus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| r)
        .sum();
    let mu = n as f64 * (n as f64 + 1.0) / 4.0;

    let mut sorted = abs.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let var = n as f64 * (n as f64 + 1.0) * (2.0 * n as f64 + 1.0) / 24.0 - tie_term / 48.0;
    if var <= 0.0 {
        return Ok((0.0, 1.0));
    }
    let diff = w_plus - mu;
    let z = if diff == 0.0 {
        0.0
    } else {
        (diff - 0.5 * diff.signum()) / var.sqrt()
    };
    let normal = Normal::new(0.0, 1.0).unwrap();
    let p = (2.0 * (1.0 - normal.cdf(z.abs()))).min(1.0);
    Ok((z, p))
}

// ---------------------------------------------------------------------------
// Multiple-comparison correction

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stars {
    None,
    One,
    Two,
    Three,
}

impl std::fmt::Display for Stars {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stars::None => "",
            Stars::One => "*",
            Stars::Two => "**",
            Stars::Three => "***",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatTestResult {
    pub category: String,
    pub mean_a: f64,
    pub mean_b: f64,
    pub z: f64,
    pub p: f64,
    pub stars: Stars,
}

/// Bonferroni-corrected significance stars: p ≤ 0.001/N → ***,
/// p ≤ 0.01/N → **, p ≤ 0.05/N → *.
pub fn correct_and_star(results: &[StatTestResult], n: usize) -> Vec<StatTestResult> {
    assert!(n >= 1, "N must be at least 1");
    let n = n as f64;
    results
        .iter()
        .map(|r| {
            let stars = if r.p <= 0.001 / n {
                Stars::Three
            } else if r.p <= 0.01 / n {
                Stars::Two
            } else if r.p <= 0.05 / n {
                Stars::One
            } else {
                Stars::None
            };
            StatTestResult {
                stars,
                ..r.clone()
            }
        })
        .collect()
}

/// Per-category comparison of two user groups. Inputs are per-user cleaned
/// documents; each user contributes one rate per category. Stars use
/// N = number of categories.
pub fn compare_groups(
    docs_a: &[String],
    docs_b: &[String],
    lexicon: &Lexicon,
) -> Result<Vec<StatTestResult>, AnalysisError> {
    if docs_a.is_empty() {
        return Err(AnalysisError::EmptySample("first"));
    }
    if docs_b.is_empty() {
        return Err(AnalysisError::EmptySample("second"));
    }
    let rates = |docs: &[String]| -> BTreeMap<String, Vec<f64>> {
        let mut by_cat: BTreeMap<String, Vec<f64>> = BTreeMap::new();
        for doc in docs {
            let counts = lexicon_counts(doc, lexicon);
            for (cat, stats) in counts.categories {
                by_cat.entry(cat).or_default().push(stats.rate);
            }
        }
        by_cat
    };
    let rates_a = rates(docs_a);
    let rates_b = rates(docs_b);
    let mut results = Vec::new();
    for cat in lexicon.category_names() {
        let a = &rates_a[cat];
        let b = &rates_b[cat];
        let (z, p) = rank_test(a, b)?;
        let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        results.push(StatTestResult {
            category: cat.to_string(),
            mean_a: mean(a),
            mean_b: mean(b),
            z,
            p,
            stars: Stars::None,
        });
    }
    let n = results.len();
    Ok(correct_and_star(&results, n))
}

/// CSV export: Category, Antiwork, Neutral, z, p, stars.
pub fn results_to_csv(results: &[StatTestResult]) -> String {
    let mut out = String::from("category,antiwork,neutral,z,p,stars\n");
    for r in results {
        out.push_str(&format!(
            "{},{:.3},{:.3},{:.3},{:.3},{}\n",
            r.category, r.mean_a, r.mean_b, r.z, r.p, r.stars
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// LDA

/// Fitted topic model. `topic_word` is K × V, `doc_topic` is D × K over the
/// retained (non-empty) documents, and `doc_lengths` are their token counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicModel {
    pub k: usize,
    pub topic_word: Array2<f64>,
    pub doc_topic: Array2<f64>,
    pub vocab: Vec<String>,
    pub doc_lengths: Vec<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LdaFit {
    pub model: TopicModel,
    /// Original indices of the documents that were modeled.
    pub retained: Vec<usize>,
    /// Number of empty documents dropped before fitting.
    pub dropped_empty: usize,
}

pub const DEFAULT_TOPICS: usize = 10;
pub const DEFAULT_BETA: f64 = 0.01;
pub const DEFAULT_LDA_ITERS: usize = 200;

/// Conventional symmetric document prior for a given K.
pub fn default_alpha(k: usize) -> f64 {
    50.0 / k as f64
}

/// Collapsed Gibbs sampling. Deterministic under `seed`; empty documents
/// are dropped and counted.
pub fn fit_lda(
    docs: &[Vec<String>],
    k: usize,
    alpha: f64,
    beta: f64,
    iters: usize,
    seed: u64,
) -> Result<LdaFit, AnalysisError> {
    if k < 2 {
        return Err(AnalysisError::InvalidConfig(format!(
            "need at least 2 topics, got {k}"
        )));
    }
    if alpha <= 0.0 || beta <= 0.0 {
        return Err(AnalysisError::InvalidConfig(
            "priors must be positive".into(),
        ));
    }
    let retained: Vec<usize> = docs
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_empty())
        .map(|(i, _)| i)
        .collect();
    let dropped_empty = docs.len() - retained.len();
    if retained.is_empty() {
        return Err(AnalysisError::EmptySample("document"));
    }

    let mut vocab_set: std::collections::BTreeSet<&str> = std::collections::BTreeSet::new();
    for &d in &retained {
        for tok in &docs[d] {
            vocab_set.insert(tok);
        }
    }
    let vocab: Vec<String> = vocab_set.into_iter().map(str::to_string).collect();
    let v = vocab.len();
    if v < k {
        return Err(AnalysisError::InvalidConfig(format!(
            "vocabulary size {v} smaller than K={k}"
        )));
    }
    let index: BTreeMap<&str, usize> = vocab
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();

    let d_count = retained.len();
    let docs_idx: Vec<Vec<usize>> = retained
        .iter()
        .map(|&d| docs[d].iter().map(|t| index[t.as_str()]).collect())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n_dk = vec![vec![0u32; k]; d_count];
    let mut n_kw = vec![vec![0u32; v]; k];
    let mut n_k = vec![0u32; k];
    let mut assignments: Vec<Vec<usize>> = Vec::with_capacity(d_count);
    for (d, doc) in docs_idx.iter().enumerate() {
        let mut z_doc = Vec::with_capacity(doc.len());
        for &w in doc {
            let topic = rng.random_range(0..k);
            n_dk[d][topic] += 1;
            n_kw[topic][w] += 1;
            n_k[topic] += 1;
            z_doc.push(topic);
        }
        assignments.push(z_doc);
    }

    let vb = v as f64 * beta;
    let mut weights = vec![0.0f64; k];
    for _ in 0..iters {
        for (d, doc) in docs_idx.iter().enumerate() {
            for (pos, &w) in doc.iter().enumerate() {
                let old = assignments[d][pos];
                n_dk[d][old] -= 1;
                n_kw[old][w] -= 1;
                n_k[old] -= 1;
                let mut total = 0.0;
                for t in 0..k {
                    let wgt = (n_dk[d][t] as f64 + alpha) * (n_kw[t][w] as f64 + beta)
                        / (n_k[t] as f64 + vb);
                    weights[t] = wgt;
                    total += wgt;
                }
                let mut draw = rng.random::<f64>() * total;
                let mut new = k - 1;
                for (t, &wgt) in weights.iter().enumerate() {
                    if draw < wgt {
                        new = t;
                        break;
                    }
                    draw -= wgt;
                }
                assignments[d][pos] = new;
                n_dk[d][new] += 1;
                n_kw[new][w] += 1;
                n_k[new] += 1;
            }
        }
    }

    // point estimates with prior smoothing, rows explicitly renormalized
    let mut topic_word = Array2::zeros((k, v));
    for t in 0..k {
        let mut row_sum = 0.0;
        for w in 0..v {
            let val = n_kw[t][w] as f64 + beta;
            topic_word[(t, w)] = val;
            row_sum += val;
        }
        for w in 0..v {
            topic_word[(t, w)] /= row_sum;
        }
    }
    let mut doc_topic = Array2::zeros((d_count, k));
    for d in 0..d_count {
        let mut row_sum = 0.0;
        for t in 0..k {
            let val = n_dk[d][t] as f64 + alpha;
            doc_topic[(d, t)] = val;
            row_sum += val;
        }
        for t in 0..k {
            doc_topic[(d, t)] /= row_sum;
        }
    }

    let doc_lengths: Vec<usize> = docs_idx.iter().map(Vec::len).collect();
    Ok(LdaFit {
        model: TopicModel {
            k,
            topic_word,
            doc_topic,
            vocab,
            doc_lengths,
            seed,
        },
        retained,
        dropped_empty,
    })
}

impl TopicModel {
    /// Token-mass-weighted topic proportions P(t).
    pub fn topic_proportions(&self) -> Vec<f64> {
        let total: f64 = self.doc_lengths.iter().sum::<usize>() as f64;
        let mut p = vec![0.0; self.k];
        for (d, &len) in self.doc_lengths.iter().enumerate() {
            for t in 0..self.k {
                p[t] += self.doc_topic[(d, t)] * len as f64 / total;
            }
        }
        p
    }

    /// Top-n terms of one topic by probability.
    pub fn top_terms(&self, topic: usize, n: usize) -> Vec<(String, f64)> {
        let mut terms: Vec<(String, f64)> = self
            .vocab
            .iter()
            .enumerate()
            .map(|(w, term)| (term.clone(), self.topic_word[(topic, w)]))
            .collect();
        terms.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
        terms.truncate(n.min(self.vocab.len()));
        terms
    }
}

/// Term frequencies of a tokenized corpus.
pub fn corpus_term_frequencies(docs: &[Vec<String>]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for doc in docs {
        for tok in doc {
            *counts.entry(tok.clone()).or_insert(0) += 1;
        }
    }
    counts
}

/// Saliency(w) = P(w) · Σ_t P(t|w) ln(P(t|w)/P(t)), with P(t|w) ∝ P(w|t)P(t).
/// Ranked descending, ties by term; top_n clamped to the vocabulary.
pub fn salient_terms(
    model: &TopicModel,
    corpus_counts: &BTreeMap<String, usize>,
    top_n: usize,
) -> Vec<(String, f64)> {
    let p_t = model.topic_proportions();
    let total_tokens: usize = model
        .vocab
        .iter()
        .map(|w| corpus_counts.get(w).copied().unwrap_or(0))
        .sum();
    let mut scored: Vec<(String, f64)> = Vec::with_capacity(model.vocab.len());
    for (w, term) in model.vocab.iter().enumerate() {
        let count = corpus_counts.get(term).copied().unwrap_or(0);
        if count == 0 || total_tokens == 0 {
            scored.push((term.clone(), 0.0));
            continue;
        }
        let p_w = count as f64 / total_tokens as f64;
        // P(t|w) ∝ P(w|t) P(t)
        let mut joint: Vec<f64> = (0..model.k)
            .map(|t| model.topic_word[(t, w)] * p_t[t])
            .collect();
        let norm: f64 = joint.iter().sum();
        let mut distinct = 0.0;
        if norm > 0.0 {
            for (t, j) in joint.iter_mut().enumerate() {
                *j /= norm;
                if *j > 0.0 && p_t[t] > 0.0 {
                    distinct += *j * (*j / p_t[t]).ln();
                }
            }
        }
        scored.push((term.clone(), p_w * distinct));
    }
    scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    scored.truncate(top_n.min(model.vocab.len()));
    scored
}

/// Held-out perplexity by fold-in: topic mixtures for new documents are
/// estimated by Gibbs sampling with the fitted topic-word rows held fixed.
/// Out-of-vocabulary tokens are skipped.
pub fn perplexity(model: &TopicModel, docs: &[Vec<String>], alpha: f64, seed: u64) -> f64 {
    let index: BTreeMap<&str, usize> = model
        .vocab
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log_lik = 0.0;
    let mut n_tokens = 0usize;
    for doc in docs {
        let ids: Vec<usize> = doc
            .iter()
            .filter_map(|t| index.get(t.as_str()).copied())
            .collect();
        if ids.is_empty() {
            continue;
        }
        let k = model.k;
        let mut n_dk = vec![0u32; k];
        let mut z: Vec<usize> = Vec::with_capacity(ids.len());
        for _ in &ids {
            let t = rng.random_range(0..k);
            n_dk[t] += 1;
            z.push(t);
        }
        let mut weights = vec![0.0; k];
        for _ in 0..50 {
            for (pos, &w) in ids.iter().enumerate() {
                let old = z[pos];
                n_dk[old] -= 1;
                let mut total = 0.0;
                for t in 0..k {
                    let wgt = (n_dk[t] as f64 + alpha) * model.topic_word[(t, w)];
                    weights[t] = wgt;
                    total += wgt;
                }
                let mut draw = rng.random::<f64>() * total;
                let mut new = k - 1;
                for (t, &wgt) in weights.iter().enumerate() {
                    if draw < wgt {
                        new = t;
                        break;
                    }
                    draw -= wgt;
                }
                z[pos] = new;
                n_dk[new] += 1;
            }
        }
        let len = ids.len() as f64;
        let theta: Vec<f64> = n_dk
            .iter()
            .map(|&c| (c as f64 + alpha) / (len + k as f64 * alpha))
            .collect();
        for &w in &ids {
            let p: f64 = (0..k).map(|t| theta[t] * model.topic_word[(t, w)]).sum();
            log_lik += p.ln();
            n_tokens += 1;
        }
    }
    if n_tokens == 0 {
        return f64::INFINITY;
    }
    (-log_lik / n_tokens as f64).exp()
}

/// Add-one-smoothed unigram perplexity baseline over the same vocabulary
/// convention (held-out tokens outside the train vocabulary are skipped).
pub fn unigram_perplexity(train_docs: &[Vec<String>], test_docs: &[Vec<String>]) -> f64 {
    let counts = corpus_term_frequencies(train_docs);
    let total: usize = counts.values().sum();
    let v = counts.len();
    let mut log_lik = 0.0;
    let mut n_tokens = 0usize;
    for doc in test_docs {
        for tok in doc {
            if let Some(&c) = counts.get(tok) {
                let p = (c as f64 + 1.0) / (total as f64 + v as f64);
                log_lik += p.ln();
                n_tokens += 1;
            }
        }
    }
    if n_tokens == 0 {
        return f64::INFINITY;
    }
    (-log_lik / n_tokens as f64).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // ---- lexicon ----

    #[test]
    fn prefix_wildcard_counts_and_rate() {
        let lexicon = Lexicon::parse("#work\nwork*\n").unwrap();
        let counts = lexicon_counts("work working played", &lexicon);
        let stats = counts.categories["work"];
        assert_eq!(stats.count, 2);
        assert_eq!(counts.word_count, 3);
        assert_relative_eq!(stats.rate, 66.67, epsilon = 0.005);
    }

    #[test]
    fn empty_text_gives_zero_counts_and_rates() {
        let lexicon = Lexicon::builtin();
        let counts = lexicon_counts("", &lexicon);
        assert_eq!(counts.word_count, 0);
        for stats in counts.categories.values() {
            assert_eq!(stats.count, 0);
            assert_eq!(stats.rate, 0.0);
        }
    }

    #[test]
    fn fifty_word_fixture_matches_hand_count() {
        let lexicon = Lexicon::parse("#work\nwork*\njob*\n#money\npay*\nmoney\n").unwrap();
        // exactly 50 words; hand-counted hits:
        // work*: work ×3, working, workplace; job*: jobs → 6 total
        // pay*: pay, payday, paycheck = 3; money ×2 → money category = 5
        let text = "my work is hard and working here means my jobs never end \
                    while the workplace stays loud and work piles up so work \
                    calls again but pay stays low and payday brings a thin \
                    paycheck with little money because money never stretches \
                    far enough for rent or food this year";
        let counts = lexicon_counts(text, &lexicon);
        assert_eq!(counts.word_count, 50);
        assert_eq!(counts.categories["work"].count, 6);
        assert_eq!(counts.categories["money"].count, 5);
    }

    #[test]
    fn rate_times_words_recovers_count() {
        let lexicon = Lexicon::builtin();
        let counts = lexicon_counts("i hate my job and my boss today", &lexicon);
        for stats in counts.categories.values() {
            let recovered = stats.rate * counts.word_count as f64 / 100.0;
            assert_relative_eq!(recovered, stats.count as f64, epsilon = 1e-9);
            assert_eq!(recovered.round() as u32, stats.count);
        }
    }

    #[test]
    fn token_may_hit_multiple_categories() {
        let lexicon = Lexicon::parse("#a\nlove*\n#b\nlove\n").unwrap();
        let counts = lexicon_counts("love", &lexicon);
        assert_eq!(counts.categories["a"].count, 1);
        assert_eq!(counts.categories["b"].count, 1);
    }

    #[test]
    fn punctuation_categories_count_raw_text() {
        let lexicon = Lexicon::parse("#qmark\n?\n#comma\n,\n").unwrap();
        let counts = lexicon_counts("wait, what? really?", &lexicon);
        assert_eq!(counts.categories["comma"].count, 1);
        assert_eq!(counts.categories["qmark"].count, 2);
        assert_eq!(counts.word_count, 3);
    }

    #[test]
    fn lexicon_rejects_malformed_input() {
        assert!(Lexicon::parse("").is_err());
        assert!(Lexicon::parse("word\n#cat\n").is_err());
        assert!(Lexicon::parse("#cat\n").is_err());
        assert!(Lexicon::parse("#cat\n*\n").is_err());
        assert!(Lexicon::parse("#\nword\n").is_err());
    }

    #[test]
    fn builtin_lexicon_covers_reported_categories() {
        let lexicon = Lexicon::builtin();
        for cat in ["work", "money", "swear", "qmark", "comma", "i", "they"] {
            assert!(
                lexicon.category_names().contains(&cat),
                "missing category {cat}"
            );
        }
    }

    // ---- rank tests ----

    #[test]
    fn identical_samples_give_zero_z_unit_p() {
        let (z, p) = rank_test(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(z, 0.0);
        assert_eq!(p, 1.0);
    }

    /// Brute-force oracle: every C(n, n_a) relabeling of the pooled sample.
    fn exact_oracle(a: &[f64], b: &[f64]) -> f64 {
        let pooled: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
        let n = pooled.len();
        let n_a = a.len();
        let u_of = |indices: &[usize]| -> f64 {
            let ranks = midranks(&pooled);
            let r: f64 = indices.iter().map(|&i| ranks[i]).sum();
            r - (n_a * (n_a + 1)) as f64 / 2.0
        };
        let u_obs = u_of(&(0..n_a).collect::<Vec<_>>());
        let mu = (n_a * (n - n_a)) as f64 / 2.0;
        let d_obs = (u_obs - mu).abs();
        let mut extreme = 0usize;
        let mut total = 0usize;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != n_a {
                continue;
            }
            let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            total += 1;
            if (u_of(&indices) - mu).abs() >= d_obs - 1e-12 {
                extreme += 1;
            }
        }
        extreme as f64 / total as f64
    }

    #[test]
    fn separated_pairs_match_exact_permutation_p() {
        let a = [1.0, 2.0];
        let b = [10.0, 20.0];
        let (z, p) = rank_test(&a, &b).unwrap();
        // U = 0; z with continuity correction: (0 − 2 + 0.5)/sqrt(5/3)
        assert_relative_eq!(z, -1.5 / (5.0f64 / 3.0).sqrt(), epsilon = 1e-12);
        assert_relative_eq!(p, exact_oracle(&a, &b), epsilon = 1e-9);
        assert_relative_eq!(p, 1.0 / 3.0, epsilon = 1e-9);
    }

    #[test]
    fn exact_path_matches_oracle_on_untied_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (n_a, n_b) in [(2usize, 3usize), (3, 3), (4, 5), (5, 6), (2, 8)] {
            let pool: Vec<f64> = loop {
                let candidate: Vec<f64> =
                    (0..n_a + n_b).map(|_| rng.random::<f64>()).collect();
                if !has_ties(&candidate) {
                    break candidate;
                }
            };
            let a = &pool[..n_a];
            let b = &pool[n_a..];
            let (_, p) = rank_test(a, b).unwrap();
            assert_relative_eq!(p, exact_oracle(a, b), epsilon = 1e-9);
        }
    }

    #[test]
    fn rank_test_is_antisymmetric() {
        let a = [3.0, 1.0, 4.0, 1.5];
        let b = [2.0, 7.0, 0.5];
        let (z_ab, p_ab) = rank_test(&a, &b).unwrap();
        let (z_ba, p_ba) = rank_test(&b, &a).unwrap();
        assert_relative_eq!(z_ab, -z_ba, epsilon = 1e-12);
        assert_relative_eq!(p_ab, p_ba, epsilon = 1e-12);
    }

    #[test]
    fn rank_test_invariant_under_monotone_transform() {
        let a = [0.1, 0.5, 0.9, 1.4];
        let b = [0.3, 0.7, 2.2];
        let (z1, p1) = rank_test(&a, &b).unwrap();
        let ta: Vec<f64> = a.iter().map(|v| v.exp()).collect();
        let tb: Vec<f64> = b.iter().map(|v| v.exp()).collect();
        let (z2, p2) = rank_test(&ta, &tb).unwrap();
        assert_relative_eq!(z1, z2, epsilon = 1e-12);
        assert_relative_eq!(p1, p2, epsilon = 1e-12);
    }

    #[test]
    fn constant_pooled_sample_degenerates_cleanly() {
        let (z, p) = rank_test(&[2.0, 2.0], &[2.0, 2.0, 2.0]).unwrap();
        assert_eq!(z, 0.0);
        assert_eq!(p, 1.0);
    }

    #[test]
    fn empty_sample_is_an_error() {
        assert!(rank_test(&[], &[1.0]).is_err());
        assert!(rank_test(&[1.0], &[]).is_err());
    }

    #[test]
    fn large_sample_uses_normal_tail() {
        // clearly separated large samples: z strongly negative, p tiny
        let a: Vec<f64> = (0..30).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..30).map(|i| 100.0 + i as f64).collect();
        let (z, p) = rank_test(&a, &b).unwrap();
        assert!(z < -6.0);
        assert!(p < 1e-9);
    }

    #[test]
    fn signed_rank_balanced_pairs() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        let y = [2.0, 1.0, 5.0, 3.0, 4.0];
        let (z, p) = signed_rank_test(&x, &y).unwrap();
        assert_eq!(z, 0.0);
        assert_eq!(p, 1.0);
    }

    #[test]
    fn signed_rank_detects_shift() {
        let x: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let y: Vec<f64> = (0..20).map(|i| i as f64 + 3.0).collect();
        let (z, p) = signed_rank_test(&x, &y).unwrap();
        assert!(z < -3.0);
        assert!(p < 0.01);
    }

    #[test]
    fn signed_rank_validates_inputs() {
        assert!(signed_rank_test(&[], &[]).is_err());
        assert!(signed_rank_test(&[1.0], &[1.0, 2.0]).is_err());
        let (z, p) = signed_rank_test(&[1.0, 2.0], &[1.0, 2.0]).unwrap();
        assert_eq!((z, p), (0.0, 1.0));
    }

    // ---- stars ----

    fn result(cat: &str, p: f64) -> StatTestResult {
        StatTestResult {
            category: cat.into(),
            mean_a: 0.0,
            mean_b: 0.0,
            z: 0.0,
            p,
            stars: Stars::None,
        }
    }

    #[test]
    fn star_thresholds() {
        let n = 10;
        let rows = vec![
            result("none", 1.0),
            result("one", 0.04 / n as f64),
            result("two", 0.009 / n as f64),
            result("three", 0.0005 / n as f64),
        ];
        let starred = correct_and_star(&rows, n);
        assert_eq!(starred[0].stars, Stars::None);
        assert_eq!(starred[1].stars, Stars::One);
        assert_eq!(starred[2].stars, Stars::Two);
        assert_eq!(starred[3].stars, Stars::Three);
    }

    #[test]
    fn stars_are_order_invariant() {
        let rows: Vec<StatTestResult> = (0..8)
            .map(|i| result(&format!("c{i}"), 0.001 * (i + 1) as f64))
            .collect();
        let mut shuffled = rows.clone();
        shuffled.reverse();
        let a = correct_and_star(&rows, rows.len());
        let mut b = correct_and_star(&shuffled, rows.len());
        b.reverse();
        assert_eq!(a, b);
    }

    #[test]
    fn stars_monotone_in_p() {
        let rows = vec![
            result("a", 1e-6),
            result("b", 1e-4),
            result("c", 1e-3),
            result("d", 0.5),
        ];
        let starred = correct_and_star(&rows, 4);
        for w in starred.windows(2) {
            assert!(w[0].stars >= w[1].stars);
        }
    }

    #[test]
    fn csv_mirrors_table_layout() {
        let rows = correct_and_star(&[result("work", 0.00001)], 1);
        let csv = results_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "category,antiwork,neutral,z,p,stars");
        assert!(lines.next().unwrap().starts_with("work,"));
    }

    // ---- LDA ----

    fn two_topic_corpus(docs_per_side: usize, seed: u64) -> Vec<Vec<String>> {
        let vocab_a: Vec<String> = (0..10).map(|i| format!("alpha{i}")).collect();
        let vocab_b: Vec<String> = (0..10).map(|i| format!("beta{i}")).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut docs = Vec::new();
        for i in 0..docs_per_side * 2 {
            let side = if i % 2 == 0 { &vocab_a } else { &vocab_b };
            let doc: Vec<String> = (0..8)
                .map(|_| side[rng.random_range(0..side.len())].clone())
                .collect();
            docs.push(doc);
        }
        docs
    }

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lda_rows_are_distributions() {
        let docs = two_topic_corpus(20, 0);
        let fit = fit_lda(&docs, 3, default_alpha(3), DEFAULT_BETA, 30, 0).unwrap();
        for row in fit.model.topic_word.rows() {
            assert_relative_eq!(row.sum(), 1.0, epsilon = 1e-9);
            assert!(row.iter().all(|&v| v >= 0.0));
        }
        for row in fit.model.doc_topic.rows() {
            assert_relative_eq!(row.sum(), 1.0, epsilon = 1e-9);
            assert!(row.iter().all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn lda_same_seed_is_bitwise_identical() {
        let docs = two_topic_corpus(10, 1);
        let a = fit_lda(&docs, 2, 1.0, 0.01, 20, 7).unwrap();
        let b = fit_lda(&docs, 2, 1.0, 0.01, 20, 7).unwrap();
        assert_eq!(a.model.topic_word, b.model.topic_word);
        assert_eq!(a.model.doc_topic, b.model.doc_topic);
    }

    #[test]
    fn disjoint_vocabularies_separate_into_pure_topics() {
        let docs = two_topic_corpus(100, 0);
        // alpha well below the 8-token document length; 50/K would put 25
        // pseudo-counts per topic on every doc and swamp the evidence
        let fit = fit_lda(&docs, 2, 0.1, DEFAULT_BETA, 100, 0).unwrap();
        for topic in 0..2 {
            let top = fit.model.top_terms(topic, 10);
            let mass: f64 = top.iter().map(|(_, p)| p).sum();
            let alpha_mass: f64 = top
                .iter()
                .filter(|(t, _)| t.starts_with("alpha"))
                .map(|(_, p)| p)
                .sum();
            let purity = (alpha_mass / mass).max(1.0 - alpha_mass / mass);
            assert!(purity >= 0.9, "topic {topic} purity {purity}");
        }
    }

    #[test]
    fn empty_docs_dropped_and_counted() {
        let mut docs = two_topic_corpus(5, 3);
        docs.insert(2, Vec::new());
        docs.push(Vec::new());
        let fit = fit_lda(&docs, 2, 1.0, 0.01, 10, 0).unwrap();
        assert_eq!(fit.dropped_empty, 2);
        assert_eq!(fit.model.doc_topic.nrows(), docs.len() - 2);
        assert!(!fit.retained.contains(&2));
    }

    #[test]
    fn lda_validates_configuration() {
        let docs = two_topic_corpus(5, 0);
        assert!(fit_lda(&docs, 1, 1.0, 0.01, 5, 0).is_err());
        assert!(fit_lda(&docs, 2, 0.0, 0.01, 5, 0).is_err());
        assert!(fit_lda(&[], 2, 1.0, 0.01, 5, 0).is_err());
        // vocab of 3 < K = 4
        let tiny = vec![vec!["a".to_string(), "b".to_string(), "c".to_string()]];
        assert!(fit_lda(&tiny, 4, 1.0, 0.01, 5, 0).is_err());
    }

    // ---- saliency ----

    #[test]
    fn uniform_topics_have_zero_saliency() {
        let v = 4;
        let model = TopicModel {
            k: 2,
            topic_word: Array2::from_elem((2, v), 1.0 / v as f64),
            doc_topic: Array2::from_elem((3, 2), 0.5),
            vocab: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            doc_lengths: vec![5, 5, 5],
            seed: 0,
        };
        let counts: BTreeMap<String, usize> =
            [("a", 4), ("b", 3), ("c", 2), ("d", 1)]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        for (_, saliency) in salient_terms(&model, &counts, 10) {
            assert_relative_eq!(saliency, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn salient_terms_come_from_planted_vocabularies() {
        let docs = two_topic_corpus(100, 0);
        let fit = fit_lda(&docs, 2, default_alpha(2), DEFAULT_BETA, 100, 0).unwrap();
        let counts = corpus_term_frequencies(&docs);
        let top = salient_terms(&fit.model, &counts, 10);
        assert_eq!(top.len(), 10);
        for (term, saliency) in &top {
            assert!(
                term.starts_with("alpha") || term.starts_with("beta"),
                "unexpected term {term}"
            );
            assert!(*saliency >= 0.0);
        }
    }

    #[test]
    fn top_n_clamps_to_vocab() {
        let docs = two_topic_corpus(10, 0);
        let fit = fit_lda(&docs, 2, 1.0, 0.01, 20, 0).unwrap();
        let counts = corpus_term_frequencies(&docs);
        let all = salient_terms(&fit.model, &counts, 10_000);
        assert_eq!(all.len(), fit.model.vocab.len());
    }

    #[test]
    fn lda_beats_unigram_on_matched_k() {
        let train = two_topic_corpus(100, 0);
        let held_out = two_topic_corpus(20, 99);
        let fit = fit_lda(&train, 2, default_alpha(2), DEFAULT_BETA, 100, 0).unwrap();
        let lda_ppl = perplexity(&fit.model, &held_out, default_alpha(2), 0);
        let uni_ppl = unigram_perplexity(&train, &held_out);
        assert!(
            lda_ppl < uni_ppl,
            "LDA {lda_ppl} not below unigram {uni_ppl}"
        );
    }

    // ---- group comparison ----

    #[test]
    fn compare_groups_flags_planted_difference() {
        let lexicon = Lexicon::parse("#work\nwork*\n#filler\nthe\n").unwrap();
        let docs_a: Vec<String> = (0..30)
            .map(|i| format!("work working the day {i} and work again"))
            .collect();
        let docs_b: Vec<String> = (0..30).map(|i| format!("the calm day {i} passes")).collect();
        let results = compare_groups(&docs_a, &docs_b, &lexicon).unwrap();
        let work = results.iter().find(|r| r.category == "work").unwrap();
        assert!(work.mean_a > work.mean_b);
        assert!(work.p < 0.05 / 2.0);
        assert_ne!(work.stars, Stars::None);
    }
}
