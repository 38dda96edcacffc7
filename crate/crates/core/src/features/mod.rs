//! Feature extraction: linguistic pattern counts, engagement aggregates, and
//! TF-IDF over per-user documents.

pub mod tagger;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{clean_text, Post, UserRecord};
use tagger::{pronoun_class, PosTag, PosTagger, PronounClass, TagError};

#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("tagging failed for post {post_id}: {source}")]
    Tagging {
        post_id: String,
        #[source]
        source: TagError,
    },
    #[error("tagging failed: {0}")]
    Tag(#[from] TagError),
    #[error("cannot fit TF-IDF on an empty document list")]
    EmptyCorpus,
    #[error("invalid vocabulary: {0}")]
    InvalidVocab(String),
}

/// Per-post linguistic pattern counts. The first fourteen components are
/// pronoun person/number and coarse part-of-speech occurrence counts; the
/// fifteenth is the total token count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinguisticFeatures {
    pub first_singular: u32,
    pub first_plural: u32,
    pub second_singular: u32,
    pub second_plural: u32,
    pub third_singular: u32,
    pub third_plural: u32,
    pub noun: u32,
    pub verb: u32,
    pub adj: u32,
    pub adv: u32,
    pub cconj: u32,
    pub num: u32,
    pub punct: u32,
    pub pron: u32,
    pub tokens: u32,
}

impl LinguisticFeatures {
    pub const DIM: usize = 15;
    pub const NAMES: [&'static str; Self::DIM] = [
        "first_singular",
        "first_plural",
        "second_singular",
        "second_plural",
        "third_singular",
        "third_plural",
        "noun",
        "verb",
        "adj",
        "adv",
        "cconj",
        "num",
        "punct",
        "pron",
        "tokens",
    ];

    pub fn to_vec(self) -> [f64; Self::DIM] {
        let v = [
            self.first_singular,
            self.first_plural,
            self.second_singular,
            self.second_plural,
            self.third_singular,
            self.third_plural,
            self.noun,
            self.verb,
            self.adj,
            self.adv,
            self.cconj,
            self.num,
            self.punct,
            self.pron,
            self.tokens,
        ];
        assert_eq!(v.len(), Self::DIM);
        v.map(f64::from)
    }

    pub fn add(&mut self, other: &LinguisticFeatures) {
        self.first_singular += other.first_singular;
        self.first_plural += other.first_plural;
        self.second_singular += other.second_singular;
        self.second_plural += other.second_plural;
        self.third_singular += other.third_singular;
        self.third_plural += other.third_plural;
        self.noun += other.noun;
        self.verb += other.verb;
        self.adj += other.adj;
        self.adv += other.adv;
        self.cconj += other.cconj;
        self.num += other.num;
        self.punct += other.punct;
        self.pron += other.pron;
        self.tokens += other.tokens;
    }
}

/// Count linguistic features from already-tagged tokens. Pronoun person
/// classes come from the token text, so providers that only emit coarse
/// tags still yield person counts.
pub fn count_tagged(tokens: &[tagger::TaggedToken]) -> LinguisticFeatures {
    let mut f = LinguisticFeatures::default();
    for t in tokens {
        f.tokens += 1;
        match t.tag {
            PosTag::Noun => f.noun += 1,
            PosTag::Verb => f.verb += 1,
            PosTag::Adj => f.adj += 1,
            PosTag::Adv => f.adv += 1,
            PosTag::Cconj => f.cconj += 1,
            PosTag::Num => f.num += 1,
            PosTag::Punct => f.punct += 1,
            PosTag::Pron => f.pron += 1,
            PosTag::Det | PosTag::Adp | PosTag::Other => {}
        }
        if t.tag == PosTag::Pron {
            match pronoun_class(&t.token) {
                Some(PronounClass::FirstSingular) => f.first_singular += 1,
                Some(PronounClass::FirstPlural) => f.first_plural += 1,
                Some(PronounClass::SecondSingular) => f.second_singular += 1,
                Some(PronounClass::SecondPlural) => f.second_plural += 1,
                Some(PronounClass::ThirdSingular) => f.third_singular += 1,
                Some(PronounClass::ThirdPlural) => f.third_plural += 1,
                None => {}
            }
        }
    }
    f
}

/// Extract linguistic counts from cleaned text.
pub fn linguistic_features<T: PosTagger + ?Sized>(
    text: &str,
    tagger: &T,
) -> Result<LinguisticFeatures, FeatureError> {
    Ok(count_tagged(&tagger.tag(text)?))
}

/// Per-post extraction: cleans the post's title and body first and carries
/// the post id on failure.
pub fn post_linguistic_features<T: PosTagger + ?Sized>(
    post: &Post,
    tagger: &T,
) -> Result<LinguisticFeatures, FeatureError> {
    let text = post_document(post);
    linguistic_features(&text, tagger).map_err(|e| match e {
        FeatureError::Tag(source) => FeatureError::Tagging {
            post_id: post.id.clone(),
            source,
        },
        other => other,
    })
}

/// Summed linguistic counts over all of a user's posts. Order-independent.
pub fn user_linguistic_features<T: PosTagger + ?Sized>(
    record: &UserRecord,
    tagger: &T,
) -> Result<LinguisticFeatures, FeatureError> {
    let mut total = LinguisticFeatures::default();
    for post in &record.posts {
        total.add(&post_linguistic_features(post, tagger)?);
    }
    Ok(total)
}

/// Cleaned title and body of one post, newline-joined when both are present.
/// This is the text unit the encoder and the taggers see.
pub fn post_document(post: &Post) -> String {
    let title = clean_text(&post.title);
    let body = clean_text(&post.body);
    if title.is_empty() {
        body
    } else if body.is_empty() {
        title
    } else {
        format!("{title}\n{body}")
    }
}

/// Per-user engagement aggregates: means of the numeric metadata fields and
/// the fraction of pinned posts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct EngagementFeatures {
    pub score: f64,
    pub ups: f64,
    pub downs: f64,
    pub num_comments: f64,
    pub gilded: f64,
    pub pinned: f64,
}

impl EngagementFeatures {
    pub const DIM: usize = 6;
    pub const NAMES: [&'static str; Self::DIM] =
        ["score", "ups", "downs", "num_comments", "gilded", "pinned"];

    pub fn to_vec(self) -> [f64; Self::DIM] {
        let v = [
            self.score,
            self.ups,
            self.downs,
            self.num_comments,
            self.gilded,
            self.pinned,
        ];
        assert_eq!(v.len(), Self::DIM);
        v
    }
}

pub fn engagement_features(record: &UserRecord) -> EngagementFeatures {
    assert!(
        !record.posts.is_empty(),
        "engagement features require at least one post"
    );
    let n = record.posts.len() as f64;
    let mut f = EngagementFeatures::default();
    for p in &record.posts {
        f.score += p.score as f64;
        f.ups += p.ups as f64;
        f.downs += p.downs as f64;
        f.num_comments += p.num_comments as f64;
        f.gilded += p.gilded as f64;
        f.pinned += if p.pinned { 1.0 } else { 0.0 };
    }
    f.score /= n;
    f.ups /= n;
    f.downs /= n;
    f.num_comments /= n;
    f.gilded /= n;
    f.pinned /= n;
    debug_assert!((0.0..=1.0).contains(&f.pinned));
    f
}

/// TF-IDF tokenizer: lowercase and split on non-alphanumeric runs.
pub fn tfidf_tokenize(doc: &str) -> Vec<String> {
    doc.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

/// The per-user document TF-IDF operates on: every post's cleaned title and
/// body, joined by newlines, in post order.
pub fn user_document(record: &UserRecord) -> String {
    let mut parts = Vec::new();
    for post in &record.posts {
        let title = clean_text(&post.title);
        if !title.is_empty() {
            parts.push(title);
        }
        let body = clean_text(&post.body);
        if !body.is_empty() {
            parts.push(body);
        }
    }
    parts.join("\n")
}

/// Fitted TF-IDF vocabulary: term → (dense index, document frequency).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TfIdfVocab {
    terms: BTreeMap<String, (usize, u32)>,
    n_docs: usize,
}

impl TfIdfVocab {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.terms.get(term).map(|&(i, _)| i)
    }

    pub fn df(&self, term: &str) -> Option<u32> {
        self.terms.get(term).map(|&(_, df)| df)
    }

    /// Smoothed inverse document frequency: ln((1 + n)/(1 + df)) + 1.
    pub fn idf(&self, term: &str) -> Option<f64> {
        self.df(term)
            .map(|df| ((1.0 + self.n_docs as f64) / (1.0 + df as f64)).ln() + 1.0)
    }

    /// Term names in index order.
    pub fn terms_in_order(&self) -> Vec<&str> {
        let mut v: Vec<(&str, usize)> = self
            .terms
            .iter()
            .map(|(t, &(i, _))| (t.as_str(), i))
            .collect();
        v.sort_by_key(|&(_, i)| i);
        v.into_iter().map(|(t, _)| t).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("vocab serializes")
    }

    pub fn from_json(json: &str) -> Result<Self, FeatureError> {
        let vocab: TfIdfVocab =
            serde_json::from_str(json).map_err(|e| FeatureError::InvalidVocab(e.to_string()))?;
        vocab.validate()?;
        Ok(vocab)
    }

    fn validate(&self) -> Result<(), FeatureError> {
        let mut seen = vec![false; self.terms.len()];
        for (term, &(index, df)) in &self.terms {
            if index >= self.terms.len() || seen[index] {
                return Err(FeatureError::InvalidVocab(format!(
                    "index {index} for {term:?} is out of range or duplicated"
                )));
            }
            seen[index] = true;
            if df == 0 || df as usize > self.n_docs {
                return Err(FeatureError::InvalidVocab(format!(
                    "document frequency {df} for {term:?} outside [1, {}]",
                    self.n_docs
                )));
            }
        }
        Ok(())
    }
}

/// Fit a vocabulary over the document list. Indices are dense and assigned
/// in sorted term order, so refitting the same corpus is byte-stable.
pub fn fit_tfidf<S: AsRef<str>>(docs: &[S]) -> Result<TfIdfVocab, FeatureError> {
    if docs.is_empty() {
        return Err(FeatureError::EmptyCorpus);
    }
    let mut df: BTreeMap<String, u32> = BTreeMap::new();
    for doc in docs {
        let unique: BTreeSet<String> = tfidf_tokenize(doc.as_ref()).into_iter().collect();
        for term in unique {
            *df.entry(term).or_insert(0) += 1;
        }
    }
    let terms = df
        .into_iter()
        .enumerate()
        .map(|(index, (term, df))| (term, (index, df)))
        .collect();
    Ok(TfIdfVocab {
        terms,
        n_docs: docs.len(),
    })
}

/// Sparse vector with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseVector {
    pub indices: Vec<usize>,
    pub values: Vec<f64>,
    pub dim: usize,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            indices: Vec::new(),
            values: Vec::new(),
            dim,
        }
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let mut dense = vec![0.0; self.dim];
        for (&i, &v) in self.indices.iter().zip(&self.values) {
            dense[i] = v;
        }
        dense
    }

    pub fn dot_dense(&self, weights: &[f64]) -> f64 {
        self.indices
            .iter()
            .zip(&self.values)
            .map(|(&i, &v)| v * weights[i])
            .sum()
    }
}

/// Transform a document into an L2-normalized TF-IDF vector. Out-of-vocabulary
/// terms are dropped; a document with no in-vocabulary terms maps to the zero
/// vector.
pub fn transform(doc: &str, vocab: &TfIdfVocab) -> SparseVector {
    let mut tf: BTreeMap<usize, f64> = BTreeMap::new();
    let mut idf_by_index: BTreeMap<usize, f64> = BTreeMap::new();
    for token in tfidf_tokenize(doc) {
        if let Some(&(index, df)) = vocab.terms.get(&token) {
            *tf.entry(index).or_insert(0.0) += 1.0;
            idf_by_index.insert(
                index,
                ((1.0 + vocab.n_docs as f64) / (1.0 + df as f64)).ln() + 1.0,
            );
        }
    }
    let mut indices = Vec::with_capacity(tf.len());
    let mut values = Vec::with_capacity(tf.len());
    for (index, count) in tf {
        indices.push(index);
        values.push(count * idf_by_index[&index]);
    }
    let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in &mut values {
            *v /= norm;
        }
    }
    SparseVector {
        indices,
        values,
        dim: vocab.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::tagger::RuleTagger;
    use super::*;
    use crate::corpus::PostKind;
    use approx::assert_relative_eq;

    fn post(id: &str, title: &str, body: &str) -> Post {
        Post {
            id: id.to_string(),
            author: "u".to_string(),
            subreddit: "antiwork".to_string(),
            created_utc: 0,
            title: title.to_string(),
            body: body.to_string(),
            kind: PostKind::Submission,
            score: 0,
            ups: 0,
            downs: 0,
            num_comments: 0,
            gilded: 0,
            pinned: false,
        }
    }

    #[test]
    fn empty_text_is_all_zero() {
        let f = linguistic_features("", &RuleTagger::new()).unwrap();
        assert_eq!(f, LinguisticFeatures::default());
        assert_eq!(f.to_vec(), [0.0; 15]);
    }

    #[test]
    fn i_love_you_counts() {
        let f = linguistic_features("I love you .", &RuleTagger::new()).unwrap();
        assert_eq!(f.first_singular, 1);
        assert_eq!(f.second_singular, 1);
        assert_eq!(f.verb, 1);
        assert_eq!(f.punct, 1);
        assert_eq!(f.pron, 2);
        assert_eq!(f.tokens, 4);
    }

    #[test]
    fn pos_counts_bounded_by_token_count() {
        let tagger = RuleTagger::new();
        for text in [
            "I quit my job today and my boss was angry !",
            "we need a @ % raise , not pizza",
            "union now",
        ] {
            let tagged = tagger.tag(text).unwrap();
            let f = count_tagged(&tagged);
            let pos_sum = f.noun + f.verb + f.adj + f.adv + f.cconj + f.num + f.punct + f.pron;
            assert!(pos_sum <= tagged.len() as u32);
            assert_eq!(f.tokens as usize, tagged.len());
        }
    }

    #[test]
    fn user_counts_are_order_independent() {
        let tagger = RuleTagger::new();
        let a = post("a", "I quit", "my boss is toxic");
        let b = post("b", "", "we deserve better pay");
        let fwd = user_linguistic_features(
            &UserRecord {
                author: "u".into(),
                posts: vec![a.clone(), b.clone()],
            },
            &tagger,
        )
        .unwrap();
        let rev = user_linguistic_features(
            &UserRecord {
                author: "u".into(),
                posts: vec![b, a],
            },
            &tagger,
        )
        .unwrap();
        assert_eq!(fwd, rev);
    }

    #[test]
    fn engagement_single_post_means() {
        let mut p = post("a", "t", "b");
        p.score = 5;
        p.ups = 7;
        let f = engagement_features(&UserRecord {
            author: "u".into(),
            posts: vec![p],
        });
        assert_eq!(f.score, 5.0);
        assert_eq!(f.ups, 7.0);
        assert_eq!(f.pinned, 0.0);
    }

    #[test]
    fn engagement_pinned_fraction() {
        let mut a = post("a", "t", "b");
        a.pinned = true;
        let b = post("b", "t", "b");
        let f = engagement_features(&UserRecord {
            author: "u".into(),
            posts: vec![a, b],
        });
        assert_eq!(f.pinned, 0.5);
    }

    #[test]
    fn engagement_means_match_recomputation() {
        // Ten posts with varied metadata; expected means recomputed through
        // exact integer sums.
        let mut posts = Vec::new();
        let scores = [3, -2, 10, 0, 7, 1, 4, -5, 2, 6];
        let ups = [5, 0, 12, 1, 9, 2, 4, 0, 3, 8];
        let downs = [2, 2, 2, 1, 2, 1, 0, 5, 1, 2];
        let comments = [0, 1, 30, 2, 4, 0, 1, 0, 2, 10];
        let gilded = [0, 0, 1, 0, 0, 0, 0, 0, 2, 0];
        for i in 0..10 {
            let mut p = post(&format!("p{i}"), "t", "b");
            p.score = scores[i];
            p.ups = ups[i];
            p.downs = downs[i];
            p.num_comments = comments[i];
            p.gilded = gilded[i];
            p.pinned = i % 3 == 0;
            posts.push(p);
        }
        let f = engagement_features(&UserRecord {
            author: "u".into(),
            posts,
        });
        let mean = |xs: &[i64]| xs.iter().sum::<i64>() as f64 / xs.len() as f64;
        assert_relative_eq!(f.score, mean(&scores), epsilon = 1e-12);
        assert_relative_eq!(f.ups, mean(&ups), epsilon = 1e-12);
        assert_relative_eq!(f.downs, mean(&downs), epsilon = 1e-12);
        assert_relative_eq!(f.num_comments, mean(&comments), epsilon = 1e-12);
        assert_relative_eq!(f.gilded, mean(&gilded), epsilon = 1e-12);
        assert_relative_eq!(f.pinned, 0.4, epsilon = 1e-12); // posts 0,3,6,9
    }

    #[test]
    fn single_term_doc_normalizes_to_one() {
        let vocab = fit_tfidf(&["a"]).unwrap();
        let v = transform("a", &vocab);
        assert_eq!(v.indices, vec![0]);
        assert_relative_eq!(v.values[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn smoothed_idf_closed_form() {
        let vocab = fit_tfidf(&["a b", "a"]).unwrap();
        assert_relative_eq!(vocab.idf("a").unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(vocab.idf("b").unwrap(), (3.0f64 / 2.0).ln() + 1.0, epsilon = 1e-12);
        assert_eq!(vocab.df("a"), Some(2));
        assert_eq!(vocab.df("b"), Some(1));
    }

    #[test]
    fn oov_transforms_to_zero_vector() {
        let vocab = fit_tfidf(&["a b", "a"]).unwrap();
        let v = transform("zzz", &vocab);
        assert!(v.indices.is_empty());
        assert_eq!(v.l2_norm(), 0.0);
        assert_eq!(v.to_dense(), vec![0.0, 0.0]);
    }

    #[test]
    fn nonempty_transforms_have_unit_norm() {
        let docs = ["my boss quit today", "quit my job", "boss bad", "today today job"];
        let vocab = fit_tfidf(&docs).unwrap();
        for doc in docs {
            assert_relative_eq!(transform(doc, &vocab).l2_norm(), 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn indices_dense_and_sorted_by_term() {
        let vocab = fit_tfidf(&["b c a", "c d"]).unwrap();
        assert_eq!(vocab.terms_in_order(), vec!["a", "b", "c", "d"]);
        for (i, term) in vocab.terms_in_order().iter().enumerate() {
            assert_eq!(vocab.index_of(term), Some(i));
        }
    }

    #[test]
    fn vocab_json_round_trip() {
        let vocab = fit_tfidf(&["a b", "a"]).unwrap();
        let restored = TfIdfVocab::from_json(&vocab.to_json()).unwrap();
        assert_eq!(vocab, restored);
        assert!(TfIdfVocab::from_json("{\"terms\":{\"a\":[5,1]},\"n_docs\":1}").is_err());
    }

    #[test]
    fn empty_fit_is_an_error() {
        assert!(matches!(
            fit_tfidf::<&str>(&[]),
            Err(FeatureError::EmptyCorpus)
        ));
    }

    #[test]
    fn tfidf_fold_ignores_case_and_punctuation() {
        let vocab = fit_tfidf(&["Boss QUIT!"]).unwrap();
        assert!(vocab.index_of("boss").is_some());
        assert!(vocab.index_of("quit").is_some());
        let v = transform("boss, quit.", &vocab);
        assert_eq!(v.indices.len(), 2);
    }
}
