//! Part-of-speech provider interface and the bundled rule-based tagger.
//!
//! The rule tagger exists so feature extraction, training, and CI are fully
//! offline: a closed lexicon of common (work-forum flavored) words plus
//! suffix fallbacks. It is not a linguistic authority; richer taggers plug
//! in through [`PosTagger`].

use std::collections::HashMap;
use std::sync::LazyLock;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TagError {
    #[error("tagger backend failed: {0}")]
    Backend(String),
    #[error("unknown part-of-speech tag {0:?}")]
    UnknownTag(String),
}

/// Coarse universal tags, the subset the feature extractor cares about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosTag {
    Noun,
    Verb,
    Adj,
    Adv,
    Cconj,
    Num,
    Punct,
    Pron,
    Det,
    Adp,
    Other,
}

impl PosTag {
    /// Parse an upper-case universal POS name as produced by common taggers.
    /// Unlisted tags (PROPN, AUX, ...) fold into the nearest counted bucket
    /// or `Other`.
    pub fn parse(name: &str) -> Result<Self, TagError> {
        Ok(match name {
            "NOUN" | "PROPN" => PosTag::Noun,
            "VERB" | "AUX" => PosTag::Verb,
            "ADJ" => PosTag::Adj,
            "ADV" => PosTag::Adv,
            "CCONJ" | "CONJ" => PosTag::Cconj,
            "NUM" => PosTag::Num,
            "PUNCT" => PosTag::Punct,
            "PRON" => PosTag::Pron,
            "DET" => PosTag::Det,
            "ADP" => PosTag::Adp,
            "X" | "SYM" | "INTJ" | "PART" | "SCONJ" | "SPACE" => PosTag::Other,
            other => return Err(TagError::UnknownTag(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TaggedToken {
    pub token: String,
    pub tag: PosTag,
}

/// Pluggable part-of-speech provider.
pub trait PosTagger {
    fn tag(&self, text: &str) -> Result<Vec<TaggedToken>, TagError>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PronounClass {
    FirstSingular,
    FirstPlural,
    SecondSingular,
    SecondPlural,
    ThirdSingular,
    ThirdPlural,
}

/// Person/number class of a pronoun token, if it is a personal pronoun.
/// Bare "you" counts as singular; only the reflexive plural is unambiguous.
pub fn pronoun_class(token: &str) -> Option<PronounClass> {
    let t = token.to_lowercase();
    let class = match t.as_str() {
        "i" | "me" | "my" | "mine" | "myself" => PronounClass::FirstSingular,
        "we" | "us" | "our" | "ours" | "ourselves" => PronounClass::FirstPlural,
        "you" | "your" | "yours" | "yourself" => PronounClass::SecondSingular,
        "yourselves" | "yall" | "y'all" => PronounClass::SecondPlural,
        "he" | "she" | "it" | "him" | "her" | "his" | "hers" | "its" | "himself" | "herself"
        | "itself" => PronounClass::ThirdSingular,
        "they" | "them" | "their" | "theirs" | "themselves" => PronounClass::ThirdPlural,
        _ => return None,
    };
    Some(class)
}

static LEXICON: LazyLock<HashMap<&'static str, PosTag>> = LazyLock::new(|| {
    let mut m = HashMap::new();
    let mut add = |words: &[&'static str], tag: PosTag| {
        for w in words {
            m.insert(*w, tag);
        }
    };

    add(
        &[
            "something",
            "anything",
            "nothing",
            "everything",
            "someone",
            "anyone",
            "everyone",
            "nobody",
            "somebody",
            "everybody",
            "who",
            "whom",
            "what",
        ],
        PosTag::Pron,
    );
    add(
        &[
            "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had", "do",
            "does", "did", "done", "go", "went", "gone", "get", "got", "make", "made", "love",
            "hate", "like", "want", "need", "feel", "felt", "think", "thought", "know", "knew",
            "say", "said", "tell", "told", "quit", "fire", "hire", "pay", "apply", "ask", "asked",
            "give", "gave", "take", "took", "find", "found", "leave", "left", "keep", "kept",
            "can", "could", "will", "would", "should", "must", "may", "might", "don't", "can't",
            "won't", "didn't", "doesn't", "isn't", "wasn't", "couldn't", "wouldn't", "shouldn't",
        ],
        PosTag::Verb,
    );
    add(
        &[
            "job",
            "jobs",
            "work",
            "boss",
            "manager",
            "company",
            "office",
            "salary",
            "wage",
            "wages",
            "money",
            "time",
            "day",
            "days",
            "week",
            "weeks",
            "month",
            "months",
            "year",
            "years",
            "hour",
            "hours",
            "people",
            "person",
            "employee",
            "employees",
            "employer",
            "interview",
            "resume",
            "recruiter",
            "team",
            "shift",
            "shifts",
            "break",
            "career",
            "life",
            "family",
            "home",
            "place",
            "thing",
            "things",
            "way",
            "man",
            "woman",
            "kid",
            "kids",
            "friend",
            "friends",
            "email",
            "phone",
            "meeting",
            "offer",
            "pto",
            "benefits",
            "overtime",
            "paycheck",
            "raise",
            "union",
        ],
        PosTag::Noun,
    );
    add(
        &[
            "good",
            "bad",
            "great",
            "terrible",
            "awful",
            "happy",
            "sad",
            "angry",
            "tired",
            "toxic",
            "unfair",
            "fair",
            "low",
            "high",
            "new",
            "old",
            "long",
            "short",
            "hard",
            "easy",
            "sick",
            "late",
            "early",
            "free",
            "busy",
            "poor",
            "rich",
            "horrible",
            "miserable",
            "underpaid",
            "overworked",
        ],
        PosTag::Adj,
    );
    add(
        &[
            "very",
            "really",
            "always",
            "never",
            "often",
            "sometimes",
            "again",
            "still",
            "just",
            "too",
            "so",
            "now",
            "then",
            "here",
            "there",
            "today",
            "yesterday",
            "tomorrow",
            "hardly",
            "barely",
            "finally",
            "maybe",
            "probably",
            "usually",
            "actually",
            "honestly",
            "not",
        ],
        PosTag::Adv,
    );
    add(&["and", "or", "but", "nor", "yet", "plus"], PosTag::Cconj);
    add(
        &[
            "the", "a", "an", "this", "that", "these", "those", "some", "any", "no", "every",
            "each", "all",
        ],
        PosTag::Det,
    );
    add(
        &[
            "in", "on", "at", "of", "for", "with", "from", "to", "by", "about", "over", "under",
            "after", "before", "between", "during", "into", "out", "up", "down", "off",
        ],
        PosTag::Adp,
    );
    add(
        &[
            "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
            "hundred", "thousand", "million", "zero", "dozen",
        ],
        PosTag::Num,
    );
    m
});

/// Deterministic closed-lexicon tagger.
#[derive(Debug, Default, Clone, Copy)]
pub struct RuleTagger;

impl RuleTagger {
    pub fn new() -> Self {
        RuleTagger
    }

    fn classify_word(word: &str) -> PosTag {
        let lower = word.to_lowercase();
        if pronoun_class(&lower).is_some() {
            return PosTag::Pron;
        }
        if let Some(&tag) = LEXICON.get(lower.as_str()) {
            return tag;
        }
        if lower.chars().all(|c| c.is_ascii_digit()) {
            return PosTag::Num;
        }
        // suffix fallbacks, then noun
        if lower.len() > 3 {
            if lower.ends_with("ly") {
                return PosTag::Adv;
            }
            if lower.ends_with("ing") || lower.ends_with("ed") {
                return PosTag::Verb;
            }
            if lower.ends_with("ous")
                || lower.ends_with("ful")
                || lower.ends_with("less")
                || lower.ends_with("ive")
                || lower.ends_with("able")
            {
                return PosTag::Adj;
            }
        }
        PosTag::Noun
    }
}

/// Split into word tokens (letters/digits with internal apostrophes), `@`
/// number tokens, and single-character punctuation tokens.
pub fn tokenize_with_punct(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    let chars: Vec<char> = text.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_alphanumeric()
            || (c == '\'' && i > 0 && i + 1 < chars.len()
                && chars[i - 1].is_alphanumeric()
                && chars[i + 1].is_alphanumeric())
        {
            word.push(c);
        } else {
            if !word.is_empty() {
                tokens.push(std::mem::take(&mut word));
            }
            if c == '@' {
                tokens.push("@".to_string());
            } else if !c.is_whitespace() {
                tokens.push(c.to_string());
            }
        }
    }
    if !word.is_empty() {
        tokens.push(word);
    }
    tokens
}

impl PosTagger for RuleTagger {
    fn tag(&self, text: &str) -> Result<Vec<TaggedToken>, TagError> {
        Ok(tokenize_with_punct(text)
            .into_iter()
            .map(|token| {
                let tag = if token == "@" {
                    PosTag::Num
                } else if token.chars().count() == 1
                    && !token.chars().next().unwrap().is_alphanumeric()
                {
                    PosTag::Punct
                } else {
                    Self::classify_word(&token)
                };
                TaggedToken { token, tag }
            })
            .collect())
    }
}
