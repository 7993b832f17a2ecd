//! Text normalization: placeholder stripping, case folding, tokenization,
//! optional stop-word removal and stemming.
//!
//! Tokens are maximal runs of alphanumeric characters and `*` (the corpora
//! mask slurs with asterisks, e.g. `f*ggot`). Apostrophes inside a word are
//! dropped (`ain't` -> `aint`); every other character separates tokens. A
//! run made only of `*` is not a token.

use std::collections::BTreeSet;
use std::fmt;

use regex::Regex;
use rust_stemmers::{Algorithm, Stemmer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// NLTK's English stop-word list, lowercased and without apostrophes.
pub const ENGLISH_STOP_WORDS: &[&str] = &[
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "ain",
    "all",
    "am",
    "an",
    "and",
    "any",
    "are",
    "aren",
    "arent",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "couldn",
    "couldnt",
    "d",
    "did",
    "didn",
    "didnt",
    "do",
    "does",
    "doesn",
    "doesnt",
    "doing",
    "don",
    "dont",
    "down",
    "during",
    "each",
    "few",
    "for",
    "from",
    "further",
    "had",
    "hadn",
    "hadnt",
    "has",
    "hasn",
    "hasnt",
    "have",
    "haven",
    "havent",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "i",
    "if",
    "in",
    "into",
    "is",
    "isn",
    "isnt",
    "it",
    "its",
    "itself",
    "just",
    "ll",
    "m",
    "ma",
    "me",
    "mightn",
    "mightnt",
    "more",
    "most",
    "mustn",
    "mustnt",
    "my",
    "myself",
    "needn",
    "neednt",
    "no",
    "nor",
    "not",
    "now",
    "o",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "re",
    "s",
    "same",
    "shan",
    "shant",
    "she",
    "shes",
    "should",
    "shouldve",
    "shouldn",
    "shouldnt",
    "so",
    "some",
    "such",
    "t",
    "than",
    "that",
    "thatll",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "this",
    "those",
    "through",
    "to",
    "too",
    "under",
    "until",
    "up",
    "ve",
    "very",
    "was",
    "wasn",
    "wasnt",
    "we",
    "were",
    "weren",
    "werent",
    "what",
    "when",
    "where",
    "which",
    "while",
    "who",
    "whom",
    "why",
    "will",
    "with",
    "won",
    "wont",
    "wouldn",
    "wouldnt",
    "y",
    "you",
    "youd",
    "youll",
    "youre",
    "youve",
    "your",
    "yours",
    "yourself",
    "yourselves",
];

/// Bracketed placeholders (`[IDENTITY]`, `[TAG]`), URLs and HTML entities.
pub const DEFAULT_PLACEHOLDER_PATTERNS: &[&str] =
    &[r"\[[A-Za-z_]+\]", r"https?://\S+", r"&[a-zA-Z]+;|&#[0-9]+;"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum StemmerChoice {
    /// Snowball English (Porter2).
    #[default]
    Porter,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct NormalizationConfig {
    pub remove_stop_words: bool,
    pub stop_words: Vec<String>,
    pub placeholder_patterns: Vec<String>,
    pub stemmer: StemmerChoice,
}

impl Default for NormalizationConfig {
    fn default() -> Self {
        Self {
            remove_stop_words: false,
            stop_words: ENGLISH_STOP_WORDS.iter().map(|s| s.to_string()).collect(),
            placeholder_patterns: DEFAULT_PLACEHOLDER_PATTERNS
                .iter()
                .map(|s| s.to_string())
                .collect(),
            stemmer: StemmerChoice::Porter,
        }
    }
}

impl NormalizationConfig {
    pub fn with_stop_word_removal(mut self, remove: bool) -> Self {
        self.remove_stop_words = remove;
        self
    }
}

/// A compiled [`NormalizationConfig`].
pub struct Normalizer {
    config: NormalizationConfig,
    placeholders: Vec<Regex>,
    stop_words: BTreeSet<String>,
    stemmer: Option<Stemmer>,
}

impl fmt::Debug for Normalizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Normalizer")
            .field("config", &self.config)
            .finish()
    }
}

impl Default for Normalizer {
    fn default() -> Self {
        Self::new(NormalizationConfig::default()).expect("default patterns compile")
    }
}

impl Normalizer {
    pub fn new(config: NormalizationConfig) -> Result<Self> {
        let placeholders = config
            .placeholder_patterns
            .iter()
            .map(|p| {
                Regex::new(p).map_err(|source| Error::Pattern {
                    pattern: p.clone(),
                    source,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let stop_words = config
            .stop_words
            .iter()
            .flat_map(|w| split_tokens(&w.to_lowercase()))
            .collect();
        let stemmer = match config.stemmer {
            StemmerChoice::Porter => Some(Stemmer::create(Algorithm::English)),
            StemmerChoice::None => None,
        };
        Ok(Self {
            config,
            placeholders,
            stop_words,
            stemmer,
        })
    }

    pub fn config(&self) -> &NormalizationConfig {
        &self.config
    }

    pub fn is_stop_word(&self, token: &str) -> bool {
        self.stop_words.contains(token)
    }

    /// Stems to a fixpoint so that `stem(stem(t)) == stem(t)` always holds.
    pub fn stem(&self, token: &str) -> String {
        let Some(stemmer) = &self.stemmer else {
            return token.to_string();
        };
        let mut current = token.to_string();
        loop {
            let next = stemmer.stem(&current);
            if next == current {
                return current;
            }
            current = next.into_owned();
        }
    }

    /// Lowercased, unstemmed tokens with placeholders removed.
    pub fn surface_tokens(&self, raw: &str) -> Vec<String> {
        let mut text = raw.to_string();
        for re in &self.placeholders {
            if re.is_match(&text) {
                text = re.replace_all(&text, " ").into_owned();
            }
        }
        split_tokens(&text.to_lowercase())
    }

    /// The full pipeline. Stop-words are matched before stemming.
    pub fn normalize(&self, raw: &str) -> Vec<String> {
        self.surface_tokens(raw)
            .into_iter()
            .filter(|t| !(self.config.remove_stop_words && self.is_stop_word(t)))
            .map(|t| self.stem(&t))
            .collect()
    }
}

/// Convenience wrapper around [`Normalizer::normalize`].
pub fn normalize_text(raw: &str, config: &NormalizationConfig) -> Result<Vec<String>> {
    Ok(Normalizer::new(config.clone())?.normalize(raw))
}

fn split_tokens(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut has_alnum = false;
    let mut flush = |current: &mut String, has_alnum: &mut bool| {
        if *has_alnum {
            tokens.push(std::mem::take(current));
        } else {
            current.clear();
        }
        *has_alnum = false;
    };
    for c in text.chars() {
        if c.is_alphanumeric() {
            current.push(c);
            has_alnum = true;
        } else if c == '*' {
            current.push(c);
        } else if (c == '\'' || c == '\u{2019}') && !current.is_empty() {
            // apostrophe inside a word: drop it, keep the word together
        } else {
            flush(&mut current, &mut has_alnum);
        }
    }
    flush(&mut current, &mut has_alnum);
    tokens
}
