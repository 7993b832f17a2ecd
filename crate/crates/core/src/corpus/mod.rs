//! Corpora, term lists and term matching.

pub(crate) mod load;
mod matching;
pub mod normalize;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use load::{load_corpus, load_term_list, CorpusSchema};
pub use matching::{
    lines_by_term_count, match_terms, Histogram, HistogramBucket, MatchResult, TermIndex, TermMatch,
};
pub use normalize::{normalize_text, NormalizationConfig, Normalizer, StemmerChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassLabel {
    Hate,
    RelativeHate,
    NoHate,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [
        ClassLabel::Hate,
        ClassLabel::RelativeHate,
        ClassLabel::NoHate,
    ];

    pub fn index(self) -> usize {
        match self {
            ClassLabel::Hate => 0,
            ClassLabel::RelativeHate => 1,
            ClassLabel::NoHate => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Hate => "hate",
            ClassLabel::RelativeHate => "relative_hate",
            ClassLabel::NoHate => "no_hate",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s
            .trim()
            .to_ascii_lowercase()
            .replace(['-', ' '], "_")
            .as_str()
        {
            "hate" => Ok(ClassLabel::Hate),
            "relative_hate" | "relativehate" | "relative" => Ok(ClassLabel::RelativeHate),
            "no_hate" | "nohate" | "none" => Ok(ClassLabel::NoHate),
            _ => Err(Error::UnknownClass(s.to_string())),
        }
    }
}

/// Source-dataset label string -> canonical class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassMap(BTreeMap<String, ClassLabel>);

impl ClassMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, source: impl Into<String>, label: ClassLabel) -> &mut Self {
        self.0.insert(source.into(), label);
        self
    }

    pub fn get(&self, source: &str) -> Option<ClassLabel> {
        self.0.get(source.trim()).copied()
    }
}

impl<S: Into<String>> FromIterator<(S, ClassLabel)> for ClassMap {
    fn from_iter<I: IntoIterator<Item = (S, ClassLabel)>>(iter: I) -> Self {
        ClassMap(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalizedTerm {
    pub raw: String,
    pub tokens: Vec<String>,
}

impl NormalizedTerm {
    /// Tokens joined by a single space; the term's identity.
    pub fn key(&self) -> String {
        self.tokens.join(" ")
    }

    /// Tokens joined by `_`, used as a single item in sequence databases.
    pub fn item(&self) -> String {
        self.tokens.join("_")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermListReport {
    pub source: String,
    pub entries: usize,
    /// `(raw, key it collapsed into)`.
    pub dropped_duplicates: Vec<(String, String)>,
    /// Raw entries that normalized to nothing or to stop-words only.
    pub dropped_empty: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermList {
    pub name: String,
    entries: Vec<NormalizedTerm>,
}

impl TermList {
    /// Normalizes `raw_terms` and collapses duplicates, keeping the first raw form.
    pub fn from_raw<I, S>(
        name: impl Into<String>,
        raw_terms: I,
        normalizer: &normalize::Normalizer,
    ) -> (TermList, TermListReport)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let name = name.into();
        let mut report = TermListReport {
            source: name.clone(),
            ..Default::default()
        };
        let mut seen: HashMap<Vec<String>, usize> = HashMap::new();
        let mut entries = Vec::new();
        for raw in raw_terms {
            let raw = raw.as_ref().trim();
            let tokens = normalizer.normalize(raw);
            let stop_only = normalizer
                .surface_tokens(raw)
                .iter()
                .all(|s| normalizer.is_stop_word(s));
            if tokens.is_empty() || stop_only {
                report.dropped_empty.push(raw.to_string());
                continue;
            }
            if seen.contains_key(&tokens) {
                report
                    .dropped_duplicates
                    .push((raw.to_string(), tokens.join(" ")));
                continue;
            }
            seen.insert(tokens.clone(), entries.len());
            entries.push(NormalizedTerm {
                raw: raw.to_string(),
                tokens,
            });
        }
        report.entries = entries.len();
        (TermList { name, entries }, report)
    }

    /// Builds a list from already-normalized terms, dropping repeated token sequences.
    pub fn from_terms(
        name: impl Into<String>,
        terms: impl IntoIterator<Item = NormalizedTerm>,
    ) -> Self {
        let mut seen = std::collections::HashSet::new();
        let entries = terms
            .into_iter()
            .filter(|t| !t.tokens.is_empty() && seen.insert(t.tokens.clone()))
            .collect();
        TermList {
            name: name.into(),
            entries,
        }
    }

    pub fn entries(&self) -> &[NormalizedTerm] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLine {
    pub id: usize,
    pub raw: String,
    pub tokens: Vec<String>,
    pub label: ClassLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledCorpus {
    pub name: String,
    lines: Vec<CorpusLine>,
}

impl LabeledCorpus {
    /// Normalizes `(text, label)` records; ids are assigned by position.
    pub fn from_records<I, S>(
        name: impl Into<String>,
        records: I,
        normalizer: &normalize::Normalizer,
    ) -> Self
    where
        I: IntoIterator<Item = (S, ClassLabel)>,
        S: Into<String>,
    {
        let lines = records
            .into_iter()
            .enumerate()
            .map(|(id, (raw, label))| {
                let raw = raw.into();
                CorpusLine {
                    id,
                    tokens: normalizer.normalize(&raw),
                    raw,
                    label,
                }
            })
            .collect();
        LabeledCorpus {
            name: name.into(),
            lines,
        }
    }

    /// Wraps pre-tokenized lines. Ids must be unique.
    pub fn from_lines(name: impl Into<String>, lines: Vec<CorpusLine>) -> Result<Self> {
        let mut ids = std::collections::HashSet::new();
        if let Some(dup) = lines.iter().find(|l| !ids.insert(l.id)) {
            return Err(Error::InvalidParameter(format!(
                "duplicate line id {}",
                dup.id
            )));
        }
        Ok(LabeledCorpus {
            name: name.into(),
            lines,
        })
    }

    pub fn lines(&self) -> &[CorpusLine] {
        &self.lines
    }

    pub fn lines_of(&self, class: ClassLabel) -> impl Iterator<Item = &CorpusLine> {
        self.lines.iter().filter(move |l| l.label == class)
    }

    /// Line counts indexed by [`ClassLabel::index`].
    pub fn class_sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for line in &self.lines {
            sizes[line.label.index()] += 1;
        }
        sizes
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub source: String,
    pub lines: usize,
    pub lines_per_class: BTreeMap<ClassLabel, usize>,
    /// Always empty on success: an unmapped label aborts ingestion.
    pub unmapped_labels: Vec<String>,
}

impl CorpusReport {
    pub fn for_corpus(source: impl Into<String>, corpus: &LabeledCorpus) -> Self {
        let sizes = corpus.class_sizes();
        CorpusReport {
            source: source.into(),
            lines: corpus.len(),
            lines_per_class: ClassLabel::ALL
                .iter()
                .map(|c| (*c, sizes[c.index()]))
                .collect(),
            unmapped_labels: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_label_parsing() {
        assert_eq!(
            "Relative-Hate".parse::<ClassLabel>().unwrap(),
            ClassLabel::RelativeHate
        );
        assert_eq!("no_hate".parse::<ClassLabel>().unwrap(), ClassLabel::NoHate);
        assert!("spam".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn term_list_dedups_after_normalization() {
        let n = Normalizer::default();
        let (list, report) = TermList::from_raw("t", ["f*ggot", "F*ggot ", "white tr*sh"], &n);
        let keys: Vec<_> = list.entries().iter().map(|t| t.key()).collect();
        assert_eq!(keys, ["f*ggot", "white tr*sh"]);
        assert_eq!(
            report.dropped_duplicates,
            [("F*ggot".to_string(), "f*ggot".to_string())]
        );
    }

    #[test]
    fn stop_word_only_terms_are_dropped() {
        let n = Normalizer::default();
        let (list, report) = TermList::from_raw("t", ["the", "of the", "son of a b*tch", ""], &n);
        assert_eq!(list.len(), 1);
        assert_eq!(report.dropped_empty, ["the", "of the", ""]);
    }

    #[test]
    fn duplicate_line_ids_rejected() {
        let line = CorpusLine {
            id: 3,
            raw: String::new(),
            tokens: vec![],
            label: ClassLabel::Hate,
        };
        assert!(LabeledCorpus::from_lines("c", vec![line.clone(), line]).is_err());
    }
}
