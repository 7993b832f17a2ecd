use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ClassLabel, CorpusLine, LabeledCorpus, TermList};

/// Lookup structure for contiguous token n-gram matching against a list.
#[derive(Debug, Clone)]
pub struct TermIndex {
    by_tokens: HashMap<Vec<String>, usize>,
    max_len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TermMatch {
    /// Index into the list's entries.
    pub term: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    pub line_id: usize,
    /// Sorted by start position.
    pub matches: Vec<TermMatch>,
}

impl MatchResult {
    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    /// Occurrences of `term` in the line.
    pub fn count_of(&self, term: usize) -> usize {
        self.matches.iter().filter(|m| m.term == term).count()
    }
}

impl TermIndex {
    pub fn new(list: &TermList) -> Self {
        let mut by_tokens = HashMap::with_capacity(list.len());
        let mut max_len = 0;
        for (i, term) in list.entries().iter().enumerate() {
            max_len = max_len.max(term.tokens.len());
            by_tokens.entry(term.tokens.clone()).or_insert(i);
        }
        TermIndex { by_tokens, max_len }
    }

    /// Non-overlapping matches, chosen longest first and leftmost among equal lengths.
    pub fn find(&self, tokens: &[String]) -> Vec<TermMatch> {
        let mut candidates = Vec::new();
        for start in 0..tokens.len() {
            let longest = self.max_len.min(tokens.len() - start);
            for len in 1..=longest {
                if let Some(&term) = self.by_tokens.get(&tokens[start..start + len]) {
                    candidates.push(TermMatch { term, start, len });
                }
            }
        }
        if candidates.len() <= 1 {
            return candidates;
        }
        candidates.sort_by(|a, b| b.len.cmp(&a.len).then(a.start.cmp(&b.start)));
        let mut taken = vec![false; tokens.len()];
        let mut accepted = Vec::new();
        for c in candidates {
            let span = &mut taken[c.start..c.start + c.len];
            if span.iter().any(|&t| t) {
                continue;
            }
            span.iter_mut().for_each(|t| *t = true);
            accepted.push(c);
        }
        accepted.sort_by_key(|m| m.start);
        accepted
    }

    /// Matches of every corpus line, in line order.
    pub fn match_corpus(&self, corpus: &LabeledCorpus) -> Vec<MatchResult> {
        corpus
            .lines()
            .par_iter()
            .map(|l| self.match_line(l))
            .collect()
    }

    pub fn match_line(&self, line: &CorpusLine) -> MatchResult {
        MatchResult {
            line_id: line.id,
            matches: self.find(&line.tokens),
        }
    }
}

/// Matches one line. Build a [`TermIndex`] once when matching many lines.
pub fn match_terms(line: &CorpusLine, list: &TermList) -> MatchResult {
    TermIndex::new(list).match_line(line)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBucket {
    pub lines: usize,
    pub line_ids: Vec<usize>,
}

/// Lines of one class keyed by how many term occurrences they contain.
/// Only observed counts appear, so keys may skip values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub class: Option<ClassLabel>,
    pub buckets: BTreeMap<usize, HistogramBucket>,
}

impl Histogram {
    pub fn total_lines(&self) -> usize {
        self.buckets.values().map(|b| b.lines).sum()
    }

    pub fn max_count(&self) -> Option<usize> {
        self.buckets.keys().next_back().copied()
    }
}

pub fn lines_by_term_count(
    corpus: &LabeledCorpus,
    list: &TermList,
    class: ClassLabel,
) -> Histogram {
    let index = TermIndex::new(list);
    let mut histogram = Histogram {
        class: Some(class),
        buckets: BTreeMap::new(),
    };
    for line in corpus.lines_of(class) {
        let n = index.find(&line.tokens).len();
        let bucket = histogram.buckets.entry(n).or_default();
        bucket.lines += 1;
        bucket.line_ids.push(line.id);
    }
    histogram
}
