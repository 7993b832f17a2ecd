use serde::{Deserialize, Serialize};

use crate::corpus::{ClassLabel, LabeledCorpus, MatchResult, NormalizedTerm, TermIndex, TermList};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    /// Occurrences of the term.
    pub freq: usize,
    /// Lines containing the term at least once.
    pub line_count: usize,
    pub class_size: usize,
}

impl ClassCounts {
    /// `100 * line_count / class_size`; `None` for an empty class.
    pub fn percent_lines(&self) -> Option<f64> {
        (self.class_size > 0).then(|| 100.0 * self.line_count as f64 / self.class_size as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermClassStats {
    pub term: NormalizedTerm,
    /// Indexed by [`ClassLabel::index`].
    pub classes: [ClassCounts; 3],
}

impl TermClassStats {
    pub fn class(&self, class: ClassLabel) -> &ClassCounts {
        &self.classes[class.index()]
    }

    pub fn total_freq(&self) -> usize {
        self.classes.iter().map(|c| c.freq).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsTable {
    pub corpus: String,
    pub list: String,
    pub class_sizes: [usize; 3],
    /// Terms occurring at least once, in list order.
    pub rows: Vec<TermClassStats>,
    pub zero_frequency: Vec<NormalizedTerm>,
}

pub fn term_class_stats(corpus: &LabeledCorpus, list: &TermList) -> StatsTable {
    let matches = TermIndex::new(list).match_corpus(corpus);
    stats_from_matches(corpus, list, &matches)
}

pub(crate) fn stats_from_matches(
    corpus: &LabeledCorpus,
    list: &TermList,
    matches: &[MatchResult],
) -> StatsTable {
    let class_sizes = corpus.class_sizes();
    let mut counts = vec![[ClassCounts::default(); 3]; list.len()];
    let mut seen_in_line = Vec::new();
    for (line, result) in corpus.lines().iter().zip(matches) {
        let class = line.label.index();
        seen_in_line.clear();
        for m in &result.matches {
            let c = &mut counts[m.term][class];
            c.freq += 1;
            if !seen_in_line.contains(&m.term) {
                seen_in_line.push(m.term);
                c.line_count += 1;
            }
        }
    }

    let mut rows = Vec::new();
    let mut zero_frequency = Vec::new();
    for (term, mut classes) in list.entries().iter().zip(counts) {
        for (i, c) in classes.iter_mut().enumerate() {
            c.class_size = class_sizes[i];
        }
        if classes.iter().all(|c| c.freq == 0) {
            zero_frequency.push(term.clone());
        } else {
            rows.push(TermClassStats {
                term: term.clone(),
                classes,
            });
        }
    }
    StatsTable {
        corpus: corpus.name.clone(),
        list: list.name.clone(),
        class_sizes,
        rows,
        zero_frequency,
    }
}

/// The `k` most frequent terms of `class`, by frequency then term key.
pub fn top_terms(stats: &StatsTable, class: ClassLabel, k: usize) -> Vec<(String, usize)> {
    let mut ranked: Vec<(String, usize)> = stats
        .rows
        .iter()
        .map(|r| (r.term.key(), r.class(class).freq))
        .filter(|(_, f)| *f > 0)
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked.truncate(k);
    ranked
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinValue {
    Frequency,
    PercentLines,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OuterJoinRow {
    pub term: String,
    /// `None` where the term never occurs in that class.
    pub cells: [Option<f64>; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OuterJoinTable {
    pub value: JoinValue,
    pub rows: Vec<OuterJoinRow>,
}

pub fn outer_join(stats: &StatsTable, value: JoinValue) -> OuterJoinTable {
    let rows = stats
        .rows
        .iter()
        .map(|r| OuterJoinRow {
            term: r.term.key(),
            cells: r.classes.map(|c| {
                if c.freq == 0 {
                    return None;
                }
                match value {
                    JoinValue::Frequency => Some(c.freq as f64),
                    JoinValue::PercentLines => c.percent_lines(),
                }
            }),
        })
        .collect();
    OuterJoinTable { value, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Normalizer;

    fn fixture() -> (LabeledCorpus, TermList) {
        let n = Normalizer::default();
        let corpus = LabeledCorpus::from_records(
            "c",
            [
                ("f*ck f*ck b*tch", ClassLabel::Hate),
                ("b*tch", ClassLabel::Hate),
                ("hello", ClassLabel::Hate),
                ("b*tch f*ck", ClassLabel::RelativeHate),
                ("b*tch", ClassLabel::NoHate),
                ("nothing", ClassLabel::NoHate),
            ],
            &n,
        );
        let (list, _) = TermList::from_raw("l", ["f*ck", "b*tch", "absent"], &n);
        (corpus, list)
    }

    #[test]
    fn frequencies_and_line_counts_differ() {
        let (corpus, list) = fixture();
        let t = term_class_stats(&corpus, &list);
        assert_eq!(t.class_sizes, [3, 1, 2]);
        let fck = &t.rows[0];
        assert_eq!(fck.class(ClassLabel::Hate).freq, 2);
        assert_eq!(fck.class(ClassLabel::Hate).line_count, 1);
        let b = &t.rows[1];
        assert_eq!(b.class(ClassLabel::Hate).line_count, 2);
        assert!((b.class(ClassLabel::Hate).percent_lines().unwrap() - 200.0 / 3.0).abs() < 1e-12);
        assert_eq!(t.zero_frequency.len(), 1);
        assert_eq!(t.zero_frequency[0].key(), "absent");
    }

    #[test]
    fn top_terms_ties_break_lexicographically() {
        let (corpus, list) = fixture();
        let t = term_class_stats(&corpus, &list);
        assert_eq!(
            top_terms(&t, ClassLabel::Hate, 5),
            [("b*tch".to_string(), 2), ("f*ck".to_string(), 2)]
        );
        assert_eq!(top_terms(&t, ClassLabel::Hate, 1).len(), 1);
    }

    #[test]
    fn outer_join_marks_missing_cells() {
        let (corpus, list) = fixture();
        let t = term_class_stats(&corpus, &list);
        let j = outer_join(&t, JoinValue::Frequency);
        assert_eq!(j.rows[0].cells, [Some(2.0), Some(1.0), None]);
        let p = outer_join(&t, JoinValue::PercentLines);
        assert_eq!(p.rows[1].cells[2], Some(50.0));
    }
}
