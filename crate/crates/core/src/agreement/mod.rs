//! Term severity against a labeled corpus: per-list (intra) and merged
//! multi-list (inter) agreement tables, severe list generation and the
//! per-class summary of how many terms each line carries.

pub mod metrics;
pub mod stats;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::corpus::{lines_by_term_count, ClassLabel, LabeledCorpus, NormalizedTerm, TermList};

pub use metrics::{
    hatefulness, offensiveness, ratio_bounded, relativeness, Mean, MetricCase, RelativenessMode,
};
pub use stats::{
    outer_join, term_class_stats, top_terms, ClassCounts, JoinValue, OuterJoinRow, OuterJoinTable,
    StatsTable, TermClassStats,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct AgreementConfig {
    pub relativeness_mode: RelativenessMode,
    pub mean: Mean,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseMetrics {
    pub case: MetricCase,
    pub positive_lines: usize,
    pub negative_lines: usize,
    pub positive_class_size: usize,
    pub negative_class_size: usize,
    pub hatefulness: u8,
    pub relativeness: Option<f64>,
}

impl CaseMetrics {
    pub fn compute(stats: &TermClassStats, case: MetricCase, mode: RelativenessMode) -> Self {
        CaseMetrics {
            case,
            positive_lines: metrics::positive_lines(stats, case),
            negative_lines: metrics::negative_lines(stats),
            positive_class_size: case
                .positive_classes()
                .iter()
                .map(|c| stats.class(*c).class_size)
                .sum(),
            negative_class_size: stats.class(ClassLabel::NoHate).class_size,
            hatefulness: hatefulness(stats, case),
            relativeness: relativeness(stats, case, mode),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntraAgreementRecord {
    pub term: NormalizedTerm,
    /// Indexed by [`MetricCase::index`].
    pub cases: [CaseMetrics; 2],
}

impl IntraAgreementRecord {
    pub fn case(&self, case: MetricCase) -> &CaseMetrics {
        &self.cases[case.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterCaseMetrics {
    #[serde(flatten)]
    pub metrics: CaseMetrics,
    pub offensiveness: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterAgreementRecord {
    pub term: NormalizedTerm,
    pub cases: [InterCaseMetrics; 2],
    /// Names of the input lists containing the term.
    pub membership: BTreeSet<String>,
}

impl InterAgreementRecord {
    pub fn case(&self, case: MetricCase) -> &InterCaseMetrics {
        &self.cases[case.index()]
    }

    pub fn offensiveness(&self, case: MetricCase) -> Option<f64> {
        self.case(case).offensiveness
    }
}

fn case_pair(stats: &TermClassStats, mode: RelativenessMode) -> [CaseMetrics; 2] {
    MetricCase::ALL.map(|case| CaseMetrics::compute(stats, case, mode))
}

pub fn intra_agreement(
    corpus: &LabeledCorpus,
    list: &TermList,
    config: &AgreementConfig,
) -> Vec<IntraAgreementRecord> {
    intra_from_stats(&term_class_stats(corpus, list), config)
}

pub fn intra_from_stats(stats: &StatsTable, config: &AgreementConfig) -> Vec<IntraAgreementRecord> {
    stats
        .rows
        .iter()
        .map(|row| IntraAgreementRecord {
            term: row.term.clone(),
            cases: case_pair(row, config.relativeness_mode),
        })
        .collect()
}

/// Union of `lists` (first raw form wins) with each term's list membership.
pub fn merge_lists(
    name: &str,
    lists: &[TermList],
) -> (TermList, HashMap<Vec<String>, BTreeSet<String>>) {
    let mut membership: HashMap<Vec<String>, BTreeSet<String>> = HashMap::new();
    let mut union = Vec::new();
    for list in lists {
        for term in list.entries() {
            let members = membership.entry(term.tokens.clone()).or_insert_with(|| {
                union.push(term.clone());
                BTreeSet::new()
            });
            members.insert(list.name.clone());
        }
    }
    (TermList::from_terms(name, union), membership)
}

/// Metrics are computed once per distinct term against the merged list, so
/// nested terms from different lists resolve by the same longest-match rule.
pub fn inter_agreement(
    corpus: &LabeledCorpus,
    lists: &[TermList],
    config: &AgreementConfig,
) -> Vec<InterAgreementRecord> {
    let (union, membership) = merge_lists("inter-agreement", lists);
    let stats = term_class_stats(corpus, &union);
    stats
        .rows
        .iter()
        .map(|row| {
            let cases = case_pair(row, config.relativeness_mode).map(|m| InterCaseMetrics {
                metrics: m,
                offensiveness: offensiveness(m.hatefulness, m.relativeness, config.mean),
            });
            InterAgreementRecord {
                term: row.term.clone(),
                cases,
                membership: membership[&row.term.tokens].clone(),
            }
        })
        .collect()
}

pub fn severe_list_name(case: MetricCase, min_offense: f64) -> String {
    format!("Offensiveness({})({})", case.label(), min_offense)
}

/// Terms whose offensiveness for `case` is defined and strictly above `min_offense`.
pub fn severe_list(
    records: &[InterAgreementRecord],
    case: MetricCase,
    min_offense: f64,
) -> TermList {
    TermList::from_terms(
        severe_list_name(case, min_offense),
        records
            .iter()
            .filter(|r| r.offensiveness(case).is_some_and(|o| o > min_offense))
            .map(|r| r.term.clone()),
    )
}

/// The merged list of every term that occurs in the corpus.
pub fn inter_agreement_list(name: impl Into<String>, records: &[InterAgreementRecord]) -> TermList {
    TermList::from_terms(name, records.iter().map(|r| r.term.clone()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub corpus: String,
    pub class: ClassLabel,
    pub list: String,
    /// Term occurrences per line.
    pub n: usize,
    pub entries: usize,
    pub total_lines: usize,
    pub percent: f64,
}

/// For every corpus, non-empty class and list: how many lines carry exactly `n` terms.
pub fn summary_n_hate_terms(corpora: &[LabeledCorpus], lists: &[TermList]) -> Vec<SummaryRow> {
    let mut rows = Vec::new();
    for corpus in corpora {
        let sizes = corpus.class_sizes();
        for class in ClassLabel::ALL {
            let total = sizes[class.index()];
            if total == 0 {
                continue;
            }
            for list in lists {
                let histogram = lines_by_term_count(corpus, list, class);
                rows.extend(histogram.buckets.iter().map(|(n, bucket)| SummaryRow {
                    corpus: corpus.name.clone(),
                    class,
                    list: list.name.clone(),
                    n: *n,
                    entries: bucket.lines,
                    total_lines: total,
                    percent: 100.0 * bucket.lines as f64 / total as f64,
                }));
            }
        }
    }
    rows
}

/// Records sharing a `(corpus, class, list)` grouped for percentage checks.
pub fn summary_groups(
    rows: &[SummaryRow],
) -> BTreeMap<(String, ClassLabel, String), Vec<&SummaryRow>> {
    let mut groups: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for r in rows {
        groups
            .entry((r.corpus.clone(), r.class, r.list.clone()))
            .or_default()
            .push(r);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Normalizer;

    // Six lines, hand-counted:
    //   hate:          "tr*sh a", "white tr*sh", "tr*sh"
    //   relative_hate: "tr*sh"
    //   no_hate:       "tr*sh b", "eurotr*sh"
    fn fixture() -> (LabeledCorpus, Vec<TermList>) {
        let n = Normalizer::default();
        let corpus = LabeledCorpus::from_records(
            "six",
            [
                ("tr*sh a", ClassLabel::Hate),
                ("white tr*sh", ClassLabel::Hate),
                ("tr*sh", ClassLabel::Hate),
                ("tr*sh", ClassLabel::RelativeHate),
                ("tr*sh b", ClassLabel::NoHate),
                ("eurotr*sh", ClassLabel::NoHate),
            ],
            &n,
        );
        let (a, _) = TermList::from_raw("A", ["tr*sh", "eurotr*sh", "missing"], &n);
        let (b, _) = TermList::from_raw("B", ["white tr*sh", "tr*sh"], &n);
        (corpus, vec![a, b])
    }

    #[test]
    fn intra_matches_hand_counts() {
        let (corpus, lists) = fixture();
        let records = intra_agreement(&corpus, &lists[0], &AgreementConfig::default());
        assert_eq!(records.len(), 2);
        // list A alone has no "white tr*sh", so that line counts for tr*sh
        let trash = records[0].case(MetricCase::HateOnly);
        assert_eq!((trash.positive_lines, trash.negative_lines), (3, 1));
        assert_eq!(trash.relativeness, Some(0.75));
        let both = records[0].case(MetricCase::HatePlusRelative);
        assert_eq!(both.relativeness, Some(0.8));
        assert_eq!(both.positive_class_size, 4);

        let euro = records[1].case(MetricCase::HateOnly);
        assert_eq!(euro.hatefulness, 0);
        assert_eq!(euro.relativeness, Some(0.0));
    }

    #[test]
    fn inter_merges_membership_and_uses_longest_match() {
        let (corpus, lists) = fixture();
        let records = inter_agreement(&corpus, &lists, &AgreementConfig::default());
        let by_key: HashMap<_, _> = records.iter().map(|r| (r.term.key(), r)).collect();
        let trash = by_key["tr*sh"];
        assert_eq!(
            trash.membership,
            BTreeSet::from(["A".to_string(), "B".to_string()])
        );
        assert_eq!(trash.case(MetricCase::HateOnly).metrics.positive_lines, 2);
        let white = by_key["white tr*sh"];
        assert_eq!(white.membership.len(), 1);
        assert_eq!(white.offensiveness(MetricCase::HateOnly), Some(1.0));
        // eurotr*sh: h = 0, r = 0 -> undefined
        assert_eq!(
            by_key["eurotr*sh"].offensiveness(MetricCase::HateOnly),
            None
        );
        assert!(!by_key.contains_key("missing"));
    }

    #[test]
    fn single_list_inter_equals_intra() {
        let (corpus, lists) = fixture();
        let cfg = AgreementConfig::default();
        let intra = intra_agreement(&corpus, &lists[1], &cfg);
        let inter = inter_agreement(&corpus, &lists[1..], &cfg);
        assert_eq!(intra.len(), inter.len());
        for (a, b) in intra.iter().zip(&inter) {
            assert_eq!(a.term, b.term);
            assert_eq!(a.cases, b.cases.map(|c| c.metrics));
            assert_eq!(b.membership, BTreeSet::from(["B".to_string()]));
        }
    }

    #[test]
    fn severe_list_is_strict_and_skips_undefined() {
        let (corpus, lists) = fixture();
        let records = inter_agreement(&corpus, &lists, &AgreementConfig::default());
        let s = severe_list(&records, MetricCase::HateOnly, 0.5);
        assert_eq!(s.name, "Offensiveness(Hate)(0.5)");
        let keys: Vec<_> = s.entries().iter().map(|t| t.key()).collect();
        assert_eq!(keys, ["tr*sh", "white tr*sh"]);
        assert!(severe_list(&records, MetricCase::HateOnly, 1.0).is_empty());
    }

    #[test]
    fn summary_percentages_cover_each_class() {
        let (corpus, lists) = fixture();
        let rows = summary_n_hate_terms(std::slice::from_ref(&corpus), &lists);
        for (_, group) in summary_groups(&rows) {
            let total: f64 = group.iter().map(|r| r.percent).sum();
            assert!((total - 100.0).abs() < 1e-9);
        }
        let never = TermList::from_terms(
            "none",
            [NormalizedTerm {
                raw: "zz".into(),
                tokens: vec!["zz".into()],
            }],
        );
        let rows = summary_n_hate_terms(&[corpus], &[never]);
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.n == 0 && r.percent == 100.0));
    }
}
