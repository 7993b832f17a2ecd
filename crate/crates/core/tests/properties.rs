use std::collections::BTreeSet;

use hatelex::agreement::{
    inter_agreement, offensiveness, ratio_bounded, severe_list, AgreementConfig, Mean, MetricCase,
};
use hatelex::corpus::{
    lines_by_term_count, match_terms, normalize_text, ClassLabel, LabeledCorpus,
    NormalizationConfig, Normalizer, TermList,
};
use hatelex::evaluation::{confusion, enumerate_tasks, evaluate, BinaryTask};
use proptest::prelude::*;

const WORDS: [&str; 8] = [
    "sp*c", "tr*sh", "white", "dog", "cat", "b*tch", "red", "boss",
];

fn class_of(i: u8) -> ClassLabel {
    ClassLabel::ALL[i as usize % 3]
}

fn arb_lines() -> impl Strategy<Value = Vec<(String, ClassLabel)>> {
    prop::collection::vec(
        (
            prop::collection::vec(prop::sample::select(&WORDS[..]), 0..7),
            0u8..3,
        ),
        1..25,
    )
    .prop_map(|v| {
        v.into_iter()
            .map(|(w, c)| (w.join(" "), class_of(c)))
            .collect()
    })
}

fn arb_terms() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(
        prop::collection::vec(prop::sample::select(&WORDS[..]), 1..3),
        1..6,
    )
    .prop_map(|v| v.into_iter().map(|w| w.join(" ")).collect())
}

fn corpus(lines: &[(String, ClassLabel)]) -> LabeledCorpus {
    LabeledCorpus::from_records("c", lines.iter().cloned(), &Normalizer::default())
}

fn list(name: &str, terms: &[String]) -> TermList {
    TermList::from_raw(name, terms, &Normalizer::default()).0
}

proptest! {
    #[test]
    fn matching_ignores_list_order(lines in arb_lines(), mut terms in arb_terms()) {
        let c = corpus(&lines);
        let a = list("a", &terms);
        terms.reverse();
        let b = list("b", &terms);
        for line in c.lines() {
            let spans = |l: &TermList| -> BTreeSet<(String, usize, usize)> {
                match_terms(line, l).matches.into_iter().map(|m| (l.entries()[m.term].key(), m.start, m.len)).collect()
            };
            prop_assert_eq!(spans(&a), spans(&b));
        }
    }

    #[test]
    fn matches_never_overlap(lines in arb_lines(), terms in arb_terms()) {
        let c = corpus(&lines);
        let l = list("l", &terms);
        for line in c.lines() {
            let mut ms = match_terms(line, &l).matches;
            ms.sort_by_key(|m| m.start);
            for w in ms.windows(2) {
                prop_assert!(w[0].start + w[0].len <= w[1].start);
            }
        }
    }

    #[test]
    fn histogram_partitions_each_class(lines in arb_lines(), terms in arb_terms()) {
        let c = corpus(&lines);
        let l = list("l", &terms);
        for class in ClassLabel::ALL {
            let h = lines_by_term_count(&c, &l, class);
            prop_assert_eq!(h.total_lines(), c.class_sizes()[class.index()]);
            let mut seen = BTreeSet::new();
            for (n, b) in &h.buckets {
                prop_assert_eq!(b.lines, b.line_ids.len());
                for id in &b.line_ids {
                    prop_assert!(seen.insert(*id));
                    let line = &c.lines()[*id];
                    prop_assert_eq!(line.label, class);
                    prop_assert_eq!(match_terms(line, &l).matches.len(), *n);
                }
            }
        }
    }

    #[test]
    fn severe_lists_shrink_with_threshold(lines in arb_lines(), terms in arb_terms(), t1 in 0.0f64..1.0, t2 in 0.0f64..1.0) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let c = corpus(&lines);
        let records = inter_agreement(&c, &[list("l", &terms)], &AgreementConfig::default());
        for case in MetricCase::ALL {
            let keys = |t: f64| -> BTreeSet<String> { severe_list(&records, case, t).entries().iter().map(|e| e.key()).collect() };
            prop_assert!(keys(hi).is_subset(&keys(lo)));
            for k in keys(lo) {
                let r = records.iter().find(|r| r.term.key() == k).unwrap();
                prop_assert!(r.offensiveness(case).is_some_and(|o| o > lo));
            }
        }
    }

    #[test]
    fn percentage_cells_sum_to_one_hundred(lines in arb_lines(), terms in arb_terms()) {
        let c = corpus(&lines);
        let l = list("l", &terms);
        for task in enumerate_tasks(&c) {
            let m = confusion(&c, &l, &task).unwrap();
            prop_assert!((m.tp() + m.fn_() - 100.0).abs() < 1e-9);
            prop_assert!((m.tn() + m.fp() - 100.0).abs() < 1e-9);
            if let Some(r) = m.recall() {
                prop_assert!((r - m.tp() / 100.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn duplicating_negatives_changes_nothing(lines in arb_lines(), terms in arb_terms(), k in 2usize..6) {
        let c = corpus(&lines);
        let l = list("l", &terms);
        for task in enumerate_tasks(&c) {
            let mut grown = lines.clone();
            for line in &lines {
                if task.negative.contains(&line.1) {
                    grown.extend(std::iter::repeat_n(line.clone(), k - 1));
                }
            }
            let a = evaluate(&c, &l, &task).unwrap();
            let b = evaluate(&corpus(&grown), &l, &task).unwrap();
            for (x, y) in [(a.accuracy, b.accuracy), (a.precision, b.precision), (a.recall, b.recall), (a.f_measure, b.f_measure)] {
                prop_assert_eq!(x.is_some(), y.is_some());
                if let (Some(x), Some(y)) = (x, y) {
                    prop_assert!((x - y).abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn positive_only_terms_never_lower_recall(lines in arb_lines(), terms in arb_terms()) {
        let task = BinaryTask::new(&[ClassLabel::Hate], &[ClassLabel::NoHate]).unwrap();
        let mut lines = lines;
        lines.push(("zzfoo marker".into(), ClassLabel::Hate));
        lines.push(("plain".into(), ClassLabel::NoHate));
        let c = corpus(&lines);
        let base = evaluate(&c, &list("l", &terms), &task).unwrap();
        let mut more = terms.clone();
        more.push("zzfoo".into());
        let grown = evaluate(&c, &list("l", &more), &task).unwrap();
        prop_assert!(grown.recall.unwrap() >= base.recall.unwrap());
        let mut noisy = terms.clone();
        noisy.push("plain".into());
        let noisy = evaluate(&c, &list("l", &noisy), &task).unwrap();
        match (base.precision, noisy.precision) {
            (Some(b), Some(n)) => prop_assert!(n <= b + 1e-12),
            (None, _) => {}
            (Some(_), None) => prop_assert!(false),
        }
    }

    #[test]
    fn fact_one_and_two(lines in arb_lines(), terms in arb_terms()) {
        let c = corpus(&lines);
        let l = list("l", &terms);
        for task in enumerate_tasks(&c) {
            let m = confusion(&c, &l, &task).unwrap();
            let flagged = |line: &hatelex::corpus::CorpusLine| !match_terms(line, &l).is_empty();
            let pos: Vec<_> = c.lines().iter().filter(|x| task.positive.contains(&x.label)).collect();
            let neg: Vec<_> = c.lines().iter().filter(|x| task.negative.contains(&x.label)).collect();
            prop_assert_eq!(m.fn_() == 0.0, pos.iter().all(|x| flagged(x)));
            prop_assert_eq!(m.fp() == 0.0, neg.iter().all(|x| !flagged(x)));
        }
    }

    #[test]
    fn bounded_ratio_and_offensiveness_stay_in_unit_interval(p in 0usize..1000, n in 0usize..1000) {
        match ratio_bounded(p, n) {
            None => prop_assert_eq!(p + n, 0),
            Some(r) => {
                prop_assert!((0.0..=1.0).contains(&r));
                for mean in [Mean::Harmonic, Mean::Geometric] {
                    if let Some(o) = offensiveness(u8::from(p > 0), Some(r), mean) {
                        prop_assert!((0.0..=1.0).contains(&o));
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_is_idempotent(words in prop::collection::vec("[A-Za-z*']{1,8}", 0..8)) {
        let cfg = NormalizationConfig::default();
        let once = normalize_text(&words.join(" "), &cfg).unwrap();
        let twice = normalize_text(&once.join(" "), &cfg).unwrap();
        prop_assert_eq!(once, twice);
    }
}
