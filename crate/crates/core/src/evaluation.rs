//! Binary evaluation of a term list as a classifier: a line is flagged when
//! it contains at least one term. Confusion cells are percentages of their
//! own class (true positives and false negatives over the positive lines,
//! false positives and true negatives over the negative lines), so the
//! scores do not depend on how imbalanced the two sides are.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::agreement::{
    inter_agreement, severe_list, AgreementConfig, InterAgreementRecord, MetricCase,
};
use crate::corpus::{ClassLabel, LabeledCorpus, TermIndex, TermList};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryTask {
    pub positive: Vec<ClassLabel>,
    pub negative: Vec<ClassLabel>,
}

impl BinaryTask {
    pub fn new(positive: &[ClassLabel], negative: &[ClassLabel]) -> Result<Self> {
        if positive.is_empty() || negative.is_empty() {
            return Err(Error::InvalidParameter(
                "task sides must be non-empty".into(),
            ));
        }
        if positive.iter().any(|c| negative.contains(c)) {
            return Err(Error::InvalidParameter(
                "task sides must be disjoint".into(),
            ));
        }
        let mut positive = positive.to_vec();
        let mut negative = negative.to_vec();
        positive.sort();
        positive.dedup();
        negative.sort();
        negative.dedup();
        Ok(BinaryTask { positive, negative })
    }

    /// The six binary-relevance cases over three classes.
    pub fn all_cases() -> Vec<BinaryTask> {
        use ClassLabel::*;
        [
            (&[Hate][..], &[NoHate][..]),
            (&[Hate], &[RelativeHate]),
            (&[Hate], &[RelativeHate, NoHate]),
            (&[Hate, RelativeHate], &[NoHate]),
            (&[RelativeHate], &[NoHate]),
            (&[NoHate], &[Hate, RelativeHate]),
        ]
        .into_iter()
        .map(|(p, n)| BinaryTask::new(p, n).expect("fixed cases are valid"))
        .collect()
    }

    pub fn classes(&self) -> impl Iterator<Item = ClassLabel> + '_ {
        self.positive.iter().chain(&self.negative).copied()
    }
}

impl fmt::Display for BinaryTask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[ClassLabel]| s.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("+");
        write!(f, "{} vs {}", side(&self.positive), side(&self.negative))
    }
}

impl std::str::FromStr for BinaryTask {
    type Err = Error;

    /// Parses the display form, e.g. `hate+relative_hate vs no_hate`.
    fn from_str(s: &str) -> Result<Self> {
        let (pos, neg) = s.split_once(" vs ").ok_or_else(|| {
            Error::InvalidParameter(format!("task `{s}` must look like `hate vs no_hate`"))
        })?;
        let side = |x: &str| {
            x.split('+')
                .map(str::parse)
                .collect::<Result<Vec<ClassLabel>>>()
        };
        BinaryTask::new(&side(pos)?, &side(neg)?)
    }
}

/// The six cases minus any that mention a class with no lines in `corpus`.
pub fn enumerate_tasks(corpus: &LabeledCorpus) -> Vec<BinaryTask> {
    let sizes = corpus.class_sizes();
    BinaryTask::all_cases()
        .into_iter()
        .filter(|t| t.classes().all(|c| sizes[c.index()] > 0))
        .collect()
}

/// Confusion matrix kept as exact line counts; percentages derive from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PercentConfusionMatrix {
    pub positive_lines: usize,
    pub positive_flagged: usize,
    pub negative_lines: usize,
    pub negative_flagged: usize,
}

fn percent(count: usize, total: usize) -> f64 {
    100.0 * count as f64 / total as f64
}

fn ratio(num: u128, den: u128) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

impl PercentConfusionMatrix {
    pub fn tp(&self) -> f64 {
        percent(self.positive_flagged, self.positive_lines)
    }

    pub fn fn_(&self) -> f64 {
        percent(
            self.positive_lines - self.positive_flagged,
            self.positive_lines,
        )
    }

    pub fn fp(&self) -> f64 {
        percent(self.negative_flagged, self.negative_lines)
    }

    pub fn tn(&self) -> f64 {
        percent(
            self.negative_lines - self.negative_flagged,
            self.negative_lines,
        )
    }

    // The metrics below are the usual formulas applied to the percentage
    // cells, reduced to integer ratios so no rounding enters before the
    // final division.

    pub fn recall(&self) -> Option<f64> {
        ratio(self.positive_flagged as u128, self.positive_lines as u128)
    }

    pub fn precision(&self) -> Option<f64> {
        let tp = self.positive_flagged as u128 * self.negative_lines as u128;
        let fp = self.negative_flagged as u128 * self.positive_lines as u128;
        ratio(tp, tp + fp)
    }

    pub fn accuracy(&self) -> Option<f64> {
        let (pl, nl) = (self.positive_lines as u128, self.negative_lines as u128);
        let tp = self.positive_flagged as u128 * nl;
        let tn = (nl - self.negative_flagged as u128) * pl;
        ratio(tp + tn, 2 * pl * nl)
    }

    pub fn f_measure(&self) -> Option<f64> {
        // 2PR/(P+R) with P = a/(a+b), R = a/c where a = tp*nl, b = fp*pl, c = pl*nl
        let (pl, nl) = (self.positive_lines as u128, self.negative_lines as u128);
        let a = self.positive_flagged as u128 * nl;
        let b = self.negative_flagged as u128 * pl;
        let c = pl * nl;
        ratio(2 * a, (a + b) + c).filter(|_| a + b > 0 && c > 0)
    }
}

pub(crate) fn flagged_lines(corpus: &LabeledCorpus, list: &TermList) -> Vec<bool> {
    TermIndex::new(list)
        .match_corpus(corpus)
        .into_iter()
        .map(|m| !m.is_empty())
        .collect()
}

fn confusion_from_flags(
    corpus: &LabeledCorpus,
    flags: &[bool],
    task: &BinaryTask,
) -> Result<PercentConfusionMatrix> {
    let mut m = PercentConfusionMatrix {
        positive_lines: 0,
        positive_flagged: 0,
        negative_lines: 0,
        negative_flagged: 0,
    };
    for (line, &flagged) in corpus.lines().iter().zip(flags) {
        if task.positive.contains(&line.label) {
            m.positive_lines += 1;
            m.positive_flagged += usize::from(flagged);
        } else if task.negative.contains(&line.label) {
            m.negative_lines += 1;
            m.negative_flagged += usize::from(flagged);
        }
    }
    if m.positive_lines == 0 || m.negative_lines == 0 {
        return Err(Error::EmptyTaskSide(format!("{task} on {}", corpus.name)));
    }
    Ok(m)
}

pub fn confusion(
    corpus: &LabeledCorpus,
    list: &TermList,
    task: &BinaryTask,
) -> Result<PercentConfusionMatrix> {
    confusion_from_flags(corpus, &flagged_lines(corpus, list), task)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub list: String,
    pub list_size: usize,
    pub task: BinaryTask,
    pub matrix: PercentConfusionMatrix,
    pub accuracy: Option<f64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f_measure: Option<f64>,
    /// Wall-clock time of the evaluation, informational only.
    pub compute_time_ms: f64,
}

impl EvalReport {
    fn from_matrix(
        list: &TermList,
        task: &BinaryTask,
        matrix: PercentConfusionMatrix,
        started: Instant,
    ) -> Self {
        EvalReport {
            list: list.name.clone(),
            list_size: list.len(),
            task: task.clone(),
            accuracy: matrix.accuracy(),
            precision: matrix.precision(),
            recall: matrix.recall(),
            f_measure: matrix.f_measure(),
            matrix,
            compute_time_ms: started.elapsed().as_secs_f64() * 1000.0,
        }
    }
}

pub fn evaluate(corpus: &LabeledCorpus, list: &TermList, task: &BinaryTask) -> Result<EvalReport> {
    let started = Instant::now();
    let matrix = confusion(corpus, list, task)?;
    Ok(EvalReport::from_matrix(list, task, matrix, started))
}

/// Evaluates every list on every task, matching each list against the corpus once.
pub fn evaluate_all(
    corpus: &LabeledCorpus,
    lists: &[TermList],
    tasks: &[BinaryTask],
) -> Vec<Result<EvalReport>> {
    use rayon::prelude::*;
    lists
        .par_iter()
        .flat_map_iter(|list| {
            let started = Instant::now();
            let flags = flagged_lines(corpus, list);
            tasks
                .iter()
                .map(|task| {
                    let m = confusion_from_flags(corpus, &flags, task)?;
                    Ok(EvalReport::from_matrix(list, task, m, started))
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn desc_defined(a: Option<f64>, b: Option<f64>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match (a, b) {
        (Some(x), Some(y)) => y.total_cmp(&x),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

/// Sorts reports best-first: F-measure, then precision (both descending,
/// undefined last), then smaller list, then name.
pub fn sort_reports(reports: &mut [EvalReport]) {
    reports.sort_by(|a, b| {
        desc_defined(a.f_measure, b.f_measure)
            .then_with(|| desc_defined(a.precision, b.precision))
            .then_with(|| a.list_size.cmp(&b.list_size))
            .then_with(|| a.list.cmp(&b.list))
    });
}

pub fn rank_lists(
    corpus: &LabeledCorpus,
    lists: &[TermList],
    task: &BinaryTask,
) -> Result<Vec<EvalReport>> {
    let mut reports = evaluate_all(corpus, lists, std::slice::from_ref(task))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    sort_reports(&mut reports);
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub threshold: f64,
    pub list_size: usize,
    /// `Err` carries the reason a threshold could not be evaluated.
    pub report: std::result::Result<EvalReport, String>,
}

/// Builds a severe list per threshold from precomputed inter-agreement records and evaluates it.
pub fn sweep_records(
    corpus: &LabeledCorpus,
    records: &[InterAgreementRecord],
    task: &BinaryTask,
    case: MetricCase,
    thresholds: &[f64],
) -> Result<Vec<SweepRow>> {
    if let Some(t) = thresholds.iter().find(|t| !(0.0..=1.0).contains(*t)) {
        return Err(Error::InvalidParameter(format!(
            "threshold {t} outside [0, 1]"
        )));
    }
    Ok(thresholds
        .iter()
        .map(|&threshold| {
            let list = severe_list(records, case, threshold);
            let report = if list.is_empty() {
                Err("empty severe list".to_string())
            } else {
                evaluate(corpus, &list, task).map_err(|e| e.to_string())
            };
            SweepRow {
                threshold,
                list_size: list.len(),
                report,
            }
        })
        .collect())
}

pub fn sweep_min_offense(
    corpus: &LabeledCorpus,
    lists: &[TermList],
    task: &BinaryTask,
    case: MetricCase,
    thresholds: &[f64],
    config: &AgreementConfig,
) -> Result<Vec<SweepRow>> {
    let records = inter_agreement(corpus, lists, config);
    sweep_records(corpus, &records, task, case, thresholds)
}

/// `0, step, 2*step, ..., 1` with endpoints exact.
pub fn threshold_grid(step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "sweep step {step} outside (0, 1]"
        )));
    }
    let n = (1.0 / step).round() as usize;
    Ok((0..=n)
        .map(|i| ((i as f64 * step).min(1.0) * 1e9).round() / 1e9)
        .collect())
}
