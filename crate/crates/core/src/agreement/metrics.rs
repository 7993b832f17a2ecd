//! Per-term severity metrics.
//!
//! Hatefulness is a presence bit for the positive classes. Relativeness
//! measures how concentrated a term's lines are in the positive classes
//! versus the no-hate class. Offensiveness combines the two with a harmonic
//! (or geometric) mean. `None` stands for an undefined value (0/0) and is
//! rendered as `NaN` in reports.

use serde::{Deserialize, Serialize};

use super::stats::TermClassStats;
use crate::corpus::ClassLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricCase {
    HateOnly,
    HatePlusRelative,
}

impl MetricCase {
    pub const ALL: [MetricCase; 2] = [MetricCase::HateOnly, MetricCase::HatePlusRelative];

    pub fn positive_classes(self) -> &'static [ClassLabel] {
        match self {
            MetricCase::HateOnly => &[ClassLabel::Hate],
            MetricCase::HatePlusRelative => &[ClassLabel::Hate, ClassLabel::RelativeHate],
        }
    }

    pub fn index(self) -> usize {
        match self {
            MetricCase::HateOnly => 0,
            MetricCase::HatePlusRelative => 1,
        }
    }

    /// Short display name used in severe list names and report headers.
    pub fn label(self) -> &'static str {
        match self {
            MetricCase::HateOnly => "Hate",
            MetricCase::HatePlusRelative => "Hate+Relative",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RelativenessMode {
    /// `p / (p + n)` over line counts; `n` is the no-hate class only.
    #[default]
    RatioBounded,
    /// Frequency ratio: hate over (relative-hate + no-hate) for the hate-only
    /// case, hate + relative-hate over no-hate for the combined case.
    Prose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Mean {
    #[default]
    Harmonic,
    Geometric,
}

pub fn hatefulness(stats: &TermClassStats, case: MetricCase) -> u8 {
    u8::from(positive_lines(stats, case) > 0)
}

pub(crate) fn positive_lines(stats: &TermClassStats, case: MetricCase) -> usize {
    case.positive_classes()
        .iter()
        .map(|c| stats.class(*c).line_count)
        .sum()
}

pub(crate) fn negative_lines(stats: &TermClassStats) -> usize {
    stats.class(ClassLabel::NoHate).line_count
}

pub fn relativeness(
    stats: &TermClassStats,
    case: MetricCase,
    mode: RelativenessMode,
) -> Option<f64> {
    match mode {
        RelativenessMode::RatioBounded => {
            ratio_bounded(positive_lines(stats, case), negative_lines(stats))
        }
        RelativenessMode::Prose => {
            let freq = |c: ClassLabel| stats.class(c).freq;
            let (num, den) = match case {
                MetricCase::HateOnly => (
                    freq(ClassLabel::Hate),
                    freq(ClassLabel::RelativeHate) + freq(ClassLabel::NoHate),
                ),
                MetricCase::HatePlusRelative => (
                    freq(ClassLabel::Hate) + freq(ClassLabel::RelativeHate),
                    freq(ClassLabel::NoHate),
                ),
            };
            match (num, den) {
                (0, 0) => None,
                (_, 0) => Some(f64::INFINITY),
                _ => Some(num as f64 / den as f64),
            }
        }
    }
}

/// `positive / (positive + negative)`, undefined when both are zero.
pub fn ratio_bounded(positive: usize, negative: usize) -> Option<f64> {
    let total = positive + negative;
    (total > 0).then(|| positive as f64 / total as f64)
}

/// Harmonic: `2hr / (h + r)`, undefined when `h + r = 0`. Geometric: `sqrt(hr)`.
/// Both are undefined when `r` is undefined or not finite.
pub fn offensiveness(h: u8, r: Option<f64>, mean: Mean) -> Option<f64> {
    let r = r.filter(|r| r.is_finite())?;
    let h = f64::from(h);
    match mean {
        Mean::Harmonic => (h + r > 0.0).then(|| 2.0 * h * r / (h + r)),
        Mean::Geometric => Some((h * r).sqrt()),
    }
}
