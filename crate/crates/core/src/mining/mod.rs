//! Co-occurrence rule mining over sequence databases built from corpora,
//! and the cross-database stability filter.

mod database;
mod encoded;
mod ordered;
mod stable;
mod unordered;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use database::{build_rep_database, read_database, write_database, SequenceDatabase};
pub use stable::{stable_rules, RuleCell, StableHateRule, StableRuleSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MiningMode {
    /// All antecedent items occur before all consequent items.
    #[default]
    Ordered,
    /// Co-occurrence anywhere in the sequence.
    Unordered,
}

/// Confidence denominator for ordered rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Denominator {
    /// Sequences where the antecedent is complete before the final position.
    #[default]
    AntecedentQualified,
    /// Sequences containing the antecedent.
    ItemSupport,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RuleMiningConfig {
    /// Absolute count of supporting sequences.
    pub min_sup: usize,
    pub min_conf: f64,
    pub max_antecedent: usize,
    pub max_consequent: usize,
    pub denominator: Denominator,
}

impl Default for RuleMiningConfig {
    fn default() -> Self {
        RuleMiningConfig {
            min_sup: 1,
            min_conf: 0.0,
            max_antecedent: 4,
            max_consequent: 4,
            denominator: Denominator::AntecedentQualified,
        }
    }
}

impl RuleMiningConfig {
    pub fn new(min_sup: usize, min_conf: f64) -> Self {
        RuleMiningConfig {
            min_sup,
            min_conf,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_sup < 1 {
            return Err(Error::InvalidParameter("minSup must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.min_conf) {
            return Err(Error::InvalidParameter(format!(
                "minConf {} outside [0, 1]",
                self.min_conf
            )));
        }
        if self.max_antecedent < 1 || self.max_consequent < 1 {
            return Err(Error::InvalidParameter(
                "rule size caps must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Converts a relative support threshold to the absolute count for `db_len` sequences.
pub fn min_support_from_fraction(fraction: f64, db_len: usize) -> Result<usize> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "relative minSup {fraction} outside (0, 1]"
        )));
    }
    Ok(((fraction * db_len as f64).ceil() as usize).max(1))
}

/// Rule identity: canonical (sorted) antecedent and consequent item sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RuleKey {
    pub antecedent: Vec<String>,
    pub consequent: Vec<String>,
}

impl RuleKey {
    pub fn new<A, C, S>(antecedent: A, consequent: C) -> Self
    where
        A: IntoIterator<Item = S>,
        C: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let canon = |it: &mut dyn Iterator<Item = String>| {
            let mut v: Vec<String> = it.collect();
            v.sort();
            v.dedup();
            v
        };
        RuleKey {
            antecedent: canon(&mut antecedent.into_iter().map(Into::into)),
            consequent: canon(&mut consequent.into_iter().map(Into::into)),
        }
    }

    /// Sorted union of both sides.
    pub fn terms(&self) -> Vec<String> {
        let mut t: Vec<String> = self
            .antecedent
            .iter()
            .chain(&self.consequent)
            .cloned()
            .collect();
        t.sort();
        t.dedup();
        t
    }
}

impl fmt::Display for RuleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] -> [{}]",
            self.antecedent.join(" "),
            self.consequent.join(" ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HateRule {
    #[serde(flatten)]
    pub key: RuleKey,
    pub support: usize,
    pub confidence: f64,
    /// The confidence denominator.
    pub antecedent_count: usize,
}

/// Co-occurrence rules: support counts sequences containing every item of
/// both sides, confidence divides by sequences containing the antecedent.
pub fn mine_unordered_rules(
    db: &SequenceDatabase,
    config: &RuleMiningConfig,
) -> Result<Vec<HateRule>> {
    config.validate()?;
    let enc = encoded::Encoded::new(db);
    Ok(finish(&enc, unordered::mine(&enc, config)))
}

/// Sequential rules: a sequence supports `X -> Y` when every item of `X`
/// appears before every item of `Y` (first occurrences of `X` before last
/// occurrences of `Y`).
pub fn mine_ordered_rules(
    db: &SequenceDatabase,
    config: &RuleMiningConfig,
) -> Result<Vec<HateRule>> {
    config.validate()?;
    let enc = encoded::Encoded::new(db);
    Ok(finish(&enc, ordered::mine(&enc, config)))
}

pub fn mine_rules(
    db: &SequenceDatabase,
    config: &RuleMiningConfig,
    mode: MiningMode,
) -> Result<Vec<HateRule>> {
    match mode {
        MiningMode::Ordered => mine_ordered_rules(db, config),
        MiningMode::Unordered => mine_unordered_rules(db, config),
    }
}

/// Support, confidence and denominator of one rule on one database,
/// computed directly from the sequences. `None` if the antecedent never
/// qualifies.
pub fn rule_stats(
    db: &SequenceDatabase,
    key: &RuleKey,
    mode: MiningMode,
    denominator: Denominator,
) -> Option<(usize, f64, usize)> {
    encoded::Encoded::new(db).rule_stats(key, mode, denominator)
}

pub(crate) struct RawRule {
    pub antecedent: Vec<u32>,
    pub consequent: Vec<u32>,
    pub support: usize,
    pub denominator: usize,
}

fn finish(enc: &encoded::Encoded, raw: Vec<RawRule>) -> Vec<HateRule> {
    let mut rules: Vec<HateRule> = raw
        .into_iter()
        .map(|r| HateRule {
            key: RuleKey {
                antecedent: enc.decode(&r.antecedent),
                consequent: enc.decode(&r.consequent),
            },
            support: r.support,
            confidence: r.support as f64 / r.denominator as f64,
            antecedent_count: r.denominator,
        })
        .collect();
    rules.sort_by(|a, b| a.key.cmp(&b.key));
    rules
}

pub(crate) fn passes(support: usize, denominator: usize, config: &RuleMiningConfig) -> bool {
    support >= config.min_sup
        && denominator > 0
        && support as f64 / denominator as f64 >= config.min_conf
}
