use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::encoded::Encoded;
use super::{mine_rules, MiningMode, RuleKey, RuleMiningConfig, SequenceDatabase};
use crate::error::{Error, Result};

/// One rule's figures on one database.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RuleCell {
    pub support: usize,
    pub confidence: f64,
    pub antecedent_count: usize,
    /// Meets both minSup and minConf on this database.
    pub qualified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StableHateRule {
    #[serde(flatten)]
    pub key: RuleKey,
    /// Aligned with [`StableRuleSet::databases`]; `None` where the rule has no support.
    pub cells: Vec<Option<RuleCell>>,
    /// Number of databases where the rule qualifies.
    pub stability: usize,
    pub stable: bool,
}

/// The outer join of every rule that qualified somewhere, across all databases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StableRuleSet {
    pub databases: Vec<String>,
    pub mode: MiningMode,
    pub config: RuleMiningConfig,
    pub min_stab: usize,
    pub rules: Vec<StableHateRule>,
}

impl StableRuleSet {
    pub fn stable(&self) -> impl Iterator<Item = &StableHateRule> {
        self.rules.iter().filter(|r| r.stable)
    }

    pub fn stable_keys(&self) -> BTreeSet<RuleKey> {
        self.stable().map(|r| r.key.clone()).collect()
    }
}

pub fn stable_rules(
    dbs: &[SequenceDatabase],
    config: &RuleMiningConfig,
    min_stab: usize,
    mode: MiningMode,
) -> Result<StableRuleSet> {
    config.validate()?;
    if dbs.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one database is required".into(),
        ));
    }
    if min_stab < 1 || min_stab > dbs.len() {
        return Err(Error::InvalidParameter(format!(
            "minStab {min_stab} must be between 1 and the number of databases ({})",
            dbs.len()
        )));
    }

    let per_db = dbs
        .par_iter()
        .map(|db| mine_rules(db, config, mode))
        .collect::<Result<Vec<_>>>()?;
    let keys: BTreeSet<RuleKey> = per_db.iter().flatten().map(|r| r.key.clone()).collect();

    let encoded: Vec<Encoded> = dbs.par_iter().map(Encoded::new).collect();
    let rules = keys
        .into_par_iter()
        .map(|key| {
            let cells: Vec<Option<RuleCell>> = encoded
                .iter()
                .map(|enc| {
                    let (support, confidence, antecedent_count) =
                        enc.rule_stats(&key, mode, config.denominator)?;
                    (support > 0).then(|| RuleCell {
                        support,
                        confidence,
                        antecedent_count,
                        qualified: super::passes(support, antecedent_count, config),
                    })
                })
                .collect();
            let stability = cells.iter().flatten().filter(|c| c.qualified).count();
            StableHateRule {
                key,
                cells,
                stability,
                stable: stability >= min_stab,
            }
        })
        .collect();

    Ok(StableRuleSet {
        databases: dbs.iter().map(|d| d.name.clone()).collect(),
        mode,
        config: *config,
        min_stab,
        rules,
    })
}
