//! The TOML run configuration. Relative paths resolve against the config
//! file's directory.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use crate::agreement::{AgreementConfig, Mean, MetricCase, RelativenessMode};
use crate::corpus::{ClassLabel, ClassMap, CorpusSchema, NormalizationConfig};
use crate::evaluation::BinaryTask;
use crate::mining::{Denominator, MiningMode, RuleMiningConfig};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub normalization: NormalizationConfig,
    #[serde(default)]
    pub metrics: MetricsSection,
    #[serde(default)]
    pub evaluation: EvaluationSection,
    #[serde(default)]
    pub mining: MiningSection,
    #[serde(default, rename = "corpus")]
    pub corpora: Vec<CorpusEntry>,
    #[serde(default, rename = "term_list")]
    pub term_lists: Vec<ListEntry>,
    #[serde(default, rename = "entity_list")]
    pub entity_lists: Vec<ListEntry>,
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MetricsSection {
    pub case: MetricCase,
    pub relativeness_mode: RelativenessMode,
    pub mean: Mean,
    pub min_offense: f64,
    pub top_k: usize,
}

impl Default for MetricsSection {
    fn default() -> Self {
        MetricsSection {
            case: MetricCase::HateOnly,
            relativeness_mode: RelativenessMode::default(),
            mean: Mean::default(),
            min_offense: 0.7,
            top_k: 10,
        }
    }
}

impl MetricsSection {
    pub fn agreement(&self) -> AgreementConfig {
        AgreementConfig {
            relativeness_mode: self.relativeness_mode,
            mean: self.mean,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub positive: Vec<ClassLabel>,
    pub negative: Vec<ClassLabel>,
}

impl TaskSpec {
    pub fn to_task(&self) -> crate::Result<BinaryTask> {
        BinaryTask::new(&self.positive, &self.negative)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvaluationSection {
    /// Empty means every task the corpus supports.
    pub tasks: Vec<TaskSpec>,
    pub sweep_step: f64,
    /// Task used by `sweep`; defaults to the first supported task.
    pub sweep_task: Option<TaskSpec>,
    /// Adds the severe list built from `metrics` to the evaluated lists.
    pub include_severe: bool,
}

impl Default for EvaluationSection {
    fn default() -> Self {
        EvaluationSection {
            tasks: Vec::new(),
            sweep_step: 0.05,
            sweep_task: None,
            include_severe: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MiningSection {
    pub mode: MiningMode,
    pub min_sup: usize,
    pub min_conf: f64,
    pub min_stab: usize,
    pub max_antecedent: usize,
    pub max_consequent: usize,
    pub denominator: Denominator,
    /// Classes whose lines enter the sequence databases.
    pub classes: Vec<ClassLabel>,
    pub remove_stop_words: bool,
}

impl Default for MiningSection {
    fn default() -> Self {
        let rules = RuleMiningConfig::default();
        MiningSection {
            mode: MiningMode::default(),
            min_sup: rules.min_sup,
            min_conf: rules.min_conf,
            min_stab: 1,
            max_antecedent: rules.max_antecedent,
            max_consequent: rules.max_consequent,
            denominator: rules.denominator,
            classes: vec![ClassLabel::Hate, ClassLabel::RelativeHate],
            remove_stop_words: true,
        }
    }
}

impl MiningSection {
    pub fn rule_config(&self) -> RuleMiningConfig {
        RuleMiningConfig {
            min_sup: self.min_sup,
            min_conf: self.min_conf,
            max_antecedent: self.max_antecedent,
            max_consequent: self.max_consequent,
            denominator: self.denominator,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub path: PathBuf,
    #[serde(flatten)]
    pub schema: CorpusSchema,
    pub class_map: ClassMap,
    /// Overrides `mining.classes` for this corpus.
    #[serde(default)]
    pub mining_classes: Option<Vec<ClassLabel>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListEntry {
    pub name: String,
    pub path: PathBuf,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Reads, resolves relative paths and validates.
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("{}: cannot read config", path.display()))?;
        let mut config = Self::from_toml(&text)
            .with_context(|| format!("{}: invalid config", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        config.resolve(base);
        Ok(config)
    }

    pub fn resolve(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        fix(&mut self.output_dir);
        for c in &mut self.corpora {
            fix(&mut c.path);
            if let CorpusSchema::Lines { label_path } = &mut c.schema {
                fix(label_path);
            }
        }
        for l in self
            .term_lists
            .iter_mut()
            .chain(self.entity_lists.iter_mut())
        {
            fix(&mut l.path);
        }
    }

    /// Range checks and path existence. Input files are checked, the output
    /// directory is not.
    pub fn validate(&self) -> anyhow::Result<()> {
        let m = &self.metrics;
        if !(0.0..=1.0).contains(&m.min_offense) {
            bail!("metrics.min_offense = {} outside [0, 1]", m.min_offense);
        }
        let mi = &self.mining;
        if !(0.0..=1.0).contains(&mi.min_conf) {
            bail!("mining.min_conf = {} outside [0, 1]", mi.min_conf);
        }
        if mi.min_sup < 1 {
            bail!("mining.min_sup must be at least 1");
        }
        if mi.min_stab < 1 {
            bail!("mining.min_stab must be at least 1");
        }
        if mi.classes.is_empty()
            || self
                .corpora
                .iter()
                .any(|c| c.mining_classes.as_ref().is_some_and(Vec::is_empty))
        {
            bail!("mining classes must name at least one class");
        }
        mi.rule_config().validate()?;
        let step = self.evaluation.sweep_step;
        if !(step > 0.0 && step <= 1.0) {
            bail!("evaluation.sweep_step = {step} outside (0, 1]");
        }
        for t in self
            .evaluation
            .tasks
            .iter()
            .chain(self.evaluation.sweep_task.iter())
        {
            t.to_task()?;
        }
        let mut names = std::collections::BTreeSet::new();
        for c in &self.corpora {
            if !names.insert(&c.name) {
                bail!("duplicate corpus name `{}`", c.name);
            }
        }
        let mut names = std::collections::BTreeSet::new();
        for l in &self.term_lists {
            if !names.insert(&l.name) {
                bail!("duplicate term list name `{}`", l.name);
            }
        }
        for path in self.input_paths() {
            if !path.exists() {
                bail!("{}: file not found", path.display());
            }
        }
        Ok(())
    }

    fn input_paths(&self) -> Vec<&Path> {
        let mut paths: Vec<&Path> = Vec::new();
        for c in &self.corpora {
            paths.push(&c.path);
            if let CorpusSchema::Lines { label_path } = &c.schema {
                paths.push(label_path);
            }
        }
        paths.extend(
            self.term_lists
                .iter()
                .chain(&self.entity_lists)
                .map(|l| l.path.as_path()),
        );
        paths
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
output_dir = "results"

[metrics]
case = "hate_plus_relative"
min_offense = 0.46

[mining]
mode = "unordered"
min_stab = 3

[[corpus]]
name = "gao"
path = "gao.tsv"
format = "delimited"
delimiter = "\t"
text_column = "text"
label_column = "label"
class_map = { hate = "hate", nohate = "no_hate" }

[[corpus]]
name = "plain"
path = "docs.txt"
format = "lines"
label_path = "labels.txt"
class_map = { "1" = "hate", "0" = "no_hate" }

[[term_list]]
name = "gorrell"
path = "lists/gorrell.txt"
"#;

    #[test]
    fn parses_and_resolves() {
        let mut c = RunConfig::from_toml(SAMPLE).unwrap();
        c.resolve(Path::new("/cfg"));
        assert_eq!(c.output_dir, Path::new("/cfg/results"));
        assert_eq!(c.metrics.case, MetricCase::HatePlusRelative);
        assert_eq!(c.mining.mode, MiningMode::Unordered);
        assert_eq!(c.mining.min_sup, 1);
        assert_eq!(c.corpora.len(), 2);
        assert_eq!(
            c.corpora[0].schema,
            CorpusSchema::Delimited {
                delimiter: '\t',
                text_column: "text".into(),
                label_column: "label".into()
            }
        );
        assert_eq!(
            c.corpora[1].schema,
            CorpusSchema::Lines {
                label_path: "/cfg/labels.txt".into()
            }
        );
        assert_eq!(
            c.corpora[0].class_map.get("nohate"),
            Some(ClassLabel::NoHate)
        );
        assert_eq!(c.term_lists[0].path, Path::new("/cfg/lists/gorrell.txt"));
    }

    #[test]
    fn validation_rejects_bad_ranges_and_missing_files() {
        let mut c = RunConfig::from_toml("[metrics]\nmin_offense = 1.5\n").unwrap();
        assert!(c
            .validate()
            .unwrap_err()
            .to_string()
            .contains("min_offense"));
        c.metrics.min_offense = 0.5;
        c.mining.min_conf = -0.1;
        assert!(c.validate().is_err());
        c.mining.min_conf = 0.5;
        c.mining.min_stab = 0;
        assert!(c.validate().is_err());
        c.mining.min_stab = 1;
        assert!(c.validate().is_ok());
        c.term_lists.push(ListEntry {
            name: "x".into(),
            path: "/nonexistent/list.txt".into(),
        });
        assert!(c
            .validate()
            .unwrap_err()
            .to_string()
            .contains("/nonexistent/list.txt"));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::from_toml("[mining]\nminsup = 2\n").is_err());
    }
}
