//! Command-line front end: `analyze`, `severe`, `eval`, `sweep`, `mine` and
//! `graph` over a TOML run configuration.
//!
//! Exit status is 0 on success, 1 when `--strict` is set and the run
//! produced warnings, and 2 on input or configuration errors.

mod config;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

pub use config::{
    CorpusEntry, EvaluationSection, ListEntry, MetricsSection, MiningSection, RunConfig, TaskSpec,
};

use crate::agreement::{
    inter_agreement, inter_agreement_list, intra_from_stats, severe_list, summary_n_hate_terms,
    term_class_stats, InterAgreementRecord, JoinValue, MetricCase,
};
use crate::concepts::{
    build_lattice_graph, build_transitive_graph, export_dot, group_similar_rules,
};
use crate::corpus::{
    lines_by_term_count, load_corpus, load_term_list, ClassLabel, CorpusReport, LabeledCorpus,
    Normalizer, TermList, TermListReport,
};
use crate::evaluation::{
    enumerate_tasks, evaluate_all, sort_reports, sweep_records, threshold_grid, BinaryTask,
};
use crate::mining::{
    build_rep_database, read_database, stable_rules, write_database, HateRule, MiningMode, RuleKey,
    SequenceDatabase, StableHateRule,
};
use crate::report::{self, file_stem, OutputDir};

#[derive(Debug, Parser)]
#[command(
    name = "hatelex",
    version,
    about = "Term-list severity analysis and stable rule mining over labeled corpora"
)]
pub struct Cli {
    /// Run configuration file (TOML).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output directory; overrides `output_dir` in the config.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Exit with status 1 if the run produced warnings.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Histograms, frequency and percent-line tables, outer joins, intra- and
    /// inter-agreement and the summary table, per corpus.
    Analyze,
    /// Severe term list per corpus.
    Severe(SevereArgs),
    /// Evaluate the configured lists (and the severe list) as binary classifiers.
    Eval(EvalArgs),
    /// Evaluate severe lists over a grid of minOffense thresholds.
    Sweep(SweepArgs),
    /// Build sequence databases, mine rules and select the stable ones.
    Mine(MineArgs),
    /// Group stable rules into concepts and export their graphs.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SevereArgs {
    /// `hate` or `hate+relative`.
    #[arg(long, value_parser = parse_case)]
    pub case: Option<MetricCase>,
    #[arg(long)]
    pub min_offense: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub severe: SevereArgs,
    /// Task such as `hate vs no_hate` (repeatable).
    #[arg(long = "task")]
    pub tasks: Vec<BinaryTask>,
    /// Leave the severe list out of the comparison.
    #[arg(long)]
    pub no_severe: bool,
    /// Include wall-clock evaluation time in the reports.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_case)]
    pub case: Option<MetricCase>,
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long)]
    pub task: Option<BinaryTask>,
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Default, Args)]
pub struct MineArgs {
    /// `ordered` or `unordered`.
    #[arg(long, value_parser = parse_mode)]
    pub mode: Option<MiningMode>,
    #[arg(long)]
    pub min_sup: Option<usize>,
    #[arg(long)]
    pub min_conf: Option<f64>,
    #[arg(long)]
    pub min_stab: Option<usize>,
    /// Mine these sequence database files instead of building them from the corpora (repeatable).
    #[arg(long = "db", value_name = "PATH")]
    pub databases: Vec<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GraphArgs {
    /// Rule file written by `mine` (default: `<out>/rules/StableRules.json`).
    #[arg(long, value_name = "PATH")]
    pub rules: Option<PathBuf>,
}

fn parse_case(s: &str) -> Result<MetricCase, String> {
    match s.to_ascii_lowercase().as_str() {
        "hate" | "hate_only" => Ok(MetricCase::HateOnly),
        "hate+relative" | "hate_plus_relative" | "hate+relative_hate" => {
            Ok(MetricCase::HatePlusRelative)
        }
        _ => Err(format!(
            "unknown case `{s}` (expected hate or hate+relative)"
        )),
    }
}

fn parse_mode(s: &str) -> Result<MiningMode, String> {
    match s.to_ascii_lowercase().as_str() {
        "ordered" => Ok(MiningMode::Ordered),
        "unordered" => Ok(MiningMode::Unordered),
        _ => Err(format!(
            "unknown mining mode `{s}` (expected ordered or unordered)"
        )),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(warnings) => {
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            if cli.strict && !warnings.is_empty() {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

/// Runs one command and returns its warnings.
pub fn run(cli: &Cli) -> anyhow::Result<Vec<String>> {
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::from_toml("")?,
    };
    if let Some(out) = &cli.out {
        config.output_dir = out.clone();
    }
    let mut session = Session {
        out: OutputDir::new(&config.output_dir),
        config,
        warnings: Vec::new(),
    };
    match &cli.command {
        Command::Analyze => session.analyze()?,
        Command::Severe(a) => session.severe(a)?,
        Command::Eval(a) => session.eval(a)?,
        Command::Sweep(a) => session.sweep(a)?,
        Command::Mine(a) => session.mine(a)?,
        Command::Graph(a) => session.graph(a)?,
    }
    session.out.write_manifest()?;
    Ok(session.warnings)
}

#[derive(Serialize)]
struct IngestionReport<'a> {
    corpus: &'a CorpusReport,
    term_lists: &'a [TermListReport],
}

#[derive(Serialize)]
struct SevereSidecar<'a> {
    name: &'a str,
    corpus: &'a str,
    case: MetricCase,
    threshold: f64,
    comparison: &'static str,
    relativeness_mode: crate::agreement::RelativenessMode,
    mean: crate::agreement::Mean,
    source_lists: Vec<&'a str>,
    candidates: usize,
    undefined: usize,
    count: usize,
}

struct Session {
    config: RunConfig,
    out: OutputDir,
    warnings: Vec<String>,
}

type MetricInputs = (
    Vec<(LabeledCorpus, CorpusReport)>,
    Vec<TermList>,
    Vec<TermListReport>,
);

impl Session {
    fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    fn require_inputs(&self) -> anyhow::Result<()> {
        self.config.validate()?;
        if self.config.corpora.is_empty() {
            bail!("config declares no [[corpus]]");
        }
        if self.config.term_lists.is_empty() {
            bail!("config declares no [[term_list]]");
        }
        Ok(())
    }

    fn load_lists(
        entries: &[ListEntry],
        normalizer: &Normalizer,
    ) -> anyhow::Result<(Vec<TermList>, Vec<TermListReport>)> {
        let loaded = entries
            .par_iter()
            .map(|e| load_term_list(&e.path, &e.name, normalizer))
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(loaded.into_iter().unzip())
    }

    fn load_corpora(
        &self,
        normalizer: &Normalizer,
    ) -> anyhow::Result<Vec<(LabeledCorpus, CorpusReport)>> {
        Ok(self
            .config
            .corpora
            .par_iter()
            .map(|c| load_corpus(&c.path, &c.name, &c.schema, &c.class_map, normalizer))
            .collect::<crate::Result<Vec<_>>>()?)
    }

    fn metric_inputs(&self) -> anyhow::Result<MetricInputs> {
        self.require_inputs()?;
        let normalizer = Normalizer::new(self.config.normalization.clone())?;
        let (lists, reports) = Self::load_lists(&self.config.term_lists, &normalizer)?;
        let corpora = self.load_corpora(&normalizer)?;
        Ok((corpora, lists, reports))
    }

    fn analyze(&mut self) -> anyhow::Result<()> {
        let (corpora, lists, list_reports) = self.metric_inputs()?;
        let metrics = self.config.metrics.clone();
        for (corpus, corpus_report) in &corpora {
            let dir = PathBuf::from(file_stem(&corpus.name));
            self.out.write_json(
                dir.join("ingestion.json"),
                &IngestionReport {
                    corpus: corpus_report,
                    term_lists: &list_reports,
                },
            )?;
            let stats: Vec<_> = lists
                .par_iter()
                .map(|l| term_class_stats(corpus, l))
                .collect();
            let sizes = corpus.class_sizes();
            let histograms: Vec<(String, Vec<_>)> = lists
                .par_iter()
                .map(|l| {
                    let hs = ClassLabel::ALL
                        .iter()
                        .filter(|c| sizes[c.index()] > 0)
                        .map(|c| lines_by_term_count(corpus, l, *c))
                        .collect();
                    (l.name.clone(), hs)
                })
                .collect();
            let intra: Vec<(String, Vec<_>)> = stats
                .iter()
                .map(|s| (s.list.clone(), intra_from_stats(s, &metrics.agreement())))
                .collect();
            let inter = inter_agreement(corpus, &lists, &metrics.agreement());
            for s in &stats {
                if s.rows.iter().all(|r| r.total_freq() == 0) {
                    self.warn(format!(
                        "list `{}` matches no line of corpus `{}`",
                        s.list, corpus.name
                    ));
                }
            }
            let artifacts = [
                report::histogram_artifact(&histograms),
                report::all_frequencies_artifact(&stats),
                report::top_terms_artifact(&stats, metrics.top_k),
                report::percent_lines_artifact(&stats),
                report::outer_join_artifact(&stats, JoinValue::Frequency),
                report::outer_join_artifact(&stats, JoinValue::PercentLines),
                report::intra_artifact(&intra),
                report::inter_artifact(&inter),
                report::summary_artifact(&summary_n_hate_terms(
                    std::slice::from_ref(corpus),
                    &lists,
                )),
            ];
            for a in &artifacts {
                self.out.write_artifact(&dir, a)?;
            }
        }
        Ok(())
    }

    /// Writes the severe list as a term file plus JSON sidecar and returns it.
    fn write_severe(
        &mut self,
        corpus: &LabeledCorpus,
        lists: &[TermList],
        records: &[InterAgreementRecord],
        case: MetricCase,
        threshold: f64,
    ) -> anyhow::Result<TermList> {
        let list = severe_list(records, case, threshold);
        let dir = PathBuf::from(file_stem(&corpus.name)).join("severe");
        let stem = file_stem(&list.name);
        let mut text = String::new();
        for t in list.entries() {
            text.push_str(&t.raw);
            text.push('\n');
        }
        self.out.write(dir.join(format!("{stem}.txt")), &text)?;
        let sidecar = SevereSidecar {
            name: &list.name,
            corpus: &corpus.name,
            case,
            threshold,
            comparison: ">",
            relativeness_mode: self.config.metrics.relativeness_mode,
            mean: self.config.metrics.mean,
            source_lists: lists.iter().map(|l| l.name.as_str()).collect(),
            candidates: records.len(),
            undefined: records
                .iter()
                .filter(|r| r.offensiveness(case).is_none())
                .count(),
            count: list.len(),
        };
        self.out
            .write_json(dir.join(format!("{stem}.json")), &sidecar)?;
        if list.is_empty() {
            self.warn(format!(
                "severe list `{}` for corpus `{}` is empty",
                list.name, corpus.name
            ));
        }
        Ok(list)
    }

    fn severe_params(&self, args: &SevereArgs) -> anyhow::Result<(MetricCase, f64)> {
        let case = args.case.unwrap_or(self.config.metrics.case);
        let t = args.min_offense.unwrap_or(self.config.metrics.min_offense);
        if !(0.0..=1.0).contains(&t) {
            bail!("--min-offense {t} outside [0, 1]");
        }
        Ok((case, t))
    }

    fn severe(&mut self, args: &SevereArgs) -> anyhow::Result<()> {
        let (case, threshold) = self.severe_params(args)?;
        let (corpora, lists, _) = self.metric_inputs()?;
        let cfg = self.config.metrics.agreement();
        for (corpus, _) in &corpora {
            let records = inter_agreement(corpus, &lists, &cfg);
            self.write_severe(corpus, &lists, &records, case, threshold)?;
        }
        Ok(())
    }

    fn tasks_for(
        &mut self,
        corpus: &LabeledCorpus,
        explicit: &[BinaryTask],
    ) -> anyhow::Result<Vec<BinaryTask>> {
        let configured = self
            .config
            .evaluation
            .tasks
            .iter()
            .map(TaskSpec::to_task)
            .collect::<crate::Result<Vec<_>>>()?;
        let wanted = if !explicit.is_empty() {
            explicit.to_vec()
        } else if !configured.is_empty() {
            configured
        } else {
            return Ok(enumerate_tasks(corpus));
        };
        let sizes = corpus.class_sizes();
        let mut tasks = Vec::new();
        for t in wanted {
            if t.classes().all(|c| sizes[c.index()] > 0) {
                tasks.push(t);
            } else {
                self.warn(format!(
                    "task `{t}` skipped for corpus `{}`: a class has no lines",
                    corpus.name
                ));
            }
        }
        Ok(tasks)
    }

    fn eval(&mut self, args: &EvalArgs) -> anyhow::Result<()> {
        let (case, threshold) = self.severe_params(&args.severe)?;
        let (corpora, lists, _) = self.metric_inputs()?;
        let cfg = self.config.metrics.agreement();
        let with_severe = self.config.evaluation.include_severe && !args.no_severe;
        for (corpus, _) in &corpora {
            let tasks = self.tasks_for(corpus, &args.tasks)?;
            let mut candidates = lists.clone();
            if with_severe {
                let records = inter_agreement(corpus, &lists, &cfg);
                let severe = self.write_severe(corpus, &lists, &records, case, threshold)?;
                if !severe.is_empty() {
                    candidates.push(severe);
                }
            }
            let mut reports = Vec::new();
            for r in evaluate_all(corpus, &candidates, &tasks) {
                match r {
                    Ok(r) => reports.push(r),
                    Err(e) => self.warn(format!("corpus `{}`: {e}", corpus.name)),
                }
            }
            let mut ordered = Vec::new();
            for task in &tasks {
                let mut of_task: Vec<_> = reports
                    .iter()
                    .filter(|r| &r.task == task)
                    .cloned()
                    .collect();
                sort_reports(&mut of_task);
                ordered.extend(of_task);
            }
            let dir = PathBuf::from(file_stem(&corpus.name));
            self.out.write_artifact(
                &dir,
                &report::eval_artifact("Evaluation", &ordered, args.timings),
            )?;
        }
        Ok(())
    }

    fn sweep(&mut self, args: &SweepArgs) -> anyhow::Result<()> {
        let case = args.case.unwrap_or(self.config.metrics.case);
        let step = args.step.unwrap_or(self.config.evaluation.sweep_step);
        let thresholds = threshold_grid(step)?;
        let (corpora, lists, _) = self.metric_inputs()?;
        let cfg = self.config.metrics.agreement();
        let configured = self
            .config
            .evaluation
            .sweep_task
            .as_ref()
            .map(TaskSpec::to_task)
            .transpose()?;
        for (corpus, _) in &corpora {
            let explicit: Vec<BinaryTask> = args
                .task
                .clone()
                .or(configured.clone())
                .into_iter()
                .collect();
            let Some(task) = self.tasks_for(corpus, &explicit)?.into_iter().next() else {
                self.warn(format!(
                    "corpus `{}` supports no binary task; sweep skipped",
                    corpus.name
                ));
                continue;
            };
            let records = inter_agreement(corpus, &lists, &cfg);
            let rows = sweep_records(corpus, &records, &task, case, &thresholds)?;
            let dir = PathBuf::from(file_stem(&corpus.name));
            self.out
                .write_artifact(&dir, &report::sweep_artifact(&rows, args.timings))?;
            self.out
                .write(dir.join("Sweep_series.tsv"), &report::sweep_series(&rows))?;
        }
        Ok(())
    }

    /// Every corpus crossed with every corpus's inter-agreement list.
    fn build_databases(&mut self) -> anyhow::Result<Vec<SequenceDatabase>> {
        self.require_inputs()?;
        let mut norm_cfg = self.config.normalization.clone();
        norm_cfg.remove_stop_words = self.config.mining.remove_stop_words;
        let normalizer = Normalizer::new(norm_cfg)?;
        let (lists, _) = Self::load_lists(&self.config.term_lists, &normalizer)?;
        let (entities, _) = Self::load_lists(&self.config.entity_lists, &normalizer)?;
        if entities.is_empty() {
            self.warn("no [[entity_list]] configured; databases hold lexicon terms only");
        }
        let corpora: Vec<LabeledCorpus> = self
            .load_corpora(&normalizer)?
            .into_iter()
            .map(|(c, _)| c)
            .collect();
        let cfg = self.config.metrics.agreement();
        let inter_lists: Vec<TermList> = corpora
            .par_iter()
            .map(|c| {
                inter_agreement_list(
                    format!("{}_inter", c.name),
                    &inter_agreement(c, &lists, &cfg),
                )
            })
            .collect();
        let pairs: Vec<_> = corpora
            .iter()
            .zip(&self.config.corpora)
            .flat_map(|(c, entry)| {
                let classes = entry
                    .mining_classes
                    .as_ref()
                    .unwrap_or(&self.config.mining.classes);
                inter_lists.iter().map(move |l| (c, l, classes))
            })
            .collect();
        Ok(pairs
            .par_iter()
            .map(|(c, l, classes)| build_rep_database(c, l, &entities, classes))
            .collect())
    }

    fn mine(&mut self, args: &MineArgs) -> anyhow::Result<()> {
        let mining = &mut self.config.mining;
        mining.mode = args.mode.unwrap_or(mining.mode);
        mining.min_sup = args.min_sup.unwrap_or(mining.min_sup);
        mining.min_conf = args.min_conf.unwrap_or(mining.min_conf);
        mining.min_stab = args.min_stab.unwrap_or(mining.min_stab);
        let dbs = if args.databases.is_empty() {
            self.build_databases()?
        } else {
            self.config.validate()?;
            args.databases
                .iter()
                .map(read_database)
                .collect::<crate::Result<Vec<_>>>()?
        };
        let mining = self.config.mining.clone();
        if mining.min_stab > dbs.len() {
            bail!(
                "minStab {} exceeds the number of databases ({})",
                mining.min_stab,
                dbs.len()
            );
        }
        let mut names = BTreeSet::new();
        for db in &dbs {
            if !names.insert(db.name.clone()) {
                bail!("duplicate database name `{}`", db.name);
            }
        }
        let rules_dir = PathBuf::from("rules");
        for db in &dbs {
            if db.is_empty() {
                self.warn(format!("database `{}` is empty after reduction", db.name));
            }
            if args.databases.is_empty() {
                self.out.write(
                    rules_dir.join(format!("{}.db.txt", file_stem(&db.name))),
                    &write_database(db),
                )?;
            }
        }
        let set = stable_rules(&dbs, &mining.rule_config(), mining.min_stab, mining.mode)?;
        for (i, db) in set.databases.iter().enumerate() {
            let rules: Vec<HateRule> = set
                .rules
                .iter()
                .filter_map(|r| {
                    r.cells[i].filter(|c| c.qualified).map(|c| HateRule {
                        key: r.key.clone(),
                        support: c.support,
                        confidence: c.confidence,
                        antecedent_count: c.antecedent_count,
                    })
                })
                .collect();
            let name = format!("{}.rules", file_stem(db));
            self.out
                .write_artifact(&rules_dir, &report::rules_artifact(&name, &rules))?;
        }
        self.out.write_artifact(
            &rules_dir,
            &report::stable_rules_artifact("OuterJoinRules", &set, false),
        )?;
        self.out.write_artifact(
            &rules_dir,
            &report::stable_rules_artifact("StableRules", &set, true),
        )?;
        if set.stable().next().is_none() {
            self.warn(format!("no rule reaches minStab {}", mining.min_stab));
        }
        Ok(())
    }

    fn graph(&mut self, args: &GraphArgs) -> anyhow::Result<()> {
        let path = args
            .rules
            .clone()
            .unwrap_or_else(|| self.out.root().join("rules").join("StableRules.json"));
        let keys = read_rule_keys(&path)?;
        let concepts = group_similar_rules(&keys);
        let dir = PathBuf::from("graphs");
        self.out
            .write_artifact(&dir, &report::concepts_artifact(&concepts))?;
        for c in &concepts {
            for g in [build_transitive_graph(c), build_lattice_graph(c)] {
                let stem = file_stem(&g.name());
                self.out
                    .write(dir.join(format!("{stem}.dot")), &export_dot(&g))?;
                self.out
                    .write(dir.join(format!("{stem}.json")), &(g.to_json() + "\n"))?;
            }
        }
        if concepts.is_empty() {
            self.warn(format!("{}: no rules to group", path.display()));
        }
        Ok(())
    }
}

/// Accepts the stable-rule file (stable rules only) or a per-database rule file (every rule).
fn read_rule_keys(path: &Path) -> anyhow::Result<Vec<RuleKey>> {
    let text = std::fs::read_to_string(path).with_context(|| {
        format!(
            "{}: cannot read rule file (run `mine` first or pass --rules)",
            path.display()
        )
    })?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("{}: invalid JSON", path.display()))?;
    let parse_err =
        |e: serde_json::Error| anyhow!("{}: unrecognized rule file: {e}", path.display());
    if let Some(rules) = value.get("rules") {
        let rules: Vec<StableHateRule> =
            serde_json::from_value(rules.clone()).map_err(parse_err)?;
        Ok(rules
            .into_iter()
            .filter(|r| r.stable)
            .map(|r| r.key)
            .collect())
    } else {
        let rules: Vec<HateRule> = serde_json::from_value(value).map_err(parse_err)?;
        Ok(rules.into_iter().map(|r| r.key).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from([
            "hatelex",
            "--out",
            "o",
            "--strict",
            "mine",
            "--mode",
            "unordered",
            "--min-stab",
            "3",
            "--db",
            "a.txt",
        ])
        .unwrap();
        assert!(cli.strict);
        let Command::Mine(m) = cli.command else {
            panic!()
        };
        assert_eq!(m.mode, Some(MiningMode::Unordered));
        assert_eq!(m.min_stab, Some(3));
        let cli = Cli::try_parse_from([
            "hatelex",
            "eval",
            "--task",
            "hate+relative_hate vs no_hate",
            "--case",
            "hate",
        ])
        .unwrap();
        let Command::Eval(e) = cli.command else {
            panic!()
        };
        assert_eq!(
            e.tasks[0].positive,
            [ClassLabel::Hate, ClassLabel::RelativeHate]
        );
        assert!(Cli::try_parse_from(["hatelex", "sweep", "--case", "nope"]).is_err());
    }
}
