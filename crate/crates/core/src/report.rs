//! Tabular rendering of results. CSV cells show three decimals (trailing
//! zeros trimmed), `NaN` for undefined metrics and `--` for missing
//! outer-join cells. JSON keeps full precision with `null` for undefined.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::agreement::{
    outer_join, top_terms, InterAgreementRecord, IntraAgreementRecord, JoinValue, MetricCase,
    StatsTable, SummaryRow,
};
use crate::concepts::Concept;
use crate::corpus::{ClassLabel, Histogram};
use crate::error::{Error, Result};
use crate::evaluation::{EvalReport, SweepRow};
use crate::mining::{HateRule, StableRuleSet};

pub const MISSING: &str = "--";
pub const UNDEFINED: &str = "NaN";

/// Rounds to three decimals and trims trailing zeros (`0.500` -> `0.5`).
pub fn fmt3(value: f64) -> String {
    if value.is_nan() {
        return UNDEFINED.to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let s = format!("{:.3}", value);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn fmt_metric(value: Option<f64>) -> String {
    value.map_or_else(|| UNDEFINED.to_string(), fmt3)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

/// A named table with its JSON counterpart.
pub struct Artifact {
    pub name: String,
    pub table: Table,
    pub json: serde_json::Value,
}

impl Artifact {
    fn new(name: impl Into<String>, table: Table, json: impl Serialize) -> Self {
        Artifact {
            name: name.into(),
            table,
            json: serde_json::to_value(json).expect("artifact serializes"),
        }
    }
}

pub fn histogram_artifact(per_list: &[(String, Vec<Histogram>)]) -> Artifact {
    #[derive(Serialize)]
    struct Row<'a> {
        list: &'a str,
        #[serde(flatten)]
        histogram: &'a Histogram,
    }
    let mut t = Table::new(["list", "class", "n", "lines", "line_ids"]);
    let mut json = Vec::new();
    for (list, histograms) in per_list {
        for h in histograms {
            let class = h.class.map_or("", |c| c.as_str());
            for (n, b) in &h.buckets {
                let ids: Vec<String> = b.line_ids.iter().map(|i| i.to_string()).collect();
                t.push(vec![
                    list.clone(),
                    class.into(),
                    n.to_string(),
                    b.lines.to_string(),
                    ids.join(" "),
                ]);
            }
            json.push(Row { list, histogram: h });
        }
    }
    Artifact::new("TermCountHistogram", t, json)
}

#[derive(Serialize)]
struct TermFrequency<'a> {
    list: &'a str,
    class: ClassLabel,
    term: String,
    frequency: usize,
    lines: usize,
    class_lines: usize,
    percent_lines: Option<f64>,
}

fn frequencies(stats: &StatsTable) -> Vec<TermFrequency<'_>> {
    let mut rows = Vec::new();
    for class in ClassLabel::ALL {
        let mut of_class: Vec<_> = stats
            .rows
            .iter()
            .map(|r| (r, r.class(class)))
            .filter(|(_, c)| c.freq > 0)
            .map(|(r, c)| TermFrequency {
                list: &stats.list,
                class,
                term: r.term.key(),
                frequency: c.freq,
                lines: c.line_count,
                class_lines: c.class_size,
                percent_lines: c.percent_lines(),
            })
            .collect();
        of_class.sort_by(|a, b| {
            b.frequency
                .cmp(&a.frequency)
                .then_with(|| a.term.cmp(&b.term))
        });
        rows.extend(of_class);
    }
    rows
}

pub fn all_frequencies_artifact(stats: &[StatsTable]) -> Artifact {
    let mut t = Table::new(["list", "class", "term", "frequency"]);
    let mut json = Vec::new();
    for s in stats {
        for f in frequencies(s) {
            t.push(vec![
                f.list.into(),
                f.class.to_string(),
                f.term.clone(),
                f.frequency.to_string(),
            ]);
            json.push(f);
        }
    }
    Artifact::new("AllHateTermsFrequencies", t, json)
}

pub fn percent_lines_artifact(stats: &[StatsTable]) -> Artifact {
    let mut t = Table::new([
        "list",
        "class",
        "term",
        "lines",
        "class_lines",
        "percent_lines",
    ]);
    let mut json = Vec::new();
    for s in stats {
        for f in frequencies(s) {
            t.push(vec![
                f.list.into(),
                f.class.to_string(),
                f.term.clone(),
                f.lines.to_string(),
                f.class_lines.to_string(),
                fmt_metric(f.percent_lines),
            ]);
            json.push(f);
        }
    }
    Artifact::new("AllHTsPercentLine", t, json)
}

pub fn top_terms_artifact(stats: &[StatsTable], k: usize) -> Artifact {
    #[derive(Serialize)]
    struct Top<'a> {
        list: &'a str,
        class: ClassLabel,
        rank: usize,
        term: String,
        frequency: usize,
    }
    let mut t = Table::new(["list", "class", "rank", "term", "frequency"]);
    let mut json = Vec::new();
    for s in stats {
        for class in ClassLabel::ALL {
            for (i, (term, freq)) in top_terms(s, class, k).into_iter().enumerate() {
                t.push(vec![
                    s.list.clone(),
                    class.to_string(),
                    (i + 1).to_string(),
                    term.clone(),
                    freq.to_string(),
                ]);
                json.push(Top {
                    list: &s.list,
                    class,
                    rank: i + 1,
                    term,
                    frequency: freq,
                });
            }
        }
    }
    Artifact::new("TopTermsFrequency", t, json)
}

pub fn outer_join_artifact(stats: &[StatsTable], value: JoinValue) -> Artifact {
    #[derive(Serialize)]
    struct Row<'a> {
        list: &'a str,
        term: String,
        hate: Option<f64>,
        relative_hate: Option<f64>,
        no_hate: Option<f64>,
    }
    let name = match value {
        JoinValue::Frequency => "OuterJoinHTsFrequencies",
        JoinValue::PercentLines => "OuterJoinHTsPercentLines",
    };
    let mut t = Table::new(["list", "term", "hate", "relative_hate", "no_hate"]);
    let mut json = Vec::new();
    for s in stats {
        for row in outer_join(s, value).rows {
            let mut cells = vec![s.list.clone(), row.term.clone()];
            cells.extend(row.cells.iter().map(|c| match (c, value) {
                (None, _) => MISSING.to_string(),
                (Some(v), JoinValue::Frequency) => format!("{}", *v as u64),
                (Some(v), JoinValue::PercentLines) => fmt3(*v),
            }));
            t.push(cells);
            json.push(Row {
                list: &s.list,
                term: row.term,
                hate: row.cells[0],
                relative_hate: row.cells[1],
                no_hate: row.cells[2],
            });
        }
    }
    Artifact::new(name, t, json)
}

fn case_prefix(case: MetricCase) -> &'static str {
    match case {
        MetricCase::HateOnly => "hate",
        MetricCase::HatePlusRelative => "hate_plus_relative",
    }
}

pub fn intra_artifact(per_list: &[(String, Vec<IntraAgreementRecord>)]) -> Artifact {
    let mut headers = vec!["list".to_string(), "term".to_string()];
    for case in MetricCase::ALL {
        let p = case_prefix(case);
        headers.extend(
            [
                "positive_lines",
                "no_hate_lines",
                "positive_class_lines",
                "hatefulness",
                "relativeness",
            ]
            .iter()
            .map(|h| format!("{p}_{h}")),
        );
    }
    let mut t = Table::new(headers);
    #[derive(Serialize)]
    struct Row<'a> {
        list: &'a str,
        #[serde(flatten)]
        record: &'a IntraAgreementRecord,
    }
    let mut json = Vec::new();
    for (list, records) in per_list {
        for r in records {
            let mut row = vec![list.clone(), r.term.key()];
            for m in &r.cases {
                row.extend([
                    m.positive_lines.to_string(),
                    m.negative_lines.to_string(),
                    m.positive_class_size.to_string(),
                    m.hatefulness.to_string(),
                    fmt_metric(m.relativeness),
                ]);
            }
            t.push(row);
            json.push(Row { list, record: r });
        }
    }
    Artifact::new("IntraAgreement", t, json)
}

pub fn inter_artifact(records: &[InterAgreementRecord]) -> Artifact {
    let mut headers = vec!["term".to_string()];
    for case in MetricCase::ALL {
        let p = case_prefix(case);
        headers.extend(
            ["hatefulness", "relativeness", "offensiveness"]
                .iter()
                .map(|h| format!("{p}_{h}")),
        );
    }
    headers.push("lists".into());
    let mut t = Table::new(headers);
    for r in records {
        let mut row = vec![r.term.key()];
        for c in &r.cases {
            row.extend([
                c.metrics.hatefulness.to_string(),
                fmt_metric(c.metrics.relativeness),
                fmt_metric(c.offensiveness),
            ]);
        }
        row.push(r.membership.iter().cloned().collect::<Vec<_>>().join("; "));
        t.push(row);
    }
    Artifact::new("InterAgreement", t, records)
}

pub fn summary_artifact(rows: &[SummaryRow]) -> Artifact {
    let mut t = Table::new([
        "corpus",
        "class",
        "list",
        "n",
        "entries",
        "total_lines",
        "percent",
    ]);
    for r in rows {
        t.push(vec![
            r.corpus.clone(),
            r.class.to_string(),
            r.list.clone(),
            r.n.to_string(),
            r.entries.to_string(),
            r.total_lines.to_string(),
            fmt3(r.percent),
        ]);
    }
    Artifact::new("Summary_N", t, rows)
}

fn eval_cells(r: &EvalReport) -> Vec<String> {
    vec![
        r.list.clone(),
        r.list_size.to_string(),
        r.task.to_string(),
        fmt3(r.matrix.tp()),
        fmt3(r.matrix.fn_()),
        fmt3(r.matrix.fp()),
        fmt3(r.matrix.tn()),
        fmt_metric(r.accuracy),
        fmt_metric(r.recall),
        fmt_metric(r.precision),
        fmt_metric(r.f_measure),
    ]
}

const EVAL_HEADERS: [&str; 11] = [
    "list",
    "list_size",
    "task",
    "tp",
    "fn",
    "fp",
    "tn",
    "accuracy",
    "recall",
    "precision",
    "f_measure",
];

/// Evaluation rows; `timings` adds the wall-clock column.
pub fn eval_artifact(name: &str, reports: &[EvalReport], timings: bool) -> Artifact {
    let mut headers: Vec<&str> = EVAL_HEADERS.to_vec();
    if timings {
        headers.push("compute_time_ms");
    }
    let mut t = Table::new(headers);
    let mut json = Vec::new();
    for r in reports {
        let mut row = eval_cells(r);
        let mut value = serde_json::to_value(r).expect("report serializes");
        if timings {
            row.push(format!("{:.1}", r.compute_time_ms));
        } else {
            value
                .as_object_mut()
                .expect("object")
                .remove("compute_time_ms");
        }
        t.push(row);
        json.push(value);
    }
    Artifact::new(name, t, json)
}

pub fn sweep_artifact(rows: &[SweepRow], timings: bool) -> Artifact {
    let mut headers = vec!["threshold"];
    headers.extend(EVAL_HEADERS);
    headers.push("error");
    let mut t = Table::new(headers);
    let mut json = Vec::new();
    for row in rows {
        let mut cells = vec![fmt3(row.threshold)];
        let mut value =
            serde_json::json!({ "threshold": row.threshold, "list_size": row.list_size });
        match &row.report {
            Ok(r) => {
                cells.extend(eval_cells(r));
                cells.push(String::new());
                let mut rv = serde_json::to_value(r).expect("report serializes");
                if !timings {
                    rv.as_object_mut()
                        .expect("object")
                        .remove("compute_time_ms");
                }
                value["report"] = rv;
            }
            Err(e) => {
                cells.push(String::new());
                cells.push(row.list_size.to_string());
                cells.extend(std::iter::repeat_n(String::new(), EVAL_HEADERS.len() - 2));
                cells.push(e.clone());
                value["error"] = serde_json::Value::String(e.clone());
            }
        }
        t.push(cells);
        json.push(value);
    }
    Artifact::new("Sweep", t, json)
}

/// Two whitespace-separated columns, `threshold f_measure`, for plotting.
pub fn sweep_series(rows: &[SweepRow]) -> String {
    let mut out = String::from("# threshold\tf_measure\n");
    for row in rows {
        let f = row.report.as_ref().ok().and_then(|r| r.f_measure);
        out.push_str(&format!("{}\t{}\n", fmt3(row.threshold), fmt_metric(f)));
    }
    out
}

pub fn rules_artifact(name: &str, rules: &[HateRule]) -> Artifact {
    let mut t = Table::new([
        "antecedent",
        "consequent",
        "support",
        "confidence",
        "antecedent_count",
    ]);
    for r in rules {
        t.push(vec![
            r.key.antecedent.join(" "),
            r.key.consequent.join(" "),
            r.support.to_string(),
            fmt3(r.confidence),
            r.antecedent_count.to_string(),
        ]);
    }
    Artifact::new(name, t, rules)
}

/// Outer join of rules across databases; `stable_only` keeps the stable subset.
pub fn stable_rules_artifact(name: &str, set: &StableRuleSet, stable_only: bool) -> Artifact {
    let mut headers = vec!["antecedent".to_string(), "consequent".to_string()];
    for db in &set.databases {
        headers.extend(
            ["support", "confidence", "qualified"]
                .iter()
                .map(|h| format!("{db}:{h}")),
        );
    }
    headers.extend(["stability".to_string(), "stable".to_string()]);
    let mut t = Table::new(headers);
    let rules: Vec<_> = set
        .rules
        .iter()
        .filter(|r| !stable_only || r.stable)
        .collect();
    for r in &rules {
        let mut row = vec![r.key.antecedent.join(" "), r.key.consequent.join(" ")];
        for cell in &r.cells {
            match cell {
                Some(c) => row.extend([
                    c.support.to_string(),
                    fmt3(c.confidence),
                    c.qualified.to_string(),
                ]),
                None => row.extend([
                    MISSING.to_string(),
                    MISSING.to_string(),
                    "false".to_string(),
                ]),
            }
        }
        row.extend([r.stability.to_string(), r.stable.to_string()]);
        t.push(row);
    }
    let json = serde_json::json!({
        "databases": set.databases,
        "mode": set.mode,
        "config": set.config,
        "min_stab": set.min_stab,
        "rules": rules,
    });
    Artifact::new(name, t, json)
}

pub fn concepts_artifact(concepts: &[Concept]) -> Artifact {
    let mut t = Table::new(["concept", "rule_count", "rules"]);
    for c in concepts {
        let rules: Vec<String> = c.rules.iter().map(|r| r.to_string()).collect();
        t.push(vec![
            c.label(),
            c.rule_count().to_string(),
            rules.join("; "),
        ]);
    }
    Artifact::new("Concepts", t, concepts)
}

/// Keeps file names portable: anything but ASCII alphanumerics, `_`, `-`,
/// `.`, `(` and `)` becomes `-`.
pub fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '(' | ')' | '+') {
                c
            } else {
                '-'
            }
        })
        .collect()
}

/// Writes files under one root and remembers what it wrote.
pub struct OutputDir {
    root: PathBuf,
    written: BTreeSet<String>,
}

impl OutputDir {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        OutputDir {
            root: root.into(),
            written: BTreeSet::new(),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn write(&mut self, relative: impl AsRef<Path>, content: &str) -> Result<PathBuf> {
        let path = self.root.join(relative.as_ref());
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
        fs::write(&path, content).map_err(|e| Error::io(&path, e))?;
        self.written
            .insert(relative.as_ref().to_string_lossy().replace('\\', "/"));
        Ok(path)
    }

    pub fn write_json(
        &mut self,
        relative: impl AsRef<Path>,
        value: &impl Serialize,
    ) -> Result<PathBuf> {
        let mut text = serde_json::to_string_pretty(value).expect("value serializes");
        text.push('\n');
        self.write(relative, &text)
    }

    /// Writes `<dir>/<name>.csv` and `<dir>/<name>.json`.
    pub fn write_artifact(&mut self, dir: impl AsRef<Path>, artifact: &Artifact) -> Result<()> {
        let stem = file_stem(&artifact.name);
        self.write(
            dir.as_ref().join(format!("{stem}.csv")),
            &artifact.table.to_csv(),
        )?;
        self.write_json(dir.as_ref().join(format!("{stem}.json")), &artifact.json)?;
        Ok(())
    }

    pub fn written(&self) -> &BTreeSet<String> {
        &self.written
    }

    /// Merges this run's files into `manifest.json`, keeping earlier entries.
    pub fn write_manifest(&mut self) -> Result<PathBuf> {
        let path = self.root.join("manifest.json");
        let mut files: BTreeSet<String> = match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str::<serde_json::Value>(&text)
                .ok()
                .and_then(|v| v.get("files").cloned())
                .and_then(|f| serde_json::from_value(f).ok())
                .unwrap_or_default(),
            Err(_) => BTreeSet::new(),
        };
        files.extend(self.written.iter().cloned());
        files.retain(|f| self.root.join(f).exists());
        let manifest = serde_json::json!({ "files": files });
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        text.push('\n');
        fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_decimal_rendering() {
        assert_eq!(fmt3(17.41258), "17.413");
        assert_eq!(fmt3(0.5), "0.5");
        assert_eq!(fmt3(1.0), "1");
        assert_eq!(fmt3(0.0), "0");
        assert_eq!(fmt3(-0.0001), "0");
        assert_eq!(fmt_metric(None), "NaN");
        assert_eq!(fmt3(f64::NAN), "NaN");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let mut t = Table::new(["a", "b"]);
        t.push(vec!["x, y".into(), "z".into()]);
        assert_eq!(t.to_csv(), "a,b\n\"x, y\",z\n");
    }

    #[test]
    fn file_stems_are_portable() {
        assert_eq!(
            file_stem("Offensiveness(Hate)(0.7)"),
            "Offensiveness(Hate)(0.7)"
        );
        assert_eq!(file_stem("a*s_b*tch boss"), "a-s_b-tch-boss");
    }

    #[test]
    fn manifest_merges_runs() {
        let dir = tempfile::tempdir().unwrap();
        let mut out = OutputDir::new(dir.path());
        out.write("a/x.csv", "1").unwrap();
        out.write_manifest().unwrap();
        let mut out = OutputDir::new(dir.path());
        out.write("b.txt", "2").unwrap();
        out.write_manifest().unwrap();
        let m: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
                .unwrap();
        assert_eq!(m["files"], serde_json::json!(["a/x.csv", "b.txt"]));
    }
}
