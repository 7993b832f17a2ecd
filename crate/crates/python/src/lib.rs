//! Python bindings for the `hatelex` core.

use hatelex::agreement::{self, AgreementConfig, Mean, MetricCase};
use hatelex::concepts;
use hatelex::corpus::{ClassLabel, LabeledCorpus, Normalizer, TermList};
use hatelex::evaluation::{self, BinaryTask};
use hatelex::mining::{self, MiningMode, RuleKey, RuleMiningConfig, SequenceDatabase};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn enum_arg<T: DeserializeOwned>(name: &str) -> PyResult<T> {
    serde_json::from_value(serde_json::Value::String(name.to_string())).map_err(value_err)
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn classes(names: &[String]) -> PyResult<Vec<ClassLabel>> {
    names.iter().map(|n| n.parse().map_err(value_err)).collect()
}

fn corpus(lines: Vec<(String, String)>) -> PyResult<LabeledCorpus> {
    let records = lines
        .into_iter()
        .map(|(text, label)| Ok((text, label.parse::<ClassLabel>().map_err(value_err)?)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(LabeledCorpus::from_records(
        "corpus",
        records,
        &Normalizer::default(),
    ))
}

fn term_list(name: &str, terms: Vec<String>) -> TermList {
    TermList::from_raw(name, terms, &Normalizer::default()).0
}

fn term_lists(lists: Vec<(String, Vec<String>)>) -> Vec<TermList> {
    lists
        .into_iter()
        .map(|(name, terms)| term_list(&name, terms))
        .collect()
}

/// Tokenize, lowercase and stem with the default settings.
#[pyfunction]
fn normalize(text: &str) -> Vec<String> {
    Normalizer::default().normalize(text)
}

/// `p / (p + n)`, or `None` when both are zero.
#[pyfunction]
fn ratio_bounded(positive: usize, negative: usize) -> Option<f64> {
    agreement::ratio_bounded(positive, negative)
}

#[pyfunction]
#[pyo3(signature = (hatefulness, relativeness, mean = "harmonic"))]
fn offensiveness(hatefulness: u8, relativeness: Option<f64>, mean: &str) -> PyResult<Option<f64>> {
    Ok(agreement::offensiveness(
        hatefulness,
        relativeness,
        enum_arg::<Mean>(mean)?,
    ))
}

/// Inter-agreement records for `(name, terms)` lists over `(text, class)` lines.
#[pyfunction]
#[pyo3(signature = (lines, lists, mean = "harmonic"))]
fn inter_agreement<'py>(
    py: Python<'py>,
    lines: Vec<(String, String)>,
    lists: Vec<(String, Vec<String>)>,
    mean: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let config = AgreementConfig {
        mean: enum_arg(mean)?,
        ..AgreementConfig::default()
    };
    let records = agreement::inter_agreement(&corpus(lines)?, &term_lists(lists), &config);
    to_py(py, &records)
}

/// Raw forms of the terms whose offensiveness exceeds `min_offense`.
#[pyfunction]
#[pyo3(signature = (lines, lists, min_offense = 0.7, case = "hate_only"))]
fn severe_list(
    lines: Vec<(String, String)>,
    lists: Vec<(String, Vec<String>)>,
    min_offense: f64,
    case: &str,
) -> PyResult<Vec<String>> {
    let records = agreement::inter_agreement(
        &corpus(lines)?,
        &term_lists(lists),
        &AgreementConfig::default(),
    );
    let list = agreement::severe_list(&records, enum_arg::<MetricCase>(case)?, min_offense);
    Ok(list.entries().iter().map(|e| e.raw.clone()).collect())
}

/// Percentage confusion matrix and binary metrics for one task.
#[pyfunction]
fn evaluate<'py>(
    py: Python<'py>,
    lines: Vec<(String, String)>,
    terms: Vec<String>,
    positive: Vec<String>,
    negative: Vec<String>,
) -> PyResult<Bound<'py, PyAny>> {
    let task = BinaryTask::new(&classes(&positive)?, &classes(&negative)?).map_err(value_err)?;
    let report = evaluation::evaluate(&corpus(lines)?, &term_list("terms", terms), &task)
        .map_err(value_err)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (sequences, min_sup = 1, min_conf = 0.0, mode = "ordered"))]
fn mine_rules<'py>(
    py: Python<'py>,
    sequences: Vec<Vec<String>>,
    min_sup: usize,
    min_conf: f64,
    mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let db = SequenceDatabase::new("db", sequences);
    let rules = mining::mine_rules(
        &db,
        &RuleMiningConfig::new(min_sup, min_conf),
        enum_arg::<MiningMode>(mode)?,
    )
    .map_err(value_err)?;
    to_py(py, &rules)
}

/// Rules qualifying on at least `min_stab` of the given databases.
#[pyfunction]
#[pyo3(signature = (databases, min_sup = 1, min_conf = 0.0, min_stab = 1, mode = "ordered"))]
fn stable_rules<'py>(
    py: Python<'py>,
    databases: Vec<Vec<Vec<String>>>,
    min_sup: usize,
    min_conf: f64,
    min_stab: usize,
    mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let dbs: Vec<SequenceDatabase> = databases
        .into_iter()
        .enumerate()
        .map(|(i, seqs)| SequenceDatabase::new(format!("db{}", i + 1), seqs))
        .collect();
    let config = RuleMiningConfig::new(min_sup, min_conf);
    let set = mining::stable_rules(&dbs, &config, min_stab, enum_arg::<MiningMode>(mode)?)
        .map_err(value_err)?;
    to_py(py, &set)
}

fn rule_keys(rules: Vec<(Vec<String>, Vec<String>)>) -> Vec<RuleKey> {
    rules.into_iter().map(|(a, c)| RuleKey::new(a, c)).collect()
}

/// Concepts grouping `(antecedent, consequent)` rules.
#[pyfunction]
fn group_similar_rules<'py>(
    py: Python<'py>,
    rules: Vec<(Vec<String>, Vec<String>)>,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &concepts::group_similar_rules(&rule_keys(rules)))
}

/// `(name, dot)` for the transitive and lattice graph of every concept.
#[pyfunction]
fn concept_graphs(rules: Vec<(Vec<String>, Vec<String>)>) -> Vec<(String, String)> {
    concepts::group_similar_rules(&rule_keys(rules))
        .iter()
        .flat_map(|c| {
            [
                concepts::build_transitive_graph(c),
                concepts::build_lattice_graph(c),
            ]
        })
        .map(|g| (g.name(), concepts::export_dot(&g)))
        .collect()
}

#[pymodule]
fn hatelex_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(offensiveness, m)?)?;
    m.add_function(wrap_pyfunction!(inter_agreement, m)?)?;
    m.add_function(wrap_pyfunction!(severe_list, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(mine_rules, m)?)?;
    m.add_function(wrap_pyfunction!(stable_rules, m)?)?;
    m.add_function(wrap_pyfunction!(group_similar_rules, m)?)?;
    m.add_function(wrap_pyfunction!(concept_graphs, m)?)?;
    Ok(())
}
