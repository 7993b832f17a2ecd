use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::agreement::merge_lists;
use crate::corpus::{ClassLabel, LabeledCorpus, TermIndex, TermList};
use crate::error::{Error, Result};

/// Token sequences over a fixed lexicon. Empty sequences are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDatabase {
    pub name: String,
    sequences: Vec<Vec<String>>,
}

impl SequenceDatabase {
    pub fn new(name: impl Into<String>, sequences: impl IntoIterator<Item = Vec<String>>) -> Self {
        SequenceDatabase {
            name: name.into(),
            sequences: sequences.into_iter().filter(|s| !s.is_empty()).collect(),
        }
    }

    pub fn sequences(&self) -> &[Vec<String>] {
        &self.sequences
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }
}

/// Reduces each line of the selected classes to the ordered lexicon terms
/// it contains; multi-word terms become one item joined by `_`. Lines with
/// no lexicon term are dropped. Stop-word handling is whatever `corpus` was
/// normalized with.
pub fn build_rep_database(
    corpus: &LabeledCorpus,
    inter_list: &TermList,
    entities: &[TermList],
    classes: &[ClassLabel],
) -> SequenceDatabase {
    let mut all = vec![inter_list.clone()];
    all.extend(entities.iter().cloned());
    let (lexicon, _) = merge_lists("lexicon", &all);
    let index = TermIndex::new(&lexicon);
    let sequences = corpus
        .lines()
        .iter()
        .filter(|l| classes.contains(&l.label))
        .map(|line| {
            index
                .find(&line.tokens)
                .into_iter()
                .map(|m| lexicon.entries()[m.term].item())
                .collect::<Vec<_>>()
        });
    SequenceDatabase::new(format!("{}__{}", corpus.name, inter_list.name), sequences)
}

const HEADER: &str = "\
# hatelex sequence database
# one sequence per line, items separated by single spaces, in sequence order
# multi-word terms are joined with '_'; lines starting with '#' are comments
";

pub fn write_database(db: &SequenceDatabase) -> String {
    let mut out = String::from(HEADER);
    writeln!(out, "# name: {}", db.name).unwrap();
    for seq in db.sequences() {
        out.push_str(&seq.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_database(path: impl AsRef<Path>) -> Result<SequenceDatabase> {
    let path = path.as_ref();
    let content = crate::corpus::load::read_utf8(path)?;
    let mut name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let mut sequences = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = n.trim().to_string();
            }
            continue;
        }
        let seq: Vec<String> = line.split_whitespace().map(String::from).collect();
        if seq.iter().any(|t| t == "-1" || t == "-2") {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line: lineno + 1,
                message: "itemset separators are not supported; use one item per position".into(),
            });
        }
        sequences.push(seq);
    }
    Ok(SequenceDatabase::new(name, sequences))
}
