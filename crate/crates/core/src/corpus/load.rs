use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::normalize::Normalizer;
use super::{ClassMap, CorpusReport, LabeledCorpus, TermList, TermListReport};
use crate::error::{Error, Result};

/// How a corpus file is laid out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "snake_case")]
pub enum CorpusSchema {
    /// Delimited text with a header row naming the columns.
    Delimited {
        #[serde(default = "default_delimiter")]
        delimiter: char,
        text_column: String,
        label_column: String,
    },
    /// One document per line, labels one per line in a sidecar file.
    Lines { label_path: PathBuf },
}

fn default_delimiter() -> char {
    ','
}

impl CorpusSchema {
    pub fn csv(text_column: impl Into<String>, label_column: impl Into<String>) -> Self {
        CorpusSchema::Delimited {
            delimiter: ',',
            text_column: text_column.into(),
            label_column: label_column.into(),
        }
    }
}

pub(crate) fn read_utf8(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    String::from_utf8(bytes).map_err(|e| Error::Encoding {
        path: path.to_path_buf(),
        offset: e.utf8_error().valid_up_to(),
    })
}

fn text_lines(content: &str) -> Vec<&str> {
    let mut lines: Vec<&str> = content
        .split('\n')
        .map(|l| l.trim_end_matches('\r'))
        .collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    lines
}

/// Reads a plain-text term list: one term per line, `#` starts a comment line.
pub fn load_term_list(
    path: impl AsRef<Path>,
    name: impl Into<String>,
    normalizer: &Normalizer,
) -> Result<(TermList, TermListReport)> {
    let path = path.as_ref();
    let content = read_utf8(path)?;
    let raw = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let (list, mut report) = TermList::from_raw(name, raw, normalizer);
    report.source = path.display().to_string();
    if list.is_empty() {
        return Err(Error::EmptyTermList(path.display().to_string()));
    }
    Ok((list, report))
}

pub fn load_corpus(
    path: impl AsRef<Path>,
    name: impl Into<String>,
    schema: &CorpusSchema,
    class_map: &ClassMap,
    normalizer: &Normalizer,
) -> Result<(LabeledCorpus, CorpusReport)> {
    let path = path.as_ref();
    let records = match schema {
        CorpusSchema::Delimited {
            delimiter,
            text_column,
            label_column,
        } => read_delimited(path, *delimiter, text_column, label_column)?,
        CorpusSchema::Lines { label_path } => read_line_documents(path, label_path)?,
    };
    if records.is_empty() {
        return Err(Error::EmptyCorpus {
            path: path.to_path_buf(),
        });
    }

    let unmapped: BTreeSet<&str> = records
        .iter()
        .filter(|(_, label)| class_map.get(label).is_none())
        .map(|(_, label)| label.trim())
        .collect();
    if !unmapped.is_empty() {
        return Err(Error::UnmappedLabel {
            path: path.to_path_buf(),
            labels: unmapped.into_iter().map(String::from).collect(),
        });
    }

    let labeled = records.into_iter().map(|(text, label)| {
        let class = class_map.get(&label).expect("checked above");
        (text, class)
    });
    let corpus = LabeledCorpus::from_records(name, labeled, normalizer);
    let report = CorpusReport::for_corpus(path.display().to_string(), &corpus);
    Ok((corpus, report))
}

fn read_delimited(
    path: &Path,
    delimiter: char,
    text_column: &str,
    label_column: &str,
) -> Result<Vec<(String, String)>> {
    if !delimiter.is_ascii() {
        return Err(Error::InvalidParameter(format!(
            "delimiter must be a single ASCII character, got {delimiter:?}"
        )));
    }
    let content = read_utf8(path)?;
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter as u8)
        .flexible(true)
        .from_reader(content.as_bytes());
    let headers = reader.headers().map_err(csv_err)?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::MissingColumn {
                path: path.to_path_buf(),
                column: name.to_string(),
            })
    };
    let text_idx = column(text_column)?;
    let label_idx = column(label_column)?;

    let mut records = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(csv_err)?;
        let field = |idx: usize, col: &str| {
            record
                .get(idx)
                .map(str::to_string)
                .ok_or_else(|| Error::Parse {
                    path: path.to_path_buf(),
                    line: row + 2,
                    message: format!("row has no `{col}` field"),
                })
        };
        records.push((
            field(text_idx, text_column)?,
            field(label_idx, label_column)?,
        ));
    }
    Ok(records)
}

fn read_line_documents(path: &Path, label_path: &Path) -> Result<Vec<(String, String)>> {
    let docs = read_utf8(path)?;
    let labels = read_utf8(label_path)?;
    let docs = text_lines(&docs);
    let labels = text_lines(&labels);
    if docs.len() != labels.len() {
        return Err(Error::LabelCountMismatch {
            path: label_path.to_path_buf(),
            expected: docs.len(),
            found: labels.len(),
        });
    }
    Ok(docs
        .into_iter()
        .zip(labels)
        .map(|(d, l)| (d.to_string(), l.trim().to_string()))
        .collect())
}

#[cfg(test)]
mod tests {
    use std::io::Write;

    use super::*;
    use crate::corpus::ClassLabel;

    fn write(dir: &tempfile::TempDir, name: &str, content: &[u8]) -> PathBuf {
        let p = dir.path().join(name);
        fs::File::create(&p).unwrap().write_all(content).unwrap();
        p
    }

    fn davidson_map() -> ClassMap {
        [
            ("0", ClassLabel::Hate),
            ("1", ClassLabel::RelativeHate),
            ("2", ClassLabel::NoHate),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn term_list_with_comments_and_duplicates() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "l.txt", b"# header\nf*ggot\nF*ggot \n\nwhite tr*sh\n");
        let (list, report) = load_term_list(&p, "l", &Normalizer::default()).unwrap();
        let keys: Vec<_> = list.entries().iter().map(|t| t.key()).collect();
        assert_eq!(keys, ["f*ggot", "white tr*sh"]);
        assert_eq!(report.dropped_duplicates.len(), 1);
    }

    #[test]
    fn empty_term_list_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "l.txt", b"# only a comment\n");
        let err = load_term_list(&p, "l", &Normalizer::default()).unwrap_err();
        assert!(err.to_string().contains("empty term list"));
    }

    #[test]
    fn stemmer_collapses_inflections() {
        let n = Normalizer::default();
        // Whether two surface forms collapse is decided by the stemmer itself.
        let collapses = |a: &str, b: &str| n.normalize(a) == n.normalize(b);
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "l.txt", b"bitch\nbitches\ntr*sh\ntr*shy\n");
        let (list, report) = load_term_list(&p, "l", &n).unwrap();
        let expected = 4
            - usize::from(collapses("bitch", "bitches"))
            - usize::from(collapses("tr*sh", "tr*shy"));
        assert!(collapses("bitch", "bitches"));
        assert_eq!(list.len(), expected);
        assert_eq!(report.dropped_duplicates.len(), 4 - expected);
    }

    #[test]
    fn invalid_utf8_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "l.txt", b"ok\n\xff\xfe\n");
        assert!(matches!(
            load_term_list(&p, "l", &Normalizer::default()),
            Err(Error::Encoding { offset: 3, .. })
        ));
    }

    #[test]
    fn three_class_csv() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(
            &dir,
            "d.csv",
            b"id,class,tweet\n1,0,\"f*ck those f*ggots, really\"\n2,1,b*tch please\n3,2,nice day\n",
        );
        let (corpus, report) = load_corpus(
            &p,
            "d",
            &CorpusSchema::csv("tweet", "class"),
            &davidson_map(),
            &Normalizer::default(),
        )
        .unwrap();
        assert_eq!(corpus.class_sizes(), [1, 1, 1]);
        assert_eq!(
            corpus.lines()[0].tokens,
            ["f*ck", "those", "f*ggot", "realli"]
        );
        assert_eq!(report.lines_per_class[&ClassLabel::RelativeHate], 1);
    }

    #[test]
    fn two_class_dataset_leaves_relative_hate_empty() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(
            &dir,
            "g.tsv",
            b"text\tlabel\nsome hate\thate\nfine\tnohate\n",
        );
        let map: ClassMap = [("hate", ClassLabel::Hate), ("nohate", ClassLabel::NoHate)]
            .into_iter()
            .collect();
        let schema = CorpusSchema::Delimited {
            delimiter: '\t',
            text_column: "text".into(),
            label_column: "label".into(),
        };
        let (corpus, _) = load_corpus(&p, "g", &schema, &map, &Normalizer::default()).unwrap();
        assert_eq!(corpus.class_sizes(), [1, 0, 1]);
    }

    #[test]
    fn unmapped_label_is_named() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "d.csv", b"class,tweet\n0,a\nspam,b\n");
        let err = load_corpus(
            &p,
            "d",
            &CorpusSchema::csv("tweet", "class"),
            &davidson_map(),
            &Normalizer::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("spam"), "{err}");
    }

    #[test]
    fn missing_column_and_empty_corpus() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(&dir, "d.csv", b"class,text\n0,a\n");
        let err = load_corpus(
            &p,
            "d",
            &CorpusSchema::csv("tweet", "class"),
            &davidson_map(),
            &Normalizer::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingColumn { ref column, .. } if column == "tweet"));

        let p = write(&dir, "e.csv", b"class,tweet\n");
        let err = load_corpus(
            &p,
            "d",
            &CorpusSchema::csv("tweet", "class"),
            &davidson_map(),
            &Normalizer::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EmptyCorpus { .. }));
    }

    #[test]
    fn line_documents_with_sidecar_labels() {
        let dir = tempfile::tempdir().unwrap();
        let docs = write(&dir, "docs.txt", b"first doc\r\nsecond\n");
        let labels = write(&dir, "labels.txt", b"0\n2\n");
        let schema = CorpusSchema::Lines { label_path: labels };
        let (corpus, _) =
            load_corpus(&docs, "x", &schema, &davidson_map(), &Normalizer::default()).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.lines()[1].label, ClassLabel::NoHate);

        let short = write(&dir, "short.txt", b"0\n");
        let schema = CorpusSchema::Lines { label_path: short };
        assert!(matches!(
            load_corpus(&docs, "x", &schema, &davidson_map(), &Normalizer::default()),
            Err(Error::LabelCountMismatch { .. })
        ));
    }
}
