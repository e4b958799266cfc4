//! Hypergraph files.
//!
//! A file is one JSON document with `n`, `r` and `edges`. Edge entries are
//! either dense integer ids in `0..n` or arbitrary labels (strings, or a mix
//! of strings and integers); labels are mapped to ids in order of first
//! appearance and the mapping is kept in `labels`. Saved files put one edge
//! per line so that diffs stay readable and saving is deterministic.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Invalid(#[from] HypergraphError),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

/// A parsed file: the hypergraph plus the label of every vertex id when the
/// file used labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub hypergraph: Hypergraph,
    pub labels: Option<Vec<String>>,
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn count(doc: &Value, field: &str) -> Result<usize, ParseError> {
    match doc.get(field) {
        None => Err(field_err(field, "missing")),
        Some(v) => v
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| field_err(field, format!("expected a non-negative integer, found {v}"))),
    }
}

enum Entry {
    Id(u64),
    Label(String),
}

pub fn parse_hypergraph(text: &str) -> Result<Loaded, ParseError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if !doc.is_object() {
        return Err(field_err("<root>", "expected an object"));
    }
    let n = count(&doc, "n")?;
    let r = count(&doc, "r")?;
    let raw = doc
        .get("edges")
        .ok_or_else(|| field_err("edges", "missing"))?
        .as_array()
        .ok_or_else(|| field_err("edges", "expected an array"))?;
    let mut entries: Vec<Vec<Entry>> = Vec::with_capacity(raw.len());
    let mut labelled = false;
    for (i, e) in raw.iter().enumerate() {
        let items = e
            .as_array()
            .ok_or_else(|| field_err(format!("edges[{i}]"), "expected an array"))?;
        let mut row = Vec::with_capacity(items.len());
        for (j, x) in items.iter().enumerate() {
            row.push(match x {
                Value::Number(num) => Entry::Id(num.as_u64().ok_or_else(|| {
                    field_err(
                        format!("edges[{i}][{j}]"),
                        format!("expected a vertex, found {x}"),
                    )
                })?),
                Value::String(s) => {
                    labelled = true;
                    Entry::Label(s.clone())
                }
                _ => {
                    return Err(field_err(
                        format!("edges[{i}][{j}]"),
                        format!("expected a vertex, found {x}"),
                    ))
                }
            });
        }
        entries.push(row);
    }
    let stored_labels = match doc.get("labels") {
        None | Some(Value::Null) => None,
        Some(Value::Array(xs)) => Some(
            xs.iter()
                .map(|x| x.as_str().map(str::to_owned))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| field_err("labels", "expected an array of strings"))?,
        ),
        Some(_) => return Err(field_err("labels", "expected an array of strings")),
    };

    if !labelled {
        let edges: Vec<Vec<usize>> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x {
                        Entry::Id(v) => *v as usize,
                        Entry::Label(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        if let Some(l) = &stored_labels {
            if l.len() != n {
                return Err(field_err(
                    "labels",
                    format!("expected {n} labels, found {}", l.len()),
                ));
            }
        }
        let hypergraph = Hypergraph::new(n, r, edges)?;
        return Ok(Loaded {
            hypergraph,
            labels: stored_labels,
        });
    }

    let mut labels: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edges = Vec::with_capacity(entries.len());
    for row in &entries {
        let mut ids = Vec::with_capacity(row.len());
        for x in row {
            let key = match x {
                Entry::Id(v) => v.to_string(),
                Entry::Label(s) => s.clone(),
            };
            let id = *index.entry(key.clone()).or_insert_with(|| {
                labels.push(key);
                labels.len() - 1
            });
            ids.push(id);
        }
        edges.push(ids);
    }
    if labels.len() > n {
        return Err(field_err(
            "n",
            format!("{} distinct labels exceed n = {n}", labels.len()),
        ));
    }
    // vertices that appear in no edge keep their id as label
    for v in labels.len()..n {
        labels.push(format!("#{v}"));
    }
    let hypergraph = Hypergraph::new(n, r, edges)?;
    Ok(Loaded {
        hypergraph,
        labels: Some(labels),
    })
}

/// Deterministic text form; edges in id order, one per line.
pub fn to_text(h: &Hypergraph, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"n\": {},", h.n()).unwrap();
    writeln!(out, "  \"r\": {},", h.r()).unwrap();
    if let Some(labels) = labels {
        let quoted: Vec<String> = labels
            .iter()
            .map(|l| Value::String(l.clone()).to_string())
            .collect();
        writeln!(out, "  \"labels\": [{}],", quoted.join(", ")).unwrap();
    }
    if h.num_edges() == 0 {
        writeln!(out, "  \"edges\": []").unwrap();
    } else {
        writeln!(out, "  \"edges\": [").unwrap();
        for (i, e) in h.edges().iter().enumerate() {
            let items: Vec<String> = e.iter().map(usize::to_string).collect();
            let sep = if i + 1 < h.num_edges() { "," } else { "" };
            writeln!(out, "    [{}]{sep}", items.join(", ")).unwrap();
        }
        writeln!(out, "  ]").unwrap();
    }
    out.push_str("}\n");
    out
}

/// SHA-256 of the unlabelled text form, hex encoded.
pub fn content_hash(h: &Hypergraph) -> String {
    let digest = Sha256::digest(to_text(h, None).as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        write!(s, "{b:02x}").unwrap();
        s
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_hypergraph(&text).map_err(|source| IoError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn save(
    h: &Hypergraph,
    labels: Option<&[String]>,
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, to_text(h, labels)).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes any serializable document as pretty JSON with a trailing newline.
pub fn write_json<T: serde::Serialize>(value: &T, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| IoError::Io {
        path: path.display().to_string(),
        source,
    })
}
