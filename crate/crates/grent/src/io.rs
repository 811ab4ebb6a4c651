//! Graph file formats.
//!
//! * Edge lists: one whitespace-separated pair of integer labels per line,
//!   `%` and `#` start comment lines. A third numeric column (a weight, as in
//!   many published `.edges` files) is accepted and ignored.
//! * MatrixMarket: `%%MatrixMarket matrix coordinate pattern symmetric` only,
//!   1-based indices.
//!
//! Both loaders drop self-loops and repeated edges and count what they drop.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use grent_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported format: {0}")]
    Format(String),
    #[error("no edges found")]
    Empty,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Counts of input records that were discarded to keep the graph simple.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadWarnings {
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

impl LoadWarnings {
    pub fn total(&self) -> usize {
        self.duplicate_edges + self.self_loops
    }
}

/// A loaded graph; `labels[v]` is the label vertex `v` had in the file.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub warnings: LoadWarnings,
}

fn parse_label(token: &str, line: usize) -> Result<u64, LoadError> {
    token.parse().map_err(|_| LoadError::Parse {
        line,
        message: format!("expected a non-negative integer label, found {token:?}"),
    })
}

fn is_comment(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('%') || t.starts_with('#')
}

struct Builder {
    ids: HashMap<u64, usize>,
    labels: Vec<u64>,
    edges: Vec<(usize, usize)>,
    warnings: LoadWarnings,
}

impl Builder {
    fn new() -> Self {
        Builder { ids: HashMap::new(), labels: Vec::new(), edges: Vec::new(), warnings: LoadWarnings::default() }
    }

    fn id(&mut self, label: u64) -> usize {
        *self.ids.entry(label).or_insert_with(|| {
            self.labels.push(label);
            self.labels.len() - 1
        })
    }

    fn edge(&mut self, a: u64, b: u64) {
        let u = self.id(a);
        let v = self.id(b);
        if u == v {
            self.warnings.self_loops += 1;
        } else {
            self.edges.push((u, v));
        }
    }

    fn finish(self, n: usize) -> Result<LoadedGraph, LoadError> {
        if self.edges.is_empty() {
            return Err(LoadError::Empty);
        }
        let mut graph = Graph::empty(n);
        let mut duplicates = 0;
        for &(u, v) in &self.edges {
            if !graph.add_edge(u, v).expect("ids are in range and distinct") {
                duplicates += 1;
            }
        }
        Ok(LoadedGraph {
            graph,
            labels: self.labels,
            warnings: LoadWarnings { duplicate_edges: duplicates, ..self.warnings },
        })
    }
}

/// Parses an edge list; labels are renumbered `0..n` in order of first
/// appearance.
pub fn parse_edge_list(text: &str) -> Result<LoadedGraph, LoadError> {
    let mut b = Builder::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if is_comment(line) {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let weight_ok = tokens.len() == 3 && tokens[2].parse::<f64>().is_ok();
        if tokens.len() != 2 && !weight_ok {
            return Err(LoadError::Parse {
                line: lineno,
                message: format!("expected two labels, found {} fields", tokens.len()),
            });
        }
        let a = parse_label(tokens[0], lineno)?;
        let c = parse_label(tokens[1], lineno)?;
        b.edge(a, c);
    }
    let n = b.labels.len();
    b.finish(n)
}

/// Parses a symmetric pattern MatrixMarket file. Vertex `v` is matrix index
/// `v + 1`.
pub fn parse_matrix_market(text: &str) -> Result<LoadedGraph, LoadError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(LoadError::Empty)?;
    let fields: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if fields.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(LoadError::Format("missing %%MatrixMarket header".into()));
    }
    if fields[1..] != ["matrix", "coordinate", "pattern", "symmetric"] {
        return Err(LoadError::Format(format!(
            "only \"matrix coordinate pattern symmetric\" is supported, found \"{}\"",
            fields[1..].join(" ")
        )));
    }
    let mut size: Option<(usize, usize)> = None;
    let mut b = Builder::new();
    let mut entries = 0;
    for (i, line) in lines {
        let lineno = i + 1;
        if is_comment(line) {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some((n, nnz)) = size else {
            if tokens.len() != 3 {
                return Err(LoadError::Parse { line: lineno, message: "expected \"rows cols entries\"".into() });
            }
            let dims: Vec<usize> = tokens
                .iter()
                .map(|t| t.parse().map_err(|_| LoadError::Parse { line: lineno, message: format!("bad size {t:?}") }))
                .collect::<Result<_, _>>()?;
            if dims[0] != dims[1] {
                return Err(LoadError::Format(format!("matrix is {}×{}, not square", dims[0], dims[1])));
            }
            size = Some((dims[0], dims[2]));
            // Matrix indices are the labels; keep vertex v at index v + 1.
            for label in 1..=dims[0] as u64 {
                b.id(label);
            }
            continue;
        };
        if tokens.len() != 2 {
            return Err(LoadError::Parse {
                line: lineno,
                message: format!("expected two indices, found {} fields", tokens.len()),
            });
        }
        let r = parse_label(tokens[0], lineno)?;
        let c = parse_label(tokens[1], lineno)?;
        for idx in [r, c] {
            if idx == 0 || idx as usize > n {
                return Err(LoadError::Parse { line: lineno, message: format!("index {idx} outside 1..={n}") });
            }
        }
        entries += 1;
        if entries > nnz {
            return Err(LoadError::Parse { line: lineno, message: format!("more than the declared {nnz} entries") });
        }
        b.edge(r, c);
    }
    let Some((n, nnz)) = size else {
        return Err(LoadError::Format("missing size line".into()));
    };
    if entries != nnz {
        return Err(LoadError::Format(format!("declared {nnz} entries, found {entries}")));
    }
    b.finish(n)
}

/// Parses either format, recognizing MatrixMarket by its header.
pub fn parse_graph(text: &str) -> Result<LoadedGraph, LoadError> {
    if text.trim_start().to_ascii_lowercase().starts_with("%%matrixmarket") {
        parse_matrix_market(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn load_graph(path: &Path) -> Result<LoadedGraph, LoadError> {
    parse_graph(&fs::read_to_string(path)?)
}

/// Writes `u v` lines with `u < v`, sorted.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn save_edge_list(g: &Graph, path: &Path) -> io::Result<()> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    write_edge_list(g, &mut out)?;
    out.flush()
}
