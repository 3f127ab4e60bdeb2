//! Graph corpora: exhaustive labeled enumeration, seeded random draws and
//! graph6 files.

use std::path::PathBuf;

use thiserror::Error;

use crate::generators::{random_connected, GenerateError};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};
use crate::solvers::{DominationKind, Exact, SolveError};

/// Largest order accepted by the exhaustive mode.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("exhaustive order {0} outside 1..={MAX_EXHAUSTIVE_ORDER}")]
    OrderOutOfRange(usize),
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    /// Every labeled connected graph on `1..=max_n` vertices.
    Exhaustive { max_n: usize },
    /// `count` connected graphs, draw `i` seeded with `seed + i`.
    Random {
        n: usize,
        count: usize,
        edge_prob: f64,
        seed: u64,
    },
    /// One graph6 string per line; blank lines are skipped.
    File { path: PathBuf },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub connected_only: bool,
    /// Keep only graphs with `γ = 1` (`Some(true)`) or `γ ≠ 1` (`Some(false)`).
    pub gamma_one: Option<bool>,
}

impl Filters {
    fn keep(&self, g: &Graph, exact: &Exact) -> Result<bool, SolveError> {
        let n = g.order();
        if self.min_order.is_some_and(|m| n < m) || self.max_order.is_some_and(|m| n > m) {
            return Ok(false);
        }
        if self.connected_only && !g.is_connected() {
            return Ok(false);
        }
        if let Some(want) = self.gamma_one {
            return Ok((exact.value(g, DominationKind::Domination)? == 1) == want);
        }
        Ok(true)
    }
}

/// Vertex pairs in graph6 bit order.
fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, by ascending edge
/// mask over the graph6 pair order.
pub fn enumerate_labeled(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        n <= MAX_EXHAUSTIVE_ORDER,
        "labeled enumeration limited to n <= {MAX_EXHAUSTIVE_ORDER}"
    );
    let pairs = pair_order(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are in range")
    })
}

/// Labeled connected graphs for `n = 1..=max_n`, by order then edge mask.
pub fn enumerate_labeled_connected(max_n: usize) -> Result<Vec<Graph>, CorpusError> {
    if !(1..=MAX_EXHAUSTIVE_ORDER).contains(&max_n) {
        return Err(CorpusError::OrderOutOfRange(max_n));
    }
    Ok((1..=max_n)
        .flat_map(enumerate_labeled)
        .filter(Graph::is_connected)
        .collect())
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, CorpusError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim().as_bytes()).map_err(|source| CorpusError::Parse {
                line: i + 1,
                source,
            })
        })
        .collect()
}

pub fn load_corpus(
    spec: &CorpusSpec,
    filters: &Filters,
    exact: &Exact,
) -> Result<Vec<Graph>, CorpusError> {
    let graphs = match spec {
        CorpusSpec::Exhaustive { max_n } => enumerate_labeled_connected(*max_n)?,
        CorpusSpec::Random {
            n,
            count,
            edge_prob,
            seed,
        } => (0..*count as u64)
            .map(|i| random_connected(*n, *edge_prob, seed.wrapping_add(i)))
            .collect::<Result<_, _>>()?,
        CorpusSpec::File { path } => {
            let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
                path: path.clone(),
                source,
            })?;
            parse_graph6_lines(&text)?
        }
    };
    let mut kept = Vec::with_capacity(graphs.len());
    for g in graphs {
        if filters.keep(&g, exact)? {
            kept.push(g);
        }
    }
    Ok(kept)
}
