//! Standard graph families and a seeded random connected generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Default number of draws `random_connected` makes before giving up.
pub const DEFAULT_DRAW_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("no connected graph after {0} draws")]
    DrawCapExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `K_n`. Panics if `n` exceeds the supported order.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph within supported order")
}

/// `P_n`, vertices in path order.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path within supported order")
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::CycleTooShort(n));
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?)
}

/// `K_{1,n-1}` with the center at id 0.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star within supported order")
}

/// Draw `G(n, p)` graphs from a ChaCha stream seeded with `seed` until one
/// is connected.
pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GenerateError> {
    random_connected_capped(n, edge_prob, seed, DEFAULT_DRAW_CAP)
}

pub fn random_connected_capped(
    n: usize,
    edge_prob: f64,
    seed: u64,
    cap: usize,
) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenerateError::BadProbability(edge_prob));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cap {
        let g = random_gnp(n, edge_prob, &mut rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenerateError::DrawCapExceeded(cap))
}

/// One seeded `G(n, p)` draw, connected or not.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenerateError::BadProbability(edge_prob));
    }
    Ok(random_gnp(
        n,
        edge_prob,
        &mut ChaCha8Rng::seed_from_u64(seed),
    )?)
}

pub(crate) fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
