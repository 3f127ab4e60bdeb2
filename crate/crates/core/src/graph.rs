//! Simple undirected labeled graphs over at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u128` row per vertex, so neighborhood unions
//! and set membership are single mask operations.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Bit mask over vertex ids `0..128`.
pub type Mask = u128;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex id {id} out of range for a graph of order {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("operation requires a non-empty graph")]
    Empty,
}

#[inline]
pub(crate) const fn bit(v: usize) -> Mask {
    1 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Debug, Clone)]
pub struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: Mask) -> Bits {
    Bits(mask)
}

/// A subset of the vertices of a graph of a fixed order.
///
/// Iteration always yields ids in ascending order, which is the canonical
/// form used when comparing witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: Mask,
    order: usize,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        Self { mask: 0, order }
    }

    pub fn full(order: usize) -> Self {
        Self {
            mask: full_mask(order),
            order,
        }
    }

    pub fn from_mask(order: usize, mask: Mask) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::TooLarge(order));
        }
        let stray = mask & !full_mask(order);
        if stray != 0 {
            return Err(GraphError::OutOfRange {
                id: stray.trailing_zeros() as usize,
                n: order,
            });
        }
        Ok(Self { mask, order })
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(
        order: usize,
        ids: I,
    ) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::TooLarge(order));
        }
        let mut mask = 0;
        for id in ids {
            if id >= order {
                return Err(GraphError::OutOfRange { id, n: order });
            }
            mask |= bit(id);
        }
        Ok(Self { mask, order })
    }

    #[inline]
    pub fn mask(&self) -> Mask {
        self.mask
    }

    /// Order of the graph this set lives in.
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.mask & bit(v) != 0
    }

    pub fn iter(&self) -> Bits {
        bits(self.mask)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Vertices of the same graph not in this set.
    pub fn complement(&self) -> Self {
        Self {
            mask: !self.mask & full_mask(self.order),
            order: self.order,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Compare as sorted id tuples. Among sets of equal size this is the
    /// lexicographic order that defines canonical witnesses.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Simple undirected graph with dense bit-mask adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Self {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Build from an edge list. Duplicate pairs (in either orientation)
    /// collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from raw adjacency rows, validating symmetry and loop-freeness.
    pub fn from_adjacency(adj: Vec<Mask>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let full = full_mask(n);
        let mut degree_sum = 0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::OutOfRange {
                    id: (row & !full).trailing_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
            degree_sum += row.count_ones() as usize;
        }
        Ok(Self {
            n,
            adj,
            m: degree_sum / 2,
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for id in [u, v] {
            if id >= self.n {
                return Err(GraphError::OutOfRange { id, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u] & bit(v) == 0 {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
            self.m += 1;
        }
        Ok(())
    }

    /// Vertex count.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn all(&self) -> Mask {
        full_mask(self.n)
    }

    /// Open neighborhood row of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn row(&self, v: usize) -> Mask {
        self.adj[v]
    }

    #[inline]
    pub fn closed_row(&self, v: usize) -> Mask {
        self.adj[v] | bit(v)
    }

    pub fn rows(&self) -> &[Mask] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    fn check_id(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::OutOfRange { id: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `N(v)`: vertices adjacent to `v`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_id(v)?;
        Ok(VertexSet {
            mask: self.adj[v],
            order: self.n,
        })
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_id(v)?;
        Ok(VertexSet {
            mask: self.closed_row(v),
            order: self.n,
        })
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::Empty)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::Empty)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Vertices adjacent to every other vertex, ascending.
    pub fn universal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let full = self.all();
        (0..self.n).filter(move |&v| self.closed_row(v) == full)
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    /// `start` must be a member of `within`.
    pub fn reach_within(&self, start: usize, within: Mask) -> Mask {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with at most
    /// one vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_within(0, self.all()) == self.all()
    }

    /// Whether `G[within]` is connected, without materializing the subgraph.
    pub fn is_connected_within(&self, within: Mask) -> bool {
        if within.count_ones() <= 1 {
            return true;
        }
        let start = within.trailing_zeros() as usize;
        self.reach_within(start, within) == within
    }

    /// Connected components of `G[within]`, each as a mask, ordered by
    /// smallest member.
    pub fn components_within(&self, within: Mask) -> Vec<Mask> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Induced subgraph on `set`. Vertex `i` of the result is the `i`-th
    /// smallest member of `set`; the returned vector maps new ids back to
    /// original ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = bits(set.mask() & self.all()).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & set.mask()).fold(0, |acc, u| acc | bit(pos[u])))
            .collect::<Vec<Mask>>();
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        (
            Graph {
                n: keep.len(),
                adj,
                m,
            },
            keep,
        )
    }

    /// Graphviz rendering. Formatting is informational only.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_marked(name, None)
    }

    /// As [`Graph::to_dot`], with the members of `marked` filled.
    pub fn to_dot_marked(&self, name: &str, marked: Option<&VertexSet>) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            if marked.is_some_and(|s| s.contains(v)) {
                out.push_str(&format!("  {v} [style=filled];\n"));
            } else {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `{"n": int, "edges": [[u, v], ...]}` interchange form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}
