//! Lexicographic, Cartesian, corona and direct products.
//!
//! Every binary product except the corona uses row-major (G-major) ids:
//! `(u, v) ↦ u·|V(H)| + v`. The corona keeps G's ids `0..|V(G)|` and places
//! the copy `H^x` in the block starting at `|V(G)| + x·|V(H)|`. Iterated
//! direct powers of complete graphs use mixed-radix row-major ids.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, full_mask, Graph, GraphError, Mask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("coordinate {coord} out of range (limit {limit})")]
    OutOfRange { coord: usize, limit: usize },
    #[error("product factors must have at least one vertex")]
    EmptyFactor,
    #[error("coordinate tuple has length {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Corona,
    Direct,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Corona => "corona",
            ProductKind::Direct => "direct",
        }
    }
}

/// Row-major pairing `(u, v) ↦ u·|V(H)| + v`.
pub fn pair_index(u: usize, v: usize, h_order: usize) -> Result<usize, ProductError> {
    if v >= h_order {
        return Err(ProductError::OutOfRange {
            coord: v,
            limit: h_order,
        });
    }
    Ok(u * h_order + v)
}

/// Inverse of [`pair_index`].
pub fn unpair(id: usize, h_order: usize) -> Result<(usize, usize), ProductError> {
    if h_order == 0 {
        return Err(ProductError::EmptyFactor);
    }
    Ok((id / h_order, id % h_order))
}

/// Mixed-radix row-major ids over `0..n_1 × ... × 0..n_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedRadix {
    orders: Vec<usize>,
}

impl MixedRadix {
    pub fn new(orders: Vec<usize>) -> Self {
        Self { orders }
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, coords: &[usize]) -> Result<usize, ProductError> {
        if coords.len() != self.orders.len() {
            return Err(ProductError::Arity {
                expected: self.orders.len(),
                found: coords.len(),
            });
        }
        let mut id = 0;
        for (&c, &n) in coords.iter().zip(&self.orders) {
            if c >= n {
                return Err(ProductError::OutOfRange { coord: c, limit: n });
            }
            id = id * n + c;
        }
        Ok(id)
    }

    pub fn decode(&self, mut id: usize) -> Result<Vec<usize>, ProductError> {
        let total = self.len();
        if id >= total {
            return Err(ProductError::OutOfRange {
                coord: id,
                limit: total,
            });
        }
        let mut coords = vec![0; self.orders.len()];
        for (slot, &n) in coords.iter_mut().zip(&self.orders).rev() {
            *slot = id % n;
            id /= n;
        }
        Ok(coords)
    }
}

/// The inputs a product was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factors {
    Binary(Graph, Graph),
    /// Orders `n_1..n_t` of the complete graphs in `K_{n_1} × ... × K_{n_t}`.
    CompletePower(Vec<usize>),
}

/// A product graph together with the bijection between factor
/// coordinates and product vertex ids.
#[derive(Debug, Clone)]
pub struct ProductInstance {
    pub kind: ProductKind,
    pub factors: Factors,
    pub product: Graph,
}

impl ProductInstance {
    /// Factor coordinates of product vertex `id`.
    ///
    /// Pairs are `[u, v]`. In a corona, a G-vertex is `[x]` and a vertex of
    /// the copy `H^x` is `[x, w]`. Direct powers give the full tuple.
    pub fn coordinates(&self, id: usize) -> Result<Vec<usize>, ProductError> {
        let total = self.product.order();
        if id >= total {
            return Err(ProductError::OutOfRange {
                coord: id,
                limit: total,
            });
        }
        match (&self.factors, self.kind) {
            (Factors::Binary(g, h), ProductKind::Corona) => {
                if id < g.order() {
                    Ok(vec![id])
                } else {
                    let (x, w) = unpair(id - g.order(), h.order())?;
                    Ok(vec![x, w])
                }
            }
            (Factors::Binary(_, h), _) => {
                let (u, v) = unpair(id, h.order())?;
                Ok(vec![u, v])
            }
            (Factors::CompletePower(orders), _) => MixedRadix::new(orders.clone()).decode(id),
        }
    }

    /// Product id of the given factor coordinates; inverse of
    /// [`coordinates`](Self::coordinates).
    pub fn id_of(&self, coords: &[usize]) -> Result<usize, ProductError> {
        match (&self.factors, self.kind) {
            (Factors::Binary(g, h), ProductKind::Corona) => match *coords {
                [x] if x < g.order() => Ok(x),
                [x, w] if x < g.order() => Ok(g.order() + pair_index(x, w, h.order())?),
                [x, ..] if coords.len() <= 2 => Err(ProductError::OutOfRange {
                    coord: x,
                    limit: g.order(),
                }),
                _ => Err(ProductError::Arity {
                    expected: 2,
                    found: coords.len(),
                }),
            },
            (Factors::Binary(g, h), _) => match *coords {
                [u, v] if u < g.order() => pair_index(u, v, h.order()),
                [u, _] => Err(ProductError::OutOfRange {
                    coord: u,
                    limit: g.order(),
                }),
                _ => Err(ProductError::Arity {
                    expected: 2,
                    found: coords.len(),
                }),
            },
            (Factors::CompletePower(orders), _) => MixedRadix::new(orders.clone()).encode(coords),
        }
    }

    /// The whole index map, entry `i` holding the coordinates of vertex `i`.
    pub fn index_map(&self) -> Vec<Vec<usize>> {
        (0..self.product.order())
            .map(|id| self.coordinates(id).expect("id in range"))
            .collect()
    }
}

fn block(start: usize, len: usize) -> Mask {
    full_mask(len) << start
}

fn nonempty(g: &Graph, h: &Graph) -> Result<(), ProductError> {
    if g.order() == 0 || h.order() == 0 {
        Err(ProductError::EmptyFactor)
    } else {
        Ok(())
    }
}

fn checked_order(a: usize, b: usize) -> Result<usize, ProductError> {
    let n = a.saturating_mul(b);
    if n > crate::graph::MAX_ORDER {
        Err(GraphError::TooLarge(n).into())
    } else {
        Ok(n)
    }
}

/// Spread the row of `v` in H into the block of G-vertex `u`.
fn shifted(row: Mask, u: usize, h_order: usize) -> Mask {
    row << (u * h_order)
}

/// `G ∘ H`: `(u1,u2) ~ (v1,v2)` iff `u1 ~ v1` in G, or `u1 = v1` and
/// `u2 ~ v2` in H.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<ProductInstance, ProductError> {
    nonempty(g, h)?;
    let (ng, nh) = (g.order(), h.order());
    let n = checked_order(ng, nh)?;
    let mut adj = vec![0; n];
    for u in 0..ng {
        let across = bits(g.row(u)).fold(0, |acc, x| acc | block(x * nh, nh));
        for v in 0..nh {
            adj[u * nh + v] = across | shifted(h.row(v), u, nh);
        }
    }
    Ok(ProductInstance {
        kind: ProductKind::Lexicographic,
        factors: Factors::Binary(g.clone(), h.clone()),
        product: Graph::from_adjacency(adj)?,
    })
}

/// `G □ H`: exactly one coordinate moves, along an edge of its factor.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<ProductInstance, ProductError> {
    nonempty(g, h)?;
    let (ng, nh) = (g.order(), h.order());
    let n = checked_order(ng, nh)?;
    let mut adj = vec![0; n];
    for u in 0..ng {
        for v in 0..nh {
            let along_g = bits(g.row(u)).fold(0, |acc, x| acc | (1 << (x * nh + v)));
            adj[u * nh + v] = along_g | shifted(h.row(v), u, nh);
        }
    }
    Ok(ProductInstance {
        kind: ProductKind::Cartesian,
        factors: Factors::Binary(g.clone(), h.clone()),
        product: Graph::from_adjacency(adj)?,
    })
}

/// `G ∘c H`: G plus one copy of H per G-vertex, each copy fully joined to
/// its G-vertex.
pub fn corona(g: &Graph, h: &Graph) -> Result<ProductInstance, ProductError> {
    nonempty(g, h)?;
    let (ng, nh) = (g.order(), h.order());
    let n = checked_order(ng, nh + 1)?;
    let mut adj = vec![0; n];
    for x in 0..ng {
        let start = ng + x * nh;
        adj[x] = g.row(x) | block(start, nh);
        for w in 0..nh {
            adj[start + w] = (h.row(w) << start) | (1 << x);
        }
    }
    Ok(ProductInstance {
        kind: ProductKind::Corona,
        factors: Factors::Binary(g.clone(), h.clone()),
        product: Graph::from_adjacency(adj)?,
    })
}

/// `G × H`: both coordinates move along edges of their factors.
pub fn direct(g: &Graph, h: &Graph) -> Result<ProductInstance, ProductError> {
    let (ng, nh) = (g.order(), h.order());
    let n = checked_order(ng, nh)?;
    let mut adj = vec![0; n];
    for u in 0..ng {
        for v in 0..nh {
            adj[u * nh + v] = bits(g.row(u)).fold(0, |acc, x| acc | shifted(h.row(v), x, nh));
        }
    }
    Ok(ProductInstance {
        kind: ProductKind::Direct,
        factors: Factors::Binary(g.clone(), h.clone()),
        product: Graph::from_adjacency(adj)?,
    })
}

/// `K_{n_1} × ... × K_{n_t}` built directly over coordinate tuples: two
/// tuples are adjacent iff they differ in every position.
pub fn direct_power_complete(orders: &[usize]) -> Result<ProductInstance, ProductError> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(ProductError::EmptyFactor);
    }
    let radix = MixedRadix::new(orders.to_vec());
    let n = orders
        .iter()
        .try_fold(1usize, |acc, &k| checked_order(acc, k))?;
    let tuples: Vec<Vec<usize>> = (0..n)
        .map(|id| radix.decode(id).expect("in range"))
        .collect();
    let mut adj = vec![0; n];
    for a in 0..n {
        for b in (a + 1)..n {
            if tuples[a].iter().zip(&tuples[b]).all(|(x, y)| x != y) {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    Ok(ProductInstance {
        kind: ProductKind::Direct,
        factors: Factors::CompletePower(orders.to_vec()),
        product: Graph::from_adjacency(adj)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn pairing() {
        assert_eq!(pair_index(0, 0, 2), Ok(0));
        assert_eq!(pair_index(2, 1, 2), Ok(5));
        assert_eq!(unpair(5, 2), Ok((2, 1)));
        assert!(pair_index(0, 2, 2).is_err());
        assert!(unpair(3, 0).is_err());
    }

    #[test]
    fn lex_k2_k2_is_k4() {
        let k2 = complete(2);
        let p = lexicographic(&k2, &k2).unwrap().product;
        assert_eq!(p, complete(4));
    }

    #[test]
    fn lex_k1_collapses_to_h() {
        let h = path(4);
        let p = lexicographic(&complete(1), &h).unwrap();
        assert_eq!(p.product, h);
        // V(G)={p}, V(H)={x,y}: single edge {(p,x),(p,y)}
        let p = lexicographic(&complete(1), &complete(2)).unwrap();
        assert_eq!(edge_set(&p.product), vec![(0, 1)]);
        assert_eq!(p.index_map(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn cartesian_prism() {
        let p = cartesian(&complete(3), &complete(2)).unwrap();
        assert_eq!((p.product.order(), p.product.size()), (6, 9));
        // (a,x)=0 (a,y)=1 (b,x)=2 (b,y)=3 (c,x)=4 (c,y)=5
        let expected = vec![
            (0, 1),
            (2, 3),
            (4, 5),
            (0, 2),
            (0, 4),
            (1, 3),
            (1, 5),
            (2, 4),
            (3, 5),
        ];
        let mut expected: Vec<_> = expected;
        expected.sort();
        assert_eq!(edge_set(&p.product), expected);
    }

    #[test]
    fn cartesian_identities() {
        let h = cycle(5).unwrap();
        assert_eq!(cartesian(&complete(1), &h).unwrap().product, h);
        let c4 = cartesian(&path(2), &path(2)).unwrap().product;
        // (0,0)-(0,1)-(1,1)-(1,0)-(0,0)
        assert_eq!(edge_set(&c4), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn corona_examples() {
        assert_eq!(
            corona(&complete(1), &complete(1)).unwrap().product,
            complete(2)
        );

        let p = corona(&path(2), &path(3)).unwrap();
        assert_eq!((p.product.order(), p.product.size()), (8, 11));

        let p = corona(&complete(2), &complete(1)).unwrap();
        assert_eq!(edge_set(&p.product), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(p.coordinates(3).unwrap(), vec![1, 0]);
        assert_eq!(p.id_of(&[1, 0]).unwrap(), 3);
        assert_eq!(p.id_of(&[1]).unwrap(), 1);
    }

    #[test]
    fn direct_examples() {
        let p = direct(&complete(2), &complete(2)).unwrap().product;
        assert_eq!(edge_set(&p), vec![(0, 3), (1, 2)]);

        let p = direct_power_complete(&[2, 2, 2]).unwrap().product;
        assert_eq!((p.order(), p.size()), (8, 4));
        assert!((0..8).all(|v| p.degree(v) == 1));

        let p = direct_power_complete(&[4, 4, 4]).unwrap();
        assert_eq!(p.product.order(), 64);
        assert!((0..64).all(|v| p.product.degree(v) == 27));
        // brute-force neighbors of (1,2,3)
        let id = p.id_of(&[1, 2, 3]).unwrap();
        let mut brute = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    if a != 1 && b != 2 && c != 3 {
                        brute.push(a * 16 + b * 4 + c);
                    }
                }
            }
        }
        assert_eq!(p.product.open_neighborhood(id).unwrap().to_vec(), brute);
    }

    #[test]
    fn iterated_matches_binary_for_two_factors() {
        let a = direct_power_complete(&[3, 4]).unwrap().product;
        let b = direct(&complete(3), &complete(4)).unwrap().product;
        assert_eq!(a, b);
    }

    #[test]
    fn mixed_radix_round_trip() {
        let r = MixedRadix::new(vec![5, 4, 4]);
        assert_eq!(r.encode(&[1, 1, 1]), Ok(21));
        assert_eq!(r.decode(79), Ok(vec![4, 3, 3]));
        assert!(r.encode(&[5, 0, 0]).is_err());
        assert!(r.encode(&[1, 0]).is_err());
        assert!(r.decode(80).is_err());
    }

    #[test]
    fn product_errors() {
        let e = Graph::empty(0).unwrap();
        assert_eq!(
            lexicographic(&e, &path(2)).unwrap_err(),
            ProductError::EmptyFactor
        );
        assert!(direct_power_complete(&[]).is_err());
        assert!(direct_power_complete(&[3, 0]).is_err());
        assert!(matches!(
            cartesian(&complete(12), &complete(11)),
            Err(ProductError::Graph(GraphError::TooLarge(132)))
        ));
        assert_eq!(direct(&e, &star(3)).unwrap().product.order(), 0);
    }

    #[test]
    fn corona_cut_vertices() {
        let p = corona(&path(3), &complete(2)).unwrap().product;
        for x in 0..3 {
            let rest = p.all() & !(1u128 << x);
            assert!(!p.is_connected_within(rest));
        }
    }
}
