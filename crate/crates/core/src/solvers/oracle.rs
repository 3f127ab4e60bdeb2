//! Validity predicates. These are the ground truth for every solver and
//! every constructed witness, so they stay deliberately literal.

use crate::graph::{Graph, VertexSet};
use crate::solvers::DominationKind;

/// Every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| s.contains(v) || s.iter().any(|u| g.has_edge(u, v)))
}

/// Every vertex, members included, is adjacent to a member of `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).all(|v| s.iter().any(|u| g.has_edge(u, v)))
}

/// `s` dominates and `G[V ∖ s]` is connected (at most one vertex counts
/// as connected).
pub fn is_outer_connected_dominating(g: &Graph, s: &VertexSet) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    let (rest, _) = g.induced_subgraph(&s.complement());
    rest.is_connected()
}

pub fn is_valid(g: &Graph, kind: DominationKind, s: &VertexSet) -> bool {
    match kind {
        DominationKind::Domination => is_dominating(g, s),
        DominationKind::Total => is_total_dominating(g, s),
        DominationKind::OuterConnected => is_outer_connected_dominating(g, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn domination() {
        let p4 = path(4);
        assert!(is_dominating(&p4, &set(4, &[1, 2])));
        assert!(!is_dominating(&p4, &set(4, &[0])));
        assert!(is_dominating(&p4, &VertexSet::full(4)));
        assert!(!is_dominating(&p4, &VertexSet::empty(4)));
        assert!(is_dominating(
            &Graph::empty(0).unwrap(),
            &VertexSet::empty(0)
        ));
    }

    #[test]
    fn total_domination() {
        assert!(is_total_dominating(&path(4), &set(4, &[1, 2])));
        assert!(!is_total_dominating(&complete(3), &set(3, &[0])));
        assert!(is_total_dominating(&star(4), &set(4, &[0, 1])));
        assert!(!is_total_dominating(&path(4), &set(4, &[0, 3])));
    }

    #[test]
    fn outer_connected() {
        assert!(is_outer_connected_dominating(
            &cycle(4).unwrap(),
            &set(4, &[0, 1])
        ));
        assert!(!is_outer_connected_dominating(&path(4), &set(4, &[1, 2])));
        assert!(is_outer_connected_dominating(&path(4), &set(4, &[0, 3])));
        assert!(is_outer_connected_dominating(&path(4), &VertexSet::full(4)));
        // {center, leaf} leaves two isolated leaves
        assert!(!is_outer_connected_dominating(&star(4), &set(4, &[0, 1])));
        assert!(is_outer_connected_dominating(&star(4), &set(4, &[1, 2, 3])));
    }
}
