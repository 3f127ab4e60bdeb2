//! Reference enumerator: cardinalities `k = 0, 1, ...`, and within each `k`
//! the k-subsets in lexicographic order. The first valid subset is the
//! canonical witness by construction.

use crate::combinations::Combinations;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    check_total_precondition, oracle, Budget, Certificate, DominationKind, SolveError, SolverKind,
};

pub fn solve_exact(
    g: &Graph,
    kind: DominationKind,
    budget: Budget,
) -> Result<Certificate, SolveError> {
    check_total_precondition(g, kind)?;
    let n = g.order();
    let mut nodes = 0;
    for k in 0..=n {
        for combo in Combinations::new(n, k) {
            budget.charge(&mut nodes)?;
            let s = VertexSet::from_ids(n, combo).expect("ids below order");
            if oracle::is_valid(g, kind, &s) {
                return Ok(Certificate {
                    kind,
                    value: k,
                    witness: s,
                    solver: SolverKind::Baseline,
                    nodes_expanded: nodes,
                });
            }
        }
    }
    unreachable!("the full vertex set is valid for every kind once preconditions hold")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};
    use DominationKind::*;

    fn solve(g: &Graph, kind: DominationKind) -> (usize, Vec<usize>) {
        let c = solve_exact(g, kind, Budget::UNLIMITED).unwrap();
        (c.value, c.witness.to_vec())
    }

    #[test]
    fn complete_graphs() {
        for n in 1..6 {
            assert_eq!(solve(&complete(n), OuterConnected), (1, vec![0]));
        }
    }

    #[test]
    fn path_p4() {
        assert_eq!(solve(&path(4), Domination), (2, vec![0, 2]));
        assert_eq!(solve(&path(4), Total), (2, vec![1, 2]));
        assert_eq!(solve(&path(4), OuterConnected), (2, vec![0, 3]));
    }

    #[test]
    fn star_and_cycles() {
        assert_eq!(solve(&star(4), OuterConnected), (3, vec![0, 1, 2]));
        assert_eq!(solve(&cycle(4).unwrap(), OuterConnected).0, 2);
        assert_eq!(solve(&cycle(6).unwrap(), OuterConnected).0, 4);
        assert_eq!(solve(&cycle(5).unwrap(), OuterConnected).0, 3);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0).unwrap();
        for kind in DominationKind::ALL {
            assert_eq!(solve(&g, kind), (0, vec![]));
        }
    }

    #[test]
    fn total_needs_no_isolated_vertex() {
        assert_eq!(
            solve_exact(&complete(1), Total, Budget::UNLIMITED),
            Err(SolveError::NoTotalDominatingSet(0))
        );
    }

    #[test]
    fn budget() {
        assert_eq!(
            solve_exact(&cycle(6).unwrap(), OuterConnected, Budget(Some(10))),
            Err(SolveError::BudgetExhausted(10))
        );
    }
}
