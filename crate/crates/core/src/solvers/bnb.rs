//! Branch and bound over covers.
//!
//! Each node picks the uncovered vertex with the fewest remaining
//! candidates that could cover it and branches over those candidates in
//! ascending order, excluding earlier siblings from later branches. Nodes
//! are pruned with `|chosen| + ⌈uncovered / best single gain⌉`.
//!
//! For `γ̃c` a leaf is any dominating set `D`. Every outer-connected
//! dominating superset of `D` has its complement inside one component of
//! `G − D`, so the cheapest completion keeps the largest admissible
//! component and adds everything else.
//!
//! Once the optimum `k` is known, the canonical witness is recovered by
//! deciding vertices `0, 1, ...` in turn: include `v` iff some valid
//! `k`-set still contains the current inclusions plus `v` and avoids the
//! current exclusions.

use crate::graph::{bits, Graph, Mask, VertexSet};
use crate::solvers::{
    check_total_precondition, Budget, Certificate, DominationKind, SolveError, SolverKind,
};

pub fn solve_bnb(
    g: &Graph,
    kind: DominationKind,
    budget: Budget,
) -> Result<Certificate, SolveError> {
    check_total_precondition(g, kind)?;
    let mut search = Search::new(g, kind, budget);

    let mut best = search.greedy();
    while best.count_ones() > 0 {
        let limit = best.count_ones() as usize - 1;
        match search.feasible(0, 0, limit)? {
            Some(better) => best = better,
            None => break,
        }
    }
    let value = best.count_ones() as usize;

    let mut inside: Mask = 0;
    let mut outside: Mask = 0;
    for v in 0..g.order() {
        if inside.count_ones() as usize == value {
            break;
        }
        let trial = inside | (1 << v);
        if search.feasible(trial, outside, value)?.is_some() {
            inside = trial;
        } else {
            outside |= 1 << v;
        }
    }
    debug_assert_eq!(inside.count_ones() as usize, value);

    Ok(Certificate {
        kind,
        value,
        witness: VertexSet::from_mask(g.order(), inside).expect("mask within order"),
        solver: SolverKind::Bnb,
        nodes_expanded: search.nodes,
    })
}

struct Search<'g> {
    g: &'g Graph,
    kind: DominationKind,
    /// `cover[v]`: vertices dominated by putting `v` in the set. Also the
    /// set of vertices able to dominate `v`, by symmetry.
    cover: Vec<Mask>,
    full: Mask,
    /// Vertices that must stay outside the set in the current query.
    forbidden: Mask,
    budget: Budget,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, kind: DominationKind, budget: Budget) -> Self {
        let cover = (0..g.order())
            .map(|v| match kind {
                DominationKind::Total => g.row(v),
                _ => g.closed_row(v),
            })
            .collect();
        Self {
            g,
            kind,
            cover,
            full: g.all(),
            forbidden: 0,
            budget,
            nodes: 0,
        }
    }

    fn covered_by(&self, set: Mask) -> Mask {
        bits(set).fold(0, |acc, v| acc | self.cover[v])
    }

    /// Max-gain greedy cover, completed. Always a valid (not necessarily
    /// minimum) set.
    fn greedy(&self) -> Mask {
        let mut chosen = 0;
        let mut covered = 0;
        while covered != self.full {
            let uncovered = self.full & !covered;
            let (v, _) = (0..self.g.order())
                .filter(|v| chosen & (1 << v) == 0)
                .map(|v| (v, (self.cover[v] & uncovered).count_ones()))
                .fold(
                    (usize::MAX, 0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
            chosen |= 1 << v;
            covered |= self.cover[v];
        }
        self.complete(chosen)
            .expect("no forbidden vertices during greedy")
    }

    /// Smallest valid superset of the dominating set `chosen` that avoids
    /// `forbidden`, if any.
    fn complete(&self, chosen: Mask) -> Option<Mask> {
        if self.kind != DominationKind::OuterConnected {
            return Some(chosen);
        }
        let rest = self.full & !chosen;
        if rest == 0 {
            return Some(chosen);
        }
        let keep = if self.forbidden != 0 {
            let c = self
                .g
                .reach_within(self.forbidden.trailing_zeros() as usize, rest);
            if self.forbidden & !c != 0 {
                return None;
            }
            c
        } else {
            self.g
                .components_within(rest)
                .into_iter()
                .max_by_key(|c| c.count_ones())
                .expect("rest is non-empty")
        };
        Some(self.full & !keep)
    }

    /// A valid set of size at most `limit` containing `inside` and
    /// disjoint from `outside`, if one exists.
    fn feasible(
        &mut self,
        inside: Mask,
        outside: Mask,
        limit: usize,
    ) -> Result<Option<Mask>, SolveError> {
        if inside & outside != 0 {
            return Ok(None);
        }
        self.forbidden = outside;
        let covered = self.covered_by(inside);
        self.descend(inside, covered, outside, limit)
    }

    fn descend(
        &mut self,
        chosen: Mask,
        covered: Mask,
        excluded: Mask,
        limit: usize,
    ) -> Result<Option<Mask>, SolveError> {
        self.budget.charge(&mut self.nodes)?;
        let size = chosen.count_ones() as usize;
        if size > limit {
            return Ok(None);
        }
        let uncovered = self.full & !covered;
        if uncovered == 0 {
            return Ok(self
                .complete(chosen)
                .filter(|set| set.count_ones() as usize <= limit));
        }
        if size == limit {
            return Ok(None);
        }

        let available = self.full & !chosen & !excluded;
        let best_gain = bits(available)
            .map(|v| (self.cover[v] & uncovered).count_ones())
            .max()
            .unwrap_or(0);
        if best_gain == 0 {
            return Ok(None);
        }
        let need = uncovered.count_ones().div_ceil(best_gain) as usize;
        if size + need > limit {
            return Ok(None);
        }

        let mut options = 0;
        let mut fewest = u32::MAX;
        for u in bits(uncovered) {
            let opts = self.cover[u] & available;
            let c = opts.count_ones();
            if c == 0 {
                return Ok(None);
            }
            if c < fewest {
                fewest = c;
                options = opts;
            }
        }

        let mut excluded = excluded;
        for w in bits(options) {
            let found =
                self.descend(chosen | (1 << w), covered | self.cover[w], excluded, limit)?;
            if found.is_some() {
                return Ok(found);
            }
            excluded |= 1 << w;
        }
        Ok(None)
    }
}
