//! Exact minimum solvers for `γ`, `γ_t` and `γ̃c`.
//!
//! Two independent routes produce a [`Certificate`]: the baseline
//! enumerator scans subsets by cardinality in lexicographic order, the
//! branch-and-bound solver searches covers of uncovered vertices and then
//! re-searches at the optimum to recover the same canonical witness.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub mod baseline;
pub mod bnb;
pub mod oracle;

pub use oracle::{is_dominating, is_outer_connected_dominating, is_total_dominating, is_valid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DominationKind {
    /// `γ`
    #[serde(rename = "gamma")]
    Domination,
    /// `γ_t`
    #[serde(rename = "gamma-t")]
    Total,
    /// `γ̃c`
    #[serde(rename = "gamma-oc")]
    OuterConnected,
}

impl DominationKind {
    pub const ALL: [DominationKind; 3] = [
        DominationKind::Domination,
        DominationKind::Total,
        DominationKind::OuterConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DominationKind::Domination => "gamma",
            DominationKind::Total => "gamma-t",
            DominationKind::OuterConnected => "gamma-oc",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DominationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        DominationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}` (expected gamma, gamma-t or gamma-oc)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    Baseline,
    Bnb,
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "baseline" => Ok(SolverKind::Baseline),
            "bnb" => Ok(SolverKind::Bnb),
            _ => Err(format!("unknown solver `{s}` (expected baseline or bnb)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("vertex {0} is isolated, so no total dominating set exists")]
    NoTotalDominatingSet(usize),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
}

/// A minimum value with its canonical witness: the lexicographically least
/// valid set of that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: DominationKind,
    pub value: usize,
    pub witness: VertexSet,
    pub solver: SolverKind,
    pub nodes_expanded: u64,
}

impl Certificate {
    /// Same value and same witness, ignoring provenance.
    pub fn agrees_with(&self, other: &Certificate) -> bool {
        self.kind == other.kind && self.value == other.value && self.witness == other.witness
    }
}

/// Optional cap on search nodes (baseline: subsets tested).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget(pub Option<u64>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    pub(crate) fn charge(&self, used: &mut u64) -> Result<(), SolveError> {
        *used += 1;
        match self.0 {
            Some(limit) if *used > limit => Err(SolveError::BudgetExhausted(limit)),
            _ => Ok(()),
        }
    }
}

pub(crate) fn check_total_precondition(g: &Graph, kind: DominationKind) -> Result<(), SolveError> {
    if kind == DominationKind::Total {
        if let Some(v) = (0..g.order()).find(|&v| g.row(v) == 0) {
            return Err(SolveError::NoTotalDominatingSet(v));
        }
    }
    Ok(())
}

pub fn solve(
    g: &Graph,
    kind: DominationKind,
    solver: SolverKind,
    budget: Budget,
) -> Result<Certificate, SolveError> {
    match solver {
        SolverKind::Baseline => baseline::solve_exact(g, kind, budget),
        SolverKind::Bnb => bnb::solve_bnb(g, kind, budget),
    }
}

/// Memoizing front end used by the predictions and checkers. Results are a
/// pure function of the labeled graph, so sharing across threads cannot
/// change any answer.
#[derive(Debug)]
pub struct Exact {
    solver: SolverKind,
    budget: Budget,
    cache: Mutex<HashMap<(Graph, DominationKind), Result<Certificate, SolveError>>>,
}

impl Exact {
    pub fn new(solver: SolverKind, budget: Budget) -> Self {
        Self {
            solver,
            budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn solver(&self) -> SolverKind {
        self.solver
    }

    pub fn solve(&self, g: &Graph, kind: DominationKind) -> Result<Certificate, SolveError> {
        let key = (g.clone(), kind);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let result = solve(g, kind, self.solver, self.budget);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, result.clone());
        result
    }

    /// Shorthand for the value only.
    pub fn value(&self, g: &Graph, kind: DominationKind) -> Result<usize, SolveError> {
        self.solve(g, kind).map(|c| c.value)
    }
}

impl Default for Exact {
    fn default() -> Self {
        Exact::new(SolverKind::Bnb, Budget::UNLIMITED)
    }
}
