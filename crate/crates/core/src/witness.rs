//! Closed-form outer-connected dominating sets for product graphs.
//!
//! Each constructor returns a [`Prediction`]: the value the construction
//! claims for `γ̃c` of the product, the set itself in product ids, and the
//! preconditions that were actually checked. Free choices (which universal
//! vertex, which vertex of H) always resolve to the least id.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::products::{
    cartesian, corona, direct_power_complete, lexicographic, MixedRadix, ProductError,
    ProductInstance,
};
use crate::solvers::{DominationKind, Exact, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionError {
    #[error("factor {0} is disconnected")]
    DisconnectedFactor(&'static str),
    #[error("neither factor is K1")]
    NoK1Factor,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `γ(G) = γ(H) = 1`
    LexCase1,
    /// `γ(G) = 1`, `γ(H) ≠ 1`
    LexCase2,
    /// `γ(G) ≠ 1`, `γ(H) = 1`
    LexCase3,
    /// `γ(G) ≠ 1`, `γ(H) ≠ 1`
    LexCase4,
    LexK1Right,
    LexK1Left,
    Corona,
    CartesianClaim,
    DirectDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// The construction claims `γ̃c = value`.
    Equality,
    /// The construction only claims `γ̃c ≤ value`.
    UpperBound,
}

#[derive(Debug, Clone, Serialize)]
pub struct Prediction {
    pub source: Source,
    pub relation: Relation,
    pub value: usize,
    /// `None` only when the construction needs a vertex the factor lacks
    /// (lexicographic case 2 with `G = K1`).
    pub witness: Option<VertexSet>,
    pub preconditions: BTreeMap<&'static str, bool>,
    #[serde(skip)]
    pub instance: ProductInstance,
}

fn require_connected(g: &Graph, which: &'static str) -> Result<(), PredictionError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(PredictionError::DisconnectedFactor(which))
    }
}

fn ids(order: usize, ids: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_ids(order, ids).expect("constructed ids lie in the product")
}

/// The four-case formula for `γ̃c(G ∘ H)` of connected factors.
pub fn lex_prediction(g: &Graph, h: &Graph, exact: &Exact) -> Result<Prediction, PredictionError> {
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    let instance = lexicographic(g, h)?;
    let n = instance.product.order();
    let nh = h.order();
    let gamma_g = exact.solve(g, DominationKind::Domination)?;
    let gamma_h = exact.solve(h, DominationKind::Domination)?;
    let first = |s: &VertexSet| s.iter().next().expect("γ = 1 witness has one vertex");

    let (source, value, witness) = match (gamma_g.value == 1, gamma_h.value == 1) {
        (true, true) => {
            let (x, y) = (first(&gamma_g.witness), first(&gamma_h.witness));
            (Source::LexCase1, 1, Some(ids(n, [x * nh + y])))
        }
        (true, false) => {
            let x = first(&gamma_g.witness);
            let partner = g.open_neighborhood(x).expect("x < |V(G)|").iter().next();
            let witness = partner.map(|u| ids(n, [x * nh, u * nh]));
            (Source::LexCase2, 2, witness)
        }
        (false, true) => {
            let y = first(&gamma_h.witness);
            let set = ids(n, gamma_g.witness.iter().map(|x| x * nh + y));
            (Source::LexCase3, gamma_g.value, Some(set))
        }
        (false, false) => {
            let total = exact.solve(g, DominationKind::Total)?;
            let set = ids(n, total.witness.iter().map(|x| x * nh));
            (Source::LexCase4, total.value, Some(set))
        }
    };
    let preconditions = BTreeMap::from([
        ("g_connected", true),
        ("h_connected", true),
        ("g_order_at_least_2", g.order() >= 2),
        ("h_order_at_least_2", nh >= 2),
    ]);
    Ok(Prediction {
        source,
        relation: Relation::Equality,
        value,
        witness,
        preconditions,
        instance,
    })
}

/// `γ̃c(G ∘ K1) = γ̃c(G)` and `γ̃c(K1 ∘ H) = γ̃c(H)`, transporting the
/// canonical witness of the non-trivial factor.
pub fn lex_k1_prediction(
    g: &Graph,
    h: &Graph,
    exact: &Exact,
) -> Result<Prediction, PredictionError> {
    let (source, other) = if h.order() == 1 {
        (Source::LexK1Right, g)
    } else if g.order() == 1 {
        (Source::LexK1Left, h)
    } else {
        return Err(PredictionError::NoK1Factor);
    };
    let instance = lexicographic(g, h)?;
    let cert = exact.solve(other, DominationKind::OuterConnected)?;
    // with a K1 factor, (u, 0) ↦ u and (0, v) ↦ v
    let witness = ids(instance.product.order(), cert.witness.iter());
    Ok(Prediction {
        source,
        relation: Relation::Equality,
        value: cert.value,
        witness: Some(witness),
        preconditions: BTreeMap::from([("k1_factor", true)]),
        instance,
    })
}

/// Union over `x ∈ V(G)` of the canonical `γ(H)` set placed in the copy
/// `H^x`.
pub fn corona_prediction(
    g: &Graph,
    h: &Graph,
    exact: &Exact,
) -> Result<Prediction, PredictionError> {
    require_connected(g, "G")?;
    let instance = corona(g, h)?;
    let (ng, nh) = (g.order(), h.order());
    let gamma_h = exact.solve(h, DominationKind::Domination)?;
    let witness = ids(
        instance.product.order(),
        (0..ng).flat_map(|x| gamma_h.witness.iter().map(move |w| ng + x * nh + w)),
    );
    Ok(Prediction {
        source: Source::Corona,
        relation: Relation::Equality,
        value: ng * gamma_h.value,
        witness: Some(witness),
        preconditions: BTreeMap::from([("g_connected", true), ("g_order_at_least_2", ng >= 2)]),
        instance,
    })
}

/// `D̃ × V(H)` for the canonical `γ̃c(G)` set `D̃`; an upper bound only.
pub fn cartesian_prediction(
    g: &Graph,
    h: &Graph,
    exact: &Exact,
) -> Result<Prediction, PredictionError> {
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    let instance = cartesian(g, h)?;
    let nh = h.order();
    let cert = exact.solve(g, DominationKind::OuterConnected)?;
    let witness = ids(
        instance.product.order(),
        cert.witness
            .iter()
            .flat_map(|u| (0..nh).map(move |v| u * nh + v)),
    );
    Ok(Prediction {
        source: Source::CartesianClaim,
        relation: Relation::UpperBound,
        value: cert.value * nh,
        witness: Some(witness),
        preconditions: BTreeMap::from([("g_connected", true), ("h_connected", true)]),
        instance,
    })
}

/// The diagonal `{(j, ..., j) : 0 ≤ j ≤ t}` in `K_{n_1} × ... × K_{n_t}`.
pub fn direct_diagonal_prediction(orders: &[usize]) -> Result<Prediction, PredictionError> {
    let t = orders.len();
    if t < 3 {
        return Err(PredictionError::PreconditionUnmet(format!("t = {t} < 3")));
    }
    if let Some(&small) = orders.iter().find(|&&k| k < t + 1) {
        return Err(PredictionError::PreconditionUnmet(format!(
            "factor order {small} < t + 1 = {}",
            t + 1
        )));
    }
    let instance = direct_power_complete(orders)?;
    let radix = MixedRadix::new(orders.to_vec());
    let witness = ids(
        instance.product.order(),
        (0..=t).map(|j| radix.encode(&vec![j; t]).expect("j < n_i")),
    );
    Ok(Prediction {
        source: Source::DirectDiagonal,
        relation: Relation::Equality,
        value: t + 1,
        witness: Some(witness),
        preconditions: BTreeMap::from([("t_at_least_3", true), ("orders_at_least_t_plus_1", true)]),
        instance,
    })
}
