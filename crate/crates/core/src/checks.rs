//! Per-instance checkers. Each one recomputes both sides of a stated
//! relation with the exact solvers and emits one [`VerificationRecord`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::products::{cartesian, corona, direct_power_complete, lexicographic, ProductError};
use crate::scan::scan_small_sets;
use crate::solvers::{is_outer_connected_dominating, DominationKind, Exact, SolveError};
use crate::witness::{
    cartesian_prediction, corona_prediction, direct_diagonal_prediction, lex_k1_prediction,
    lex_prediction, PredictionError,
};

use DominationKind::{Domination, OuterConnected, Total};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Thm1Bound,
    LemTh2,
    LemTh4,
    Thm5,
    LemK1,
    Lem1Bound,
    Thm6Corona,
    CorCoronaSize,
    ThmCartBound,
    Claim1Validity,
    CorDirectLb,
    ThmDirectSharp,
    VizingEquivalent,
}

/// What a check consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Single,
    Pair,
    Triple,
    Orders,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Thm1Bound,
        CheckId::LemTh2,
        CheckId::LemTh4,
        CheckId::Thm5,
        CheckId::LemK1,
        CheckId::Lem1Bound,
        CheckId::Thm6Corona,
        CheckId::CorCoronaSize,
        CheckId::ThmCartBound,
        CheckId::Claim1Validity,
        CheckId::CorDirectLb,
        CheckId::ThmDirectSharp,
        CheckId::VizingEquivalent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Thm1Bound => "thm1-bound",
            CheckId::LemTh2 => "lem-th2",
            CheckId::LemTh4 => "lem-th4",
            CheckId::Thm5 => "thm5",
            CheckId::LemK1 => "lem-k1",
            CheckId::Lem1Bound => "lem1-bound",
            CheckId::Thm6Corona => "thm6-corona",
            CheckId::CorCoronaSize => "cor-corona-size",
            CheckId::ThmCartBound => "thm-cart-bound",
            CheckId::Claim1Validity => "claim1-validity",
            CheckId::CorDirectLb => "cor-direct-lb",
            CheckId::ThmDirectSharp => "thm-direct-sharp",
            CheckId::VizingEquivalent => "vizing-equivalent",
        }
    }

    pub fn arity(self) -> Arity {
        match self {
            CheckId::Thm1Bound => Arity::Single,
            CheckId::CorDirectLb | CheckId::ThmDirectSharp => Arity::Orders,
            CheckId::VizingEquivalent => Arity::Triple,
            _ => Arity::Pair,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Discrepancy,
    RefusedPrecondition,
    BudgetExhausted,
}

/// Why a discrepancy happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyClass {
    /// The statement fails only on inputs its argument silently excludes,
    /// such as order-1 factors.
    ImplicitPrecondition,
    /// A printed closed form disagrees while the underlying construction
    /// is confirmed.
    PrintedCorollary,
    /// A violation of the Vizing-equivalent inequality inside its hypothesis.
    Critical,
    /// Anything else.
    Unexpected,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Graph(Graph),
    Pair(Graph, Graph),
    Triple(Graph, Graph, Graph),
    Orders(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceRepr {
    Graph6(Vec<String>),
    Orders(Vec<usize>),
}

impl Instance {
    pub fn arity(&self) -> Arity {
        match self {
            Instance::Graph(_) => Arity::Single,
            Instance::Pair(..) => Arity::Pair,
            Instance::Triple(..) => Arity::Triple,
            Instance::Orders(_) => Arity::Orders,
        }
    }

    pub fn repr(&self) -> InstanceRepr {
        let g6 = |gs: &[&Graph]| InstanceRepr::Graph6(gs.iter().map(|g| emit_graph6(g)).collect());
        match self {
            Instance::Graph(g) => g6(&[g]),
            Instance::Pair(g, h) => g6(&[g, h]),
            Instance::Triple(g, h, k) => g6(&[g, h, k]),
            Instance::Orders(o) => InstanceRepr::Orders(o.clone()),
        }
    }

    /// Stable text form: graph6 strings joined by `,`, or orders joined by `x`.
    pub fn tag(&self) -> String {
        match self.repr() {
            InstanceRepr::Graph6(v) => v.join(","),
            InstanceRepr::Orders(o) => o
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join("x"),
        }
    }
}

pub fn record_key(check: CheckId, instance: &Instance) -> String {
    format!("{}/{}", check, instance.tag())
}

/// One check on one instance. `lhs REL rhs` is the relation under test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub key: String,
    pub check_id: CheckId,
    pub instance: InstanceRepr,
    pub relation: String,
    pub lhs: Option<u64>,
    pub rhs: Option<u64>,
    pub verdict: Verdict,
    pub class: Option<DiscrepancyClass>,
    pub details: BTreeMap<String, Value>,
}

enum Halt {
    Refused(String),
    Budget(u64),
}

impl From<SolveError> for Halt {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExhausted(limit) => Halt::Budget(limit),
            other => Halt::Refused(other.to_string()),
        }
    }
}

impl From<PredictionError> for Halt {
    fn from(e: PredictionError) -> Self {
        match e {
            PredictionError::Solve(s) => s.into(),
            other => Halt::Refused(other.to_string()),
        }
    }
}

impl From<ProductError> for Halt {
    fn from(e: ProductError) -> Self {
        Halt::Refused(e.to_string())
    }
}

struct Outcome {
    relation: &'static str,
    lhs: Option<u64>,
    rhs: Option<u64>,
    holds: bool,
    class: DiscrepancyClass,
    details: BTreeMap<String, Value>,
}

impl Outcome {
    fn new(
        relation: &'static str,
        lhs: usize,
        rhs: usize,
        holds: bool,
        class: DiscrepancyClass,
    ) -> Self {
        Self {
            relation,
            lhs: Some(lhs as u64),
            rhs: Some(rhs as u64),
            holds,
            class,
            details: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }
}

type Checked = Result<Outcome, Halt>;

fn refuse(reason: impl Into<String>) -> Checked {
    Err(Halt::Refused(reason.into()))
}

fn ids(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn order_one(graphs: &[&Graph]) -> bool {
    graphs.iter().any(|g| g.order() < 2)
}

/// Runs `check` on `instance`. An arity mismatch yields a refused record.
pub fn run_check(check: CheckId, instance: &Instance, exact: &Exact) -> VerificationRecord {
    let outcome = match (check, instance) {
        (CheckId::Thm1Bound, Instance::Graph(g)) => check_thm1(g, exact),
        (CheckId::LemTh2, Instance::Pair(g, h)) => check_lem_th2(g, h, exact),
        (CheckId::LemTh4, Instance::Pair(g, h)) => check_lem_th4(g, h, exact),
        (CheckId::Thm5, Instance::Pair(g, h)) => check_thm5(g, h, exact),
        (CheckId::LemK1, Instance::Pair(g, h)) => check_lem_k1(g, h, exact),
        (CheckId::Lem1Bound, Instance::Pair(g, h)) => check_lem1(g, h, exact),
        (CheckId::Thm6Corona, Instance::Pair(g, h)) => check_corona(g, h, exact),
        (CheckId::CorCoronaSize, Instance::Pair(g, h)) => check_corona_size(g, h, exact),
        (CheckId::ThmCartBound, Instance::Pair(g, h)) => check_cartesian(g, h, exact),
        (CheckId::Claim1Validity, Instance::Pair(g, h)) => check_claim1(g, h, exact),
        (CheckId::CorDirectLb, Instance::Orders(o)) => check_direct_lb(o, exact),
        (CheckId::ThmDirectSharp, Instance::Orders(o)) => check_direct_sharp(o, exact),
        (CheckId::VizingEquivalent, Instance::Triple(g, h, k)) => check_vizing(g, h, k, exact),
        _ => refuse(format!(
            "{check} does not apply to a {:?} instance",
            instance.arity()
        )),
    };
    let mut record = VerificationRecord {
        key: record_key(check, instance),
        check_id: check,
        instance: instance.repr(),
        relation: String::new(),
        lhs: None,
        rhs: None,
        verdict: Verdict::Pass,
        class: None,
        details: BTreeMap::new(),
    };
    match outcome {
        Ok(o) => {
            record.relation = o.relation.to_string();
            record.lhs = o.lhs;
            record.rhs = o.rhs;
            record.details = o.details;
            if !o.holds {
                record.verdict = Verdict::Discrepancy;
                record.class = Some(o.class);
            }
        }
        Err(Halt::Refused(reason)) => {
            record.verdict = Verdict::RefusedPrecondition;
            record.details.insert("reason".into(), reason.into());
        }
        Err(Halt::Budget(limit)) => {
            record.verdict = Verdict::BudgetExhausted;
            record.details.insert("budget".into(), limit.into());
        }
    }
    record
}

fn check_thm1(g: &Graph, exact: &Exact) -> Checked {
    if g.order() == 0 || !g.is_connected() {
        return refuse("G must be connected and non-empty");
    }
    let delta = g.min_degree().expect("non-empty");
    let cert = exact.solve(g, OuterConnected)?;
    let rhs = g.order() - delta;
    Ok(Outcome::new(
        "<=",
        cert.value,
        rhs,
        cert.value <= rhs,
        DiscrepancyClass::Unexpected,
    )
    .with("witness", ids(&cert.witness)))
}

fn check_lem_th2(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let p = lexicographic(g, h)?;
    let lhs = exact.value(g, Domination)?;
    let rhs = exact.value(&p.product, Domination)?;
    Ok(Outcome::new(
        "<=",
        lhs,
        rhs,
        lhs <= rhs,
        DiscrepancyClass::Unexpected,
    ))
}

fn check_lem_th4(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    if g.has_isolated_vertex() {
        return refuse("G has an isolated vertex");
    }
    let p = lexicographic(g, h)?;
    let gamma_h = exact.value(h, Domination)?;
    if gamma_h == 1 {
        return refuse("gamma(H) = 1");
    }
    let lhs = exact.value(g, Total)?;
    let rhs = exact.value(&p.product, Domination)?;
    Ok(
        Outcome::new("<=", lhs, rhs, lhs <= rhs, DiscrepancyClass::Unexpected)
            .with("gamma_h", gamma_h),
    )
}

fn check_thm5(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let pred = lex_prediction(g, h, exact)?;
    let cert = exact.solve(&pred.instance.product, OuterConnected)?;
    let witness_valid = pred
        .witness
        .as_ref()
        .map(|w| is_outer_connected_dominating(&pred.instance.product, w));
    let holds = pred.value == cert.value && witness_valid != Some(false);
    let class = if order_one(&[g, h]) {
        DiscrepancyClass::ImplicitPrecondition
    } else {
        DiscrepancyClass::Unexpected
    };
    Ok(Outcome::new("=", pred.value, cert.value, holds, class)
        .with("case", json!(pred.source))
        .with(
            "predicted_witness",
            json!(pred.witness.as_ref().map(VertexSet::to_vec)),
        )
        .with("witness_valid", json!(witness_valid))
        .with("exact_witness", ids(&cert.witness)))
}

fn check_lem_k1(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let pred = lex_k1_prediction(g, h, exact)?;
    let cert = exact.solve(&pred.instance.product, OuterConnected)?;
    let witness = pred
        .witness
        .as_ref()
        .expect("K1 predictions carry a witness");
    let valid = is_outer_connected_dominating(&pred.instance.product, witness);
    Ok(Outcome::new(
        "=",
        pred.value,
        cert.value,
        valid && pred.value == cert.value,
        DiscrepancyClass::Unexpected,
    )
    .with("side", json!(pred.source))
    .with("witness_valid", valid))
}

fn check_lem1(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    if !g.is_connected() {
        return refuse("G is disconnected");
    }
    let p = lexicographic(g, h)?;
    let (n, m) = (g.order(), h.order());
    let dg = g.min_degree().expect("order checked by the product");
    let dh = h.min_degree().expect("order checked by the product");
    let dp = p.product.min_degree().expect("non-empty product");
    let lhs = exact.value(&p.product, OuterConnected)?;
    let rhs = n * m - (dg + dh);
    Ok(
        Outcome::new("<=", lhs, rhs, lhs <= rhs, DiscrepancyClass::Unexpected)
            .with("tight", lhs == rhs)
            .with("delta_g", dg)
            .with("delta_h", dh)
            .with("delta_product", dp)
            .with("delta_claimed", dg + dh)
            .with("delta_degree_law", dg * m + dh)
            .with("delta_identity_holds", dp == dg + dh),
    )
}

fn check_corona(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let pred = corona_prediction(g, h, exact)?;
    let product = &pred.instance.product;
    let cert = exact.solve(product, OuterConnected)?;
    let witness = pred
        .witness
        .as_ref()
        .expect("corona predictions carry a witness");
    let valid = is_outer_connected_dominating(product, witness);
    let class = if g.order() < 2 {
        DiscrepancyClass::ImplicitPrecondition
    } else {
        DiscrepancyClass::Unexpected
    };
    Ok(Outcome::new(
        "=",
        pred.value,
        cert.value,
        valid && pred.value == cert.value,
        class,
    )
    .with("witness", ids(witness))
    .with("witness_valid", valid)
    .with("exact_witness", ids(&cert.witness)))
}

fn check_corona_size(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    if !g.is_connected() {
        return refuse("G is disconnected");
    }
    let p = corona(g, h)?;
    let exact_value = exact.value(&p.product, OuterConnected)?;
    let printed = g.order() * exact.value(g, Domination)?;
    let construction = g.order() * exact.value(h, Domination)?;
    let class = if construction == exact_value {
        DiscrepancyClass::PrintedCorollary
    } else if g.order() < 2 {
        DiscrepancyClass::ImplicitPrecondition
    } else {
        DiscrepancyClass::Unexpected
    };
    Ok(
        Outcome::new("=", exact_value, printed, exact_value == printed, class)
            .with("construction_value", construction)
            .with("construction_matches", construction == exact_value),
    )
}

fn check_cartesian(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let pred = cartesian_prediction(g, h, exact)?;
    let cert = exact.solve(&pred.instance.product, OuterConnected)?;
    Ok(Outcome::new(
        "<=",
        cert.value,
        pred.value,
        cert.value <= pred.value,
        DiscrepancyClass::Unexpected,
    )
    .with("tight", cert.value == pred.value)
    .with("exact_witness", ids(&cert.witness)))
}

fn check_claim1(g: &Graph, h: &Graph, exact: &Exact) -> Checked {
    let pred = cartesian_prediction(g, h, exact)?;
    let witness = pred
        .witness
        .as_ref()
        .expect("cartesian predictions carry a witness");
    let valid = is_outer_connected_dominating(&pred.instance.product, witness);
    Ok(Outcome {
        relation: "valid",
        lhs: Some(witness.len() as u64),
        rhs: None,
        holds: valid,
        class: DiscrepancyClass::Unexpected,
        details: BTreeMap::new(),
    }
    .with("witness", ids(witness)))
}

fn direct_preconditions(orders: &[usize]) -> Result<(), Halt> {
    if orders.len() < 3 {
        return Err(Halt::Refused(format!("t = {} < 3", orders.len())));
    }
    if orders.iter().any(|&n| n < 2) {
        return Err(Halt::Refused("some factor order is below 2".into()));
    }
    Ok(())
}

fn check_direct_lb(orders: &[usize], exact: &Exact) -> Checked {
    direct_preconditions(orders)?;
    let t = orders.len();
    let p = direct_power_complete(orders)?;
    let scan = scan_small_sets(&p.product, OuterConnected, t);
    let gamma = exact.value(&p.product, Domination)?;
    let oc = exact.value(&p.product, OuterConnected)?;
    let holds = scan.first_valid.is_none() && oc > t;
    Ok(
        Outcome::new(">=", oc, t + 1, holds, DiscrepancyClass::Unexpected)
            .with("scan_max_size", t)
            .with("scan_subsets_checked", scan.subsets_checked as u64)
            .with(
                "scan_found",
                json!(scan.first_valid.as_ref().map(VertexSet::to_vec)),
            )
            .with("exact_gamma", gamma)
            .with("gamma_at_least_t_plus_1", gamma > t),
    )
}

fn check_direct_sharp(orders: &[usize], exact: &Exact) -> Checked {
    let pred = direct_diagonal_prediction(orders)?;
    let product = &pred.instance.product;
    let t = orders.len();
    let diagonal = pred
        .witness
        .as_ref()
        .expect("diagonal prediction carries a witness");
    let valid = is_outer_connected_dominating(product, diagonal);
    let scan = scan_small_sets(product, OuterConnected, t);
    let oc = exact.value(product, OuterConnected)?;
    let holds = valid && scan.first_valid.is_none() && oc == pred.value;
    Ok(
        Outcome::new("=", oc, pred.value, holds, DiscrepancyClass::Unexpected)
            .with("diagonal", ids(diagonal))
            .with("diagonal_valid", valid)
            .with("scan_subsets_checked", scan.subsets_checked as u64),
    )
}

fn check_vizing(g: &Graph, h: &Graph, k: &Graph, exact: &Exact) -> Checked {
    for (name, f) in [("G", g), ("H", h), ("K", k)] {
        if f.order() == 0 || !f.is_connected() {
            return refuse(format!("{name} must be connected and non-empty"));
        }
    }
    let (gg, gh, gk) = (
        exact.value(g, Domination)?,
        exact.value(h, Domination)?,
        exact.value(k, Domination)?,
    );
    if gg == 1 || gh == 1 || gk != 1 {
        return refuse("requires gamma(G) != 1, gamma(H) != 1 and gamma(K) = 1");
    }
    let gk_prod = lexicographic(g, k)?.product;
    let hk_prod = lexicographic(h, k)?.product;
    let box_prod = cartesian(g, h)?.product;
    let full = lexicographic(&box_prod, k)?.product;

    let left_g = exact.solve(&gk_prod, OuterConnected)?;
    let left_h = exact.solve(&hk_prod, OuterConnected)?;
    let right = exact.solve(&full, OuterConnected)?;
    let gamma_box = exact.solve(&box_prod, Domination)?;

    let lhs = left_g.value * left_h.value;
    let gamma_form_holds = gg * gh <= gamma_box.value;
    let oc_form_holds = lhs <= right.value;
    let class = if !gamma_form_holds || !order_one(&[g, h, k]) {
        DiscrepancyClass::Critical
    } else {
        DiscrepancyClass::ImplicitPrecondition
    };
    let mut out = Outcome::new(
        "<=",
        lhs,
        right.value,
        gamma_form_holds && oc_form_holds,
        class,
    )
    .with("gamma_form_lhs", gg * gh)
    .with("gamma_form_rhs", gamma_box.value)
    .with("gamma_form_holds", gamma_form_holds)
    .with("oc_form_holds", oc_form_holds);
    if !out.holds && class == DiscrepancyClass::Critical {
        out = out
            .with("witness_g_lex_k", ids(&left_g.witness))
            .with("witness_h_lex_k", ids(&left_h.witness))
            .with("witness_box_lex_k", ids(&right.witness))
            .with("witness_gamma_box", ids(&gamma_box.witness));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn run(check: CheckId, instance: Instance) -> VerificationRecord {
        run_check(check, &instance, &Exact::default())
    }

    fn pair(g: Graph, h: Graph) -> Instance {
        Instance::Pair(g, h)
    }

    #[test]
    fn thm1_examples() {
        let r = run(CheckId::Thm1Bound, Instance::Graph(complete(4)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(1), Some(1), Verdict::Pass));
        let r = run(CheckId::Thm1Bound, Instance::Graph(path(4)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(3), Verdict::Pass));
        let r = run(CheckId::Thm1Bound, Instance::Graph(cycle(6).unwrap()));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(4), Some(4), Verdict::Pass));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            run(CheckId::Thm1Bound, Instance::Graph(two_k2)).verdict,
            Verdict::RefusedPrecondition
        );
        assert_eq!(r.key, "thm1-bound/EhEG");
    }

    #[test]
    fn lex_lemmas() {
        let r = run(CheckId::LemTh2, pair(path(4), complete(2)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        let r = run(CheckId::LemTh4, pair(path(4), path(4)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        let r = run(CheckId::LemTh2, pair(complete(1), complete(2)));
        assert_eq!((r.lhs, r.rhs), (Some(1), Some(1)));
        let r = run(CheckId::LemTh4, pair(path(4), complete(2)));
        assert_eq!(r.verdict, Verdict::RefusedPrecondition);
    }

    #[test]
    fn thm5_examples() {
        let r = run(CheckId::Thm5, pair(complete(2), complete(2)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(1), Some(1), Verdict::Pass));
        let r = run(CheckId::Thm5, pair(path(3), path(4)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        let r = run(CheckId::Thm5, pair(complete(1), star(4)));
        assert_eq!((r.lhs, r.rhs), (Some(1), Some(3)));
        assert_eq!(r.verdict, Verdict::Discrepancy);
        assert_eq!(r.class, Some(DiscrepancyClass::ImplicitPrecondition));
    }

    #[test]
    fn k1_and_lem1() {
        let r = run(CheckId::LemK1, pair(path(4), complete(1)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        assert_eq!(
            run(CheckId::LemK1, pair(path(2), path(2))).verdict,
            Verdict::RefusedPrecondition
        );

        let r = run(CheckId::Lem1Bound, pair(complete(1), complete(2)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(1), Some(1), Verdict::Pass));
        assert_eq!(r.details["tight"], json!(true));
        let r = run(CheckId::Lem1Bound, pair(complete(2), complete(2)));
        assert_eq!((r.lhs, r.rhs), (Some(1), Some(2)));
        // δ(K2 ∘ K2) = δ(K4) = 3 while δ(K2) + δ(K2) = 2
        assert_eq!(r.details["delta_product"], json!(3));
        assert_eq!(r.details["delta_identity_holds"], json!(false));
        let r = run(CheckId::Lem1Bound, pair(path(3), complete(2)));
        assert_eq!((r.rhs, r.verdict), (Some(4), Verdict::Pass));
    }

    #[test]
    fn corona_examples() {
        let r = run(CheckId::Thm6Corona, pair(path(2), path(3)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        let r = run(CheckId::CorCoronaSize, pair(path(2), path(3)));
        assert_eq!(r.verdict, Verdict::Pass);

        let r = run(CheckId::Thm6Corona, pair(complete(3), path(4)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(6), Some(6), Verdict::Pass));
        let r = run(CheckId::CorCoronaSize, pair(complete(3), path(4)));
        assert_eq!((r.lhs, r.rhs), (Some(6), Some(3)));
        assert_eq!(r.class, Some(DiscrepancyClass::PrintedCorollary));

        let r = run(CheckId::Thm6Corona, pair(complete(1), path(4)));
        assert_eq!((r.lhs, r.rhs), (Some(2), Some(1)));
        assert_eq!(r.class, Some(DiscrepancyClass::ImplicitPrecondition));
    }

    #[test]
    fn cartesian_examples() {
        let r = run(CheckId::ThmCartBound, pair(complete(3), complete(2)));
        assert_eq!((r.lhs, r.rhs, r.verdict), (Some(2), Some(2), Verdict::Pass));
        assert_eq!(r.details["tight"], json!(true));
        let r = run(CheckId::ThmCartBound, pair(complete(2), complete(2)));
        assert_eq!((r.lhs, r.rhs), (Some(2), Some(2)));
        let r = run(CheckId::Claim1Validity, pair(path(4), complete(2)));
        assert_eq!((r.lhs, r.verdict), (Some(4), Verdict::Pass));
    }

    #[test]
    fn direct_examples() {
        let r = run(CheckId::CorDirectLb, Instance::Orders(vec![2, 2, 2]));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["exact_gamma"], json!(4));
        assert_eq!(r.details["gamma_at_least_t_plus_1"], json!(true));
        let r = run(CheckId::ThmDirectSharp, Instance::Orders(vec![2, 2, 2]));
        assert_eq!(r.verdict, Verdict::RefusedPrecondition);
        let r = run(CheckId::CorDirectLb, Instance::Orders(vec![3, 3]));
        assert_eq!(r.verdict, Verdict::RefusedPrecondition);
        assert_eq!(r.key, "cor-direct-lb/3x3");
    }

    #[test]
    fn vizing_small() {
        let r = run(
            CheckId::VizingEquivalent,
            Instance::Triple(path(4), path(4), complete(2)),
        );
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.details["gamma_form_lhs"], json!(4));
        let r = run(
            CheckId::VizingEquivalent,
            Instance::Triple(path(4), complete(3), complete(2)),
        );
        assert_eq!(r.verdict, Verdict::RefusedPrecondition);
    }

    #[test]
    fn arity_mismatch_is_refused() {
        let r = run(CheckId::Thm5, Instance::Graph(path(3)));
        assert_eq!(r.verdict, Verdict::RefusedPrecondition);
    }

    #[test]
    fn records_round_trip_through_json() {
        let r = run(CheckId::Lem1Bound, pair(path(3), path(2)));
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
