//! Suite orchestration: builds (check, instance) jobs from a corpus, runs
//! them on a rayon pool, and persists one JSONL record per job ordered by
//! key. Existing output is resumed by skipping persisted keys.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::checks::{
    record_key, run_check, Arity, CheckId, DiscrepancyClass, Instance, Verdict, VerificationRecord,
};
use crate::corpus::{
    enumerate_labeled, enumerate_labeled_connected, load_corpus, CorpusError, CorpusSpec, Filters,
};
use crate::generators::{complete, cycle, path};
use crate::graph::Graph;
use crate::solvers::{Budget, Exact, SolverKind};

pub const DEFAULT_CAP: usize = 20;
pub const DEFAULT_SAMPLE: usize = 64;
pub const DEFAULT_SEED: u64 = 0x0cd0;
/// Order-5 pairs added to the lexicographic checks by [`reproduce`].
pub const REPRODUCE_SAMPLE: usize = 512;
pub const RECORDS_FILE: &str = "records.jsonl";
pub const REPORT_FILE: &str = "report.json";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path} line {line}: {source}")]
    BadRecord {
        path: PathBuf,
        line: usize,
        source: serde_json::Error,
    },
    #[error("thread pool: {0}")]
    Pool(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Job {
    pub check: CheckId,
    pub instance: Instance,
}

impl Job {
    pub fn new(check: CheckId, instance: Instance) -> Self {
        Self { check, instance }
    }

    pub fn key(&self) -> String {
        record_key(self.check, &self.instance)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub corpus: CorpusSpec,
    pub filters: Filters,
    pub checks: Vec<CheckId>,
    pub solver: SolverKind,
    pub budget: Budget,
    /// Largest product order run exhaustively over the pair/triple cross product.
    pub cap: usize,
    /// Pairs (or triples) drawn above the cap, per check.
    pub sample: usize,
    pub seed: u64,
    /// Instances for the direct-power checks.
    pub direct_orders: Vec<Vec<usize>>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
}

impl SuiteConfig {
    pub fn new(corpus: CorpusSpec, checks: Vec<CheckId>) -> Self {
        Self {
            corpus,
            filters: Filters::default(),
            checks,
            solver: SolverKind::Bnb,
            budget: Budget::UNLIMITED,
            cap: DEFAULT_CAP,
            sample: DEFAULT_SAMPLE,
            seed: DEFAULT_SEED,
            direct_orders: default_direct_orders(),
            jobs: None,
        }
    }

    /// SHA-256 over every field that can change the records. `jobs` is
    /// excluded since it cannot.
    pub fn digest(&self) -> String {
        let text = format!(
            "{:?}|{:?}|{:?}|{:?}|{:?}|{}|{}|{}|{:?}",
            self.corpus,
            self.filters,
            self.checks,
            self.solver,
            self.budget,
            self.cap,
            self.sample,
            self.seed,
            self.direct_orders
        );
        digest_text(&text)
    }
}

/// Hex SHA-256 of `text`; used for configuration digests.
pub fn digest_text(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn default_direct_orders() -> Vec<Vec<usize>> {
    vec![vec![2, 2, 2], vec![4, 4, 4], vec![5, 4, 4]]
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub discrepancy: usize,
    pub refused_precondition: usize,
    pub budget_exhausted: usize,
    /// Summed per-job solve time of this run, excluding resumed records.
    pub wall_ms: f64,
}

impl CheckSummary {
    pub fn total(&self) -> usize {
        self.pass + self.discrepancy + self.refused_precondition + self.budget_exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyEntry {
    pub key: String,
    pub class: Option<DiscrepancyClass>,
    pub lhs: Option<u64>,
    pub rhs: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config_digest: String,
    pub records: usize,
    pub resumed: usize,
    pub checks: BTreeMap<CheckId, CheckSummary>,
    pub discrepancies: Vec<DiscrepancyEntry>,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn class_counts(&self) -> BTreeMap<Option<DiscrepancyClass>, usize> {
        let mut out = BTreeMap::new();
        for d in &self.discrepancies {
            *out.entry(d.class).or_insert(0) += 1;
        }
        out
    }

    pub fn count(&self, class: DiscrepancyClass) -> usize {
        self.discrepancies
            .iter()
            .filter(|d| d.class == Some(class))
            .count()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub report: RunReport,
    /// Every record, old and new, sorted by key.
    pub records: Vec<VerificationRecord>,
}

fn product_order(check: CheckId, orders: &[usize]) -> usize {
    match check {
        CheckId::Thm6Corona | CheckId::CorCoronaSize => orders[0] * (1 + orders[1]),
        _ => orders.iter().product(),
    }
}

/// Cartesian power of `0..len` in lexicographic order.
fn odometer(lens: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &len in lens {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..len).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

/// Cross product of `graphs` with itself `arity` times: every tuple whose
/// product order is within `cap`, plus up to `sample` seeded draws above it.
fn tuples(
    graphs: &[Graph],
    arity: usize,
    check: CheckId,
    cap: usize,
    sample: usize,
    seed: u64,
) -> Vec<Vec<usize>> {
    let n = graphs.len();
    if n == 0 {
        return Vec::new();
    }
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, g) in graphs.iter().enumerate() {
        by_order.entry(g.order()).or_default().push(i);
    }
    let groups: Vec<(usize, Vec<usize>)> = by_order.into_iter().collect();
    let order_of = |t: &[usize]| {
        product_order(
            check,
            &t.iter().map(|&i| graphs[i].order()).collect::<Vec<_>>(),
        )
    };

    let mut within = Vec::new();
    let mut above = 0u128;
    for shape in odometer(&vec![groups.len(); arity]) {
        let orders: Vec<usize> = shape.iter().map(|&k| groups[k].0).collect();
        let members: Vec<&Vec<usize>> = shape.iter().map(|&k| &groups[k].1).collect();
        if product_order(check, &orders) <= cap {
            let lens: Vec<usize> = members.iter().map(|m| m.len()).collect();
            within.extend(odometer(&lens).into_iter().map(|pick| {
                pick.iter()
                    .zip(&members)
                    .map(|(&j, m)| m[j])
                    .collect::<Vec<_>>()
            }));
        } else {
            above += members.iter().map(|m| m.len() as u128).product::<u128>();
        }
    }
    within.sort();

    let want = (sample as u128).min(above) as usize;
    let mut picked = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ check as u64);
    let mut attempts = 0;
    while picked.len() < want && attempts < want * 1000 {
        attempts += 1;
        let cand: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..n)).collect();
        if order_of(&cand) > cap {
            picked.insert(cand);
        }
    }
    within.extend(picked);
    within
}

/// The job list a suite config expands to.
pub fn build_jobs(config: &SuiteConfig, exact: &Exact) -> Result<Vec<Job>, HarnessError> {
    let graphs = load_corpus(&config.corpus, &config.filters, exact)?;
    let mut jobs = Vec::new();
    for &check in &config.checks {
        match check.arity() {
            Arity::Single => jobs.extend(
                graphs
                    .iter()
                    .map(|g| Job::new(check, Instance::Graph(g.clone()))),
            ),
            Arity::Orders => jobs.extend(
                config
                    .direct_orders
                    .iter()
                    .map(|o| Job::new(check, Instance::Orders(o.clone()))),
            ),
            Arity::Pair => {
                for t in tuples(&graphs, 2, check, config.cap, config.sample, config.seed) {
                    let inst = Instance::Pair(graphs[t[0]].clone(), graphs[t[1]].clone());
                    jobs.push(Job::new(check, inst));
                }
            }
            Arity::Triple => {
                for t in tuples(&graphs, 3, check, config.cap, config.sample, config.seed) {
                    let [a, b, c] = [&graphs[t[0]], &graphs[t[1]], &graphs[t[2]]].map(Graph::clone);
                    jobs.push(Job::new(check, Instance::Triple(a, b, c)));
                }
            }
        }
    }
    Ok(jobs)
}

/// Runs `jobs` (deduplicated by key) and returns records sorted by key with
/// the summed wall time per check.
pub fn execute(
    jobs: Vec<Job>,
    exact: &Exact,
    threads: Option<usize>,
) -> Result<(Vec<VerificationRecord>, BTreeMap<CheckId, f64>), HarnessError> {
    let mut keyed: BTreeMap<String, Job> = BTreeMap::new();
    for job in jobs {
        keyed.entry(job.key()).or_insert(job);
    }
    let jobs: Vec<Job> = keyed.into_values().collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let timed: Vec<(VerificationRecord, f64)> = pool.install(|| {
        jobs.par_iter()
            .map(|job| {
                let start = Instant::now();
                let r = run_check(job.check, &job.instance, exact);
                (r, start.elapsed().as_secs_f64() * 1e3)
            })
            .collect()
    });
    let mut times = BTreeMap::new();
    let mut records = Vec::with_capacity(timed.len());
    for (r, ms) in timed {
        *times.entry(r.check_id).or_insert(0.0) += ms;
        records.push(r);
    }
    Ok((records, times))
}

pub fn read_records(path: &Path) -> Result<Vec<VerificationRecord>, HarnessError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|source| HarnessError::BadRecord {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push(record);
    }
    Ok(out)
}

/// One compact JSON object per line, in the given order.
pub fn to_jsonl(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Writes through a temporary sibling and renames, so an interrupted run
/// never leaves a torn file behind.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), HarnessError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(io_err(&tmp))?;
    f.write_all(contents).map_err(io_err(&tmp))?;
    f.sync_all().map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

pub fn summarize(
    digest: String,
    records: &[VerificationRecord],
    resumed: usize,
    times: &BTreeMap<CheckId, f64>,
    wall_ms: f64,
) -> RunReport {
    let mut checks: BTreeMap<CheckId, CheckSummary> = BTreeMap::new();
    let mut discrepancies = Vec::new();
    for r in records {
        let s = checks.entry(r.check_id).or_default();
        match r.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::Discrepancy => {
                s.discrepancy += 1;
                discrepancies.push(DiscrepancyEntry {
                    key: r.key.clone(),
                    class: r.class,
                    lhs: r.lhs,
                    rhs: r.rhs,
                });
            }
            Verdict::RefusedPrecondition => s.refused_precondition += 1,
            Verdict::BudgetExhausted => s.budget_exhausted += 1,
        }
    }
    for (check, ms) in times {
        checks.entry(*check).or_default().wall_ms = *ms;
    }
    RunReport {
        config_digest: digest,
        records: records.len(),
        resumed,
        checks,
        discrepancies,
        wall_ms,
    }
}

/// Runs `jobs`, resuming from `out_dir/records.jsonl` when present, and
/// writes the merged records plus `report.json` into `out_dir`.
pub fn run_jobs(
    jobs: Vec<Job>,
    digest: String,
    exact: &Exact,
    threads: Option<usize>,
    out_dir: Option<&Path>,
) -> Result<SuiteResult, HarnessError> {
    let start = Instant::now();
    let records_path = out_dir.map(|d| d.join(RECORDS_FILE));
    let existing = match &records_path {
        Some(p) if p.exists() => read_records(p)?,
        _ => Vec::new(),
    };
    let done: BTreeSet<&str> = existing.iter().map(|r| r.key.as_str()).collect();
    let pending: Vec<Job> = jobs
        .into_iter()
        .filter(|j| !done.contains(j.key().as_str()))
        .collect();
    let resumed = existing.len();
    let (fresh, times) = execute(pending, exact, threads)?;

    let mut merged: BTreeMap<String, VerificationRecord> = BTreeMap::new();
    for r in existing.into_iter().chain(fresh) {
        merged.entry(r.key.clone()).or_insert(r);
    }
    let records: Vec<VerificationRecord> = merged.into_values().collect();
    let report = summarize(
        digest,
        &records,
        resumed,
        &times,
        start.elapsed().as_secs_f64() * 1e3,
    );

    if let (Some(dir), Some(path)) = (out_dir, &records_path) {
        write_atomic(path, to_jsonl(&records).as_bytes())?;
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        write_atomic(&dir.join(REPORT_FILE), text.as_bytes())?;
    }
    Ok(SuiteResult { report, records })
}

pub fn run_suite(
    config: &SuiteConfig,
    out_dir: Option<&Path>,
) -> Result<SuiteResult, HarnessError> {
    let exact = Exact::new(config.solver, config.budget);
    let jobs = build_jobs(config, &exact)?;
    run_jobs(jobs, config.digest(), &exact, config.jobs, out_dir)
}

/// Settings of the bundled reproduction scenario.
#[derive(Debug, Clone)]
pub struct ReproduceConfig {
    pub seed: u64,
    /// Pairs drawn from the order-5 connected graphs for the lexicographic checks.
    pub sample: usize,
    pub budget: Budget,
    pub jobs: Option<usize>,
}

impl Default for ReproduceConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            sample: REPRODUCE_SAMPLE,
            budget: Budget::UNLIMITED,
            jobs: None,
        }
    }
}

impl ReproduceConfig {
    pub fn digest(&self) -> String {
        digest_text(&format!(
            "reproduce|{}|{}|{:?}",
            self.seed, self.sample, self.budget
        ))
    }
}

/// The fixed scenario list:
///
/// - `thm1-bound` on every labeled connected graph with `n ≤ 6`;
/// - `thm5`, `lem1-bound`, `lem-th2`, `lem-th4` on all ordered pairs of
///   labeled connected graphs with `n ≤ 4`, plus seeded pairs involving an
///   order-5 graph;
/// - `lem-k1` on `(G, K1)` and `(K1, G)` for connected `G` with `n ≤ 5`;
/// - `thm6-corona`, `cor-corona-size` for connected `G` with `n ≤ 4` and
///   every labeled `H` with `n ≤ 3`;
/// - `thm-cart-bound`, `claim1-validity` on the `n ≤ 4` pairs;
/// - `cor-direct-lb`, `thm-direct-sharp` on `(2,2,2)`, `(4,4,4)`, `(5,4,4)`;
/// - `vizing-equivalent` on `{P4, C4, C5}² × {K1, K2, K3}`.
pub fn reproduce_jobs(config: &ReproduceConfig) -> Vec<Job> {
    let connected = |n| enumerate_labeled_connected(n).expect("order within range");
    let small = connected(4);
    let upto5 = connected(5);
    let five: Vec<&Graph> = upto5.iter().filter(|g| g.order() == 5).collect();
    let mut jobs = Vec::new();

    jobs.extend(
        connected(6)
            .into_iter()
            .map(|g| Job::new(CheckId::Thm1Bound, Instance::Graph(g))),
    );

    let mut pairs: Vec<(Graph, Graph)> = Vec::new();
    for g in &small {
        for h in &small {
            pairs.push((g.clone(), h.clone()));
        }
    }
    let mut lex_pairs = pairs.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.sample {
        let a = five[rng.gen_range(0..five.len())].clone();
        let b = upto5[rng.gen_range(0..upto5.len())].clone();
        lex_pairs.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
    }
    for check in [
        CheckId::Thm5,
        CheckId::Lem1Bound,
        CheckId::LemTh2,
        CheckId::LemTh4,
    ] {
        jobs.extend(
            lex_pairs
                .iter()
                .map(|(g, h)| Job::new(check, Instance::Pair(g.clone(), h.clone()))),
        );
    }

    let k1 = complete(1);
    for g in &upto5 {
        jobs.push(Job::new(
            CheckId::LemK1,
            Instance::Pair(g.clone(), k1.clone()),
        ));
        jobs.push(Job::new(
            CheckId::LemK1,
            Instance::Pair(k1.clone(), g.clone()),
        ));
    }

    let corona_h: Vec<Graph> = (1..=3).flat_map(enumerate_labeled).collect();
    for g in &small {
        for h in &corona_h {
            for check in [CheckId::Thm6Corona, CheckId::CorCoronaSize] {
                jobs.push(Job::new(check, Instance::Pair(g.clone(), h.clone())));
            }
        }
    }

    // corona examples with a larger H
    for (g, h) in [(complete(3), path(4)), (complete(1), path(4))] {
        for check in [CheckId::Thm6Corona, CheckId::CorCoronaSize] {
            jobs.push(Job::new(check, Instance::Pair(g.clone(), h.clone())));
        }
    }

    for check in [CheckId::ThmCartBound, CheckId::Claim1Validity] {
        jobs.extend(
            pairs
                .iter()
                .map(|(g, h)| Job::new(check, Instance::Pair(g.clone(), h.clone()))),
        );
    }

    for orders in default_direct_orders() {
        for check in [CheckId::CorDirectLb, CheckId::ThmDirectSharp] {
            jobs.push(Job::new(check, Instance::Orders(orders.clone())));
        }
    }

    let bases = [
        path(4),
        cycle(4).expect("n >= 3"),
        cycle(5).expect("n >= 3"),
    ];
    for g in &bases {
        for h in &bases {
            for k in [complete(1), complete(2), complete(3)] {
                jobs.push(Job::new(
                    CheckId::VizingEquivalent,
                    Instance::Triple(g.clone(), h.clone(), k),
                ));
            }
        }
    }
    jobs
}

pub fn reproduce(
    config: &ReproduceConfig,
    out_dir: Option<&Path>,
) -> Result<SuiteResult, HarnessError> {
    let exact = Exact::new(SolverKind::Bnb, config.budget);
    run_jobs(
        reproduce_jobs(config),
        config.digest(),
        &exact,
        config.jobs,
        out_dir,
    )
}
