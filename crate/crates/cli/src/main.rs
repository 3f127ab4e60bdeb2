mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ocdom_core::checks::{CheckId, Instance, VerificationRecord};
use ocdom_core::corpus::{load_corpus, CorpusSpec, Filters};
use ocdom_core::harness::{
    digest_text, reproduce, run_jobs, run_suite, to_jsonl, Job, ReproduceConfig, RunReport,
    SuiteConfig, DEFAULT_CAP, DEFAULT_SAMPLE, DEFAULT_SEED, REPRODUCE_SAMPLE,
};
use ocdom_core::products::{
    cartesian, corona, direct, direct_power_complete, lexicographic, ProductInstance,
};
use ocdom_core::solvers::{solve, Budget, DominationKind, Exact, SolverKind};
use ocdom_core::witness::{
    cartesian_prediction, corona_prediction, direct_diagonal_prediction, lex_k1_prediction,
    lex_prediction, Prediction,
};
use ocdom_core::{emit_graph6, Graph, GraphJson};

use input::{parse_graph, parse_orders};

const DEFAULT_OUT_DIR: &str = "ocdom-out";

/// Exact domination numbers of graphs and graph products.
#[derive(Debug, Parser)]
#[command(name = "ocdom", version)]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for suite runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for random corpora and sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Search-node limit per exact solve.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Directory for persisted records and reports.
    #[arg(long, global = true, env = "OCDOM_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Jsonl,
    Dot,
    Graph6,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductArg {
    Cartesian,
    Lex,
    Corona,
    Direct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Theorem {
    Lex,
    LexK1,
    Corona,
    Cartesian,
    DirectDiagonal,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact gamma, gamma-t and gamma-oc with canonical witnesses.
    Compute {
        /// graph6, inline JSON, or a family such as `path:4`.
        graph: String,
        /// One of gamma, gamma-t, gamma-oc; all three when omitted.
        #[arg(long)]
        kind: Option<DominationKind>,
        #[arg(long, default_value = "bnb")]
        solver: SolverKind,
    },
    /// The closed-form construction for a product, with its witness.
    Predict {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        /// Complete-graph orders for `direct-diagonal`, e.g. `4,4,4`.
        #[arg(long)]
        orders: Option<String>,
    },
    /// Build a product graph and its index map.
    Product {
        #[arg(long, value_enum)]
        kind: ProductArg,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        /// Complete-graph orders for an iterated direct product.
        #[arg(long)]
        orders: Option<String>,
    },
    /// Run checks on inline instances or on a corpus.
    Verify {
        /// A check id, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// Inline instance: one, two or three graphs, in order.
        #[arg(long = "graph")]
        graphs: Vec<String>,
        /// Inline direct-power instance, e.g. `4,4,4`.
        #[arg(long)]
        orders: Option<String>,
        /// `exhaustive:N`, `random:N,COUNT,P` or `file:PATH`.
        #[arg(long, conflicts_with_all = ["graphs", "orders"])]
        corpus: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLE)]
        sample: usize,
        #[arg(long, default_value = "bnb")]
        solver: SolverKind,
    },
    /// List a corpus.
    Corpus {
        /// `exhaustive:N`, `random:N,COUNT,P` or `file:PATH`.
        spec: String,
        #[arg(long)]
        min_order: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        connected_only: bool,
        /// Keep graphs with gamma = 1 (`true`) or gamma != 1 (`false`).
        #[arg(long)]
        gamma_one: Option<bool>,
    },
    /// Run the bundled scenario list and write records plus a report.
    Reproduce {
        /// Order-5 pairs sampled for the lexicographic checks.
        #[arg(long, default_value_t = REPRODUCE_SAMPLE)]
        sample: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let budget = Budget(cli.budget);
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let out = std::io::stdout();
    let mut out = out.lock();
    match cli.command {
        Command::Compute {
            graph,
            kind,
            solver,
        } => compute(
            &mut out,
            cli.format.unwrap_or(Format::Json),
            &graph,
            kind,
            solver,
            budget,
        ),
        Command::Predict {
            theorem,
            g,
            h,
            orders,
        } => predict(
            &mut out,
            cli.format.unwrap_or(Format::Json),
            theorem,
            g,
            h,
            orders,
            budget,
        ),
        Command::Product { kind, g, h, orders } => product(
            &mut out,
            cli.format.unwrap_or(Format::Json),
            kind,
            g,
            h,
            orders,
        ),
        Command::Verify {
            check,
            graphs,
            orders,
            corpus,
            cap,
            sample,
            solver,
        } => {
            let checks = parse_checks(&check)?;
            let format = cli.format.unwrap_or(Format::Jsonl);
            let out_dir = cli.out_dir.as_deref();
            let result = match corpus {
                Some(spec) => {
                    let mut config = SuiteConfig::new(parse_corpus(&spec, seed)?, checks);
                    config.cap = cap;
                    config.sample = sample;
                    config.seed = seed;
                    config.solver = solver;
                    config.budget = budget;
                    config.jobs = cli.jobs;
                    run_suite(&config, out_dir)?
                }
                None => {
                    let instance = inline_instance(&graphs, orders.as_deref())?;
                    let jobs: Vec<Job> = checks
                        .into_iter()
                        .filter(|c| check != "all" || c.arity() == instance.arity())
                        .map(|c| Job::new(c, instance.clone()))
                        .collect();
                    let digest = digest_text(&format!(
                        "verify|{check}|{}|{solver:?}|{budget:?}",
                        instance.tag()
                    ));
                    run_jobs(jobs, digest, &Exact::new(solver, budget), cli.jobs, out_dir)?
                }
            };
            match out_dir {
                Some(dir) => {
                    write_json(&mut out, format, &result.report)?;
                    eprintln!("records written to {}", dir.display());
                }
                None => {
                    write_records(&mut out, format, &result.records)?;
                    summary(&result.report);
                }
            }
            Ok(())
        }
        Command::Corpus {
            spec,
            min_order,
            max_order,
            connected_only,
            gamma_one,
        } => {
            let filters = Filters {
                min_order,
                max_order,
                connected_only,
                gamma_one,
            };
            let exact = Exact::new(SolverKind::Bnb, budget);
            let graphs = load_corpus(&parse_corpus(&spec, seed)?, &filters, &exact)?;
            write_graphs(&mut out, cli.format.unwrap_or(Format::Graph6), &graphs)
        }
        Command::Reproduce { sample } => {
            let dir = cli
                .out_dir
                .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
            let config = ReproduceConfig {
                seed,
                sample,
                budget,
                jobs: cli.jobs,
            };
            let result = reproduce(&config, Some(&dir))?;
            write_json(&mut out, cli.format.unwrap_or(Format::Json), &result.report)?;
            summary(&result.report);
            eprintln!("records written to {}", dir.display());
            Ok(())
        }
    }
}

fn parse_checks(arg: &str) -> Result<Vec<CheckId>> {
    if arg == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    arg.split(',')
        .map(|s| s.trim().parse::<CheckId>().map_err(anyhow::Error::msg))
        .collect()
}

fn parse_corpus(spec: &str, seed: u64) -> Result<CorpusSpec> {
    let (mode, rest) = spec
        .split_once(':')
        .with_context(|| format!("corpus `{spec}` must look like MODE:ARGS"))?;
    match mode {
        "exhaustive" => Ok(CorpusSpec::Exhaustive {
            max_n: rest.parse().context("exhaustive order")?,
        }),
        "random" => {
            let parts: Vec<&str> = rest.split(',').collect();
            let [n, count, p] = parts[..] else {
                bail!("random corpus needs N,COUNT,P");
            };
            Ok(CorpusSpec::Random {
                n: n.parse().context("random order")?,
                count: count.parse().context("random count")?,
                edge_prob: p.parse().context("edge probability")?,
                seed,
            })
        }
        "file" => Ok(CorpusSpec::File { path: rest.into() }),
        _ => bail!("unknown corpus mode `{mode}` (exhaustive, random, file)"),
    }
}

fn inline_instance(graphs: &[String], orders: Option<&str>) -> Result<Instance> {
    if let Some(o) = orders {
        if !graphs.is_empty() {
            bail!("give either --graph or --orders, not both");
        }
        return Ok(Instance::Orders(parse_orders(o)?));
    }
    let parsed = graphs
        .iter()
        .map(|g| parse_graph(g))
        .collect::<Result<Vec<_>>>()?;
    match <[Graph; 3]>::try_from(parsed) {
        Ok([g, h, k]) => Ok(Instance::Triple(g, h, k)),
        Err(parsed) => match parsed.len() {
            1 => Ok(Instance::Graph(parsed[0].clone())),
            2 => Ok(Instance::Pair(parsed[0].clone(), parsed[1].clone())),
            n => bail!("expected 1 to 3 --graph values or --orders, got {n} graphs"),
        },
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str> {
    value
        .as_deref()
        .with_context(|| format!("--{flag} is required here"))
}

fn write_json<T: Serialize>(out: &mut impl Write, format: Format, value: &T) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(value)?)?,
        other => bail!("format {other:?} is not available for this output"),
    }
    Ok(())
}

fn write_records(
    out: &mut impl Write,
    format: Format,
    records: &[VerificationRecord],
) -> Result<()> {
    match format {
        Format::Jsonl => out.write_all(to_jsonl(records).as_bytes())?,
        _ => write_json(out, format, &records)?,
    }
    Ok(())
}

fn write_graphs(out: &mut impl Write, format: Format, graphs: &[Graph]) -> Result<()> {
    match format {
        Format::Graph6 => {
            for g in graphs {
                writeln!(out, "{}", emit_graph6(g))?;
            }
        }
        Format::Jsonl => {
            for g in graphs {
                writeln!(out, "{}", serde_json::to_string(&GraphJson::from(g))?)?;
            }
        }
        Format::Json => {
            let all: Vec<GraphJson> = graphs.iter().map(GraphJson::from).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&all)?)?;
        }
        Format::Dot => {
            for (i, g) in graphs.iter().enumerate() {
                write!(out, "{}", g.to_dot(&format!("g{i}")))?;
            }
        }
    }
    Ok(())
}

fn summary(report: &RunReport) {
    for (check, s) in &report.checks {
        eprintln!(
            "{check}: pass {} discrepancy {} refused {} budget {}",
            s.pass, s.discrepancy, s.refused_precondition, s.budget_exhausted
        );
    }
    for (class, n) in report.class_counts() {
        let name = match serde_json::to_value(class) {
            Ok(Value::String(s)) => s,
            _ => "unclassified".into(),
        };
        eprintln!("discrepancies {name}: {n}");
    }
}

fn compute(
    out: &mut impl Write,
    format: Format,
    graph: &str,
    kind: Option<DominationKind>,
    solver: SolverKind,
    budget: Budget,
) -> Result<()> {
    let g = parse_graph(graph)?;
    let kinds = kind
        .map(|k| vec![k])
        .unwrap_or_else(|| DominationKind::ALL.to_vec());
    let results: Vec<Value> = kinds
        .iter()
        .map(|&k| match solve(&g, k, solver, budget) {
            Ok(cert) => serde_json::to_value(cert).expect("certificate serializes"),
            Err(e) => json!({"kind": k, "error": e.to_string()}),
        })
        .collect();
    let g6 = emit_graph6(&g);
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json!({"graph6": g6, "certificates": results}))?
        )?,
        Format::Jsonl => {
            for mut r in results {
                r["graph6"] = json!(g6);
                writeln!(out, "{}", serde_json::to_string(&r)?)?;
            }
        }
        Format::Dot => {
            let marked = match solve(&g, *kinds.last().expect("non-empty"), solver, budget) {
                Ok(c) => Some(c.witness),
                Err(_) => None,
            };
            write!(out, "{}", g.to_dot_marked("g", marked.as_ref()))?;
        }
        Format::Graph6 => writeln!(out, "{g6}")?,
    }
    Ok(())
}

fn predict(
    out: &mut impl Write,
    format: Format,
    theorem: Theorem,
    g: Option<String>,
    h: Option<String>,
    orders: Option<String>,
    budget: Budget,
) -> Result<()> {
    let exact = Exact::new(SolverKind::Bnb, budget);
    let pair = || -> Result<(Graph, Graph)> {
        Ok((
            parse_graph(required(&g, "g")?)?,
            parse_graph(required(&h, "h")?)?,
        ))
    };
    let pred: Prediction = match theorem {
        Theorem::Lex => {
            let (g, h) = pair()?;
            lex_prediction(&g, &h, &exact)?
        }
        Theorem::LexK1 => {
            let (g, h) = pair()?;
            lex_k1_prediction(&g, &h, &exact)?
        }
        Theorem::Corona => {
            let (g, h) = pair()?;
            corona_prediction(&g, &h, &exact)?
        }
        Theorem::Cartesian => {
            let (g, h) = pair()?;
            cartesian_prediction(&g, &h, &exact)?
        }
        Theorem::DirectDiagonal => {
            direct_diagonal_prediction(&parse_orders(required(&orders, "orders")?)?)?
        }
    };
    let product = &pred.instance.product;
    match format {
        Format::Json | Format::Jsonl => {
            let mut v = serde_json::to_value(&pred)?;
            v["product_graph6"] = json!(emit_graph6(product));
            v["product_order"] = json!(product.order());
            write_json(out, format, &v)?;
        }
        Format::Dot => write!(
            out,
            "{}",
            product.to_dot_marked("product", pred.witness.as_ref())
        )?,
        Format::Graph6 => writeln!(out, "{}", emit_graph6(product))?,
    }
    Ok(())
}

fn product(
    out: &mut impl Write,
    format: Format,
    kind: ProductArg,
    g: Option<String>,
    h: Option<String>,
    orders: Option<String>,
) -> Result<()> {
    let instance: ProductInstance = match (kind, &orders) {
        (ProductArg::Direct, Some(o)) => direct_power_complete(&parse_orders(o)?)?,
        (_, Some(_)) => bail!("--orders only applies to --kind direct"),
        _ => {
            let g = parse_graph(required(&g, "g")?)?;
            let h = parse_graph(required(&h, "h")?)?;
            match kind {
                ProductArg::Cartesian => cartesian(&g, &h)?,
                ProductArg::Lex => lexicographic(&g, &h)?,
                ProductArg::Corona => corona(&g, &h)?,
                ProductArg::Direct => direct(&g, &h)?,
            }
        }
    };
    let p = &instance.product;
    match format {
        Format::Json | Format::Jsonl => {
            let v = json!({
                "kind": instance.kind.name(),
                "order": p.order(),
                "size": p.size(),
                "graph6": emit_graph6(p),
                "graph": GraphJson::from(p),
                "index_map": instance.index_map(),
            });
            write_json(out, format, &v)?;
        }
        Format::Dot => write!(out, "{}", p.to_dot(instance.kind.name()))?,
        Format::Graph6 => writeln!(out, "{}", emit_graph6(p))?,
    }
    Ok(())
}
