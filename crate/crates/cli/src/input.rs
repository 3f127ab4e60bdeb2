//! Parsing of graph arguments.
//!
//! A graph argument is one of
//! - a family shorthand: `path:N`, `cycle:N`, `complete:N`, `star:N`;
//! - an inline JSON object `{"n": .., "edges": [[u, v], ..]}`;
//! - a graph6 string.

use anyhow::{anyhow, bail, Context, Result};
use ocdom_core::generators::{complete, cycle, path, star};
use ocdom_core::{parse_graph6, Graph, GraphJson};

pub fn parse_graph(arg: &str) -> Result<Graph> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        let json: GraphJson = serde_json::from_str(arg).context("parsing JSON graph")?;
        return Ok(Graph::try_from(json)?);
    }
    if let Some((family, n)) = arg.split_once(':') {
        let n: usize = n.parse().with_context(|| format!("bad order in `{arg}`"))?;
        if n > ocdom_core::MAX_ORDER {
            bail!("order {n} exceeds {}", ocdom_core::MAX_ORDER);
        }
        return match family {
            "path" | "P" => Ok(path(n)),
            "cycle" | "C" => Ok(cycle(n)?),
            "complete" | "K" => Ok(complete(n)),
            "star" | "S" => Ok(star(n)),
            _ => Err(anyhow!(
                "unknown family `{family}` (path, cycle, complete, star)"
            )),
        };
    }
    parse_graph6(arg.as_bytes()).with_context(|| format!("parsing graph6 `{arg}`"))
}

/// `4,4,4` or `4x4x4`.
pub fn parse_orders(arg: &str) -> Result<Vec<usize>> {
    arg.split([',', 'x'])
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("bad order `{s}`"))
        })
        .collect()
}
