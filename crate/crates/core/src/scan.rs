//! Exhaustive small-set scan: is there a valid set of size at most `s`?
//!
//! For each size the lexicographic sequence of subsets is cut into
//! contiguous chunks of [`CHUNK`] subsets, chunks are scanned in parallel
//! on the current rayon pool, and the lowest matching rank wins. Chunk
//! boundaries do not depend on the pool size, so the result does not
//! either.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinations::{advance, binomial, unrank};
use crate::graph::{Graph, Mask, VertexSet};
use crate::solvers::DominationKind;

pub const CHUNK: u128 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanOutcome {
    pub max_size: usize,
    /// Subsets tested, counting up to and including the first match.
    pub subsets_checked: u128,
    /// Lexicographically least valid set of the smallest valid size.
    pub first_valid: Option<VertexSet>,
}

fn valid_mask(g: &Graph, kind: DominationKind, set: Mask) -> bool {
    let full = g.all();
    let mut covered = 0;
    for v in crate::graph::bits(set) {
        covered |= match kind {
            DominationKind::Total => g.row(v),
            _ => g.closed_row(v),
        };
    }
    if covered != full {
        return false;
    }
    kind != DominationKind::OuterConnected || g.is_connected_within(full & !set)
}

fn scan_chunk(g: &Graph, kind: DominationKind, k: usize, start: u128, end: u128) -> Option<u128> {
    let n = g.order();
    let mut combo = unrank(n, k, start)?;
    let mut r = start;
    while r < end {
        let mask = combo.iter().fold(0, |acc: Mask, &v| acc | (1 << v));
        if valid_mask(g, kind, mask) {
            return Some(r);
        }
        r += 1;
        if !advance(&mut combo, n) {
            break;
        }
    }
    None
}

pub fn scan_small_sets(g: &Graph, kind: DominationKind, max_size: usize) -> ScanOutcome {
    let n = g.order();
    let mut checked = 0u128;
    for k in 0..=max_size.min(n) {
        let total = binomial(n, k);
        let chunks = total.div_ceil(CHUNK);
        let hit = (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                let start = c * CHUNK;
                scan_chunk(g, kind, k, start, (start + CHUNK).min(total))
            })
            .min();
        if let Some(r) = hit {
            let ids = unrank(n, k, r).expect("rank in range");
            return ScanOutcome {
                max_size,
                subsets_checked: checked + r + 1,
                first_valid: Some(VertexSet::from_ids(n, ids).expect("ids below order")),
            };
        }
        checked += total;
    }
    ScanOutcome {
        max_size,
        subsets_checked: checked,
        first_valid: None,
    }
}
