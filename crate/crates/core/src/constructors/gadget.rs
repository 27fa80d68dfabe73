//! Small labeled orientations of `H0`.
//!
//! A gadget orients `H0` and labels it injectively from a small pool so that
//! every `y ∈ Y` has a sum in `[-4, 0]`, the `y`-sums are pairwise distinct
//! and no two differ by more than 4. `H0` has at most seven edges, so all
//! candidates are found by plain enumeration.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::labeling::{raw_sums, Label};

pub const SUM_FLOOR: i64 = -4;
pub const MAX_GAP: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("pool of {pool} labels cannot label {edges} edges injectively")]
    PoolTooSmall { pool: usize, edges: usize },
    #[error("H0 has {0} edges, enumeration is limited to 8")]
    TooLarge(usize),
}

/// One orientation and labeling of `H0`, edges indexed like `H0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub arcs: Vec<(Vertex, Vertex)>,
    pub labels: Vec<Label>,
    /// The used label set `N_0`.
    pub used: BTreeSet<Label>,
    /// `(y, s(y))` for every `y`, in the order `ys` was given.
    pub y_sums: Vec<(Vertex, i64)>,
}

impl Gadget {
    pub fn y_sum(&self, y: Vertex) -> i64 {
        self.y_sums.iter().find(|&&(v, _)| v == y).map(|&(_, s)| s).expect("y belongs to the gadget")
    }

    /// True when no arc leaves a vertex outside `Y`, so connector
    /// endpoints never get a negative contribution.
    pub fn connectors_inward(&self, ys: &[Vertex]) -> bool {
        self.arcs.iter().all(|(tail, _)| ys.contains(tail))
    }
}

/// `{1, ..., 6}`, or `{1, ..., 6, 10}` when `H0` is a five-vertex path.
pub fn gadget_pool(h0_is_p5: bool) -> Vec<Label> {
    let mut pool: Vec<Label> = (1..=6).collect();
    if h0_is_p5 {
        pool.push(10);
    }
    pool
}

/// Checks the three gadget conditions on the `y`-sums.
pub fn satisfies_gadget_bounds(y_sums: &[i64]) -> bool {
    if y_sums.iter().any(|&s| !(SUM_FLOOR..=0).contains(&s)) {
        return false;
    }
    y_sums.iter().enumerate().all(|(i, &a)| {
        y_sums[i + 1..].iter().all(|&b| a != b && (a - b).abs() <= MAX_GAP)
    })
}

/// Every gadget of `h0` (a spanning subgraph whose edges are `H0`) over
/// `pool`, in a fixed order: gadgets whose arcs all start in `Y` first, then
/// those using fewer of the labels 1 and 2, then lexicographic by
/// orientation bits and label sequence.
pub fn gadget_candidates(h0: &Graph, ys: &[Vertex], pool: &[Label]) -> Result<Vec<Gadget>, GadgetError> {
    let e = h0.m();
    if e > 8 {
        return Err(GadgetError::TooLarge(e));
    }
    if pool.len() < e {
        return Err(GadgetError::PoolTooSmall { pool: pool.len(), edges: e });
    }
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    pool.dedup();

    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(e);
    let mut taken = vec![false; pool.len()];
    for bits in 0u32..(1 << e) {
        let arcs: Vec<(Vertex, Vertex)> = h0
            .edges()
            .iter()
            .enumerate()
            .map(|(j, &(a, b))| if bits >> j & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        enumerate_labels(&pool, e, &mut chosen, &mut taken, &mut |labels| {
            let sums = raw_sums(h0.n(), arcs.iter().copied().zip(labels.iter().copied()));
            let y_sums: Vec<i64> = ys.iter().map(|&y| sums[y]).collect();
            if satisfies_gadget_bounds(&y_sums) {
                found.push(Gadget {
                    arcs: arcs.clone(),
                    labels: labels.to_vec(),
                    used: labels.iter().copied().collect(),
                    y_sums: ys.iter().copied().zip(y_sums).collect(),
                });
            }
        });
    }
    found.sort_by_key(|g| (!g.connectors_inward(ys), g.used.iter().filter(|&&l| l <= 2).count()));
    Ok(found)
}

fn enumerate_labels(pool: &[Label], len: usize, chosen: &mut Vec<Label>, taken: &mut [bool], visit: &mut impl FnMut(&[Label])) {
    if chosen.len() == len {
        visit(chosen);
        return;
    }
    for i in 0..pool.len() {
        if !taken[i] {
            taken[i] = true;
            chosen.push(pool[i]);
            enumerate_labels(pool, len, chosen, taken, visit);
            chosen.pop();
            taken[i] = false;
        }
    }
}
