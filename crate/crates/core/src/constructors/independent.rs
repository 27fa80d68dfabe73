use std::collections::BTreeSet;

use super::plan::{label_range, sort_by_sum, ArcPlan};
use super::ConstructionError;
use crate::euler::euler_orient_label_by_component;
use crate::graph::{Graph, Vertex};
use crate::labeling::{Provenance, Solution};

/// Builds an antimagic orientation when `x` has maximum degree `Δ ≤ n - 2`
/// and the vertices outside `N[x]` form a nonempty independent set `Y`.
///
/// Edges at `Y` take the labels `1..=m_1`, grouped by `y` in ascending
/// degree order, and point into `N(x)`. `G[N(x)]` is labeled Eulerian with
/// `m_1 + 1..=m - d`. Finally `x` points at each neighbor with `m - d + i`,
/// neighbors sorted by their partial sums. The resulting sums satisfy
/// `s(x) < s(y_t) < ... < s(y_1) < 0 < s(x_1) < ... < s(x_d)`.
pub fn construct_independent(g: &Graph, x: Vertex) -> Result<Solution, ConstructionError> {
    let n = g.n();
    if x >= n {
        return Err(ConstructionError::precondition(format!("vertex {x} out of range")));
    }
    if !g.is_connected() {
        return Err(ConstructionError::precondition("graph is not connected"));
    }
    let d = g.degree(x);
    if d != g.max_degree() {
        return Err(ConstructionError::precondition(format!("d({x}) = {d} is not the maximum degree {}", g.max_degree())));
    }
    if d + 1 >= n {
        return Err(ConstructionError::precondition("x is adjacent to every other vertex, Y is empty"));
    }
    let closed = g.closed_neighborhood(x).expect("x in range");
    let mut ys: Vec<Vertex> = (0..n).filter(|v| !closed.contains(v)).collect();
    if g.max_degree_within(&ys) > 0 {
        return Err(ConstructionError::precondition("V(G) \\ N[x] is not an independent set"));
    }
    ys.sort_by_key(|&y| (g.degree(y), y));

    let m = g.m();
    let mut plan = ArcPlan::new(g);
    let mut next = 1;
    for &y in &ys {
        for e in g.incident_edges(y) {
            let (a, b) = g.edge(e);
            let head = if a == y { b } else { a };
            plan.set(e, y, head, next);
            next += 1;
        }
    }
    let m1 = (next - 1) as usize;

    let neighbors: Vec<Vertex> = g.neighbors(x).iter().copied().collect();
    let (h, ids) = g.induced_subgraph(&neighbors);
    debug_assert_eq!(h.m(), m - d - m1);
    let (dh, th) = euler_orient_label_by_component(&h, &label_range(m1 + 1, m - d))?;
    plan.embed(&ids, &dh, &th);

    let partial = plan.sums();
    for (i, v) in sort_by_sum(&neighbors, &partial).into_iter().enumerate() {
        let e = g.edge_id(x, v).expect("v is a neighbor of x");
        plan.set(e, x, v, (m - d + i + 1) as u32);
    }

    let (orientation, labeling) = plan.finish();
    Ok(Solution::new(g.clone(), orientation, labeling, Provenance::EulerIndependent)?)
}

/// Checks the strict ordering produced by [`construct_independent`]:
/// `s(x) < s(y_t) < ... < s(y_1) < 0 < s(x_1) < ... < s(x_d)` with `Y`
/// in ascending degree order and `N(x)` in ascending sum order.
pub fn independent_chain_holds(g: &Graph, x: Vertex, sums: &[i64]) -> bool {
    let closed: BTreeSet<Vertex> = g.closed_neighborhood(x).expect("x in range");
    let mut ys: Vec<Vertex> = (0..g.n()).filter(|v| !closed.contains(v)).collect();
    ys.sort_by_key(|&y| (g.degree(y), y));
    let mut chain = vec![sums[x]];
    chain.extend(ys.iter().rev().map(|&y| sums[y]));
    let negative_len = chain.len();
    let mut xs: Vec<i64> = g.neighbors(x).iter().map(|&v| sums[v]).collect();
    xs.sort_unstable();
    chain.extend(xs);
    chain.windows(2).all(|w| w[0] < w[1]) && chain[negative_len - 1] < 0 && chain[negative_len] > 0
}
