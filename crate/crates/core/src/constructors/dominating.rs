use std::collections::BTreeSet;

use super::plan::{label_range, sort_by_sum, ArcPlan};
use super::ConstructionError;
use crate::euler::euler_orient_label_by_component;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::{Label, Labeling, Orientation, Provenance, Solution};

/// Antimagic orientation from a dominating pair: `N[x] ∪ N[y] = V`,
/// `d(x) ≥ d(y)`, and either `d(x) ≥ 4` or `N(x) ∩ N[y] ≠ ∅`.
///
/// Every vertex other than `x, y` ends up with a positive sum and `x, y`
/// with non-positive ones. If `x` and `y` collide, one of three local
/// repairs separates them: flipping the lowest top-labeled edge (disjoint
/// neighborhoods), swapping the labels on `xv`, `yv` for a common neighbor
/// `v`, or reversing `xy`.
pub fn construct_dominating_pair(g: &Graph, x: Vertex, y: Vertex) -> Result<Solution, ConstructionError> {
    let n = g.n();
    if x >= n || y >= n || x == y {
        return Err(ConstructionError::precondition("x and y must be distinct vertices"));
    }
    let closed_x = g.closed_neighborhood(x).expect("in range");
    let closed_y = g.closed_neighborhood(y).expect("in range");
    if closed_x.union(&closed_y).count() != n {
        return Err(ConstructionError::precondition("N[x] ∪ N[y] does not cover V(G)"));
    }
    if g.degree(x) < g.degree(y) {
        return Err(ConstructionError::precondition("d(x) < d(y)"));
    }
    let common: BTreeSet<Vertex> = g.neighbors(x).intersection(&closed_y).copied().collect();
    if g.degree(x) < 4 && common.is_empty() {
        return Err(ConstructionError::precondition("d(x) < 4 and N(x) ∩ N[y] = ∅"));
    }
    if common.is_empty() {
        disjoint_branch(g, x, y)
    } else {
        if n < 4 {
            return Err(ConstructionError::precondition("n ≤ 3 is left to the exhaustive search"));
        }
        overlapping_branch(g, x, y, common)
    }
}

fn others(n: usize, x: Vertex, y: Vertex) -> Vec<Vertex> {
    (0..n).filter(|&v| v != x && v != y).collect()
}

fn other_end(g: &Graph, e: EdgeId, v: Vertex) -> Vertex {
    let (a, b) = g.edge(e);
    if a == v {
        b
    } else {
        a
    }
}

fn try_finish(g: &Graph, d: Orientation, t: Labeling, provenance: Provenance) -> Option<Solution> {
    Solution::new(g.clone(), d, t, provenance).ok()
}

/// Shared tail of both branches: label `G - {x, y}` from `labels`, then
/// point each connector `e_v` at `v` with labels above `m - n + 2`, in
/// ascending order of the partial sums.
fn attach_connectors(g: &Graph, plan: &mut ArcPlan, x: Vertex, y: Vertex, labels: &[Label], connector: impl Fn(Vertex) -> EdgeId) -> Result<Vec<EdgeId>, ConstructionError> {
    let rest = others(g.n(), x, y);
    let (h, ids) = g.induced_subgraph(&rest);
    let (dh, th) = euler_orient_label_by_component(&h, labels)?;
    plan.embed(&ids, &dh, &th);

    let base = g.m() + 2 - g.n();
    let partial = plan.sums();
    let mut order = Vec::with_capacity(rest.len());
    for (i, v) in sort_by_sum(&rest, &partial).into_iter().enumerate() {
        let e = connector(v);
        plan.set(e, other_end(g, e, v), v, (base + i + 1) as Label);
        order.push(e);
    }
    Ok(order)
}

fn disjoint_branch(g: &Graph, x: Vertex, y: Vertex) -> Result<Solution, ConstructionError> {
    let mut plan = ArcPlan::new(g);
    let base = g.m() + 2 - g.n();
    let connector = |v: Vertex| g.edge_id(v, x).or_else(|| g.edge_id(v, y)).expect("v is dominated");
    let order = attach_connectors(g, &mut plan, x, y, &label_range(1, base), connector)?;
    let (d, t) = plan.finish();

    let provenance = Provenance::DominatingPairBranch1;
    if let Some(solution) = try_finish(g, d.clone(), t.clone(), provenance) {
        return Ok(solution);
    }
    // s(x) = s(y): turn the connector with the smallest top label around
    let mut flipped = d;
    flipped.reverse(order[0]);
    try_finish(g, flipped, t, provenance).ok_or(ConstructionError::NoRepair { x, y })
}

fn overlapping_branch(g: &Graph, x: Vertex, y: Vertex, common: BTreeSet<Vertex>) -> Result<Solution, ConstructionError> {
    let xy = g.edge_id(x, y);
    let mut hubs: Vec<Vertex> = Vec::with_capacity(common.len());
    if common.contains(&y) {
        hubs.push(y);
    }
    hubs.extend(common.iter().copied().filter(|&v| v != y));
    let t = hubs.len();

    let mut plan = ArcPlan::new(g);
    for (j, &v) in hubs.iter().enumerate() {
        let e = g.edge_id(x, v).expect("common vertices are neighbors of x");
        if v == y {
            plan.set(e, y, x, (j + 1) as Label);
        } else {
            plan.set(e, x, v, (j + 1) as Label);
        }
    }
    let base = g.m() + 2 - g.n();
    let connector = |v: Vertex| {
        if common.contains(&v) {
            g.edge_id(v, y).expect("common vertices are neighbors of y")
        } else {
            g.edge_id(v, x).or_else(|| g.edge_id(v, y)).expect("v is dominated")
        }
    };
    attach_connectors(g, &mut plan, x, y, &label_range(t + 1, base), connector)?;
    let (d, labels) = plan.finish();

    let provenance = Provenance::DominatingPairBranch2;
    if let Some(solution) = try_finish(g, d.clone(), labels.clone(), provenance) {
        return Ok(solution);
    }
    // s(x) = s(y): swap labels on xv and yv for a vertex v complete to {x, y}
    for &v in hubs.iter().filter(|&&v| v != y) {
        let (ex, ey) = (g.edge_id(x, v).expect("edge"), g.edge_id(y, v).expect("edge"));
        let mut swapped = labels.clone();
        swapped.swap(ex, ey);
        if let Some(solution) = try_finish(g, d.clone(), swapped, provenance) {
            return Ok(solution);
        }
    }
    // only xy is shared: point it at y instead
    if let (1, Some(e)) = (t, xy) {
        let mut flipped = d;
        flipped.reverse(e);
        if let Some(solution) = try_finish(g, flipped, labels, provenance) {
            return Ok(solution);
        }
    }
    Err(ConstructionError::NoRepair { x, y })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_uses_second_branch() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = construct_dominating_pair(&g, 0, 1).unwrap();
        assert_eq!(s.provenance(), Provenance::DominatingPairBranch2);
    }

    #[test]
    fn two_stars_use_first_branch() {
        // x = 0 with leaves 2..=5, y = 1 with leaves 6, 7, extra edge 2-6
        let g = Graph::new(8, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (2, 6)]).unwrap();
        let s = construct_dominating_pair(&g, 0, 1).unwrap();
        assert_eq!(s.provenance(), Provenance::DominatingPairBranch1);
        let sums = s.sums();
        assert!(sums[0] < 0 && sums[1] <= 0);
        assert!((2..8).all(|v| sums[v] > 0));
    }

    #[test]
    fn small_double_star_is_rejected() {
        let g = Graph::new(8, [(0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        match construct_dominating_pair(&g, 0, 1) {
            Err(ConstructionError::Precondition(msg)) => assert!(msg.contains("d(x) < 4")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn star_with_center_and_leaf() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = construct_dominating_pair(&g, 0, 1).unwrap();
        assert_eq!(s.provenance(), Provenance::DominatingPairBranch2);
    }

    #[test]
    fn not_dominating() {
        let p5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(construct_dominating_pair(&p5, 1, 2), Err(ConstructionError::Precondition(_))));
    }
}
