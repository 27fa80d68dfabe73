use std::collections::BTreeSet;

use super::decomposition::{build_decomposition, Decomposition};
use super::gadget::{gadget_candidates, gadget_pool, Gadget};
use super::plan::{sort_by_sum, ArcPlan};
use super::ConstructionError;
use crate::euler::euler_orient_label_by_component;
use crate::graph::{Graph, Vertex};
use crate::labeling::{Label, Labeling, Orientation, Provenance, Solution};
use crate::oracle::{brute_force_solve, SearchBudget, SearchOutcome};

/// Smallest label handed to `H1` edges.
const POOL_START: usize = 5;

/// How the labels `1..=m` were split by a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPlan {
    /// `N_0`, labels used by the gadget.
    pub gadget_labels: BTreeSet<Label>,
    /// `(y_i, N_i)` in `≺` order.
    pub pools: Vec<(Vertex, Vec<Label>)>,
    /// `s(y_i)` after the `H1` step, in `≺` order.
    pub y_sums_after_h1: Vec<i64>,
    /// `N`, the labels of `G[N(x)]`.
    pub h2_labels: Vec<Label>,
    /// Largest label of `N`, 0 if empty.
    pub p: Label,
    /// `a_1 < ... < a_{n-t}` on the star at `x`.
    pub star_labels: Vec<Label>,
    /// `(v_i, a_i)`: the star assignment.
    pub star: Vec<(Vertex, Label)>,
}

impl LabelPlan {
    /// Largest label of the last pool, if nonempty.
    pub fn q_star(&self) -> Option<Label> {
        self.pools.last().and_then(|(_, pool)| pool.iter().max().copied())
    }

    /// All parts are disjoint and together give `1..=m`.
    pub fn partitions(&self, m: usize) -> bool {
        let mut all: Vec<Label> = self.gadget_labels.iter().copied().collect();
        for (_, pool) in &self.pools {
            all.extend(pool);
        }
        all.extend(&self.h2_labels);
        all.extend(&self.star_labels);
        all.sort_unstable();
        all == (1..=m as Label).collect::<Vec<_>>()
    }
}

#[derive(Debug, Clone)]
pub struct MainOutcome {
    pub solution: Solution,
    pub decomposition: Decomposition,
    /// Absent when the exhaustive search produced the solution.
    pub plan: Option<LabelPlan>,
    /// Gadget candidates tried, including the successful one.
    pub gadgets_tried: usize,
}

/// Antimagic orientation for a hub `x` with `Δ = n - t ≥ 4`, `t ∈ {4, 5}`
/// and `1 ≤ Δ(G[Y]) ≤ t - 3`.
pub fn construct_main(g: &Graph, x: Vertex, oracle_budget: usize) -> Result<Solution, ConstructionError> {
    construct_main_traced(g, x, oracle_budget).map(|o| o.solution)
}

/// [`construct_main`], also returning the decomposition and label split.
///
/// Gadget candidates are tried in order; a candidate is accepted only if
/// the `Y` chain `0 ≥ s(y_1) > ... > s(y_{t-1})` holds after the `H1` step,
/// every neighbor of `x` ends with `s(v_i) ≥ a_i - p > 0`, and the final
/// labeling verifies.
pub fn construct_main_traced(g: &Graph, x: Vertex, oracle_budget: usize) -> Result<MainOutcome, ConstructionError> {
    let dec = build_decomposition(g, x)?;
    let m = g.m();
    let is_p5 = dec.h0_is_p5(g);

    if is_p5 && (m == 8 || m == 9) {
        let solution = exhaustive(g, m)?;
        return Ok(MainOutcome { solution, decomposition: dec, plan: None, gadgets_tried: 0 });
    }

    let pool: Vec<Label> = gadget_pool(is_p5).into_iter().filter(|&l| l as usize <= m).collect();
    let candidates = gadget_candidates(&dec.h0(g), &dec.ys, &pool)?;
    for (i, gadget) in candidates.iter().enumerate() {
        if let Some((solution, plan)) = attempt(g, &dec, gadget) {
            return Ok(MainOutcome { solution, decomposition: dec, plan: Some(plan), gadgets_tried: i + 1 });
        }
    }

    if m <= oracle_budget {
        let solution = exhaustive(g, m)?;
        return Ok(MainOutcome { solution, decomposition: dec, plan: None, gadgets_tried: candidates.len() });
    }
    Err(ConstructionError::GadgetExhausted { tried: candidates.len(), instance: g.to_edge_list() })
}

fn exhaustive(g: &Graph, max_edges: usize) -> Result<Solution, ConstructionError> {
    match brute_force_solve(g, &SearchBudget::edges(max_edges))? {
        SearchOutcome::Found(solution) => Ok(solution),
        SearchOutcome::Exhausted => Err(ConstructionError::OracleExhausted { instance: g.to_edge_list() }),
        SearchOutcome::BudgetExceeded => unreachable!("no node or time cap was set"),
    }
}

/// `≺`: ascending `H1` degree, ties by descending gadget sum.
fn precedence_order(g: &Graph, dec: &Decomposition, gadget: &Gadget) -> Vec<(Vertex, usize)> {
    let mut order: Vec<(Vertex, usize)> = dec.ys.iter().map(|&y| (y, dec.h1_degree(g, y))).collect();
    order.sort_by_key(|&(y, degree)| (degree, -gadget.y_sum(y)));
    order
}

fn attempt(g: &Graph, dec: &Decomposition, gadget: &Gadget) -> Option<(Solution, LabelPlan)> {
    let m = g.m();
    let mut plan = ArcPlan::new(g);
    plan.embed(
        &dec.h0_edges,
        &Orientation::new(gadget.arcs.clone()),
        &Labeling::new(gadget.labels.clone()),
    );

    let mut used: BTreeSet<Label> = gadget.used.clone();
    let mut free = (POOL_START..=m).map(|l| l as Label).filter(|l| !gadget.used.contains(l));
    let mut pools = Vec::with_capacity(dec.ys.len());
    for (y, degree) in precedence_order(g, dec, gadget) {
        let pool: Vec<Label> = free.by_ref().take(degree).collect();
        if pool.len() < degree {
            return None;
        }
        let mut edges: Vec<(Vertex, usize)> = dec
            .h1_edges
            .iter()
            .filter_map(|&e| {
                let (a, b) = g.edge(e);
                match (a == y, b == y) {
                    (true, _) => Some((b, e)),
                    (_, true) => Some((a, e)),
                    _ => None,
                }
            })
            .collect();
        edges.sort_unstable();
        for (&(v, e), &label) in edges.iter().zip(&pool) {
            plan.set(e, y, v, label);
        }
        used.extend(&pool);
        pools.push((y, pool));
    }

    let sums = plan.sums();
    let y_sums_after_h1: Vec<i64> = pools.iter().map(|&(y, _)| sums[y]).collect();
    if y_sums_after_h1.first().is_some_and(|&s| s > 0) || y_sums_after_h1.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }

    let rest: Vec<Label> = (1..=m as Label).filter(|l| !used.contains(l)).collect();
    let (h2_labels, star_labels) = rest.split_at(dec.m1());
    let p = h2_labels.last().copied().unwrap_or(0);

    let h2 = g.edge_subgraph(&dec.h2_edges);
    let (d2, t2) = euler_orient_label_by_component(&h2, h2_labels).ok()?;
    plan.embed(&dec.h2_edges, &d2, &t2);

    let neighbors: Vec<Vertex> = g.neighbors(dec.x).iter().copied().collect();
    let partial = plan.sums();
    let mut star = Vec::with_capacity(neighbors.len());
    for (v, &a) in sort_by_sum(&neighbors, &partial).into_iter().zip(star_labels) {
        let e = g.edge_id(dec.x, v).expect("neighbor of x");
        plan.set(e, dec.x, v, a);
        star.push((v, a));
    }

    let final_sums = plan.sums();
    if star.iter().any(|&(v, a)| final_sums[v] < i64::from(a) - i64::from(p) || i64::from(a) <= i64::from(p)) {
        return None;
    }

    let provenance = if dec.t == 4 { Provenance::MainT4 } else { Provenance::MainT5 };
    let (orientation, labeling) = plan.finish();
    let solution = Solution::new(g.clone(), orientation, labeling, provenance).ok()?;
    Some((
        solution,
        LabelPlan {
            gadget_labels: gadget.used.clone(),
            pools,
            y_sums_after_h1,
            h2_labels: h2_labels.to_vec(),
            p,
            star_labels: star_labels.to_vec(),
            star,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t4_instance_verifies() {
        let g = Graph::new(8, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6), (1, 5), (2, 6), (3, 7), (4, 7), (1, 2)]).unwrap();
        let out = construct_main_traced(&g, 0, 0).unwrap();
        assert_eq!(out.solution.provenance(), Provenance::MainT4);
        let plan = out.plan.unwrap();
        assert!(plan.partitions(g.m()));
        assert!(plan.y_sums_after_h1[0] <= 0);
        assert_eq!(out.gadgets_tried, 1);
    }

    #[test]
    fn t5_two_edges_verifies() {
        // n = 9, x = 0, N(x) = {1..4}, Y = {5,6,7,8}, G[Y] = 56 + 78
        let g = Graph::new(9, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6), (7, 8), (1, 5), (2, 7), (3, 6), (4, 8), (1, 2)]).unwrap();
        let s = construct_main(&g, 0, 0).unwrap();
        assert_eq!(s.provenance(), Provenance::MainT5);
    }

    #[test]
    fn p5_small_goes_to_search() {
        let g = Graph::new(9, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6), (6, 7), (7, 8), (1, 5), (2, 3)]).unwrap();
        let out = construct_main_traced(&g, 0, 0).unwrap();
        assert_eq!(g.m(), 9);
        assert!(out.plan.is_none());
        assert_eq!(out.solution.provenance(), Provenance::Oracle);
    }
}
