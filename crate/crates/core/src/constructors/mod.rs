//! Constructive routes to antimagic orientations and the dispatcher that
//! picks one for a given graph.

mod decomposition;
mod dominating;
mod gadget;
mod independent;
mod main_case;
mod plan;

use thiserror::Error;

pub use decomposition::{build_decomposition, Decomposition};
pub use dominating::construct_dominating_pair;
pub use gadget::{gadget_candidates, gadget_pool, satisfies_gadget_bounds, Gadget, GadgetError};
pub use independent::{construct_independent, independent_chain_holds};
pub use main_case::{construct_main, construct_main_traced, LabelPlan, MainOutcome};

use crate::euler::EulerError;
use crate::graph::{Graph, Vertex};
use crate::labeling::{LabelingError, Solution};
use crate::oracle::{brute_force_solve, OracleError, SearchBudget, SearchOutcome};

/// Largest edge count for which [`solve`] falls back to exhaustive search.
pub const DEFAULT_ORACLE_BUDGET: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Euler(#[from] EulerError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no repair separates s({x}) and s({y})")]
    NoRepair { x: Vertex, y: Vertex },
    #[error("all {tried} gadget candidates failed verification on:\n{instance}")]
    GadgetExhausted { tried: usize, instance: String },
    #[error("exhaustive search found no antimagic orientation of:\n{instance}")]
    OracleExhausted { instance: String },
}

impl ConstructionError {
    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        ConstructionError::Precondition(message.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is empty")]
    Empty,
    /// The graph is outside every construction's hypotheses and too large
    /// for exhaustive search.
    #[error("refused: {reason}; m = {m} exceeds the search budget of {budget} edges")]
    Refused { reason: String, m: usize, budget: usize },
    #[error("{route} failed: {source}")]
    ConstructionFailed { route: Route, source: ConstructionError },
}

impl SolveError {
    pub fn is_refusal(&self) -> bool {
        matches!(self, SolveError::Refused { .. })
    }
}

/// The dispatch decision taken by [`plan_route`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Tiny graphs go straight to exhaustive search.
    Small,
    DominatingPair { x: Vertex, y: Vertex },
    Independent { x: Vertex },
    Main { x: Vertex },
    /// No construction applies; carries nothing but the decision.
    Uncovered,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Route::Small => write!(f, "small"),
            Route::DominatingPair { x, y } => write!(f, "dominating-pair(x={x}, y={y})"),
            Route::Independent { x } => write!(f, "independent(x={x})"),
            Route::Main { x } => write!(f, "main(x={x})"),
            Route::Uncovered => write!(f, "uncovered"),
        }
    }
}

/// The first vertex of maximum degree.
pub fn hub(g: &Graph) -> Vertex {
    let delta = g.max_degree();
    (0..g.n()).find(|&v| g.degree(v) == delta).unwrap_or(0)
}

/// Chooses a construction for a connected graph, returning the reason no
/// construction applies for [`Route::Uncovered`].
pub fn plan_route(g: &Graph) -> (Route, Option<String>) {
    let n = g.n();
    if n <= 3 {
        return (Route::Small, None);
    }
    let x = hub(g);
    let delta = g.degree(x);
    let closed = g.closed_neighborhood(x).expect("hub in range");
    let ys: Vec<Vertex> = (0..n).filter(|v| !closed.contains(v)).collect();

    if ys.is_empty() {
        let y = *g.neighbors(x).iter().next().expect("connected graph with n ≥ 2");
        return (Route::DominatingPair { x, y }, None);
    }
    let inner_delta = g.max_degree_within(&ys);
    if inner_delta == 0 {
        return (Route::Independent { x }, None);
    }
    for &y in &ys {
        let dominates_rest = ys.iter().all(|&w| w == y || g.has_edge(y, w));
        let shares_neighbor = g.neighbors(x).iter().any(|w| g.has_edge(*w, y));
        if dominates_rest && g.degree(x) >= g.degree(y) && (delta >= 4 || shares_neighbor) {
            return (Route::DominatingPair { x, y }, None);
        }
    }

    let t = n - delta;
    if (t == 4 || t == 5) && delta >= 4 && inner_delta <= t - 3 {
        return (Route::Main { x }, None);
    }
    let reason = if delta + 5 < n {
        format!("Δ = {delta} < n - 5 = {}", n - 5)
    } else if delta < 4 {
        format!("Δ = {delta} < 4")
    } else {
        format!("Δ(G[Y]) = {inner_delta} outside 1..={}", t.saturating_sub(3))
    };
    (Route::Uncovered, Some(reason))
}

fn exhaustive(g: &Graph, budget: usize, route: Route) -> Result<Solution, SolveError> {
    let failed = |source: ConstructionError| SolveError::ConstructionFailed { route, source };
    match brute_force_solve(g, &SearchBudget::edges(budget.max(g.m()))).map_err(|e| failed(e.into()))? {
        SearchOutcome::Found(solution) => Ok(solution),
        SearchOutcome::Exhausted => Err(failed(ConstructionError::OracleExhausted { instance: g.to_edge_list() })),
        SearchOutcome::BudgetExceeded => unreachable!("edge cap only"),
    }
}

/// Finds a verified antimagic orientation of a connected graph.
///
/// Graphs on at most three vertices are searched exhaustively. Otherwise,
/// with `x` the first maximum-degree vertex and `Y = V \ N[x]`:
/// an empty `Y` or a `y ∈ Y` adjacent to the rest of `Y` gives a dominating
/// pair, an independent `Y` the independent-remainder construction, and
/// `Δ = n - t ≥ 4` with `t ∈ {4, 5}` the decomposition construction. Graphs
/// outside all of these are searched exhaustively when `m ≤ oracle_budget`
/// and refused otherwise. A failed construction also falls back to search
/// within the budget.
pub fn solve(g: &Graph, oracle_budget: usize) -> Result<Solution, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let (route, reason) = plan_route(g);
    let built = match route {
        Route::Small => return exhaustive(g, g.m(), route),
        Route::DominatingPair { x, y } => construct_dominating_pair(g, x, y),
        Route::Independent { x } => construct_independent(g, x),
        Route::Main { x } => construct_main(g, x, oracle_budget),
        Route::Uncovered => {
            if g.m() <= oracle_budget {
                return exhaustive(g, oracle_budget, route);
            }
            return Err(SolveError::Refused {
                reason: reason.unwrap_or_default(),
                m: g.m(),
                budget: oracle_budget,
            });
        }
    };
    match built {
        Ok(solution) => Ok(solution),
        Err(source) if g.m() <= oracle_budget => {
            exhaustive(g, oracle_budget, route).map_err(|_| SolveError::ConstructionFailed { route, source })
        }
        Err(source) => Err(SolveError::ConstructionFailed { route, source }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::Provenance;

    #[test]
    fn star_goes_through_dominating_pair() {
        let g = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(plan_route(&g).0, Route::DominatingPair { x: 0, y: 1 });
        let s = solve(&g, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(s.provenance(), Provenance::DominatingPairBranch2);
    }

    #[test]
    fn p3_is_small() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let s = solve(&g, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(s.provenance(), Provenance::Oracle);
        let mut sums = s.sums().to_vec();
        sums.sort_unstable();
        sums.dedup();
        assert_eq!(sums.len(), 3);
    }

    #[test]
    fn petersen_is_refused() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        let err = solve(&g, 10).unwrap_err();
        assert!(err.is_refusal());
        assert!(err.to_string().contains("Δ = 3 < n - 5"), "{err}");
    }

    #[test]
    fn disconnected_and_empty() {
        assert_eq!(solve(&Graph::new(4, [(0, 1), (2, 3)]).unwrap(), 10), Err(SolveError::Disconnected));
        assert_eq!(solve(&Graph::empty(0), 10), Err(SolveError::Empty));
    }

    #[test]
    fn single_vertex() {
        let s = solve(&Graph::empty(1), 10).unwrap();
        assert_eq!(s.sums(), &[0]);
    }
}
