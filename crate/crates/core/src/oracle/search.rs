use std::collections::HashMap;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::labeling::{Label, Labeling, Orientation, Provenance, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {m} edges, search budget allows {max_edges}")]
    TooManyEdges { m: usize, max_edges: usize },
    #[error("search budget caps must be positive")]
    ZeroCap,
}

/// Limits on an exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_edges: usize,
    /// Cap on (edge, direction, label) assignments tried.
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl SearchBudget {
    pub fn edges(max_edges: usize) -> Self {
        SearchBudget { max_edges, max_nodes: None, max_millis: None }
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.max_nodes == Some(0) || self.max_millis == Some(0) {
            return Err(OracleError::ZeroCap);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Solution),
    /// The whole space was searched; no antimagic orientation exists.
    Exhausted,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SearchOutcome::Found(s) => Some(s),
            _ => None,
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    m: usize,
    /// Edges not yet assigned, per vertex.
    open: Vec<usize>,
    sums: Vec<i64>,
    /// Sums of vertices whose edges are all assigned.
    closed: HashMap<i64, u32>,
    taken: Vec<bool>,
    arcs: Vec<(Vertex, Vertex)>,
    labels: Vec<Label>,
    nodes: u64,
    budget: SearchBudget,
    deadline: Option<Instant>,
    exceeded: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|cap| self.nodes > cap) {
            self.exceeded = true;
        }
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exceeded = true;
        }
        self.exceeded
    }

    /// Closes `v` if this was its last open edge; false on a collision.
    fn close(&mut self, v: Vertex) -> bool {
        self.open[v] -= 1;
        if self.open[v] > 0 {
            return true;
        }
        let count = self.closed.entry(self.sums[v]).or_insert(0);
        *count += 1;
        *count == 1
    }

    fn reopen(&mut self, v: Vertex) {
        if self.open[v] == 0 {
            let count = self.closed.get_mut(&self.sums[v]).expect("closed sum recorded");
            *count -= 1;
            if *count == 0 {
                self.closed.remove(&self.sums[v]);
            }
        }
        self.open[v] += 1;
    }

    fn descend(&mut self, e: usize) -> bool {
        if e == self.m {
            return true;
        }
        let (u, v) = self.g.edge(e);
        let directions: &[(Vertex, Vertex)] = if e == 0 { &[(u, v)] } else { &[(u, v), (v, u)] };
        for &(tail, head) in directions {
            for label in 1..=self.m {
                if self.taken[label] {
                    continue;
                }
                if self.out_of_budget() {
                    return false;
                }
                let l = label as i64;
                self.taken[label] = true;
                self.sums[head] += l;
                self.sums[tail] -= l;
                self.arcs[e] = (tail, head);
                self.labels[e] = label as Label;

                let tail_ok = self.close(tail);
                let head_ok = self.close(head);
                if tail_ok && head_ok && self.descend(e + 1) {
                    return true;
                }
                self.reopen(head);
                self.reopen(tail);
                self.sums[head] -= l;
                self.sums[tail] += l;
                self.taken[label] = false;
                if self.exceeded {
                    return false;
                }
            }
        }
        false
    }
}

/// Depth-first search over (direction, label) per edge, in edge order,
/// directions before labels and labels ascending. The first edge keeps its
/// stored direction, since reversing every arc of a solution negates all
/// sums and yields another solution. A branch is cut as soon as two
/// vertices with all edges assigned share a sum.
pub fn brute_force_solve(g: &Graph, budget: &SearchBudget) -> Result<SearchOutcome, OracleError> {
    budget.check()?;
    let m = g.m();
    if m > budget.max_edges {
        return Err(OracleError::TooManyEdges { m, max_edges: budget.max_edges });
    }
    let n = g.n();
    let mut search = Search {
        g,
        m,
        open: (0..n).map(|v| g.degree(v)).collect(),
        sums: vec![0; n],
        closed: HashMap::new(),
        taken: vec![false; m + 1],
        arcs: vec![(0, 0); m],
        labels: vec![0; m],
        nodes: 0,
        budget: *budget,
        deadline: budget.max_millis.map(|ms| Instant::now() + Duration::from_millis(ms)),
        exceeded: false,
    };
    for v in 0..n {
        if g.degree(v) == 0 {
            *search.closed.entry(0).or_insert(0) += 1;
        }
    }
    if search.closed.get(&0).is_some_and(|&c| c > 1) {
        return Ok(SearchOutcome::Exhausted);
    }

    if search.descend(0) {
        let solution = Solution::new(
            g.clone(),
            Orientation::new(search.arcs),
            Labeling::new(search.labels),
            Provenance::Oracle,
        )
        .expect("search only completes on antimagic labelings");
        Ok(SearchOutcome::Found(solution))
    } else if search.exceeded {
        Ok(SearchOutcome::BudgetExceeded)
    } else {
        Ok(SearchOutcome::Exhausted)
    }
}
