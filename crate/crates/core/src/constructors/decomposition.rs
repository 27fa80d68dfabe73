use std::collections::BTreeSet;

use super::ConstructionError;
use crate::graph::{EdgeId, Graph, Vertex};

/// Split of `E(G)` around a maximum-degree vertex `x` with `Δ = n - t`.
///
/// `Y = V \ N[x]` has `t - 1` vertices. Each component `Y_i` of `G[Y]` is
/// tied to `N(x)` through one connector edge `e_i = z_i y`. Then
///
/// * `H0` = connector edges + `E(G[Y])`,
/// * `H1` = remaining edges between `Y` and `N(x)`,
/// * `H2` = `E(G[N(x)])`,
///
/// and together with the star at `x` these partition `E(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub x: Vertex,
    pub t: usize,
    /// `Y`, ascending.
    pub ys: Vec<Vertex>,
    /// Components of `G[Y]`, largest first.
    pub components: Vec<Vec<Vertex>>,
    /// `z_i`, one per component (not necessarily distinct).
    pub connectors: Vec<Vertex>,
    /// `e_i`, one per component.
    pub connector_edges: Vec<EdgeId>,
    /// Connector edges first, then `E(G[Y])` ascending.
    pub h0_edges: Vec<EdgeId>,
    pub h1_edges: Vec<EdgeId>,
    pub h2_edges: Vec<EdgeId>,
    pub star_edges: Vec<EdgeId>,
}

impl Decomposition {
    pub fn m1(&self) -> usize {
        self.h2_edges.len()
    }

    /// Number of edges inside `Y`.
    pub fn inner_edges(&self) -> usize {
        self.h0_edges.len() - self.connector_edges.len()
    }

    /// `H0` is a path on five vertices exactly when `G[Y]` is a path on four
    /// vertices hooked to `N(x)` at one of its ends.
    pub fn h0_is_p5(&self, g: &Graph) -> bool {
        if self.components.len() != 1 || self.ys.len() != 4 || self.inner_edges() != 3 {
            return false;
        }
        let (a, b) = g.edge(self.connector_edges[0]);
        let y = if self.ys.contains(&a) { a } else { b };
        g.neighbors(y).iter().filter(|w| self.ys.contains(w)).count() == 1
    }

    /// `H0` as a spanning subgraph of `G` (edge `j` is `h0_edges[j]`).
    pub fn h0(&self, g: &Graph) -> Graph {
        g.edge_subgraph(&self.h0_edges)
    }

    /// Degree of `y` in `H1`.
    pub fn h1_degree(&self, g: &Graph, y: Vertex) -> usize {
        self.h1_edges.iter().filter(|&&e| {
            let (a, b) = g.edge(e);
            a == y || b == y
        }).count()
    }
}

/// Builds the decomposition for a hub `x` with `Δ(G) = d(x) = n - t ≥ 4`,
/// `t ∈ {4, 5}` and `1 ≤ Δ(G[Y]) ≤ t - 3`.
///
/// Connector choice: the smallest `z ∈ N(x)` adjacent to the component,
/// then the smallest edge id between them. When `G[Y]` is a path on four
/// vertices, a `z` adjacent to one of its two middle vertices is preferred.
pub fn build_decomposition(g: &Graph, x: Vertex) -> Result<Decomposition, ConstructionError> {
    let n = g.n();
    if x >= n {
        return Err(ConstructionError::precondition(format!("vertex {x} out of range")));
    }
    if !g.is_connected() {
        return Err(ConstructionError::precondition("graph is not connected"));
    }
    let delta = g.degree(x);
    if delta != g.max_degree() {
        return Err(ConstructionError::precondition(format!("d({x}) = {delta} is not the maximum degree")));
    }
    let t = n - delta;
    if !(t == 4 || t == 5) || delta < 4 {
        return Err(ConstructionError::precondition(format!("need Δ = n - t ≥ 4 with t ∈ {{4, 5}}, got Δ = {delta}, n = {n}")));
    }
    let closed = g.closed_neighborhood(x).expect("in range");
    let ys: Vec<Vertex> = (0..n).filter(|v| !closed.contains(v)).collect();
    let inner_delta = g.max_degree_within(&ys);
    if inner_delta < 1 || inner_delta > t - 3 {
        return Err(ConstructionError::precondition(format!("need 1 ≤ Δ(G[Y]) ≤ {}, got {inner_delta}", t - 3)));
    }

    let y_set: BTreeSet<Vertex> = ys.iter().copied().collect();
    let components = g.components_within(&ys);
    let inner_edges = g.induced_edges(&ys);
    let is_p4 = components.len() == 1 && ys.len() == 4 && inner_edges.len() == 3;

    let mut connectors = Vec::with_capacity(components.len());
    let mut connector_edges = Vec::with_capacity(components.len());
    for component in &components {
        let attach_to: Vec<Vertex> = if is_p4 {
            let middles: Vec<Vertex> = component
                .iter()
                .copied()
                .filter(|&y| g.neighbors(y).iter().filter(|w| y_set.contains(w)).count() == 2)
                .collect();
            if middles.iter().any(|&y| g.neighbors(y).iter().any(|w| g.neighbors(x).contains(w))) {
                middles
            } else {
                component.clone()
            }
        } else {
            component.clone()
        };
        let (z, e) = g
            .neighbors(x)
            .iter()
            .find_map(|&z| {
                attach_to.iter().filter_map(|&y| g.edge_id(z, y)).min().map(|e| (z, e))
            })
            .ok_or_else(|| ConstructionError::precondition("a component of G[Y] has no neighbor in N(x)"))?;
        connectors.push(z);
        connector_edges.push(e);
    }

    let mut h0_edges = connector_edges.clone();
    h0_edges.extend(inner_edges);
    let neighbors: Vec<Vertex> = g.neighbors(x).iter().copied().collect();
    let mut h1_edges = Vec::new();
    let mut star_edges = Vec::new();
    for e in 0..g.m() {
        let (a, b) = g.edge(e);
        if a == x || b == x {
            star_edges.push(e);
        } else if (y_set.contains(&a) != y_set.contains(&b)) && !connector_edges.contains(&e) {
            h1_edges.push(e);
        }
    }
    let h2_edges = g.induced_edges(&neighbors);

    Ok(Decomposition { x, t, ys, components, connectors, connector_edges, h0_edges, h1_edges, h2_edges, star_edges })
}
