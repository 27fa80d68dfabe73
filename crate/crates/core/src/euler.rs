//! Eulerian orientation and labeling.
//!
//! Given a graph with `m` edges and labels `a_1 < ... < a_m`, pair up the
//! odd-degree vertices with extra edges, walk an Euler tour of the result and
//! orient every original edge along the walk, handing out labels in
//! descending order. Every vertex-sum of the outcome is at least `-a_m`.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::{Label, Labeling, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("edges of the graph do not form a single connected component")]
    Disconnected,
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: Vertex, degree: usize },
    #[error("start vertex {0} has no incident edge")]
    IsolatedStart(Vertex),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("labels must be strictly ascending positive integers")]
    NotAscending,
}

/// A loopless multigraph. The first edges are copies of a source graph's
/// edges (same ids); edges appended by eulerization follow and have
/// `original[e] == false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    original: Vec<bool>,
}

impl Multigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn is_original(&self, e: EdgeId) -> bool {
        self.original[e]
    }

    pub fn added_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().zip(&self.original).filter(|(_, &o)| !o).map(|(&e, _)| e)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(e);
            inc[v].push(e);
        }
        inc
    }
}

/// Pairs the odd-degree vertices `x_1 < ... < x_2t` as `x_i x_{i+t}`.
pub fn eulerize(g: &Graph) -> Result<Multigraph, EulerError> {
    if !g.edge_support_connected() {
        return Err(EulerError::Disconnected);
    }
    let odd: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).collect();
    let t = odd.len() / 2;
    let mut edges = g.edges().to_vec();
    let mut original = vec![true; g.m()];
    for i in 0..t {
        edges.push((odd[i], odd[i + t]));
        original.push(false);
    }
    Ok(Multigraph { n: g.n(), edges, original })
}

/// A closed walk `v_0, e_0, v_1, ..., e_{L-1}, v_L = v_0` using every edge
/// of a multigraph exactly once. Edge `e_k` joins `v_k` and `v_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTour {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl EulerTour {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks closure, endpoint consistency and single use of every edge.
    pub fn is_valid_for(&self, mg: &Multigraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 || self.edges.len() != mg.edges.len() {
            return false;
        }
        if self.vertices.first() != self.vertices.last() {
            return false;
        }
        let mut used = vec![false; mg.edges.len()];
        for (k, &e) in self.edges.iter().enumerate() {
            if e >= used.len() || std::mem::replace(&mut used[e], true) {
                return false;
            }
            let (a, b) = mg.edges[e];
            let (p, q) = (self.vertices[k], self.vertices[k + 1]);
            if !((a, b) == (p, q) || (a, b) == (q, p)) {
                return false;
            }
        }
        true
    }

    fn reversed(&self) -> EulerTour {
        EulerTour {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// Same cycle, starting at position `k`.
    fn rotated(&self, k: usize) -> EulerTour {
        let len = self.edges.len();
        let mut edges = self.edges[k..].to_vec();
        edges.extend_from_slice(&self.edges[..k]);
        let mut vertices = self.vertices[k..len].to_vec();
        vertices.extend_from_slice(&self.vertices[..=k]);
        EulerTour { vertices, edges }
    }
}

/// Hierholzer's algorithm, always taking the smallest unused edge id.
///
/// The returned tour starts at `start`. If `start` carries an added edge,
/// the tour is rotated (and reversed if needed) so that this edge is the
/// last one, entering `start`; otherwise it opens with the first original
/// edge leaving `start`.
pub fn euler_tour(mg: &Multigraph, start: Vertex) -> Result<EulerTour, EulerError> {
    for v in 0..mg.n {
        let degree = mg.degree(v);
        if degree % 2 == 1 {
            return Err(EulerError::OddDegree { vertex: v, degree });
        }
    }
    if mg.edges.is_empty() {
        return Ok(EulerTour { vertices: vec![start], edges: Vec::new() });
    }
    if mg.degree(start) == 0 {
        return Err(EulerError::IsolatedStart(start));
    }

    let incidence = mg.incidence();
    let mut cursor = vec![0usize; mg.n];
    let mut used = vec![false; mg.edges.len()];
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(start, None)];
    let mut circuit: Vec<(Vertex, Option<EdgeId>)> = Vec::with_capacity(mg.edges.len() + 1);

    while let Some(&(v, _)) = stack.last() {
        while cursor[v] < incidence[v].len() && used[incidence[v][cursor[v]]] {
            cursor[v] += 1;
        }
        match incidence[v].get(cursor[v]) {
            Some(&e) => {
                used[e] = true;
                let (a, b) = mg.edges[e];
                stack.push((if a == v { b } else { a }, Some(e)));
            }
            None => circuit.push(stack.pop().expect("stack is nonempty")),
        }
    }
    if used.iter().any(|&u| !u) {
        return Err(EulerError::Disconnected);
    }
    circuit.reverse();
    let tour = EulerTour {
        vertices: circuit.iter().map(|&(v, _)| v).collect(),
        edges: circuit[1..].iter().map(|&(_, e)| e.expect("non-root entries carry an edge")).collect(),
    };

    let added_at_start = tour.edges.iter().position(|&e| !mg.original[e] && {
        let (a, b) = mg.edges[e];
        a == start || b == start
    });
    let tour = match added_at_start {
        Some(k) => {
            // the added edge sits between positions k and k+1
            if tour.vertices[k + 1] == start {
                tour.rotated((k + 1) % tour.len())
            } else {
                let rev = tour.reversed();
                let k = tour.len() - 1 - k;
                rev.rotated((k + 1) % rev.len())
            }
        }
        None => {
            let k = (0..tour.len())
                .find(|&k| tour.vertices[k] == start && mg.original[tour.edges[k]])
                .unwrap_or(0);
            tour.rotated(k)
        }
    };
    Ok(tour)
}

/// Orients and labels a connected (or edgeless) graph so that every
/// vertex-sum is at least `-labels.last()`. Isolated vertices are allowed.
///
/// The j-th original edge met along the tour is oriented in walking
/// direction and receives `labels[m - j]` (1-based `j`).
pub fn euler_orient_label(g: &Graph, labels: &[Label]) -> Result<(Orientation, Labeling), EulerError> {
    check_labels(g, labels)?;
    if g.m() == 0 {
        return Ok((Orientation::new(Vec::new()), Labeling::new(Vec::new())));
    }
    let mg = eulerize(g)?;
    let start = (0..g.n()).find(|&v| g.degree(v) > 0).expect("graph has an edge");
    let tour = euler_tour(&mg, start)?;

    let m = g.m();
    let mut arcs = vec![(0, 0); m];
    let mut assigned = vec![0; m];
    let mut j = 0;
    for (k, &e) in tour.edges.iter().enumerate() {
        if mg.original[e] {
            arcs[e] = (tour.vertices[k], tour.vertices[k + 1]);
            assigned[e] = labels[m - 1 - j];
            j += 1;
        }
    }
    Ok((Orientation::new(arcs), Labeling::new(assigned)))
}

/// Like [`euler_orient_label`], but accepts any graph: each component with
/// edges is handled on its own, components taking consecutive runs of the
/// label list in [`Graph::connected_components`] order. The bound
/// `-labels.last()` still holds for every vertex.
pub fn euler_orient_label_by_component(g: &Graph, labels: &[Label]) -> Result<(Orientation, Labeling), EulerError> {
    check_labels(g, labels)?;
    let mut arcs = vec![(0, 0); g.m()];
    let mut assigned = vec![0; g.m()];
    let mut offset = 0;
    for component in g.connected_components() {
        let ids = g.induced_edges(&component);
        if ids.is_empty() {
            continue;
        }
        let part = g.edge_subgraph(&ids);
        let (d, t) = euler_orient_label(&part, &labels[offset..offset + ids.len()])?;
        for (local, &e) in ids.iter().enumerate() {
            arcs[e] = d.arc(local);
            assigned[e] = t.label(local);
        }
        offset += ids.len();
    }
    Ok((Orientation::new(arcs), Labeling::new(assigned)))
}

fn check_labels(g: &Graph, labels: &[Label]) -> Result<(), EulerError> {
    if labels.len() != g.m() {
        return Err(EulerError::LabelCount { expected: g.m(), got: labels.len() });
    }
    if labels.first() == Some(&0) || labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EulerError::NotAscending);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::vertex_sums;

    fn c3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn eulerize_pairs_odd_vertices() {
        assert_eq!(eulerize(&c3()).unwrap().edges(), c3().edges());

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let mg = eulerize(&k2).unwrap();
        assert_eq!(mg.edges(), &[(0, 1), (0, 1)]);
        assert!(mg.is_original(0) && !mg.is_original(1));

        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(eulerize(&p3).unwrap().added_edges().collect::<Vec<_>>(), vec![(0, 2)]);

        // four odd vertices 0..3: pairs (0,2) and (1,3)
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(eulerize(&star).unwrap().added_edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn eulerize_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(eulerize(&g), Err(EulerError::Disconnected));
    }

    #[test]
    fn c3_tour() {
        let mg = eulerize(&c3()).unwrap();
        let tour = euler_tour(&mg, 0).unwrap();
        assert_eq!(tour.vertices, vec![0, 1, 2, 0]);
        assert_eq!(tour.edges, vec![0, 1, 2]);
        assert!(tour.is_valid_for(&mg));
    }

    #[test]
    fn bowtie_tour_visits_center_twice() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let mg = eulerize(&g).unwrap();
        let tour = euler_tour(&mg, 0).unwrap();
        assert_eq!(tour.len(), 6);
        assert!(tour.is_valid_for(&mg));
        assert_eq!(tour.vertices[..6].iter().filter(|&&v| v == 2).count(), 2);
    }

    #[test]
    fn tour_needs_even_degrees() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let mg = Multigraph { n: 3, edges: p3.edges().to_vec(), original: vec![true; 2] };
        assert!(matches!(euler_tour(&mg, 0), Err(EulerError::OddDegree { vertex: 0, .. })));
    }

    #[test]
    fn odd_start_ends_with_its_added_edge() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let mg = eulerize(&p3).unwrap();
        let tour = euler_tour(&mg, 0).unwrap();
        assert!(tour.is_valid_for(&mg));
        assert!(mg.is_original(tour.edges[0]));
        assert!(!mg.is_original(*tour.edges.last().unwrap()));
    }

    #[test]
    fn c3_labels_descend_along_tour() {
        let g = c3();
        let (d, t) = euler_orient_label(&g, &[1, 2, 3]).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(t.labels(), &[3, 2, 1]);
        assert_eq!(vertex_sums(&g, &d, &t).unwrap(), vec![-2, 1, 1]);
    }

    #[test]
    fn k2_bound_is_tight() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let (d, t) = euler_orient_label(&g, &[5]).unwrap();
        assert_eq!(d.arcs(), &[(0, 1)]);
        assert_eq!(vertex_sums(&g, &d, &t).unwrap(), vec![-5, 5]);
    }

    #[test]
    fn edgeless_graph_gets_empty_labeling() {
        let g = Graph::empty(4);
        let (d, t) = euler_orient_label(&g, &[]).unwrap();
        assert!(d.is_empty() && t.is_empty());
        assert_eq!(vertex_sums(&g, &d, &t).unwrap(), vec![0; 4]);
    }

    #[test]
    fn label_errors() {
        let g = c3();
        assert_eq!(euler_orient_label(&g, &[1, 2]), Err(EulerError::LabelCount { expected: 3, got: 2 }));
        assert_eq!(euler_orient_label(&g, &[1, 3, 3]), Err(EulerError::NotAscending));
        assert_eq!(euler_orient_label(&g, &[0, 1, 2]), Err(EulerError::NotAscending));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(euler_orient_label(&split, &[1, 2]), Err(EulerError::Disconnected));
    }

    #[test]
    fn by_component_handles_split_graphs() {
        let g = Graph::new(7, [(0, 1), (2, 3), (3, 4), (2, 4), (5, 6)]).unwrap();
        let labels = [3, 4, 8, 9, 11];
        let (d, t) = euler_orient_label_by_component(&g, &labels).unwrap();
        let sums = vertex_sums(&g, &d, &t).unwrap();
        assert!(sums.iter().all(|&s| s >= -11));
        let mut used = t.labels().to_vec();
        used.sort_unstable();
        assert_eq!(used, labels);
    }
}
