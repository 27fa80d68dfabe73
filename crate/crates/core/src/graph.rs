//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges keep the order they were
//! given in, and every edge is addressed by its position in that list;
//! orientations and labelings elsewhere in the crate are indexed the same
//! way.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    NoSuchVertex { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<BTreeSet<Vertex>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Each pair is stored as given; the
    /// line numbers in errors count edges from 1.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut graph = Graph::empty(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            graph.push_edge(u, v, i + 1)?;
        }
        Ok(graph)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![BTreeSet::new(); n],
            index: HashMap::new(),
        }
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { line, vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if self.index.contains_key(&key(u, v)) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.index.insert(key(u, v), self.edges.len());
        self.edges.push((u, v));
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.index.contains_key(&key(u, v))
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.adjacency[v].iter().map(|&w| self.index[&key(v, w)]).collect();
        ids.sort_unstable();
        ids
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<BTreeSet<Vertex>, GraphError> {
        if v >= self.n {
            return Err(GraphError::NoSuchVertex { vertex: v, n: self.n });
        }
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        Ok(set)
    }

    /// Connected components, largest first; equal sizes ordered by their
    /// smallest vertex. Each component is sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&(0..self.n).collect::<Vec<_>>())
    }

    /// Components of the induced subgraph on `subset`, ordered as in
    /// [`Graph::connected_components`].
    pub fn components_within(&self, subset: &[Vertex]) -> Vec<Vec<Vertex>> {
        let inside: BTreeSet<Vertex> = subset.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &inside {
            if !seen.insert(start) {
                continue;
            }
            let mut component = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if inside.contains(&w) && seen.insert(w) {
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// True when all edges lie in a single component. Isolated vertices are
    /// ignored; an edgeless graph counts as connected here.
    pub fn edge_support_connected(&self) -> bool {
        let non_isolated: Vec<Vertex> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.components_within(&non_isolated).len() <= 1
    }

    /// Ids of the edges with both ends in `subset`, ascending.
    pub fn induced_edges(&self, subset: &[Vertex]) -> Vec<EdgeId> {
        let inside: BTreeSet<Vertex> = subset.iter().copied().collect();
        (0..self.m())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                inside.contains(&u) && inside.contains(&v)
            })
            .collect()
    }

    /// G[S], keeping the vertex set `0..n` (vertices outside `subset` become
    /// isolated). The second value maps each new edge id to its id here.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let ids = self.induced_edges(subset);
        (self.edge_subgraph(&ids), ids)
    }

    /// Spanning subgraph on the given edge ids, in the order given.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Graph {
        Graph::new(self.n, ids.iter().map(|&e| self.edges[e])).expect("subgraph of a simple graph is simple")
    }

    /// Maximum degree of the induced subgraph on `subset`.
    pub fn max_degree_within(&self, subset: &[Vertex]) -> usize {
        let inside: BTreeSet<Vertex> = subset.iter().copied().collect();
        subset
            .iter()
            .map(|&v| self.adjacency[v].iter().filter(|w| inside.contains(w)).count())
            .max()
            .unwrap_or(0)
    }

    /// Serializes to the edge-list text format, each pair written smaller
    /// endpoint first.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for &(u, v) in &self.edges {
            let (a, b) = key(u, v);
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut graph = Graph::empty(n);
    let mut count = 0;
    for (line, content) in lines {
        if count == m {
            return Err(GraphError::Malformed { line, message: format!("more than {m} edge lines") });
        }
        let (u, v) = parse_pair(line, content)?;
        graph.push_edge(u, v, line)?;
        count += 1;
    }
    if count < m {
        return Err(GraphError::Malformed {
            line: text.lines().count(),
            message: format!("expected {m} edges, found {count}"),
        });
    }
    Ok(graph)
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize), GraphError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Malformed { line, message: format!("expected two integers, got {content:?}") });
    }
    let number = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| GraphError::Malformed { line, message: format!("not a non-negative integer: {s:?}") })
    };
    Ok((number(fields[0])?, number(fields[1])?))
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn parses_path_and_k2() {
        let p3 = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p3.degree(1), 2);

        let k2 = parse_graph("2 1\n0 1").unwrap();
        assert_eq!(k2.m(), 1);
        assert!(k2.has_edge(1, 0));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_graph("2 2\n0 1\n0 1").unwrap_err(),
            GraphError::DuplicateEdge { line: 3, u: 0, v: 1 }
        );
        assert_eq!(
            parse_graph("2 1\n0 2").unwrap_err(),
            GraphError::VertexOutOfRange { line: 2, vertex: 2, n: 2 }
        );
        assert_eq!(parse_graph("2 1\n1 1").unwrap_err(), GraphError::SelfLoop { line: 2, vertex: 1 });
        assert!(matches!(parse_graph("2 1\n0 x"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(GraphError::Malformed { .. })));
        assert!(matches!(parse_graph(""), Err(GraphError::Malformed { line: 1, .. })));
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_graph("# hub 0\n3 2\n# edges\n0 1\n0 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn components_are_ordered() {
        let p3 = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3.connected_components(), vec![vec![0, 1, 2]]);

        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1], vec![2, 3]]);

        let edgeless = Graph::empty(3);
        assert_eq!(edgeless.connected_components(), vec![vec![0], vec![1], vec![2]]);

        let g = Graph::new(5, [(3, 4), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn closed_neighborhoods() {
        let s = star(3);
        assert_eq!(s.closed_neighborhood(0).unwrap().len(), 4);
        assert_eq!(s.closed_neighborhood(2).unwrap(), BTreeSet::from([0, 2]));
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(2).unwrap(), BTreeSet::from([2]));
        assert!(g.closed_neighborhood(3).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_inner_edges() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let (h, map) = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(map, vec![1, 2, 5]);
        assert_eq!(h.edges(), &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(h.n(), 5);
        assert!(h.edge_support_connected());
        assert!(!h.is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, [(2, 0), (1, 3)]).unwrap();
        assert_eq!(g.to_edge_list(), "4 2\n0 2\n1 3\n");
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap().edges(), &[(0, 2), (1, 3)]);
    }
}
