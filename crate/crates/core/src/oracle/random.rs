use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGraph {
    pub graph: Graph,
    /// A vertex of maximum degree.
    pub hub: Vertex,
}

/// Seeded random connected graph with maximum degree exactly `delta`.
///
/// A random hub gets `delta` random neighbors, the remaining vertices are
/// hung onto the growing tree below vertices that still have room, and
/// extra edges away from the hub are sprinkled in with a density drawn
/// from the seed. No vertex exceeds degree `delta`.
pub fn random_connected_graph(n: usize, delta: usize, seed: u64) -> Result<GeneratedGraph, String> {
    if n < 2 {
        return Err(format!("need n ≥ 2, got {n}"));
    }
    if delta == 0 || delta >= n {
        return Err(format!("infeasible: Δ = {delta} must lie in 1..={}", n - 1));
    }
    if delta == 1 && n > 2 {
        return Err(format!("infeasible: a connected graph on {n} vertices has Δ ≥ 2"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let hub = order[0];

    let mut degree = vec![0usize; n];
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    fn add(a: Vertex, b: Vertex, degree: &mut [usize], edges: &mut Vec<(Vertex, Vertex)>) {
        degree[a] += 1;
        degree[b] += 1;
        edges.push((a.min(b), a.max(b)));
    }
    for &v in &order[1..=delta] {
        add(hub, v, &mut degree, &mut edges);
    }
    for i in delta + 1..n {
        let v = order[i];
        let room: Vec<Vertex> = order[1..i].iter().copied().filter(|&w| degree[w] < delta).collect();
        let parent = room[rng.random_range(0..room.len())];
        add(parent, v, &mut degree, &mut edges);
    }

    let density: f64 = rng.random_range(0.0..0.7);
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if a != hub && b != hub && !edges.contains(&(a, b)) {
                pairs.push((a, b));
            }
        }
    }
    pairs.shuffle(&mut rng);
    for (a, b) in pairs {
        if degree[a] < delta && degree[b] < delta && rng.random_bool(density) {
            add(a, b, &mut degree, &mut edges);
        }
    }

    edges.sort_unstable();
    let graph = Graph::new(n, edges).expect("generator emits simple graphs");
    Ok(GeneratedGraph { graph, hub })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contract() {
        for seed in 0..50 {
            let g = random_connected_graph(9, 5, seed).unwrap();
            assert!(g.graph.is_connected());
            assert_eq!(g.graph.max_degree(), 5);
            assert_eq!(g.graph.degree(g.hub), 5);
        }
    }

    #[test]
    fn deterministic() {
        let a = random_connected_graph(9, 5, 7).unwrap();
        let b = random_connected_graph(9, 5, 7).unwrap();
        assert_eq!(a.graph.to_edge_list(), b.graph.to_edge_list());
    }

    #[test]
    fn infeasible() {
        assert!(random_connected_graph(3, 5, 0).is_err());
        assert!(random_connected_graph(1, 0, 0).is_err());
        assert!(random_connected_graph(4, 1, 0).is_err());
        assert!(random_connected_graph(2, 1, 0).is_ok());
    }
}
