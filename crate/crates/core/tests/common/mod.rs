#![allow(dead_code)]

use std::collections::HashSet;

use antimagic_core::graph::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes of connected graphs on `n` vertices, by
/// trying every edge subset under every vertex permutation.
pub fn brute_force_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if !Graph::new(n, edges.iter().copied()).unwrap().is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut mapped: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                mapped.sort_unstable();
                mapped
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

/// A connected graph whose hub `x` leaves an independent remainder, with
/// `d(x) = Δ` and a nonempty remainder.
pub fn random_independent_instance(seed: u64) -> (Graph, Vertex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.random_range(5..=12);
        let d = rng.random_range(2..=n - 2);
        let neighbors: Vec<Vertex> = (1..=d).collect();
        let mut edges: Vec<(Vertex, Vertex)> = neighbors.iter().map(|&v| (0, v)).collect();
        for y in d + 1..n {
            let k = rng.random_range(1..=d);
            let mut pick = neighbors.clone();
            pick.shuffle(&mut rng);
            edges.extend(pick[..k].iter().map(|&v| (v, y)));
        }
        let density: f64 = rng.random_range(0.0..0.6);
        for a in 1..=d {
            for b in a + 1..=d {
                if rng.random_bool(density) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.max_degree() == d {
            return (g, 0);
        }
    }
}
