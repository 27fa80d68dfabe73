use std::collections::BTreeSet;

use crate::graph::Graph;

pub const MAX_ENUMERATION_N: usize = 7;

/// Bit position of the pair `{i, j}`, `i < j`, in a graph code.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn code_of(n: usize, edges: &[(usize, usize)], position: &[usize]) -> u32 {
    edges.iter().fold(0u32, |code, &(u, v)| {
        let (a, b) = (position[u].min(position[v]), position[u].max(position[v]));
        code | 1 << pair_bit(n, a, b)
    })
}

/// Graph on `n` vertices whose edges are the set bits of `code`, edges in
/// ascending pair order.
pub fn graph_from_code(n: usize, code: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("codes describe simple graphs")
}

/// Smallest code over all relabelings that place vertices in nondecreasing
/// order of an isomorphism-invariant key (degree, then sorted neighbor
/// degrees). Two graphs get the same code iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u32 {
    let n = g.n();
    assert!(n <= MAX_ENUMERATION_N, "canonical codes are limited to {MAX_ENUMERATION_N} vertices");
    let key = |v: usize| {
        let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        around.sort_unstable();
        (g.degree(v), around)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // the key each position must be filled with
    let slot_keys: Vec<_> = slots.iter().map(|&v| keys[v].clone()).collect();

    let mut best = u32::MAX;
    let mut position = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fill(g, &keys, &slot_keys, 0, &mut position, &mut used, &mut best);
    best
}

fn fill<K: Eq>(g: &Graph, keys: &[K], slot_keys: &[K], slot: usize, position: &mut [usize], used: &mut [bool], best: &mut u32) {
    let n = g.n();
    if slot == n {
        *best = (*best).min(code_of(n, g.edges(), position));
        return;
    }
    for v in 0..n {
        if !used[v] && keys[v] == slot_keys[slot] {
            used[v] = true;
            position[v] = slot;
            fill(g, keys, slot_keys, slot + 1, position, used, best);
            used[v] = false;
        }
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by edge count then canonical code. Built edge by edge:
/// every class with `k + 1` edges arises from a class with `k` edges.
pub fn enumerate_connected_graphs(n: usize) -> Option<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return None;
    }
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    let mut connected = Vec::new();
    let pairs = n * (n - 1) / 2;
    for _ in 0..=pairs {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = graph_from_code(n, code);
            if g.is_connected() {
                connected.push(g.clone());
            }
            for bit in 0..pairs {
                if code >> bit & 1 == 0 {
                    next.insert(canonical_code(&graph_from_code(n, code | 1 << bit)));
                }
            }
        }
        level = next;
    }
    Some(connected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected_graphs(2).unwrap().len(), 1);
        let three = enumerate_connected_graphs(3).unwrap();
        assert_eq!(three.iter().map(Graph::m).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(enumerate_connected_graphs(4).unwrap().len(), 6);
        assert!(enumerate_connected_graphs(0).is_none());
        assert!(enumerate_connected_graphs(8).is_none());
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }
}
