use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::{raw_sums, Label, Labeling, Orientation};

/// A partially built orientation and labeling of a graph.
#[derive(Debug, Clone)]
pub(crate) struct ArcPlan {
    n: usize,
    arcs: Vec<Option<(Vertex, Vertex)>>,
    labels: Vec<Option<Label>>,
}

impl ArcPlan {
    pub fn new(g: &Graph) -> Self {
        ArcPlan { n: g.n(), arcs: vec![None; g.m()], labels: vec![None; g.m()] }
    }

    pub fn set(&mut self, e: EdgeId, tail: Vertex, head: Vertex, label: Label) {
        self.arcs[e] = Some((tail, head));
        self.labels[e] = Some(label);
    }

    /// Copies an orientation and labeling of a subgraph whose edge `j` is
    /// edge `ids[j]` here.
    pub fn embed(&mut self, ids: &[EdgeId], d: &Orientation, t: &Labeling) {
        for (local, &e) in ids.iter().enumerate() {
            let (tail, head) = d.arc(local);
            self.set(e, tail, head, t.label(local));
        }
    }

    /// Sums over the arcs placed so far.
    pub fn sums(&self) -> Vec<i64> {
        raw_sums(
            self.n,
            self.arcs.iter().zip(&self.labels).filter_map(|(a, l)| Some(((*a)?, (*l)?))),
        )
    }

    pub fn finish(self) -> (Orientation, Labeling) {
        let arcs = self.arcs.into_iter().map(|a| a.expect("every edge oriented")).collect();
        let labels = self.labels.into_iter().map(|l| l.expect("every edge labeled")).collect();
        (Orientation::new(arcs), Labeling::new(labels))
    }
}

/// `vertices` sorted by their sums, ties by vertex index.
pub(crate) fn sort_by_sum(vertices: &[Vertex], sums: &[i64]) -> Vec<Vertex> {
    let mut sorted = vertices.to_vec();
    sorted.sort_by_key(|&v| (sums[v], v));
    sorted
}

pub(crate) fn label_range(from: usize, to: usize) -> Vec<Label> {
    (from..=to).map(|l| l as Label).collect()
}
