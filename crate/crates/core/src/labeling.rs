//! Orientations, arc labelings, vertex-sums and the antimagic verifier.
//!
//! The vertex-sum of `u` is the total label on arcs entering `u` minus the
//! total label on arcs leaving `u` (0 for isolated vertices). A labeling is
//! antimagic when it is a bijection onto `1..=m` and all vertex-sums are
//! pairwise distinct.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("orientation covers {got} edges, graph has {expected}")]
    OrientationLength { expected: usize, got: usize },
    #[error("labeling covers {got} edges, graph has {expected}")]
    LabelingLength { expected: usize, got: usize },
    #[error("arc {tail}->{head} does not match edge {edge} = {{{u}, {v}}}")]
    ArcMismatch { edge: EdgeId, tail: Vertex, head: Vertex, u: Vertex, v: Vertex },
    #[error("label {label} used more than once")]
    NotInjective { label: Label },
    #[error("labels must be positive")]
    ZeroLabel,
    #[error("not an antimagic labeling: {0}")]
    NotAntimagic(Defect),
    #[error("stored vertex-sum of {vertex} is {stored}, recomputed {actual}")]
    SumMismatch { vertex: Vertex, stored: i64, actual: i64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An arc `tail -> head` for every edge, indexed like the graph's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    pub fn new(arcs: Vec<(Vertex, Vertex)>) -> Self {
        Orientation { arcs }
    }

    /// Every edge `{u, v}` oriented `u -> v` as stored.
    pub fn as_stored(g: &Graph) -> Self {
        Orientation { arcs: g.edges().to_vec() }
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn arc(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.arcs[e]
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn reverse(&mut self, e: EdgeId) {
        let (t, h) = self.arcs[e];
        self.arcs[e] = (h, t);
    }

    pub fn check(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.arcs.len() != g.m() {
            return Err(LabelingError::OrientationLength { expected: g.m(), got: self.arcs.len() });
        }
        for (edge, (&(tail, head), &(u, v))) in self.arcs.iter().zip(g.edges()).enumerate() {
            if !((tail, head) == (u, v) || (tail, head) == (v, u)) {
                return Err(LabelingError::ArcMismatch { edge, tail, head, u, v });
            }
        }
        Ok(())
    }
}

/// A positive label per edge, indexed like the graph's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> Label {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn swap(&mut self, a: EdgeId, b: EdgeId) {
        self.labels.swap(a, b);
    }

    pub fn check_injective(&self) -> Result<(), LabelingError> {
        let mut seen = HashSet::with_capacity(self.labels.len());
        for &label in &self.labels {
            if label == 0 {
                return Err(LabelingError::ZeroLabel);
            }
            if !seen.insert(label) {
                return Err(LabelingError::NotInjective { label });
            }
        }
        Ok(())
    }

    /// True when the label set is exactly `{1, ..., len}`.
    pub fn is_bijection_onto_range(&self) -> bool {
        let m = self.labels.len();
        let mut seen = vec![false; m + 1];
        for &label in &self.labels {
            let l = label as usize;
            if l == 0 || l > m || seen[l] {
                return false;
            }
            seen[l] = true;
        }
        true
    }
}

/// Vertex-sums without any validation. Unset entries are skipped, which lets
/// constructions compute partial sums on half-built labelings.
pub(crate) fn raw_sums(n: usize, arcs: impl IntoIterator<Item = ((Vertex, Vertex), Label)>) -> Vec<i64> {
    let mut sums = vec![0i64; n];
    for ((tail, head), label) in arcs {
        sums[head] += i64::from(label);
        sums[tail] -= i64::from(label);
    }
    sums
}

/// Sum of labels entering each vertex minus labels leaving it.
pub fn vertex_sums(g: &Graph, d: &Orientation, t: &Labeling) -> Result<Vec<i64>, LabelingError> {
    d.check(g)?;
    if t.len() != g.m() {
        return Err(LabelingError::LabelingLength { expected: g.m(), got: t.len() });
    }
    t.check_injective()?;
    Ok(raw_sums(g.n(), d.arcs().iter().copied().zip(t.labels().iter().copied())))
}

/// Why a labeled orientation fails to be antimagic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// The label set is not `{1, ..., m}`.
    NotBijective { m: usize },
    /// Lexicographically smallest pair of vertices sharing a sum.
    DuplicateSum { u: Vertex, v: Vertex, sum: i64 },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::NotBijective { m } => write!(f, "labels are not a bijection onto 1..={m}"),
            Defect::DuplicateSum { u, v, sum } => write!(f, "duplicate sum {sum} at vertices {u},{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub defect: Option<Defect>,
    /// Recomputed sums; absent when the labeling is not injective.
    pub sums: Option<Vec<i64>>,
}

/// Recomputes everything from `(d, t)`; never trusts stored sums.
pub fn verify_antimagic(g: &Graph, d: &Orientation, t: &Labeling) -> Result<Verification, LabelingError> {
    d.check(g)?;
    if t.len() != g.m() {
        return Err(LabelingError::LabelingLength { expected: g.m(), got: t.len() });
    }
    if !t.is_bijection_onto_range() {
        let sums = t.check_injective().ok().map(|_| raw_sums(g.n(), d.arcs().iter().copied().zip(t.labels().iter().copied())));
        return Ok(Verification { ok: false, defect: Some(Defect::NotBijective { m: g.m() }), sums });
    }
    let sums = raw_sums(g.n(), d.arcs().iter().copied().zip(t.labels().iter().copied()));
    let defect = first_duplicate(&sums);
    Ok(Verification { ok: defect.is_none(), defect, sums: Some(sums) })
}

/// Smallest `(u, v)`, `u < v`, with equal sums.
pub fn first_duplicate(sums: &[i64]) -> Option<Defect> {
    let mut groups: BTreeMap<i64, (Vertex, Option<Vertex>)> = BTreeMap::new();
    for (v, &s) in sums.iter().enumerate() {
        groups
            .entry(s)
            .and_modify(|(_, second)| {
                second.get_or_insert(v);
            })
            .or_insert((v, None));
    }
    groups
        .into_iter()
        .filter_map(|(sum, (u, second))| second.map(|v| (u, v, sum)))
        .min_by_key(|&(u, v, _)| (u, v))
        .map(|(u, v, sum)| Defect::DuplicateSum { u, v, sum })
}

/// Which construction produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    EulerIndependent,
    DominatingPairBranch1,
    DominatingPairBranch2,
    MainT4,
    MainT5,
    Oracle,
}

impl Provenance {
    pub const ALL: [Provenance; 6] = [
        Provenance::EulerIndependent,
        Provenance::DominatingPairBranch1,
        Provenance::DominatingPairBranch2,
        Provenance::MainT4,
        Provenance::MainT5,
        Provenance::Oracle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Provenance::EulerIndependent => "euler-independent",
            Provenance::DominatingPairBranch1 => "dominating-pair-branch1",
            Provenance::DominatingPairBranch2 => "dominating-pair-branch2",
            Provenance::MainT4 => "main-t4",
            Provenance::MainT5 => "main-t5",
            Provenance::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| format!("unknown provenance tag {s:?}"))
    }
}

/// A verified antimagic orientation of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    graph: Graph,
    orientation: Orientation,
    labeling: Labeling,
    sums: Vec<i64>,
    provenance: Provenance,
}

impl Solution {
    /// Fails unless `(orientation, labeling)` is an antimagic labeling of `graph`.
    pub fn new(graph: Graph, orientation: Orientation, labeling: Labeling, provenance: Provenance) -> Result<Self, LabelingError> {
        let report = verify_antimagic(&graph, &orientation, &labeling)?;
        match (report.ok, report.defect) {
            (true, _) => Ok(Solution {
                sums: report.sums.expect("verified labelings have sums"),
                graph,
                orientation,
                labeling,
                provenance,
            }),
            (false, Some(defect)) => Err(LabelingError::NotAntimagic(defect)),
            (false, None) => unreachable!("failed verification always names a defect"),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn to_record(&self) -> SolutionRecord {
        SolutionRecord {
            n: self.graph.n(),
            arcs: self
                .orientation
                .arcs()
                .iter()
                .zip(self.labeling.labels())
                .map(|(&(t, h), &l)| (t, h, l))
                .collect(),
            sums: self.sums.clone(),
            provenance: self.provenance.tag().to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_record().to_string()
    }

    /// Graphviz rendering: arcs carry labels, vertices carry their sums.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph antimagic {\n");
        out.push_str(&format!("  label=\"provenance: {}\";\n", self.provenance));
        for (v, s) in self.sums.iter().enumerate() {
            out.push_str(&format!("  {v} [label=\"{v}\\ns={s}\"];\n"));
        }
        for (&(t, h), l) in self.orientation.arcs().iter().zip(self.labeling.labels()) {
            out.push_str(&format!("  {t} -> {h} [label=\"{l}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The solution text format, as written on disk. It is not necessarily
/// antimagic; see [`SolutionRecord::verify_against`].
///
/// ```text
/// n m
/// tail head label      (m lines)
/// sums
/// v s(v)               (n lines)
/// provenance <tag>
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRecord {
    pub n: usize,
    pub arcs: Vec<(Vertex, Vertex, Label)>,
    pub sums: Vec<i64>,
    pub provenance: String,
}

impl fmt::Display for SolutionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.arcs.len())?;
        for (t, h, l) in &self.arcs {
            writeln!(f, "{t} {h} {l}")?;
        }
        writeln!(f, "sums")?;
        for (v, s) in self.sums.iter().enumerate() {
            writeln!(f, "{v} {s}")?;
        }
        writeln!(f, "provenance {}", self.provenance)
    }
}

impl FromStr for SolutionRecord {
    type Err = LabelingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| LabelingError::Parse {
                line: text.lines().count() + 1,
                message: format!("unexpected end of input, expected {what}"),
            })
        };

        let (line, header) = next("header \"n m\"")?;
        let header = numbers::<usize>(line, header, 2)?;
        let (n, m) = (header[0], header[1]);

        let mut arcs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, content) = next("arc line \"tail head label\"")?;
            let f = numbers::<u64>(line, content, 3)?;
            let (t, h) = (f[0] as usize, f[1] as usize);
            if t >= n || h >= n {
                return Err(LabelingError::Parse { line, message: format!("vertex out of range for n = {n}") });
            }
            let label = Label::try_from(f[2])
                .map_err(|_| LabelingError::Parse { line, message: "label too large".into() })?;
            arcs.push((t, h, label));
        }

        let (line, marker) = next("\"sums\"")?;
        if marker.trim() != "sums" {
            return Err(LabelingError::Parse { line, message: format!("expected \"sums\", got {marker:?}") });
        }
        let mut sums = Vec::with_capacity(n);
        for v in 0..n {
            let (line, content) = next("sum line \"v s(v)\"")?;
            let f = numbers::<i64>(line, content, 2)?;
            if f[0] != v as i64 {
                return Err(LabelingError::Parse { line, message: format!("expected sum for vertex {v}") });
            }
            sums.push(f[1]);
        }

        let (line, last) = next("\"provenance <tag>\"")?;
        let provenance = last
            .strip_prefix("provenance ")
            .ok_or_else(|| LabelingError::Parse { line, message: format!("expected \"provenance <tag>\", got {last:?}") })?
            .to_string();
        if let Some((line, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(LabelingError::Parse { line, message: format!("trailing content {extra:?}") });
        }
        Ok(SolutionRecord { n, arcs, sums, provenance })
    }
}

fn numbers<T: FromStr>(line: usize, content: &str, count: usize) -> Result<Vec<T>, LabelingError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != count {
        return Err(LabelingError::Parse { line, message: format!("expected {count} integers, got {content:?}") });
    }
    fields
        .iter()
        .map(|s| s.parse::<T>().map_err(|_| LabelingError::Parse { line, message: format!("not an integer: {s:?}") }))
        .collect()
}

impl SolutionRecord {
    /// The graph implied by the arcs, edges in arc order, each written
    /// smaller endpoint first.
    pub fn graph(&self) -> Result<Graph, LabelingError> {
        Graph::new(self.n, self.arcs.iter().map(|&(t, h, _)| (t.min(h), t.max(h))))
            .map_err(|e| LabelingError::Parse { line: 0, message: e.to_string() })
    }

    /// Maps the record's arcs onto `g`'s edge order, producing an
    /// orientation and labeling of `g`.
    pub fn bind(&self, g: &Graph) -> Result<(Orientation, Labeling), LabelingError> {
        if self.n != g.n() {
            return Err(LabelingError::Parse { line: 1, message: format!("solution has n = {}, graph has n = {}", self.n, g.n()) });
        }
        if self.arcs.len() != g.m() {
            return Err(LabelingError::OrientationLength { expected: g.m(), got: self.arcs.len() });
        }
        let mut arcs: Vec<Option<(Vertex, Vertex, Label)>> = vec![None; g.m()];
        for (i, &(t, h, l)) in self.arcs.iter().enumerate() {
            let line = i + 2;
            let e = g
                .edge_id(t, h)
                .ok_or_else(|| LabelingError::Parse { line, message: format!("arc {t}->{h} is not an edge of the graph") })?;
            if arcs[e].replace((t, h, l)).is_some() {
                return Err(LabelingError::Parse { line, message: format!("edge {{{t}, {h}}} oriented twice") });
            }
        }
        let arcs: Vec<(Vertex, Vertex, Label)> = arcs.into_iter().map(|a| a.expect("all edges covered")).collect();
        Ok((
            Orientation::new(arcs.iter().map(|&(t, h, _)| (t, h)).collect()),
            Labeling::new(arcs.iter().map(|&(_, _, l)| l).collect()),
        ))
    }

    /// Verifies the record as a labeled orientation of `g`. Stored sums must
    /// also match the recomputed ones when the labeling is injective.
    pub fn verify_against(&self, g: &Graph) -> Result<Verification, LabelingError> {
        let (d, t) = self.bind(g)?;
        let report = verify_antimagic(g, &d, &t)?;
        if self.sums.len() != g.n() {
            return Err(LabelingError::Parse { line: 0, message: "sums section has wrong length".into() });
        }
        if let Some(actual) = &report.sums {
            for (v, (&stored, &actual)) in self.sums.iter().zip(actual).enumerate() {
                if stored != actual {
                    return Err(LabelingError::SumMismatch { vertex: v, stored, actual });
                }
            }
        }
        Ok(report)
    }

    /// Rebuilds a [`Solution`] over the record's own graph.
    pub fn into_solution(&self) -> Result<Solution, LabelingError> {
        let g = self.graph()?;
        self.verify_against(&g)?;
        let (d, t) = self.bind(&g)?;
        let provenance = self
            .provenance
            .parse()
            .map_err(|message| LabelingError::Parse { line: self.n + self.arcs.len() + 3, message })?;
        Solution::new(g, d, t, provenance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn k2_single_arc() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let sums = vertex_sums(&g, &Orientation::new(vec![(0, 1)]), &Labeling::new(vec![1])).unwrap();
        assert_eq!(sums, vec![-1, 1]);
    }

    #[test]
    fn c3_cyclic_sums_and_duplicate() {
        let g = c3();
        let d = Orientation::new(vec![(0, 1), (1, 2), (2, 0)]);
        let t = Labeling::new(vec![1, 2, 3]);
        assert_eq!(vertex_sums(&g, &d, &t).unwrap(), vec![2, -1, -1]);
        let report = verify_antimagic(&g, &d, &t).unwrap();
        assert!(!report.ok);
        assert_eq!(report.defect, Some(Defect::DuplicateSum { u: 1, v: 2, sum: -1 }));
        assert_eq!(report.defect.unwrap().to_string(), "duplicate sum -1 at vertices 1,2");
    }

    #[test]
    fn p3_into_center_is_antimagic() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let d = Orientation::new(vec![(0, 1), (2, 1)]);
        let report = verify_antimagic(&g, &d, &Labeling::new(vec![1, 2])).unwrap();
        assert!(report.ok);
        assert_eq!(report.sums.unwrap(), vec![-1, 3, -2]);
    }

    #[test]
    fn k2_label_two_is_not_a_bijection() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let report = verify_antimagic(&g, &Orientation::as_stored(&g), &Labeling::new(vec![2])).unwrap();
        assert!(!report.ok);
        assert_eq!(report.defect, Some(Defect::NotBijective { m: 1 }));
    }

    #[test]
    fn structural_errors() {
        let g = c3();
        assert!(matches!(
            vertex_sums(&g, &Orientation::new(vec![(0, 1)]), &Labeling::new(vec![1])),
            Err(LabelingError::OrientationLength { .. })
        ));
        assert!(matches!(
            vertex_sums(&g, &Orientation::new(vec![(0, 1), (1, 2), (0, 1)]), &Labeling::new(vec![1, 2, 3])),
            Err(LabelingError::ArcMismatch { edge: 2, .. })
        ));
        assert_eq!(
            vertex_sums(&g, &Orientation::as_stored(&g), &Labeling::new(vec![1, 1, 3])),
            Err(LabelingError::NotInjective { label: 1 })
        );
    }

    #[test]
    fn isolated_vertices_sum_to_zero() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(vertex_sums(&g, &Orientation::as_stored(&g), &Labeling::new(vec![7])).unwrap(), vec![-7, 7, 0]);
    }

    #[test]
    fn duplicate_pair_is_lexicographically_smallest() {
        assert_eq!(first_duplicate(&[5, 3, 9, 3, 5]), Some(Defect::DuplicateSum { u: 0, v: 4, sum: 5 }));
        assert_eq!(first_duplicate(&[1, 2, 3]), None);
    }

    #[test]
    fn solution_requires_antimagic() {
        let g = c3();
        let err = Solution::new(g, Orientation::new(vec![(0, 1), (1, 2), (2, 0)]), Labeling::new(vec![1, 2, 3]), Provenance::Oracle);
        assert!(matches!(err, Err(LabelingError::NotAntimagic(_))));
    }

    #[test]
    fn solution_text_round_trip() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let s = Solution::new(g, Orientation::new(vec![(0, 1), (2, 1)]), Labeling::new(vec![1, 2]), Provenance::Oracle).unwrap();
        let text = s.to_text();
        assert_eq!(text, "3 2\n0 1 1\n2 1 2\nsums\n0 -1\n1 3\n2 -2\nprovenance oracle\n");
        let record: SolutionRecord = text.parse().unwrap();
        assert_eq!(record.to_string(), text);
        assert_eq!(record.into_solution().unwrap(), s);
    }

    #[test]
    fn record_parse_errors() {
        assert!(matches!("3 2\n0 1 1\n".parse::<SolutionRecord>(), Err(LabelingError::Parse { .. })));
        assert!(matches!(
            "2 1\n0 1 1\nsum\n0 -1\n1 1\nprovenance oracle\n".parse::<SolutionRecord>(),
            Err(LabelingError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "2 1\n0 5 1\nsums\n0 -1\n1 1\nprovenance oracle\n".parse::<SolutionRecord>(),
            Err(LabelingError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn stored_sums_are_checked() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let record: SolutionRecord = "2 1\n0 1 1\nsums\n0 -1\n1 2\nprovenance oracle\n".parse().unwrap();
        assert_eq!(record.verify_against(&g), Err(LabelingError::SumMismatch { vertex: 1, stored: 2, actual: 1 }));
    }

    #[test]
    fn dot_mentions_labels_and_sums() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let d = Orientation::as_stored(&g);
        let s = Solution::new(g, d, Labeling::new(vec![1]), Provenance::Oracle).unwrap();
        let dot = s.to_dot();
        assert!(dot.contains("0 -> 1 [label=\"1\"]"));
        assert!(dot.contains("s=-1"));
    }
}
