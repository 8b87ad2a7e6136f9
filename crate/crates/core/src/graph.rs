//! Labeled simple graphs on `{1..n}`, local complementation and small-graph
//! isomorphism.
//!
//! Adjacency is stored as one bitset row per vertex, so a local complement at
//! `v` costs `deg(v)` row XORs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type VertexId = usize;

/// Largest graph accepted by [`is_isomorphic`].
pub const ISOMORPHISM_MAX_N: usize = 16;

/// A labeled simple undirected graph on the vertex set `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

/// JSON form: `{"n": 4, "edges": [[1,2],[1,3]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = value.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(value.n, &edges)
    }
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from 1-based edge pairs. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn flip(&mut self, i: usize, j: usize) {
        self.adj[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.bit(u - 1, v - 1) {
            self.flip(u - 1, v - 1);
            self.flip(v - 1, u - 1);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if self.bit(u - 1, v - 1) {
            self.flip(u - 1, v - 1);
            self.flip(v - 1, u - 1);
        }
        Ok(())
    }

    /// Whether `(u, v)` is an edge. Out-of-range labels are never adjacent.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.bit(u - 1, v - 1)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.bit(u, v) {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for (w, word) in self.row(v - 1).iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check(v)?;
        Ok(self.degree_unchecked(v))
    }

    fn degree_unchecked(&self, v: VertexId) -> usize {
        self.row(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest vertex degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree_unchecked(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|v| self.degree_unchecked(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors_unchecked(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `keep`, relabeled to `1..|keep|` in ascending order
    /// of the original labels.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<InducedSubgraph> {
        let mut original: Vec<VertexId> = keep.to_vec();
        original.sort_unstable();
        original.dedup();
        for &v in &original {
            self.check(v)?;
        }
        let mut graph = SimpleGraph::new(original.len());
        for (a, &u) in original.iter().enumerate() {
            for (b, &v) in original.iter().enumerate().skip(a + 1) {
                if self.bit(u - 1, v - 1) {
                    graph.add_edge(a + 1, b + 1)?;
                }
            }
        }
        Ok(InducedSubgraph { graph, original })
    }

    /// Local complement at `v`: toggles every edge among the neighbors of `v`.
    pub fn local_complement(&self, v: VertexId) -> Result<SimpleGraph> {
        self.check(v)?;
        let mut g = self.clone();
        g.local_complement_in_place(v);
        Ok(g)
    }

    /// In-place local complement. `v` must be in range.
    pub fn local_complement_in_place(&mut self, v: VertexId) {
        let nv: Vec<u64> = self.row(v - 1).to_vec();
        for u in self.neighbors_unchecked(v) {
            let start = (u - 1) * self.words;
            for (w, word) in nv.iter().enumerate() {
                self.adj[start + w] ^= word;
            }
            // u is in N(v), so the XOR set its own bit.
            self.flip(u - 1, u - 1);
        }
    }

    /// Applies the steps of `f` from left to right.
    pub fn apply_sequence(&self, f: &LcSequence) -> Result<SimpleGraph> {
        for &v in &f.steps {
            self.check(v)?;
        }
        let mut g = self.clone();
        for &v in &f.steps {
            g.local_complement_in_place(v);
        }
        Ok(g)
    }

    /// Edge pivot along `(i, j)`, i.e. the sequence `[i, j, i]`.
    pub fn edge_pivot(&self, i: VertexId, j: VertexId) -> Result<SimpleGraph> {
        self.check(i)?;
        self.check(j)?;
        if !self.has_edge(i, j) {
            return Err(Error::NotAnEdge(i, j));
        }
        self.apply_sequence(&LcSequence::new(vec![i, j, i]))
    }

    /// Raw adjacency words; equal slices mean equal labeled graphs of the same order.
    pub fn adjacency_words(&self) -> &[u64] {
        &self.adj
    }

    /// Deterministic byte key. Two graphs share a key exactly when they have the
    /// same vertex count and the same labeled edge set.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = (self.n as u64).to_be_bytes().to_vec();
        out.extend(self.upper_triangle_bytes());
        out
    }

    /// Upper triangle packed row by row, most significant bit first.
    fn upper_triangle_bytes(&self) -> Vec<u8> {
        let mut bytes = Vec::new();
        let mut cur = 0u8;
        let mut filled = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                cur = (cur << 1) | self.bit(u, v) as u8;
                filled += 1;
                if filled == 8 {
                    bytes.push(cur);
                    cur = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(cur << (8 - filled));
        }
        bytes
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 1..=self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Result of [`SimpleGraph::induced_subgraph`]: vertex `i` of `graph` is
/// `original[i - 1]` in the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: SimpleGraph,
    pub original: Vec<VertexId>,
}

/// An ordered list of local complements, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LcSequence {
    pub steps: Vec<VertexId>,
}

impl LcSequence {
    pub fn new(steps: Vec<VertexId>) -> Self {
        LcSequence { steps }
    }

    pub fn identity() -> Self {
        LcSequence::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Each step is self-inverse, so the inverse is the reversed list.
    pub fn inverse(&self) -> Self {
        LcSequence {
            steps: self.steps.iter().rev().copied().collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &LcSequence) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        LcSequence { steps }
    }
}

impl From<Vec<VertexId>> for LcSequence {
    fn from(steps: Vec<VertexId>) -> Self {
        LcSequence { steps }
    }
}

impl fmt::Display for LcSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Vertex invariant used to prune the isomorphism search: degree plus the
/// sorted degrees of the neighbors.
fn vertex_colors(g: &SimpleGraph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (1..=g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors_unchecked(v).iter().map(|&w| deg[w - 1]).collect();
            nd.sort_unstable();
            (deg[v - 1], nd)
        })
        .collect()
}

/// Isomorphism test for graphs with at most [`ISOMORPHISM_MAX_N`] vertices.
///
/// Returns `Some(map)` with `map[v - 1]` the image of `v` in `h`, or `None`.
pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<VertexId>>> {
    if g.n() != h.n() {
        return Ok(None);
    }
    let n = g.n();
    if n > ISOMORPHISM_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ISOMORPHISM_MAX_N,
        });
    }
    if g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let cg = vertex_colors(g);
    let ch = vertex_colors(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(None);
    }

    // Order g's vertices so each one (after the first of its component) has an
    // already-placed neighbor; that prunes early.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n + 1];
    while order.len() < n {
        let start = (1..=n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (cg[v - 1].0, std::cmp::Reverse(v)))
            .unwrap();
        placed[start] = true;
        order.push(start);
        loop {
            let next = (1..=n)
                .filter(|&v| !placed[v])
                .map(|v| {
                    let links = order.iter().filter(|&&w| g.has_edge(v, w)).count();
                    (links, cg[v - 1].0, std::cmp::Reverse(v), v)
                })
                .filter(|t| t.0 > 0)
                .max();
            match next {
                Some((_, _, _, v)) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
    }

    let mut map = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    if extend_map(g, h, &cg, &ch, &order, 0, &mut map, &mut used) {
        Ok(Some(map[1..].to_vec()))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_map(
    g: &SimpleGraph,
    h: &SimpleGraph,
    cg: &[(usize, Vec<usize>)],
    ch: &[(usize, Vec<usize>)],
    order: &[VertexId],
    depth: usize,
    map: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for u in 1..=h.n() {
        if used[u] || cg[v - 1] != ch[u - 1] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(u, map[w]));
        if !consistent {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend_map(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[u] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k22() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn lc_on_k22_adds_edge_between_other_side() {
        let g = k22().local_complement(1).unwrap();
        let mut expected = k22();
        expected.add_edge(3, 4).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn lc_on_triangle_gives_path() {
        let k3 = SimpleGraph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let g = k3.local_complement(1).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn pivot_sequence_on_k22() {
        let g = k22().apply_sequence(&LcSequence::new(vec![1, 3, 1])).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (3, 4)]);
        assert_eq!(k22().edge_pivot(1, 3).unwrap(), g);
        assert_eq!(k22().edge_pivot(3, 1).unwrap(), g);
    }

    #[test]
    fn pivot_rejects_non_edge() {
        assert_eq!(k22().edge_pivot(1, 2), Err(Error::NotAnEdge(1, 2)));
    }

    #[test]
    fn invalid_vertex_is_reported() {
        assert_eq!(
            k22().local_complement(5),
            Err(Error::InvalidVertex { vertex: 5, n: 4 })
        );
        assert!(k22().apply_sequence(&LcSequence::new(vec![1, 0])).is_err());
    }

    #[test]
    fn key_ignores_insertion_order() {
        let a = SimpleGraph::from_edges(4, &[(3, 4), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(2, 1), (4, 3), (3, 2)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let mut c = k22();
        let key = c.canonical_key();
        c.add_edge(3, 4).unwrap();
        assert_ne!(key, c.canonical_key());
    }

    #[test]
    fn key_distinguishes_order() {
        assert_ne!(SimpleGraph::new(3).canonical_key(), SimpleGraph::new(4).canonical_key());
    }

    #[test]
    fn isomorphism_of_relabeled_paths() {
        let p = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let q = SimpleGraph::from_edges(4, &[(2, 1), (1, 3), (3, 4)]).unwrap();
        let map = is_isomorphic(&p, &q).unwrap().unwrap();
        for (u, v) in p.edges() {
            assert!(q.has_edge(map[u - 1], map[v - 1]));
        }
        let star = SimpleGraph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_isomorphic(&p, &star).unwrap().is_none());
    }

    #[test]
    fn isomorphism_size_limit() {
        let g = SimpleGraph::new(17);
        assert!(matches!(is_isomorphic(&g, &g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = SimpleGraph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let sub = c5.induced_subgraph(&[5, 1, 2, 4]).unwrap();
        assert_eq!(sub.original, vec![1, 2, 4, 5]);
        assert_eq!(sub.graph.edges(), vec![(1, 2), (1, 4), (3, 4)]);
    }

    #[test]
    fn json_round_trip() {
        let g = k22();
        let s = g.to_json();
        assert_eq!(s, r#"{"n":4,"edges":[[1,3],[1,4],[2,3],[2,4]]}"#);
        assert_eq!(SimpleGraph::from_json(&s).unwrap(), g);
        assert!(SimpleGraph::from_json(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let mut g = SimpleGraph::new(70);
        g.add_edge(1, 70).unwrap();
        g.add_edge(1, 65).unwrap();
        let h = g.local_complement(1).unwrap();
        assert!(h.has_edge(65, 70));
        assert_eq!(h.edge_count(), 3);
    }
}
