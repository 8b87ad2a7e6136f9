//! Splits, strong splits and the quotient-augmented strong split tree (QASST).
//!
//! A split `(A, B)` is found by a forcing closure: once a crossing edge
//! `(a, b)` with `a ∈ A`, `b ∈ B` is fixed, every pair `u ∈ A`, `w ∈ B` must
//! satisfy `u ~ w ⇔ (u ~ b ∧ a ~ w)`. Any violation forces `w` into `A`, so the
//! smallest `A` containing a seed set is unique and computed in `O(n²)`.
//!
//! The decomposition first refines the graph with such splits until every
//! piece is prime or has three nodes, then merges adjacent complete-complete
//! and star-center/star-spoke pairs. The result is the unique minimal split
//! decomposition. Quotients are numbered canonically: quotients without
//! leaf-nodes first, then by smallest leaf-node (see [`Qasst`]).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// Split-node `s_i^j`: lives in quotient `i` and is paired with `s_j^i` in quotient `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitNode {
    pub i: usize,
    pub j: usize,
}

impl SplitNode {
    pub fn new(i: usize, j: usize) -> Self {
        SplitNode { i, j }
    }

    pub fn partner(self) -> SplitNode {
        SplitNode { i: self.j, j: self.i }
    }
}

impl fmt::Display for SplitNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}^{}", self.i, self.j)
    }
}

/// A node of a quotient graph. Leaves sort before split-nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf(VertexId),
    Split(SplitNode),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Leaf(v) => write!(f, "{v}"),
            Node::Split(s) => write!(f, "{s}"),
        }
    }
}

/// A bipartition of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Split {
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
}

impl Split {
    /// Builds a split of `{1..n}` from one side.
    pub fn from_side(n: usize, side_a: &[VertexId]) -> Result<Split> {
        let a: BTreeSet<VertexId> = side_a.iter().copied().collect();
        if a.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::MalformedSplit(format!("vertex outside 1..={n}")));
        }
        let side_b: Vec<VertexId> = (1..=n).filter(|v| !a.contains(v)).collect();
        Split::new(a.into_iter().collect(), side_b)
    }

    pub fn new(mut side_a: Vec<VertexId>, mut side_b: Vec<VertexId>) -> Result<Split> {
        side_a.sort_unstable();
        side_b.sort_unstable();
        if side_a.is_empty() || side_b.is_empty() {
            return Err(Error::MalformedSplit("both sides must be nonempty".into()));
        }
        Ok(Split { side_a, side_b })
    }

    /// Swaps sides so that `side_a` holds vertex 1.
    pub fn normalized(mut self) -> Split {
        if self.side_a.first() != Some(&1) {
            std::mem::swap(&mut self.side_a, &mut self.side_b);
        }
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.side_a.len() == 1 || self.side_b.len() == 1
    }

    fn membership(&self, n: usize) -> Result<Vec<bool>> {
        let mut in_a = vec![false; n + 1];
        let mut seen = vec![false; n + 1];
        for (side, flag) in [(&self.side_a, true), (&self.side_b, false)] {
            for &v in side {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::MalformedSplit(format!(
                        "vertex {v} is out of range or repeated"
                    )));
                }
                seen[v] = true;
                in_a[v] = flag;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::MalformedSplit("sides do not cover the vertex set".into()));
        }
        Ok(in_a)
    }
}

fn crossing_is_complete_bipartite(g: &SimpleGraph, in_a: &[bool]) -> bool {
    let n = g.n();
    let frontier_a: Vec<usize> = (1..=n)
        .filter(|&u| in_a[u] && (1..=n).any(|w| !in_a[w] && g.has_edge(u, w)))
        .collect();
    let frontier_b: Vec<usize> = (1..=n)
        .filter(|&w| !in_a[w] && (1..=n).any(|u| in_a[u] && g.has_edge(u, w)))
        .collect();
    frontier_a
        .iter()
        .all(|&u| frontier_b.iter().all(|&w| g.has_edge(u, w)))
}

/// Whether the crossing edges of `s` form a complete bipartite graph.
pub fn is_split(g: &SimpleGraph, s: &Split) -> Result<bool> {
    let in_a = s.membership(g.n())?;
    Ok(crossing_is_complete_bipartite(g, &in_a))
}

/// Whether `s` is a split that no other split crosses. Requires a connected graph.
pub fn is_strong(g: &SimpleGraph, s: &Split) -> Result<bool> {
    let in_a = s.membership(g.n())?;
    if !crossing_is_complete_bipartite(g, &in_a) {
        return Ok(false);
    }
    if s.is_trivial() {
        return Ok(true);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    for &x in &s.side_a {
        for &y in &s.side_b {
            for a in 1..=n {
                for b in g.neighbors_unchecked(a) {
                    if b == x || b == y {
                        continue;
                    }
                    let c = closure(g, &[x, y, a], a, b);
                    let misses_a = s.side_a.iter().any(|&v| !c[v]);
                    let misses_b = s.side_b.iter().any(|&v| !c[v]);
                    if misses_a && misses_b {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Smallest `A ⊇ seeds` (with `b ∉ A`) such that `(A, V∖A)` is a split whose
/// crossing edges include `(a, b)`. Requires `a ∈ seeds` and `a ~ b`. Indexed
/// by vertex; entry 0 is unused.
fn closure(g: &SimpleGraph, seeds: &[usize], a: usize, b: usize) -> Vec<bool> {
    let n = g.n();
    let mut in_a = vec![false; n + 1];
    let mut stack = Vec::with_capacity(n);
    for &s in seeds {
        if !in_a[s] {
            in_a[s] = true;
            stack.push(s);
        }
    }
    while let Some(u) = stack.pop() {
        let ub = g.has_edge(u, b);
        for w in 1..=n {
            if in_a[w] {
                continue;
            }
            if g.has_edge(u, w) != (ub && g.has_edge(a, w)) {
                in_a[w] = true;
                stack.push(w);
            }
        }
    }
    in_a
}

/// Some split with both sides of size at least two, as side-A membership.
fn find_nontrivial_split(g: &SimpleGraph) -> Option<Vec<bool>> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    for a in 1..=n {
        for b in g.neighbors_unchecked(a) {
            for y in 1..=n {
                if y == a || y == b {
                    continue;
                }
                let side = closure(g, &[a, y], a, b);
                let outside = (1..=n).filter(|&v| !side[v]).count();
                if outside >= 2 {
                    return Some(side);
                }
            }
        }
    }
    None
}

/// Shape of a quotient graph ignoring any designated node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Complete,
    /// Star on at least three nodes; the payload is the center position.
    Star(usize),
    Prime,
}

/// One- and two-node connected graphs count as complete.
pub(crate) fn shape_of(g: &SimpleGraph) -> Shape {
    let m = g.n();
    let e = g.edge_count();
    if e == m * (m.saturating_sub(1)) / 2 {
        return Shape::Complete;
    }
    if m >= 3 && e == m - 1 {
        if let Some(c) = (1..=m).find(|&v| g.degree(v).unwrap() == m - 1) {
            return Shape::Star(c);
        }
    }
    Shape::Prime
}

/// Classification of a quotient relative to one of its nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientKind {
    Complete,
    StarCenter,
    StarSpoke { center: NodeRef },
    Prime,
}

/// Serializable node reference used inside [`QuotientKind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeRef {
    Leaf(VertexId),
    Split(SplitNode),
}

impl From<Node> for NodeRef {
    fn from(n: Node) -> Self {
        match n {
            Node::Leaf(v) => NodeRef::Leaf(v),
            Node::Split(s) => NodeRef::Split(s),
        }
    }
}

impl From<NodeRef> for Node {
    fn from(n: NodeRef) -> Self {
        match n {
            NodeRef::Leaf(v) => Node::Leaf(v),
            NodeRef::Split(s) => Node::Split(s),
        }
    }
}

impl QuotientKind {
    pub fn short(&self) -> &'static str {
        match self {
            QuotientKind::Complete => "c",
            QuotientKind::StarCenter => "sc",
            QuotientKind::StarSpoke { .. } => "ss",
            QuotientKind::Prime => "prime",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinValidity {
    Valid,
    Invalid,
}

/// Whether two quotients may be joined along a tree edge, given their kinds
/// at the paired split-nodes.
pub fn join_validity(a: &QuotientKind, b: &QuotientKind) -> JoinValidity {
    use QuotientKind::*;
    match (a, b) {
        (Complete, Complete) | (StarCenter, StarSpoke { .. }) | (StarSpoke { .. }, StarCenter) => {
            JoinValidity::Invalid
        }
        _ => JoinValidity::Valid,
    }
}

/// A quotient graph. Nodes are kept sorted (leaves ascending, then
/// split-nodes by partner index); node `p` of [`QuotientGraph::graph`] is the
/// `p`-th node in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    nodes: Vec<Node>,
    graph: SimpleGraph,
}

impl QuotientGraph {
    pub fn new(nodes: Vec<Node>, edges: &[(Node, Node)]) -> Result<Self> {
        let mut sorted = nodes;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedQasst("repeated node in quotient".into()));
        }
        let mut graph = SimpleGraph::new(sorted.len());
        for (x, y) in edges {
            let px = sorted.binary_search(x).map_err(|_| Error::NodeNotInQuotient(x.to_string()))?;
            let py = sorted.binary_search(y).map_err(|_| Error::NodeNotInQuotient(y.to_string()))?;
            graph
                .add_edge(px + 1, py + 1)
                .map_err(|_| Error::MalformedQasst(format!("self-loop on {x}")))?;
        }
        Ok(QuotientGraph { nodes: sorted, graph })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leaf_nodes(&self) -> Vec<VertexId> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Leaf(v) => Some(*v),
                Node::Split(_) => None,
            })
            .collect()
    }

    pub fn split_nodes(&self) -> Vec<SplitNode> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Split(s) => Some(*s),
                Node::Leaf(_) => None,
            })
            .collect()
    }

    /// The underlying graph on node positions `1..=len()`.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// 1-based position of `node`.
    pub fn position(&self, node: &Node) -> Option<usize> {
        self.nodes.binary_search(node).ok().map(|p| p + 1)
    }

    pub fn node_at(&self, p: usize) -> Node {
        self.nodes[p - 1]
    }

    pub fn contains(&self, node: &Node) -> bool {
        self.position(node).is_some()
    }

    pub fn has_edge(&self, x: &Node, y: &Node) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(a), Some(b)) => self.graph.has_edge(a, b),
            _ => false,
        }
    }

    pub fn neighbors(&self, node: &Node) -> Result<Vec<Node>> {
        let p = self
            .position(node)
            .ok_or_else(|| Error::NodeNotInQuotient(node.to_string()))?;
        Ok(self
            .graph
            .neighbors_unchecked(p)
            .into_iter()
            .map(|q| self.nodes[q - 1])
            .collect())
    }

    pub fn edges(&self) -> Vec<(Node, Node)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(a, b)| (self.nodes[a - 1], self.nodes[b - 1]))
            .collect()
    }

    /// Local complement at `node`.
    pub fn local_complement(&self, node: &Node) -> Result<QuotientGraph> {
        let p = self
            .position(node)
            .ok_or_else(|| Error::NodeNotInQuotient(node.to_string()))?;
        Ok(QuotientGraph {
            nodes: self.nodes.clone(),
            graph: self.graph.local_complement(p)?,
        })
    }

    /// Relabels every node through `f`, keeping edges.
    pub(crate) fn map_nodes(&self, f: impl Fn(Node) -> Node) -> Result<QuotientGraph> {
        let nodes: Vec<Node> = self.nodes.iter().map(|&n| f(n)).collect();
        let edges: Vec<(Node, Node)> = self.edges().into_iter().map(|(a, b)| (f(a), f(b))).collect();
        QuotientGraph::new(nodes, &edges)
    }

    pub(crate) fn shape(&self) -> Shape {
        shape_of(&self.graph)
    }
}

/// Classifies `q` relative to the node `at`.
///
/// Without a node the quotient is classified on its own: complete, prime, or a
/// star reported as `StarSpoke` with its center. Two-node quotients are complete.
pub fn classify_quotient(q: &QuotientGraph, at: Option<&Node>) -> Result<QuotientKind> {
    let shape = q.shape();
    let at_pos = match at {
        Some(node) => Some(
            q.position(node)
                .ok_or_else(|| Error::NodeNotInQuotient(node.to_string()))?,
        ),
        None => None,
    };
    Ok(match shape {
        Shape::Complete => QuotientKind::Complete,
        Shape::Prime => QuotientKind::Prime,
        Shape::Star(c) if at_pos == Some(c) => QuotientKind::StarCenter,
        Shape::Star(c) => QuotientKind::StarSpoke {
            center: q.node_at(c).into(),
        },
    })
}

/// Quotient-augmented strong split tree.
///
/// Quotient `i` holds its leaf-nodes (original vertices) and split-nodes
/// `s_i^j`; every tree edge pairs `s_i^j` with `s_j^i`. Numbering is
/// canonical: quotients with no leaf-nodes come first, ordered by the sorted
/// list of smallest leaves reachable through each of their split-nodes; the
/// rest are ordered by their smallest leaf-node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qasst {
    n: usize,
    quotients: Vec<QuotientGraph>,
    tree_edges: Vec<(SplitNode, SplitNode)>,
}

impl Qasst {
    /// Validates and wraps a set of quotients. Tree edges are derived from the
    /// split-nodes.
    pub fn new(n: usize, quotients: Vec<QuotientGraph>) -> Result<Qasst> {
        let mut leaf_seen = vec![false; n + 1];
        let mut tree_edges = Vec::new();
        for (i, q) in quotients.iter().enumerate() {
            for v in q.leaf_nodes() {
                if v == 0 || v > n || leaf_seen[v] {
                    return Err(Error::MalformedQasst(format!(
                        "leaf {v} is out of range or repeated"
                    )));
                }
                leaf_seen[v] = true;
            }
            for s in q.split_nodes() {
                if s.i != i || s.j >= quotients.len() || s.j == i {
                    return Err(Error::MalformedQasst(format!("split-node {s} in quotient {i}")));
                }
                if !quotients[s.j].contains(&Node::Split(s.partner())) {
                    return Err(Error::MalformedQasst(format!("split-node {s} has no partner")));
                }
                if s.i < s.j {
                    tree_edges.push((s, s.partner()));
                }
            }
        }
        if leaf_seen[1..].iter().any(|s| !s) {
            return Err(Error::MalformedQasst("leaf-nodes do not cover 1..=n".into()));
        }
        if quotients.is_empty() || tree_edges.len() + 1 != quotients.len() {
            return Err(Error::MalformedQasst("tree edges do not form a tree".into()));
        }
        let mut seen = vec![false; quotients.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for s in quotients[i].split_nodes() {
                if !seen[s.j] {
                    seen[s.j] = true;
                    queue.push_back(s.j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::MalformedQasst("tree is not connected".into()));
        }
        Ok(Qasst {
            n,
            quotients,
            tree_edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quotients(&self) -> &[QuotientGraph] {
        &self.quotients
    }

    pub fn quotient(&self, i: usize) -> &QuotientGraph {
        &self.quotients[i]
    }

    /// Tree edges `(s_i^j, s_j^i)` with `i < j`.
    pub fn tree_edges(&self) -> &[(SplitNode, SplitNode)] {
        &self.tree_edges
    }

    /// Index of the quotient holding leaf `v`.
    pub fn quotient_of_leaf(&self, v: VertexId) -> Option<usize> {
        self.quotients
            .iter()
            .position(|q| q.contains(&Node::Leaf(v)))
    }

    /// Kind of the quotient holding `s` classified at `s`.
    pub fn kind_at(&self, s: SplitNode) -> Result<QuotientKind> {
        classify_quotient(&self.quotients[s.i], Some(&Node::Split(s)))
    }

    /// Leaves of the subtree reached by crossing from `s` to its partner.
    pub fn leaves_beyond(&self, s: SplitNode) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![s.partner()];
        while let Some(t) = stack.pop() {
            let q = &self.quotients[t.i];
            out.extend(q.leaf_nodes());
            for u in q.split_nodes() {
                if u != t {
                    stack.push(u.partner());
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The nontrivial strong splits, one per tree edge, normalized so that
    /// side A holds vertex 1, sorted.
    pub fn strong_splits(&self) -> Vec<Split> {
        let mut out: Vec<Split> = self
            .tree_edges
            .iter()
            .map(|(s, _)| Split::from_side(self.n, &self.leaves_beyond(*s)).unwrap().normalized())
            .collect();
        out.sort();
        out
    }

    /// Relabels leaves through `f` and renumbers quotients canonically.
    pub(crate) fn relabel_leaves(&self, n: usize, f: impl Fn(VertexId) -> VertexId) -> Result<Qasst> {
        let mut work = Work::from_qasst(self);
        for piece in work.pieces.iter_mut().flatten() {
            for node in piece.nodes.iter_mut() {
                if let WNode::Leaf(v) = node {
                    *v = f(*v);
                }
            }
        }
        work.into_qasst(n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QasstJson::from(self)).expect("QASST serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Qasst> {
        let parsed: QasstJson =
            serde_json::from_str(s).map_err(|e| Error::MalformedQasst(e.to_string()))?;
        parsed.try_into()
    }

    /// Graphviz rendering: leaf-nodes as circles, split-nodes as boxes, tree
    /// edges bold and red.
    pub fn to_dot(&self) -> String {
        let id = |i: usize, n: &Node| match n {
            Node::Leaf(v) => format!("\"q{i}_v{v}\""),
            Node::Split(s) => format!("\"q{i}_s{}\"", s.j),
        };
        let mut out = String::from("graph QASST {\n");
        for (i, q) in self.quotients.iter().enumerate() {
            out.push_str(&format!("  subgraph cluster_{i} {{\n    label=\"Q{i}\";\n"));
            for n in q.nodes() {
                let (label, shape) = match n {
                    Node::Leaf(v) => (v.to_string(), "circle"),
                    Node::Split(s) => (s.to_string(), "box"),
                };
                out.push_str(&format!("    {} [label=\"{label}\", shape={shape}];\n", id(i, n)));
            }
            for (a, b) in q.edges() {
                out.push_str(&format!("    {} -- {};\n", id(i, &a), id(i, &b)));
            }
            out.push_str("  }\n");
        }
        for (s, t) in &self.tree_edges {
            out.push_str(&format!(
                "  {} -- {} [style=bold, color=red];\n",
                id(s.i, &Node::Split(*s)),
                id(t.i, &Node::Split(*t))
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// JSON form of a quotient. `edges` use 1-based node positions in the list
/// `leaf_nodes ++ split_nodes`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuotientJson {
    pub leaf_nodes: Vec<VertexId>,
    pub split_nodes: Vec<SplitNode>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QasstJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub quotients: Vec<QuotientJson>,
    pub tree_edges: Vec<[SplitNode; 2]>,
}

impl From<&Qasst> for QasstJson {
    fn from(q: &Qasst) -> Self {
        QasstJson {
            n: Some(q.n),
            quotients: q
                .quotients
                .iter()
                .map(|qg| QuotientJson {
                    leaf_nodes: qg.leaf_nodes(),
                    split_nodes: qg.split_nodes(),
                    edges: qg.graph.edges().into_iter().map(|(a, b)| [a, b]).collect(),
                })
                .collect(),
            tree_edges: q.tree_edges.iter().map(|(a, b)| [*a, *b]).collect(),
        }
    }
}

impl TryFrom<QasstJson> for Qasst {
    type Error = Error;

    fn try_from(value: QasstJson) -> Result<Qasst> {
        let mut quotients = Vec::new();
        let mut max_leaf = 0;
        for qj in &value.quotients {
            let nodes: Vec<Node> = qj
                .leaf_nodes
                .iter()
                .map(|&v| Node::Leaf(v))
                .chain(qj.split_nodes.iter().map(|&s| Node::Split(s)))
                .collect();
            max_leaf = max_leaf.max(qj.leaf_nodes.iter().copied().max().unwrap_or(0));
            let mut edges = Vec::new();
            for [a, b] in &qj.edges {
                let get = |p: usize| {
                    nodes
                        .get(p.wrapping_sub(1))
                        .copied()
                        .ok_or_else(|| Error::MalformedQasst(format!("node position {p}")))
                };
                edges.push((get(*a)?, get(*b)?));
            }
            quotients.push(QuotientGraph::new(nodes, &edges)?);
        }
        let q = Qasst::new(value.n.unwrap_or(max_leaf), quotients)?;
        let mut given: Vec<(SplitNode, SplitNode)> = value
            .tree_edges
            .iter()
            .map(|[a, b]| if a.i < a.j { (*a, *b) } else { (*b, *a) })
            .collect();
        given.sort_unstable();
        let mut derived = q.tree_edges.clone();
        derived.sort_unstable();
        if given != derived {
            return Err(Error::MalformedQasst(
                "tree_edges disagree with the split-nodes".into(),
            ));
        }
        Ok(q)
    }
}

/// Builds the graph encoded by a QASST: leaves `u`, `v` are adjacent when the
/// alternating path through the paired split-nodes connects them. This does
/// not assume the tree edges are strong.
pub fn reconstruct(q: &Qasst) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(q.n);
    for (i, quotient) in q.quotients.iter().enumerate() {
        for u in quotient.leaf_nodes() {
            // (quotient, node whose neighbors are reachable from u)
            let mut stack: Vec<(usize, Node)> = vec![(i, Node::Leaf(u))];
            while let Some((qi, node)) = stack.pop() {
                for w in q.quotients[qi].neighbors(&node)? {
                    match w {
                        Node::Leaf(v) if v > u => g.add_edge(u, v)?,
                        Node::Leaf(_) => {}
                        Node::Split(s) => stack.push((s.j, Node::Split(s.partner()))),
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Computes the QASST of a connected graph.
pub fn compute_qasst(g: &SimpleGraph) -> Result<Qasst> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut work = Work::from_graph(g);
    work.refine();
    work.reduce();
    work.into_qasst(g.n())
}

/// Whether every quotient of the decomposition is a star or complete.
pub fn is_distance_hereditary(g: &SimpleGraph) -> Result<bool> {
    let q = compute_qasst(g)?;
    Ok(q.quotients.iter().all(|qg| qg.shape() != Shape::Prime))
}

/// Largest graph accepted by [`dh_definition_oracle`].
pub const DH_ORACLE_MAX_N: usize = 10;

fn bfs_distances(g: &SimpleGraph, mask: u32, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n() + 1];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors_unchecked(u) {
            if mask >> (w - 1) & 1 == 1 && dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Literal definition check: every connected induced subgraph preserves
/// distances. Exponential; connected graphs with at most ten vertices.
pub fn dh_definition_oracle(g: &SimpleGraph) -> Result<bool> {
    let n = g.n();
    if n > DH_ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: DH_ORACLE_MAX_N,
        });
    }
    if n == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let full = (1u32 << n) - 1;
    let base: Vec<Vec<Option<usize>>> = (1..=n).map(|s| bfs_distances(g, full, s)).collect();
    for mask in 1..full {
        if mask.count_ones() < 3 {
            continue;
        }
        let members: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let first = bfs_distances(g, mask, members[0]);
        if members.iter().any(|&v| first[v].is_none()) {
            continue;
        }
        for &s in &members {
            let d = bfs_distances(g, mask, s);
            if members.iter().any(|&v| d[v] != base[s - 1][v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Working representation shared by decomposition and the QASST operations.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum WNode {
    Leaf(VertexId),
    /// Marker ids come in pairs `(2e, 2e + 1)`; the partner is `id ^ 1`.
    Marker(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub nodes: Vec<WNode>,
    /// Graph on node positions `1..=nodes.len()`.
    pub g: SimpleGraph,
}

impl Piece {
    fn pos(&self, node: WNode) -> usize {
        self.nodes.iter().position(|&x| x == node).unwrap() + 1
    }

    fn markers(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                WNode::Marker(m) => Some(*m),
                WNode::Leaf(_) => None,
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub pieces: Vec<Option<Piece>>,
    home: HashMap<usize, usize>,
    next_marker: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Local {
    Small,
    Complete,
    StarCenter,
    StarSpoke,
    Prime,
}

impl Work {
    pub fn from_graph(g: &SimpleGraph) -> Work {
        let mut w = Work {
            pieces: Vec::new(),
            home: HashMap::new(),
            next_marker: 0,
        };
        w.add(Piece {
            nodes: (1..=g.n()).map(WNode::Leaf).collect(),
            g: g.clone(),
        });
        w
    }

    pub fn from_qasst(q: &Qasst) -> Work {
        let mut marker_of: HashMap<SplitNode, usize> = HashMap::new();
        for (e, (s, t)) in q.tree_edges.iter().enumerate() {
            marker_of.insert(*s, 2 * e);
            marker_of.insert(*t, 2 * e + 1);
        }
        let mut w = Work {
            pieces: Vec::new(),
            home: HashMap::new(),
            next_marker: 2 * q.tree_edges.len(),
        };
        for qg in &q.quotients {
            let nodes = qg
                .nodes()
                .iter()
                .map(|n| match n {
                    Node::Leaf(v) => WNode::Leaf(*v),
                    Node::Split(s) => WNode::Marker(marker_of[s]),
                })
                .collect();
            w.add(Piece {
                nodes,
                g: qg.graph().clone(),
            });
        }
        w
    }

    fn add(&mut self, p: Piece) -> usize {
        let idx = self.pieces.len();
        for m in p.markers() {
            self.home.insert(m, idx);
        }
        self.pieces.push(Some(p));
        idx
    }

    fn take(&mut self, idx: usize) -> Piece {
        self.pieces[idx].take().expect("live piece")
    }

    pub fn live(&self) -> Vec<usize> {
        (0..self.pieces.len())
            .filter(|&i| self.pieces[i].is_some())
            .collect()
    }

    pub fn piece(&self, idx: usize) -> &Piece {
        self.pieces[idx].as_ref().expect("live piece")
    }

    /// Drops the given leaves from every piece.
    pub fn delete_leaves(&mut self, drop: &dyn Fn(VertexId) -> bool) {
        for slot in self.pieces.iter_mut() {
            if let Some(p) = slot {
                let keep: Vec<usize> = (1..=p.nodes.len())
                    .filter(|&i| !matches!(p.nodes[i - 1], WNode::Leaf(v) if drop(v)))
                    .collect();
                if keep.len() == p.nodes.len() {
                    continue;
                }
                let sub = p.g.induced_subgraph(&keep).unwrap();
                p.nodes = keep.iter().map(|&i| p.nodes[i - 1]).collect();
                p.g = sub.graph;
            }
        }
    }

    /// Splits a piece along `side` (membership by position) and returns the
    /// two new piece indices.
    fn split_piece(&mut self, idx: usize, side: &[bool]) -> (usize, usize) {
        let p = self.take(idx);
        let m = p.nodes.len();
        let (ma, mb) = (self.next_marker, self.next_marker + 1);
        self.next_marker += 2;
        let make = |in_side: bool, marker: usize| {
            let members: Vec<usize> = (1..=m).filter(|&v| side[v] == in_side).collect();
            let mut g = p.g.induced_subgraph(&members).unwrap().graph;
            let k = members.len();
            let mut bigger = SimpleGraph::new(k + 1);
            for (a, b) in g.edges() {
                bigger.add_edge(a, b).unwrap();
            }
            for (pos, &v) in members.iter().enumerate() {
                if (1..=m).any(|w| side[w] != in_side && p.g.has_edge(v, w)) {
                    bigger.add_edge(pos + 1, k + 1).unwrap();
                }
            }
            g = bigger;
            let mut nodes: Vec<WNode> = members.iter().map(|&v| p.nodes[v - 1]).collect();
            nodes.push(WNode::Marker(marker));
            Piece { nodes, g }
        };
        let pa = make(true, ma);
        let pb = make(false, mb);
        (self.add(pa), self.add(pb))
    }

    /// Splits every piece that is neither complete nor a star until all pieces
    /// are prime, complete or stars.
    pub fn refine(&mut self) {
        let mut queue: VecDeque<usize> = self.live().into();
        while let Some(idx) = queue.pop_front() {
            let Some(p) = self.pieces[idx].as_ref() else {
                continue;
            };
            if shape_of(&p.g) != Shape::Prime {
                continue;
            }
            if let Some(side) = find_nontrivial_split(&p.g) {
                let (a, b) = self.split_piece(idx, &side);
                queue.push_back(a);
                queue.push_back(b);
            }
        }
    }

    fn local_kind(p: &Piece, marker: usize) -> Local {
        if p.nodes.len() <= 2 {
            return Local::Small;
        }
        match shape_of(&p.g) {
            Shape::Complete => Local::Complete,
            Shape::Prime => Local::Prime,
            Shape::Star(c) if p.nodes[c - 1] == WNode::Marker(marker) => Local::StarCenter,
            Shape::Star(_) => Local::StarSpoke,
        }
    }

    fn must_merge(a: Local, b: Local) -> bool {
        use Local::*;
        matches!(
            (a, b),
            (Small, _) | (_, Small) | (Complete, Complete) | (StarCenter, StarSpoke) | (StarSpoke, StarCenter)
        )
    }

    /// Merges the pieces joined by marker `x` and its partner.
    pub fn merge(&mut self, x: usize) -> usize {
        let y = x ^ 1;
        let (ia, ib) = (self.home[&x], self.home[&y]);
        let pa = self.take(ia);
        let pb = self.take(ib);
        let (xa, yb) = (pa.pos(WNode::Marker(x)), pb.pos(WNode::Marker(y)));
        let keep_a: Vec<usize> = (1..=pa.nodes.len()).filter(|&v| v != xa).collect();
        let keep_b: Vec<usize> = (1..=pb.nodes.len()).filter(|&v| v != yb).collect();
        let ka = keep_a.len();
        let mut g = SimpleGraph::new(ka + keep_b.len());
        for (i, &u) in keep_a.iter().enumerate() {
            for (j, &v) in keep_a.iter().enumerate().skip(i + 1) {
                if pa.g.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1).unwrap();
                }
            }
        }
        for (i, &u) in keep_b.iter().enumerate() {
            for (j, &v) in keep_b.iter().enumerate().skip(i + 1) {
                if pb.g.has_edge(u, v) {
                    g.add_edge(ka + i + 1, ka + j + 1).unwrap();
                }
            }
        }
        for (i, &u) in keep_a.iter().enumerate() {
            if !pa.g.has_edge(u, xa) {
                continue;
            }
            for (j, &v) in keep_b.iter().enumerate() {
                if pb.g.has_edge(v, yb) {
                    g.add_edge(i + 1, ka + j + 1).unwrap();
                }
            }
        }
        let nodes: Vec<WNode> = keep_a
            .iter()
            .map(|&v| pa.nodes[v - 1])
            .chain(keep_b.iter().map(|&v| pb.nodes[v - 1]))
            .collect();
        self.home.remove(&x);
        self.home.remove(&y);
        self.add(Piece { nodes, g })
    }

    /// Merges every piece with at most two nodes into a neighbor.
    pub fn merge_small(&mut self) {
        'outer: loop {
            for idx in self.live() {
                let p = self.piece(idx);
                if p.nodes.len() <= 2 {
                    if let Some(&x) = p.markers().first() {
                        self.merge(x);
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }

    /// Repeatedly merges pieces whose join is not strong (either side has at
    /// most two nodes, complete-complete, or star center against star spoke),
    /// scanning pieces in ascending index order.
    pub fn reduce(&mut self) {
        'outer: loop {
            for idx in self.live() {
                let p = self.piece(idx);
                for x in p.markers() {
                    let other = self.piece(self.home[&(x ^ 1)]);
                    if Self::must_merge(Self::local_kind(p, x), Self::local_kind(other, x ^ 1)) {
                        self.merge(x);
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }

    fn min_leaf_beyond(&self, marker: usize) -> VertexId {
        let y = marker ^ 1;
        let p = self.piece(self.home[&y]);
        let mut best = usize::MAX;
        for node in &p.nodes {
            match *node {
                WNode::Leaf(v) => best = best.min(v),
                WNode::Marker(z) if z != y => best = best.min(self.min_leaf_beyond(z)),
                WNode::Marker(_) => {}
            }
        }
        best
    }

    /// Converts to a canonically numbered [`Qasst`].
    pub fn into_qasst(self, n: usize) -> Result<Qasst> {
        let live = self.live();
        let mut keyed: Vec<((bool, Vec<VertexId>), usize)> = live
            .iter()
            .map(|&idx| {
                let p = self.piece(idx);
                let leaves: Vec<VertexId> = p
                    .nodes
                    .iter()
                    .filter_map(|n| match n {
                        WNode::Leaf(v) => Some(*v),
                        WNode::Marker(_) => None,
                    })
                    .collect();
                let key = if let Some(&min) = leaves.iter().min() {
                    (true, vec![min])
                } else {
                    let mut mins: Vec<VertexId> =
                        p.markers().iter().map(|&m| self.min_leaf_beyond(m)).collect();
                    mins.sort_unstable();
                    (false, mins)
                };
                (key, idx)
            })
            .collect();
        keyed.sort();
        let mut number: HashMap<usize, usize> = HashMap::new();
        for (k, (_, idx)) in keyed.iter().enumerate() {
            number.insert(*idx, k);
        }
        let mut quotients = Vec::new();
        for (_, idx) in &keyed {
            let p = self.piece(*idx);
            let i = number[idx];
            let label = |node: WNode| match node {
                WNode::Leaf(v) => Node::Leaf(v),
                WNode::Marker(m) => Node::Split(SplitNode::new(i, number[&self.home[&(m ^ 1)]])),
            };
            let nodes: Vec<Node> = p.nodes.iter().map(|&x| label(x)).collect();
            let edges: Vec<(Node, Node)> = p
                .g
                .edges()
                .into_iter()
                .map(|(a, b)| (nodes[a - 1], nodes[b - 1]))
                .collect();
            quotients.push(QuotientGraph::new(nodes, &edges)?);
        }
        Qasst::new(n, quotients)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, complete_multipartite, cycle, path, star};

    #[test]
    fn k22_split_is_strong() {
        let g = complete_bipartite(2, 2);
        let s = Split::from_side(4, &[1, 2]).unwrap();
        assert!(is_split(&g, &s).unwrap());
        assert!(is_strong(&g, &s).unwrap());
    }

    #[test]
    fn c5_has_no_nontrivial_split() {
        let g = cycle(5);
        for mask in 1u32..31 {
            let side: Vec<usize> = (1..=5).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let s = Split::from_side(5, &side).unwrap();
            assert_eq!(is_split(&g, &s).unwrap(), s.is_trivial(), "{side:?}");
        }
    }

    #[test]
    fn trivial_splits_are_strong() {
        let g = complete(4);
        assert!(is_strong(&g, &Split::from_side(4, &[2]).unwrap()).unwrap());
    }

    #[test]
    fn clique_splits_cross() {
        let g = complete(4);
        let s = Split::from_side(4, &[1, 2]).unwrap();
        assert!(is_split(&g, &s).unwrap());
        assert!(!is_strong(&g, &s).unwrap());
    }

    #[test]
    fn malformed_split_rejected() {
        let g = complete(3);
        let s = Split::new(vec![1], vec![1, 2]).unwrap();
        assert!(is_split(&g, &s).is_err());
        assert!(Split::new(vec![], vec![1]).is_err());
    }

    #[test]
    fn k22_qasst_is_sc_sc() {
        let q = compute_qasst(&complete_bipartite(2, 2)).unwrap();
        assert_eq!(q.quotients().len(), 2);
        let (s, t) = q.tree_edges()[0];
        assert_eq!(q.kind_at(s).unwrap(), QuotientKind::StarCenter);
        assert_eq!(q.kind_at(t).unwrap(), QuotientKind::StarCenter);
        assert_eq!(q.quotient(0).leaf_nodes(), vec![1, 2]);
    }

    #[test]
    fn k2222_qasst_shape() {
        let q = compute_qasst(&complete_multipartite(&[2, 2, 2, 2]).unwrap()).unwrap();
        assert_eq!(q.quotients().len(), 5);
        let q0 = q.quotient(0);
        assert!(q0.leaf_nodes().is_empty());
        assert_eq!(q0.split_nodes().len(), 4);
        assert_eq!(classify_quotient(q0, None).unwrap(), QuotientKind::Complete);
        for i in 1..=4 {
            assert_eq!(q.quotient(i).leaf_nodes(), vec![2 * i - 1, 2 * i]);
            assert_eq!(
                q.kind_at(SplitNode::new(i, 0)).unwrap(),
                QuotientKind::StarCenter
            );
        }
    }

    #[test]
    fn c5_single_prime_quotient() {
        let q = compute_qasst(&cycle(5)).unwrap();
        assert_eq!(q.quotients().len(), 1);
        assert_eq!(classify_quotient(q.quotient(0), None).unwrap(), QuotientKind::Prime);
        assert!(!is_distance_hereditary(&cycle(5)).unwrap());
    }

    #[test]
    fn degenerate_inputs() {
        for g in [SimpleGraph::new(1), path(2)] {
            let q = compute_qasst(&g).unwrap();
            assert_eq!(q.quotients().len(), 1);
            assert_eq!(reconstruct(&q).unwrap(), g);
        }
        assert_eq!(compute_qasst(&SimpleGraph::new(2)), Err(Error::NotConnected));
    }

    #[test]
    fn clique_and_star_stay_whole() {
        for g in [complete(6), star(5)] {
            let q = compute_qasst(&g).unwrap();
            assert_eq!(q.quotients().len(), 1);
        }
    }

    #[test]
    fn paths_decompose_into_stars() {
        let q = compute_qasst(&path(6)).unwrap();
        assert_eq!(q.quotients().len(), 4);
        assert_eq!(reconstruct(&q).unwrap(), path(6));
        for (s, t) in q.tree_edges() {
            assert_eq!(
                join_validity(&q.kind_at(*s).unwrap(), &q.kind_at(*t).unwrap()),
                JoinValidity::Valid
            );
        }
    }

    #[test]
    fn invalid_cc_join_reconstructs_k4() {
        let s01 = Node::Split(SplitNode::new(0, 1));
        let s10 = Node::Split(SplitNode::new(1, 0));
        let (l1, l2, l3, l4) = (Node::Leaf(1), Node::Leaf(2), Node::Leaf(3), Node::Leaf(4));
        let q0 = QuotientGraph::new(vec![l1, l2, s01], &[(l1, l2), (l1, s01), (l2, s01)]).unwrap();
        let q1 = QuotientGraph::new(vec![l3, l4, s10], &[(l3, l4), (l3, s10), (l4, s10)]).unwrap();
        let q = Qasst::new(4, vec![q0, q1]).unwrap();
        assert_eq!(reconstruct(&q).unwrap(), complete(4));
        assert_eq!(
            join_validity(&QuotientKind::Complete, &QuotientKind::Complete),
            JoinValidity::Invalid
        );
    }

    #[test]
    fn classify_star_quotients() {
        let c = Node::Split(SplitNode::new(0, 1));
        let (a, b) = (Node::Leaf(1), Node::Leaf(2));
        let q = QuotientGraph::new(vec![a, b, c], &[(c, a), (c, b)]).unwrap();
        assert_eq!(classify_quotient(&q, Some(&c)).unwrap(), QuotientKind::StarCenter);
        assert_eq!(
            classify_quotient(&q, Some(&a)).unwrap(),
            QuotientKind::StarSpoke { center: c.into() }
        );
        assert!(classify_quotient(&q, Some(&Node::Leaf(9))).is_err());
    }

    #[test]
    fn join_rules() {
        use QuotientKind::*;
        let ss = StarSpoke {
            center: NodeRef::Leaf(1),
        };
        assert_eq!(join_validity(&StarCenter, &StarCenter), JoinValidity::Valid);
        assert_eq!(join_validity(&ss, &StarCenter), JoinValidity::Invalid);
        assert_eq!(join_validity(&StarCenter, &ss), JoinValidity::Invalid);
        assert_eq!(join_validity(&ss, &ss), JoinValidity::Valid);
        assert_eq!(join_validity(&Prime, &Complete), JoinValidity::Valid);
    }

    #[test]
    fn json_and_dot() {
        let q = compute_qasst(&complete_bipartite(2, 2)).unwrap();
        let s = q.to_json();
        assert_eq!(Qasst::from_json(&s).unwrap(), q);
        let dot = q.to_dot();
        assert!(dot.contains("shape=box") && dot.contains("shape=circle"));
        assert!(Qasst::from_json(r#"{"quotients":[],"tree_edges":[]}"#).is_err());
    }

    #[test]
    fn dh_oracle_examples() {
        assert!(dh_definition_oracle(&cycle(4)).unwrap());
        assert!(!dh_definition_oracle(&cycle(5)).unwrap());
        assert!(dh_definition_oracle(&path(7)).unwrap());
        assert!(dh_definition_oracle(&SimpleGraph::new(11)).is_err());
    }

    #[test]
    fn strong_splits_of_path() {
        let q = compute_qasst(&path(5)).unwrap();
        let splits = q.strong_splits();
        assert_eq!(splits.len(), 2);
        for s in &splits {
            assert!(is_strong(&path(5), s).unwrap());
        }
    }
}
