//! Dynamic QASST maintenance: local complements, induced subgraphs and
//! one-vertex extensions, all without rebuilding the decomposition from the
//! graph.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};
use crate::split::{reconstruct, Node, Qasst, QuotientGraph, Shape, SplitNode, WNode, Work};

/// Applies `c_v` to a QASST. The quotient holding `v` is complemented at `v`;
/// every split-node in that neighborhood passes the complement on to its
/// partner, recursively.
pub fn lc_propagate(q: &Qasst, v: VertexId) -> Result<Qasst> {
    let start = q.quotient_of_leaf(v).ok_or(Error::InvalidVertex {
        vertex: v,
        n: q.n(),
    })?;
    let mut quotients: Vec<QuotientGraph> = q.quotients().to_vec();
    let mut visited = HashSet::new();
    let mut stack = vec![(start, Node::Leaf(v))];
    while let Some((i, node)) = stack.pop() {
        if !visited.insert(i) {
            continue;
        }
        let original = q.quotient(i);
        for w in original.neighbors(&node)? {
            if let Node::Split(s) = w {
                stack.push((s.j, Node::Split(s.partner())));
            }
        }
        quotients[i] = original.local_complement(&node)?;
    }
    Qasst::new(q.n(), quotients)
}

/// QASST of the subgraph induced by `keep`, derived from `q`.
///
/// Excluded leaf-nodes are deleted, quotients left with at most two nodes are
/// merged into a neighbor, any quotient that is no longer prime-free is
/// re-split, and finally tree edges whose join is complete-complete or
/// star-center/star-spoke are merged in ascending quotient order. Leaves are
/// relabeled to `1..=|keep|` in ascending order, matching
/// [`SimpleGraph::induced_subgraph`].
pub fn induced_qasst(q: &Qasst, keep: &[VertexId]) -> Result<Qasst> {
    let mut kept: Vec<VertexId> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() {
        return Err(Error::NotConnected);
    }
    if let Some(&v) = kept.iter().find(|&&v| v == 0 || v > q.n()) {
        return Err(Error::InvalidVertex { vertex: v, n: q.n() });
    }
    let g = reconstruct(q)?;
    if !g.induced_subgraph(&kept)?.graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut in_keep = vec![false; q.n() + 1];
    for &v in &kept {
        in_keep[v] = true;
    }
    let mut work = Work::from_qasst(q);
    work.delete_leaves(&|v| !in_keep[v]);
    work.merge_small();
    work.refine();
    work.reduce();
    let mut rank = vec![0; q.n() + 1];
    for (r, &v) in kept.iter().enumerate() {
        rank[v] = r + 1;
    }
    for piece in work.pieces.iter_mut().flatten() {
        for node in piece.nodes.iter_mut() {
            if let WNode::Leaf(v) = node {
                *v = rank[*v];
            }
        }
    }
    work.into_qasst(kept.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    /// New vertex adjacent to the anchor only.
    Pendant,
    /// New vertex with the anchor's neighborhood, not adjacent to the anchor.
    FalseTwin,
    /// New vertex adjacent to the anchor and its neighborhood.
    TrueTwin,
}

impl FromStr for ExtensionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "pendant" => Ok(ExtensionKind::Pendant),
            "false_twin" | "false" => Ok(ExtensionKind::FalseTwin),
            "true_twin" | "true" => Ok(ExtensionKind::TrueTwin),
            other => Err(Error::InvalidSpec(format!("unknown extension kind `{other}`"))),
        }
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionKind::Pendant => "pendant",
            ExtensionKind::FalseTwin => "false_twin",
            ExtensionKind::TrueTwin => "true_twin",
        })
    }
}

/// One-vertex extension step: add a new vertex related to `anchor` by `kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Extension {
    pub kind: ExtensionKind,
    pub anchor: VertexId,
}

/// Role of the anchor's quotient, as seen from the anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorShape {
    /// Star whose center is the anchor.
    StarCenter,
    /// Star in which the anchor is a spoke.
    StarSpoke,
    Complete,
    Prime,
}

/// Which of the twelve evolution rules an extension used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtensionCase {
    pub shape: AnchorShape,
    pub kind: ExtensionKind,
}

impl ExtensionCase {
    /// Whether the quotient grows in place rather than splitting off a
    /// three-node quotient.
    pub fn grows_in_place(&self) -> bool {
        use AnchorShape::*;
        use ExtensionKind::*;
        matches!(
            (self.shape, self.kind),
            (StarCenter, Pendant) | (StarSpoke, FalseTwin) | (Complete, TrueTwin)
        )
    }

    pub fn all() -> Vec<ExtensionCase> {
        let mut out = Vec::new();
        for shape in [
            AnchorShape::StarCenter,
            AnchorShape::StarSpoke,
            AnchorShape::Complete,
            AnchorShape::Prime,
        ] {
            for kind in [
                ExtensionKind::Pendant,
                ExtensionKind::FalseTwin,
                ExtensionKind::TrueTwin,
            ] {
                out.push(ExtensionCase { shape, kind });
            }
        }
        out
    }
}

/// Graph-level one-vertex extension; the new vertex is `n + 1`.
pub fn extend_graph(g: &SimpleGraph, e: Extension) -> Result<SimpleGraph> {
    let nbrs = g.neighborhood(e.anchor)?;
    let p = g.n() + 1;
    let mut h = SimpleGraph::new(p);
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    match e.kind {
        ExtensionKind::Pendant => h.add_edge(e.anchor, p)?,
        ExtensionKind::FalseTwin => {
            for w in nbrs {
                h.add_edge(w, p)?;
            }
        }
        ExtensionKind::TrueTwin => {
            h.add_edge(e.anchor, p)?;
            for w in nbrs {
                h.add_edge(w, p)?;
            }
        }
    }
    Ok(h)
}

/// QASST of the one-vertex graph.
pub fn single_vertex_qasst() -> Qasst {
    let q = QuotientGraph::new(vec![Node::Leaf(1)], &[]).unwrap();
    Qasst::new(1, vec![q]).unwrap()
}

/// Applies a one-vertex extension with new vertex `p = n + 1`.
pub fn extend(q: &Qasst, e: Extension, p: VertexId) -> Result<Qasst> {
    extend_traced(q, e, p).map(|(q, _)| q)
}

/// Like [`extend`], also reporting which evolution rule applied.
pub fn extend_traced(q: &Qasst, e: Extension, p: VertexId) -> Result<(Qasst, ExtensionCase)> {
    if p != q.n() + 1 {
        return Err(Error::InvalidVertex {
            vertex: p,
            n: q.n() + 1,
        });
    }
    let i = q.quotient_of_leaf(e.anchor).ok_or(Error::InvalidVertex {
        vertex: e.anchor,
        n: q.n(),
    })?;
    let quotient = q.quotient(i);
    let anchor = Node::Leaf(e.anchor);
    let new = Node::Leaf(p);
    let shape = match (quotient.len(), e.kind) {
        (1, ExtensionKind::FalseTwin) => return Err(Error::NotConnected),
        (1 | 2, ExtensionKind::Pendant) => AnchorShape::StarCenter,
        (2, ExtensionKind::FalseTwin) => AnchorShape::StarSpoke,
        (1 | 2, ExtensionKind::TrueTwin) => AnchorShape::Complete,
        _ => match quotient.shape() {
            Shape::Complete => AnchorShape::Complete,
            Shape::Star(c) if quotient.node_at(c) == anchor => AnchorShape::StarCenter,
            Shape::Star(_) => AnchorShape::StarSpoke,
            Shape::Prime => AnchorShape::Prime,
        },
    };
    let case = ExtensionCase {
        shape,
        kind: e.kind,
    };
    let nbrs = quotient.neighbors(&anchor)?;
    let mut quotients = q.quotients().to_vec();

    if case.grows_in_place() {
        let mut nodes = quotient.nodes().to_vec();
        nodes.push(new);
        let mut edges = quotient.edges();
        match e.kind {
            ExtensionKind::Pendant => edges.push((anchor, new)),
            ExtensionKind::FalseTwin => edges.extend(nbrs.iter().map(|&w| (w, new))),
            ExtensionKind::TrueTwin => {
                edges.push((anchor, new));
                edges.extend(nbrs.iter().map(|&w| (w, new)));
            }
        }
        quotients[i] = QuotientGraph::new(nodes, &edges)?;
    } else {
        // The anchor moves to a new three-node quotient k, replaced in
        // quotient i by the split-node s_i^k.
        let k = quotients.len();
        let s = Node::Split(SplitNode::new(i, k));
        let s_back = Node::Split(SplitNode::new(k, i));
        quotients[i] = quotient.map_nodes(|n| if n == anchor { s } else { n })?;
        let edges = match e.kind {
            ExtensionKind::Pendant => vec![(anchor, new), (anchor, s_back)],
            ExtensionKind::FalseTwin => vec![(s_back, anchor), (s_back, new)],
            ExtensionKind::TrueTwin => vec![(anchor, new), (anchor, s_back), (new, s_back)],
        };
        quotients.push(QuotientGraph::new(vec![anchor, new, s_back], &edges)?);
    }
    let raw = Qasst::new(p, quotients)?;
    Ok((raw.relabel_leaves(p, |v| v)?, case))
}

/// A reproducible random distance-hereditary graph on `n` vertices together
/// with the extensions that built it from a single vertex.
pub fn random_dh(n: usize, seed: u64) -> Result<(SimpleGraph, Vec<Extension>)> {
    if n == 0 {
        return Err(Error::InvalidSpec("random_dh needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::new(1);
    let mut trace = Vec::with_capacity(n - 1);
    for size in 1..n {
        let anchor = rng.gen_range(1..=size);
        let kind = if size == 1 {
            // a false twin of an isolated vertex would disconnect the graph
            [ExtensionKind::Pendant, ExtensionKind::TrueTwin][rng.gen_range(0..2)]
        } else {
            [
                ExtensionKind::Pendant,
                ExtensionKind::FalseTwin,
                ExtensionKind::TrueTwin,
            ][rng.gen_range(0..3)]
        };
        let e = Extension { kind, anchor };
        g = extend_graph(&g, e)?;
        trace.push(e);
    }
    Ok((g, trace))
}

/// Replays an extension trace from the single-vertex QASST.
pub fn replay(trace: &[Extension]) -> Result<Qasst> {
    let mut q = single_vertex_qasst();
    for &e in trace {
        q = extend(&q, e, q.n() + 1)?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite, cycle, star};
    use crate::split::{classify_quotient, compute_qasst, QuotientKind};

    #[test]
    fn propagation_on_tripartite() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let q = compute_qasst(&g).unwrap();
        let r = lc_propagate(&q, 1).unwrap();
        assert_eq!(reconstruct(&r).unwrap(), g.local_complement(1).unwrap());
        // leaf 1 is a spoke of Q1, so Q1 is fixed; the complement crosses into
        // Q0 and from there into Q2 and Q3
        assert_eq!(q.quotient(1), r.quotient(1));
        for i in [0, 2, 3] {
            assert_ne!(q.quotient(i), r.quotient(i), "quotient {i}");
        }
    }

    #[test]
    fn propagation_stays_local_without_split_neighbors() {
        // vertex 3 of P4 (1-2-3-4 after relabel) ... use a star with an extra pendant
        let q = compute_qasst(&crate::families::path(5)).unwrap();
        let r = lc_propagate(&q, 1).unwrap();
        assert_eq!(r, q);
    }

    #[test]
    fn induced_keep_all_is_identity() {
        let q = compute_qasst(&complete_multipartite(&[2, 3, 2]).unwrap()).unwrap();
        assert_eq!(induced_qasst(&q, &(1..=7).collect::<Vec<_>>()).unwrap(), q);
    }

    #[test]
    fn induced_merges_singleton_quotient() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let q = compute_qasst(&g).unwrap();
        let keep = [1, 3, 4, 5, 6];
        let r = induced_qasst(&q, &keep).unwrap();
        let direct = compute_qasst(&g.induced_subgraph(&keep).unwrap().graph).unwrap();
        assert_eq!(r, direct);
        assert_eq!(r.quotients().len(), 3);
    }

    #[test]
    fn induced_rejects_disconnected() {
        let q = compute_qasst(&star(3)).unwrap();
        assert_eq!(induced_qasst(&q, &[2, 3]), Err(Error::NotConnected));
    }

    #[test]
    fn induced_resplits_prime_quotients() {
        let g = cycle(6);
        let q = compute_qasst(&g).unwrap();
        assert_eq!(q.quotients().len(), 1);
        let r = induced_qasst(&q, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(r, compute_qasst(&crate::families::path(5)).unwrap());
    }

    #[test]
    fn extension_rules_on_small_quotients() {
        let star_q = compute_qasst(&star(3)).unwrap();
        let (r, case) = extend_traced(
            &star_q,
            Extension {
                kind: ExtensionKind::Pendant,
                anchor: 1,
            },
            5,
        )
        .unwrap();
        assert_eq!(case.shape, AnchorShape::StarCenter);
        assert_eq!(r.quotients().len(), 1);
        assert_eq!(reconstruct(&r).unwrap(), star(4));

        let k = compute_qasst(&complete(4)).unwrap();
        let (r, case) = extend_traced(
            &k,
            Extension {
                kind: ExtensionKind::TrueTwin,
                anchor: 2,
            },
            5,
        )
        .unwrap();
        assert!(case.grows_in_place());
        assert_eq!(reconstruct(&r).unwrap(), complete(5));

        let c5 = compute_qasst(&cycle(5)).unwrap();
        for kind in [
            ExtensionKind::Pendant,
            ExtensionKind::FalseTwin,
            ExtensionKind::TrueTwin,
        ] {
            let e = Extension { kind, anchor: 3 };
            let (r, case) = extend_traced(&c5, e, 6).unwrap();
            assert_eq!(case.shape, AnchorShape::Prime);
            assert_eq!(r.quotients().len(), 2);
            assert_eq!(reconstruct(&r).unwrap(), extend_graph(&cycle(5), e).unwrap());
            let small = r.quotients().iter().find(|x| x.len() == 3).unwrap();
            let expected = match kind {
                ExtensionKind::TrueTwin => QuotientKind::Complete,
                _ => QuotientKind::StarCenter,
            };
            let at = match kind {
                ExtensionKind::Pendant => Node::Leaf(3),
                _ => Node::Split(small.split_nodes()[0]),
            };
            assert_eq!(classify_quotient(small, Some(&at)).unwrap(), expected);
        }
    }

    #[test]
    fn false_twin_of_lone_vertex_is_rejected() {
        let e = Extension {
            kind: ExtensionKind::FalseTwin,
            anchor: 1,
        };
        assert_eq!(extend(&single_vertex_qasst(), e, 2), Err(Error::NotConnected));
        assert!(extend(&single_vertex_qasst(), e, 3).is_err());
    }

    #[test]
    fn random_dh_replays() {
        let (g, trace) = random_dh(9, 7).unwrap();
        assert_eq!(trace.len(), 8);
        assert_eq!(replay(&trace).unwrap(), compute_qasst(&g).unwrap());
        assert_eq!(random_dh(9, 7).unwrap().0, g);
        assert_eq!(random_dh(1, 0).unwrap().0.n(), 1);
    }
}
