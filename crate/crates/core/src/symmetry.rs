//! Symmetry classes of the complete k-partite and clique-star LC orbits.
//!
//! Both orbits share one QASST shape: a central quotient `Q0` on the
//! split-nodes `s_0^1..s_0^k`, and for each block `i` a quotient `Q_i` on the
//! block's leaves plus `s_i^0`. A member is pinned down by the kinds of these
//! quotients and by the star center chosen in each star-spoke `Q_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counting::{Assignment, BipartiteRow, CaseId, CentralKind, PartKind};
use crate::error::{Error, Result};
use crate::families::{self, OrbitTag};
use crate::graph::{LcSequence, SimpleGraph, VertexId};
use crate::split::{
    classify_quotient, compute_qasst, reconstruct, Node, Qasst, QuotientGraph, QuotientKind,
    SplitNode,
};

/// One member class: a case, the star-spoke blocks `I`, and a center per
/// block of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryCase {
    pub tag: OrbitTag,
    pub case: CaseId,
    /// Star-spoke block indices, ascending, 1-based.
    pub spokes: Vec<usize>,
    /// Star center (a vertex of the block) for each entry of `spokes`.
    pub centers: Vec<VertexId>,
}

impl SymmetryCase {
    /// A case with every star center at the first vertex of its block.
    pub fn new(tag: OrbitTag, case: CaseId, mut spokes: Vec<usize>, ns: &[usize]) -> Result<Self> {
        spokes.sort_unstable();
        let centers = spokes
            .iter()
            .map(|&i| {
                if i == 0 || i > ns.len() {
                    Err(Error::InvalidCase(format!("block {i} outside 1..={}", ns.len())))
                } else {
                    Ok(*families::block(ns, i).start())
                }
            })
            .collect::<Result<_>>()?;
        let c = SymmetryCase {
            tag,
            case,
            spokes,
            centers,
        };
        c.validate(ns)?;
        Ok(c)
    }

    /// Replaces the star centers; `centers[x]` belongs to `spokes[x]`.
    pub fn with_centers(mut self, centers: Vec<VertexId>, ns: &[usize]) -> Result<Self> {
        self.centers = centers;
        self.validate(ns)?;
        Ok(self)
    }

    pub fn validate(&self, ns: &[usize]) -> Result<()> {
        let k = ns.len();
        if k < 3 || ns.iter().any(|&n| n < 2) {
            return Err(Error::InvalidCase(format!("need k >= 3 blocks of size >= 2, got {ns:?}")));
        }
        if self.spokes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCase("spoke indices must be strictly ascending".into()));
        }
        if self.spokes.len() != self.centers.len() {
            return Err(Error::InvalidCase("one center per spoke block".into()));
        }
        for (&i, &c) in self.spokes.iter().zip(&self.centers) {
            if i == 0 || i > k {
                return Err(Error::InvalidCase(format!("block {i} outside 1..={k}")));
            }
            if !families::block(ns, i).contains(&c) {
                return Err(Error::InvalidCase(format!("center {c} is not in block {i}")));
            }
        }
        if let Some(j) = self.case.pointer() {
            if j == 0 || j > k {
                return Err(Error::InvalidCase(format!("pointer {j} outside 1..={k}")));
            }
            if self.spokes.contains(&j) {
                return Err(Error::InvalidCase(format!("pointer {j} cannot be star-spoke")));
            }
        }
        let want_odd = case_parity_odd(self.tag, self.case);
        if (self.spokes.len() % 2 == 1) != want_odd {
            return Err(Error::InvalidCase(format!(
                "case {} of the {} orbit needs an {} number of star-spoke blocks",
                self.case,
                self.tag,
                if want_odd { "odd" } else { "even" }
            )));
        }
        Ok(())
    }

    /// Quotient kinds described by the case.
    pub fn assignment(&self, k: usize) -> Assignment {
        let (central, rest, pointer_kind) = match self.case {
            CaseId::One => (CentralKind::Complete, PartKind::Sc, None),
            CaseId::Two(j) => (CentralKind::StarToward(j), PartKind::C, Some((j, PartKind::Sc))),
            CaseId::Three(j) => (CentralKind::StarToward(j), PartKind::C, Some((j, PartKind::C))),
        };
        let mut parts = vec![rest; k];
        for &i in &self.spokes {
            parts[i - 1] = PartKind::Ss;
        }
        if let Some((j, kind)) = pointer_kind {
            parts[j - 1] = kind;
        }
        Assignment { central, parts }
    }

    fn centers_of(&self, i: usize) -> VertexId {
        let p = self.spokes.iter().position(|&x| x == i).expect("spoke block");
        self.centers[p]
    }

    /// Number of labeled members sharing this case and spoke set.
    pub fn multiplicity(&self, ns: &[usize]) -> u128 {
        self.spokes.iter().map(|&i| ns[i - 1] as u128).product()
    }
}

impl fmt::Display for SymmetryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} case {} I={{{}}} centers=[{}]",
            self.tag,
            self.case,
            list(&self.spokes),
            list(&self.centers)
        )
    }
}

/// Whether the case needs an odd number of star-spoke blocks.
fn case_parity_odd(tag: OrbitTag, case: CaseId) -> bool {
    let three = matches!(case, CaseId::Three(_));
    three == (tag == OrbitTag::KPartite)
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// Every (case, spoke set) class of the orbit with its multiplicity
/// `∏_{i∈I} n_i`, ordered by case and then lexicographically by `I`.
pub fn enumerate_cases(tag: OrbitTag, ns: &[usize]) -> Result<Vec<(SymmetryCase, u128)>> {
    let k = ns.len();
    let mut cases = vec![CaseId::One];
    cases.extend((1..=k).map(CaseId::Two));
    cases.extend((1..=k).map(CaseId::Three));
    let mut out = Vec::new();
    for case in cases {
        let pool: Vec<usize> = (1..=k).filter(|&i| Some(i) != case.pointer()).collect();
        let odd = case_parity_odd(tag, case);
        for spokes in subsets(&pool) {
            if (spokes.len() % 2 == 1) == odd {
                let c = SymmetryCase::new(tag, case, spokes, ns)?;
                let m = c.multiplicity(ns);
                out.push((c, m));
            }
        }
    }
    Ok(out)
}

/// Every member of the orbit, one case per choice of star centers.
pub fn enumerate_members(tag: OrbitTag, ns: &[usize]) -> Result<Vec<SymmetryCase>> {
    let mut out = Vec::new();
    for (base, _) in enumerate_cases(tag, ns)? {
        let mut choices: Vec<Vec<VertexId>> = vec![Vec::new()];
        for &i in &base.spokes {
            choices = choices
                .into_iter()
                .flat_map(|prefix| {
                    families::block(ns, i).map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        for centers in choices {
            out.push(base.clone().with_centers(centers, ns)?);
        }
    }
    Ok(out)
}

/// The six rows of the complete bipartite orbit with their member counts.
pub fn enumerate_bipartite(n: usize, m: usize) -> Result<Vec<(BipartiteRow, u128)>> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSpec(format!("need n, m >= 2, got ({n}, {m})")));
    }
    Ok(BipartiteRow::all()
        .into_iter()
        .map(|r| (r, r.count::<i128>(n, m) as u128))
        .collect())
}

/// Quotient on `leaves` plus the split-node `s`, shaped by `kind`; a
/// star-spoke quotient is centered at `center`.
fn block_quotient(leaves: &[VertexId], s: SplitNode, kind: PartKind, center: VertexId) -> Result<QuotientGraph> {
    let split = Node::Split(s);
    let mut nodes: Vec<Node> = leaves.iter().map(|&v| Node::Leaf(v)).collect();
    nodes.push(split);
    let hub = match kind {
        PartKind::C => None,
        PartKind::Sc => Some(split),
        PartKind::Ss => Some(Node::Leaf(center)),
    };
    let mut edges = Vec::new();
    for (a, &x) in nodes.iter().enumerate() {
        for &y in &nodes[a + 1..] {
            if hub.is_none() || hub == Some(x) || hub == Some(y) {
                edges.push((x, y));
            }
        }
    }
    QuotientGraph::new(nodes, &edges)
}

/// QASST of the member described by `case`.
pub fn case_qasst(case: &SymmetryCase, ns: &[usize]) -> Result<Qasst> {
    case.validate(ns)?;
    let k = ns.len();
    let a = case.assignment(k);
    let hubs: Vec<Node> = (1..=k).map(|i| Node::Split(SplitNode::new(0, i))).collect();
    let mut central_edges = Vec::new();
    for x in 0..k {
        for y in x + 1..k {
            let linked = match a.central {
                CentralKind::Complete => true,
                CentralKind::StarToward(j) => x + 1 == j || y + 1 == j,
            };
            if linked {
                central_edges.push((hubs[x], hubs[y]));
            }
        }
    }
    let mut quotients = vec![QuotientGraph::new(hubs, &central_edges)?];
    for i in 1..=k {
        let leaves: Vec<VertexId> = families::block(ns, i).collect();
        let center = case
            .spokes
            .iter()
            .position(|&x| x == i)
            .map(|p| case.centers[p])
            .unwrap_or(leaves[0]);
        quotients.push(block_quotient(&leaves, SplitNode::new(i, 0), a.parts[i - 1], center)?);
    }
    Qasst::new(ns.iter().sum(), quotients)
}

/// The labeled graph of the member described by `case`.
pub fn realize(case: &SymmetryCase, ns: &[usize]) -> Result<SimpleGraph> {
    reconstruct(&case_qasst(case, ns)?)
}

/// The labeled graph of a bipartite row; `centers` gives the star centers of
/// star-spoke quotients (vertices of the `n` block, then of the `m` block).
pub fn realize_bipartite(row: BipartiteRow, n: usize, m: usize, centers: (VertexId, VertexId)) -> Result<SimpleGraph> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSpec(format!("need n, m >= 2, got ({n}, {m})")));
    }
    let left: Vec<VertexId> = (1..=n).collect();
    let right: Vec<VertexId> = (n + 1..=n + m).collect();
    if !left.contains(&centers.0) || !right.contains(&centers.1) {
        return Err(Error::InvalidCase("star centers must lie in their blocks".into()));
    }
    let q1 = block_quotient(&left, SplitNode::new(0, 1), row.q1, centers.0)?;
    let q2 = block_quotient(&right, SplitNode::new(1, 0), row.q2, centers.1)?;
    reconstruct(&Qasst::new(n + m, vec![q1, q2])?)
}

/// Reads the row and star centers of a member of the `K_{n,m}` orbit.
/// Centers are reported for star-spoke quotients only, left block first.
pub fn classify_bipartite_member(g: &SimpleGraph, n: usize, m: usize) -> Result<(BipartiteRow, Vec<VertexId>)> {
    let mismatch = || Error::InvalidCase("graph does not have the bipartite split structure".into());
    if n < 2 || m < 2 || g.n() != n + m {
        return Err(mismatch());
    }
    let q = compute_qasst(g)?;
    if q.quotients().len() != 2 {
        return Err(mismatch());
    }
    let left = q.quotient_of_leaf(1).ok_or_else(mismatch)?;
    if q.quotient(left).leaf_nodes() != (1..=n).collect::<Vec<_>>() {
        return Err(mismatch());
    }
    let mut kinds = Vec::new();
    let mut centers = Vec::new();
    for i in [left, 1 - left] {
        let s = q.quotient(i).split_nodes()[0];
        kinds.push(match q.kind_at(s)? {
            QuotientKind::Complete => PartKind::C,
            QuotientKind::StarCenter => PartKind::Sc,
            QuotientKind::StarSpoke { center } => {
                match Node::from(center) {
                    Node::Leaf(v) => centers.push(v),
                    Node::Split(_) => return Err(mismatch()),
                }
                PartKind::Ss
            }
            QuotientKind::Prime => return Err(mismatch()),
        });
    }
    Ok((BipartiteRow { q1: kinds[0], q2: kinds[1] }, centers))
}

/// Base graph of the orbit: `K_{n1..nk}` or the clique-star `CS^r`.
pub fn base_graph(tag: OrbitTag, ns: &[usize], r: usize) -> Result<SimpleGraph> {
    match tag {
        OrbitTag::KPartite => families::complete_multipartite(ns),
        OrbitTag::CliqueStar => families::clique_star(ns, r),
    }
}

/// Edge pivot `c_a c_b c_a` when `a != b` are adjacent in `g`, otherwise the
/// identity.
pub fn lenient_pivot(g: &SimpleGraph, a: VertexId, b: VertexId) -> LcSequence {
    if a != b && g.has_edge(a, b) {
        LcSequence::new(vec![a, b, a])
    } else {
        LcSequence::identity()
    }
}

/// A sequence taking the base graph (`K_{n1..nk}`, or `CS^r` for the
/// clique-star orbit) to the member described by `case`.
///
/// Case 1 of the k-partite orbit pivots consecutive pairs of `I` at their
/// centers. The other cases first move `Q0`'s star toward block `j` (one
/// local complement on `K`, a pivot on `CS^r`), then complement each center.
/// Case 1 of the clique-star orbit complements the centers of `I \ {r}` and
/// finishes on block `r`.
pub fn synthesize_transformation(case: &SymmetryCase, ns: &[usize], r: usize) -> Result<LcSequence> {
    case.validate(ns)?;
    if r == 0 || r > ns.len() {
        return Err(Error::InvalidCase(format!("base center {r} outside 1..={}", ns.len())));
    }
    let first = |i: usize| *families::block(ns, i).start();
    let center_of = |i: usize| {
        case.spokes
            .iter()
            .position(|&x| x == i)
            .map(|p| case.centers[p])
            .unwrap_or_else(|| first(i))
    };
    let mut g = base_graph(case.tag, ns, r)?;
    let mut steps: Vec<VertexId> = Vec::new();
    let mut push = |g: &mut SimpleGraph, seq: &LcSequence| -> Result<()> {
        *g = g.apply_sequence(seq)?;
        steps.extend(seq.steps.iter().copied());
        Ok(())
    };
    match (case.tag, case.case) {
        (OrbitTag::KPartite, CaseId::One) => {
            for pair in case.spokes.chunks(2) {
                let p = lenient_pivot(&g, case.centers_of(pair[0]), case.centers_of(pair[1]));
                push(&mut g, &p)?;
            }
        }
        (OrbitTag::KPartite, CaseId::Two(j) | CaseId::Three(j)) => {
            push(&mut g, &LcSequence::new(vec![first(j)]))?;
            push(&mut g, &LcSequence::new(case.centers.clone()))?;
        }
        (OrbitTag::CliqueStar, CaseId::One) => {
            let others: Vec<VertexId> = case
                .spokes
                .iter()
                .zip(&case.centers)
                .filter(|(&i, _)| i != r)
                .map(|(_, &c)| c)
                .collect();
            push(&mut g, &LcSequence::new(others))?;
            push(&mut g, &LcSequence::new(vec![center_of(r)]))?;
        }
        (OrbitTag::CliqueStar, CaseId::Two(j) | CaseId::Three(j)) => {
            let p = lenient_pivot(&g, first(r), first(j));
            push(&mut g, &p)?;
            push(&mut g, &LcSequence::new(case.centers.clone()))?;
        }
    }
    Ok(LcSequence::new(steps))
}

/// Where a vertex sits in the QASST of a member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    CenterOfSs(usize),
    SpokeOfSs(usize),
    NodeOfSc(usize),
    NodeOfC(usize),
}

impl VertexRole {
    pub fn block(self) -> usize {
        match self {
            VertexRole::CenterOfSs(i)
            | VertexRole::SpokeOfSs(i)
            | VertexRole::NodeOfSc(i)
            | VertexRole::NodeOfC(i) => i,
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::CenterOfSs(i) => write!(f, "center of ss Q{i}"),
            VertexRole::SpokeOfSs(i) => write!(f, "spoke of ss Q{i}"),
            VertexRole::NodeOfSc(i) => write!(f, "node of sc Q{i}"),
            VertexRole::NodeOfC(i) => write!(f, "node of c Q{i}"),
        }
    }
}

/// Role of vertex `v` in the member described by `case`.
pub fn role_of(case: &SymmetryCase, ns: &[usize], v: VertexId) -> Result<VertexRole> {
    let i = families::block_of(ns, v)
        .ok_or(Error::InvalidVertex { vertex: v, n: ns.iter().sum() })?;
    let a = case.assignment(ns.len());
    Ok(match a.parts[i - 1] {
        PartKind::Ss if case.centers_of(i) == v => VertexRole::CenterOfSs(i),
        PartKind::Ss => VertexRole::SpokeOfSs(i),
        PartKind::Sc => VertexRole::NodeOfSc(i),
        PartKind::C => VertexRole::NodeOfC(i),
    })
}

/// Case of `c_v(G)` for a member `G` in case `case`, where `v` has `role`.
/// The table is the same for both orbits.
pub fn closure_step(case: CaseId, role: VertexRole) -> Result<CaseId> {
    use CaseId::*;
    use VertexRole::*;
    let impossible = || Err(Error::InvalidCase(format!("a case {case} member has no {role}")));
    match case {
        One => match role {
            CenterOfSs(i) => Ok(Three(i)),
            SpokeOfSs(_) => Ok(One),
            NodeOfSc(i) => Ok(Two(i)),
            NodeOfC(_) => impossible(),
        },
        Two(j) => match role {
            NodeOfSc(i) if i == j => Ok(One),
            CenterOfSs(i) if i != j => Ok(Three(j)),
            SpokeOfSs(i) if i != j => Ok(Two(j)),
            NodeOfC(i) if i != j => Ok(Three(j)),
            _ => impossible(),
        },
        Three(j) => match role {
            NodeOfC(i) if i == j => Ok(One),
            CenterOfSs(i) if i != j => Ok(Two(j)),
            SpokeOfSs(i) if i != j => Ok(Three(j)),
            NodeOfC(_) => Ok(Two(j)),
            _ => impossible(),
        },
    }
}

/// Reads the symmetry case of a graph whose strong splits are those of
/// `K_{n1..nk}` by decomposing it.
pub fn classify_member(g: &SimpleGraph, ns: &[usize]) -> Result<SymmetryCase> {
    let k = ns.len();
    if g.n() != ns.iter().sum::<usize>() {
        return Err(Error::InvalidCase(format!("graph has {} vertices, blocks need {}", g.n(), ns.iter().sum::<usize>())));
    }
    let q = compute_qasst(g)?;
    let mismatch = || Error::InvalidCase("graph does not have the k-partite split structure".into());
    if q.quotients().len() != k + 1 {
        return Err(mismatch());
    }
    let center_idx = q
        .quotients()
        .iter()
        .position(|x| x.leaf_nodes().is_empty())
        .ok_or_else(mismatch)?;
    let central = q.quotient(center_idx);
    // tree index of the quotient holding block i
    let mut home = vec![0usize; k + 1];
    let mut parts = vec![PartKind::C; k];
    let mut centers = Vec::new();
    for i in 1..=k {
        let block: Vec<VertexId> = families::block(ns, i).collect();
        let qi = q.quotient_of_leaf(block[0]).ok_or_else(mismatch)?;
        if q.quotient(qi).leaf_nodes() != block {
            return Err(mismatch());
        }
        home[i] = qi;
        let s = q.quotient(qi).split_nodes();
        if s.len() != 1 || s[0].j != center_idx {
            return Err(mismatch());
        }
        let kind = q.kind_at(s[0])?;
        parts[i - 1] = match kind {
            QuotientKind::Complete => PartKind::C,
            QuotientKind::StarCenter => PartKind::Sc,
            QuotientKind::StarSpoke { center } => {
                match Node::from(center) {
                    Node::Leaf(v) => centers.push(v),
                    Node::Split(_) => return Err(mismatch()),
                }
                PartKind::Ss
            }
            QuotientKind::Prime => return Err(mismatch()),
        };
    }
    let pointer = match classify_quotient(central, None)? {
        QuotientKind::Complete => None,
        QuotientKind::StarSpoke { center } => match Node::from(center) {
            Node::Split(s) => Some((1..=k).find(|&i| home[i] == s.j).ok_or_else(mismatch)?),
            Node::Leaf(_) => return Err(mismatch()),
        },
        _ => return Err(mismatch()),
    };
    let case = match pointer {
        None => CaseId::One,
        Some(j) if parts[j - 1] == PartKind::Sc => CaseId::Two(j),
        Some(j) => CaseId::Three(j),
    };
    let spokes: Vec<usize> = (1..=k).filter(|&i| parts[i - 1] == PartKind::Ss).collect();
    let odd = spokes.len() % 2 == 1;
    let tag = if odd == case_parity_odd(OrbitTag::KPartite, case) {
        OrbitTag::KPartite
    } else {
        OrbitTag::CliqueStar
    };
    let c = SymmetryCase {
        tag,
        case,
        spokes,
        centers,
    };
    c.validate(ns).map_err(|_| mismatch())?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_match_orbit_sizes() {
        let total = |tag, ns: &[usize]| enumerate_cases(tag, ns).unwrap().iter().map(|c| c.1).sum::<u128>();
        assert_eq!(total(OrbitTag::KPartite, &[2, 2, 2]), 40);
        assert_eq!(total(OrbitTag::CliqueStar, &[2, 2, 2]), 41);
        assert_eq!(total(OrbitTag::CliqueStar, &[2, 2, 2, 2]), 148);
        let rows: Vec<u128> = enumerate_bipartite(2, 3).unwrap().iter().map(|r| r.1).collect();
        assert_eq!(rows, vec![1, 1, 1, 2, 3, 6]);
    }

    #[test]
    fn realize_known_members() {
        let ns = [2, 2, 2, 2];
        let base = SymmetryCase::new(OrbitTag::KPartite, CaseId::One, vec![], &ns).unwrap();
        assert_eq!(realize(&base, &ns).unwrap(), families::complete_multipartite(&ns).unwrap());
        let mr = SymmetryCase::new(OrbitTag::KPartite, CaseId::One, vec![1, 2, 3, 4], &ns).unwrap();
        assert_eq!(realize(&mr, &ns).unwrap(), families::multi_leaf_repeater(&ns).unwrap());
        let cs = SymmetryCase::new(OrbitTag::CliqueStar, CaseId::Three(2), vec![], &ns).unwrap();
        assert_eq!(realize(&cs, &ns).unwrap(), families::clique_star(&ns, 2).unwrap());
    }

    #[test]
    fn parity_is_enforced() {
        assert!(SymmetryCase::new(OrbitTag::KPartite, CaseId::One, vec![1], &[2, 2, 2]).is_err());
        assert!(SymmetryCase::new(OrbitTag::CliqueStar, CaseId::Two(1), vec![1], &[2, 2, 2]).is_err());
        assert!(SymmetryCase::new(OrbitTag::CliqueStar, CaseId::Two(1), vec![2], &[2, 2, 2]).is_ok());
    }

    #[test]
    fn worked_transformations() {
        let ns = [2, 2, 2, 2];
        let seq = |tag, case, spokes: Vec<usize>| {
            let c = SymmetryCase::new(tag, case, spokes, &ns).unwrap();
            synthesize_transformation(&c, &ns, 1).unwrap().to_string()
        };
        assert_eq!(seq(OrbitTag::KPartite, CaseId::One, vec![1, 2]), "[1,3,1]");
        assert_eq!(seq(OrbitTag::KPartite, CaseId::Two(1), vec![2, 3]), "[1,3,5]");
        assert_eq!(seq(OrbitTag::KPartite, CaseId::Three(1), vec![2]), "[1,3]");
        assert_eq!(seq(OrbitTag::CliqueStar, CaseId::One, vec![1, 2, 3]), "[3,5,1]");
        assert_eq!(seq(OrbitTag::CliqueStar, CaseId::Two(1), vec![2]), "[3]");
        assert_eq!(seq(OrbitTag::CliqueStar, CaseId::Three(1), vec![2, 3]), "[3,5]");
    }

    #[test]
    fn transformations_land_on_members() {
        for ns in [vec![2, 2, 2], vec![2, 3, 2, 2]] {
            for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
                for r in 1..=ns.len() {
                    let base = base_graph(tag, &ns, r).unwrap();
                    for c in enumerate_members(tag, &ns).unwrap() {
                        let f = synthesize_transformation(&c, &ns, r).unwrap();
                        assert_eq!(base.apply_sequence(&f).unwrap(), realize(&c, &ns).unwrap(), "{c} r={r} f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn classify_round_trips() {
        let ns = [2, 3, 2];
        for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
            for c in enumerate_members(tag, &ns).unwrap() {
                assert_eq!(classify_member(&realize(&c, &ns).unwrap(), &ns).unwrap(), c);
            }
        }
    }

    #[test]
    fn closure_rows() {
        assert_eq!(closure_step(CaseId::One, VertexRole::CenterOfSs(2)).unwrap(), CaseId::Three(2));
        assert_eq!(closure_step(CaseId::Two(1), VertexRole::NodeOfSc(1)).unwrap(), CaseId::One);
        assert_eq!(closure_step(CaseId::Three(1), VertexRole::SpokeOfSs(2)).unwrap(), CaseId::Three(1));
        assert!(closure_step(CaseId::One, VertexRole::NodeOfC(1)).is_err());
        assert!(closure_step(CaseId::Two(1), VertexRole::NodeOfSc(2)).is_err());
    }
}
