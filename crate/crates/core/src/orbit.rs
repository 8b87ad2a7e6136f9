//! Brute-force LC orbits by breadth-first closure over labeled graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, LcSequence, SimpleGraph, VertexId};

/// Default member budget for orbit enumeration.
pub const DEFAULT_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitOptions {
    pub limit: usize,
    /// Keep a parent pointer per member so witnesses can be extracted.
    pub track_parents: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            limit: DEFAULT_LIMIT,
            track_parents: false,
        }
    }
}

/// A fully enumerated LC orbit. Members are stored in BFS discovery order;
/// `members()[0]` is the base graph.
#[derive(Clone, Debug)]
pub struct Orbit {
    members: Vec<SimpleGraph>,
    index: HashMap<Box<[u64]>, usize>,
    parent: Option<Vec<Option<(usize, VertexId)>>>,
}

impl Orbit {
    pub fn base(&self) -> &SimpleGraph {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in BFS discovery order.
    pub fn members(&self) -> &[SimpleGraph] {
        &self.members
    }

    /// Members sorted by canonical key.
    pub fn sorted_members(&self) -> Vec<&SimpleGraph> {
        let mut out: Vec<(Vec<u8>, &SimpleGraph)> =
            self.members.iter().map(|g| (g.canonical_key(), g)).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter().map(|(_, g)| g).collect()
    }

    pub fn contains(&self, g: &SimpleGraph) -> bool {
        g.n() == self.base().n() && self.index.contains_key(g.adjacency_words())
    }

    /// Sequence taking the base graph to `g`, if parents were tracked and `g`
    /// is a member.
    pub fn path_to(&self, g: &SimpleGraph) -> Option<LcSequence> {
        let parent = self.parent.as_ref()?;
        if g.n() != self.base().n() {
            return None;
        }
        let mut idx = *self.index.get(g.adjacency_words())?;
        let mut steps = Vec::new();
        while let Some((p, v)) = parent[idx] {
            steps.push(v);
            idx = p;
        }
        steps.reverse();
        Some(LcSequence::new(steps))
    }
}

/// Enumerates the orbit of `g` with the default options and the given budget.
pub fn enumerate_orbit(g: &SimpleGraph, limit: usize) -> Result<Orbit> {
    enumerate_orbit_with(
        g,
        OrbitOptions {
            limit,
            track_parents: false,
        },
    )
}

/// Breadth-first closure under all primitive local complements. Vertices are
/// tried in ascending order and the frontier is FIFO, so discovery order is
/// deterministic.
pub fn enumerate_orbit_with(g: &SimpleGraph, opts: OrbitOptions) -> Result<Orbit> {
    if opts.limit == 0 {
        return Err(Error::BudgetExceeded {
            limit: 0,
            explored: 0,
        });
    }
    let mut members = vec![g.clone()];
    let mut index = HashMap::new();
    index.insert(g.adjacency_words().into(), 0usize);
    let mut parent = opts.track_parents.then(|| vec![None]);
    let mut head = 0;
    while head < members.len() {
        let current = members[head].clone();
        for v in 1..=current.n() {
            let mut next = current.clone();
            next.local_complement_in_place(v);
            if index.contains_key(next.adjacency_words()) {
                continue;
            }
            if members.len() == opts.limit {
                return Err(Error::BudgetExceeded {
                    limit: opts.limit,
                    explored: members.len(),
                });
            }
            index.insert(next.adjacency_words().into(), members.len());
            if let Some(p) = parent.as_mut() {
                p.push(Some((head, v)));
            }
            members.push(next);
        }
        head += 1;
    }
    Ok(Orbit {
        members,
        index,
        parent,
    })
}

/// Outcome of an LC-equivalence query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    /// The budget ran out before the orbit closed.
    Indeterminate { explored: usize },
}

pub fn are_lc_equivalent(g: &SimpleGraph, h: &SimpleGraph, limit: usize) -> Equivalence {
    if g.n() != h.n() || g.is_connected() != h.is_connected() {
        return Equivalence::NotEquivalent;
    }
    match enumerate_orbit(g, limit) {
        Ok(o) if o.contains(h) => Equivalence::Equivalent,
        Ok(_) => Equivalence::NotEquivalent,
        Err(Error::BudgetExceeded { explored, .. }) => Equivalence::Indeterminate { explored },
        Err(_) => Equivalence::NotEquivalent,
    }
}

/// A shortest sequence `f` with `apply_sequence(g, f) == h`.
pub fn transformation_between(g: &SimpleGraph, h: &SimpleGraph, limit: usize) -> Result<LcSequence> {
    if g.n() != h.n() {
        return Err(Error::NotEquivalent);
    }
    let orbit = enumerate_orbit_with(
        g,
        OrbitOptions {
            limit,
            track_parents: true,
        },
    )?;
    orbit.path_to(h).ok_or(Error::NotEquivalent)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub representative: SimpleGraph,
    pub multiplicity: usize,
}

/// Partitions the orbit into isomorphism classes. Representatives are the
/// first member of each class in canonical-key order, and classes are listed
/// in that order too.
pub fn orbit_iso_classes(o: &Orbit) -> Result<Vec<IsoClass>> {
    let mut classes: Vec<IsoClass> = Vec::new();
    let mut invariants: Vec<(usize, Vec<usize>)> = Vec::new();
    for g in o.sorted_members() {
        let mut degs = g.degrees();
        degs.sort_unstable();
        let inv = (g.edge_count(), degs);
        let mut found = false;
        for (c, class_inv) in classes.iter_mut().zip(&invariants) {
            if *class_inv == inv && is_isomorphic(&c.representative, g)?.is_some() {
                c.multiplicity += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push(IsoClass {
                representative: g.clone(),
                multiplicity: 1,
            });
            invariants.push(inv);
        }
    }
    Ok(classes)
}

fn min_member_by(o: &Orbit, metric: impl Fn(&SimpleGraph) -> usize) -> (SimpleGraph, usize) {
    let mut best: Option<(usize, Vec<u8>, &SimpleGraph)> = None;
    for g in o.members() {
        let m = metric(g);
        let better = match &best {
            None => true,
            Some((bm, bk, _)) => m < *bm || (m == *bm && g.canonical_key() < *bk),
        };
        if better {
            best = Some((m, g.canonical_key(), g));
        }
    }
    let (m, _, g) = best.expect("orbit is never empty");
    (g.clone(), m)
}

/// Member with the fewest edges; ties go to the smallest canonical key.
pub fn min_edge_member(o: &Orbit) -> (SimpleGraph, usize) {
    min_member_by(o, SimpleGraph::edge_count)
}

/// Member with the smallest maximum degree; ties go to the smallest canonical key.
pub fn min_max_degree_member(o: &Orbit) -> (SimpleGraph, usize) {
    min_member_by(o, SimpleGraph::max_degree)
}
