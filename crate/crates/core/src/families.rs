//! Constructors for the named graph families.
//!
//! Block-structured families (complete multipartite, clique-star, multi-leaf
//! repeater) number their vertices block by block: block 1 is `1..=n1`,
//! block 2 is `n1+1..=n1+n2`, and so on. In a multi-leaf repeater the first
//! vertex of each block is the core vertex. A star `S_n` has center 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    CompleteBipartite,
    CompleteMultipartite,
    CliqueStar,
    Repeater,
    MultiLeafRepeater,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "complete" | "k" => Family::Complete,
            "star" => Family::Star,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete_bipartite" | "bipartite" => Family::CompleteBipartite,
            "complete_multipartite" | "multipartite" | "kpartite" => Family::CompleteMultipartite,
            "clique_star" | "cliquestar" | "cs" => Family::CliqueStar,
            "repeater" => Family::Repeater,
            "multi_leaf_repeater" | "mlr" | "mr" => Family::MultiLeafRepeater,
            other => return Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::CliqueStar => "clique_star",
            Family::Repeater => "repeater",
            Family::MultiLeafRepeater => "multi_leaf_repeater",
        };
        f.write_str(s)
    }
}

/// Which of the two block-structured LC orbits a graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitTag {
    KPartite,
    CliqueStar,
}

impl FromStr for OrbitTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "kpartite" | "k_partite" | "complete_multipartite" | "multipartite" => {
                Ok(OrbitTag::KPartite)
            }
            "clique_star" | "cliquestar" | "cs" => Ok(OrbitTag::CliqueStar),
            other => Err(Error::InvalidSpec(format!("unknown orbit tag `{other}`"))),
        }
    }
}

impl fmt::Display for OrbitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitTag::KPartite => "kpartite",
            OrbitTag::CliqueStar => "clique_star",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    /// Clique-star center block `r` (1-based); defaults to 1.
    pub center: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        FamilySpec {
            family,
            params,
            center: None,
        }
    }

    pub fn with_center(mut self, r: usize) -> Self {
        self.center = Some(r);
        self
    }
}

fn single(spec: &FamilySpec) -> Result<usize> {
    match spec.params.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::InvalidSpec(format!(
            "{} takes exactly one parameter",
            spec.family
        ))),
    }
}

fn check_blocks(ns: &[usize], what: &str) -> Result<()> {
    if ns.len() < 3 || ns.iter().any(|&n| n < 2) {
        return Err(Error::InvalidSpec(format!(
            "{what} needs k >= 3 blocks of size >= 2, got {ns:?}"
        )));
    }
    Ok(())
}

/// Builds the graph described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<SimpleGraph> {
    match spec.family {
        Family::Complete => Ok(complete(single(spec)?)),
        Family::Star => Ok(star(single(spec)?)),
        Family::Path => {
            let n = single(spec)?;
            if n == 0 {
                return Err(Error::InvalidSpec("path needs n >= 1".into()));
            }
            Ok(path(n))
        }
        Family::Cycle => {
            let n = single(spec)?;
            if n < 3 {
                return Err(Error::InvalidSpec("cycle needs n >= 3".into()));
            }
            Ok(cycle(n))
        }
        Family::CompleteBipartite => match spec.params.as_slice() {
            [n, m] if *n >= 1 && *m >= 1 => Ok(complete_multipartite_unchecked(&[*n, *m])),
            _ => Err(Error::InvalidSpec(
                "complete_bipartite takes two positive parameters".into(),
            )),
        },
        Family::CompleteMultipartite => {
            if spec.params.len() < 2 || spec.params.contains(&0) {
                return Err(Error::InvalidSpec(
                    "complete_multipartite needs at least two positive block sizes".into(),
                ));
            }
            Ok(complete_multipartite_unchecked(&spec.params))
        }
        Family::CliqueStar => clique_star(&spec.params, spec.center.unwrap_or(1)),
        Family::Repeater => {
            let n = single(spec)?;
            if n == 0 {
                return Err(Error::InvalidSpec("repeater needs n >= 1".into()));
            }
            Ok(repeater(n))
        }
        Family::MultiLeafRepeater => multi_leaf_repeater(&spec.params),
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Star `S_n`: center 1 joined to the `n` spokes `2..=n+1`.
pub fn star(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n + 1);
    for v in 2..=n + 1 {
        g.add_edge(1, v).unwrap();
    }
    g
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for v in 1..n {
        g.add_edge(v, v + 1).unwrap();
    }
    g
}

/// Cycle `1 - 2 - ... - n - 1` (`n >= 3`).
pub fn cycle(n: usize) -> SimpleGraph {
    let mut g = path(n);
    g.add_edge(n, 1).unwrap();
    g
}

pub fn complete_bipartite(n: usize, m: usize) -> SimpleGraph {
    complete_multipartite_unchecked(&[n, m])
}

/// Vertex range of block `i` (1-based) under the consecutive labeling.
pub fn block(ns: &[usize], i: usize) -> std::ops::RangeInclusive<VertexId> {
    let start: usize = ns[..i - 1].iter().sum::<usize>() + 1;
    start..=start + ns[i - 1] - 1
}

/// Block index (1-based) containing vertex `v`.
pub fn block_of(ns: &[usize], v: VertexId) -> Option<usize> {
    let mut end = 0;
    for (i, &n) in ns.iter().enumerate() {
        end += n;
        if v <= end {
            return Some(i + 1);
        }
    }
    None
}

fn complete_multipartite_unchecked(ns: &[usize]) -> SimpleGraph {
    let total: usize = ns.iter().sum();
    let mut g = SimpleGraph::new(total);
    for i in 1..=ns.len() {
        for j in i + 1..=ns.len() {
            for u in block(ns, i) {
                for v in block(ns, j) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
    }
    g
}

/// Complete multipartite graph `K_{n1,...,nk}`.
pub fn complete_multipartite(ns: &[usize]) -> Result<SimpleGraph> {
    build(&FamilySpec::new(Family::CompleteMultipartite, ns.to_vec()))
}

/// Clique-star `CS^r_{n1,...,nk}`: every block is a clique and block `r` is
/// joined to every other block.
pub fn clique_star(ns: &[usize], r: usize) -> Result<SimpleGraph> {
    check_blocks(ns, "clique_star")?;
    if r == 0 || r > ns.len() {
        return Err(Error::InvalidSpec(format!(
            "clique_star center {r} outside 1..={}",
            ns.len()
        )));
    }
    let mut g = SimpleGraph::new(ns.iter().sum());
    for i in 1..=ns.len() {
        let b: Vec<_> = block(ns, i).collect();
        for (a, &u) in b.iter().enumerate() {
            for &v in &b[a + 1..] {
                g.add_edge(u, v)?;
            }
        }
        if i != r {
            for u in block(ns, i) {
                for v in block(ns, r) {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// Repeater `R_n`: `K_n` on the odd vertices with leaf `2i` hanging off `2i-1`.
pub fn repeater(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(2 * n);
    for i in 1..=n {
        g.add_edge(2 * i - 1, 2 * i).unwrap();
        for j in i + 1..=n {
            g.add_edge(2 * i - 1, 2 * j - 1).unwrap();
        }
    }
    g
}

/// Multi-leaf repeater `MR_{n1,...,nk}`: a clique on the first vertex of each
/// block, with the other `ni - 1` vertices of block `i` as its leaves.
pub fn multi_leaf_repeater(ns: &[usize]) -> Result<SimpleGraph> {
    check_blocks(ns, "multi_leaf_repeater")?;
    let mut g = SimpleGraph::new(ns.iter().sum());
    let cores: Vec<VertexId> = (1..=ns.len()).map(|i| *block(ns, i).start()).collect();
    for (a, &u) in cores.iter().enumerate() {
        for &v in &cores[a + 1..] {
            g.add_edge(u, v)?;
        }
        for leaf in block(ns, a + 1).skip(1) {
            g.add_edge(u, leaf)?;
        }
    }
    Ok(g)
}

/// The orbit containing `MR` with `k` blocks: the k-partite orbit for even `k`,
/// the clique-star orbit for odd `k`.
pub fn mlr_orbit_home(k: usize) -> Result<OrbitTag> {
    if k < 3 {
        return Err(Error::InvalidSpec(format!("need k >= 3, got {k}")));
    }
    Ok(if k % 2 == 0 {
        OrbitTag::KPartite
    } else {
        OrbitTag::CliqueStar
    })
}
