//! Exact closed-form counts.
//!
//! Every formula is generic over a signed exact integer type. [`crate::Count`]
//! (`i128`) covers everything the tests touch; [`crate::BigCount`] removes the
//! ceiling. Machine integers overflow like ordinary Rust arithmetic.

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::OrbitTag;
use crate::split::{classify_quotient, Node, Qasst, QuotientKind};
use crate::Count;

/// Exact signed integers usable by the counting formulas.
pub trait CountScalar: Num + Signed + Clone + Ord + FromPrimitive + fmt::Display + fmt::Debug {}

impl<T> CountScalar for T where T: Num + Signed + Clone + Ord + FromPrimitive + fmt::Display + fmt::Debug {}

fn lift<T: CountScalar>(x: usize) -> T {
    T::from_usize(x).expect("usize fits every count type")
}

fn choose2<T: CountScalar>(n: usize) -> T {
    lift::<T>(n) * lift::<T>(n.saturating_sub(1)) / lift::<T>(2)
}

fn check_parts(ns: &[usize]) -> Result<()> {
    if ns.len() < 3 || ns.iter().any(|&n| n < 2) {
        return Err(Error::InvalidSpec(format!(
            "need k >= 3 parts each of size >= 2, got {ns:?}"
        )));
    }
    Ok(())
}

/// `x_m = 2 x_{m-1} + 2 x_{m-2}` started from `(x0, x1)`.
fn recurrence<T: CountScalar>(x0: T, x1: T, m: usize) -> T {
    let two = lift::<T>(2);
    let (mut a, mut b) = (x0, x1);
    for _ in 0..m {
        let next = two.clone() * b.clone() + two.clone() * a;
        a = b;
        b = next;
    }
    a
}

/// Bouchet's closed form for the path `P_n`, evaluated through the integer
/// sequence `u_0 = 0, u_1 = 1` (so that `(1+√3)^m - (1-√3)^m = 2√3 u_m`).
/// From `n = 3` on it is four times the labeled orbit size.
pub fn bouchet_path_count<T: CountScalar>(n: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidSpec("path needs n >= 1".into()));
    }
    Ok(recurrence(T::zero(), T::one(), n + 1))
}

/// Bouchet's closed form for the cycle `C_n`. It equals the labeled orbit
/// size once the cycle is prime (`n >= 5`).
pub fn bouchet_cycle_count<T: CountScalar>(n: usize) -> Result<T> {
    if n < 3 {
        return Err(Error::InvalidSpec("cycle needs n >= 3".into()));
    }
    let two = lift::<T>(2);
    let a = recurrence(two.clone(), two.clone(), n);
    let pow = num_traits::pow(two, n - 1);
    let sign = if n % 2 == 0 { T::one() } else { -T::one() };
    Ok(a - lift::<T>(4) * (pow + sign) / lift::<T>(3))
}

/// Local kind of a quotient seen from one split-node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    C,
    Sc,
    Ss,
}

impl PartKind {
    pub fn short(self) -> &'static str {
        match self {
            PartKind::C => "c",
            PartKind::Sc => "sc",
            PartKind::Ss => "ss",
        }
    }

    fn joins(self, other: PartKind) -> bool {
        !matches!(
            (self, other),
            (PartKind::C, PartKind::C) | (PartKind::Sc, PartKind::Ss) | (PartKind::Ss, PartKind::Sc)
        )
    }
}

impl fmt::Display for PartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl From<&QuotientKind> for Option<PartKind> {
    fn from(k: &QuotientKind) -> Self {
        match k {
            QuotientKind::Complete => Some(PartKind::C),
            QuotientKind::StarCenter => Some(PartKind::Sc),
            QuotientKind::StarSpoke { .. } => Some(PartKind::Ss),
            QuotientKind::Prime => None,
        }
    }
}

/// Number of QASST-equivalent graphs: the quotients are replaced by any
/// LC-equivalent quotient (a complete graph or a star with any center) such
/// that every tree edge stays a valid join. Computed by dynamic programming
/// over the tree rooted at quotient 0.
pub fn phi_count<T: CountScalar>(q: &Qasst) -> Result<T> {
    let m = q.quotients().len();
    if m == 1 {
        let single = &q.quotients()[0];
        return match single.len() {
            0..=2 => Ok(T::one()),
            _ if matches!(classify_quotient(single, None)?, QuotientKind::Prime) => {
                Err(Error::Unsupported("prime quotient".into()))
            }
            len => Ok(lift(len + 1)),
        };
    }
    for quotient in q.quotients() {
        if classify_quotient(quotient, None)? == QuotientKind::Prime {
            return Err(Error::Unsupported(
                "phi is only defined here for trees of star and complete quotients".into(),
            ));
        }
    }
    // option 0 is complete, option p >= 1 is the star centered at position p
    let kind = |qi: usize, opt: usize, toward: usize| -> PartKind {
        let quotient = q.quotient(qi);
        let pos = quotient
            .split_nodes()
            .into_iter()
            .find(|s| s.j == toward)
            .and_then(|s| quotient.position(&Node::Split(s)))
            .expect("tree neighbor has a split-node");
        match opt {
            0 => PartKind::C,
            p if p == pos => PartKind::Sc,
            _ => PartKind::Ss,
        }
    };
    fn solve<T: CountScalar>(
        q: &Qasst,
        i: usize,
        parent: Option<usize>,
        kind: &dyn Fn(usize, usize, usize) -> PartKind,
    ) -> Vec<T> {
        let opts = q.quotient(i).len() + 1;
        let mut table = vec![T::one(); opts];
        for s in q.quotient(i).split_nodes() {
            if Some(s.j) == parent {
                continue;
            }
            let child = solve::<T>(q, s.j, Some(i), kind);
            for (o, slot) in table.iter_mut().enumerate() {
                let mine = kind(i, o, s.j);
                let mut sum = T::zero();
                for (co, val) in child.iter().enumerate() {
                    if mine.joins(kind(s.j, co, i)) {
                        sum = sum + val.clone();
                    }
                }
                *slot = slot.clone() * sum;
            }
        }
        table
    }
    let root = solve::<T>(q, 0, None, &kind);
    Ok(root.into_iter().fold(T::zero(), |a, b| a + b))
}

/// `∏ |O(Q_i)|` over the quotients, ignoring join validity.
pub fn product_bound<T: CountScalar>(q: &Qasst) -> Result<T> {
    let mut acc = T::one();
    for quotient in q.quotients() {
        match classify_quotient(quotient, None)? {
            QuotientKind::Prime => return Err(Error::Unsupported("prime quotient".into())),
            _ if quotient.len() <= 2 => {}
            _ => acc = acc * lift::<T>(quotient.len() + 1),
        }
    }
    Ok(acc)
}

/// Number of quotient assignments rejected by join validity.
pub fn mu<T: CountScalar>(q: &Qasst) -> Result<T> {
    Ok(product_bound::<T>(q)? - phi_count::<T>(q)?)
}

/// `(∏(1+n_i), ∏(1-n_i), Σ_j ∏_{i≠j}(1+n_i))`.
fn products<T: CountScalar>(ns: &[usize]) -> (T, T, T) {
    let plus: Vec<T> = ns.iter().map(|&n| lift::<T>(n + 1)).collect();
    let all = plus.iter().fold(T::one(), |a, b| a * b.clone());
    let alt = ns
        .iter()
        .fold(T::one(), |a, &n| a * (T::one() - lift::<T>(n)));
    let leave_one = (0..ns.len())
        .map(|j| {
            plus.iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .fold(T::one(), |a, (_, b)| a * b.clone())
        })
        .fold(T::zero(), |a, b| a + b);
    (all, alt, leave_one)
}

/// Size of the QASST equivalence class of `K_{n1..nk}`.
pub fn kpartite_phi<T: CountScalar>(ns: &[usize]) -> Result<T> {
    check_parts(ns)?;
    let (all, _, leave_one) = products::<T>(ns);
    Ok(all + lift::<T>(2) * leave_one)
}

pub fn bipartite_orbit_size<T: CountScalar>(n: usize, m: usize) -> Result<T> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSpec(format!("need n, m >= 2, got ({n}, {m})")));
    }
    Ok(lift::<T>(n * m + n + m + 3))
}

/// LC orbit size of `K_{n1..nk}`: the even-size subset products plus the
/// leave-one-out products.
pub fn kpartite_orbit_size<T: CountScalar>(ns: &[usize]) -> Result<T> {
    check_parts(ns)?;
    let (all, alt, leave_one) = products::<T>(ns);
    Ok((all + alt) / lift::<T>(2) + leave_one)
}

/// LC orbit size of the clique-star: odd-size subset products plus the
/// leave-one-out products.
pub fn clique_star_orbit_size<T: CountScalar>(ns: &[usize]) -> Result<T> {
    check_parts(ns)?;
    let (all, alt, leave_one) = products::<T>(ns);
    Ok((all - alt) / lift::<T>(2) + leave_one)
}

pub fn orbit_size<T: CountScalar>(tag: OrbitTag, ns: &[usize]) -> Result<T> {
    match tag {
        OrbitTag::KPartite => kpartite_orbit_size(ns),
        OrbitTag::CliqueStar => clique_star_orbit_size(ns),
    }
}

/// Isomorphism classes in the orbit when all parts have equal size.
pub fn iso_class_count<T: CountScalar>(tag: OrbitTag, k: usize) -> Result<T> {
    if k < 3 {
        return Err(Error::InvalidSpec(format!("need k >= 3, got {k}")));
    }
    Ok(lift(match tag {
        OrbitTag::KPartite => k / 2 + k + 1,
        OrbitTag::CliqueStar => k.div_ceil(2) + k,
    }))
}

pub fn bipartite_iso_class_count<T: CountScalar>(n: usize, m: usize) -> Result<T> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSpec(format!("need n, m >= 2, got ({n}, {m})")));
    }
    Ok(lift(if n == m { 4 } else { 6 }))
}

/// One of the six valid kind pairs `(Q1, Q2)` for the two quotients of
/// `K_{n,m}`; `Q1` holds the `n` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BipartiteRow {
    pub q1: PartKind,
    pub q2: PartKind,
}

impl BipartiteRow {
    pub fn all() -> Vec<BipartiteRow> {
        use PartKind::*;
        [(Sc, Sc), (Sc, C), (C, Sc), (Ss, C), (C, Ss), (Ss, Ss)]
            .into_iter()
            .map(|(q1, q2)| BipartiteRow { q1, q2 })
            .collect()
    }

    /// Number of labeled graphs in the row: one per choice of star center
    /// among the leaves of each star-spoke quotient.
    pub fn count<T: CountScalar>(self, n: usize, m: usize) -> T {
        let spoke = |k: PartKind, size: usize| if k == PartKind::Ss { size } else { 1 };
        lift(spoke(self.q1, n) * spoke(self.q2, m))
    }

    pub fn edges<T: CountScalar>(self, n: usize, m: usize) -> T {
        internal_edges::<T>(self.q1, n)
            + internal_edges::<T>(self.q2, m)
            + lift::<T>(attached(self.q1, n) * attached(self.q2, m))
    }

    pub fn max_degree(self, n: usize, m: usize) -> usize {
        let side = |k: PartKind, size: usize, other: usize| match k {
            PartKind::Sc => other,
            PartKind::C => size - 1 + other,
            PartKind::Ss => (size - 1 + other).max(1),
        };
        side(self.q1, n, attached(self.q2, m)).max(side(self.q2, m, attached(self.q1, n)))
    }
}

impl fmt::Display for BipartiteRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.q1, self.q2)
    }
}

fn internal_edges<T: CountScalar>(k: PartKind, n: usize) -> T {
    match k {
        PartKind::C => choose2(n),
        PartKind::Sc => T::zero(),
        PartKind::Ss => lift(n - 1),
    }
}

/// Leaves of a quotient adjacent to its outward split-node.
fn attached(k: PartKind, n: usize) -> usize {
    match k {
        PartKind::Ss => 1,
        _ => n,
    }
}

/// Kind of the central quotient `Q0` of a star-shaped QASST.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralKind {
    Complete,
    /// A star whose center is the split-node toward `Q_j` (1-based).
    StarToward(usize),
}

impl fmt::Display for CentralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralKind::Complete => f.write_str("c"),
            CentralKind::StarToward(j) => write!(f, "sc_{j}"),
        }
    }
}

/// Kinds for the central quotient and for each `Q_i` (seen from `Q0`) of a
/// graph QASST-equivalent to `K_{n1..nk}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    pub central: CentralKind,
    pub parts: Vec<PartKind>,
}

/// Symmetry class identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseId {
    One,
    Two(usize),
    Three(usize),
}

impl CaseId {
    pub fn pointer(self) -> Option<usize> {
        match self {
            CaseId::One => None,
            CaseId::Two(j) | CaseId::Three(j) => Some(j),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseId::One => f.write_str("1"),
            CaseId::Two(j) => write!(f, "2({j})"),
            CaseId::Three(j) => write!(f, "3({j})"),
        }
    }
}

impl Assignment {
    /// Checks the shape and every join between `Q0` and the `Q_i`.
    pub fn validate(&self) -> Result<()> {
        let k = self.parts.len();
        if k < 3 {
            return Err(Error::InvalidAssignment(format!("need k >= 3, got {k}")));
        }
        for i in 1..=k {
            let central = self.central_kind_toward(i)?;
            if !central.joins(self.parts[i - 1]) {
                return Err(Error::InvalidAssignment(format!(
                    "Q0 is {central} toward Q{i} which is {}",
                    self.parts[i - 1]
                )));
            }
        }
        Ok(())
    }

    fn central_kind_toward(&self, i: usize) -> Result<PartKind> {
        Ok(match self.central {
            CentralKind::Complete => PartKind::C,
            CentralKind::StarToward(j) if j == 0 || j > self.parts.len() => {
                return Err(Error::InvalidAssignment(format!("Q0 points at missing Q{j}")))
            }
            CentralKind::StarToward(j) if j == i => PartKind::Sc,
            CentralKind::StarToward(_) => PartKind::Ss,
        })
    }

    /// Whether `Q_i` and `Q_j` are linked through `Q0`.
    fn linked(&self, i: usize, j: usize) -> bool {
        match self.central {
            CentralKind::Complete => i != j,
            CentralKind::StarToward(c) => i != j && (i == c || j == c),
        }
    }

    /// Star-spoke indices (1-based, ascending).
    pub fn spoke_set(&self) -> Vec<usize> {
        (1..=self.parts.len())
            .filter(|&i| self.parts[i - 1] == PartKind::Ss)
            .collect()
    }

    pub fn case(&self) -> Result<CaseId> {
        self.validate()?;
        Ok(match self.central {
            CentralKind::Complete => CaseId::One,
            CentralKind::StarToward(j) => match self.parts[j - 1] {
                PartKind::Sc => CaseId::Two(j),
                _ => CaseId::Three(j),
            },
        })
    }

    /// The orbit the assignment belongs to, by parity of the spoke count.
    pub fn orbit(&self) -> Result<OrbitTag> {
        let odd = self.spoke_set().len() % 2 == 1;
        let flip = matches!(self.case()?, CaseId::Three(_));
        Ok(if odd == flip {
            OrbitTag::KPartite
        } else {
            OrbitTag::CliqueStar
        })
    }

    fn check_sizes(&self, ns: &[usize]) -> Result<()> {
        check_parts(ns)?;
        if ns.len() != self.parts.len() {
            return Err(Error::InvalidAssignment(format!(
                "{} part sizes for {} quotients",
                ns.len(),
                self.parts.len()
            )));
        }
        self.validate()
    }
}

/// Edges of the graph described by `a`: internal leaf edges of each `Q_i`
/// plus, for every edge of `Q0`, the product of the attached leaf counts.
pub fn edge_count_from_assignment<T: CountScalar>(ns: &[usize], a: &Assignment) -> Result<T> {
    a.check_sizes(ns)?;
    let k = ns.len();
    let mut total = T::zero();
    for i in 1..=k {
        total = total + internal_edges::<T>(a.parts[i - 1], ns[i - 1]);
        for j in i + 1..=k {
            if a.linked(i, j) {
                total = total
                    + lift::<T>(attached(a.parts[i - 1], ns[i - 1]) * attached(a.parts[j - 1], ns[j - 1]));
            }
        }
    }
    Ok(total)
}

/// Maximum leaf degree of the graph described by `a`.
pub fn max_degree_from_assignment(ns: &[usize], a: &Assignment) -> Result<usize> {
    a.check_sizes(ns)?;
    let k = ns.len();
    let mut best = 0;
    for i in 1..=k {
        let external: usize = (1..=k)
            .filter(|&j| a.linked(i, j))
            .map(|j| attached(a.parts[j - 1], ns[j - 1]))
            .sum();
        let n = ns[i - 1];
        let d = match a.parts[i - 1] {
            PartKind::Sc => external,
            PartKind::C => n - 1 + external,
            PartKind::Ss => (n - 1 + external).max(1),
        };
        best = best.max(d);
    }
    Ok(best)
}

/// A candidate extremal representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSpec {
    pub case: CaseId,
    pub assignment: Assignment,
    /// Index of the smallest part.
    pub j: usize,
    /// Index of the second smallest part, when the case uses it.
    pub t: Option<usize>,
    /// Index of the largest part, when the value depends on it.
    pub l: Option<usize>,
    /// Edge count or maximum degree.
    pub value: usize,
}

/// `(j, t, l)`: smallest, second smallest and largest part, pairwise
/// distinct, lowest index on ties.
fn key_indices(ns: &[usize]) -> (usize, usize, usize) {
    let argmin = |skip: &[usize]| {
        (1..=ns.len())
            .filter(|i| !skip.contains(i))
            .min_by_key(|&i| (ns[i - 1], i))
            .unwrap()
    };
    let j = argmin(&[]);
    let t = argmin(&[j]);
    let l = (1..=ns.len())
        .filter(|&i| i != j && i != t)
        .min_by_key(|&i| (std::cmp::Reverse(ns[i - 1]), i))
        .unwrap();
    (j, t, l)
}

fn assignment(k: usize, central: CentralKind, special: &[(usize, PartKind)]) -> Assignment {
    let mut parts = vec![PartKind::Ss; k];
    for &(i, kind) in special {
        parts[i - 1] = kind;
    }
    Assignment { central, parts }
}

/// The hyperbola `f(k, n)` separating the two even-parity minimum edge cases.
pub fn edge_hyperbola(k: usize, n: usize) -> i128 {
    let (k, n) = (k as i128, n as i128);
    (n - 1) * (k - 1) + (n - 2) * (n - 1) / 2 - (k - 2) * (k - 1) / 2
}

/// Orbits in which the even-parity edge rule applies: the k-partite orbit for
/// even `k` and the clique-star orbit for odd `k`.
fn even_rule(tag: OrbitTag, k: usize) -> bool {
    (k % 2 == 0) == (tag == OrbitTag::KPartite)
}

/// Minimum edge representatives. Two specs are returned when the hyperbola
/// vanishes, ordered by case.
pub fn min_edge_rep(tag: OrbitTag, ns: &[usize]) -> Result<Vec<RepSpec>> {
    check_parts(ns)?;
    let k = ns.len();
    let (j, _, _) = key_indices(ns);
    let nj = ns[j - 1];
    let rest: usize = ns.iter().enumerate().filter(|(i, _)| i + 1 != j).map(|(_, n)| n - 1).sum();
    let all_spokes: usize = ns.iter().map(|n| n - 1).sum();
    let spec = |case, a: Assignment, value| RepSpec {
        case,
        assignment: a,
        j,
        t: None,
        l: None,
        value,
    };
    if !even_rule(tag, k) {
        let a = assignment(k, CentralKind::StarToward(j), &[(j, PartKind::Sc)]);
        return Ok(vec![spec(CaseId::Two(j), a, nj * (k - 1) + rest)]);
    }
    let f = edge_hyperbola(k, nj);
    let mut out = Vec::new();
    if f >= 0 {
        let a = assignment(k, CentralKind::Complete, &[]);
        out.push(spec(CaseId::One, a, k * (k - 1) / 2 + all_spokes));
    }
    if f <= 0 {
        let a = assignment(k, CentralKind::StarToward(j), &[(j, PartKind::C)]);
        out.push(spec(CaseId::Three(j), a, nj * (k - 1) + nj * (nj - 1) / 2 + rest));
    }
    Ok(out)
}

/// Minimum maximum-degree representatives: the three case candidates are
/// evaluated and every minimizer is returned, ordered by case.
pub fn min_max_degree_rep(tag: OrbitTag, ns: &[usize]) -> Result<Vec<RepSpec>> {
    let candidates = max_degree_candidates(tag, ns)?;
    let best = candidates.iter().map(|c| c.value).min().unwrap();
    Ok(candidates.into_iter().filter(|c| c.value == best).collect())
}

/// The three case candidates for minimum maximum degree.
pub fn max_degree_candidates(tag: OrbitTag, ns: &[usize]) -> Result<Vec<RepSpec>> {
    check_parts(ns)?;
    let k = ns.len();
    let (j, t, l) = key_indices(ns);
    let (nj, nt, nl) = (ns[j - 1], ns[t - 1], ns[l - 1]);
    let spoke_side = nl - 1 + nj;
    let spec = |case, a: Assignment, t: Option<usize>, value| RepSpec {
        case,
        assignment: a,
        j,
        t,
        l: Some(l),
        value,
    };
    let star = CentralKind::StarToward(j);
    Ok(if even_rule(tag, k) {
        vec![
            spec(CaseId::One, assignment(k, CentralKind::Complete, &[]), None, nl + k - 2),
            spec(
                CaseId::Two(j),
                assignment(k, star, &[(j, PartKind::Sc), (t, PartKind::C)]),
                Some(t),
                (k - 2 + nt).max(spoke_side),
            ),
            spec(
                CaseId::Three(j),
                assignment(k, star, &[(j, PartKind::C)]),
                None,
                (nj + k - 2).max(spoke_side),
            ),
        ]
    } else {
        vec![
            spec(
                CaseId::One,
                assignment(k, CentralKind::Complete, &[(j, PartKind::Sc)]),
                None,
                nl + nj + k - 3,
            ),
            spec(
                CaseId::Two(j),
                assignment(k, star, &[(j, PartKind::Sc)]),
                None,
                (k - 1).max(spoke_side),
            ),
            spec(
                CaseId::Three(j),
                assignment(k, star, &[(j, PartKind::C), (t, PartKind::C)]),
                Some(t),
                (nj + nt + k - 3).max(spoke_side),
            ),
        ]
    })
}

/// Minimum edge rows of `K_{n,m}`: always the binary star.
pub fn bipartite_min_edge_rows(n: usize, m: usize) -> Result<Vec<(BipartiteRow, usize)>> {
    bipartite_min_rows(n, m, |r| r.edges::<Count>(n, m) as usize)
}

/// Minimum maximum-degree rows of `K_{n,m}`.
pub fn bipartite_min_degree_rows(n: usize, m: usize) -> Result<Vec<(BipartiteRow, usize)>> {
    bipartite_min_rows(n, m, |r| r.max_degree(n, m))
}

fn bipartite_min_rows(
    n: usize,
    m: usize,
    metric: impl Fn(BipartiteRow) -> usize,
) -> Result<Vec<(BipartiteRow, usize)>> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSpec(format!("need n, m >= 2, got ({n}, {m})")));
    }
    let scored: Vec<_> = BipartiteRow::all().into_iter().map(|r| (r, metric(r))).collect();
    let best = scored.iter().map(|s| s.1).min().unwrap();
    Ok(scored.into_iter().filter(|s| s.1 == best).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigCount;

    #[test]
    fn bouchet_values() {
        let p: Vec<Count> = (1..=5).map(|n| bouchet_path_count(n).unwrap()).collect();
        assert_eq!(p, vec![2, 6, 16, 44, 120]);
        let c: Vec<Count> = (3..=5).map(|n| bouchet_cycle_count(n).unwrap()).collect();
        assert_eq!(c, vec![16, 44, 132]);
        assert!(bouchet_path_count::<Count>(0).is_err());
        assert!(bouchet_cycle_count::<Count>(2).is_err());
    }

    #[test]
    fn big_and_small_agree() {
        for n in 1..60 {
            let a: Count = bouchet_path_count(n).unwrap();
            let b: BigCount = bouchet_path_count(n).unwrap();
            assert_eq!(BigCount::from(a), b);
        }
        let big: BigCount = bouchet_path_count(400).unwrap();
        assert!(big.to_string().len() > 150);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(kpartite_orbit_size::<Count>(&[2, 2, 2]).unwrap(), 40);
        assert_eq!(clique_star_orbit_size::<Count>(&[2, 2, 2]).unwrap(), 41);
        assert_eq!(kpartite_orbit_size::<Count>(&[2, 2, 2, 2]).unwrap(), 149);
        assert_eq!(clique_star_orbit_size::<Count>(&[2, 2, 2, 2]).unwrap(), 148);
        assert_eq!(kpartite_phi::<Count>(&[2, 2, 2]).unwrap(), 81);
        assert_eq!(kpartite_phi::<Count>(&[2, 2, 2, 2]).unwrap(), 297);
        assert_eq!(bipartite_orbit_size::<Count>(2, 3).unwrap(), 14);
        assert!(kpartite_orbit_size::<Count>(&[2, 2]).is_err());
        assert!(bipartite_orbit_size::<Count>(1, 3).is_err());
    }

    #[test]
    fn iso_counts() {
        assert_eq!(iso_class_count::<Count>(OrbitTag::KPartite, 3).unwrap(), 5);
        assert_eq!(iso_class_count::<Count>(OrbitTag::CliqueStar, 3).unwrap(), 5);
        assert_eq!(iso_class_count::<Count>(OrbitTag::KPartite, 4).unwrap(), 7);
        assert_eq!(bipartite_iso_class_count::<Count>(2, 2).unwrap(), 4);
        assert_eq!(bipartite_iso_class_count::<Count>(2, 3).unwrap(), 6);
    }

    #[test]
    fn bipartite_rows_total() {
        for (n, m) in [(2, 2), (2, 3), (3, 3), (4, 7)] {
            let total: Count = BipartiteRow::all().iter().map(|r| r.count::<Count>(n, m)).sum();
            assert_eq!(total, bipartite_orbit_size::<Count>(n, m).unwrap());
        }
        let rows = bipartite_min_edge_rows(3, 4).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].1, 6);
    }

    #[test]
    fn edge_counts() {
        let k = assignment(3, CentralKind::Complete, &[(1, PartKind::Sc), (2, PartKind::Sc), (3, PartKind::Sc)]);
        assert_eq!(edge_count_from_assignment::<Count>(&[2, 3, 4], &k).unwrap(), 6 + 8 + 12);
        let mr = assignment(3, CentralKind::Complete, &[]);
        assert!(mr.validate().is_ok());
        assert_eq!(edge_count_from_assignment::<Count>(&[2, 2, 2], &mr).unwrap(), 6);
        let bad = assignment(3, CentralKind::Complete, &[(1, PartKind::C)]);
        assert!(edge_count_from_assignment::<Count>(&[2, 2, 2], &bad).is_err());
    }

    #[test]
    fn case_and_orbit_of_assignments() {
        let mr = assignment(4, CentralKind::Complete, &[]);
        assert_eq!(mr.case().unwrap(), CaseId::One);
        assert_eq!(mr.orbit().unwrap(), OrbitTag::KPartite);
        let cs = assignment(3, CentralKind::StarToward(1), &[(1, PartKind::C), (2, PartKind::C), (3, PartKind::C)]);
        assert_eq!(cs.case().unwrap(), CaseId::Three(1));
        assert_eq!(cs.orbit().unwrap(), OrbitTag::CliqueStar);
    }

    #[test]
    fn min_edge_cases() {
        let both = min_edge_rep(OrbitTag::KPartite, &[2; 4]).unwrap();
        assert_eq!(both.iter().map(|r| (r.case, r.value)).collect::<Vec<_>>(), vec![(CaseId::One, 10), (CaseId::Three(1), 10)]);
        let r = min_edge_rep(OrbitTag::KPartite, &[3; 4]).unwrap();
        assert_eq!((r.len(), r[0].value), (1, 14));
        let r = min_edge_rep(OrbitTag::KPartite, &[2; 6]).unwrap();
        assert_eq!((r[0].case, r[0].value), (CaseId::Three(1), 16));
        let r = min_edge_rep(OrbitTag::KPartite, &[2; 3]).unwrap();
        assert_eq!((r[0].case, r[0].value), (CaseId::Two(1), 6));
        assert_eq!(edge_hyperbola(4, 2), 0);
        assert_eq!(edge_hyperbola(6, 2), -5);
        assert_eq!(edge_hyperbola(6, 3), 1);
    }

    #[test]
    fn table_values_match_assignment_evaluation() {
        for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
            for ns in [vec![2, 2, 2], vec![2, 3, 5], vec![3, 3, 3, 3], vec![2, 4, 4, 6], vec![2, 2, 3, 3, 4]] {
                for r in min_edge_rep(tag, &ns).unwrap() {
                    let e: Count = edge_count_from_assignment(&ns, &r.assignment).unwrap();
                    assert_eq!(e as usize, r.value);
                    assert_eq!(r.assignment.orbit().unwrap(), tag);
                }
                for r in max_degree_candidates(tag, &ns).unwrap() {
                    assert_eq!(max_degree_from_assignment(&ns, &r.assignment).unwrap(), r.value, "{tag} {ns:?} {}", r.case);
                    assert_eq!(r.assignment.orbit().unwrap(), tag);
                }
            }
        }
    }

    #[test]
    fn degree_targets() {
        let d = |tag, ns: &[usize]| min_max_degree_rep(tag, ns).unwrap()[0].value;
        assert_eq!(d(OrbitTag::KPartite, &[5; 4]), 7);
        assert_eq!(d(OrbitTag::KPartite, &[4; 4]), 6);
        assert_eq!(d(OrbitTag::KPartite, &[3; 4]), 5);
        assert_eq!(d(OrbitTag::KPartite, &[3; 3]), 5);
        assert_eq!(d(OrbitTag::KPartite, &[2; 5]), 4);
        assert_eq!(d(OrbitTag::CliqueStar, &[4; 4]), 7);
        assert_eq!(d(OrbitTag::CliqueStar, &[2; 6]), 5);
        assert_eq!(d(OrbitTag::CliqueStar, &[3; 3]), 4);
        assert_eq!(d(OrbitTag::CliqueStar, &[2; 3]), 3);
    }
}
