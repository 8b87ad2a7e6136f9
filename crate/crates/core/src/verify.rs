//! Cross-checks of the closed forms, decompositions and symmetry classes
//! against the brute-force orbit oracle, grouped into ten numbered checks.
//!
//! The desk suite finishes in seconds; the extended suite widens the
//! instance lists and multiplies the randomized sample counts.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::counting::{self, CaseId};
use crate::error::{Error, Result};
use crate::families::{self, OrbitTag};
use crate::graph::{is_isomorphic, LcSequence, SimpleGraph, VertexId};
use crate::orbit::{enumerate_orbit, orbit_iso_classes, Orbit};
use crate::qasst_ops::{
    extend_graph, extend_traced, induced_qasst, lc_propagate, random_dh, Extension, ExtensionCase,
    ExtensionKind,
};
use crate::split::{compute_qasst, reconstruct, Qasst};
use crate::symmetry::{
    classify_bipartite_member, classify_member, closure_step, enumerate_bipartite, enumerate_cases,
    role_of,
};
use crate::Count;

/// Orbit budget used by every check.
const LIMIT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Desk,
    Extended,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Suite::Desk),
            "extended" => Ok(Suite::Extended),
            other => Err(Error::InvalidSpec(format!("unknown suite {other:?}"))),
        }
    }
}

impl Suite {
    /// Randomized instances per property.
    fn samples(self) -> usize {
        match self {
            Suite::Desk => 200,
            Suite::Extended => 1000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    /// Wall-clock measurements, kept apart so the details are reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<String>,
}

impl CheckResult {
    /// Drops the wall-clock fields.
    pub fn without_timings(mut self) -> Self {
        self.elapsed_ms = None;
        self.timings.clear();
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title
        )?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " ({ms} ms)")?;
        }
        for d in self.details.iter().chain(&self.timings) {
            write!(f, "\n       {d}")?;
        }
        Ok(())
    }
}

pub const TITLES: [&str; 10] = [
    "bipartite K2,2 orbit and its six rows",
    "bipartite orbit sizes and binary-star minimum",
    "tripartite and clique-star orbits are disjoint and fill phi",
    "four-part orbit sizes within the time budget",
    "repeater parity membership",
    "isomorphism-class counts",
    "minimum edge and minimum maximum-degree representatives",
    "randomized property suites",
    "closure of the symmetry classes under local complement",
    "Bouchet path and cycle evaluators",
];

/// Runs one numbered check.
pub fn run_check(id: u8, suite: Suite, seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut log = Log::default();
    let outcome = match id {
        1 => check_k22(&mut log),
        2 => check_bipartite(&mut log, suite),
        3 => check_tripartite(&mut log, suite),
        4 => check_four_part(&mut log, suite),
        5 => check_repeaters(&mut log, suite),
        6 => check_iso_classes(&mut log, suite),
        7 => check_representatives(&mut log, suite),
        8 => check_properties(&mut log, suite, seed),
        9 => check_closure(&mut log, suite),
        10 => check_bouchet(&mut log, suite),
        _ => Err(Error::InvalidSpec(format!("no check {id}"))),
    };
    if let Err(e) = outcome {
        log.fail(format!("error: {e}"));
    }
    CheckResult {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("unknown"),
        passed: log.ok,
        details: log.lines,
        elapsed_ms: Some(start.elapsed().as_millis()),
        timings: log.timings,
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    (1..=10).map(|id| run_check(id, suite, seed)).collect()
}

#[derive(Default)]
struct Log {
    ok: bool,
    started: bool,
    lines: Vec<String>,
    timings: Vec<String>,
}

impl Log {
    fn note(&mut self, line: String) {
        self.lines.push(line);
    }

    fn expect(&mut self, cond: bool, line: String) {
        if !self.started {
            self.started = true;
            self.ok = true;
        }
        if cond {
            self.lines.push(line);
        } else {
            self.ok = false;
            self.lines.push(format!("MISMATCH {line}"));
        }
    }

    fn fail(&mut self, line: String) {
        self.started = true;
        self.ok = false;
        self.lines.push(line);
    }
}

fn orbit_of(g: &SimpleGraph) -> Result<Orbit> {
    enumerate_orbit(g, LIMIT)
}

fn label(ns: &[usize]) -> String {
    ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
}

fn check_k22(log: &mut Log) -> Result<()> {
    let o = orbit_of(&families::complete_bipartite(2, 2))?;
    let formula: Count = counting::bipartite_orbit_size(2, 2)?;
    log.expect(
        o.len() == 11 && o.len() as Count == formula,
        format!("|O(K2,2)| oracle {} formula {formula}", o.len()),
    );
    let mut seen: BTreeMap<String, u128> = BTreeMap::new();
    for g in o.members() {
        let (row, _) = classify_bipartite_member(g, 2, 2)?;
        *seen.entry(row.to_string()).or_default() += 1;
    }
    let expected: BTreeMap<String, u128> = enumerate_bipartite(2, 2)?
        .into_iter()
        .map(|(r, c)| (r.to_string(), c))
        .collect();
    let counts: Vec<u128> = enumerate_bipartite(2, 2)?.iter().map(|r| r.1).collect();
    log.expect(
        seen == expected && counts == vec![1, 1, 1, 2, 2, 4],
        format!("rows observed {seen:?}"),
    );
    Ok(())
}

fn is_binary_star(g: &SimpleGraph) -> bool {
    let inner: Vec<VertexId> = (1..=g.n()).filter(|&v| g.degree(v).unwrap() > 1).collect();
    g.is_connected() && g.edge_count() + 1 == g.n() && inner.len() == 2 && g.has_edge(inner[0], inner[1])
}

fn check_bipartite(log: &mut Log, suite: Suite) -> Result<()> {
    let mut cases = vec![(2, 3), (3, 3)];
    if suite == Suite::Extended {
        cases.extend([(2, 2), (2, 5), (3, 4), (4, 4)]);
    }
    for (n, m) in cases {
        let o = orbit_of(&families::complete_bipartite(n, m))?;
        let formula: Count = counting::bipartite_orbit_size(n, m)?;
        log.expect(
            o.len() as Count == formula,
            format!("|O(K{n},{m})| oracle {} formula {formula}", o.len()),
        );
        let (g, e) = crate::orbit::min_edge_member(&o);
        log.expect(
            e == n + m - 1 && is_binary_star(&g),
            format!("K{n},{m} min-edge member has {e} edges, binary star {}", is_binary_star(&g)),
        );
    }
    Ok(())
}

fn check_tripartite(log: &mut Log, suite: Suite) -> Result<()> {
    let mut cases = vec![vec![2, 2, 2]];
    if suite == Suite::Extended {
        cases.extend([vec![2, 2, 3], vec![2, 3, 3], vec![3, 3, 3], vec![2, 2, 4]]);
    }
    for ns in cases {
        let k = orbit_of(&families::complete_multipartite(&ns)?)?;
        let cs = orbit_of(&families::clique_star(&ns, 1)?)?;
        let kf: Count = counting::kpartite_orbit_size(&ns)?;
        let cf: Count = counting::clique_star_orbit_size(&ns)?;
        let phi: Count = counting::kpartite_phi(&ns)?;
        let dp: Count = counting::phi_count(&compute_qasst(k.base())?)?;
        log.expect(
            k.len() as Count == kf && cs.len() as Count == cf,
            format!("({}) oracle {} + {} formula {kf} + {cf}", label(&ns), k.len(), cs.len()),
        );
        log.expect(
            (k.len() + cs.len()) as Count == phi && dp == phi,
            format!("sum {} closed-form phi {phi} tree phi {dp}", k.len() + cs.len()),
        );
        let overlap = cs.members().iter().filter(|g| k.contains(g)).count();
        log.expect(overlap == 0, format!("orbits share {overlap} members"));
    }
    Ok(())
}

fn timed_orbit(g: &SimpleGraph) -> Result<(Orbit, Duration)> {
    let t = Instant::now();
    let o = orbit_of(g)?;
    Ok((o, t.elapsed()))
}

fn check_four_part(log: &mut Log, suite: Suite) -> Result<()> {
    let mut cases = vec![vec![2, 2, 2, 2]];
    if suite == Suite::Extended {
        cases.extend([vec![2, 2, 2, 3], vec![2, 2, 2, 2, 2], vec![3, 3, 3, 3]]);
    }
    for ns in cases {
        let (k, tk) = timed_orbit(&families::complete_multipartite(&ns)?)?;
        let (cs, tc) = timed_orbit(&families::clique_star(&ns, 1)?)?;
        let kf: Count = counting::kpartite_orbit_size(&ns)?;
        let cf: Count = counting::clique_star_orbit_size(&ns)?;
        log.expect(
            k.len() as Count == kf && cs.len() as Count == cf,
            format!("({}) oracle {} / {} formula {kf} / {cf}", label(&ns), k.len(), cs.len()),
        );
        let budget = Duration::from_secs(10);
        log.expect(tk < budget && tc < budget, "each enumeration finished within 10 s".into());
        log.timings.push(format!("({}) enumeration took {} ms / {} ms", label(&ns), tk.as_millis(), tc.as_millis()));
    }
    Ok(())
}

fn check_repeaters(log: &mut Log, suite: Suite) -> Result<()> {
    let max_k = if suite == Suite::Extended { 5 } else { 4 };
    for k in 3..=max_k {
        let ns = vec![2; k];
        let r = families::repeater(k);
        log.expect(
            r == families::multi_leaf_repeater(&ns)?,
            format!("R{k} equals MR({})", label(&ns)),
        );
        let home = families::mlr_orbit_home(k)?;
        let base = match home {
            OrbitTag::KPartite => families::complete_multipartite(&ns)?,
            OrbitTag::CliqueStar => families::clique_star(&ns, 1)?,
        };
        let o = orbit_of(&base)?;
        log.expect(o.contains(&r), format!("R{k} in the {home} orbit of ({})", label(&ns)));
    }
    Ok(())
}

fn check_iso_classes(log: &mut Log, suite: Suite) -> Result<()> {
    let mut bip = vec![(2, 2), (2, 3)];
    let mut multi = vec![(OrbitTag::KPartite, 3), (OrbitTag::CliqueStar, 3)];
    if suite == Suite::Extended {
        bip.extend([(3, 3), (2, 4)]);
        multi.extend([(OrbitTag::KPartite, 4), (OrbitTag::CliqueStar, 4)]);
    }
    for (n, m) in bip {
        let classes = orbit_iso_classes(&orbit_of(&families::complete_bipartite(n, m))?)?;
        let formula: Count = counting::bipartite_iso_class_count(n, m)?;
        log.expect(
            classes.len() as Count == formula,
            format!("O(K{n},{m}) classes oracle {} formula {formula}", classes.len()),
        );
    }
    for (tag, k) in multi {
        let ns = vec![2; k];
        let base = match tag {
            OrbitTag::KPartite => families::complete_multipartite(&ns)?,
            OrbitTag::CliqueStar => families::clique_star(&ns, 1)?,
        };
        let classes = orbit_iso_classes(&orbit_of(&base)?)?;
        let formula: Count = counting::iso_class_count(tag, k)?;
        log.expect(
            classes.len() as Count == formula,
            format!("{tag} k={k} classes oracle {} formula {formula}", classes.len()),
        );
    }
    Ok(())
}

/// Case kind without its pointer.
fn case_kind(c: CaseId) -> u8 {
    match c {
        CaseId::One => 1,
        CaseId::Two(_) => 2,
        CaseId::Three(_) => 3,
    }
}

fn rep_check(log: &mut Log, tag: OrbitTag, ns: &[usize], note: Option<usize>) -> Result<()> {
    let base = match tag {
        OrbitTag::KPartite => families::complete_multipartite(ns)?,
        OrbitTag::CliqueStar => families::clique_star(ns, 1)?,
    };
    let o = orbit_of(&base)?;
    let min_e = o.members().iter().map(|g| g.edge_count()).min().unwrap();
    let min_d = o.members().iter().map(|g| g.max_degree()).min().unwrap();
    let edge_reps = counting::min_edge_rep(tag, ns)?;
    let degree_reps = counting::min_max_degree_rep(tag, ns)?;

    let mut edge_cases = BTreeSet::new();
    let mut attained = HashSet::new();
    let mut degree_attained = HashSet::new();
    for g in o.members() {
        let e = g.edge_count();
        let d = g.max_degree();
        if e != min_e && d != min_d {
            continue;
        }
        let c = classify_member(g, ns)?;
        let a = c.assignment(ns.len());
        if e == min_e {
            edge_cases.insert(case_kind(c.case));
            attained.insert(a.clone());
        }
        if d == min_d {
            degree_attained.insert(a);
        }
    }
    let predicted_cases: BTreeSet<u8> = edge_reps.iter().map(|r| case_kind(r.case)).collect();
    let edge_ok = edge_reps.iter().all(|r| r.value == min_e && attained.contains(&r.assignment))
        && predicted_cases == edge_cases;
    log.expect(
        edge_ok,
        format!(
            "{tag} ({}) min edges oracle {min_e} cases {:?}, predicted {} cases {:?}",
            label(ns),
            edge_cases,
            edge_reps[0].value,
            edge_reps.iter().map(|r| r.case.to_string()).collect::<Vec<_>>()
        ),
    );
    let degree_ok = degree_reps
        .iter()
        .all(|r| r.value == min_d && degree_attained.contains(&r.assignment));
    let listed = note.map(|c| format!(", listed {c}")).unwrap_or_default();
    log.expect(
        degree_ok,
        format!(
            "{tag} ({}) min max-degree oracle {min_d}, predicted {} by {:?}{listed}",
            label(ns),
            degree_reps[0].value,
            degree_reps.iter().map(|r| r.case.to_string()).collect::<Vec<_>>()
        ),
    );
    if let Some(c) = note {
        if c != min_d {
            log.note(format!("note: the listed value {c} differs from the oracle minimum {min_d}"));
        }
    }
    Ok(())
}

fn check_representatives(log: &mut Log, suite: Suite) -> Result<()> {
    for (n, m) in [(2, 3), (3, 3)] {
        let o = orbit_of(&families::complete_bipartite(n, m))?;
        let min_e = o.members().iter().map(|g| g.edge_count()).min().unwrap();
        let min_d = o.members().iter().map(|g| g.max_degree()).min().unwrap();
        let er = counting::bipartite_min_edge_rows(n, m)?;
        let dr = counting::bipartite_min_degree_rows(n, m)?;
        log.expect(
            er[0].1 == min_e && dr[0].1 == min_d,
            format!(
                "K{n},{m} oracle min edges {min_e} max-degree {min_d}, predicted {} ({}) and {} ({})",
                er[0].1,
                er[0].0,
                dr[0].1,
                dr.iter().map(|r| r.0.to_string()).collect::<Vec<_>>().join(" ")
            ),
        );
    }
    // instances of the orbit-size checks
    for ns in [vec![2, 2, 2], vec![2, 2, 2, 2]] {
        for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
            rep_check(log, tag, &ns, None)?;
        }
    }
    // reference edge examples for the k-partite orbit
    for (k, n) in [(4, 3), (6, 2), (6, 3), (3, 3), (5, 2), (5, 3)] {
        rep_check(log, OrbitTag::KPartite, &vec![n; k], None)?;
    }
    // reference maximum-degree examples, with their listed values
    let degree_examples = [
        (OrbitTag::KPartite, 4, 5, 6),
        (OrbitTag::KPartite, 4, 3, 5),
        (OrbitTag::KPartite, 3, 3, 5),
        (OrbitTag::KPartite, 5, 2, 4),
        (OrbitTag::CliqueStar, 4, 4, 7),
        (OrbitTag::CliqueStar, 6, 2, 5),
        (OrbitTag::CliqueStar, 3, 3, 4),
        (OrbitTag::CliqueStar, 3, 2, 3),
    ];
    for (tag, k, n, listed) in degree_examples {
        rep_check(log, tag, &vec![n; k], Some(listed))?;
    }
    if suite == Suite::Extended {
        for ns in [vec![2, 3, 4], vec![2, 2, 3, 5], vec![3, 2, 4, 2], vec![2, 3, 3, 3, 2]] {
            for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
                rep_check(log, tag, &ns, None)?;
            }
        }
    }
    Ok(())
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    // attach each vertex to a random earlier one until connected
    for v in 2..=n {
        if g.is_connected() {
            break;
        }
        let u = rng.gen_range(1..v);
        if !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let mut labels: Vec<VertexId> = (1..=n).collect();
    labels.shuffle(rng);
    let mut g = SimpleGraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(labels[u], labels[v]).unwrap();
    }
    g
}

/// A random connected subset of `g` of size at least one.
fn random_connected_subset(rng: &mut ChaCha8Rng, g: &SimpleGraph) -> Vec<VertexId> {
    let target = rng.gen_range(1..=g.n());
    let mut kept = vec![rng.gen_range(1..=g.n())];
    while kept.len() < target {
        let frontier: Vec<VertexId> = (1..=g.n())
            .filter(|v| !kept.contains(v) && kept.iter().any(|&u| g.has_edge(u, *v)))
            .collect();
        match frontier.choose(rng) {
            Some(&v) => kept.push(v),
            None => break,
        }
    }
    kept.sort_unstable();
    kept
}

fn random_sequence(rng: &mut ChaCha8Rng, n: usize) -> LcSequence {
    let len = rng.gen_range(1..=8);
    LcSequence::new((0..len).map(|_| rng.gen_range(1..=n)).collect())
}

fn check_properties(log: &mut Log, suite: Suite, seed: u64) -> Result<()> {
    let samples = suite.samples();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut bad = 0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=14);
        let g = { let (nn, pp) = (n, rng.gen_range(0.1..0.7)); random_connected(&mut rng, nn, pp) };
        let v = rng.gen_range(1..=n);
        let h = g.local_complement(v)?;
        if h.local_complement(v)? != g || !h.is_connected() {
            bad += 1;
        }
    }
    log.expect(bad == 0, format!("LC self-inverse and connectivity: {samples} graphs, {bad} failures"));

    let mut bad = 0;
    for _ in 0..samples {
        let n = rng.gen_range(2..=12);
        let g = { let (nn, pp) = (n, rng.gen_range(0.1..0.6)); random_connected(&mut rng, nn, pp) };
        let h = g.apply_sequence(&random_sequence(&mut rng, n))?;
        if compute_qasst(&g)?.strong_splits() != compute_qasst(&h)?.strong_splits() {
            bad += 1;
        }
    }
    log.expect(bad == 0, format!("strong splits invariant under LC: {samples} graphs, {bad} failures"));

    let mut bad = 0;
    for i in 0..samples {
        let n = rng.gen_range(1..=14);
        let g = if i % 2 == 0 {
            { let (nn, pp) = (n, rng.gen_range(0.1..0.6)); random_connected(&mut rng, nn, pp) }
        } else {
            random_dh(n, rng.gen())?.0
        };
        let q = compute_qasst(&g)?;
        if reconstruct(&q)? != g || Qasst::from_json(&q.to_json())? != q {
            bad += 1;
        }
    }
    log.expect(bad == 0, format!("QASST round trip: {samples} graphs, {bad} failures"));

    let mut bad = 0;
    for i in 0..samples {
        let n = rng.gen_range(2..=12);
        let g = if i % 2 == 0 {
            random_dh(n, rng.gen())?.0
        } else {
            { let (nn, pp) = (n, rng.gen_range(0.1..0.6)); random_connected(&mut rng, nn, pp) }
        };
        let v = rng.gen_range(1..=n);
        if lc_propagate(&compute_qasst(&g)?, v)? != compute_qasst(&g.local_complement(v)?)? {
            bad += 1;
        }
    }
    log.expect(bad == 0, format!("lc_propagate equals recomputation: {samples} graphs, {bad} failures"));

    let mut bad = 0;
    for i in 0..samples {
        let n = rng.gen_range(2..=12);
        let g = if i % 2 == 0 {
            random_dh(n, rng.gen())?.0
        } else {
            { let (nn, pp) = (n, rng.gen_range(0.1..0.6)); random_connected(&mut rng, nn, pp) }
        };
        let keep = random_connected_subset(&mut rng, &g);
        let direct = compute_qasst(&g.induced_subgraph(&keep)?.graph)?;
        if induced_qasst(&compute_qasst(&g)?, &keep)? != direct {
            bad += 1;
        }
    }
    log.expect(bad == 0, format!("induced_qasst equals recomputation: {samples} graphs, {bad} failures"));

    let mut per_case: BTreeMap<ExtensionCase, usize> = ExtensionCase::all().into_iter().map(|c| (c, 0)).collect();
    let mut bad = 0;
    let mut steps = 0;
    let mut walks = 0;
    // at least `samples` walks, more until every subcase has 50 hits
    while walks < samples || (per_case.values().any(|&c| c < 50) && walks < 20 * samples) {
        let i = walks;
        walks += 1;
        // every fourth walk starts from a prime quotient
        let mut g = if i % 4 == 0 {
            families::cycle(rng.gen_range(5..=7))
        } else {
            { let (nn, pp) = (rng.gen_range(1..=6), rng.gen_range(0.2..0.7)); random_connected(&mut rng, nn, pp) }
        };
        let mut q = compute_qasst(&g)?;
        for _ in 0..rng.gen_range(1..=10) {
            let kind = [ExtensionKind::Pendant, ExtensionKind::FalseTwin, ExtensionKind::TrueTwin][rng.gen_range(0..3)];
            if g.n() == 1 && kind == ExtensionKind::FalseTwin {
                continue;
            }
            let e = Extension { kind, anchor: rng.gen_range(1..=g.n()) };
            let (next_q, case) = extend_traced(&q, e, g.n() + 1)?;
            g = extend_graph(&g, e)?;
            steps += 1;
            *per_case.get_mut(&case).unwrap() += 1;
            if reconstruct(&next_q)? != g || next_q != compute_qasst(&g)? {
                bad += 1;
            }
            q = next_q;
        }
    }
    let min_case = per_case.values().copied().min().unwrap_or(0);
    log.expect(
        bad == 0 && min_case >= 50,
        format!("one-vertex extensions: {steps} steps over {walks} walks, {bad} failures, fewest per subcase {min_case}"),
    );

    let mut bad = 0;
    let mut members = 0;
    for _ in 0..samples {
        let n = rng.gen_range(2..=9);
        let t = random_tree(&mut rng, n);
        let o = orbit_of(&t)?;
        for h in o.members() {
            if h.edge_count() + 1 == n {
                members += 1;
                if is_isomorphic(&t, h)?.is_none() {
                    bad += 1;
                }
            }
        }
    }
    log.expect(
        bad == 0,
        format!("trees in tree orbits are isomorphic: {samples} trees, {members} tree members, {bad} failures"),
    );
    Ok(())
}

fn check_closure(log: &mut Log, suite: Suite) -> Result<()> {
    let mut cases = vec![vec![2, 2, 2]];
    if suite == Suite::Extended {
        cases.extend([vec![2, 3, 2], vec![2, 2, 2, 2]]);
    }
    for ns in cases {
        for tag in [OrbitTag::KPartite, OrbitTag::CliqueStar] {
            let base = match tag {
                OrbitTag::KPartite => families::complete_multipartite(&ns)?,
                OrbitTag::CliqueStar => families::clique_star(&ns, 1)?,
            };
            let o = orbit_of(&base)?;
            let mut checked = 0;
            let mut bad = 0;
            let mut subcases = BTreeSet::new();
            for g in o.members() {
                let c = classify_member(g, &ns)?;
                for v in 1..=g.n() {
                    let role = role_of(&c, &ns, v)?;
                    let predicted = closure_step(c.case, role)?;
                    let observed = classify_member(&g.local_complement(v)?, &ns)?;
                    checked += 1;
                    let pointer_matches = match role {
                        crate::symmetry::VertexRole::NodeOfC(i) | crate::symmetry::VertexRole::NodeOfSc(i)
                            if c.case.pointer() == Some(i) => "pointer",
                        crate::symmetry::VertexRole::CenterOfSs(_) => "center",
                        crate::symmetry::VertexRole::SpokeOfSs(_) => "spoke",
                        crate::symmetry::VertexRole::NodeOfSc(_) => "sc",
                        crate::symmetry::VertexRole::NodeOfC(_) => "c",
                    };
                    subcases.insert((case_kind(c.case), pointer_matches));
                    if observed.case != predicted || observed.tag != tag {
                        bad += 1;
                    }
                }
            }
            log.expect(
                bad == 0 && checked == o.len() * g_n(&ns),
                format!(
                    "{tag} ({}): {} members x {} vertices, {bad} mispredictions, {} of 11 subcases exercised",
                    label(&ns),
                    o.len(),
                    g_n(&ns),
                    subcases.len()
                ),
            );
        }
        let total: u128 = enumerate_cases(OrbitTag::KPartite, &ns)?.iter().map(|c| c.1).sum();
        log.note(format!("({}) k-partite class multiplicities total {total}", label(&ns)));
    }
    Ok(())
}

fn g_n(ns: &[usize]) -> usize {
    ns.iter().sum()
}

fn check_bouchet(log: &mut Log, suite: Suite) -> Result<()> {
    let paths: Vec<Count> = (3..=5).map(counting::bouchet_path_count).collect::<Result<_>>()?;
    let cycles: Vec<Count> = (4..=5).map(counting::bouchet_cycle_count).collect::<Result<_>>()?;
    log.expect(paths == vec![16, 44, 120], format!("paths n=3..5: {paths:?}"));
    log.expect(cycles == vec![44, 132], format!("cycles n=4..5: {cycles:?}"));
    let max = if suite == Suite::Extended { 10 } else { 8 };
    for n in 1..=max {
        let f: Count = counting::bouchet_path_count(n)?;
        let o = orbit_of(&families::path(n))?.len();
        log.note(format!("P{n}: formula {f}, labeled orbit {o}, ratio {:.3}", f as f64 / o as f64));
    }
    for n in 3..=max {
        let f: Count = counting::bouchet_cycle_count(n)?;
        let o = orbit_of(&families::cycle(n))?.len();
        log.note(format!("C{n}: formula {f}, labeled orbit {o}, ratio {:.3}", f as f64 / o as f64));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_produce_connected_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..10 {
            assert!(random_connected(&mut rng, n, 0.1).is_connected());
            let t = random_tree(&mut rng, n);
            assert!(t.is_connected() && t.edge_count() + 1 == n);
            let keep = random_connected_subset(&mut rng, &t);
            assert!(t.induced_subgraph(&keep).unwrap().graph.is_connected());
        }
    }

    #[test]
    fn unknown_check_fails() {
        assert!(!run_check(11, Suite::Desk, 0).passed);
        assert_eq!("desk".parse::<Suite>().unwrap(), Suite::Desk);
    }
}
