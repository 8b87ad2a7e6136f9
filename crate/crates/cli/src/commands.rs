//! Subcommand implementations.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use lcsplit::counting::{self, Assignment, RepSpec};
use lcsplit::families::{self, Family, FamilySpec, OrbitTag};
use lcsplit::orbit::{
    enumerate_orbit, min_edge_member, min_max_degree_member, orbit_iso_classes,
    transformation_between,
};
use lcsplit::qasst_ops::{extend, induced_qasst, lc_propagate, random_dh, Extension, ExtensionKind};
use lcsplit::split::{classify_quotient, compute_qasst, reconstruct, Node, QuotientKind};
use lcsplit::symmetry::{
    enumerate_bipartite, enumerate_cases, realize, realize_bipartite, synthesize_transformation,
    SymmetryCase,
};
use lcsplit::verify::{run_check, Suite};
use lcsplit::{BigCount, LcSequence, Qasst, SimpleGraph};
use serde_json::{json, Value};

use crate::args::{
    Cli, Command, CountAction, FamilyArgs, Format, GraphSource, OrbitAction, QasstAction,
    RepAction, SymAction,
};
use crate::output::{graph_line, graph_value, join, number, table};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<()> {
    let text = match &cli.command {
        Command::Gen { family, params, center } => gen(cli, family, params, *center)?,
        Command::Lc { source, sequence, script, pivot } => {
            let g = load_graph(source)?;
            let h = if !pivot.is_empty() {
                g.edge_pivot(pivot[0], pivot[1])?
            } else {
                let f = match script {
                    Some(path) => serde_json::from_str::<LcSequence>(&read_text(Some(path))?)
                        .map_err(|e| CliError::Usage(format!("bad LC script: {e}")))?,
                    None => LcSequence::new(sequence.clone()),
                };
                g.apply_sequence(&f)?
            };
            render_graph(cli, &h)
        }
        Command::Orbit { action } => orbit(cli, action)?,
        Command::Decompose { source } => render_qasst(cli, &compute_qasst(&load_graph(source)?)?),
        Command::Reconstruct { input } => render_graph(cli, &reconstruct(&load_qasst(input)?)?),
        Command::Qasst { action } => qasst(cli, action)?,
        Command::Count { action } => count(cli, action)?,
        Command::Rep { action } => rep(cli, action)?,
        Command::Sym { action } => sym(cli, action)?,
        Command::Verify { suite, only, timings } => return verify(cli, suite, only, *timings),
    };
    emit(cli, &text)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_text(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load_graph(source: &GraphSource) -> Result<SimpleGraph> {
    if let Some(name) = &source.family {
        let mut spec = FamilySpec::new(Family::from_str(name)?, source.params.clone());
        if let Some(r) = source.center {
            spec = spec.with_center(r);
        }
        return Ok(families::build(&spec)?);
    }
    SimpleGraph::from_json(&read_text(source.input.as_ref())?)
        .map_err(|e| CliError::Usage(format!("bad graph JSON: {e}")))
}

fn load_qasst(input: &Option<PathBuf>) -> Result<Qasst> {
    Ok(Qasst::from_json(&read_text(input.as_ref())?)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn render_graph(cli: &Cli, g: &SimpleGraph) -> String {
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => g.to_json(),
        Format::Dot => g.to_dot(),
        Format::Table => graph_line(g),
    }
}

fn node_text(n: &Node) -> String {
    match n {
        Node::Leaf(v) => v.to_string(),
        Node::Split(s) => s.to_string(),
    }
}

fn render_qasst(cli: &Cli, q: &Qasst) -> String {
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => q.to_json(),
        Format::Dot => q.to_dot(),
        Format::Table => {
            let rows: Vec<Vec<String>> = q
                .quotients()
                .iter()
                .enumerate()
                .map(|(i, quotient)| {
                    let kind = match classify_quotient(quotient, None) {
                        Ok(QuotientKind::StarSpoke { center }) => format!("star({})", node_text(&center.into())),
                        Ok(k) => k.short().to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    let nodes: Vec<String> = quotient.nodes().iter().map(node_text).collect();
                    vec![format!("Q{i}"), kind, nodes.join(" ")]
                })
                .collect();
            table(&["quotient", "kind", "nodes"], &rows)
        }
    }
}

fn render_sequence(cli: &Cli, f: &LcSequence) -> String {
    match cli.format.unwrap_or(Format::Json) {
        Format::Table => f.steps.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
        _ => serde_json::to_string(f).expect("sequence serializes"),
    }
}

fn gen(cli: &Cli, family: &str, params: &[usize], center: Option<usize>) -> Result<String> {
    let g = if matches!(family, "random-dh" | "random_dh") {
        match params {
            [n] => random_dh(*n, cli.seed)?.0,
            _ => return Err(CliError::Usage("random-dh takes one parameter".into())),
        }
    } else {
        let mut spec = FamilySpec::new(Family::from_str(family)?, params.to_vec());
        if let Some(r) = center {
            spec = spec.with_center(r);
        }
        families::build(&spec)?
    };
    Ok(render_graph(cli, &g))
}

fn orbit(cli: &Cli, action: &OrbitAction) -> Result<String> {
    let limit = cli.limit as usize;
    let format = cli.format;
    Ok(match action {
        OrbitAction::Size { source } => {
            let o = enumerate_orbit(&load_graph(source)?, limit)?;
            match format {
                Some(Format::Json) => json!({ "size": o.len() }).to_string(),
                _ => o.len().to_string(),
            }
        }
        OrbitAction::List { source } => {
            let o = enumerate_orbit(&load_graph(source)?, limit)?;
            let members = o.sorted_members();
            match format.unwrap_or(Format::Json) {
                Format::Json => {
                    pretty(&Value::Array(members.iter().map(|g| graph_value(g)).collect()))
                }
                Format::Dot => members.iter().map(|g| g.to_dot()).collect(),
                Format::Table => members.iter().map(|g| graph_line(g) + "\n").collect(),
            }
        }
        OrbitAction::MinEdge { source } | OrbitAction::MinDegree { source } => {
            let o = enumerate_orbit(&load_graph(source)?, limit)?;
            let (g, value) = if matches!(action, OrbitAction::MinEdge { .. }) {
                min_edge_member(&o)
            } else {
                min_max_degree_member(&o)
            };
            match format.unwrap_or(Format::Json) {
                Format::Json => json!({ "value": value, "graph": graph_value(&g) }).to_string(),
                Format::Dot => g.to_dot(),
                Format::Table => format!("{value}  {}", graph_line(&g)),
            }
        }
        OrbitAction::IsoClasses { source } => {
            let classes = orbit_iso_classes(&enumerate_orbit(&load_graph(source)?, limit)?)?;
            match format.unwrap_or(Format::Table) {
                Format::Json => pretty(&Value::Array(
                    classes
                        .iter()
                        .map(|c| json!({ "multiplicity": c.multiplicity, "representative": graph_value(&c.representative) }))
                        .collect(),
                )),
                Format::Dot => classes.iter().map(|c| c.representative.to_dot()).collect(),
                Format::Table => {
                    let rows: Vec<Vec<String>> = classes
                        .iter()
                        .map(|c| vec![c.multiplicity.to_string(), graph_line(&c.representative)])
                        .collect();
                    table(&["members", "representative"], &rows)
                }
            }
        }
        OrbitAction::Transform { source, to } => {
            let g = load_graph(source)?;
            let h = SimpleGraph::from_json(&read_text(Some(to))?)
                .map_err(|e| CliError::Usage(format!("bad target graph JSON: {e}")))?;
            render_sequence(cli, &transformation_between(&g, &h, limit)?)
        }
    })
}

fn qasst(cli: &Cli, action: &QasstAction) -> Result<String> {
    let q = match action {
        QasstAction::Lc { input, vertex } => lc_propagate(&load_qasst(input)?, *vertex)?,
        QasstAction::Induce { input, keep } => induced_qasst(&load_qasst(input)?, keep)?,
        QasstAction::Extend { input, kind, anchor } => {
            let q = load_qasst(input)?;
            let e = Extension { kind: ExtensionKind::from_str(kind)?, anchor: *anchor };
            extend(&q, e, q.n() + 1)?
        }
    };
    Ok(render_qasst(cli, &q))
}

/// The families the closed forms cover.
enum Formula {
    Bipartite(usize, usize),
    Multi(OrbitTag, Vec<usize>),
}

fn formula_family(fa: &FamilyArgs) -> Result<Formula> {
    let family = Family::from_str(&fa.family)?;
    match (family, fa.params.as_slice()) {
        (Family::CompleteBipartite | Family::CompleteMultipartite, [n, m]) => {
            Ok(Formula::Bipartite(*n, *m))
        }
        (Family::CompleteMultipartite, ns) => Ok(Formula::Multi(OrbitTag::KPartite, ns.to_vec())),
        (Family::CliqueStar, ns) => Ok(Formula::Multi(OrbitTag::CliqueStar, ns.to_vec())),
        (other, _) => Err(CliError::Usage(format!(
            "no closed form for {other}; use `orbit size` for the oracle"
        ))),
    }
}

fn scalar(cli: &Cli, key: &str, value: BigCount, extra: Value) -> String {
    match cli.format {
        Some(Format::Json) => {
            let mut obj = extra;
            obj[key] = number(&value);
            obj.to_string()
        }
        _ => value.to_string(),
    }
}

fn count(cli: &Cli, action: &CountAction) -> Result<String> {
    Ok(match action {
        CountAction::Orbit { family } => {
            let value: BigCount = match formula_family(family)? {
                Formula::Bipartite(n, m) => counting::bipartite_orbit_size(n, m)?,
                Formula::Multi(tag, ns) => counting::orbit_size(tag, &ns)?,
            };
            let extra = json!({ "family": family.family, "params": family.params });
            scalar(cli, "orbit_size", value, extra)
        }
        CountAction::IsoClasses { family } => {
            let value: BigCount = match formula_family(family)? {
                Formula::Bipartite(n, m) => counting::bipartite_iso_class_count(n, m)?,
                Formula::Multi(tag, ns) => {
                    if ns.windows(2).any(|w| w[0] != w[1]) {
                        return Err(CliError::Usage(
                            "isomorphism-class counts need equal part sizes".into(),
                        ));
                    }
                    counting::iso_class_count(tag, ns.len())?
                }
            };
            let extra = json!({ "family": family.family, "params": family.params });
            scalar(cli, "iso_classes", value, extra)
        }
        CountAction::Phi { source } => {
            let q = compute_qasst(&load_graph(source)?)?;
            let phi: BigCount = counting::phi_count(&q)?;
            let bound: BigCount = counting::product_bound(&q)?;
            let extra = json!({ "bound": number(&bound), "mu": number(&(&bound - &phi)) });
            scalar(cli, "phi", phi, extra)
        }
        CountAction::Bouchet { family, n } => {
            let value: BigCount = match family.as_str() {
                "path" => counting::bouchet_path_count(*n)?,
                "cycle" => counting::bouchet_cycle_count(*n)?,
                other => return Err(CliError::Usage(format!("bouchet family must be path or cycle, got {other}"))),
            };
            scalar(cli, "value", value, json!({ "family": family, "n": n }))
        }
    })
}

fn assignment_text(a: &Assignment) -> String {
    format!("Q0={} [{}]", a.central, join(&a.parts))
}

fn rep(cli: &Cli, action: &RepAction) -> Result<String> {
    let (fa, edges) = match action {
        RepAction::MinEdge { family } => (family, true),
        RepAction::MinDegree { family } => (family, false),
    };
    let format = cli.format.unwrap_or(Format::Table);
    match formula_family(fa)? {
        Formula::Bipartite(n, m) => {
            let rows = if edges {
                counting::bipartite_min_edge_rows(n, m)?
            } else {
                counting::bipartite_min_degree_rows(n, m)?
            };
            let graphs = rows
                .iter()
                .map(|(row, _)| realize_bipartite(*row, n, m, (1, n + 1)))
                .collect::<lcsplit::Result<Vec<_>>>()?;
            Ok(match format {
                Format::Json => pretty(&Value::Array(
                    rows.iter()
                        .zip(&graphs)
                        .map(|((row, v), g)| json!({ "row": row.to_string(), "value": v, "graph": graph_value(g) }))
                        .collect(),
                )),
                Format::Dot => graphs.iter().map(|g| g.to_dot()).collect(),
                Format::Table => {
                    let body: Vec<Vec<String>> = rows
                        .iter()
                        .map(|(row, v)| vec![row.to_string(), v.to_string()])
                        .collect();
                    table(&["row", "value"], &body)
                }
            })
        }
        Formula::Multi(tag, ns) => {
            let reps = if edges {
                counting::min_edge_rep(tag, &ns)?
            } else {
                counting::min_max_degree_rep(tag, &ns)?
            };
            let graphs = reps
                .iter()
                .map(|r| rep_graph(tag, &ns, r))
                .collect::<Result<Vec<_>>>()?;
            Ok(match format {
                Format::Json => pretty(&Value::Array(
                    reps.iter()
                        .zip(&graphs)
                        .map(|(r, g)| {
                            let mut v = serde_json::to_value(r).expect("rep serializes");
                            v["case_label"] = json!(r.case.to_string());
                            v["graph"] = graph_value(g);
                            v
                        })
                        .collect(),
                )),
                Format::Dot => graphs.iter().map(|g| g.to_dot()).collect(),
                Format::Table => {
                    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
                    let body: Vec<Vec<String>> = reps
                        .iter()
                        .map(|r| {
                            vec![
                                r.case.to_string(),
                                r.value.to_string(),
                                r.j.to_string(),
                                opt(r.t),
                                opt(r.l),
                                assignment_text(&r.assignment),
                            ]
                        })
                        .collect();
                    table(&["case", "value", "j", "t", "l", "assignment"], &body)
                }
            })
        }
    }
}

fn rep_graph(tag: OrbitTag, ns: &[usize], r: &RepSpec) -> Result<SimpleGraph> {
    let case = SymmetryCase::new(tag, r.case, r.assignment.spoke_set(), ns)?;
    Ok(realize(&case, ns)?)
}

fn sym(cli: &Cli, action: &SymAction) -> Result<String> {
    match action {
        SymAction::Enumerate { family } => {
            let format = cli.format.unwrap_or(Format::Table);
            match formula_family(family)? {
                Formula::Bipartite(n, m) => {
                    let rows = enumerate_bipartite(n, m)?;
                    Ok(match format {
                        Format::Json => pretty(&Value::Array(
                            rows.iter()
                                .map(|(r, c)| json!({ "row": r.to_string(), "count": number(c) }))
                                .collect(),
                        )),
                        _ => table(
                            &["row", "count"],
                            &rows.iter().map(|(r, c)| vec![r.to_string(), c.to_string()]).collect::<Vec<_>>(),
                        ),
                    })
                }
                Formula::Multi(tag, ns) => {
                    let classes = enumerate_cases(tag, &ns)?;
                    Ok(match format {
                        Format::Json => pretty(&Value::Array(
                            classes
                                .iter()
                                .map(|(c, m)| {
                                    json!({
                                        "case": c.case.to_string(),
                                        "spokes": c.spokes,
                                        "multiplicity": number(m),
                                        "assignment": assignment_text(&c.assignment(ns.len())),
                                    })
                                })
                                .collect(),
                        )),
                        _ => {
                            let total: u128 = classes.iter().map(|c| c.1).sum();
                            let mut rows: Vec<Vec<String>> = classes
                                .iter()
                                .map(|(c, m)| {
                                    vec![
                                        c.case.to_string(),
                                        format!("{{{}}}", join(&c.spokes)),
                                        m.to_string(),
                                        assignment_text(&c.assignment(ns.len())),
                                    ]
                                })
                                .collect();
                            rows.push(vec!["total".into(), String::new(), total.to_string(), String::new()]);
                            table(&["case", "I", "multiplicity", "assignment"], &rows)
                        }
                    })
                }
            }
        }
        SymAction::Transform { params, case, j, spokes, r } => {
            let id = match (case, j) {
                (1, None) => counting::CaseId::One,
                (2, Some(j)) => counting::CaseId::Two(*j),
                (3, Some(j)) => counting::CaseId::Three(*j),
                (1, Some(_)) => return Err(CliError::Usage("case 1 takes no --j".into())),
                (2 | 3, None) => return Err(CliError::Usage("cases 2 and 3 need --j".into())),
                _ => return Err(CliError::Usage("--case must be 1, 2 or 3".into())),
            };
            // the spoke parity decides the orbit
            let c = SymmetryCase::new(OrbitTag::KPartite, id, spokes.clone(), params)
                .or_else(|_| SymmetryCase::new(OrbitTag::CliqueStar, id, spokes.clone(), params))?;
            let f = synthesize_transformation(&c, params, *r)?;
            Ok(render_sequence(cli, &f))
        }
    }
}

fn verify(cli: &Cli, suite: &str, only: &[u8], timings: bool) -> Result<()> {
    let suite = Suite::from_str(suite)?;
    let ids: Vec<u8> = if only.is_empty() { (1..=10).collect() } else { only.to_vec() };
    let results: Vec<_> = ids
        .iter()
        .map(|&id| run_check(id, suite, cli.seed))
        .map(|r| if timings { r } else { r.without_timings() })
        .collect();
    let text = match cli.format.unwrap_or(Format::Table) {
        Format::Json => pretty(&serde_json::to_value(&results).expect("results serialize")),
        _ => results.iter().map(|r| format!("{r}\n")).collect(),
    };
    emit(cli, &text)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(CliError::VerifyFailed(failed));
    }
    Ok(())
}
