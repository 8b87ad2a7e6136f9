//! Rendering helpers.

use std::fmt::Display;

use lcsplit::SimpleGraph;
use serde_json::Value;

/// An exact integer as a JSON number, however large.
pub fn number(x: impl Display) -> Value {
    serde_json::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

pub fn graph_value(g: &SimpleGraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("graph JSON is valid")
}

pub fn graph_line(g: &SimpleGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} {}", g.n(), edges.join(" "))
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn join<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
