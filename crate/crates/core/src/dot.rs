//! Graphviz DOT emission for quivers and Bratteli diagrams.

use std::fmt::Write;

use crate::quiver::Quiver;
use crate::tower::BratteliDiagram;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn quiver_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in q.vertices() {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for a in q.arrows() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(q.vertex_name(a.source)),
            quote(q.vertex_name(a.target)),
            quote(&a.name)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Levels become ranks, left to right; an edge of multiplicity `c` is drawn
/// once with `xlabel=c` when `c > 1`.
pub fn bratteli_dot(d: &BratteliDiagram) -> String {
    let mut out = String::from("digraph bratteli {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    let node = |n: usize, i: usize| format!("\"L{n}_{}\"", d.vertex_names[i]);
    for (n, sizes) in d.vertex_sizes.iter().enumerate() {
        out.push_str("  { rank=same;");
        for (i, s) in sizes.iter().enumerate() {
            write!(out, " {} [label=\"{}\"];", node(n, i), s).unwrap();
        }
        out.push_str(" }\n");
    }
    for n in 0..d.vertex_sizes.len().saturating_sub(1) {
        for (j, row) in d.edge_multiplicities.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                match c {
                    0 => {}
                    1 => writeln!(out, "  {} -> {};", node(n, i), node(n + 1, j)).unwrap(),
                    _ => writeln!(out, "  {} -> {} [xlabel=\"{c}\"];", node(n, i), node(n + 1, j))
                        .unwrap(),
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tower::bratteli;

    #[test]
    fn quiver_dot_lists_arrows() {
        let dot = quiver_dot(&fixtures::fibonacci());
        assert!(dot.contains("\"1\" -> \"2\" [label=\"a\"];"));
        assert!(dot.starts_with("digraph quiver {"));
    }

    #[test]
    fn bratteli_dot_marks_multiplicity() {
        let dot = bratteli_dot(&bratteli(&fixtures::loops(2), 2));
        assert!(dot.contains("\"L0_1\" -> \"L1_1\" [xlabel=\"2\"];"));
        assert!(dot.contains("\"L2_1\" [label=\"4\"]"));
    }
}
