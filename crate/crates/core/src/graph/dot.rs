use std::fmt::Write;

use super::diagram::DiagGraph;

/// Graphviz rendering: vertices as black dots, gray spots feeding into their
/// vertex, white spots hanging off outgoing lines. Node names carry port
/// labels so output is stable.
pub fn to_dot(g: &DiagGraph, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "\\\""));
    s.push_str("  rankdir=BT;\n");
    s.push_str("  node [shape=circle, label=\"\", width=0.15, fixedsize=true];\n");
    s.push_str("  edge [arrowsize=0.6];\n");

    for (i, _) in g.vertices().iter().enumerate() {
        let _ = writeln!(s, "  v{} [style=filled, fillcolor=black, width=0.2];", i);
    }
    for p in g.dangling_in() {
        let _ = writeln!(s, "  p{} [style=filled, fillcolor=gray, xlabel=\"{}\"];", p, p);
    }
    for p in g.dangling_out() {
        let _ = writeln!(s, "  p{} [style=filled, fillcolor=white, xlabel=\"{}\"];", p, p);
    }

    for (i, v) in g.vertices().iter().enumerate() {
        for p in v.in_ports.iter().filter(|p| g.dangling_in().contains(p)) {
            let _ = writeln!(s, "  p{} -> v{};", p, i);
        }
        for p in v.out_ports.iter().filter(|p| g.dangling_out().contains(p)) {
            let _ = writeln!(s, "  v{} -> p{};", i, p);
        }
    }
    for (e, (from, to)) in g.edges().iter().zip(g.vertex_arcs()) {
        let _ = writeln!(
            s,
            "  v{} -> v{} [taillabel=\"{}\", headlabel=\"{}\", fontsize=8];",
            from, to, e.out_port, e.in_port
        );
    }
    s.push_str("}\n");
    s
}
