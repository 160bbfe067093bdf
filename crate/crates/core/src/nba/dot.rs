use std::fmt::Write;

use super::Nba;

/// Graphviz rendering: accepting states get a double border and every
/// initial state an entry arrow from an invisible point node. Parallel
/// transitions with different letters are drawn as separate edges, in the
/// same order the text format uses.
pub fn to_dot(a: &Nba) -> String {
    let mut out = String::from("digraph nba {\n  rankdir=LR;\n");
    for q in 0..a.num_states() {
        let shape = if a.is_accepting(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [label=\"{q}\", shape={shape}];");
    }
    for &q in a.initial() {
        let _ = writeln!(out, "  init{q} [shape=point];");
        let _ = writeln!(out, "  init{q} -> q{q};");
    }
    for (p, l, q) in a.transitions() {
        let _ = writeln!(out, "  q{p} -> q{q} [label=\"{}\"];", a.alphabet().letter(l));
    }
    out.push_str("}\n");
    out
}
