use std::fmt::Write as _;

use crate::digraph::Digraph;

fn vertex_name(g: &Digraph, v: usize) -> String {
    match g.label(v) {
        Some(c) => format!("r{}c{}", c.row, c.col),
        None => format!("v{v}"),
    }
}

/// Graphviz `digraph` text. Every vertex is declared so isolated ones survive.
pub fn digraph_to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {};", vertex_name(g, v));
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "  {} -> {};", vertex_name(g, u), vertex_name(g, v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::build_npartite;

    #[test]
    fn labeled_and_unlabeled_names() {
        let g = build_npartite(2, 1).unwrap();
        assert_eq!(digraph_to_dot(&g), "digraph G {\n  r1c1;\n  r2c1;\n  r1c1 -> r2c1;\n}\n");
        let h = Digraph::new(2, [(1, 0)]).unwrap();
        assert_eq!(digraph_to_dot(&h), "digraph G {\n  v0;\n  v1;\n  v1 -> v0;\n}\n");
    }
}
