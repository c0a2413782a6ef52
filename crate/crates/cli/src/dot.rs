//! Graphviz rendering.

use std::fmt::Write;

use alon_tarsi::graph::{Digraph, Graph};
use alon_tarsi::halin::HalinGraph;

/// Vertex styling and the edge or arc list to draw.
pub struct DotInput<'a> {
    pub halin: Option<&'a HalinGraph>,
    pub graph: Option<&'a Graph>,
    pub arcs: Option<&'a Digraph>,
}

/// Outer vertices first, inner vertices as boxes, then one line per edge or
/// arc with outer-cycle edges first.
pub fn render(input: &DotInput<'_>) -> String {
    let n = input
        .arcs
        .map(Digraph::vertex_count)
        .or(input.halin.map(HalinGraph::order))
        .or(input.graph.map(Graph::vertex_count))
        .unwrap_or(0);
    let is_inner = |v: usize| input.halin.is_some_and(|h| h.is_inner(v));
    let directed = input.arcs.is_some();
    let mut s = String::new();
    let _ = writeln!(s, "{} G {{", if directed { "digraph" } else { "graph" });
    s.push_str("  node [shape=circle];\n");
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&v| (is_inner(v), v));
    for v in vertices {
        if is_inner(v) {
            let _ = writeln!(s, "  {v} [shape=box];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    let mut lines: Vec<(usize, usize)> = match (input.arcs, input.halin, input.graph) {
        (Some(d), _, _) => d.arcs().to_vec(),
        (None, Some(h), _) => h.graph().edges().to_vec(),
        (None, None, Some(g)) => g.edges().to_vec(),
        _ => Vec::new(),
    };
    lines.sort_by_key(|&(a, b)| is_inner(a) || is_inner(b));
    let sep = if directed { "->" } else { "--" };
    for (a, b) in lines {
        let _ = writeln!(s, "  {a} {sep} {b};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alon_tarsi::halin::wheel;
    use alon_tarsi::orient::construct_at_orientation;

    #[test]
    fn wheel_dot() {
        let h = wheel(3).unwrap();
        let text = render(&DotInput { halin: Some(&h), graph: None, arcs: None });
        assert!(text.starts_with("graph G {\n"));
        assert!(text.contains("  3 [shape=box];\n"));
        assert!(text.find("0 -- 1").unwrap() < text.find("3 -- 0").unwrap());
    }

    #[test]
    fn certificate_dot_has_one_arrow_per_arc() {
        let h = wheel(6).unwrap();
        let cert = construct_at_orientation(&h).unwrap();
        let d = cert.orientation().digraph();
        let text = render(&DotInput { halin: Some(&h), graph: None, arcs: Some(d) });
        assert_eq!(text.matches(" -> ").count(), d.arc_count());
        assert!(text.contains("  0 -> 1;\n"));
        assert!(text.contains("  6 [shape=box];"));
    }
}
