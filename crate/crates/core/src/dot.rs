//! Graphviz output. Node and edge order follows index order, so equal inputs
//! give byte-identical text.

use std::fmt::Write;

use crate::covering::CoveringQuiver;
use crate::graph::BrauerGraph;
use crate::quiver::BoundQuiver;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Undirected graph; vertices are labelled with their cycle and, when it is
/// not 1, their multiplicity. Dangling half edges end in dashed stubs.
pub fn graph_dot(g: &BrauerGraph) -> String {
    let mut s = String::from("graph brauer {\n  node [shape=ellipse];\n");
    for (i, v) in g.vertices.iter().enumerate() {
        let label = if v.multiplicity == 1 { v.name.clone() } else { format!("{} ({})", v.name, v.multiplicity) };
        writeln!(s, "  v{i} [label={}];", quote(&label)).unwrap();
    }
    for e in &g.edges {
        writeln!(s, "  v{} -- v{} [label={}];", e.ends[0], e.ends[1], quote(&e.name)).unwrap();
    }
    for (k, d) in g.dangling.iter().enumerate() {
        writeln!(s, "  d{k} [shape=point];").unwrap();
        let name = &g.half_edge_names[d.half_edge.index()];
        writeln!(s, "  v{} -- d{k} [style=dashed, label={}];", d.vertex, quote(name)).unwrap();
    }
    s.push_str("}\n");
    s
}

fn quiver_body(q: &BoundQuiver, s: &mut String) {
    for (i, v) in q.vertices.iter().enumerate() {
        writeln!(s, "  v{i} [label={}];", quote(v)).unwrap();
    }
    for a in &q.arrows {
        writeln!(s, "  v{} -> v{} [label={}];", a.source, a.target, quote(&a.name)).unwrap();
    }
}

fn relations_comment(q: &BoundQuiver, s: &mut String) {
    if q.relations.is_empty() {
        return;
    }
    s.push_str("  // relations\n");
    for r in &q.relations {
        writeln!(s, "  // {}", q.display_relation(r)).unwrap();
    }
}

pub fn quiver_dot(q: &BoundQuiver) -> String {
    let mut s = String::from("digraph quiver {\n");
    quiver_body(q, &mut s);
    relations_comment(q, &mut s);
    s.push_str("}\n");
    s
}

/// The covering quiver; arrows leaving the window are dashed stubs labelled
/// with their name.
pub fn covering_dot(c: &CoveringQuiver) -> String {
    let mut s = String::from("digraph covering {\n");
    quiver_body(&c.quiver, &mut s);
    for (k, b) in c.boundary.iter().enumerate() {
        let from = c.base.arrows[b.lift.base].source + b.lift.layer * c.base.vertices.len();
        writeln!(s, "  b{k} [shape=point];").unwrap();
        writeln!(s, "  v{from} -> b{k} [style=dashed, label={}];", quote(&b.name)).unwrap();
    }
    relations_comment(&c.quiver, &mut s);
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::BrauerPermutation;

    fn fix1() -> BrauerPermutation {
        BrauerPermutation::from_cycles(
            &[&["1+", "1-", "2+"], &["2-"]],
            &[("1+", "1-"), ("2+", "2-")],
            &[("2-", 2)],
        )
        .unwrap()
    }

    #[test]
    fn graph_labels_and_edges() {
        let d = graph_dot(&fix1().brauer_graph());
        assert!(d.starts_with("graph brauer {"));
        assert!(d.contains("label=\"(1+ 1- 2+)\""));
        assert!(d.contains("label=\"(2-) (2)\""));
        assert_eq!(d.matches(" -- ").count(), 2);
    }

    #[test]
    fn quiver_lists_relations() {
        let q = fix1().bound_quiver();
        let d = quiver_dot(&q);
        assert_eq!(d.matches(" -> ").count(), q.arrows.len());
        assert_eq!(d.matches("  // ").count(), q.relations.len() + 1);
        let bare = BoundQuiver::new(vec!["x".into()], vec![], vec![]).unwrap();
        assert!(!quiver_dot(&bare).contains("relations"));
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
    }
}
