use std::fmt::Write;

use weylkit::scheme::ObjectChangeDiagram;

fn quoted(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text of an object change diagram: vertices in object order,
/// then one edge statement per reflection label.
pub fn emit_dot(d: &ObjectChangeDiagram) -> String {
    let mut out = String::from("graph {\n");
    for v in &d.vertices {
        writeln!(out, "  {};", quoted(v)).unwrap();
    }
    for e in &d.edges {
        writeln!(
            out,
            "  {} -- {} [label=\"{}\"];",
            quoted(&d.vertices[e.a]),
            quoted(&d.vertices[e.b]),
            e.label + 1
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylkit::scheme::DiagramEdge;

    #[test]
    fn single_object() {
        let d = ObjectChangeDiagram { vertices: vec!["x".into()], edges: vec![] };
        assert_eq!(emit_dot(&d), "graph {\n  \"x\";\n}\n");
    }

    #[test]
    fn parallel_edges_get_one_statement_each() {
        let d = ObjectChangeDiagram {
            vertices: vec!["x".into(), "y".into(), "z".into()],
            edges: vec![
                DiagramEdge { a: 0, b: 1, label: 0 },
                DiagramEdge { a: 0, b: 1, label: 2 },
                DiagramEdge { a: 1, b: 2, label: 1 },
            ],
        };
        let text = emit_dot(&d);
        assert_eq!(text.matches(" -- ").count(), 3);
        assert!(text.contains("\"x\" -- \"y\" [label=\"3\"];"));
    }

    #[test]
    fn quotes_are_escaped() {
        let d = ObjectChangeDiagram { vertices: vec!["a\"b".into()], edges: vec![] };
        assert!(emit_dot(&d).contains("\"a\\\"b\";"));
    }
}
