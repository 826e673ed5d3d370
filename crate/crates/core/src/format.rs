//! Edge-list text and Graphviz DOT output.
//!
//! Edge-list layout: the first non-blank line declares every vertex label
//! separated by whitespace; each following non-blank line holds one edge
//! `u v`. Lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex declaration line".into(),
    })?;
    let mut b = GraphBuilder::new();
    for label in header.split_whitespace() {
        b.vertex(label).map_err(|e| Error::EdgeList {
            line: 1,
            reason: e.to_string(),
        })?;
    }
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [u, w] = parts[..] else {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected `u v`, found `{l}`"),
            });
        };
        b.edge(u, w).map_err(|e| Error::EdgeList {
            line,
            reason: e.to_string(),
        })?;
    }
    Ok(b.build())
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = g.labels().join(" ");
    out.push('\n');
    for (u, w) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(w));
    }
    out
}

/// Graphviz document. Each entry of `levels` becomes a `rank=same` group.
pub fn write_dot(g: &Graph, name: &str, levels: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for level in levels.iter().filter(|l| !l.is_empty()) {
        let members: Vec<String> = level.iter().map(|l| quote(l)).collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(w)));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "v1 v2 v3\nv1 v2\n\n# comment\nv2 v3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b\na c\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b\na b c\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("a a\n").is_err());
    }

    #[test]
    fn dot_has_one_node_statement_per_vertex() {
        let g = parse_edge_list("x y \"q\nx y\n").unwrap();
        let dot = write_dot(&g, "g", &[vec!["x".into(), "y".into()]]);
        assert!(dot.starts_with("graph \"g\" {"));
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with("\";") && !l.contains("--"))
                .count(),
            3
        );
        assert!(dot.contains("\"\\\"q\";"));
        assert!(dot.contains("{ rank=same; \"x\" \"y\" }"));
        assert!(dot.contains("\"x\" -- \"y\";"));
    }
}
