//! Plain-text readers and writers for graphs, vertex functions, and forms.
//!
//! Graph format: `# ...` comment lines anywhere, one `p <n>` line first
//! (declares vertices 0..n−1), then `e <u> <v>` lines. Self-loops and
//! duplicate edges are rejected with the offending line number.
//!
//! Vertex-function format: one `<vertex> <integer or p/q>` line per vertex,
//! each vertex exactly once.
//!
//! Form format: one `<v0> <v1> ... <vk> <p/q>` line per simplex; vertices
//! may come in any order (the permutation sign folds into the value), each
//! simplex at most once, unmentioned simplices are zero.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::Form;
use crate::graph::Graph;
use crate::morse::VertexFunction;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::simplicial::CliqueComplex;

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a vertex id, got {token:?}") })
}

/// Lines worth parsing: trimmed, non-empty, non-comment, 1-based numbered.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Parse the graph text format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (line, content) in significant_lines(text) {
        let mut tokens = content.split_whitespace();
        let tag = tokens.next().expect("significant lines are non-empty");
        let rest: Vec<&str> = tokens.collect();
        match (tag, graph.as_mut()) {
            ("p", None) => {
                let [n] = rest[..] else {
                    return Err(Error::Parse { line, msg: "usage: p <n>".into() });
                };
                graph = Some(Graph::new(parse_usize(n, line)?));
            }
            ("p", Some(_)) => {
                return Err(Error::Parse { line, msg: "second p line".into() });
            }
            ("e", Some(g)) => {
                let [u, v] = rest[..] else {
                    return Err(Error::Parse { line, msg: "usage: e <u> <v>".into() });
                };
                g.add_edge(parse_usize(u, line)?, parse_usize(v, line)?)
                    .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
            }
            ("e", None) => {
                return Err(Error::Parse { line, msg: "e before the p line".into() });
            }
            _ => {
                return Err(Error::Parse { line, msg: format!("unknown directive {tag:?}") });
            }
        }
    }
    graph.ok_or_else(|| Error::Input("no p line: not a graph file".into()))
}

/// Write the graph text format (edges in ascending lexicographic order).
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Parse a vertex function for a graph of the given order: every vertex
/// exactly once, injective values.
pub fn parse_vertex_function(text: &str, order: usize) -> Result<VertexFunction> {
    let mut values: Vec<Option<Rational>> = vec![None; order];
    for (line, content) in significant_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [vertex, value] = tokens[..] else {
            return Err(Error::Parse { line, msg: "usage: <vertex> <value>".into() });
        };
        let v = parse_usize(vertex, line)?;
        if v >= order {
            return Err(Error::Parse { line, msg: format!("vertex {v} out of range 0..{order}") });
        }
        if values[v].is_some() {
            return Err(Error::Parse { line, msg: format!("vertex {v} listed twice") });
        }
        values[v] = Some(
            parse_rational(value).map_err(|e| Error::Parse { line, msg: e.to_string() })?,
        );
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| Error::Input(format!("vertex {v} has no value"))))
        .collect::<Result<Vec<_>>>()?;
    VertexFunction::new(values)
}

pub fn write_vertex_function(f: &VertexFunction) -> String {
    let mut out = String::new();
    for (v, value) in f.values().iter().enumerate() {
        out.push_str(&format!("{v} {}\n", format_rational(value)));
    }
    out
}

/// Parse a form at the given level against a complex. Each line names the
/// level+1 vertices of a simplex (any order) and its value.
pub fn parse_form(text: &str, c: &CliqueComplex, level: usize) -> Result<Form> {
    let mut entries = Vec::new();
    for (line, content) in significant_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != level + 2 {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "a {level}-form line needs {} vertices and a value, got {} token(s)",
                    level + 1,
                    tokens.len()
                ),
            });
        }
        let verts = tokens[..level + 1]
            .iter()
            .map(|t| parse_usize(t, line))
            .collect::<Result<Vec<_>>>()?;
        let value = parse_rational(tokens[level + 1])
            .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        entries.push((verts, value));
    }
    Form::from_entries(c, level, entries)
}

/// Write the nonzero coefficients of a form, one simplex per line in layer
/// order (ascending vertex tuples).
pub fn write_form(c: &CliqueComplex, f: &Form) -> String {
    let layer = c.layer(f.level());
    let mut out = String::new();
    for (simplex, value) in layer.iter().zip(f.values()) {
        if !value.is_zero() {
            let ids: Vec<String> = simplex.verts().iter().map(usize::to_string).collect();
            out.push_str(&format!("{} {}\n", ids.join(" "), format_rational(value)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::simplicial::clique_complex;
    use num_traits::Zero;

    #[test]
    fn graph_round_trip_with_comments() {
        let text = "# a square\n\np 4\ne 0 1\n# chord-free\ne 1 2\ne 2 3\ne 0 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!((g.order(), g.size()), (4, 4));
        let rewritten = write_graph(&g);
        assert_eq!(parse_graph(&rewritten).unwrap(), g);
        assert_eq!(rewritten, "p 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let no_p = parse_graph("e 0 1\n");
        assert!(matches!(no_p, Err(Error::Parse { line: 1, .. })));
        let second_p = parse_graph("p 3\np 4\n");
        assert!(matches!(second_p, Err(Error::Parse { line: 2, .. })));
        let loop_edge = parse_graph("p 3\n\ne 1 1\n");
        assert!(matches!(loop_edge, Err(Error::Parse { line: 3, .. })));
        let dup = parse_graph("p 3\ne 0 1\ne 1 0\n");
        assert!(matches!(dup, Err(Error::Parse { line: 3, .. })));
        let range = parse_graph("p 3\ne 0 7\n");
        assert!(matches!(range, Err(Error::Parse { line: 2, .. })));
        let junk = parse_graph("p 3\nq 1 2\n");
        assert!(matches!(junk, Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("# only comments\n"), Err(Error::Input(_))));
    }

    #[test]
    fn vertex_function_round_trip_and_rejections() {
        let f = parse_vertex_function("2 7\n0 1/2\n1 -3\n", 3).unwrap();
        assert_eq!(f.value(0), &rat(1, 2));
        assert_eq!(f.value(2), &rat_int(7));
        let back = parse_vertex_function(&write_vertex_function(&f), 3).unwrap();
        assert_eq!(back.values(), f.values());

        assert!(matches!(
            parse_vertex_function("0 1\n0 2\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_vertex_function("0 1\n", 2), Err(Error::Input(_))));
        assert!(matches!(
            parse_vertex_function("0 1\n1 1\n", 2),
            Err(Error::NotInjective(0, 1, _))
        ));
        assert!(matches!(
            parse_vertex_function("0 1\n5 2\n", 2),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_vertex_function("0 x\n1 2\n", 2),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn form_loader_sorts_and_signs() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = clique_complex(&g, None);
        let f = parse_form("1 0 3/4\n# rest zero\n", &c, 1).unwrap();
        assert_eq!(f.value_on(&c, vec![0, 1]).unwrap(), rat(-3, 4));
        // Round trip writes the canonical representative.
        let text = write_form(&c, &f);
        assert_eq!(text, "0 1 -3/4\n");
        assert_eq!(parse_form(&text, &c, 1).unwrap(), f);
        // Zero form writes nothing, reads back as zero.
        let zero = parse_form("", &c, 1).unwrap();
        assert!(zero.is_zero());
        assert_eq!(write_form(&c, &zero), "");

        assert!(matches!(parse_form("0 1 2 1\n", &c, 1), Err(Error::Parse { line: 1, .. })));
        assert!(parse_form("0 1 1/2\n1 0 1/3\n", &c, 1).is_err(), "duplicate simplex");
        assert!(parse_form("0 0 1/2\n", &c, 1).is_err(), "repeated vertex");
        let c4 = clique_complex(&Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap(), None);
        assert!(parse_form("0 2 1\n", &c4, 1).is_err(), "absent simplex");
    }

    #[test]
    fn rationals_in_functions_stay_exact() {
        let f = parse_vertex_function("0 1/3\n1 2/3\n2 -1\n", 3).unwrap();
        let total: Rational = f.values().iter().sum();
        assert!(total.is_zero());
    }
}
