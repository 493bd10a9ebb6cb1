//! Plain-text graph files.
//!
//! ```text
//! p q
//! u v [edge_label]     (q lines)
//! v vertex_label       (optional, at most p lines)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use thiserror::Error;

use super::{Edge, Graph, GraphError, Labelling, Rule, TopsnutGpw};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>, ParseError> {
    text.split_whitespace().map(|t| t.parse::<u64>().map_err(|e| syntax(line, format!("`{t}`: {e}")))).collect()
}

pub fn parse_graph_text(text: &str, rule: Rule) -> Result<TopsnutGpw, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty graph file"))?;
    let head = numbers(hl, header)?;
    let [p, q] = head[..] else {
        return Err(syntax(hl, "header must be `p q`"));
    };
    let (p, q) = (p as usize, q as usize);

    let mut graph = Graph::empty(p);
    let mut labels = Labelling::new(rule);
    for found in 0..q {
        let (ln, l) = lines.next().ok_or(ParseError::MissingEdges { expected: q, found })?;
        let nums = numbers(ln, l)?;
        let (u, v, label) = match nums[..] {
            [u, v] => (u as usize, v as usize, None),
            [u, v, x] => (u as usize, v as usize, Some(x)),
            _ => return Err(syntax(ln, "edge line must be `u v [label]`")),
        };
        graph.insert_edge(u, v).map_err(|e| syntax(ln, e.to_string()))?;
        if let Some(x) = label {
            labels.set_edge(Edge::new(u, v), x);
        }
    }
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        let [v, x] = nums[..] else {
            return Err(syntax(ln, "vertex line must be `v label`"));
        };
        let v = v as usize;
        if v >= p {
            return Err(syntax(ln, format!("vertex {v} out of range")));
        }
        if labels.vertex(v).is_some() {
            return Err(syntax(ln, format!("vertex {v} labelled twice")));
        }
        labels.set_vertex(v, x);
    }
    Ok(TopsnutGpw::new(graph, labels)?)
}

pub fn to_graph_text(gpw: &TopsnutGpw) -> String {
    let g = gpw.graph();
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let (u, v) = e.ends();
        match gpw.edge_label(e) {
            Some(x) => s.push_str(&format!("{u} {v} {x}\n")),
            None => s.push_str(&format!("{u} {v}\n")),
        }
    }
    for (v, x) in gpw.labelling().vertex_labels() {
        s.push_str(&format!("{v} {x}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labelled_path() {
        let text = "3 2\n0 1 2\n1 2 1\n0 0\n1 2\n2 1\n";
        let gpw = parse_graph_text(text, Rule::Graceful).unwrap();
        assert_eq!(gpw.graph(), &Graph::path(3));
        assert_eq!(gpw.vertex_labels(), Some(vec![0, 2, 1]));
        assert_eq!(gpw.edge_label(Edge::new(1, 2)), Some(1));
        assert_eq!(to_graph_text(&gpw), text);
    }

    #[test]
    fn unlabelled_and_partial() {
        let gpw = parse_graph_text("# comment\n3 3\n0 1\n1 2\n\n2 0\n1 5\n", Rule::Free).unwrap();
        assert_eq!(gpw.vertex_label(1), Some(5));
        assert_eq!(gpw.vertex_label(0), None);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph_text("2 1\n0 0\n", Rule::Free).unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        let err = parse_graph_text("3 2\n0 1\n", Rule::Free).unwrap_err();
        assert!(matches!(err, ParseError::MissingEdges { expected: 2, found: 1 }));
        assert!(parse_graph_text("2 1\n0 1\n0 1\n0 2\n", Rule::Free).is_err());
    }
}
