use super::{embed_triangulation, PlanarEmbedding, PlanarError};
use crate::graph::{parse_graph_text, to_graph_text, Rule, TopsnutGpw, Vertex};

/// Graph text followed by one `v: n1 n2 ... nd` line per vertex (clockwise)
/// and an `outer: a b c ...` line.
pub fn to_embedding_text(emb: &PlanarEmbedding) -> String {
    let mut s = to_graph_text(&TopsnutGpw::unlabelled(emb.graph().clone()));
    for v in emb.graph().vertices() {
        let r: Vec<String> = emb.rotation(v).iter().map(|w| w.to_string()).collect();
        s.push_str(&format!("{v}: {}\n", r.join(" ")));
    }
    let o: Vec<String> = emb.outer_face().iter().map(|w| w.to_string()).collect();
    s.push_str(&format!("outer: {}\n", o.join(" ")));
    s
}

fn numbers(line: usize, text: &str) -> Result<Vec<Vertex>, PlanarError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| PlanarError::Parse { line, msg: format!("expected a vertex, found {t:?}") }))
        .collect()
}

/// Reads [`to_embedding_text`] output. Without rotation lines the graph must
/// be a triangulation and is embedded automatically.
pub fn parse_embedding(text: &str) -> Result<PlanarEmbedding, PlanarError> {
    let mut graph_lines = Vec::new();
    let mut rotations: Vec<(usize, Vertex, Vec<Vertex>)> = Vec::new();
    let mut outer: Option<(usize, Vec<Vertex>)> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        match body.split_once(':') {
            Some(("outer", rest)) => {
                outer = Some((line, numbers(line, rest)?));
                graph_lines.push("");
            }
            Some((head, rest)) => {
                let v = head.trim().parse().map_err(|_| PlanarError::Parse {
                    line,
                    msg: format!("expected `vertex: neighbours`, found {raw:?}"),
                })?;
                rotations.push((line, v, numbers(line, rest)?));
                graph_lines.push("");
            }
            None => graph_lines.push(raw),
        }
    }
    let gpw = parse_graph_text(&graph_lines.join("\n"), Rule::Free)
        .map_err(|e| PlanarError::Parse { line: 0, msg: e.to_string() })?;
    let g = gpw.graph();

    let emb = if rotations.is_empty() {
        embed_triangulation(g)?
    } else {
        let mut rot: Vec<Option<Vec<Vertex>>> = vec![None; g.order()];
        for (line, v, r) in rotations {
            if v >= g.order() || rot[v].is_some() {
                return Err(PlanarError::Parse { line, msg: format!("vertex {v} is out of range or repeated") });
            }
            rot[v] = Some(r);
        }
        let rot: Vec<Vec<Vertex>> = rot
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| PlanarError::Parse { line: 0, msg: format!("no rotation for vertex {v}") }))
            .collect::<Result<_, _>>()?;
        let dart = (0, *rot[0].first().unwrap_or(&0));
        let emb = PlanarEmbedding::from_rotation(rot, dart)?;
        if emb.graph() != g {
            return Err(PlanarError::Parse { line: 0, msg: "rotation lines disagree with the edge list".into() });
        }
        emb
    };

    match outer {
        None => Ok(emb),
        Some((line, seq)) => {
            let bad = || PlanarError::Parse { line, msg: format!("{seq:?} is not a face") };
            if seq.len() < 2 {
                return Err(bad());
            }
            let fi = emb.face_of(seq[0], seq[1]).ok_or_else(bad)?;
            let f = emb.face(fi);
            let k = f.iter().position(|&x| x == seq[0]).unwrap();
            let cyclic: Vec<Vertex> = (0..f.len()).map(|t| f[(k + t) % f.len()]).collect();
            if cyclic != seq {
                return Err(bad());
            }
            emb.with_outer((seq[0], seq[1]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for emb in [PlanarEmbedding::octahedron(), PlanarEmbedding::wheel(6).unwrap()] {
            let text = to_embedding_text(&emb);
            let back = parse_embedding(&text).unwrap();
            assert_eq!(back.rotations(), emb.rotations());
            assert_eq!(back.outer_face(), emb.outer_face());
        }
    }

    #[test]
    fn bare_triangulation_is_embedded() {
        let text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
        let emb = parse_embedding(text).unwrap();
        assert_eq!(emb.faces().len(), 4);
    }

    #[test]
    fn bad_outer_face() {
        let mut text = to_embedding_text(&PlanarEmbedding::octahedron());
        text.push_str("outer: 0 5 1\n");
        assert!(matches!(parse_embedding(&text), Err(PlanarError::Parse { .. })));
    }
}
