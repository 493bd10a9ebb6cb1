use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use super::{for_each_coloring, Color, ColorError, VertexColoring};
use crate::graph::{Graph, Vertex};

pub const KEMPE_CAP_ORDER: usize = 10;
pub const KEMPE_CAP_COLORS: Color = 4;

/// Vertices of the `{a, b}`-coloured component containing `seed`.
fn kempe_chain(g: &Graph, colors: &[Color], a: Color, b: Color, seed: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.order()];
    seen[seed] = true;
    let mut chain = vec![seed];
    let mut queue = VecDeque::from([seed]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] && (colors[w] == a || colors[w] == b) {
                seen[w] = true;
                chain.push(w);
                queue.push_back(w);
            }
        }
    }
    chain
}

/// Swaps colours `a` and `b` on the Kempe chain through `seed`.
pub fn kempe_change(
    g: &Graph,
    c: &VertexColoring,
    a: Color,
    b: Color,
    seed: Vertex,
) -> Result<VertexColoring, ColorError> {
    VertexColoring::new(g, c.colors().to_vec(), c.k())?;
    if a == b {
        return Err(ColorError::SameColors);
    }
    let sc = c.color(seed);
    if sc != a && sc != b {
        return Err(ColorError::SeedColor { seed, color: sc });
    }
    let mut colors = c.colors().to_vec();
    for v in kempe_chain(g, &colors, a, b, seed) {
        colors[v] = if colors[v] == a { b } else { a };
    }
    Ok(VertexColoring::new_unchecked(colors, c.k()))
}

/// Partition of the proper `k`-colourings into Kempe-equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeClasses {
    /// Each class sorted; classes ordered by their least member.
    pub classes: Vec<Vec<VertexColoring>>,
    pub is_kempe_graph: bool,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn kempe_classes(g: &Graph, k: Color) -> Result<KempeClasses, ColorError> {
    if g.order() > KEMPE_CAP_ORDER || k > KEMPE_CAP_COLORS {
        return Err(ColorError::Capacity { order: g.order(), k });
    }
    let mut all: Vec<Vec<Color>> = Vec::new();
    for_each_coloring(g, k, u64::MAX, |c| {
        all.push(c.to_vec());
        ControlFlow::Continue(())
    })?;
    let index: HashMap<&[Color], usize> = all.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();

    for (i, colors) in all.iter().enumerate() {
        for a in 1..=k {
            for b in a + 1..=k {
                let mut done = vec![false; g.order()];
                for seed in g.vertices() {
                    if done[seed] || (colors[seed] != a && colors[seed] != b) {
                        continue;
                    }
                    let chain = kempe_chain(g, colors, a, b, seed);
                    let mut next = colors.clone();
                    for &v in &chain {
                        done[v] = true;
                        next[v] = if next[v] == a { b } else { a };
                    }
                    let j = index[next.as_slice()];
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
    }

    let mut by_root: HashMap<usize, Vec<VertexColoring>> = HashMap::new();
    let mut roots = Vec::new();
    for (i, colors) in all.into_iter().enumerate() {
        let r = find(&mut parent, i);
        by_root
            .entry(r)
            .or_insert_with(|| {
                roots.push(r);
                Vec::new()
            })
            .push(VertexColoring::new_unchecked(colors, k));
    }
    let classes: Vec<Vec<VertexColoring>> = roots.into_iter().map(|r| by_root.remove(&r).unwrap()).collect();
    let is_kempe_graph = classes.len() == 1;
    Ok(KempeClasses { classes, is_kempe_graph })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_swap() {
        let g = Graph::path(2);
        let c = VertexColoring::new(&g, vec![1, 2], 2).unwrap();
        for seed in [0, 1] {
            assert_eq!(kempe_change(&g, &c, 1, 2, seed).unwrap().colors(), &[2, 1]);
        }
    }

    #[test]
    fn one_sided_swap() {
        // vertex 0 coloured 1 has no neighbour coloured 3
        let g = Graph::path(3);
        let c = VertexColoring::new(&g, vec![1, 2, 1], 3).unwrap();
        assert_eq!(kempe_change(&g, &c, 1, 3, 0).unwrap().colors(), &[3, 2, 1]);
    }

    #[test]
    fn errors() {
        let g = Graph::path(3);
        let c = VertexColoring::new(&g, vec![1, 2, 1], 3).unwrap();
        assert_eq!(kempe_change(&g, &c, 2, 3, 0), Err(ColorError::SeedColor { seed: 0, color: 1 }));
        assert_eq!(kempe_change(&g, &c, 1, 1, 0), Err(ColorError::SameColors));
        assert!(matches!(kempe_classes(&Graph::path(11), 3), Err(ColorError::Capacity { .. })));
    }

    #[test]
    fn small_classes() {
        let k3 = kempe_classes(&Graph::complete(3), 3).unwrap();
        assert_eq!(k3.classes.len(), 1);
        assert_eq!(k3.classes[0].len(), 6);
        assert!(k3.is_kempe_graph);

        let k2 = kempe_classes(&Graph::path(2), 2).unwrap();
        assert_eq!(k2.classes.len(), 1);
        assert_eq!(k2.classes[0].len(), 2);

        let none = kempe_classes(&Graph::complete(4), 3).unwrap();
        assert!(none.classes.is_empty());
        assert!(!none.is_kempe_graph);
    }
}
