//! Proper vertex colourings, Kempe changes and Kempe classes, the Klein
//! four-group edge colouring and the modular-3 edge-label group.

mod kempe;
mod klein;

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::labelling::{SearchBudget, SearchOutcome};

pub use kempe::{kempe_change, kempe_classes, KempeClasses, KEMPE_CAP_COLORS, KEMPE_CAP_ORDER};
pub use klein::{klein_edge_coloring, klein_element, shift_mod3, verify_mod3_group, EdgeColoring3, Mod3EdgeLabelling};

pub type Color = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("colouring has {got} entries for a graph of order {order}")]
    WrongLength { got: usize, order: usize },
    #[error("vertex {vertex} has colour {color} outside 1..={k}")]
    OutOfPalette { vertex: Vertex, color: Color, k: Color },
    #[error("edge {0}-{1} joins two vertices of the same colour")]
    NotProper(Vertex, Vertex),
    #[error("seed vertex {seed} is coloured {color}, not one of the swapped colours")]
    SeedColor { seed: Vertex, color: Color },
    #[error("swap colours must differ")]
    SameColors,
    #[error("graph of order {order} with {k} colours exceeds the enumeration cap")]
    Capacity { order: usize, k: Color },
    #[error("edge labellings cover different edge sets")]
    EdgeSetMismatch,
    #[error("edge label {0} is outside 1..=3")]
    BadMod3Label(u8),
    #[error("palette must have at least one colour")]
    EmptyPalette,
}

/// A proper colouring with colours `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexColoring {
    colors: Vec<Color>,
    k: Color,
}

impl VertexColoring {
    pub fn new(g: &Graph, colors: Vec<Color>, k: Color) -> Result<Self, ColorError> {
        if colors.len() != g.order() {
            return Err(ColorError::WrongLength { got: colors.len(), order: g.order() });
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColorError::OutOfPalette { vertex, color, k });
        }
        if let Some(e) = g.edges().find(|e| colors[e.ends().0] == colors[e.ends().1]) {
            return Err(ColorError::NotProper(e.ends().0, e.ends().1));
        }
        Ok(VertexColoring { colors, k })
    }

    pub(crate) fn new_unchecked(colors: Vec<Color>, k: Color) -> Self {
        VertexColoring { colors, k }
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Applies a permutation of the palette (`perm[c - 1]` is the new colour).
    pub fn permuted(&self, perm: &[Color]) -> VertexColoring {
        VertexColoring { colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(), k: self.k }
    }
}

pub fn is_proper(g: &Graph, colors: &[Color]) -> bool {
    colors.len() == g.order() && g.edges().all(|e| colors[e.ends().0] != colors[e.ends().1])
}

/// Visits every proper `k`-colouring in lexicographic order of the colour
/// vector. Returns `(nodes, completed)`.
pub fn for_each_coloring<F>(g: &Graph, k: Color, node_limit: u64, mut visit: F) -> Result<(u64, bool), ColorError>
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    if k == 0 {
        return Err(ColorError::EmptyPalette);
    }
    fn rec<F: FnMut(&[Color]) -> ControlFlow<()>>(
        g: &Graph,
        k: Color,
        v: Vertex,
        colors: &mut Vec<Color>,
        nodes: &mut u64,
        limit: u64,
        visit: &mut F,
    ) -> ControlFlow<bool> {
        if v == g.order() {
            return match visit(colors) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(false),
            };
        }
        for c in 1..=k {
            *nodes += 1;
            if *nodes > limit {
                return ControlFlow::Break(true);
            }
            if g.neighbors(v).any(|w| w < v && colors[w] == c) {
                continue;
            }
            colors.push(c);
            let flow = rec(g, k, v + 1, colors, nodes, limit, visit);
            colors.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let mut nodes = 0;
    let mut colors = Vec::with_capacity(g.order());
    let exhausted = matches!(rec(g, k, 0, &mut colors, &mut nodes, node_limit, &mut visit), ControlFlow::Break(true));
    Ok((nodes, !exhausted))
}

/// Proper `k`-colourings of `g`, up to the budget.
pub fn search_colorings(
    g: &Graph,
    k: Color,
    budget: SearchBudget,
) -> Result<SearchOutcome<VertexColoring>, ColorError> {
    let mut found = Vec::new();
    let (nodes, complete) = for_each_coloring(g, k, budget.node_limit, |c| {
        found.push(VertexColoring::new_unchecked(c.to_vec(), k));
        match budget.max_solutions {
            Some(n) if found.len() >= n => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(SearchOutcome { found, complete, nodes })
}

/// The first proper `k`-colouring in lexicographic order.
pub fn find_coloring(g: &Graph, k: Color) -> Option<VertexColoring> {
    let mut first = None;
    for_each_coloring(g, k, u64::MAX, |c| {
        first = Some(VertexColoring::new_unchecked(c.to_vec(), k));
        ControlFlow::Break(())
    })
    .ok()?;
    first
}
