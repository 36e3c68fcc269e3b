use super::InstanceError;

/// An edge `{u, v}` with `u < v` carrying a color in `1..=p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

/// Colored Min-Cut instance: an edge-colored multigraph and a budget `k`.
///
/// Canonical form: vertices `0..n`, each edge stored with `u < v`, edges
/// sorted by `(u, v, color)` and identical triples merged. Parallel edges of
/// different colors are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredMultigraph {
    vertex_count: usize,
    colors: usize,
    budget: usize,
    edges: Vec<ColoredEdge>,
}

impl ColoredMultigraph {
    pub fn new(
        vertex_count: usize,
        colors: usize,
        budget: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, InstanceError> {
        if vertex_count == 0 {
            return Err(InstanceError::NoVertices);
        }
        if budget > colors {
            return Err(InstanceError::BudgetTooLarge { budget, colors });
        }
        let mut seen = vec![false; colors];
        let mut out = Vec::new();
        for (u, v, color) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(InstanceError::EndpointOutOfRange(u, v));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            if color == 0 || color > colors {
                return Err(InstanceError::ColorOutOfRange(color, colors));
            }
            seen[color - 1] = true;
            out.push(ColoredEdge { u: u.min(v), v: u.max(v), color });
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(InstanceError::EmptyColor(missing + 1));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self { vertex_count, colors, budget, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of colors `p`.
    pub fn colors(&self) -> usize {
        self.colors
    }

    /// Budget `k`: colors allowed in the cut.
    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn with_budget(&self, budget: usize) -> Result<Self, InstanceError> {
        if budget > self.colors {
            return Err(InstanceError::BudgetTooLarge { budget, colors: self.colors });
        }
        Ok(Self { budget, ..self.clone() })
    }

    /// Sorted, deduplicated colors of the edges crossing `(S, V \ S)`.
    pub fn cut_colors(&self, side: &[bool]) -> Vec<usize> {
        let mut colors: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| side[e.u] != side[e.v])
            .map(|e| e.color)
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }
}
