use serde::Serialize;

use crate::error::Result;
use crate::graph::{dominated, vertex_view, Graph};
use crate::indices::Rational;

/// Sorted distances from any vertex of `C_n`: `1, 1, 2, 2, ...`.
pub fn cycle_vertex_sequence(n: usize) -> Vec<u32> {
    (1..n as u32).map(|i| i.div_ceil(2)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDomination {
    pub vertex: usize,
    /// Ascending distances to the other vertices.
    pub distances: Vec<u32>,
    /// Whether `distances` is pointwise at most the cycle sequence.
    pub dominated: bool,
    pub reciprocal_sum: Rational,
    /// `(2/n) H(C_n)`, the reciprocal sum at a cycle vertex.
    pub threshold: Rational,
}

impl VertexDomination {
    pub fn meets_threshold(&self) -> bool {
        self.reciprocal_sum >= self.threshold
    }
}

/// Compares every vertex's distance sequence against a cycle vertex's.
pub fn vertex_domination_check(g: &Graph) -> Result<Vec<VertexDomination>> {
    let n = g.order();
    let reference = cycle_vertex_sequence(n);
    let reciprocal = |ds: &[u32]| ds.iter().map(|&d| Rational::ratio(1, d as u64)).sum::<Rational>();
    let threshold = reciprocal(&reference);
    (0..n)
        .map(|v| {
            let view = vertex_view(g, v)?;
            Ok(VertexDomination {
                vertex: v,
                dominated: dominated(&view.distances, &reference),
                reciprocal_sum: reciprocal(&view.distances),
                threshold: threshold.clone(),
                distances: view.distances,
            })
        })
        .collect()
}
