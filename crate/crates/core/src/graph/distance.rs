use std::fmt;

use super::{bit, low_bits, Bits, Graph, GraphView};
use crate::error::{Error, Result};

/// Shortest-path length between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

pub const INFINITE: Distance = Distance::Infinite;

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// All-pairs unweighted distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    // `u8::MAX` encodes unreachable; finite distances are < 64.
    d: Vec<u8>,
}

const UNREACHED: u8 = u8::MAX;

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.d[u * self.n + v] {
            UNREACHED => Distance::Infinite,
            d => Distance::Finite(d as u32),
        }
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHED)
    }

    /// Finite distances over unordered pairs `u < v`; `None` if any pair is
    /// unreachable.
    pub fn pair_distances(&self) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.get(u, v).finite()?);
            }
        }
        Some(out)
    }
}

/// Visits the BFS layers around `source`, calling `layer(depth, mask)` for
/// every nonempty layer at depth >= 1. Returns the set of reached vertices.
#[inline(always)]
pub(crate) fn bfs_layers(rows: &[u64], source: usize, mut layer: impl FnMut(u32, u64)) -> u64 {
    let mut seen = bit(source);
    let mut frontier = seen;
    let mut depth = 0;
    loop {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        frontier = next & !seen;
        if frontier == 0 {
            return seen;
        }
        seen |= frontier;
        depth += 1;
        layer(depth, frontier);
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![UNREACHED; n * n];
    for s in 0..n {
        d[s * n + s] = 0;
        bfs_layers(g.rows(), s, |depth, layer| {
            for v in Bits(layer) {
                d[s * n + v] = depth as u8;
            }
        });
    }
    DistanceMatrix { n, d }
}

/// Sorted distances from one vertex to all others, with its eccentricity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDistanceView {
    pub source: usize,
    pub distances: Vec<u32>,
    pub eccentricity: u32,
}

pub fn vertex_view(g: &Graph, v: usize) -> Result<VertexDistanceView> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut distances = Vec::with_capacity(n - 1);
    let reached = bfs_layers(g.rows(), v, |depth, layer| {
        distances.extend(std::iter::repeat_n(depth, layer.count_ones() as usize));
    });
    if reached != low_bits(n) {
        return Err(Error::DisconnectedGraph);
    }
    let eccentricity = distances.last().copied().unwrap_or(0);
    Ok(VertexDistanceView { source: v, distances, eccentricity })
}

impl GraphView<'_> {
    /// Number of vertices at each distance from `source`, indexed by depth.
    pub fn layer_sizes(&self, source: usize) -> Vec<u32> {
        let mut sizes = vec![0u32];
        bfs_layers(self.rows(), source, |_, layer| sizes.push(layer.count_ones()));
        sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn small_distances() {
        let d = distance_matrix(&cycle(4));
        assert_eq!(d.get(0, 2), Distance::Finite(2));
        assert_eq!(d.get(0, 1), Distance::Finite(1));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(distance_matrix(&p3).get(0, 2), Distance::Finite(2));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = distance_matrix(&two);
        assert_eq!(d.get(0, 3), INFINITE);
        assert!(!d.is_connected());
        assert!(d.pair_distances().is_none());
    }

    #[test]
    fn views() {
        let v = vertex_view(&cycle(6), 4).unwrap();
        assert_eq!(v.distances, vec![1, 1, 2, 2, 3]);
        assert_eq!(v.eccentricity, 3);

        let k5 = Graph::from_edge_list(5, &(0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect::<Vec<_>>()).unwrap();
        let v = vertex_view(&k5, 2).unwrap();
        assert_eq!((v.distances, v.eccentricity), (vec![1, 1, 1, 1], 1));

        // Two triangles sharing vertex 0.
        let bouquet = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let v = vertex_view(&bouquet, 0).unwrap();
        assert_eq!((v.distances, v.eccentricity), (vec![1, 1, 1, 1], 1));

        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_view(&two, 0), Err(Error::DisconnectedGraph));
        assert!(matches!(vertex_view(&two, 4), Err(Error::VertexOutOfRange { .. })));
    }
}
