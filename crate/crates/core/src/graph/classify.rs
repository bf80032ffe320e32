use serde::Serialize;

use super::{bit, low_bits, Graph, GraphView};

/// Class membership of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    pub all_even_degrees: bool,
    pub eulerian: bool,
    pub two_edge_connected: bool,
    pub two_connected: bool,
    pub is_cycle: bool,
}

/// Result of one depth-first low-link pass from vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowLink {
    pub connected: bool,
    pub bridges: u32,
    pub cut_vertices: u64,
}

impl LowLink {
    pub fn compute(g: GraphView<'_>) -> LowLink {
        let rows = g.rows();
        let n = rows.len();
        let mut disc = [0u8; 64];
        let mut low = [0u8; 64];
        let mut pending = [0u64; 64];
        let mut stack = [0u8; 64];
        let mut depth = 1;
        let mut timer = 1u8;
        let mut bridges = 0;
        let mut cut_vertices = 0u64;
        let mut root_children = 0;
        let mut visited = 1u64;

        disc[0] = 1;
        low[0] = 1;
        pending[0] = rows[0];
        while depth > 0 {
            let v = stack[depth - 1] as usize;
            if pending[v] != 0 {
                let w = pending[v].trailing_zeros() as usize;
                pending[v] &= pending[v] - 1;
                if disc[w] == 0 {
                    timer += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    pending[w] = rows[w] & !bit(v);
                    visited |= bit(w);
                    stack[depth] = w as u8;
                    depth += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                } else if disc[w] < low[v] {
                    low[v] = disc[w];
                }
            } else {
                depth -= 1;
                if depth > 0 {
                    let p = stack[depth - 1] as usize;
                    if low[v] < low[p] {
                        low[p] = low[v];
                    }
                    if low[v] > disc[p] {
                        bridges += 1;
                    }
                    if p != 0 && low[v] >= disc[p] {
                        cut_vertices |= bit(p);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut_vertices |= 1;
        }
        LowLink { connected: visited == low_bits(n), bridges, cut_vertices }
    }
}

impl GraphView<'_> {
    pub fn classify(&self) -> ClassFlags {
        let n = self.order();
        let ll = LowLink::compute(*self);
        let all_even_degrees = self.rows().iter().all(|r| r.count_ones() % 2 == 0);
        let regular2 = self.rows().iter().all(|r| r.count_ones() == 2);
        ClassFlags {
            connected: ll.connected,
            all_even_degrees,
            eulerian: ll.connected && all_even_degrees,
            two_edge_connected: ll.connected && n >= 2 && ll.bridges == 0,
            two_connected: ll.connected && n >= 3 && ll.cut_vertices == 0,
            is_cycle: ll.connected && n >= 3 && regular2,
        }
    }
}

pub fn classify(g: &Graph) -> ClassFlags {
    g.view().classify()
}
