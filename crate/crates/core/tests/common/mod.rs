//! Slow, obviously-correct reference implementations shared by the
//! integration tests.
#![allow(dead_code)]

use topoidx::Graph;

/// Upper-triangle adjacency bits, pair (0,1) first, as a big-endian
/// integer; independent of the library's own key.
pub fn adjacency_word(g: &Graph) -> u64 {
    let n = g.order();
    let mut w = 0u64;
    for v in 1..n {
        for u in 0..v {
            w = (w << 1) | g.has_edge(u, v) as u64;
        }
    }
    w
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Largest adjacency word over all relabellings: a complete isomorphism
/// invariant.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edges();
    let mut best = 0u64;
    for_each_permutation(n, |p| {
        let mut w = 0u64;
        for &(u, v) in &edges {
            let (a, b) = if p[u] < p[v] { (p[u], p[v]) } else { (p[v], p[u]) };
            // Position of pair (a, b) in column order, counted from the top bit.
            let idx = b * (b - 1) / 2 + a;
            w |= 1u64 << (n * (n - 1) / 2 - 1 - idx);
        }
        best = best.max(w);
    });
    best
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

pub fn connected_without(g: &Graph, skip_vertex: Option<usize>, skip_edge: Option<(usize, usize)>) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|&v| Some(v) != skip_vertex).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if Some(v) == skip_vertex || seen[v] || !g.has_edge(u, v) {
                continue;
            }
            if skip_edge == Some((u.min(v), u.max(v))) {
                continue;
            }
            seen[v] = true;
            stack.push(v);
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn naive_connected(g: &Graph) -> bool {
    connected_without(g, None, None)
}

pub fn naive_eulerian(g: &Graph) -> bool {
    naive_connected(g) && g.degrees().iter().all(|d| d % 2 == 0)
}

pub fn naive_two_edge_connected(g: &Graph) -> bool {
    g.order() >= 2 && naive_connected(g) && g.edges().into_iter().all(|e| connected_without(g, None, Some(e)))
}

pub fn naive_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && naive_connected(g) && (0..g.order()).all(|v| connected_without(g, Some(v), None))
}

/// Number of isomorphism classes among `graphs`.
pub fn class_count<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> usize {
    let mut keys: Vec<u64> = graphs.into_iter().map(brute_canonical).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.len()
}

/// Connected even graphs up to isomorphism, orders 1..=9.
pub const EULERIAN_CLASSES: [usize; 10] = [0, 1, 0, 1, 1, 4, 8, 37, 184, 1782];
