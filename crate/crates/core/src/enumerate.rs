//! Exhaustive small-graph corpora, generated up to isomorphism by adding one
//! vertex at a time and discarding duplicates by canonical key.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{canonical_form, Multigraph};

/// Growth constraints for connected simple graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Growth {
    pub max_vertices: usize,
    pub max_degree: usize,
    pub max_edges: usize,
    /// Minimum degree every vertex must be able to reach in a final graph.
    pub min_final_degree: usize,
}

#[derive(Clone)]
struct Simple {
    adj: Vec<u16>,
}

impl Simple {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn key(&self) -> Vec<u8> {
        let n = self.n();
        let mut a = vec![0u32; n * n];
        for (u, row) in self.adj.iter().enumerate() {
            for v in 0..n {
                a[u * n + v] = (row >> v & 1) as u32;
            }
        }
        canonical_form(n, &a).key()
    }

    fn to_graph(&self) -> Multigraph {
        let mut pairs = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    pairs.push((u, v));
                }
            }
        }
        Multigraph::from_pairs(self.n(), &pairs).expect("pairs in range")
    }
}

impl Growth {
    /// Whether a graph on `k` vertices may still extend to a final graph on
    /// exactly `target` vertices.
    fn can_finish(&self, g: &Simple, target: usize) -> bool {
        let r = target - g.n();
        let m = g.m();
        if m > self.max_edges {
            return false;
        }
        let mut deficit = 0;
        for v in 0..g.n() {
            let d = self.min_final_degree.saturating_sub(g.deg(v));
            if d > r {
                return false;
            }
            deficit += d;
        }
        if deficit > r * self.max_degree {
            return false;
        }
        let needed = (deficit + r * self.min_final_degree).div_ceil(2);
        if m + needed > self.max_edges {
            return false;
        }
        if self.max_degree == self.min_final_degree {
            // regular target: new-new edges are determined by the deficit
            let free = r * self.max_degree - deficit;
            if free % 2 == 1 || free / 2 > r * r.saturating_sub(1) / 2 {
                return false;
            }
        }
        true
    }

    fn children(&self, g: &Simple, target: usize) -> Vec<Simple> {
        let n = g.n();
        let open: Vec<usize> = (0..n).filter(|&v| g.deg(v) < self.max_degree).collect();
        let mut out = Vec::new();
        let k = open.len();
        for mask in 1u32..(1u32 << k) {
            let size = mask.count_ones() as usize;
            if size > self.max_degree || g.m() + size > self.max_edges {
                continue;
            }
            let mut adj = g.adj.clone();
            let mut row = 0u16;
            for (i, &v) in open.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[v] |= 1 << n;
                    row |= 1 << v;
                }
            }
            adj.push(row);
            let child = Simple { adj };
            if self.can_finish(&child, target) {
                out.push(child);
            }
        }
        out
    }

    /// All connected simple graphs on exactly `target` vertices reachable
    /// under the constraints, one per isomorphism class, in a deterministic
    /// order.
    pub fn graphs_on(&self, target: usize) -> Vec<Multigraph> {
        assert!(target <= 16 && target <= self.max_vertices, "at most 16 vertices");
        if target == 0 {
            return Vec::new();
        }
        let mut level = vec![Simple { adj: vec![0] }];
        level.retain(|g| self.can_finish(g, target));
        for _ in 1..target {
            let children: Vec<(Vec<u8>, Simple)> = level
                .par_iter()
                .flat_map_iter(|g| self.children(g, target))
                .map(|c| (c.key(), c))
                .collect();
            let mut seen = HashSet::new();
            level = children
                .into_iter()
                .filter_map(|(k, c)| seen.insert(k).then_some(c))
                .collect();
        }
        level.iter().map(Simple::to_graph).collect()
    }
}

/// Connected simple graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Multigraph> {
    Growth {
        max_vertices: n,
        max_degree: n.saturating_sub(1),
        max_edges: usize::MAX / 4,
        min_final_degree: 0,
    }
    .graphs_on(n)
}

/// 3-edge-connected simple graphs on `n` vertices.
pub fn three_edge_connected(n: usize) -> Vec<Multigraph> {
    if n < 4 {
        return Vec::new();
    }
    Growth {
        max_vertices: n,
        max_degree: n - 1,
        max_edges: usize::MAX / 4,
        min_final_degree: 3,
    }
    .graphs_on(n)
    .into_iter()
    .filter(|g| g.edge_connectivity().map(|k| k >= 3).unwrap_or(false))
    .collect()
}

/// Connected bridgeless simple graphs with at least one edge and at most
/// `max_edges` edges.
pub fn bridgeless_by_edges(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 3..=max_edges.min(16) {
        let g = Growth {
            max_vertices: n,
            max_degree: n - 1,
            max_edges,
            min_final_degree: 2,
        };
        out.extend(g.graphs_on(n).into_iter().filter(|g| !g.has_bridge()));
    }
    out
}

/// Connected bridgeless simple graphs on `n` vertices.
pub fn bridgeless_on(n: usize) -> Vec<Multigraph> {
    if n < 3 {
        return Vec::new();
    }
    Growth {
        max_vertices: n,
        max_degree: n - 1,
        max_edges: usize::MAX / 4,
        min_final_degree: 2,
    }
    .graphs_on(n)
    .into_iter()
    .filter(|g| !g.has_bridge())
    .collect()
}

/// Connected cubic simple graphs on `n` vertices.
pub fn cubic(n: usize) -> Vec<Multigraph> {
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    Growth {
        max_vertices: n,
        max_degree: 3,
        max_edges: 3 * n / 2,
        min_final_degree: 3,
    }
    .graphs_on(n)
}

/// Connected bridgeless multigraphs given by multiplicity vectors: loopless
/// on 2..=`loopless_n` vertices with at most `loopless_m` edges, and with
/// loops allowed on 1..=`looped_n` vertices with at most `looped_m` edges.
pub fn small_multigraphs(loopless_n: usize, loopless_m: usize, looped_n: usize, looped_m: usize) -> Vec<Multigraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut emit = |g: Multigraph| {
        if g.m() > 0 && g.is_connected() && !g.has_bridge() && seen.insert(g.canonical_key()) {
            out.push(g);
        }
    };
    for (n_max, m_max, loops) in [(loopless_n, loopless_m, false), (looped_n, looped_m, true)] {
        for n in 1..=n_max {
            let mut slots: Vec<(usize, usize)> = Vec::new();
            for u in 0..n {
                for v in u..n {
                    if u != v || loops {
                        slots.push((u, v));
                    }
                }
            }
            let mut mult = vec![0usize; slots.len()];
            fill(&slots, &mut mult, 0, m_max, &mut |mult: &[usize]| {
                let pairs: Vec<(usize, usize)> = slots
                    .iter()
                    .zip(mult)
                    .flat_map(|(&p, &k)| std::iter::repeat_n(p, k))
                    .collect();
                emit(Multigraph::from_pairs(n, &pairs).expect("in range"));
            });
        }
    }
    out
}

/// Calls `visit` on every multiplicity vector with total at most `budget`.
fn fill(slots: &[(usize, usize)], mult: &mut Vec<usize>, i: usize, budget: usize, visit: &mut impl FnMut(&[usize])) {
    if i == slots.len() {
        visit(mult);
        return;
    }
    for k in 0..=budget {
        mult[i] = k;
        fill(slots, mult, i + 1, budget - k, visit);
    }
    mult[i] = 0;
}

/// Series reductions of bridgeless graphs, one per isomorphism class.
pub fn series_reductions(graphs: &[Multigraph]) -> Vec<Multigraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if let Ok(r) = g.series_reduce() {
            if seen.insert(r.canonical_key()) {
                out.push(r);
            }
        }
    }
    out
}
