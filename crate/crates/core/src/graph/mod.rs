//! Undirected multigraphs with loops, parallel edges and stable edge ids.

mod canon;
pub mod format;
pub mod named;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, CanonicalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("no edge with id {0}")]
    UnknownEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge (edge {0})")]
    HasBridge(usize),
    #[error("graph is not 3-edge-connected")]
    NotThreeEdgeConnected,
    #[error("graph has fewer than two vertices")]
    Trivial,
    #[error("graph is not simple")]
    NotSimple,
    #[error("malformed input at byte {offset}: {reason}")]
    MalformedInput { offset: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, GraphError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint that is not `x` (or `x` itself for a loop).
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Vertices `0..n` and an edge list kept sorted by id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Edge `i` of the slice receives id `i`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdgeId(w[0].id));
            }
        }
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// Adds an edge with id one larger than any existing id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let id = self.edges.last().map_or(0, |e| e.id + 1);
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.id).collect()
    }

    fn index_of(&self, id: usize) -> Result<usize> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map_err(|_| GraphError::UnknownEdge(id))
    }

    pub fn edge(&self, id: usize) -> Result<Edge> {
        self.index_of(id).map(|i| self.edges[i])
    }

    pub fn has_edge(&self, id: usize) -> bool {
        self.index_of(id).is_ok()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    /// For each vertex, `(edge index, other endpoint)`; a loop is listed twice.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((i, e.v));
            adj[e.v].push((i, e.u));
        }
        adj
    }

    /// Multiplicity matrix, loops on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<u32> {
        let n = self.n;
        let mut a = vec![0u32; n * n];
        for e in &self.edges {
            a[e.u * n + e.v] += 1;
            if !e.is_loop() {
                a[e.v * n + e.u] += 1;
            }
        }
        a
    }

    /// Distinct vertex pairs with an edge, collapsing parallels and dropping loops.
    pub fn simple_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect()
    }

    /// Underlying simple graph; each pair keeps the smallest id among its parallels.
    pub fn underlying_simple(&self) -> Multigraph {
        let mut best: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            best.entry((e.u.min(e.v), e.u.max(e.v))).or_insert(e.id);
        }
        let mut edges: Vec<Edge> = best.into_iter().map(|((u, v), id)| Edge { id, u, v }).collect();
        edges.sort_by_key(|e| e.id);
        Multigraph { n: self.n, edges }
    }

    pub fn delete_edge(&self, id: usize) -> Result<Multigraph> {
        let i = self.index_of(id)?;
        let mut g = self.clone();
        g.edges.remove(i);
        Ok(g)
    }

    pub fn delete_edges(&self, ids: &BTreeSet<usize>) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| !ids.contains(&e.id))
                .copied()
                .collect(),
        }
    }

    /// Identifies the endpoints of `id` and removes it; other edges between
    /// the same endpoints become loops. Contracting a loop deletes it.
    pub fn contract_edge(&self, id: usize) -> Result<Multigraph> {
        let e = self.edge(id)?;
        let g = self.delete_edge(id)?;
        if e.is_loop() {
            return Ok(g);
        }
        Ok(g.identify(&[e.u, e.v]).0)
    }

    /// Merges the given vertices into one (the smallest), renumbering the rest
    /// to stay contiguous. Returns the graph and the old-to-new vertex map.
    pub fn identify(&self, class: &[usize]) -> (Multigraph, Vec<usize>) {
        let Some(&target) = class.iter().min() else {
            return (self.clone(), (0..self.n).collect());
        };
        let merged: BTreeSet<usize> = class.iter().copied().collect();
        let mut map = vec![0; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if merged.contains(&v) && v != target {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for &v in &merged {
            map[v] = map[target];
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id,
                u: map[e.u],
                v: map[e.v],
            })
            .collect();
        (Multigraph { n: next, edges }, map)
    }

    /// Subgraph on the given vertices (renumbered in sorted order) with every
    /// edge having both ends inside; ids are kept.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut map = vec![usize::MAX; self.n];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| Edge {
                id: e.id,
                u: map[e.u],
                v: map[e.v],
            })
            .collect();
        Multigraph {
            n: sorted.len(),
            edges,
        }
    }

    /// Subgraph formed by the listed edges and their endpoints (renumbered).
    pub fn edge_subgraph(&self, ids: &BTreeSet<usize>) -> Multigraph {
        let chosen: Vec<Edge> = self.edges.iter().filter(|e| ids.contains(&e.id)).copied().collect();
        let verts: BTreeSet<usize> = chosen.iter().flat_map(|e| [e.u, e.v]).collect();
        let map: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Multigraph {
            n: verts.len(),
            edges: chosen
                .into_iter()
                .map(|e| Edge {
                    id: e.id,
                    u: map[&e.u],
                    v: map[&e.v],
                })
                .collect(),
        }
    }

    /// Vertex `perm[v]` of the result is vertex `v` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    u: perm[e.u],
                    v: perm[e.v],
                })
                .collect(),
        }
    }

    /// Edge ids renumbered `0..m` in the current order.
    pub fn renumber_edges(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| Edge { id: i, ..*e })
                .collect(),
        }
    }

    /// Disjoint union; edges of `other` get fresh ids after ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let mut g = self.clone();
        let base = g.n;
        g.n += other.n;
        for e in &other.edges {
            g.add_edge(base + e.u, base + e.v).expect("in range");
        }
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.incidence();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &(_, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Rank of the cycle matroid, `n - c`.
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// Cycle rank `m - n + c`, the rank of the cocycle matroid.
    pub fn nullity(&self) -> usize {
        self.m() + self.component_count() - self.n
    }

    fn lowpoint_scan(&self) -> LowpointScan {
        lowpoint_scan(self.n, &self.edges)
    }

    /// Ids of all cut edges.
    pub fn bridges(&self) -> BTreeSet<usize> {
        self.lowpoint_scan()
            .bridges
            .into_iter()
            .map(|i| self.edges[i].id)
            .collect()
    }

    pub fn has_bridge(&self) -> bool {
        !self.lowpoint_scan().bridges.is_empty()
    }

    /// Edge sets of the blocks (maximal 2-connected pieces). Bridges form
    /// single-edge blocks and every loop is a block of its own.
    pub fn block_edge_sets(&self) -> Vec<BTreeSet<usize>> {
        let scan = self.lowpoint_scan();
        let mut out: Vec<BTreeSet<usize>> = scan
            .blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.edges[i].id).collect())
            .collect();
        for e in self.edges.iter().filter(|e| e.is_loop()) {
            out.push(BTreeSet::from([e.id]));
        }
        out
    }

    /// Blocks as graphs of their own (see [`Multigraph::block_edge_sets`]).
    pub fn blocks(&self) -> Vec<Multigraph> {
        self.block_edge_sets()
            .iter()
            .map(|ids| self.edge_subgraph(ids))
            .collect()
    }

    /// Minimum number of edges whose removal disconnects the graph.
    pub fn edge_connectivity(&self) -> Result<usize> {
        if self.n <= 1 {
            return Err(GraphError::Trivial);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok((1..self.n)
            .map(|t| self.max_edge_disjoint_paths(0, t))
            .min()
            .expect("n >= 2"))
    }

    /// Unit-capacity max flow between two vertices.
    fn max_edge_disjoint_paths(&self, s: usize, t: usize) -> usize {
        // arc 2i: u->v, arc 2i+1: v->u; residual flow per arc in {-1,0,1}.
        let adj = self.incidence();
        let mut flow = vec![0i8; 2 * self.edges.len()];
        let mut total = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.n];
            let mut queue = VecDeque::from([s]);
            let mut reached = vec![false; self.n];
            reached[s] = true;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &(i, y) in &adj[x] {
                    if reached[y] || y == x {
                        continue;
                    }
                    let arc = if self.edges[i].u == x { 2 * i } else { 2 * i + 1 };
                    if flow[arc] < 1 {
                        reached[y] = true;
                        prev[y] = Some((x, arc));
                        queue.push_back(y);
                    }
                }
            }
            if !reached[t] {
                return total;
            }
            let mut y = t;
            while let Some((x, arc)) = prev[y] {
                flow[arc] += 1;
                flow[arc ^ 1] -= 1;
                y = x;
            }
            total += 1;
        }
    }

    /// Classes of edges that pairwise form 2-edge cutsets (series classes of
    /// the cycle matroid); only classes with at least two edges are returned.
    pub fn two_edge_cut_classes(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.edges.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let base_bridges: BTreeSet<usize> = self.lowpoint_scan().bridges.into_iter().collect();
        let mut any = false;
        for i in 0..self.edges.len() {
            if self.edges[i].is_loop() || base_bridges.contains(&i) {
                continue;
            }
            let rest: Vec<Edge> = self
                .edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, e)| *e)
                .collect();
            for b in lowpoint_scan(self.n, &rest).bridges {
                let j = if b >= i { b + 1 } else { b };
                if base_bridges.contains(&j) {
                    continue;
                }
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                    any = true;
                }
            }
        }
        if !any {
            return Vec::new();
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.edges.len() {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().push(self.edges[i].id);
        }
        let mut out: Vec<Vec<usize>> = classes.into_values().filter(|c| c.len() >= 2).collect();
        out.sort();
        out
    }

    /// Contracts all but the smallest-id edge of every series class, once.
    pub(crate) fn contract_series_once(&self) -> Option<Multigraph> {
        let classes = self.two_edge_cut_classes();
        if classes.is_empty() {
            return None;
        }
        let mut g = self.clone();
        for class in classes {
            for &id in &class[1..] {
                g = g.contract_edge(id).expect("edge present");
            }
        }
        Some(g)
    }

    /// Contracts edges of 2-edge cutsets until none remain. Loops are kept,
    /// so a cycle ends as a single vertex carrying one loop.
    pub fn series_reduce(&self) -> Result<Multigraph> {
        if let Some(&b) = self.bridges().iter().next() {
            return Err(GraphError::HasBridge(b));
        }
        let mut g = self.clone();
        while let Some(next) = g.contract_series_once() {
            g = next;
        }
        Ok(g)
    }

    /// All minimal 3-edge cutsets of a connected 3-edge-connected graph.
    pub fn minimal_three_cutsets(&self) -> Result<CutsetReport> {
        if self.n <= 1 {
            return Ok(CutsetReport { cutsets: Vec::new() });
        }
        if self.edge_connectivity()? < 3 {
            return Err(GraphError::NotThreeEdgeConnected);
        }
        let mut cutsets = Vec::new();
        for set in self.three_cut_index_sets() {
            cutsets.push(self.describe_cutset(set));
        }
        Ok(CutsetReport { cutsets })
    }

    /// Index triples (into `edges`) of minimal 3-cutsets, assuming
    /// 3-edge-connectivity; sorted and deduplicated.
    pub(crate) fn three_cut_index_sets(&self) -> Vec<[usize; 3]> {
        let m = self.edges.len();
        let mut found = BTreeSet::new();
        for i in 0..m {
            if self.edges[i].is_loop() {
                continue;
            }
            for j in (i + 1)..m {
                if self.edges[j].is_loop() {
                    continue;
                }
                let rest: Vec<Edge> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, e)| *e)
                    .collect();
                for b in lowpoint_scan(self.n, &rest).bridges {
                    let mut k = b;
                    if k >= i {
                        k += 1;
                    }
                    if k >= j {
                        k += 1;
                    }
                    let mut t = [i, j, k];
                    t.sort_unstable();
                    found.insert(t);
                }
            }
        }
        found.into_iter().collect()
    }

    pub(crate) fn describe_cutset(&self, idx: [usize; 3]) -> ThreeCutset {
        let ids: BTreeSet<usize> = idx.iter().map(|&i| self.edges[i].id).collect();
        let rest = self.delete_edges(&ids);
        let comps = rest.components();
        let side_a = comps[0].clone();
        let in_a: BTreeSet<usize> = side_a.iter().copied().collect();
        let side_b: Vec<usize> = (0..self.n).filter(|v| !in_a.contains(v)).collect();
        let edges_in = |side: &BTreeSet<usize>| rest.edges.iter().filter(|e| side.contains(&e.u)).count();
        let in_b: BTreeSet<usize> = side_b.iter().copied().collect();
        let proper = edges_in(&in_a) > 0 && edges_in(&in_b) > 0;
        let mut edges = [0; 3];
        for (slot, id) in edges.iter_mut().zip(ids) {
            *slot = id;
        }
        ThreeCutset {
            edges,
            proper,
            sides: (side_a, side_b),
        }
    }

    /// First proper minimal 3-cutset in index order, if any (3-edge-connected input).
    pub(crate) fn find_proper_three_cut(&self) -> Option<ThreeCutset> {
        let m = self.edges.len();
        for i in 0..m {
            if self.edges[i].is_loop() {
                continue;
            }
            for j in (i + 1)..m {
                if self.edges[j].is_loop() {
                    continue;
                }
                let rest: Vec<Edge> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, e)| *e)
                    .collect();
                for b in lowpoint_scan(self.n, &rest).bridges {
                    let mut k = b;
                    if k >= i {
                        k += 1;
                    }
                    if k >= j {
                        k += 1;
                    }
                    if k < j {
                        continue;
                    }
                    let cut = self.describe_cutset([i, j, k]);
                    if cut.proper {
                        return Some(cut);
                    }
                }
            }
        }
        None
    }

    /// Contracts one side of a cutset to a single vertex: the side's internal
    /// edges vanish and the cut edges attach to the new vertex.
    pub fn contract_side(&self, side: &[usize]) -> Multigraph {
        let inside: BTreeSet<usize> = side.iter().copied().collect();
        let internal: BTreeSet<usize> = self
            .edges
            .iter()
            .filter(|e| inside.contains(&e.u) && inside.contains(&e.v))
            .map(|e| e.id)
            .collect();
        self.delete_edges(&internal).identify(side).0
    }

    /// Isomorphism-invariant byte key (multiplicities and loops included).
    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_form(self.n, &self.multiplicity_matrix()).key()
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        self.n == other.n && self.m() == other.m() && self.canonical_key() == other.canonical_key()
    }

    /// Vertex counts by degree, `v_i` for each degree `i` present.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for d in self.degrees() {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }
}

/// A minimal 3-edge cutset and the two vertex sides it separates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCutset {
    pub edges: [usize; 3],
    /// Both sides keep at least one edge.
    pub proper: bool,
    pub sides: (Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetReport {
    pub cutsets: Vec<ThreeCutset>,
}

impl CutsetReport {
    pub fn proper_count(&self) -> usize {
        self.cutsets.iter().filter(|c| c.proper).count()
    }
}

struct LowpointScan {
    /// Indices into the scanned edge slice.
    bridges: Vec<usize>,
    /// Non-loop edge indices grouped by block.
    blocks: Vec<Vec<usize>>,
}

/// Iterative Hopcroft–Tarjan pass yielding bridges and blocks. Parallel edges
/// are distinguished by index, so a doubled edge is never a bridge.
fn lowpoint_scan(n: usize, edges: &[Edge]) -> LowpointScan {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        if e.is_loop() {
            continue;
        }
        adj[e.u].push((i, e.v));
        adj[e.v].push((i, e.u));
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut bridges = Vec::new();
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    // (vertex, edge used to enter it, next adjacency position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, via, pos) = *top;
            if pos < adj[v].len() {
                top.2 += 1;
                let (ei, w) = adj[v][pos];
                if ei == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push(ei);
                    stack.push((w, ei, 0));
                } else if disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push(ei);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push(via);
                    }
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == via {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    blocks.sort();
    LowpointScan { bridges, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use named::*;

    #[test]
    fn contraction_examples() {
        let tri = cycle(3);
        let c = tri.contract_edge(0).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.m(), 2);
        assert!(c.edges().iter().all(|e| !e.is_loop()));

        let mut looped = complete(3);
        let l = looped.add_edge(1, 1).unwrap();
        let c = looped.contract_edge(l).unwrap();
        assert_eq!(c, complete(3));

        let d = theta(3).delete_edge(1).unwrap();
        assert_eq!((d.n(), d.m()), (2, 2));
        assert_eq!(d.edge_ids(), vec![0, 2]);
        assert_eq!(
            theta(3).contract_edge(7),
            Err(GraphError::UnknownEdge(7))
        );
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(path(3).bridges(), BTreeSet::from([0, 1]));
        assert!(complete(4).bridges().is_empty());
        let mut g = complete(3);
        let v = g.add_vertex();
        let pendant = g.add_edge(0, v).unwrap();
        assert_eq!(g.bridges(), BTreeSet::from([pendant]));
        assert!(theta(2).bridges().is_empty());
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(complete(4).edge_connectivity(), Ok(3));
        assert_eq!(cycle(5).edge_connectivity(), Ok(2));
        assert_eq!(theta(3).edge_connectivity(), Ok(3));
        assert_eq!(
            Multigraph::new(2).edge_connectivity(),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn series_reduce_examples() {
        let c5 = cycle(5).series_reduce().unwrap();
        assert_eq!((c5.n(), c5.m(), c5.loop_count()), (1, 1, 1));
        assert_eq!(complete(4).series_reduce().unwrap(), complete(4));
        let mut sub = complete(4);
        // subdivide edge 0 = {0,1}
        let s = sub.add_vertex();
        sub = sub.delete_edge(0).unwrap();
        sub.add_edge(0, s).unwrap();
        sub.add_edge(s, 1).unwrap();
        assert!(sub.series_reduce().unwrap().is_isomorphic(&complete(4)));
        assert_eq!(path(2).series_reduce(), Err(GraphError::HasBridge(0)));
    }

    #[test]
    fn three_cutset_examples() {
        let k4 = complete(4).minimal_three_cutsets().unwrap();
        assert_eq!(k4.cutsets.len(), 4);
        assert_eq!(k4.proper_count(), 0);
        let th = theta(3).minimal_three_cutsets().unwrap();
        assert_eq!(th.cutsets.len(), 1);
        assert!(!th.cutsets[0].proper);
        assert_eq!(
            cycle(4).minimal_three_cutsets(),
            Err(GraphError::NotThreeEdgeConnected)
        );
    }

    #[test]
    fn figure_graph_has_dashed_cut() {
        let g = figure_one();
        let report = g.minimal_three_cutsets().unwrap();
        let dashed = figure_one_dashed_cut();
        let hit = report
            .cutsets
            .iter()
            .find(|c| c.edges == dashed)
            .expect("dashed cutset listed");
        assert!(hit.proper);
        let mut right = hit.sides.1.clone();
        if right.len() != 3 {
            right = hit.sides.0.clone();
        }
        assert_eq!(right, vec![2, 3, 6]);
    }

    #[test]
    fn canonical_key_examples() {
        let k4 = complete(4);
        let shuffled = k4.relabel(&[2, 0, 3, 1]);
        assert_eq!(k4.canonical_key(), shuffled.canonical_key());
        assert_ne!(k4.canonical_key(), cycle(4).canonical_key());
        assert_ne!(theta(3).canonical_key(), cycle(3).canonical_key());
        let mut a = theta(2);
        a.add_edge(0, 0).unwrap();
        let mut b = theta(2);
        b.add_edge(1, 1).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let blocks = g.block_edge_sets();
        assert_eq!(blocks.len(), 2);
        let r = g.series_reduce().unwrap();
        assert_eq!((r.n(), r.loop_count()), (1, 2));
    }

    #[test]
    fn contract_side_of_figure() {
        let g = figure_one();
        let g2 = g.contract_side(&[0, 1, 4, 5, 7, 8, 9]);
        assert!(g2.is_isomorphic(&complete(4)));
        let g1 = g.contract_side(&[2, 3, 6]);
        assert_eq!((g1.n(), g1.m()), (8, 15));
    }
}
