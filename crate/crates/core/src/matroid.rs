//! Graph-realized matroids on at most 64 elements, their lattices of flats,
//! modular flats, supersolvability and three-point-line counts.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Multigraph};
use crate::poly::{self, IntPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("matroid has {0} elements; at most 64 are supported")]
    TooLarge(usize),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("set is not a flat")]
    NotAFlat,
    #[error("unknown element label {0}")]
    UnknownElement(usize),
    #[error("glue not present: {0}")]
    GlueNotPresent(String),
}

pub type Result<T> = std::result::Result<T, MatroidError>;

pub const MAX_FLATS: usize = 200_000;
const MAX_CIRCUIT_LIST: usize = 2_000_000;
const MAX_SEARCH_NODES: usize = 5_000_000;

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full_mask(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[derive(Debug, Clone)]
enum Backend {
    /// Spanning-forest rank of the edge subset.
    Cycle(Multigraph),
    /// `|S| - r(E) + r(E \ S)` with `r` the graph rank.
    Cocycle(Multigraph),
    Uniform { rank: usize },
}

/// A matroid realized by a backend, restricted to the elements in `ground`.
#[derive(Debug, Clone)]
pub struct Matroid {
    backend: Backend,
    /// Label (edge id) of each backend element.
    labels: Vec<usize>,
    ground: u64,
}

/// Graph rank of the edges selected by `mask`.
fn graph_rank(n: usize, edges: &[Edge], mask: u64) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut rank = 0;
    for i in bits(mask) {
        let e = edges[i];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

impl Matroid {
    fn from_graph(g: &Multigraph, cocycle: bool) -> Result<Self> {
        if g.m() > 64 {
            return Err(MatroidError::TooLarge(g.m()));
        }
        let labels = g.edge_ids();
        let ground = full_mask(g.m());
        let backend = if cocycle {
            Backend::Cocycle(g.clone())
        } else {
            Backend::Cycle(g.clone())
        };
        Ok(Matroid {
            backend,
            labels,
            ground,
        })
    }

    /// M(G): circuits are the cycles of `g`.
    pub fn cycle(g: &Multigraph) -> Result<Self> {
        Self::from_graph(g, false)
    }

    /// M⊥(G): circuits are the bonds of `g`.
    pub fn cocycle(g: &Multigraph) -> Result<Self> {
        Self::from_graph(g, true)
    }

    /// U(r, n) on labels `0..n`.
    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        if n > 64 {
            return Err(MatroidError::TooLarge(n));
        }
        Ok(Matroid {
            backend: Backend::Uniform { rank },
            labels: (0..n).collect(),
            ground: full_mask(n),
        })
    }

    pub fn ground(&self) -> u64 {
        self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.count_ones() as usize
    }

    /// Labels of the elements in `mask`, ascending by element index.
    pub fn labels_of(&self, mask: u64) -> Vec<usize> {
        bits(mask).map(|i| self.labels[i]).collect()
    }

    pub fn mask_of(&self, labels: &[usize]) -> Result<u64> {
        let mut mask = 0;
        for &l in labels {
            let i = self
                .labels
                .iter()
                .position(|&x| x == l)
                .filter(|&i| self.ground >> i & 1 == 1)
                .ok_or(MatroidError::UnknownElement(l))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// Rank of `mask ∩ ground`.
    pub fn rank_of(&self, mask: u64) -> usize {
        let s = mask & self.ground;
        match &self.backend {
            Backend::Cycle(g) => graph_rank(g.n(), g.edges(), s),
            Backend::Cocycle(g) => {
                let all = full_mask(g.m());
                let total = graph_rank(g.n(), g.edges(), all);
                s.count_ones() as usize + graph_rank(g.n(), g.edges(), all & !s) - total
            }
            Backend::Uniform { rank } => (s.count_ones() as usize).min(*rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground)
    }

    pub fn closure(&self, mask: u64) -> u64 {
        let s = mask & self.ground;
        let r = self.rank_of(s);
        let mut out = s;
        for i in bits(self.ground & !s) {
            if self.rank_of(s | 1 << i) == r {
                out |= 1 << i;
            }
        }
        out
    }

    pub fn is_flat(&self, mask: u64) -> bool {
        mask & !self.ground == 0 && self.closure(mask) == mask
    }

    pub fn restrict(&self, mask: u64) -> Matroid {
        Matroid {
            backend: self.backend.clone(),
            labels: self.labels.clone(),
            ground: self.ground & mask,
        }
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> u64 {
        bits(self.ground)
            .filter(|&i| self.rank_of(1 << i) == 0)
            .fold(0, |m, i| m | 1 << i)
    }

    /// Restriction to one element per parallel class, loops removed; the
    /// smallest element index represents each class.
    pub fn simplify(&self) -> Matroid {
        let loops = self.loops();
        let mut keep = 0u64;
        let mut covered = loops;
        for i in bits(self.ground & !loops) {
            if covered >> i & 1 == 1 {
                continue;
            }
            keep |= 1 << i;
            covered |= self.closure(1 << i);
        }
        self.restrict(keep)
    }

    pub fn is_simple(&self) -> bool {
        self.simplify().ground == self.ground
    }

    /// All flats, grouped by rank, with Möbius values from the bottom.
    pub fn flats(&self) -> Result<FlatLattice> {
        let bottom = self.closure(0);
        let r = self.rank();
        let mut levels: Vec<Vec<u64>> = vec![vec![bottom]];
        let mut total = 1;
        for k in 0..r {
            let mut next: Vec<u64> = Vec::new();
            let mut seen: HashSet<u64> = HashSet::new();
            for &f in &levels[k] {
                let mut done = f;
                for i in bits(self.ground & !f) {
                    if done >> i & 1 == 1 {
                        continue;
                    }
                    let c = self.closure(f | 1 << i);
                    done |= c;
                    if seen.insert(c) {
                        next.push(c);
                    }
                }
            }
            total += next.len();
            if total > MAX_FLATS {
                return Err(MatroidError::BudgetExceeded(format!("more than {MAX_FLATS} flats")));
            }
            next.sort_unstable();
            levels.push(next);
        }
        let mut flats = Vec::with_capacity(total);
        let mut ranks = Vec::with_capacity(total);
        for (k, level) in levels.iter().enumerate() {
            for &f in level {
                flats.push(f);
                ranks.push(k);
            }
        }
        let mut mobius: Vec<i64> = vec![0; flats.len()];
        mobius[0] = 1;
        for y in 1..flats.len() {
            let fy = flats[y];
            let mut sum = 0i64;
            for x in 0..y {
                if ranks[x] >= ranks[y] {
                    break;
                }
                if flats[x] & !fy == 0 {
                    sum += mobius[x];
                }
            }
            mobius[y] = -sum;
        }
        Ok(FlatLattice {
            rank: r,
            flats,
            ranks,
            mobius,
        })
    }

    /// Characteristic polynomial by Möbius summation over the flats; zero when
    /// the matroid has a loop.
    pub fn char_poly_mobius(&self) -> Result<IntPoly> {
        if self.loops() != 0 {
            return Ok(IntPoly::zero());
        }
        Ok(self.flats()?.characteristic_polynomial())
    }

    /// Rank-2 flats of the simplification, as masks.
    pub fn lines(&self) -> Vec<u64> {
        let s = self.simplify();
        let pts: Vec<usize> = bits(s.ground).collect();
        let mut out = BTreeSet::new();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                out.insert(s.closure(1 << a | 1 << b));
            }
        }
        out.into_iter().collect()
    }

    pub fn line_stats(&self) -> LineStats {
        let mut gamma = BTreeMap::new();
        for l in self.lines() {
            *gamma.entry(l.count_ones() as usize).or_insert(0) += 1;
        }
        LineStats { gamma }
    }

    /// Line criterion: every line `L` with `r(X ∪ L) = r(X) + 1` meets `X`.
    /// Evaluated in the simplification. Exact for copoints; below that it is
    /// only necessary (a line of `U(4,5)` passes it).
    pub fn satisfies_line_criterion(&self, x: u64) -> Result<bool> {
        if !self.is_flat(x) {
            return Err(MatroidError::NotAFlat);
        }
        let rx = self.rank_of(x);
        Ok(self
            .lines()
            .into_iter()
            .all(|l| l & x != 0 || self.rank_of(x | l) != rx + 1))
    }

    /// Whether `x` is a modular flat: the line criterion, then the rank
    /// identity for flats below copoint rank.
    pub fn is_modular_flat(&self, x: u64) -> Result<bool> {
        if !self.satisfies_line_criterion(x)? {
            return Ok(false);
        }
        if self.rank_of(x) + 1 >= self.rank() {
            return Ok(true);
        }
        self.is_modular_by_rank(x)
    }

    /// Rank identity `r(X) + r(Y) = r(X ∨ Y) + r(X ∧ Y)` over all flats `Y`.
    pub fn is_modular_by_rank(&self, x: u64) -> Result<bool> {
        if !self.is_flat(x) {
            return Err(MatroidError::NotAFlat);
        }
        Ok(self.is_modular_in(&self.flats()?, x))
    }

    /// The rank identity against a precomputed lattice of flats of `self`.
    pub fn is_modular_in(&self, lattice: &FlatLattice, x: u64) -> bool {
        let rx = self.rank_of(x);
        lattice
            .flats
            .iter()
            .zip(&lattice.ranks)
            .all(|(&y, &ry)| rx + ry == self.rank_of(x | y) + self.rank_of(x & y))
    }

    /// Hyperplanes of the restriction to `x`, from its cocircuits, shortest
    /// cocircuits first.
    fn hyperplanes_within(&self, x: u64) -> Result<Vec<u64>> {
        let mut cocircuits = match &self.backend {
            Backend::Cocycle(g) => quotient_cycles(g, x)?,
            Backend::Cycle(g) => bonds_within(g, x)?,
            Backend::Uniform { rank } => {
                let k = (x.count_ones() as usize).min(*rank);
                if k == 0 {
                    Vec::new()
                } else {
                    let size = x.count_ones() as usize - k + 1;
                    subsets_of_size(x, size)?
                }
            }
        };
        cocircuits.sort_by_key(|c| (c.count_ones(), *c));
        Ok(cocircuits.into_iter().map(|c| x & !c).collect())
    }

    /// Supersolvability of the simplification, searching for a chain of
    /// modular flats from the top down.
    pub fn supersolvable(&self) -> Result<SupersolvableReport> {
        let s = self.simplify();
        let pts: Vec<usize> = bits(s.ground).collect();
        let mut pair_closure: HashMap<(usize, usize), u64> = HashMap::new();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                pair_closure.insert((a, b), s.closure(1 << a | 1 << b));
            }
        }
        let mut search = ChainSearch {
            m: &s,
            pair_closure,
            failed: HashSet::new(),
            nodes: 0,
        };
        let chain = search.find(s.ground)?;
        Ok(match chain {
            Some(chain) => {
                let forced_roots = chain
                    .windows(2)
                    .map(|w| (w[1].count_ones() - w[0].count_ones()) as usize)
                    .collect();
                SupersolvableReport {
                    supersolvable: true,
                    chain: Some(chain.iter().map(|&f| self.labels_of(f)).collect()),
                    forced_roots: Some(forced_roots),
                }
            }
            None => SupersolvableReport {
                supersolvable: false,
                chain: None,
                forced_roots: None,
            },
        })
    }
}

struct ChainSearch<'a> {
    m: &'a Matroid,
    pair_closure: HashMap<(usize, usize), u64>,
    failed: HashSet<u64>,
    nodes: usize,
}

impl ChainSearch<'_> {
    /// A hyperplane `h` of the simple restriction to `x` is modular iff every
    /// line through two points outside `h` meets `h`.
    fn modular_hyperplane(&self, h: u64, x: u64) -> bool {
        let outside: Vec<usize> = bits(x & !h).collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i + 1..] {
                if self.pair_closure[&(a, b)] & h == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn find(&mut self, x: u64) -> Result<Option<Vec<u64>>> {
        let r = self.m.rank_of(x);
        if r <= 1 {
            return Ok(Some(if x == 0 { vec![0] } else { vec![0, x] }));
        }
        if self.failed.contains(&x) {
            return Ok(None);
        }
        for h in self.m.hyperplanes_within(x)? {
            self.nodes += 1;
            if self.nodes > MAX_SEARCH_NODES {
                return Err(MatroidError::BudgetExceeded(format!(
                    "more than {MAX_SEARCH_NODES} modular-chain candidates"
                )));
            }
            if !self.modular_hyperplane(h, x) {
                continue;
            }
            if let Some(mut chain) = self.find(h)? {
                chain.push(x);
                return Ok(Some(chain));
            }
        }
        self.failed.insert(x);
        Ok(None)
    }
}

/// Cycles of `g / (E \ x)` using only edges of `x`, as masks.
fn quotient_cycles(g: &Multigraph, x: u64) -> Result<Vec<u64>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let edges = g.edges();
    for (i, e) in edges.iter().enumerate() {
        if x >> i & 1 == 0 {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut local: BTreeMap<usize, usize> = BTreeMap::new();
    let mut qedges: Vec<(usize, usize, usize)> = Vec::new();
    for i in bits(x) {
        let e = edges[i];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        let k = local.len();
        let a = *local.entry(a).or_insert(k);
        let k = local.len();
        let b = *local.entry(b).or_insert(k);
        qedges.push((i, a, b));
    }
    simple_cycles(local.len(), &qedges)
}

/// Every cycle (loops and digons included) of a multigraph with labelled edges.
fn simple_cycles(n: usize, edges: &[(usize, usize, usize)]) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(i, a, b) in edges {
        if a == b {
            out.push(1u64 << i);
        } else {
            adj[a].push((i, b));
            adj[b].push((i, a));
        }
    }
    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize)>],
        on_path: Vec<bool>,
        out: &'a mut Vec<u64>,
        steps: usize,
    }
    impl Walk<'_> {
        fn go(&mut self, s: usize, v: usize, first: usize, mask: u64) -> Result<()> {
            self.steps += 1;
            if self.steps > MAX_CIRCUIT_LIST || self.out.len() > MAX_CIRCUIT_LIST {
                return Err(MatroidError::BudgetExceeded("too many cycles to enumerate".into()));
            }
            for &(e, w) in &self.adj[v] {
                if mask >> e & 1 == 1 {
                    continue;
                }
                if w == s {
                    if first < e {
                        self.out.push(mask | 1 << e);
                    }
                } else if w > s && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.go(s, w, first, mask | 1 << e)?;
                    self.on_path[w] = false;
                }
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        adj: &adj,
        on_path: vec![false; n],
        out: &mut out,
        steps: 0,
    };
    for s in 0..n {
        walk.on_path[s] = true;
        for &(e, w) in &adj[s] {
            if w > s {
                walk.on_path[w] = true;
                walk.go(s, w, e, 1 << e)?;
                walk.on_path[w] = false;
            }
        }
        walk.on_path[s] = false;
    }
    Ok(out)
}

/// Bonds of the spanning subgraph with edge set `x`.
fn bonds_within(g: &Multigraph, x: u64) -> Result<Vec<u64>> {
    let edges = g.edges();
    let sub_edges: Vec<Edge> = bits(x).map(|i| Edge { id: i, ..edges[i] }).collect();
    let sub = Multigraph::from_edges(g.n(), sub_edges).expect("valid subgraph");
    let mut out = Vec::new();
    for comp in sub.components() {
        if comp.len() < 2 {
            continue;
        }
        if comp.len() > 24 {
            return Err(MatroidError::BudgetExceeded(format!(
                "bond enumeration on a {}-vertex component",
                comp.len()
            )));
        }
        let k = comp.len();
        let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let inner: Vec<(usize, usize, usize)> = sub
            .edges()
            .iter()
            .filter(|e| local.contains_key(&e.u))
            .map(|e| (e.id, local[&e.u], local[&e.v]))
            .collect();
        let connected = |set: u32| -> bool {
            let Some(start) = (0..k).find(|&i| set >> i & 1 == 1) else {
                return false;
            };
            let mut seen = 1u32 << start;
            let mut changed = true;
            while changed {
                changed = false;
                for &(_, a, b) in &inner {
                    let (ia, ib) = (set >> a & 1 == 1, set >> b & 1 == 1);
                    if ia && ib && (seen >> a & 1) != (seen >> b & 1) {
                        seen |= 1 << a | 1 << b;
                        changed = true;
                    }
                }
            }
            seen == set
        };
        let all = (1u32 << k) - 1;
        for rest in 0..(1u32 << (k - 1)) {
            let side = rest << 1 | 1;
            if side == all || !connected(side) || !connected(all & !side) {
                continue;
            }
            let bond = inner
                .iter()
                .filter(|&&(_, a, b)| (side >> a & 1) != (side >> b & 1))
                .fold(0u64, |m, &(i, _, _)| m | 1 << i);
            out.push(bond);
        }
    }
    Ok(out)
}

fn subsets_of_size(x: u64, size: usize) -> Result<Vec<u64>> {
    let elems: Vec<usize> = bits(x).collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > elems.len() {
        return Ok(out);
    }
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << elems[i]));
        if out.len() > MAX_CIRCUIT_LIST {
            return Err(MatroidError::BudgetExceeded("too many subsets".into()));
        }
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if idx[i] != i + elems.len() - size {
                break;
            }
            if i == 0 {
                return Ok(out);
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    pub rank: usize,
    /// Flats sorted by rank.
    pub flats: Vec<u64>,
    pub ranks: Vec<usize>,
    /// `mu(bottom, X)` for each flat.
    pub mobius: Vec<i64>,
}

impl FlatLattice {
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::from(0); self.rank + 1];
        for (mu, &k) in self.mobius.iter().zip(&self.ranks) {
            coeffs[self.rank - k] += *mu;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn count_of_rank(&self, k: usize) -> usize {
        self.ranks.iter().filter(|&&r| r == k).count()
    }

    /// Flats covering `self.flats[i]`.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        (0..self.flats.len())
            .filter(|&j| self.ranks[j] == self.ranks[i] + 1 && self.flats[i] & !self.flats[j] == 0)
            .collect()
    }
}

/// Number of lines of each size in the simplification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineStats {
    pub gamma: BTreeMap<usize, usize>,
}

impl LineStats {
    pub fn gamma(&self, i: usize) -> usize {
        self.gamma.get(&i).copied().unwrap_or(0)
    }

    pub fn max_line(&self) -> usize {
        self.gamma.keys().next_back().copied().unwrap_or(0)
    }

    /// `sum over i >= 3 of C(i-1, 2) gamma_i`
    pub fn weighted_sum(&self) -> u64 {
        self.gamma
            .iter()
            .filter(|(&i, _)| i >= 3)
            .map(|(&i, &g)| ((i - 1) * (i - 2) / 2 * g) as u64)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersolvableReport {
    pub supersolvable: bool,
    /// Chain of modular flats from the empty flat to the whole simplification.
    pub chain: Option<Vec<Vec<usize>>>,
    /// `|X_i| - |X_(i-1)|` along the chain.
    pub forced_roots: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Glue {
    Empty,
    /// Identify edge `a` of the first graph with edge `b` of the second.
    Point { a: usize, b: usize },
    /// Identify triangle `a[i]` with `b[i]`, edge by edge.
    Line { a: [usize; 3], b: [usize; 3] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelConnection {
    pub graph: Multigraph,
    /// Some triangle has three common neighbours, so the result contains
    /// K3,3 and its cycle matroid is not cographic.
    pub k33_risk: bool,
}

/// Vertex shared by edges `e` and `f`.
fn shared_vertex(e: Edge, f: Edge) -> Option<usize> {
    [e.u, e.v].into_iter().find(|&x| x == f.u || x == f.v)
}

fn triangle_corners(g: &Multigraph, t: [usize; 3]) -> Result<[usize; 3]> {
    let edges: Vec<Edge> = t
        .iter()
        .map(|&id| g.edge(id).map_err(|_| MatroidError::GlueNotPresent(format!("edge {id} missing"))))
        .collect::<Result<_>>()?;
    let mut corners = [0; 3];
    for i in 0..3 {
        corners[i] = shared_vertex(edges[i], edges[(i + 1) % 3])
            .ok_or_else(|| MatroidError::GlueNotPresent("edges do not form a triangle".into()))?;
    }
    let distinct: BTreeSet<usize> = corners.iter().copied().collect();
    if distinct.len() != 3 || edges.iter().any(|e| e.is_loop()) {
        return Err(MatroidError::GlueNotPresent("edges do not form a triangle".into()));
    }
    Ok(corners)
}

/// Cycle-matroid parallel connection realized by gluing graphs along an
/// edge or triangle (or taking the disjoint union for the empty glue).
/// Edges of `g2` are renumbered after those of `g1`; glued edges of `g2` vanish.
pub fn parallel_connection(g1: &Multigraph, g2: &Multigraph, glue: &Glue) -> Result<ParallelConnection> {
    let mut map: Vec<Option<usize>> = vec![None; g2.n()];
    let mut dropped: BTreeSet<usize> = BTreeSet::new();
    match glue {
        Glue::Empty => {}
        Glue::Point { a, b } => {
            let ea = g1
                .edge(*a)
                .map_err(|_| MatroidError::GlueNotPresent(format!("edge {a} missing")))?;
            let eb = g2
                .edge(*b)
                .map_err(|_| MatroidError::GlueNotPresent(format!("edge {b} missing")))?;
            if ea.is_loop() || eb.is_loop() {
                return Err(MatroidError::GlueNotPresent("loops cannot be glued".into()));
            }
            map[eb.u] = Some(ea.u);
            map[eb.v] = Some(ea.v);
            dropped.insert(*b);
        }
        Glue::Line { a, b } => {
            let ca = triangle_corners(g1, *a)?;
            let cb = triangle_corners(g2, *b)?;
            for i in 0..3 {
                map[cb[i]] = Some(ca[i]);
            }
            dropped.extend(b.iter().copied());
        }
    }
    let mut g = g1.clone();
    for slot in map.iter_mut() {
        if slot.is_none() {
            *slot = Some(g.add_vertex());
        }
    }
    for e in g2.edges() {
        if !dropped.contains(&e.id) {
            g.add_edge(map[e.u].expect("mapped"), map[e.v].expect("mapped"))
                .expect("in range");
        }
    }
    let k33_risk = has_triangle_with_three_apexes(&g);
    Ok(ParallelConnection { graph: g, k33_risk })
}

fn has_triangle_with_three_apexes(g: &Multigraph) -> bool {
    let pairs = g.simple_pairs();
    let adj = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
    for &(a, b) in &pairs {
        for c in (b + 1)..g.n() {
            if adj(a, c) && adj(b, c) {
                let apexes = (0..g.n())
                    .filter(|&x| x != a && x != b && x != c && adj(x, a) && adj(x, b) && adj(x, c))
                    .count();
                if apexes >= 3 {
                    return true;
                }
            }
        }
    }
    false
}

/// Which lower bound on three-point lines is being tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCase {
    /// `3r - 3` elements, real roots: at least `3r - 5` three-point lines.
    FullReal,
    /// `3r - 3 - delta` elements, integer roots: at least `3r - 5 - 2 delta`.
    DeficientIntegral,
    /// `c(r - 2) + 3` elements, real roots, connected.
    WeightedShifted,
    /// `c(r - 1) + 1` elements, real roots, connected.
    Weighted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCheck {
    pub case: BoundCase,
    pub c: Option<i64>,
    /// Hypotheses that fail; the bound is only claimed when this is empty.
    pub failed_hypotheses: Vec<String>,
    pub measured: i64,
    pub bound: i64,
    pub slack: i64,
    pub equality: bool,
    /// Whether the characteristic polynomial has the extremal form.
    pub extremal_form: bool,
}

impl CaseCheck {
    pub fn applies(&self) -> bool {
        self.failed_hypotheses.is_empty()
    }

    /// Bound holds and equality coincides with the extremal form.
    pub fn consistent(&self) -> bool {
        !self.applies() || (self.slack >= 0 && self.equality == self.extremal_form)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCircuitReport {
    pub elements: usize,
    pub rank: usize,
    pub delta: i64,
    pub lines: LineStats,
    pub chi: IntPoly,
    pub chi_at_two_zero: bool,
    pub real_roots: bool,
    pub integral_roots: bool,
    pub connected: bool,
    pub cases: Vec<CaseCheck>,
}

impl ThreeCircuitReport {
    pub fn consistent(&self) -> bool {
        self.cases.iter().all(CaseCheck::consistent)
    }

    pub fn case(&self, case: BoundCase) -> Option<&CaseCheck> {
        self.cases.iter().find(|c| c.case == case)
    }
}

fn extremal(factors: &[(i64, i64)]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, &(root, mult)| {
        if mult <= 0 {
            acc
        } else {
            &acc * &IntPoly::from_i64(&[-root, 1]).pow(mult as usize)
        }
    })
}

/// Measures the hypotheses and conclusions of the three-point-line bounds on
/// the simplification of `m`. `chi_hint` replaces the Möbius computation
/// when the characteristic polynomial is already known.
pub fn three_circuit_bound_check(m: &Matroid, chi_hint: Option<&IntPoly>) -> Result<ThreeCircuitReport> {
    let s = m.simplify();
    let e = s.size() as i64;
    let r = s.rank() as i64;
    let delta = 3 * r - 3 - e;
    let lines = s.line_stats();
    let chi = match chi_hint {
        Some(p) => p.clone(),
        None => s.char_poly_mobius()?,
    };
    let chi_at_two_zero = chi.eval_i64(2) == BigInt::from(0);
    let real_roots = !chi.is_zero() && poly::all_roots_real(&chi);
    let integral_roots = !chi.is_zero()
        && poly::integer_roots(&chi)
            .map(|rep| rep.all_roots_integral)
            .unwrap_or(false);
    let connected = r >= 1 && {
        let x1 = IntPoly::from_i64(&[-1, 1]);
        match chi.divide_exact(&x1) {
            Ok(q) => q.eval_i64(1) != BigInt::from(0),
            Err(_) => false,
        }
    };
    let gamma3 = lines.gamma(3) as i64;
    let weighted = lines.weighted_sum() as i64;
    let max_line = lines.max_line();
    let mut cases = Vec::new();

    let mut push = |case, c, failed: Vec<String>, measured: i64, bound: i64, form: IntPoly| {
        let slack = measured - bound;
        cases.push(CaseCheck {
            case,
            c,
            failed_hypotheses: failed,
            measured,
            bound,
            slack,
            equality: slack == 0,
            extremal_form: chi == form,
        });
    };
    let common = |real_needed: bool, integral_needed: bool, lines_needed: bool, two_needed: bool, conn_needed: bool| {
        let mut f = Vec::new();
        if real_needed && !real_roots {
            f.push("characteristic roots are not all real".to_string());
        }
        if integral_needed && !integral_roots {
            f.push("characteristic roots are not all integers".to_string());
        }
        if lines_needed && max_line > 3 {
            f.push(format!("a line has {max_line} points"));
        }
        if two_needed && !chi_at_two_zero {
            f.push("chi(2) is nonzero".to_string());
        }
        if conn_needed && !connected {
            f.push("matroid is not connected".to_string());
        }
        f
    };

    let mut failed = common(true, false, true, true, false);
    if delta != 0 {
        failed.push(format!("element count {e} differs from 3r - 3 = {}", 3 * r - 3));
    }
    push(
        BoundCase::FullReal,
        None,
        failed,
        gamma3,
        3 * r - 5,
        extremal(&[(1, 1), (2, 1), (3, r - 2)]),
    );

    let mut failed = common(false, true, true, true, false);
    if !(0..=r - 2).contains(&delta) {
        failed.push(format!("delta = {delta} is outside 0..=r-2"));
    }
    push(
        BoundCase::DeficientIntegral,
        None,
        failed,
        gamma3,
        3 * r - 5 - 2 * delta,
        extremal(&[(1, 1), (2, delta + 1), (3, r - 2 - delta)]),
    );

    if r >= 3 {
        let mut failed = common(true, false, false, true, true);
        let c = (e - 3) / (r - 2);
        if (e - 3) % (r - 2) != 0 || c < 2 {
            failed.push(format!("element count {e} is not c(r-2)+3 with c >= 2"));
        }
        push(
            BoundCase::WeightedShifted,
            Some(c),
            failed,
            weighted,
            c * (c - 1) / 2 * (r - 2) + 1,
            extremal(&[(1, 1), (2, 1), (c, r - 2)]),
        );
    }
    if r >= 2 {
        let mut failed = common(true, false, false, false, true);
        let c = (e - 1) / (r - 1);
        if (e - 1) % (r - 1) != 0 || c < 1 {
            failed.push(format!("element count {e} is not c(r-1)+1"));
        }
        push(
            BoundCase::Weighted,
            Some(c),
            failed,
            weighted,
            c * (c - 1) / 2 * (r - 1),
            extremal(&[(1, 1), (c, r - 1)]),
        );
    }

    Ok(ThreeCircuitReport {
        elements: e as usize,
        rank: r as usize,
        delta,
        lines,
        chi,
        chi_at_two_zero,
        real_roots,
        integral_roots,
        connected,
        cases,
    })
}
