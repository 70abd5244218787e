//! Flow and chromatic polynomials, direct flow counting, and degree statistics.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use lru::LruCache;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, Multigraph, ThreeCutset};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a proper minimal 3-edge cutset: {0}")]
    NotAProperCutset(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `x - c`
fn lin(c: i64) -> IntPoly {
    IntPoly::from_i64(&[-c, 1])
}

/// `((x-1)^k - (-1)^k) / x`, the weight of the contracted branch when a
/// whole class of `k` parallel edges is split off.
fn parallel_class_weight(k: usize) -> IntPoly {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let num = &lin(1).pow(k) - &IntPoly::from_i64(&[sign]);
    num.divide_exact(&IntPoly::x()).expect("x divides (x-1)^k - (-1)^k")
}

/// Memo table shared between engines (and threads), bounded with LRU eviction.
pub struct FlowCache {
    table: Mutex<LruCache<Vec<u8>, IntPoly>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl FlowCache {
    pub fn new(cap: NonZeroUsize) -> Self {
        FlowCache {
            table: Mutex::new(LruCache::new(cap)),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    fn get(&self, key: &[u8]) -> Option<IntPoly> {
        let found = self.table.lock().expect("cache lock").get(key).cloned();
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    fn put(&self, key: Vec<u8>, value: IntPoly) {
        self.table.lock().expect("cache lock").put(key, value);
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.table.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

enum Memo<'a> {
    Local(HashMap<Vec<u8>, IntPoly>),
    Shared(&'a FlowCache),
}

impl Memo<'_> {
    fn get(&self, key: &[u8]) -> Option<IntPoly> {
        match self {
            Memo::Local(m) => m.get(key).cloned(),
            Memo::Shared(c) => c.get(key),
        }
    }

    fn put(&mut self, key: Vec<u8>, value: IntPoly) {
        match self {
            Memo::Local(m) => {
                m.insert(key, value);
            }
            Memo::Shared(c) => c.put(key, value),
        }
    }
}

/// Flow polynomial engine. With `decompose` off the 3-cutset product
/// formula is never used, which gives an independent evaluation path.
#[derive(Clone)]
pub struct FlowEngine {
    decompose: bool,
    cache: Option<Arc<FlowCache>>,
}

impl Default for FlowEngine {
    fn default() -> Self {
        FlowEngine {
            decompose: true,
            cache: None,
        }
    }
}

impl FlowEngine {
    pub fn new(decompose: bool) -> Self {
        FlowEngine {
            decompose,
            cache: None,
        }
    }

    pub fn with_cache(mut self, cache: Arc<FlowCache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn flow_poly(&self, g: &Multigraph) -> IntPoly {
        let mut memo = match &self.cache {
            Some(c) => Memo::Shared(c),
            None => Memo::Local(HashMap::new()),
        };
        self.flow(g, &mut memo)
    }

    fn flow(&self, g: &Multigraph, memo: &mut Memo<'_>) -> IntPoly {
        if g.has_bridge() {
            return IntPoly::zero();
        }
        let loops: BTreeSet<usize> = g.edges().iter().filter(|e| e.is_loop()).map(|e| e.id).collect();
        let factor = lin(1).pow(loops.len());
        let g = g.delete_edges(&loops);
        if g.m() == 0 {
            return factor;
        }
        let blocks = g.block_edge_sets();
        if blocks.len() > 1 {
            return blocks.iter().fold(factor, |acc, b| {
                &acc * &self.flow(&g.edge_subgraph(b), memo)
            });
        }
        // a single block; drop isolated vertices
        let g = g.edge_subgraph(&g.edge_ids().into_iter().collect());
        if let Some(reduced) = g.contract_series_once() {
            return &factor * &self.flow(&reduced, memo);
        }
        let key = g.canonical_key();
        if let Some(hit) = memo.get(&key) {
            return &factor * &hit;
        }
        let value = match self.decompose.then(|| g.find_proper_three_cut()).flatten() {
            Some(cut) => self.flow_by_cut(&g, &cut, memo),
            None => self.flow_by_deletion_contraction(&g, memo),
        };
        memo.put(key, value.clone());
        &factor * &value
    }

    fn flow_by_cut(&self, g: &Multigraph, cut: &ThreeCutset, memo: &mut Memo<'_>) -> IntPoly {
        let g1 = g.contract_side(&cut.sides.1);
        let g2 = g.contract_side(&cut.sides.0);
        let product = &self.flow(&g1, memo) * &self.flow(&g2, memo);
        product
            .divide_exact(&(&lin(1) * &lin(2)))
            .unwrap_or_else(|e| panic!("3-cutset product formula failed on a proper cutset: {e}"))
    }

    fn flow_by_deletion_contraction(&self, g: &Multigraph, memo: &mut Memo<'_>) -> IntPoly {
        let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for e in g.edges() {
            classes.entry((e.u.min(e.v), e.u.max(e.v))).or_default().push(e.id);
        }
        let class = classes
            .into_values()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .expect("graph has edges");
        let k = class.len();
        let rest: BTreeSet<usize> = class[1..].iter().copied().collect();
        let merged = g.delete_edges(&rest).contract_edge(class[0]).expect("edge present");
        let removed = g.delete_edges(&class.iter().copied().collect());
        let contracted = &parallel_class_weight(k) * &self.flow(&merged, memo);
        let deleted = self.flow(&removed, memo);
        if k % 2 == 0 {
            &contracted + &deleted
        } else {
            &contracted - &deleted
        }
    }
}

/// Flow polynomial with the default engine (3-cutset decomposition on).
pub fn flow_poly(g: &Multigraph) -> IntPoly {
    FlowEngine::default().flow_poly(g)
}

/// Cotree enumerations above this many assignments fall back to the frontier count.
const COTREE_BUDGET: u128 = 4_000_000;
/// Frontier states allowed before giving up.
const FRONTIER_BUDGET: u128 = 4_000_000;

/// Number of nowhere-zero `Z_k` flows, counted directly without any
/// polynomial arithmetic.
pub fn flow_count_oracle(g: &Multigraph, k: u32) -> Result<BigInt, FlowError> {
    if k < 2 {
        return Err(FlowError::BudgetExceeded(format!("group order {k} is below 2")));
    }
    let nullity = g.nullity() as u32;
    let cotree = ((k - 1) as u128).checked_pow(nullity);
    if cotree.is_some_and(|c| c <= COTREE_BUDGET) {
        return Ok(BigInt::from(cotree_count(g, k)));
    }
    let order = frontier_order(g);
    let width = frontier_width(g, &order);
    let states = (k as u128).checked_pow(width as u32);
    if k <= u8::MAX as u32 && states.is_some_and(|s| s <= FRONTIER_BUDGET) {
        return Ok(BigInt::from(frontier_count(g, k, &order)));
    }
    Err(FlowError::BudgetExceeded(format!(
        "{} edges, nullity {nullity}, frontier width {width} at k = {k}",
        g.m()
    )))
}

/// Enumerates nonzero values on the edges outside a spanning forest and
/// solves conservation for the forest edges.
fn cotree_count(g: &Multigraph, k: u32) -> u64 {
    let n = g.n();
    let edges = g.edges();
    let adj = g.incidence();
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut in_tree = vec![false; edges.len()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &(ei, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = Some(ei);
                    in_tree[ei] = true;
                    order.push(w);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..edges.len()).filter(|&i| !in_tree[i]).collect();
    let k = k as i64;
    let mut values = vec![1i64; cotree.len()];
    let mut count = 0u64;
    let mut excess = vec![0i64; n];
    loop {
        excess.iter_mut().for_each(|x| *x = 0);
        for (slot, &ei) in cotree.iter().enumerate() {
            let e = edges[ei];
            excess[e.u] += values[slot];
            excess[e.v] -= values[slot];
        }
        let mut ok = true;
        for &v in order.iter().rev() {
            let Some(ei) = parent_edge[v] else { continue };
            let e = edges[ei];
            let (x, p) = if e.u == v {
                ((-excess[v]).rem_euclid(k), e.v)
            } else {
                (excess[v].rem_euclid(k), e.u)
            };
            if x == 0 {
                ok = false;
                break;
            }
            if e.u == v {
                excess[p] -= x;
            } else {
                excess[p] += x;
            }
        }
        if ok {
            count += 1;
        }
        // odometer over 1..k-1
        let mut pos = 0;
        loop {
            if pos == values.len() {
                return count;
            }
            values[pos] += 1;
            if values[pos] < k {
                break;
            }
            values[pos] = 1;
            pos += 1;
        }
    }
}

/// Vertex order for the frontier count: breadth-first from the vertex of
/// largest degree in each component.
fn frontier_order(g: &Multigraph) -> Vec<usize> {
    let adj = g.incidence();
    let mut pos = vec![usize::MAX; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let degrees = g.degrees();
    let mut starts: Vec<usize> = (0..g.n()).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    for s in starts {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = order.len();
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &(_, w) in &adj[v] {
                if pos[w] == usize::MAX {
                    pos[w] = order.len();
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Edges sorted by the later of their endpoints in `order`.
fn frontier_edges(g: &Multigraph, order: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut idx: Vec<usize> = (0..g.m()).collect();
    let edges = g.edges();
    idx.sort_by_key(|&i| {
        let e = edges[i];
        (pos[e.u].max(pos[e.v]), pos[e.u].min(pos[e.v]), i)
    });
    (idx, pos)
}

fn frontier_width(g: &Multigraph, order: &[usize]) -> usize {
    let (idx, _) = frontier_edges(g, order);
    let edges = g.edges();
    let mut last = vec![None; g.n()];
    let mut first = vec![None; g.n()];
    for (step, &i) in idx.iter().enumerate() {
        for x in [edges[i].u, edges[i].v] {
            first[x].get_or_insert(step);
            last[x] = Some(step);
        }
    }
    (0..idx.len())
        .map(|step| {
            (0..g.n())
                .filter(|&v| matches!((first[v], last[v]), (Some(a), Some(b)) if a <= step && step <= b))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Transfer-matrix count over the edge sequence; a state records the net
/// outflow (mod k) at every vertex still touching unprocessed edges.
fn frontier_count(g: &Multigraph, k: u32, order: &[usize]) -> u128 {
    let (idx, _) = frontier_edges(g, order);
    let edges = g.edges();
    let n = g.n();
    let mut last = vec![usize::MAX; n];
    for (step, &i) in idx.iter().enumerate() {
        last[edges[i].u] = step;
        last[edges[i].v] = step;
    }
    let k16 = k as u16;
    let mut states: HashMap<Vec<u8>, u128> = HashMap::from([(vec![0u8; n], 1u128)]);
    for (step, &i) in idx.iter().enumerate() {
        let e = edges[i];
        let mut next: HashMap<Vec<u8>, u128> = HashMap::with_capacity(states.len());
        for (state, count) in states {
            for x in 1..k16 {
                let mut s = state.clone();
                if !e.is_loop() {
                    s[e.u] = ((s[e.u] as u16 + x) % k16) as u8;
                    s[e.v] = ((s[e.v] as u16 + k16 - x) % k16) as u8;
                }
                if (last[e.u] == step && s[e.u] != 0) || (last[e.v] == step && s[e.v] != 0) {
                    continue;
                }
                *next.entry(s).or_insert(0) += count;
            }
        }
        states = next;
    }
    states.values().sum()
}

/// Chromatic polynomial by deletion-contraction with clique, tree and
/// simplicial-vertex shortcuts.
pub fn chromatic_poly(g: &Multigraph) -> IntPoly {
    if g.loop_count() > 0 {
        return IntPoly::zero();
    }
    let mut memo = HashMap::new();
    chromatic(&g.underlying_simple(), &mut memo)
}

fn falling(n: usize) -> IntPoly {
    (0..n as i64).fold(IntPoly::one(), |acc, i| &acc * &lin(i))
}

fn chromatic(g: &Multigraph, memo: &mut HashMap<Vec<u8>, IntPoly>) -> IntPoly {
    let n = g.n();
    let m = g.m();
    if m == 0 {
        return IntPoly::x().pow(n);
    }
    if m == n * (n - 1) / 2 {
        return falling(n);
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps
            .iter()
            .fold(IntPoly::one(), |acc, c| &acc * &chromatic(&g.induced(c), memo));
    }
    if m + 1 == n {
        return &IntPoly::x() * &lin(1).pow(n - 1);
    }
    let pairs = g.simple_pairs();
    let adjacent = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in &pairs {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    for v in 0..n {
        let nb = &nbrs[v];
        let clique = nb
            .iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| adjacent(a, b)));
        if clique {
            let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
            return &lin(nb.len() as i64) * &chromatic(&g.induced(&rest), memo);
        }
    }
    let key = g.canonical_key();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let degrees = g.degrees();
    let pivot = g
        .edges()
        .iter()
        .max_by_key(|e| (degrees[e.u] + degrees[e.v], std::cmp::Reverse(e.id)))
        .expect("edges present")
        .id;
    let deleted = chromatic(&g.delete_edge(pivot).expect("present"), memo);
    let contracted = chromatic(
        &g.contract_edge(pivot).expect("present").underlying_simple(),
        memo,
    );
    let value = &deleted - &contracted;
    memo.insert(key, value.clone());
    value
}

/// `r` is the cocycle rank `|E| - |V| + c`; `delta` sums `(i - 3) v_i` over degrees `i >= 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowStats {
    pub r: usize,
    pub delta: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl FlowStats {
    /// `3r - 3 - delta`, which equals `|E|` for 3-edge-connected graphs.
    pub fn predicted_edges(&self) -> i64 {
        3 * self.r as i64 - 3 - self.delta as i64
    }

    /// `2r - 2 - delta`, which equals `|V|` for 3-edge-connected graphs.
    pub fn predicted_vertices(&self) -> i64 {
        2 * self.r as i64 - 2 - self.delta as i64
    }
}

pub fn flow_stats(g: &Multigraph) -> FlowStats {
    let degree_histogram = g.degree_histogram();
    let delta = degree_histogram
        .iter()
        .filter(|(&d, _)| d >= 3)
        .map(|(&d, &c)| (d - 3) * c)
        .sum();
    FlowStats {
        r: g.nullity(),
        delta,
        degree_histogram,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub f_g: IntPoly,
    pub f_g1: IntPoly,
    pub f_g2: IntPoly,
    pub holds: bool,
}

/// Contracts each side of a proper 3-cutset in turn and checks
/// `F(G) (x-1)(x-2) = F(G1) F(G2)`, with every polynomial computed without
/// cutset decomposition. `G1` keeps the side containing the smallest vertex.
pub fn product_formula_check(g: &Multigraph, cutset: [usize; 3]) -> Result<ProductCheck, FlowError> {
    let (side_a, side_b) = proper_sides(g, cutset)?;
    let engine = FlowEngine::new(false);
    let g1 = g.contract_side(&side_b);
    let g2 = g.contract_side(&side_a);
    let f_g = engine.flow_poly(g);
    let f_g1 = engine.flow_poly(&g1);
    let f_g2 = engine.flow_poly(&g2);
    let holds = &(&f_g * &lin(1)) * &lin(2) == &f_g1 * &f_g2;
    Ok(ProductCheck { f_g, f_g1, f_g2, holds })
}

/// The two vertex sides of a proper minimal 3-cutset.
pub fn proper_sides(g: &Multigraph, cutset: [usize; 3]) -> Result<(Vec<usize>, Vec<usize>), FlowError> {
    let ids: BTreeSet<usize> = cutset.iter().copied().collect();
    if ids.len() != 3 {
        return Err(FlowError::NotAProperCutset("edge ids must be distinct".into()));
    }
    for &id in &ids {
        g.edge(id)?;
    }
    if !g.is_connected() {
        return Err(FlowError::NotAProperCutset("graph is disconnected".into()));
    }
    let rest = g.delete_edges(&ids);
    let comps = rest.components();
    if comps.len() != 2 {
        return Err(FlowError::NotAProperCutset(format!(
            "removal leaves {} components",
            comps.len()
        )));
    }
    let side_a: BTreeSet<usize> = comps[0].iter().copied().collect();
    for &id in &ids {
        let e = g.edge(id)?;
        if side_a.contains(&e.u) == side_a.contains(&e.v) {
            return Err(FlowError::NotAProperCutset(format!("edge {id} does not cross the cut")));
        }
    }
    let edges_in = |side: &Vec<usize>| {
        let s: BTreeSet<usize> = side.iter().copied().collect();
        rest.edges().iter().filter(|e| s.contains(&e.u)).count()
    };
    if edges_in(&comps[0]) == 0 || edges_in(&comps[1]) == 0 {
        return Err(FlowError::NotAProperCutset("one side has no edges".into()));
    }
    Ok((comps[0].clone(), comps[1].clone()))
}

/// One step of the reduction applied by the flow engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionStep {
    Bridge { edge: usize },
    Loops { count: usize },
    Blocks,
    Series { contracted: Vec<usize> },
    ThreeCut { cutset: [usize; 3] },
    Irreducible,
    Empty,
}

/// Tree of reductions down to pieces with no proper 3-cutset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionNode {
    pub n: usize,
    pub m: usize,
    pub edge_ids: Vec<usize>,
    pub step: DecompositionStep,
    pub flow: IntPoly,
    pub children: Vec<DecompositionNode>,
}

pub fn decomposition_tree(g: &Multigraph) -> DecompositionNode {
    let engine = FlowEngine::default();
    decompose_node(g, &engine)
}

fn decompose_node(g: &Multigraph, engine: &FlowEngine) -> DecompositionNode {
    let node = |step, children| DecompositionNode {
        n: g.n(),
        m: g.m(),
        edge_ids: g.edge_ids(),
        step,
        flow: engine.flow_poly(g),
        children,
    };
    if let Some(&b) = g.bridges().iter().next() {
        return node(DecompositionStep::Bridge { edge: b }, Vec::new());
    }
    let loops: BTreeSet<usize> = g.edges().iter().filter(|e| e.is_loop()).map(|e| e.id).collect();
    if !loops.is_empty() {
        let child = decompose_node(&g.delete_edges(&loops), engine);
        return node(DecompositionStep::Loops { count: loops.len() }, vec![child]);
    }
    if g.m() == 0 {
        return node(DecompositionStep::Empty, Vec::new());
    }
    let blocks = g.block_edge_sets();
    if blocks.len() > 1 {
        let children = blocks
            .iter()
            .map(|b| decompose_node(&g.edge_subgraph(b), engine))
            .collect();
        return node(DecompositionStep::Blocks, children);
    }
    let core = g.edge_subgraph(&g.edge_ids().into_iter().collect());
    if let Some(reduced) = core.contract_series_once() {
        let kept: BTreeSet<usize> = reduced.edge_ids().into_iter().collect();
        let contracted = core.edge_ids().into_iter().filter(|id| !kept.contains(id)).collect();
        let child = decompose_node(&reduced, engine);
        return node(DecompositionStep::Series { contracted }, vec![child]);
    }
    if let Some(cut) = core.find_proper_three_cut() {
        let children = vec![
            decompose_node(&core.contract_side(&cut.sides.1), engine),
            decompose_node(&core.contract_side(&cut.sides.0), engine),
        ];
        return node(DecompositionStep::ThreeCut { cutset: cut.edges }, children);
    }
    node(DecompositionStep::Irreducible, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn roots_poly(rs: &[i64]) -> IntPoly {
        rs.iter().fold(IntPoly::one(), |acc, &r| &acc * &lin(r))
    }

    #[test]
    fn k4_flow() {
        assert_eq!(flow_poly(&complete(4)), roots_poly(&[1, 2, 3]));
        assert_eq!(FlowEngine::new(false).flow_poly(&complete(4)), roots_poly(&[1, 2, 3]));
    }

    #[test]
    fn cycles_and_bridges() {
        for n in 1..7 {
            assert_eq!(flow_poly(&cycle(n)), lin(1));
        }
        assert!(flow_poly(&path(3)).is_zero());
        assert_eq!(flow_poly(&Multigraph::new(1)), IntPoly::one());
        assert_eq!(flow_poly(&bouquet(3)), lin(1).pow(3));
    }

    #[test]
    fn theta_flow() {
        // lambda^2 - 3 lambda + 2 minus ... : theta_3 has F = (x-1)(x-2)
        assert_eq!(flow_poly(&theta(3)), roots_poly(&[1, 2]));
        for k in 1..7 {
            let expected = {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                &(&lin(1).pow(k) - &IntPoly::from_i64(&[sign])).divide_exact(&IntPoly::x()).unwrap()
                    + &IntPoly::from_i64(&[sign])
            };
            assert_eq!(flow_poly(&theta(k)), expected, "theta {k}");
        }
    }

    #[test]
    fn figure_one_flow() {
        let cubic = IntPoly::from_i64(&[-7, 9, -5, 1]);
        let expected = &roots_poly(&[1, 2, 2, 2, 3, 3]) * &cubic;
        let g = figure_one();
        assert_eq!(flow_poly(&g), expected);
        assert_eq!(FlowEngine::new(false).flow_poly(&g), expected);
        let check = product_formula_check(&g, figure_one_dashed_cut()).unwrap();
        assert!(check.holds);
        assert_eq!(check.f_g2, roots_poly(&[1, 2, 3]));
        assert_eq!(check.f_g, &check.f_g1 * &lin(3));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(flow_count_oracle(&complete(4), 3).unwrap(), BigInt::from(0));
        assert_eq!(flow_count_oracle(&cycle(3), 2).unwrap(), BigInt::from(1));
        assert_eq!(flow_count_oracle(&theta(3), 2).unwrap(), BigInt::from(0));
        let p = petersen();
        for k in 2..6u32 {
            let f = flow_poly(&p);
            assert_eq!(f.eval_i64(k as i64), flow_count_oracle(&p, k).unwrap());
        }
    }

    #[test]
    fn frontier_matches_cotree() {
        for g in [complete(5), prism(4), wheel(5), theta(4), figure_one()] {
            let order = frontier_order(&g);
            for k in 2..5u32 {
                assert_eq!(
                    cotree_count(&g, k) as u128,
                    frontier_count(&g, k, &order),
                    "k = {k}"
                );
            }
        }
    }

    fn brute_colorings(g: &Multigraph, k: usize) -> u64 {
        let n = g.n();
        let mut colors = vec![0; n];
        let mut count = 0;
        loop {
            if g.edges().iter().all(|e| colors[e.u] != colors[e.v]) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_poly(&complete(3)), roots_poly(&[0, 1, 2]));
        assert_eq!(chromatic_poly(&complete(4)), roots_poly(&[0, 1, 2, 3]));
        assert!(chromatic_poly(&bouquet(1)).is_zero());
        // C4: (x-1)^4 + (x-1)
        let c4 = &lin(1).pow(4) + &lin(1);
        assert_eq!(chromatic_poly(&cycle(4)), c4);
        for g in [petersen(), wheel(5), prism(4)] {
            let p = chromatic_poly(&g);
            for k in 2..4 {
                assert_eq!(p.eval_i64(k), BigInt::from(brute_colorings(&g, k as usize)));
            }
        }
    }

    #[test]
    fn stats_examples() {
        let s = flow_stats(&prism(3));
        assert_eq!((s.r, s.delta), (4, 0));
        let s = flow_stats(&figure_one());
        assert_eq!((s.r, s.delta), (9, 6));
        assert_eq!(s.predicted_edges(), 18);
        let s = flow_stats(&theta(3));
        assert_eq!((s.r, s.delta), (2, 0));
    }

    #[test]
    fn prism_triangle_cut() {
        let g = prism(3);
        let cuts = g.minimal_three_cutsets().unwrap();
        let proper: Vec<_> = cuts.cutsets.iter().filter(|c| c.proper).collect();
        assert_eq!(proper.len(), 1);
        assert!(product_formula_check(&g, proper[0].edges).unwrap().holds);
        let star = cuts.cutsets.iter().find(|c| !c.proper).unwrap();
        assert!(matches!(
            product_formula_check(&g, star.edges),
            Err(FlowError::NotAProperCutset(_))
        ));
    }

    #[test]
    fn decomposition_of_figure() {
        let tree = decomposition_tree(&figure_one());
        assert!(matches!(tree.step, DecompositionStep::ThreeCut { .. }));
        assert_eq!(tree.children.len(), 2);
    }
}
