//! Combinatorial embeddings, planarity testing, duals and chordal-planar structure.

mod chordal;
mod generate;
mod structural;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Multigraph};

pub use chordal::{has_k4_minor, is_chordal, is_two_tree, ChordalityReport};
pub use generate::{emit_script, gen_chordal_planar, parse_script, BuildStep, ChordalPlanarBuilder, Family, GenSpec, Generated};
pub use structural::{is_dual_of_planar_chordal, DualChordalReport, PieceReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("embedding must be connected to form a dual")]
    DisconnectedInput,
    #[error("invalid build script at line {line}: {reason}")]
    InvalidScript { line: usize, reason: String },
    #[error("size must be at least 3, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Matroid(#[from] crate::matroid::MatroidError),
}

/// Rotation system on darts. Edge at index `i` of `edges` owns darts `2i`
/// (from `u` to `v`) and `2i + 1` (from `v` to `u`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    n: usize,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
}

/// Serialized form: the cyclic edge order at each vertex and the face walks,
/// both as edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSummary {
    pub rotation: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
}

impl Embedding {
    /// Builds an embedding from per-vertex dart cycles, checking that every
    /// dart appears exactly once at its tail.
    pub fn from_rotation(g: &Multigraph, rotation: Vec<Vec<usize>>) -> Option<Embedding> {
        let e = Embedding {
            n: g.n(),
            edges: g.edges().to_vec(),
            rotation,
        };
        e.is_valid().then_some(e)
    }

    fn is_valid(&self) -> bool {
        if self.rotation.len() != self.n {
            return false;
        }
        let mut seen = vec![false; 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &d in rot {
                if d >= seen.len() || seen[d] || self.tail(d) != v {
                    return false;
                }
                seen[d] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn graph(&self) -> Multigraph {
        Multigraph::from_edges(self.n, self.edges.clone()).expect("embedding edges are valid")
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn tail(&self, d: usize) -> usize {
        let e = self.edges[d / 2];
        if d.is_multiple_of(2) {
            e.u
        } else {
            e.v
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(d ^ 1)
    }

    /// Position of every dart within its tail's rotation.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; 2 * self.edges.len()];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                pos[d] = i;
            }
        }
        pos
    }

    /// Face walks as dart sequences; the successor of dart `d` is the dart
    /// following its reverse in the rotation at the head of `d`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let pos = self.positions();
        let darts = 2 * self.edges.len();
        let mut seen = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                let r = d ^ 1;
                let rot = &self.rotation[self.tail(r)];
                d = rot[(pos[r] + 1) % rot.len()];
            }
            faces.push(face);
        }
        faces
    }

    /// Face index of every dart.
    pub fn face_of_dart(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let faces = self.faces();
        let mut of = vec![0; 2 * self.edges.len()];
        for (i, f) in faces.iter().enumerate() {
            for &d in f {
                of[d] = i;
            }
        }
        (faces, of)
    }

    /// Number of faces when every component is drawn in one plane.
    pub fn plane_face_count(&self) -> usize {
        let g = self.graph();
        let comps = g.components();
        let isolated = comps.iter().filter(|c| g.induced(c).m() == 0).count();
        self.faces().len() + 1 + isolated - comps.len()
    }

    /// Every non-trivial component satisfies `V - E + F = 2`.
    pub fn is_planar_embedding(&self) -> bool {
        let faces = self.faces();
        let g = self.graph();
        let mut comp_of = vec![0; self.n];
        let comps = g.components();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut v = vec![0i64; comps.len()];
        let mut e = vec![0i64; comps.len()];
        let mut f = vec![0i64; comps.len()];
        for (i, c) in comps.iter().enumerate() {
            v[i] = c.len() as i64;
        }
        for edge in &self.edges {
            e[comp_of[edge.u]] += 1;
        }
        for face in &faces {
            f[comp_of[self.tail(face[0])]] += 1;
        }
        (0..comps.len()).all(|i| e[i] == 0 || v[i] - e[i] + f[i] == 2)
    }

    /// Euler's relation `V - E + F = 1 + c` over the whole plane.
    pub fn euler_holds(&self) -> bool {
        let c = self.graph().component_count() as i64;
        self.n as i64 - self.edges.len() as i64 + self.plane_face_count() as i64 == 1 + c
    }

    pub fn summary(&self) -> EmbeddingSummary {
        EmbeddingSummary {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().map(|&d| self.edges[d / 2].id).collect())
                .collect(),
            faces: self
                .faces()
                .iter()
                .map(|f| f.iter().map(|&d| self.edges[d / 2].id).collect())
                .collect(),
        }
    }

    /// Face sizes (edge sides counted).
    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    /// Dual graph: one vertex per face, dual edge `i` joins the faces on the
    /// two sides of primal edge `i` and keeps its id.
    pub fn dual(&self) -> Result<Multigraph, PlanarError> {
        Ok(self.dual_embedding()?.graph())
    }

    /// Dual with its induced embedding. Dart labels are shared with the
    /// primal, so taking the dual twice returns the original rotation.
    pub fn dual_embedding(&self) -> Result<Embedding, PlanarError> {
        if !self.graph().is_connected() {
            return Err(PlanarError::DisconnectedInput);
        }
        if self.edges.is_empty() {
            return Ok(Embedding {
                n: 1,
                edges: Vec::new(),
                rotation: vec![Vec::new()],
            });
        }
        let (faces, of) = self.face_of_dart();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge {
                id: e.id,
                u: of[2 * i],
                v: of[2 * i + 1],
            })
            .collect();
        Ok(Embedding {
            n: faces.len(),
            edges,
            rotation: faces,
        })
    }
}

/// Edges of a Kuratowski subgraph and its type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Original edge ids forming a subdivision of the kind.
    pub edges: Vec<usize>,
    /// Vertices of degree at least 3 in the subdivision.
    pub branch_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }
}

/// Planar embedding of `g`, or a Kuratowski subgraph if none exists.
pub fn planarity_embed(g: &Multigraph) -> Planarity {
    match embed(g) {
        Some(e) => Planarity::Planar(e),
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

pub fn is_planar(g: &Multigraph) -> bool {
    let simple = g.underlying_simple();
    simple_planar_faces(&simple).is_some()
}

/// Faces of every 2-connected block of a simple graph, or `None` when some
/// block is not planar.
fn simple_planar_faces(simple: &Multigraph) -> Option<Vec<(Vec<usize>, Vec<Vec<usize>>)>> {
    let n = simple.n();
    if n >= 3 && simple.m() > 3 * n - 6 {
        return None;
    }
    let mut out = Vec::new();
    for block in simple.block_edge_sets() {
        if block.len() < 3 {
            continue;
        }
        let verts: BTreeSet<usize> = block
            .iter()
            .flat_map(|&id| {
                let e = simple.edge(id).expect("block edge");
                [e.u, e.v]
            })
            .collect();
        let verts: Vec<usize> = verts.into_iter().collect();
        let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![BTreeSet::new(); verts.len()];
        for &id in &block {
            let e = simple.edge(id).expect("block edge");
            adj[local[&e.u]].insert(local[&e.v]);
            adj[local[&e.v]].insert(local[&e.u]);
        }
        let faces = embed_biconnected(&adj)?;
        let faces = faces
            .into_iter()
            .map(|f| f.into_iter().map(|v| verts[v]).collect())
            .collect();
        out.push((verts, faces));
    }
    Some(out)
}

fn embed(g: &Multigraph) -> Option<Embedding> {
    let simple = g.underlying_simple();
    let block_faces = simple_planar_faces(&simple)?;
    // neighbour rotation of the simple graph, block by block
    let mut nbr_rot: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (verts, faces) in &block_faces {
        let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                next.insert((v, u), w);
            }
        }
        for &v in verts {
            let Some((&(_, first), _)) = next.range((v, 0)..(v + 1, 0)).next() else {
                continue;
            };
            let mut cur = first;
            loop {
                nbr_rot[v].push(cur);
                covered.insert((v.min(cur), v.max(cur)));
                cur = next[&(v, cur)];
                if cur == first {
                    break;
                }
            }
        }
    }
    for e in simple.edges() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        if covered.insert(key) {
            nbr_rot[e.u].push(e.v);
            nbr_rot[e.v].push(e.u);
        }
    }
    // expand to darts, reinserting parallels beside their representative
    let edges = g.edges();
    let dart_at = |i: usize, x: usize| if edges[i].u == x { 2 * i } else { 2 * i + 1 };
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        if !e.is_loop() {
            classes.entry((e.u.min(e.v), e.u.max(e.v))).or_default().push(i);
        }
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (v, rot) in nbr_rot.iter().enumerate() {
        for &w in rot {
            let class = &classes[&(v.min(w), v.max(w))];
            if v < w {
                rotation[v].extend(class.iter().map(|&i| dart_at(i, v)));
            } else {
                rotation[v].extend(class[1..].iter().rev().map(|&i| dart_at(i, v)));
                rotation[v].push(dart_at(class[0], v));
            }
        }
    }
    for (i, e) in edges.iter().enumerate() {
        if e.is_loop() {
            rotation[e.u].splice(0..0, [2 * i + 1, 2 * i]);
        }
    }
    let emb = Embedding {
        n: g.n(),
        edges: edges.to_vec(),
        rotation,
    };
    debug_assert!(emb.is_valid() && emb.is_planar_embedding());
    Some(emb)
}

enum Fragment {
    Chord(usize, usize),
    Component(Vec<usize>),
}

/// Demoucron–Malgrange–Pertuiset path addition on a 2-connected simple
/// graph. Faces are returned as consistently oriented vertex cycles.
fn embed_biconnected(adj: &[BTreeSet<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    // initial cycle through the edge {0, w}
    let w = *adj[0].iter().next()?;
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([w]);
    prev[w] = w;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX && !(x == w && y == 0) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[0] == usize::MAX {
        return None;
    }
    let mut cycle = vec![0];
    let mut x = 0;
    while x != w {
        x = prev[x];
        cycle.push(x);
    }
    let mut in_s = vec![false; n];
    let mut s_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_s[a] = true;
        s_edges.insert((a.min(b), a.max(b)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    loop {
        let fragments = find_fragments(adj, &in_s, &s_edges);
        if fragments.is_empty() {
            return Some(faces);
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, (_, attach)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("fragments present");
        let path = fragment_path(adj, &in_s, &fragments[fi]);
        for win in path.windows(2) {
            s_edges.insert((win[0].min(win[1]), win[0].max(win[1])));
        }
        for &v in &path {
            in_s[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&v| v == a).expect("attachment on face");
        let j = face.iter().position(|&v| v == b).expect("attachment on face");
        let k = face.len();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut t = i;
        loop {
            f1.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % k;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut t = j;
        loop {
            f2.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % k;
        }
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

fn find_fragments(
    adj: &[BTreeSet<usize>],
    in_s: &[bool],
    s_edges: &BTreeSet<(usize, usize)>,
) -> Vec<(Fragment, BTreeSet<usize>)> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_s[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_s[v] && !s_edges.contains(&(u, v)) {
                out.push((Fragment::Chord(u, v), BTreeSet::from([u, v])));
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_s[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attach = BTreeSet::new();
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &adj[x] {
                if in_s[y] {
                    attach.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        out.push((Fragment::Component(comp), attach));
    }
    out
}

/// Path through a fragment between two distinct attachment vertices.
fn fragment_path(adj: &[BTreeSet<usize>], in_s: &[bool], frag: &(Fragment, BTreeSet<usize>)) -> Vec<usize> {
    match &frag.0 {
        Fragment::Chord(u, v) => vec![*u, *v],
        Fragment::Component(comp) => {
            let members: BTreeSet<usize> = comp.iter().copied().collect();
            let a = *frag.1.iter().next().expect("attachments");
            let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
            let mut queue = VecDeque::new();
            for &y in &adj[a] {
                if members.contains(&y) && !prev.contains_key(&y) {
                    prev.insert(y, a);
                    queue.push_back(y);
                }
            }
            while let Some(x) = queue.pop_front() {
                if let Some(&b) = adj[x].iter().find(|&&b| in_s[b] && b != a) {
                    let mut path = vec![b, x];
                    let mut cur = x;
                    while let Some(&p) = prev.get(&cur) {
                        path.push(p);
                        if p == a {
                            break;
                        }
                        cur = p;
                    }
                    path.reverse();
                    return path;
                }
                for &y in &adj[x] {
                    if members.contains(&y) && !prev.contains_key(&y) {
                        prev.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("a fragment of a 2-connected graph has two attachments")
        }
    }
}

/// Minimal non-planar subgraph found by greedy edge deletion, classified
/// after suppressing degree-2 vertices.
fn kuratowski_witness(g: &Multigraph) -> KuratowskiWitness {
    let mut h = g.underlying_simple();
    for id in h.edge_ids() {
        let trial = h.delete_edge(id).expect("present");
        if !is_planar(&trial) {
            h = trial;
        }
    }
    let degrees = h.degrees();
    let branch_vertices: Vec<usize> = (0..h.n()).filter(|&v| degrees[v] >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        edges: h.edge_ids(),
        branch_vertices,
    }
}

/// Checks that `edges` of `g` form a subdivision of K5 or K3,3.
pub fn verify_witness(g: &Multigraph, w: &KuratowskiWitness) -> bool {
    let ids: BTreeSet<usize> = w.edges.iter().copied().collect();
    if ids.iter().any(|&id| !g.has_edge(id)) {
        return false;
    }
    let h = g.edge_subgraph(&ids);
    if !h.is_simple() || !h.is_connected() {
        return false;
    }
    let reduced = suppress_degree_two(&h);
    let target = match w.kind {
        KuratowskiKind::K5 => crate::graph::named::complete(5),
        KuratowskiKind::K33 => crate::graph::named::complete_bipartite(3, 3),
    };
    reduced.is_isomorphic(&target)
}

/// Replaces every path through degree-2 vertices by a single edge.
pub(crate) fn suppress_degree_two(h: &Multigraph) -> Multigraph {
    let mut g = h.clone();
    loop {
        let degrees = g.degrees();
        let Some(v) = (0..g.n()).find(|&v| degrees[v] == 2 && g.edges().iter().all(|e| !(e.is_loop() && e.u == v)))
        else {
            break;
        };
        let inc: Vec<Edge> = g.edges().iter().filter(|e| e.u == v || e.v == v).copied().collect();
        let (a, b) = (inc[0].other(v), inc[1].other(v));
        let mut next = g.delete_edges(&BTreeSet::from([inc[0].id, inc[1].id]));
        next.add_edge(a, b).expect("in range");
        let keep: Vec<usize> = (0..next.n()).filter(|&x| x != v).collect();
        g = next.induced(&keep);
    }
    g
}
