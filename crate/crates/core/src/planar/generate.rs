//! Planar chordal graphs grown from a triangle by edge-joins and
//! face-insertions, with the embedding maintained along the way.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Embedding, PlanarError};
use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Edge-joins only.
    TwoTree,
    /// Edge-joins and face-insertions, chosen with equal probability.
    ChordalPlanar,
    /// Face-insertions only.
    Triangulation,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2tree" | "two-tree" => Ok(Family::TwoTree),
            "chordal-planar" => Ok(Family::ChordalPlanar),
            "triangulation" => Ok(Family::Triangulation),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::TwoTree => "2tree",
            Family::ChordalPlanar => "chordal-planar",
            Family::Triangulation => "triangulation",
        })
    }
}

/// One growth step; the new vertex takes the next free index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BuildStep {
    /// Join a new vertex to both ends of edge `uv`.
    EdgeJoin(usize, usize),
    /// Place a new vertex inside triangular face `abc`, joined to all three.
    FaceInsert(usize, usize, usize),
}

impl fmt::Display for BuildStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildStep::EdgeJoin(u, v) => write!(f, "E {u} {v}"),
            BuildStep::FaceInsert(a, b, c) => write!(f, "F {a} {b} {c}"),
        }
    }
}

/// Parses a line-oriented script; blank lines and `#` comments are skipped.
pub fn parse_script(script: &str) -> Result<Vec<BuildStep>, PlanarError> {
    let mut steps = Vec::new();
    for (i, raw) in script.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| PlanarError::InvalidScript { line: i + 1, reason };
        let mut tokens = line.split_whitespace();
        let op = tokens.next().unwrap_or("");
        let args: Vec<usize> = tokens
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("'{t}' is not a vertex index"))))
            .collect::<Result<_, _>>()?;
        let step = match (op, args.as_slice()) {
            ("E", &[u, v]) => BuildStep::EdgeJoin(u, v),
            ("F", &[a, b, c]) => BuildStep::FaceInsert(a, b, c),
            ("E", _) => return Err(bad("E takes two vertices".into())),
            ("F", _) => return Err(bad("F takes three vertices".into())),
            _ => return Err(bad(format!("unknown operation '{op}'"))),
        };
        steps.push(step);
    }
    Ok(steps)
}

pub fn emit_script(steps: &[BuildStep]) -> String {
    steps.iter().map(|s| format!("{s}\n")).collect()
}

/// Simple plane graph stored as a cyclic neighbour order at each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalPlanarBuilder {
    rot: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    steps: Vec<BuildStep>,
}

impl Default for ChordalPlanarBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl ChordalPlanarBuilder {
    /// The triangle on 0, 1, 2.
    pub fn new() -> Self {
        ChordalPlanarBuilder {
            rot: vec![vec![1, 2], vec![2, 0], vec![0, 1]],
            edges: vec![(0, 1), (1, 2), (0, 2)],
            steps: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn steps(&self) -> &[BuildStep] {
        &self.steps
    }

    /// Neighbour following `u` in the rotation at `v`.
    fn after(&self, v: usize, u: usize) -> Option<usize> {
        let r = &self.rot[v];
        let i = r.iter().position(|&x| x == u)?;
        Some(r[(i + 1) % r.len()])
    }

    fn insert_after(&mut self, v: usize, anchor: usize, w: usize) {
        let i = self.rot[v].iter().position(|&x| x == anchor).expect("anchor is a neighbour");
        self.rot[v].insert(i + 1, w);
    }

    fn insert_before(&mut self, v: usize, anchor: usize, w: usize) {
        let i = self.rot[v].iter().position(|&x| x == anchor).expect("anchor is a neighbour");
        self.rot[v].insert(i, w);
    }

    fn check_vertex(&self, v: usize) -> Result<(), String> {
        if v < self.n() {
            Ok(())
        } else {
            Err(format!("vertex {v} does not exist"))
        }
    }

    fn add_vertex(&mut self, rotation: Vec<usize>) -> usize {
        let w = self.rot.len();
        for &x in &rotation {
            self.edges.push((x, w));
        }
        self.rot.push(rotation);
        w
    }

    /// Joins a new vertex to `u` and `v`, placed in the face to the left of
    /// the walk from `u` to `v`.
    pub fn edge_join(&mut self, u: usize, v: usize) -> Result<usize, String> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.rot[u].contains(&v) {
            return Err(format!("{u} {v} is not an edge"));
        }
        let w = self.rot.len();
        self.insert_after(v, u, w);
        self.insert_before(u, v, w);
        self.add_vertex(vec![u, v]);
        self.steps.push(BuildStep::EdgeJoin(u, v));
        Ok(w)
    }

    /// Orientation `(x, y, z)` of `{a, b, c}` that is a face walk.
    fn face_walk(&self, a: usize, b: usize, c: usize) -> Option<(usize, usize, usize)> {
        let candidates = [(a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)];
        candidates.into_iter().find(|&(x, y, z)| {
            self.after(y, x) == Some(z) && self.after(z, y) == Some(x) && self.after(x, z) == Some(y)
        })
    }

    /// Inserts a new vertex into the triangular face on `a`, `b`, `c`; any
    /// orientation naming a face is accepted.
    pub fn face_insert(&mut self, a: usize, b: usize, c: usize) -> Result<usize, String> {
        for v in [a, b, c] {
            self.check_vertex(v)?;
        }
        if a == b || b == c || a == c {
            return Err(format!("{a} {b} {c} repeats a vertex"));
        }
        let (x, y, z) = self
            .face_walk(a, b, c)
            .ok_or_else(|| format!("{a} {b} {c} is not a triangular face"))?;
        let w = self.rot.len();
        self.insert_after(y, x, w);
        self.insert_after(z, y, w);
        self.insert_after(x, z, w);
        self.add_vertex(vec![x, z, y]);
        self.steps.push(BuildStep::FaceInsert(a, b, c));
        Ok(w)
    }

    pub fn apply(&mut self, step: BuildStep) -> Result<usize, String> {
        match step {
            BuildStep::EdgeJoin(u, v) => self.edge_join(u, v),
            BuildStep::FaceInsert(a, b, c) => self.face_insert(a, b, c),
        }
    }

    /// Face walks of length 3, each listed once in walk order.
    pub fn triangular_faces(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.n() {
            for &x in &self.rot[y] {
                let z = self.after(y, x).expect("x is a neighbour");
                if x < y && x < z && self.after(z, y) == Some(x) && self.after(x, z) == Some(y) {
                    out.push((x, y, z));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> Multigraph {
        Multigraph::from_pairs(self.n(), &self.edges).expect("builder edges are in range")
    }

    pub fn embedding(&self) -> Embedding {
        let g = self.graph();
        let mut dart: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, e) in g.edges().iter().enumerate() {
            dart.insert((e.u, e.v), 2 * i);
            dart.insert((e.v, e.u), 2 * i + 1);
        }
        let rotation = self
            .rot
            .iter()
            .enumerate()
            .map(|(v, r)| r.iter().map(|&w| dart[&(v, w)]).collect())
            .collect();
        Embedding::from_rotation(&g, rotation).expect("builder rotation covers every dart")
    }

    pub fn finish(&self) -> Generated {
        Generated {
            graph: self.graph(),
            embedding: self.embedding(),
            script: self.steps.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Multigraph,
    pub embedding: Embedding,
    pub script: Vec<BuildStep>,
}

/// Where the build steps come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Script(String),
    Random { family: Family, n: usize, seed: u64 },
}

pub fn gen_chordal_planar(spec: &GenSpec) -> Result<Generated, PlanarError> {
    let mut b = ChordalPlanarBuilder::new();
    match spec {
        GenSpec::Script(text) => {
            let mut line_of_step = Vec::new();
            for (i, raw) in text.lines().enumerate() {
                let l = raw.split('#').next().unwrap_or("").trim();
                if !l.is_empty() {
                    line_of_step.push(i + 1);
                }
            }
            for (k, step) in parse_script(text)?.into_iter().enumerate() {
                b.apply(step).map_err(|reason| PlanarError::InvalidScript {
                    line: line_of_step[k],
                    reason,
                })?;
            }
        }
        &GenSpec::Random { family, n, seed } => {
            if n < 3 {
                return Err(PlanarError::TooSmall(n));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while b.n() < n {
                let join = match family {
                    Family::TwoTree => true,
                    Family::Triangulation => false,
                    Family::ChordalPlanar => rng.gen_bool(0.5),
                };
                if join {
                    let &(u, v) = b.edges.choose(&mut rng).expect("nonempty");
                    let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
                    b.edge_join(u, v).expect("chosen edge exists");
                } else {
                    let faces = b.triangular_faces();
                    let &(x, y, z) = faces.choose(&mut rng).expect("a triangular face always exists");
                    b.face_insert(x, y, z).expect("chosen face exists");
                }
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::complete;
    use crate::planar::{is_chordal, is_planar, is_two_tree};

    #[test]
    fn empty_script_is_triangle() {
        let g = gen_chordal_planar(&GenSpec::Script(String::new())).unwrap();
        assert!(g.graph.is_isomorphic(&complete(3)));
        assert!(g.embedding.euler_holds());
    }

    #[test]
    fn face_insert_into_triangle_gives_k4() {
        for script in ["F 0 1 2", "F 2 1 0"] {
            let g = gen_chordal_planar(&GenSpec::Script(script.into())).unwrap();
            assert!(g.graph.is_isomorphic(&complete(4)));
            assert_eq!(g.embedding.face_lengths(), vec![3, 3, 3, 3]);
        }
    }

    #[test]
    fn invalid_scripts() {
        let err = gen_chordal_planar(&GenSpec::Script("E 0 1\nE 2 3\n".into())).unwrap_err();
        assert!(matches!(err, PlanarError::InvalidScript { line: 2, .. }));
        // the outer side of the triangle survives an edge-join on the inner side
        let g = gen_chordal_planar(&GenSpec::Script("E 0 1\nF 0 1 2\n".into())).unwrap();
        assert_eq!(g.graph.n(), 5);
        let err = gen_chordal_planar(&GenSpec::Script("F 0 1 2\nF 0 1 2\nF 0 1 2\n".into())).unwrap_err();
        assert!(matches!(err, PlanarError::InvalidScript { line: 3, .. }));
        assert!(matches!(
            gen_chordal_planar(&GenSpec::Script("X 1".into())),
            Err(PlanarError::InvalidScript { line: 1, .. })
        ));
        assert_eq!(
            gen_chordal_planar(&GenSpec::Random { family: Family::TwoTree, n: 2, seed: 0 }),
            Err(PlanarError::TooSmall(2))
        );
    }

    #[test]
    fn random_builds_are_planar_chordal() {
        for family in [Family::TwoTree, Family::ChordalPlanar, Family::Triangulation] {
            for seed in 0..20 {
                let g = gen_chordal_planar(&GenSpec::Random { family, n: 10, seed }).unwrap();
                assert_eq!(g.graph.n(), 10);
                assert!(g.graph.is_simple());
                assert!(is_chordal(&g.graph).chordal);
                assert!(is_planar(&g.graph));
                assert!(g.embedding.is_planar_embedding());
                let joins_only = g.script.iter().all(|s| matches!(s, BuildStep::EdgeJoin(..)));
                assert_eq!(is_two_tree(&g.graph), joins_only);
                if family == Family::Triangulation {
                    assert_eq!(g.graph.m(), 3 * 10 - 6);
                }
                let replay = gen_chordal_planar(&GenSpec::Script(emit_script(&g.script))).unwrap();
                assert_eq!(replay, g);
            }
        }
    }
}
