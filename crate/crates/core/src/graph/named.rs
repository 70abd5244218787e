//! Small named graphs used by tests, examples and the CLI.

use super::Multigraph;

fn build(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_pairs(n, pairs).expect("valid named graph")
}

pub fn complete(n: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    build(n, &pairs)
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in 0..b {
            pairs.push((i, a + j));
        }
    }
    build(a + b, &pairs)
}

pub fn cycle(n: usize) -> Multigraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &pairs)
}

pub fn path(n: usize) -> Multigraph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &pairs)
}

/// Two vertices joined by `k` parallel edges.
pub fn theta(k: usize) -> Multigraph {
    build(2, &vec![(0, 1); k])
}

/// One vertex with `k` loops.
pub fn bouquet(k: usize) -> Multigraph {
    build(1, &vec![(0, 0); k])
}

/// Hub 0 joined to the rim cycle `1..=n`.
pub fn wheel(n: usize) -> Multigraph {
    let mut pairs: Vec<_> = (0..n).map(|i| (1 + i, 1 + (i + 1) % n)).collect();
    pairs.extend((1..=n).map(|i| (0, i)));
    build(n + 1, &pairs)
}

/// Circular ladder on `2n` vertices.
pub fn prism(n: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        pairs.push((i, (i + 1) % n));
        pairs.push((n + i, n + (i + 1) % n));
        pairs.push((i, n + i));
    }
    build(2 * n, &pairs)
}

pub fn petersen() -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    build(10, &pairs)
}

pub fn cube() -> Multigraph {
    let mut pairs = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                pairs.push((v, v | bit));
            }
        }
    }
    build(8, &pairs)
}

/// The ten-vertex example with one proper 3-edge cutset separating {2, 3, 6}.
pub fn figure_one() -> Multigraph {
    build(
        10,
        &[
            (1, 8),
            (8, 9),
            (9, 1),
            (4, 8),
            (4, 9),
            (0, 7),
            (7, 4),
            (5, 7),
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (2, 6),
            (6, 4),
            (3, 6),
            (1, 4),
        ],
    )
}

/// Edge ids of the highlighted cutset of [`figure_one`].
pub fn figure_one_dashed_cut() -> [usize; 3] {
    [9, 11, 15]
}

/// Looks up a graph by a short name such as `k4`, `c5`, `prism3`, `k3,3`.
pub fn by_name(name: &str) -> Option<Multigraph> {
    let lower = name.to_ascii_lowercase();
    let num = |prefix: &str| -> Option<usize> { lower.strip_prefix(prefix)?.parse().ok() };
    match lower.as_str() {
        "petersen" => return Some(petersen()),
        "cube" => return Some(cube()),
        "figure1" => return Some(figure_one()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once(',') {
            let (a, b): (usize, usize) = (a.parse().ok()?, b.parse().ok()?);
            return (a <= 64 && b <= 64).then(|| complete_bipartite(a, b));
        }
    }
    let bounded = |n: usize| (n <= 64).then_some(n);
    if let Some(n) = num("prism").and_then(bounded) {
        return (n >= 3).then(|| prism(n));
    }
    if let Some(n) = num("wheel").and_then(bounded) {
        return (n >= 3).then(|| wheel(n));
    }
    if let Some(k) = num("theta").and_then(bounded) {
        return Some(theta(k));
    }
    if let Some(n) = num("k").and_then(bounded) {
        return Some(complete(n));
    }
    if let Some(n) = num("c").and_then(bounded) {
        return (n >= 1).then(|| cycle(n));
    }
    if let Some(n) = num("p").and_then(bounded) {
        return Some(path(n));
    }
    None
}
