//! Chordality, 2-tree recognition and a K4-minor test.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::Multigraph;

/// Either a perfect elimination order or a chordless cycle of length >= 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalityReport {
    pub chordal: bool,
    pub elimination_order: Option<Vec<usize>>,
    pub chordless_cycle: Option<Vec<usize>>,
}

fn neighbour_sets(g: &Multigraph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.n()];
    for (u, v) in g.simple_pairs() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// Maximum cardinality search followed by a perfect-elimination check on the
/// underlying simple graph.
pub fn is_chordal(g: &Multigraph) -> ChordalityReport {
    let adj = neighbour_sets(g);
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered[v] = true;
        visit.push(v);
        for &w in &adj[v] {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    let peo: Vec<usize> = visit.into_iter().rev().collect();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&first) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&bad) = later.iter().find(|&&w| w != first && !adj[first].contains(&w)) {
            let cycle = chordless_cycle_through(&adj, v, first, bad)
                .or_else(|| any_chordless_cycle(&adj))
                .expect("a graph without a perfect elimination order has a long chordless cycle");
            return ChordalityReport {
                chordal: false,
                elimination_order: None,
                chordless_cycle: Some(cycle),
            };
        }
    }
    ChordalityReport {
        chordal: true,
        elimination_order: Some(peo),
        chordless_cycle: None,
    }
}

/// Shortest `a`-`b` path avoiding `v` and its other neighbours, closed
/// through `v`. Any such path is induced, so the cycle has no chord.
fn chordless_cycle_through(adj: &[BTreeSet<usize>], v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in &adj[v] {
        if w != a && w != b {
            blocked[w] = true;
        }
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            let mut cycle = vec![v];
            cycle.extend(path);
            return Some(cycle);
        }
        for &y in &adj[x] {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

fn any_chordless_cycle(adj: &[BTreeSet<usize>]) -> Option<Vec<usize>> {
    for v in 0..adj.len() {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !adj[a].contains(&b) {
                    if let Some(c) = chordless_cycle_through(adj, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// True iff repeatedly deleting a degree-2 vertex with adjacent neighbours
/// ends at a triangle.
pub fn is_two_tree(g: &Multigraph) -> bool {
    let mut adj = neighbour_sets(g);
    let mut alive = g.n();
    if alive < 3 {
        return false;
    }
    let mut removed = vec![false; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).collect();
    while alive > 3 {
        let Some(v) = stack.pop() else { break };
        if removed[v] || adj[v].len() != 2 {
            continue;
        }
        let (a, b) = {
            let mut it = adj[v].iter();
            (*it.next().expect("two"), *it.next().expect("two"))
        };
        if !adj[a].contains(&b) {
            continue;
        }
        removed[v] = true;
        alive -= 1;
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        stack.push(a);
        stack.push(b);
    }
    if alive != 3 {
        return false;
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    rest.iter().all(|&v| adj[v].len() == 2)
}

/// Series-parallel reduction: a graph has no K4 minor iff deleting loops,
/// merging parallels, removing vertices of degree <= 1 and suppressing
/// degree-2 vertices empties it.
pub fn has_k4_minor(g: &Multigraph) -> bool {
    let mut adj = neighbour_sets(g);
    let n = g.n();
    let mut removed = vec![false; n];
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if removed[v] {
                continue;
            }
            match adj[v].len() {
                0 | 1 => {
                    for w in std::mem::take(&mut adj[v]) {
                        adj[w].remove(&v);
                    }
                    removed[v] = true;
                    changed = true;
                }
                2 => {
                    let nb: Vec<usize> = adj[v].iter().copied().collect();
                    let (a, b) = (nb[0], nb[1]);
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v].clear();
                    removed[v] = true;
                    changed = true;
                }
                _ => {}
            }
        }
    }
    removed.iter().any(|&r| !r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn is_chordless_cycle(g: &Multigraph, c: &[usize]) -> bool {
        let pairs = g.simple_pairs();
        let adj = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
        let k = c.len();
        k >= 4
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                    i == j || adj(c[i], c[j]) == consecutive
                })
            })
    }

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&complete(4)).chordal);
        let r = is_chordal(&cycle(4));
        assert!(!r.chordal);
        let c = r.chordless_cycle.unwrap();
        assert_eq!(c.len(), 4);
        assert!(is_chordless_cycle(&cycle(4), &c));
        let r = is_chordal(&petersen());
        assert!(is_chordless_cycle(&petersen(), &r.chordless_cycle.unwrap()));
        let r = is_chordal(&cube());
        assert!(is_chordless_cycle(&cube(), &r.chordless_cycle.unwrap()));
    }

    #[test]
    fn two_tree_examples() {
        assert!(is_two_tree(&complete(3)));
        assert!(!is_two_tree(&complete(4)));
        // fan: path 1-2-3-4 plus hub 0
        let fan = Multigraph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_two_tree(&fan));
        assert!(is_chordal(&fan).chordal);
        assert!(!has_k4_minor(&fan));
        assert!(!is_two_tree(&cycle(4)));
    }

    #[test]
    fn k4_minor_examples() {
        assert!(has_k4_minor(&complete(4)));
        assert!(has_k4_minor(&prism(3)));
        assert!(!has_k4_minor(&cycle(6)));
        assert!(!has_k4_minor(&theta(5)));
    }
}
