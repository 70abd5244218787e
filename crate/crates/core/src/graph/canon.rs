//! Canonical labeling by individualization and equitable refinement.

/// `labeling[i]` is the vertex placed at position `i`; `certificate` is the
/// upper triangle (diagonal included) of the relabeled multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n: usize,
    pub labeling: Vec<usize>,
    pub certificate: Vec<u32>,
}

impl CanonicalForm {
    /// Injective byte encoding of `(n, certificate)`.
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.certificate.len());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        for &c in &self.certificate {
            if c < 255 {
                out.push(c as u8);
            } else {
                out.push(255);
                out.extend_from_slice(&c.to_le_bytes());
            }
        }
        out
    }

    /// Inverse of `labeling`: the canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n];
        for (i, &v) in self.labeling.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Canonical form of the symmetric `n x n` matrix `adj` (row-major).
pub fn canonical_form(n: usize, adj: &[u32]) -> CanonicalForm {
    assert_eq!(adj.len(), n * n);
    let mut keyed: Vec<((u32, u64), usize)> = (0..n)
        .map(|v| {
            let deg: u64 = (0..n).map(|w| adj[v * n + w] as u64).sum();
            ((adj[v * n + v], deg), v)
        })
        .collect();
    keyed.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, &(k, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == k {
            cells.last_mut().expect("nonempty").push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    let mut search = Search {
        n,
        adj,
        best: None,
        automorphisms: Vec::new(),
    };
    refine(n, adj, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (labeling, certificate) = search.best.expect("at least one leaf");
    CanonicalForm {
        n,
        labeling,
        certificate,
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    best: Option<(Vec<usize>, Vec<u32>)>,
    /// Each entry maps vertex `v` to `perm[v]`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, lab: &[usize]) -> Vec<u32> {
        let n = self.n;
        let mut cert = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                cert.push(self.adj[lab[i] * n + lab[j]]);
            }
        }
        cert
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let members = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &members {
            if !explored.is_empty() && self.same_orbit_as_explored(prefix, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![w]);
            next.push(members.iter().copied().filter(|&x| x != w).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.n, self.adj, &mut next);
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let cert = self.certificate(&lab);
        match &self.best {
            None => self.best = Some((lab, cert)),
            Some((best_lab, best_cert)) => {
                if cert == *best_cert {
                    let mut perm = vec![0; self.n];
                    for (i, &v) in best_lab.iter().enumerate() {
                        perm[v] = lab[i];
                    }
                    self.automorphisms.push(perm);
                } else if cert < *best_cert {
                    self.best = Some((lab, cert));
                }
            }
        }
    }

    /// Orbit test under the automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit_as_explored(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|p| prefix.iter().all(|&v| p[v] == v))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in gens {
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, g[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == rw)
    }
}

/// Splits cells until every cell has uniform weight into every other cell.
/// Subcells appear in increasing weight order, keeping the result invariant
/// under relabeling.
fn refine(n: usize, adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].clone();
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u64, usize)> = cell
                    .iter()
                    .map(|&v| (splitter.iter().map(|&w| adj[v * n + w] as u64).sum(), v))
                    .collect();
                keyed.sort_unstable();
                if keyed[0].0 == keyed[keyed.len() - 1].0 {
                    next.push(cell);
                    continue;
                }
                changed = true;
                let mut group = vec![keyed[0].1];
                for win in keyed.windows(2) {
                    if win[1].0 != win[0].0 {
                        next.push(std::mem::take(&mut group));
                    }
                    group.push(win[1].1);
                }
                next.push(group);
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn petersen_relabelings_agree() {
        let g = named::petersen();
        let k = g.canonical_key();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(g.relabel(&perm).canonical_key(), k);
        assert_ne!(named::prism(5).canonical_key(), k);
    }

    #[test]
    fn labeling_reproduces_certificate() {
        let g = named::figure_one();
        let f = canonical_form(g.n(), &g.multiplicity_matrix());
        let h = g.relabel(&f.positions());
        let f2 = canonical_form(h.n(), &h.multiplicity_matrix());
        assert_eq!(f.certificate, f2.certificate);
    }
}
