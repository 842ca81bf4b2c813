//! Canonical labeling by colour refinement plus individualization.
//!
//! The search tree is the usual one: refine the vertex partition to an
//! equitable one, and while it is not discrete, branch on every vertex of the
//! first non-singleton cell. Each leaf gives a relabeled graph; the smallest
//! one (comparing adjacency rows) is the canonical form. Refinement and the
//! choice of target cell are isomorphism-invariant, so isomorphic inputs
//! produce the same set of leaves. Branches on twin vertices (same
//! neighborhood outside each other) are skipped, since swapping twins is an
//! automorphism that fixes the current partition.

use super::{Graph, VertexSet, MAX_VERTICES};

type Colors = [u8; MAX_VERTICES];

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<([u32; MAX_VERTICES], Colors)>,
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let perm = canonical_labeling(g);
    g.permute(&perm)
}

/// A permutation `perm` (vertex `v` goes to `perm[v]`) such that
/// `g.permute(&perm)` is the canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, n, best: None };
    let mut colors = [0u8; MAX_VERTICES];
    // start from the degree partition
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    degs.dedup();
    for (v, c) in colors[..n].iter_mut().enumerate() {
        *c = degs.binary_search(&g.degree(v)).unwrap() as u8;
    }
    search.descend(colors, degs.len());
    let (_, colors) = search.best.expect("search reaches at least one leaf");
    colors[..n].iter().map(|&c| c as usize).collect()
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Colors, mut k: usize) {
        k = self.refine(&mut colors, k);
        let n = self.n;
        if k == n {
            let rows = self.relabeled(&colors);
            let better = match &self.best {
                None => true,
                Some((best, _)) => rows[..n] < best[..n],
            };
            if better {
                self.best = Some((rows, colors));
            }
            return;
        }
        let cell = (0..k as u8)
            .find(|&c| colors[..n].iter().filter(|&&x| x == c).count() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let members: VertexSet = (0..n).filter(|&v| colors[v] == cell).collect();
        let mut tried = VertexSet::EMPTY;
        for v in members {
            if tried.iter().any(|w| self.twins(v, w)) {
                continue;
            }
            tried = tried.with(v);
            let mut next = colors;
            for (u, c) in next[..n].iter_mut().enumerate() {
                if *c > cell || (*c == cell && u != v) {
                    *c += 1;
                }
            }
            self.descend(next, k + 1);
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let pair = VertexSet::singleton(a) | VertexSet::singleton(b);
        ((self.g.neighbors(a) ^ self.g.neighbors(b)) - pair).is_empty()
    }

    /// Splits cells by the number of neighbors in every cell until stable.
    fn refine(&self, colors: &mut Colors, mut k: usize) -> usize {
        let n = self.n;
        loop {
            let mut cells = [0u32; MAX_VERTICES];
            for v in 0..n {
                cells[colors[v] as usize] |= 1 << v;
            }
            let mut sigs: Vec<([u8; MAX_VERTICES + 1], usize)> = (0..n)
                .map(|v| {
                    let mut s = [0u8; MAX_VERTICES + 1];
                    s[0] = colors[v];
                    let row = self.g.neighbors(v).bits();
                    for c in 0..k {
                        s[c + 1] = (row & cells[c]).count_ones() as u8;
                    }
                    (s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = 0u8;
            for i in 0..n {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    next += 1;
                }
                colors[sigs[i].1] = next;
            }
            let new_k = next as usize + 1;
            if new_k == k {
                return k;
            }
            k = new_k;
        }
    }

    fn relabeled(&self, colors: &Colors) -> [u32; MAX_VERTICES] {
        let mut rows = [0u32; MAX_VERTICES];
        for u in 0..self.n {
            let mut r = 0u32;
            for w in self.g.neighbors(u) {
                r |= 1 << colors[w];
            }
            rows[colors[u] as usize] = r;
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelings_of_p3_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_eq!(canonical_form(&canonical_form(&a)), canonical_form(&a));
    }

    #[test]
    fn k3_is_c3() {
        assert_eq!(
            canonical_form(&Graph::complete(3)),
            canonical_form(&Graph::cycle(3))
        );
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        // twin pruning keeps edgeless and complete graphs linear
        for n in [16, 24, 32] {
            assert_eq!(canonical_form(&Graph::new(n)), Graph::new(n));
            assert_eq!(canonical_form(&Graph::complete(n)), Graph::complete(n));
        }
        let c = Graph::cycle(20);
        let shifted: Vec<usize> = (0..20).map(|v| (v + 7) % 20).collect();
        assert_eq!(canonical_form(&c), canonical_form(&c.permute(&shifted)));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = Graph::cycle(6);
        let two_c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3)).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }
}
