//! Isomorphism-free enumeration of simple graphs.
//!
//! The primary path grows classes one vertex at a time: every graph on `n`
//! vertices becomes a graph on `n - 1` vertices after deleting its last
//! vertex, so attaching a new vertex to every subset of every `(n-1)`-class
//! and deduplicating by canonical form reaches every `n`-class. The
//! edge-mask path (all `2^(n(n-1)/2)` labeled graphs) is kept as an
//! independent cross-check for small `n`.

use std::collections::HashSet;
use std::io::BufRead;

use super::{canonical_form, Graph, VertexSet};
use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Largest `n` accepted by [`enumerate_graphs`] (12346 classes at 8).
pub const MAX_EXHAUSTIVE_N: usize = 9;
/// Largest `n` accepted by [`enumerate_graphs_by_masks`].
pub const MAX_MASK_N: usize = 7;

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::SizeGuard {
            evaluator: "enumerate_graphs",
            size: n,
            limit: MAX_EXHAUSTIVE_N,
        });
    }
    Ok(enumerate_graphs_up_to(n)?
        .pop()
        .expect("level 0 is always present"))
}

/// `levels[k]` holds the classes on `k` vertices, for `k = 0..=max_n`.
pub fn enumerate_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(Error::SizeGuard {
            evaluator: "enumerate_graphs",
            size: max_n,
            limit: MAX_EXHAUSTIVE_N,
        });
    }
    let mut levels = vec![vec![Graph::new(0)]];
    for m in 1..=max_n {
        let next = extend(&levels[m - 1], m);
        levels.push(next);
    }
    Ok(levels)
}

fn extend(prev: &[Graph], m: usize) -> Vec<Graph> {
    let subsets = 1u64 << (m - 1);
    let chunks = par::map(Exec::default(), prev, |g| {
        (0..subsets)
            .map(|s| {
                let (h, _) = g.add_vertex(VertexSet(s as u32)).expect("within cap");
                canonical_form(&h)
            })
            .collect::<HashSet<Graph>>()
    });
    let mut all: HashSet<Graph> = HashSet::new();
    for c in chunks {
        all.extend(c);
    }
    let mut out: Vec<Graph> = all.into_iter().collect();
    out.sort_unstable();
    out
}

/// Same classes as [`enumerate_graphs`], found by canonicalizing every
/// labeled graph on `n` vertices.
pub fn enumerate_graphs_by_masks(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_MASK_N {
        return Err(Error::SizeGuard {
            evaluator: "enumerate_graphs_by_masks",
            size: n,
            limit: MAX_MASK_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let block = 1u64 << pairs.len().min(12);
    let blocks = total / block;
    let sets = par::map_range(Exec::default(), 0..blocks, |b| {
        let mut seen = HashSet::new();
        for mask in b * block..(b + 1) * block {
            let mut g = Graph::new(n);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.link(i, j);
                }
            }
            seen.insert(canonical_form(&g));
        }
        seen
    });
    let mut all = HashSet::new();
    for s in sets {
        all.extend(s);
    }
    let mut out: Vec<Graph> = all.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Reads graph6 lines (blank lines and a `>>graph6<<` header are skipped)
/// and returns one canonical representative per class seen, sorted. This is
/// the path for externally generated catalogues.
pub fn graphs_from_graph6_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    for line in reader.lines() {
        let line = line.map_err(|e| Error::Graph6(e.to_string()))?;
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        seen.insert(canonical_form(&Graph::from_graph6(line)?));
    }
    let mut out: Vec<Graph> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        let levels = enumerate_graphs_up_to(5).unwrap();
        assert_eq!(levels.iter().map(Vec::len).collect::<Vec<_>>(), counts);
    }

    #[test]
    fn mask_path_agrees() {
        for n in 0..=5 {
            assert_eq!(
                enumerate_graphs(n).unwrap(),
                enumerate_graphs_by_masks(n).unwrap()
            );
        }
    }

    #[test]
    fn guards() {
        assert!(enumerate_graphs(10).is_err());
        assert!(enumerate_graphs_by_masks(8).is_err());
    }

    #[test]
    fn stream_path() {
        let text = ">>graph6<<Bg\nBW\n\nBo\n";
        let gs = graphs_from_graph6_stream(text.as_bytes()).unwrap();
        // Bg, BW and Bo are all labelings of P3
        assert_eq!(gs, vec![canonical_form(&Graph::path(3))]);
        assert!(graphs_from_graph6_stream("B!\n".as_bytes()).is_err());
    }
}
