//! The two edge-subset formulas for φ. Both walk the `2^|E|` spanning
//! subgraphs in Gray-code order, so consecutive subgraphs differ by one edge.

use super::{chi3, guard, EvalOptions};
use crate::arith::Dyadic;
use crate::error::Result;
use crate::graph::Graph;
use crate::par::{self, Exec};

/// Low bits walked inside one work unit.
const CHUNK_BITS: usize = 12;

/// Sums `term(subgraph, edge_count)` over all spanning subgraphs of `g`.
fn sum_spanning<F>(g: &Graph, exec: Exec, term: F) -> i128
where
    F: Fn(&Graph, u32) -> i128 + Sync + Send,
{
    let edges = g.edges();
    let m = edges.len();
    let low = m.min(CHUNK_BITS);
    let chunks = 1u64 << (m - low);
    par::sum_range_i128(exec, 0..chunks, |hi| {
        let mut h = Graph::new(g.n());
        for (k, &(u, v)) in edges[low..].iter().enumerate() {
            if hi >> k & 1 == 1 {
                h.set_edge(u, v, true).unwrap();
            }
        }
        let mut count = hi.count_ones();
        let mut acc = term(&h, count);
        for i in 1u64..(1 << low) {
            let (u, v) = edges[i.trailing_zeros() as usize];
            let present = !h.has_edge(u, v);
            h.set_edge(u, v, present).unwrap();
            if present {
                count += 1;
            } else {
                count -= 1;
            }
            acc += term(&h, count);
        }
        acc
    })
}

fn signed_pow2(k: u32) -> i128 {
    if k.is_multiple_of(2) {
        1i128 << k
    } else {
        -(1i128 << k)
    }
}

/// `φ(G) = 2^{-3|V|} Σ_{E' ⊆ E} (-2)^{|E'|} χ₃(G|_{E'})`.
pub fn phi_direct(g: &Graph, opts: &EvalOptions) -> Result<Dyadic> {
    guard("phi_direct", g.edge_count(), opts.max_direct_edges)?;
    let acc = sum_spanning(g, opts.exec, |h, k| signed_pow2(k) * chi3(h) as i128);
    Ok(Dyadic::from_scaled(acc, -3 * g.n() as i64))
}

/// `φ(G) = 2^{-3|V|} (-1)^{|E|} Σ_{E' ⊆ E} (-2)^{|E'|} 3^{c(G|_{E'})}`, with
/// `c` the number of connected components.
pub fn phi_components(g: &Graph, opts: &EvalOptions) -> Result<Dyadic> {
    guard("phi_components", g.edge_count(), opts.max_components_edges)?;
    let acc = sum_spanning(g, opts.exec, |h, k| {
        signed_pow2(k) * 3i128.pow(h.component_count() as u32)
    });
    let acc = if g.edge_count().is_multiple_of(2) {
        acc
    } else {
        -acc
    };
    Ok(Dyadic::from_scaled(acc, -3 * g.n() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn value_table() {
        let o = EvalOptions::default();
        for f in [phi_direct, phi_components] {
            for n in 0..=5u32 {
                assert_eq!(f(&Graph::new(n as usize), &o).unwrap(), d("3/8").pow(n));
            }
            assert_eq!(f(&Graph::complete(2), &o).unwrap(), d("-3/64"));
            assert_eq!(f(&Graph::path(3), &o).unwrap(), d("3/512"));
            assert_eq!(f(&Graph::complete(3), &o).unwrap(), d("15/512"));
        }
        assert_eq!(phi_components(&Graph::new(0), &o).unwrap(), Dyadic::one());
    }

    #[test]
    fn chunked_walk_matches_small_walk() {
        // K6 has 15 edges, so the walk spans several chunks
        let g = Graph::complete(6);
        let seq = EvalOptions::sequential();
        let par = EvalOptions::default();
        assert_eq!(phi_direct(&g, &seq).unwrap(), phi_direct(&g, &par).unwrap());
        assert_eq!(
            phi_direct(&g, &seq).unwrap(),
            phi_components(&g, &seq).unwrap()
        );
    }

    #[test]
    fn guard_refuses() {
        let o = EvalOptions {
            max_direct_edges: 5,
            ..EvalOptions::default()
        };
        assert_eq!(
            phi_direct(&Graph::complete(4), &o),
            Err(Error::SizeGuard {
                evaluator: "phi_direct",
                size: 6,
                limit: 5
            })
        );
    }
}
