use super::{guard, EvalOptions};
use crate::arith::Dyadic;
use crate::error::Result;
use crate::graph::Graph;
use crate::par;

const CHUNK_BITS: usize = 14;

/// `φ(G) = 2^{-3|V|} Σ (-1)^{|E(U, V∖U)|} 2^{|U|}` over vertex subsets `U`
/// whose induced subgraph has all degrees even.
///
/// Subsets are visited in Gray-code order. Two bitsets carry the state:
/// `odd`, the vertices with an odd number of neighbors in `U` (toggling `w`
/// flips exactly `N(w)`), and the parity of `Σ_{v∈U} deg v`, which equals
/// the parity of the cut.
pub fn phi_eulerian(g: &Graph, opts: &EvalOptions) -> Result<Dyadic> {
    let n = g.n();
    guard("phi_eulerian", n, opts.max_eulerian_vertices)?;
    let rows = g.rows();
    let low = n.min(CHUNK_BITS);
    let chunks = 1u64 << (n - low);
    let acc = par::sum_range_i128(opts.exec, 0..chunks, |hi| {
        let mut set = (hi << low) as u32;
        let mut odd = 0u32;
        let mut cut_odd = false;
        for w in crate::graph::VertexSet(set) {
            odd ^= rows[w];
            cut_odd ^= rows[w].count_ones() % 2 == 1;
        }
        let term = |set: u32, odd: u32, cut_odd: bool| -> i128 {
            if odd & set != 0 {
                return 0;
            }
            let t = 1i128 << set.count_ones();
            if cut_odd {
                -t
            } else {
                t
            }
        };
        let mut acc = term(set, odd, cut_odd);
        for i in 1u64..(1 << low) {
            let w = i.trailing_zeros() as usize;
            set ^= 1 << w;
            odd ^= rows[w];
            cut_odd ^= rows[w].count_ones() % 2 == 1;
            acc += term(set, odd, cut_odd);
        }
        acc
    });
    Ok(Dyadic::from_scaled(acc, -3 * n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    /// Direct transcription of the subset sum, no incremental state.
    fn naive(g: &Graph) -> Dyadic {
        let n = g.n();
        let mut acc = 0i128;
        for s in 0u32..(1 << n) {
            let u = crate::graph::VertexSet(s);
            if g.induced_subgraph(u).unwrap().is_eulerian() {
                let t = 1i128 << u.len();
                acc += if g.cut_size(u) % 2 == 1 { -t } else { t };
            }
        }
        Dyadic::from_scaled(acc, -3 * n as i64)
    }

    #[test]
    fn value_table() {
        let o = EvalOptions::default();
        assert_eq!(phi_eulerian(&Graph::complete(2), &o).unwrap(), d("-3/64"));
        assert_eq!(phi_eulerian(&Graph::complete(3), &o).unwrap(), d("15/512"));
        for n in 0..=5 {
            assert_eq!(
                phi_eulerian(&Graph::new(n), &o).unwrap(),
                d("3/8").pow(n as u32)
            );
        }
    }

    #[test]
    fn matches_naive_sum() {
        let gs = [
            Graph::cycle(5),
            Graph::complete(5),
            Graph::star(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]).unwrap(),
        ];
        for g in gs {
            assert_eq!(
                phi_eulerian(&g, &EvalOptions::default()).unwrap(),
                naive(&g)
            );
        }
    }

    #[test]
    fn multi_chunk() {
        let g = Graph::cycle(16);
        let a = phi_eulerian(&g, &EvalOptions::sequential()).unwrap();
        let b = phi_eulerian(&g, &EvalOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
