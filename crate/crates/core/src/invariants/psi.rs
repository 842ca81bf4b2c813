use super::{guard, EvalOptions};
use crate::arith::{rank_rows, Dyadic};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::par;

const CHUNK_BITS: usize = 12;

/// `ψ(G) = 2^{-2|V|} Σ_{U ⊆ V} (-1/2)^{|V|-|U|} 2^{corank A(G|_U)}`, with the
/// corank taken over GF(2).
///
/// Each term is `(-1)^{|V|-|U|} 2^{corank + |U|}` once the whole sum is scaled
/// by `2^{3|V|}`.
pub fn psi(g: &Graph, opts: &EvalOptions) -> Result<Dyadic> {
    let n = g.n();
    guard("psi", n, opts.max_psi_vertices)?;
    let rows = g.rows();
    let low = n.min(CHUNK_BITS);
    let chunks = 1u64 << (n - low);
    let acc = par::sum_range_i128(opts.exec, 0..chunks, |hi| {
        let mut acc = 0i128;
        for lo in 0u64..(1 << low) {
            let u = VertexSet(((hi << low) | lo) as u32);
            let k = u.len();
            let rank = rank_rows(u.iter().map(|v| (rows[v] & u.bits()) as u64));
            let t = 1i128 << (2 * k - rank);
            acc += if (n - k) % 2 == 1 { -t } else { t };
        }
        acc
    });
    Ok(Dyadic::from_scaled(acc, -3 * n as i64))
}
