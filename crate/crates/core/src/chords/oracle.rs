//! The sl(2) weight system evaluated in the 2-dimensional irreducible
//! representation.
//!
//! For the Killing form `B(x, y) = 4 tr(xy)` on traceless 2x2 matrices the
//! dual basis of `(E, F, H)` is `(F/4, E/4, H/8)`. Each chord carries one
//! basis element at its first endpoint and the dual element at its second;
//! the weight of a diagram is the trace of the product of the matrices read
//! around the circle, summed over all `3^n` choices. The result is central,
//! hence a scalar times the identity, and the scalar is the value of the
//! weight system at `c = 3/8`, the Casimir eigenvalue on this representation.

use super::ChordDiagram;
use crate::arith::Dyadic;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

pub const MAX_ORACLE_CHORDS: usize = 8;

pub type Mat2 = [[i64; 2]; 2];

const IDENTITY: Mat2 = [[1, 0], [0, 1]];

fn mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// Basis `E, F, H` of sl(2) in the defining representation together with
/// the Killing-dual pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep2Basis {
    /// `E` (raising), `F` (lowering), `H = diag(1, -1)`.
    pub matrices: [Mat2; 3],
    /// Index of the basis element paired with each one.
    pub dual: [usize; 3],
    /// Coefficient of the dual element: `1/4, 1/4, 1/8`.
    pub weights: [Dyadic; 3],
}

impl Default for Rep2Basis {
    fn default() -> Self {
        Rep2Basis {
            matrices: [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]],
            dual: [1, 0, 2],
            weights: [
                Dyadic::ratio(1, 2),
                Dyadic::ratio(1, 2),
                Dyadic::ratio(1, 3),
            ],
        }
    }
}

impl Rep2Basis {
    /// `Σ_i w_i X_i X_{dual(i)}` as an exact matrix; equals `(3/8) I`.
    pub fn casimir(&self) -> [[Dyadic; 2]; 2] {
        let mut out: [[Dyadic; 2]; 2] = Default::default();
        for i in 0..3 {
            let p = mul(&self.matrices[i], &self.matrices[self.dual[i]]);
            for r in 0..2 {
                for c in 0..2 {
                    out[r][c] = &out[r][c] + &(&self.weights[i] * &Dyadic::from_int(p[r][c]));
                }
            }
        }
        out
    }

    /// Weights times 8, as integers.
    fn scaled_weights(&self) -> [i128; 3] {
        let eight = Dyadic::from_int(8);
        self.weights.clone().map(|w| {
            let s = &w * &eight;
            assert!(s.exponent() >= 0, "weights must be multiples of 1/8");
            s.to_fraction_string().parse().unwrap()
        })
    }
}

/// `Σ_{assignments} (Π weights) tr(Π matrices)` for the defining
/// representation. Equals twice the weight-system value.
pub fn sl2_trace_oracle(d: &ChordDiagram) -> Result<Dyadic> {
    sl2_trace_oracle_with(d, &Rep2Basis::default(), Exec::default())
}

pub fn sl2_trace_oracle_with(d: &ChordDiagram, basis: &Rep2Basis, exec: Exec) -> Result<Dyadic> {
    let n = d.order();
    if n > MAX_ORACLE_CHORDS {
        return Err(Error::SizeGuard {
            evaluator: "sl2_trace_oracle",
            size: n,
            limit: MAX_ORACLE_CHORDS,
        });
    }
    // per point: which chord, and whether it is the chord's first endpoint
    let slots: Vec<(usize, bool)> = (0..d.points())
        .map(|p| (d.chord_of(p), p < d.partner(p)))
        .collect();
    let weights = basis.scaled_weights();
    let inner = n.min(5);
    let outer = 3u64.pow((n - inner) as u32);
    let acc = par::sum_range_i128(exec, 0..outer, |hi| {
        let mut acc = 0i128;
        let mut choice = vec![0usize; n];
        for lo in 0..3u64.pow(inner as u32) {
            let mut code = hi * 3u64.pow(inner as u32) + lo;
            for c in choice.iter_mut() {
                *c = (code % 3) as usize;
                code /= 3;
            }
            let mut m = IDENTITY;
            for &(chord, first) in &slots {
                let i = choice[chord];
                let x = if first { i } else { basis.dual[i] };
                m = mul(&m, &basis.matrices[x]);
            }
            let tr = (m[0][0] + m[1][1]) as i128;
            if tr != 0 {
                let w: i128 = choice.iter().map(|&i| weights[i]).product();
                acc += w * tr;
            }
        }
        acc
    });
    Ok(Dyadic::from_scaled(acc, -3 * n as i64))
}

/// The sl(2) weight system at `c = 3/8`: half the trace, since the
/// representation is 2-dimensional and the result is a scalar matrix.
pub fn w_at_c38(d: &ChordDiagram) -> Result<Dyadic> {
    Ok(sl2_trace_oracle(d)?.shl(-1))
}
