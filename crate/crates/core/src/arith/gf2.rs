use crate::graph::Graph;

/// A square matrix over GF(2); row `i` is a bitset of its nonzero columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    order: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub const MAX_ORDER: usize = 64;

    pub fn zero(order: usize) -> Self {
        assert!(order <= Self::MAX_ORDER);
        Gf2Matrix {
            order,
            rows: vec![0; order],
        }
    }

    pub fn from_rows(rows: Vec<u64>) -> Self {
        let order = rows.len();
        assert!(order <= Self::MAX_ORDER);
        let mask = if order == 64 {
            u64::MAX
        } else {
            (1u64 << order) - 1
        };
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "entries outside the matrix"
        );
        Gf2Matrix { order, rows }
    }

    /// The adjacency matrix `A(G)`: symmetric with zero diagonal.
    pub fn adjacency(g: &Graph) -> Self {
        Gf2Matrix {
            order: g.n(),
            rows: g.rows().iter().map(|&r| r as u64).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn rank(&self) -> usize {
        rank_rows(self.rows.iter().copied())
    }

    pub fn corank(&self) -> usize {
        self.order - self.rank()
    }
}

/// Rank of the span of `rows` by Gaussian elimination: each row is reduced
/// against the pivots found so far (indexed by leading bit).
pub fn rank_rows<I: IntoIterator<Item = u64>>(rows: I) -> usize {
    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let top = 63 - r.leading_zeros() as usize;
            if pivots[top] == 0 {
                pivots[top] = r;
                rank += 1;
                break;
            }
            r ^= pivots[top];
        }
    }
    rank
}

pub fn corank_rows(rows: &[u64]) -> usize {
    rows.len() - rank_rows(rows.iter().copied())
}
