use serde::Serialize;

use super::{phi, EvalOptions};
use crate::arith::Dyadic;
use crate::error::Result;
use crate::graph::Graph;

/// Outcome of testing `0 < |φ(G)| <= (3/8)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub value: Dyadic,
    pub bound: Dyadic,
    pub nonzero: bool,
    pub within_bound: bool,
    /// `|φ(G)|` equals the bound.
    pub attained: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.nonzero && self.within_bound
    }
}

pub fn check_bound(g: &Graph, opts: &EvalOptions) -> Result<BoundCheck> {
    let value = phi(g, opts)?;
    let bound = Dyadic::ratio(3, 3).pow(g.n() as u32);
    let ord = value.cmp_abs(&bound);
    Ok(BoundCheck {
        nonzero: !value.is_zero(),
        within_bound: ord.is_le(),
        attained: ord.is_eq(),
        value,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let o = EvalOptions::default();
        for n in 0..6 {
            let b = check_bound(&Graph::new(n), &o).unwrap();
            assert!(b.holds() && b.attained);
        }
        let b = check_bound(&Graph::complete(2), &o).unwrap();
        assert!(b.holds() && !b.attained);
        assert_eq!(b.value.abs(), "3/64".parse().unwrap());
        assert_eq!(b.bound, "9/64".parse().unwrap());
    }
}
