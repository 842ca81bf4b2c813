use std::collections::BTreeMap;

use crate::arith::Dyadic;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, EdgeSet, Graph};
use crate::invariants::{phi_eulerian, EvalOptions};

/// A finite linear combination of graphs with dyadic coefficients.
///
/// Evaluation is linear and ignores term order. Like terms are only merged
/// by [`FormalSum::collected`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: Vec<(Dyadic, Graph)>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(g: Graph) -> Self {
        FormalSum {
            terms: vec![(Dyadic::one(), g)],
        }
    }

    pub fn push(&mut self, coeff: Dyadic, g: Graph) {
        self.terms.push((coeff, g));
    }

    pub fn terms(&self) -> &[(Dyadic, Graph)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Dyadic) -> Self {
        FormalSum {
            terms: self.terms.iter().map(|(a, g)| (a * c, *g)).collect(),
        }
    }

    pub fn plus(&self, other: &FormalSum) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        FormalSum { terms }
    }

    pub fn minus(&self, other: &FormalSum) -> Self {
        self.plus(&other.scaled(&Dyadic::from_int(-1)))
    }

    /// Terms with isomorphic graphs merged (graphs replaced by canonical
    /// forms) and zero coefficients dropped; sorted by graph.
    pub fn collected(&self) -> Self {
        let mut acc: BTreeMap<Graph, Dyadic> = BTreeMap::new();
        for (c, g) in &self.terms {
            let e = acc.entry(canonical_form(g)).or_default();
            *e = &*e + c;
        }
        FormalSum {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (c, g))
                .collect(),
        }
    }

    /// Whether the sum vanishes identically in the free vector space on
    /// isomorphism classes.
    pub fn is_symbolically_zero(&self) -> bool {
        self.collected().is_empty()
    }

    /// `Σ coeff · f(graph)`.
    pub fn eval_with<F>(&self, mut f: F) -> Result<Dyadic>
    where
        F: FnMut(&Graph) -> Result<Dyadic>,
    {
        let mut total = Dyadic::zero();
        for (c, g) in &self.terms {
            total = &total + &(c * &f(g)?);
        }
        Ok(total)
    }
}

/// Resolves every dashed pair as present (`+`) or absent (`-`): `2^k` terms,
/// sign `(-1)^(number of absent pairs)`. Whether a dashed pair is an edge of
/// `g` beforehand does not matter.
pub fn expand_dashed(g: &Graph, dashed: &EdgeSet) -> Result<FormalSum> {
    for &(u, v) in dashed.pairs() {
        for w in [u, v] {
            if w >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: g.n(),
                });
            }
        }
    }
    let pairs = dashed.pairs();
    let mut out = FormalSum::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut h = *g;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            h.set_edge(u, v, mask >> k & 1 == 1)?;
        }
        let absent = pairs.len() as u32 - mask.count_ones();
        let sign = if absent.is_multiple_of(2) { 1 } else { -1 };
        out.push(Dyadic::from_int(sign), h);
    }
    Ok(out)
}

/// `Σ coeff · φ(graph)` using the Eulerian-subset evaluator.
pub fn eval_sum(s: &FormalSum, opts: &EvalOptions) -> Result<Dyadic> {
    s.eval_with(|g| phi_eulerian(g, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn one_dashed_pair() {
        let s = expand_dashed(&Graph::new(2), &EdgeSet::new([(0, 1)]).unwrap()).unwrap();
        let mut terms = s.terms().to_vec();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        assert_eq!(
            terms,
            vec![(d("1"), Graph::complete(2)), (d("-1"), Graph::new(2))]
        );
        assert_eq!(eval_sum(&s, &EvalOptions::default()).unwrap(), d("-3/16"));
    }

    #[test]
    fn zero_and_two_pairs() {
        let g = Graph::cycle(4);
        assert_eq!(
            expand_dashed(&g, &EdgeSet::default()).unwrap(),
            FormalSum::single(g)
        );
        let s = expand_dashed(&g, &EdgeSet::new([(0, 2), (1, 3)]).unwrap()).unwrap();
        let signs: Vec<Dyadic> = s.terms().iter().map(|t| t.0.clone()).collect();
        assert_eq!(signs, vec![d("1"), d("-1"), d("-1"), d("1")]);
        assert!(expand_dashed(&g, &EdgeSet::new([(0, 7)]).unwrap()).is_err());
        assert!(EdgeSet::new([(2, 2)]).is_err());
    }

    #[test]
    fn cancellation() {
        let o = EvalOptions::default();
        assert_eq!(eval_sum(&FormalSum::new(), &o).unwrap(), Dyadic::zero());
        let g = FormalSum::single(Graph::cycle(5));
        let z = g.minus(&g);
        assert_eq!(eval_sum(&z, &o).unwrap(), Dyadic::zero());
        assert!(z.is_symbolically_zero());
        // isomorphic terms merge
        let p = FormalSum::single(Graph::path(3)).minus(&FormalSum::single(
            Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap(),
        ));
        assert!(p.is_symbolically_zero());
    }

    #[test]
    fn expansion_composes() {
        let g = Graph::path(4);
        let both = expand_dashed(&g, &EdgeSet::new([(0, 2), (1, 3)]).unwrap()).unwrap();
        let mut staged = FormalSum::new();
        for (c, h) in expand_dashed(&g, &EdgeSet::new([(0, 2)]).unwrap())
            .unwrap()
            .terms()
        {
            staged = staged.plus(
                &expand_dashed(h, &EdgeSet::new([(1, 3)]).unwrap())
                    .unwrap()
                    .scaled(c),
            );
        }
        assert!(both.minus(&staged).is_symbolically_zero());
    }
}
