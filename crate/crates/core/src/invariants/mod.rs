//! The invariant φ by four independent routes, the companion ψ, and the
//! extremal bound check.
//!
//! Every route returns a [`Dyadic`] in normal form, so agreement between
//! routes is plain equality.

mod bound;
mod chi3;
mod delcont;
mod eulerian;
mod formulas;
mod psi;

pub use bound::{check_bound, BoundCheck};
pub use chi3::{chi3, chi3_inclusion_exclusion};
pub use delcont::{phi_delcont, EvalCache};
pub use eulerian::phi_eulerian;
pub use formulas::{phi_components, phi_direct};
pub use psi::psi;

use crate::arith::Dyadic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

/// Size guards for the exponential evaluators and the execution mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    /// `phi_direct` enumerates `2^|E|` spanning subgraphs.
    pub max_direct_edges: usize,
    /// `phi_components` enumerates `2^|E|` spanning subgraphs.
    pub max_components_edges: usize,
    /// `phi_eulerian` enumerates `2^|V|` vertex subsets.
    pub max_eulerian_vertices: usize,
    /// `psi` enumerates `2^|V|` vertex subsets with an elimination each.
    pub max_psi_vertices: usize,
    /// Deletion-contraction branches once per independent cycle; guarded on
    /// the cyclomatic number `|E| - |V| + components`.
    pub max_delcont_cyclomatic: usize,
    pub exec: Exec,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            max_direct_edges: 20,
            max_components_edges: 20,
            max_eulerian_vertices: 24,
            max_psi_vertices: 24,
            max_delcont_cyclomatic: 40,
            exec: Exec::default(),
        }
    }
}

impl EvalOptions {
    pub fn sequential() -> Self {
        EvalOptions {
            exec: Exec::Sequential,
            ..Self::default()
        }
    }
}

/// `|E| - |V| + components`, the number of independent cycles.
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.n()
}

/// [`phi_delcont`] behind the cyclomatic guard.
pub fn phi_delcont_guarded(g: &Graph, opts: &EvalOptions, cache: &EvalCache) -> Result<Dyadic> {
    guard(
        "phi_delcont",
        cyclomatic_number(g),
        opts.max_delcont_cyclomatic,
    )?;
    Ok(phi_delcont(g, cache))
}

pub(crate) fn guard(evaluator: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeGuard {
            evaluator,
            size,
            limit,
        })
    } else {
        Ok(())
    }
}

/// φ by the fastest route that fits the guards: the Eulerian-subset sum,
/// falling back to deletion-contraction for graphs too large for it.
pub fn phi(g: &Graph, opts: &EvalOptions) -> Result<Dyadic> {
    if g.n() <= opts.max_eulerian_vertices {
        phi_eulerian(g, opts)
    } else {
        phi_delcont_guarded(g, opts, &EvalCache::new())
    }
}

/// Names for the four φ routes, used in reports and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Evaluator {
    Direct,
    Eulerian,
    Components,
    DelCont,
}

impl Evaluator {
    pub const ALL: [Evaluator; 4] = [
        Evaluator::Direct,
        Evaluator::Eulerian,
        Evaluator::Components,
        Evaluator::DelCont,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Evaluator::Direct => "direct",
            Evaluator::Eulerian => "eulerian",
            Evaluator::Components => "components",
            Evaluator::DelCont => "delcont",
        }
    }

    pub fn from_name(s: &str) -> Option<Evaluator> {
        Self::ALL.into_iter().find(|e| e.name() == s)
    }

    /// Runs this route; deletion-contraction gets a fresh cache unless one
    /// is supplied.
    pub fn eval(self, g: &Graph, opts: &EvalOptions, cache: Option<&EvalCache>) -> Result<Dyadic> {
        match self {
            Evaluator::Direct => phi_direct(g, opts),
            Evaluator::Eulerian => phi_eulerian(g, opts),
            Evaluator::Components => phi_components(g, opts),
            Evaluator::DelCont => match cache {
                Some(c) => phi_delcont_guarded(g, opts, c),
                None => phi_delcont_guarded(g, opts, &EvalCache::new()),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delcont_guard() {
        let o = EvalOptions::default();
        assert_eq!(cyclomatic_number(&Graph::cycle(30)), 1);
        assert_eq!(cyclomatic_number(&Graph::complete(12)), 55);
        assert!(matches!(
            Evaluator::DelCont.eval(&Graph::complete(12), &o, None),
            Err(Error::SizeGuard {
                evaluator: "phi_delcont",
                size: 55,
                limit: 40
            })
        ));
        // large sparse graphs go through deletion-contraction
        let c = phi(&Graph::cycle(30), &o).unwrap();
        let c_direct = Evaluator::DelCont
            .eval(&Graph::cycle(30), &o, None)
            .unwrap();
        assert_eq!(c, c_direct);
    }
}
