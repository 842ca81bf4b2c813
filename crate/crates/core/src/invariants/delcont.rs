use dashmap::DashMap;

use crate::arith::Dyadic;
use crate::graph::{canonical_form, Graph};

/// Memo for [`phi_delcont`], keyed by canonical form.
///
/// Only connected graphs with minimum degree at least two are stored; the
/// reductions handle everything else. Concurrent inserts of the same key
/// write the same value, so racing writers are harmless and one cache can be
/// shared by a whole sweep.
#[derive(Debug, Default)]
pub struct EvalCache {
    map: DashMap<Graph, Dyadic>,
}

impl EvalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, g: &Graph) -> Option<Dyadic> {
        self.map.get(&canonical_form(g)).map(|v| v.clone())
    }
}

fn isolated_factor() -> Dyadic {
    Dyadic::ratio(3, 3)
}

fn leaf_factor() -> Dyadic {
    // 3/8 - 1/2
    Dyadic::ratio(-1, 3)
}

/// φ by deletion-contraction:
/// `φ(G) = -φ(G - uv) + ¼ φ(G / uv)`, where the contraction replaces `u`, `v`
/// by one vertex adjacent to `(N(u) △ N(v)) ∖ {u, v}`.
///
/// Before recursing, isolated vertices contribute `3/8` each, leaves `-1/8`
/// each, and components are evaluated separately and multiplied. The edge
/// split on has the largest endpoint degree sum.
pub fn phi_delcont(g: &Graph, cache: &EvalCache) -> Dyadic {
    let mut alive = g.vertices();
    let mut isolated = 0u32;
    let mut leaves = 0u32;
    loop {
        let mut changed = false;
        for v in alive {
            match (g.neighbors(v) & alive).len() {
                0 => isolated += 1,
                1 => leaves += 1,
                _ => continue,
            }
            alive = alive.without(v);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let mut value = &isolated_factor().pow(isolated) * &leaf_factor().pow(leaves);
    for comp in g.components_within(alive) {
        value = &value * &connected(&g.induced_unchecked(comp), cache);
    }
    value
}

/// `g` is connected with minimum degree at least two.
fn connected(g: &Graph, cache: &EvalCache) -> Dyadic {
    let key = canonical_form(g);
    if let Some(v) = cache.map.get(&key) {
        return v.clone();
    }
    let (u, v) = g
        .edges()
        .into_iter()
        .max_by_key(|&(u, v)| (g.degree(u) + g.degree(v), std::cmp::Reverse((u, v))))
        .expect("min degree two implies an edge");
    let deleted = phi_delcont(&g.delete_edge(u, v).unwrap(), cache);
    let contracted = phi_delcont(&g.contract_sd(u, v).unwrap(), cache);
    let value = &contracted.shl(-2) - &deleted;
    cache.map.insert(key, value.clone());
    value
}
