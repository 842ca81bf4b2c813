//! Each identity is built as a pair of formal sums over explicit graphs and
//! compared by exact evaluation.
//!
//! Gadgets follow one convention: the host graph keeps its labels and the
//! explicitly drawn vertices are appended after it, each attached to its
//! stated subset of host vertices and to nothing else.

use super::formal::{eval_sum, expand_dashed, FormalSum};
use crate::arith::Dyadic;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::invariants::EvalOptions;

/// Two sides of a linear identity between graph invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: FormalSum,
    pub rhs: FormalSum,
}

impl Relation {
    pub fn difference(&self) -> FormalSum {
        self.lhs.minus(&self.rhs)
    }

    pub fn holds(&self, opts: &EvalOptions) -> Result<bool> {
        Ok(eval_sum(&self.lhs, opts)? == eval_sum(&self.rhs, opts)?)
    }
}

fn half() -> Dyadic {
    Dyadic::ratio(1, 1)
}

/// Host plus one new vertex per entry of `sets`, attached to that subset of
/// host vertices. Returns the indices of the new vertices.
pub fn attach(host: &Graph, sets: &[VertexSet]) -> Result<(Graph, Vec<usize>)> {
    let mut g = *host;
    let mut added = Vec::with_capacity(sets.len());
    for &s in sets {
        if !s.is_subset(host.vertices()) {
            return Err(Error::NotSubset);
        }
        let (h, v) = g.add_vertex(s)?;
        g = h;
        added.push(v);
    }
    Ok((g, added))
}

fn dashed(g: &Graph, pairs: &[(usize, usize)]) -> Result<FormalSum> {
    expand_dashed(g, &EdgeSet::new(pairs.iter().copied())?)
}

/// `φ(G) = -φ(G - uv) + ¼ φ(G / uv)` for an edge `uv`.
pub fn delcont_relation(g: &Graph, u: usize, v: usize) -> Result<Relation> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let mut rhs = FormalSum::new();
    rhs.push(Dyadic::from_int(-1), g.delete_edge(u, v)?);
    rhs.push(Dyadic::ratio(1, 2), g.contract_sd(u, v)?);
    Ok(Relation {
        lhs: FormalSum::single(*g),
        rhs,
    })
}

pub fn check_delcont(g: &Graph, u: usize, v: usize, opts: &EvalOptions) -> Result<bool> {
    delcont_relation(g, u, v)?.holds(opts)
}

/// Graph 4T: with the pair `uv` dashed, `G` and `pivot(G, u, v)` have the
/// same value.
pub fn four_t_relation(g: &Graph, u: usize, v: usize) -> Result<Relation> {
    let pivoted = g.pivot(u, v)?;
    Ok(Relation {
        lhs: dashed(g, &[(u, v)])?,
        rhs: dashed(&pivoted, &[(u, v)])?,
    })
}

pub fn check_4t(g: &Graph, u: usize, v: usize, opts: &EvalOptions) -> Result<bool> {
    four_t_relation(g, u, v)?.holds(opts)
}

/// Triangle identity. Left: three new vertices attached to `x`, `y`, `z`,
/// all three mutual pairs dashed. Right: half of two new vertices attached
/// to `x △ y` and `y △ z`, their pair dashed.
pub fn triangle_relation(
    host: &Graph,
    x: VertexSet,
    y: VertexSet,
    z: VertexSet,
) -> Result<Relation> {
    let (l, v) = attach(host, &[x, y, z])?;
    let lhs = dashed(&l, &[(v[0], v[1]), (v[0], v[2]), (v[1], v[2])])?;
    let (r, u) = attach(host, &[x ^ y, y ^ z])?;
    let rhs = dashed(&r, &[(u[0], u[1])])?.scaled(&half());
    Ok(Relation { lhs, rhs })
}

pub fn check_triangle(
    host: &Graph,
    x: VertexSet,
    y: VertexSet,
    z: VertexSet,
    opts: &EvalOptions,
) -> Result<bool> {
    triangle_relation(host, x, y, z)?.holds(opts)
}

/// Which of the two graph 6T relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SixTVariant {
    /// Outer vertices not adjacent on the left; right-hand second term has
    /// the edge.
    First,
    /// Outer vertices adjacent on the left; right-hand second term lacks the
    /// edge.
    Second,
}

/// Graph 6T relation. Left: `v1 ~ x`, `v2 ~ y`, `v3 ~ z`, pairs `v1v2` and
/// `v2v3` dashed, `v1v3` absent (first) or present (second). Right:
/// `½ [u1 ~ y, u2 ~ x△y△z, not adjacent] - ½ [u1 ~ x△y, u2 ~ y△z]` with
/// `u1u2` an edge in the first relation and not in the second.
pub fn six_t_relation(
    host: &Graph,
    x: VertexSet,
    y: VertexSet,
    z: VertexSet,
    variant: SixTVariant,
) -> Result<Relation> {
    let (mut l, v) = attach(host, &[x, y, z])?;
    if variant == SixTVariant::Second {
        l.set_edge(v[0], v[2], true)?;
    }
    let lhs = dashed(&l, &[(v[0], v[1]), (v[1], v[2])])?;
    let (a, _) = attach(host, &[y, x ^ y ^ z])?;
    let (mut b, u) = attach(host, &[x ^ y, y ^ z])?;
    if variant == SixTVariant::First {
        b.set_edge(u[0], u[1], true)?;
    }
    let mut rhs = FormalSum::new();
    rhs.push(half(), a);
    rhs.push(-half(), b);
    Ok(Relation { lhs, rhs })
}

pub fn check_6t(
    host: &Graph,
    x: VertexSet,
    y: VertexSet,
    z: VertexSet,
    variant: SixTVariant,
    opts: &EvalOptions,
) -> Result<bool> {
    six_t_relation(host, x, y, z, variant)?.holds(opts)
}

/// `(6T second) - (6T first) - (triangle)` collapses to zero term by term,
/// before any evaluation.
pub fn six_t_difference_is_triangle(
    host: &Graph,
    x: VertexSet,
    y: VertexSet,
    z: VertexSet,
) -> Result<bool> {
    let first = six_t_relation(host, x, y, z, SixTVariant::First)?.difference();
    let second = six_t_relation(host, x, y, z, SixTVariant::Second)?.difference();
    let tri = triangle_relation(host, x, y, z)?.difference();
    Ok(second.minus(&first).minus(&tri).is_symbolically_zero())
}

/// Variant of deletion-contraction. Left: `v1 ~ u_set`, `v2 ~ v_set` joined
/// by an edge, and `m ~ w_set` with pairs `m v1`, `m v2` dashed. Right: minus
/// the same without `v1 v2`, minus half of two vertices attached to `w_set`
/// and `u_set △ v_set` with their pair dashed.
pub fn delcont_var_relation(
    host: &Graph,
    u_set: VertexSet,
    v_set: VertexSet,
    w_set: VertexSet,
) -> Result<Relation> {
    let (mut l, v) = attach(host, &[u_set, v_set, w_set])?;
    let pairs = [(v[2], v[0]), (v[2], v[1])];
    l.set_edge(v[0], v[1], true)?;
    let lhs = dashed(&l, &pairs)?;
    let mut rhs = dashed(&l.delete_edge(v[0], v[1])?, &pairs)?.scaled(&Dyadic::from_int(-1));
    let (c, a) = attach(host, &[w_set, u_set ^ v_set])?;
    rhs = rhs.plus(&dashed(&c, &[(a[0], a[1])])?.scaled(&-half()));
    Ok(Relation { lhs, rhs })
}

pub fn check_delcont_var(
    host: &Graph,
    u_set: VertexSet,
    v_set: VertexSet,
    w_set: VertexSet,
    opts: &EvalOptions,
) -> Result<bool> {
    delcont_var_relation(host, u_set, v_set, w_set)?.holds(opts)
}
