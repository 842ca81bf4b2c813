//! Labeled simple graphs on at most 32 vertices.
//!
//! Each neighborhood is stored as one `u32` bitset, so subset operations on
//! vertex sets are single machine instructions.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, canonical_labeling};
pub use enumerate::{
    enumerate_graphs, enumerate_graphs_by_masks, enumerate_graphs_up_to, graphs_from_graph6_stream,
    MAX_EXHAUSTIVE_N, MAX_MASK_N,
};

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

/// A set of vertex indices, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u32 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A set of unordered vertex pairs, kept sorted as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut v = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::SameVertex(a));
            }
            v.push((a.min(b), a.max(b)));
        }
        v.sort_unstable();
        v.dedup();
        Ok(EdgeSet(v))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A labeled simple graph.
///
/// Invariants: no loops, symmetric adjacency, and every bit at or above `n`
/// is clear. All constructors and operations maintain them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph `N_n`. Panics if `n > 32`; use [`Graph::try_new`]
    /// for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex cap exceeded")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.set_edge(u, v, true)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v).0;
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        let mut g = Self::new(k + 1);
        for v in 1..=k {
            g.link(0, v);
        }
        g
    }

    /// Builds a graph on `n` vertices from raw adjacency rows, enforcing the
    /// type invariants.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        if rows.len() != n {
            return Err(Error::NotSubset);
        }
        let all = VertexSet::full(n).0;
        for (v, &r) in rows.iter().enumerate() {
            if r & !all != 0 || r >> v & 1 == 1 {
                return Err(Error::NotSubset);
            }
            g.adj[v] = r;
        }
        for u in 0..n {
            for v in VertexSet(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::NotSubset);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1) as u32) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::NotSubset)
        }
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// In-place edge toggle to a given state.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<()> {
        self.check_pair(u, v)?;
        if present {
            self.link(u, v);
        } else {
            self.unlink(u, v);
        }
        Ok(())
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = *self;
        g.set_edge(u, v, true)?;
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = *self;
        g.set_edge(u, v, false)?;
        Ok(g)
    }

    /// Replaces the neighborhood of `u` outside `v` by
    /// `(N(u) △ N(v)) \ {u, v}`. The neighborhood of `v` and the `u`-`v`
    /// adjacency are left alone.
    pub fn pivot(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let uv = VertexSet::singleton(u) | VertexSet::singleton(v);
        let old = self.neighbors(u) - uv;
        let new = (self.neighbors(u) ^ self.neighbors(v)) - uv;
        let mut g = *self;
        for w in old ^ new {
            if new.contains(w) {
                g.link(u, w);
            } else {
                g.unlink(u, w);
            }
        }
        Ok(g)
    }

    /// Removes `u` and `v` and appends one vertex adjacent to
    /// `(N(u) △ N(v)) \ {u, v}`. The remaining vertices keep their relative
    /// order.
    pub fn contract_sd(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let uv = VertexSet::singleton(u) | VertexSet::singleton(v);
        let target = (self.neighbors(u) ^ self.neighbors(v)) - uv;
        let keep = self.vertices() - uv;
        let mut g = self.induced_unchecked(keep);
        let new = g.n();
        g.n += 1;
        for w in compress(target, keep) {
            g.link(new, w);
        }
        Ok(g)
    }

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        self.check_set(keep)?;
        Ok(self.induced_unchecked(keep))
    }

    pub(crate) fn induced_unchecked(&self, keep: VertexSet) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, v) in keep.iter().enumerate() {
            g.adj[i] = compress(self.neighbors(v) & keep, keep).0;
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    /// Same vertex set, edges exactly `edges`; every pair must be an edge of
    /// `self`.
    pub fn spanning_subgraph(&self, edges: &EdgeSet) -> Result<Graph> {
        let mut g = Graph::new(self.n());
        for &(u, v) in edges.pairs() {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let mut g = Graph::try_new(n)?;
        let shift = self.n();
        g.adj[..shift].copy_from_slice(self.rows());
        for (i, &r) in other.rows().iter().enumerate() {
            g.adj[shift + i] = r << shift;
        }
        Ok(g)
    }

    /// Appends a vertex adjacent to `nbrs`; returns the new graph and the
    /// index of the added vertex.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<(Graph, usize)> {
        self.check_set(nbrs)?;
        let mut g = Graph::try_new(self.n() + 1)?;
        g.adj[..self.n()].copy_from_slice(self.rows());
        let v = self.n();
        for w in nbrs {
            g.link(v, w);
        }
        Ok((g, v))
    }

    /// Number of edges with exactly one endpoint in `side`.
    pub fn cut_size(&self, side: VertexSet) -> usize {
        let side = side & self.vertices();
        let rest = self.vertices() - side;
        side.iter().map(|v| (self.neighbors(v) & rest).len()).sum()
    }

    /// Every degree even; connectivity is not required.
    pub fn is_eulerian(&self) -> bool {
        self.rows().iter().all(|r| r.count_ones() % 2 == 0)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub(crate) fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = alive;
        while let Some(s) = left.first() {
            let comp = self.reach(s, alive);
            out.push(comp);
            left = left - comp;
        }
        out
    }

    /// Vertices reachable from `s` inside `alive`.
    pub(crate) fn reach(&self, s: usize, alive: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.neighbors(v);
            }
            frontier = (next & alive) - seen;
            seen = seen | frontier;
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::new(self.n());
        for u in 0..self.n() {
            let mut row = 0u32;
            for w in self.neighbors(u) {
                row |= 1 << perm[w];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v] == 0).collect()
    }
}

/// Renumbers the members of `s` (a subset of `keep`) by their rank in `keep`.
fn compress(s: VertexSet, keep: VertexSet) -> VertexSet {
    let mut out = 0u32;
    for (i, v) in keep.iter().enumerate() {
        if s.contains(v) {
            out |= 1 << i;
        }
    }
    VertexSet(out)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_n1() -> Graph {
        Graph::from_edges(3, &[(0, 1)]).unwrap()
    }

    #[test]
    fn induced() {
        let k3 = Graph::complete(3);
        let s = VertexSet::from_vertices([0, 2]);
        assert_eq!(k3.induced_subgraph(s).unwrap(), Graph::complete(2));
        assert_eq!(
            k3.induced_subgraph(VertexSet::EMPTY).unwrap(),
            Graph::new(0)
        );
        // diamond: square 0-1-2-3 plus diagonal 0-2; 0 and 2 have degree 3
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(diamond.degree(0), 3);
        assert_eq!(diamond.degree(2), 3);
        let d = diamond
            .induced_subgraph(VertexSet::from_vertices([0, 2]))
            .unwrap();
        assert_eq!(d, Graph::complete(2));
        assert_eq!(
            k3.induced_subgraph(VertexSet::singleton(5)),
            Err(Error::NotSubset)
        );
    }

    #[test]
    fn spanning() {
        let k3 = Graph::complete(3);
        assert_eq!(
            k3.spanning_subgraph(&EdgeSet::default()).unwrap(),
            Graph::new(3)
        );
        let all = EdgeSet::new(k3.edges()).unwrap();
        assert_eq!(k3.spanning_subgraph(&all).unwrap(), k3);
        let p3 = Graph::path(3);
        let one = EdgeSet::new([(1, 0)]).unwrap();
        assert_eq!(p3.spanning_subgraph(&one).unwrap(), k2_n1());
        let bad = EdgeSet::new([(0, 2)]).unwrap();
        assert_eq!(
            p3.spanning_subgraph(&bad),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn edge_edits() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.delete_edge(0, 1).unwrap(), Graph::new(2));
        assert_eq!(Graph::new(2).add_edge(0, 1).unwrap(), k2);
        assert_eq!(k2.add_edge(1, 0).unwrap(), k2);
        assert_eq!(k2.add_edge(1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn pivot_examples() {
        let k3 = Graph::complete(3);
        let p = k3.pivot(0, 1).unwrap();
        assert_eq!(p, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        let p3 = Graph::path(3);
        assert_eq!(p3.pivot(1, 2).unwrap(), p3);
        assert_eq!(k3.pivot(2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn contract_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.contract_sd(0, 1).unwrap(), Graph::new(2));
        assert_eq!(Graph::complete(2).contract_sd(0, 1).unwrap(), Graph::new(1));
        // a-b-c, contract b,c: new vertex adjacent to a
        assert_eq!(
            Graph::path(3).contract_sd(1, 2).unwrap(),
            Graph::complete(2)
        );
        assert!(k3.contract_sd(0, 0).is_err());
    }

    #[test]
    fn unions() {
        let n1 = Graph::new(1);
        assert_eq!(n1.disjoint_union(&n1).unwrap(), Graph::new(2));
        assert_eq!(Graph::complete(2).disjoint_union(&n1).unwrap(), k2_n1());
        let c5 = Graph::cycle(5);
        assert_eq!(c5.disjoint_union(&Graph::new(0)).unwrap(), c5);
        let big = Graph::new(20);
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::TooManyVertices { requested: 40, .. })
        ));
    }

    #[test]
    fn cuts_and_parity() {
        assert_eq!(Graph::complete(2).cut_size(VertexSet::singleton(0)), 1);
        assert_eq!(Graph::cycle(5).cut_size(VertexSet::EMPTY), 0);
        assert_eq!(
            Graph::cycle(4).cut_size(VertexSet::from_vertices([0, 2])),
            4
        );
        assert!(Graph::new(5).is_eulerian());
        assert!(!Graph::complete(2).is_eulerian());
        let c3c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3)).unwrap();
        assert!(c3c3.is_eulerian());
    }

    #[test]
    fn component_counts() {
        assert_eq!(Graph::new(4).component_count(), 4);
        assert_eq!(Graph::complete(3).component_count(), 1);
        assert_eq!(k2_n1().component_count(), 2);
        assert_eq!(Graph::new(0).component_count(), 0);
    }

    #[test]
    fn rows_validated() {
        assert!(Graph::from_rows(2, &[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(2, &[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(2, &[0b01, 0b00]).is_err());
        assert!(Graph::from_rows(2, &[0b110, 0b001]).is_err());
    }
}
