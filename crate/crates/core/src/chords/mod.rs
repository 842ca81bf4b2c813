//! Chord diagrams: `2n` points on an oriented circle, paired by `n` chords.
//!
//! A diagram is stored as its pairing (`pairing[i]` is the partner of point
//! `i`), read from an arbitrary cut point of the circle. Diagrams are
//! considered up to rotation only; mirror images stay distinct.

mod four_term;
mod oracle;

pub use four_term::{four_term, FourTerm};
pub use oracle::{
    sl2_trace_oracle, sl2_trace_oracle_with, w_at_c38, Mat2, Rep2Basis, MAX_ORACLE_CHORDS,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest order accepted by [`enumerate_diagrams`].
pub const MAX_ENUM_CHORDS: usize = 7;

const LABELS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    pairing: Vec<usize>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        ChordDiagram {
            pairing: Vec::new(),
        }
    }

    /// Validates that `pairing` is a fixed-point-free involution.
    pub fn from_pairing(pairing: Vec<usize>) -> Result<Self> {
        let m = pairing.len();
        for (i, &j) in pairing.iter().enumerate() {
            if j >= m || j == i || pairing[j] != i {
                return Err(Error::InvalidDiagram(format!(
                    "point {i} is paired with {j}, which is not a valid partner"
                )));
            }
        }
        Ok(ChordDiagram { pairing })
    }

    /// Builds a diagram from a sequence of chord labels in which every label
    /// occurs exactly twice.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Result<Self> {
        let mut seen: std::collections::HashMap<&T, Vec<usize>> = Default::default();
        for (i, l) in labels.iter().enumerate() {
            seen.entry(l).or_default().push(i);
        }
        let mut pairing = vec![0; labels.len()];
        for pos in seen.values() {
            let &[a, b] = pos.as_slice() else {
                return Err(Error::InvalidDiagram(format!(
                    "every label must occur exactly twice (one occurs {} times)",
                    pos.len()
                )));
            };
            pairing[a] = b;
            pairing[b] = a;
        }
        Ok(ChordDiagram { pairing })
    }

    /// Parses a double-occurrence word such as `abab`.
    pub fn from_word(word: &str) -> Result<Self> {
        let chars: Vec<char> = word.trim().chars().collect();
        if chars.iter().any(|c| !c.is_ascii_alphabetic()) {
            return Err(Error::InvalidDiagram(format!(
                "{word:?}: labels must be ASCII letters"
            )));
        }
        Self::from_labels(&chars)
    }

    /// Double-occurrence word with chords lettered in order of first
    /// appearance.
    pub fn to_word(&self) -> String {
        let mut label = vec![0u8; self.pairing.len()];
        let mut next = 0;
        for i in 0..self.pairing.len() {
            let j = self.pairing[i];
            if j > i {
                let l = LABELS.get(next).copied().unwrap_or(b'?');
                label[i] = l;
                label[j] = l;
                next += 1;
            }
        }
        String::from_utf8(label).expect("ASCII labels")
    }

    pub fn order(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn points(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, point: usize) -> usize {
        self.pairing[point]
    }

    /// Chords as `(first, second)` endpoints, ordered by first endpoint. Chord
    /// `i` here is vertex `i` of the intersection graph.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.points())
            .filter(|&i| self.pairing[i] > i)
            .map(|i| (i, self.pairing[i]))
            .collect()
    }

    /// Index (in [`ChordDiagram::chords`] order) of the chord through `point`.
    pub fn chord_of(&self, point: usize) -> usize {
        let first = point.min(self.pairing[point]);
        (0..first).filter(|&i| self.pairing[i] > i).count()
    }

    /// Vertices are chords; two chords are adjacent when their endpoints
    /// interlace around the circle.
    pub fn intersection_graph(&self) -> Result<Graph> {
        let chords = self.chords();
        let mut g = Graph::try_new(chords.len())?;
        for (i, &(a, b)) in chords.iter().enumerate() {
            for (j, &(c, d)) in chords.iter().enumerate().skip(i + 1) {
                if (a < c && c < b) != (a < d && d < b) {
                    g.set_edge(i, j, true)?;
                }
            }
        }
        Ok(g)
    }

    /// The same diagram read from point `k` onwards.
    pub fn rotate(&self, k: usize) -> Self {
        let m = self.points();
        if m == 0 {
            return self.clone();
        }
        let k = k % m;
        let pairing = (0..m)
            .map(|i| (self.pairing[(i + k) % m] + m - k) % m)
            .collect();
        ChordDiagram { pairing }
    }

    /// Rotation-invariant description: the clockwise distance from each
    /// point to its partner.
    fn gaps(&self) -> Vec<usize> {
        let m = self.points();
        (0..m).map(|i| (self.pairing[i] + m - i) % m).collect()
    }

    /// The rotation whose gap sequence is lexicographically smallest.
    pub fn canonical_rotation(&self) -> Self {
        let m = self.points();
        if m == 0 {
            return self.clone();
        }
        let gaps = self.gaps();
        let best = (0..m)
            .min_by(|&a, &b| {
                let ra = gaps[a..].iter().chain(&gaps[..a]);
                let rb = gaps[b..].iter().chain(&gaps[..b]);
                ra.cmp(rb)
            })
            .unwrap();
        self.rotate(best)
    }

    /// Cuts `self` after point `break_self - 1` and `other` after
    /// `break_other - 1`, then concatenates the two opened circles.
    pub fn product_at(&self, other: &ChordDiagram, break_self: usize, break_other: usize) -> Self {
        let a = self.rotate(break_self);
        let b = other.rotate(break_other);
        let shift = a.points();
        let mut pairing = a.pairing;
        pairing.extend(b.pairing.iter().map(|&p| p + shift));
        ChordDiagram { pairing }
    }

    /// Product with the circles cut between the last and first points.
    pub fn product(&self, other: &ChordDiagram) -> Self {
        self.product_at(other, 0, 0)
    }

    /// The diagram read with the circle's orientation reversed.
    pub fn mirror(&self) -> Self {
        let m = self.points();
        let pairing = (0..m).map(|i| m - 1 - self.pairing[m - 1 - i]).collect();
        ChordDiagram { pairing }
    }

    /// Removes chord `index` (in [`ChordDiagram::chords`] order).
    pub fn remove_chord(&self, index: usize) -> Result<Self> {
        let chords = self.chords();
        let Some(&(a, b)) = chords.get(index) else {
            return Err(Error::InvalidDiagram(format!("no chord {index}")));
        };
        let keep: Vec<usize> = (0..self.points()).filter(|&p| p != a && p != b).collect();
        let mut pos = vec![usize::MAX; self.points()];
        for (i, &p) in keep.iter().enumerate() {
            pos[p] = i;
        }
        let pairing = keep.iter().map(|&p| pos[self.pairing[p]]).collect();
        Ok(ChordDiagram { pairing })
    }

    /// Chords that cross exactly one other chord.
    pub fn leaf_chords(&self) -> Result<Vec<usize>> {
        let g = self.intersection_graph()?;
        Ok(g.leaves().iter().collect())
    }
}

/// All diagrams of order `n`, one per rotation class, sorted.
///
/// Every one of the `(2n-1)!!` pairings is generated and reduced to its
/// canonical rotation.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<ChordDiagram>> {
    if n > MAX_ENUM_CHORDS || n > MAX_VERTICES {
        return Err(Error::SizeGuard {
            evaluator: "enumerate_diagrams",
            size: n,
            limit: MAX_ENUM_CHORDS,
        });
    }
    let mut out = BTreeSet::new();
    let mut pairing = vec![usize::MAX; 2 * n];
    all_pairings(&mut pairing, &mut |p| {
        out.insert(
            ChordDiagram {
                pairing: p.to_vec(),
            }
            .canonical_rotation(),
        );
    });
    Ok(out.into_iter().collect())
}

/// Calls `f` on every perfect matching of the points.
pub fn all_pairings(pairing: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let Some(i) = pairing.iter().position(|&p| p == usize::MAX) else {
        f(pairing);
        return;
    };
    for j in i + 1..pairing.len() {
        if pairing[j] == usize::MAX {
            pairing[i] = j;
            pairing[j] = i;
            all_pairings(pairing, f);
            pairing[i] = usize::MAX;
            pairing[j] = usize::MAX;
        }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({})", self.to_word())
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(w: &str) -> ChordDiagram {
        w.parse().unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(cd("abab").pairing(), &[2, 3, 0, 1]);
        assert_eq!(cd("xyyx").to_word(), "abba");
        assert!(ChordDiagram::from_word("aba").is_err());
        assert!(ChordDiagram::from_word("aaa").is_err());
        assert!(ChordDiagram::from_word("aaaa").is_err());
        assert!(ChordDiagram::from_word("a1a1").is_err());
        assert_eq!(cd(""), ChordDiagram::empty());
        assert!(ChordDiagram::from_pairing(vec![0, 1]).is_err());
        assert!(ChordDiagram::from_pairing(vec![1, 2, 0]).is_err());
    }

    #[test]
    fn intersection_graphs() {
        assert_eq!(cd("aa").intersection_graph().unwrap(), Graph::new(1));
        assert_eq!(cd("abab").intersection_graph().unwrap(), Graph::complete(2));
        assert_eq!(cd("aabb").intersection_graph().unwrap(), Graph::new(2));
        // four chords whose graph is the square 0-1-2-3 with diagonal 0-2
        let d = cd("abcadbcd");
        let g = d.intersection_graph().unwrap();
        assert_eq!(g.edge_count(), 5);
        let degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        let mut sorted = degs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![2, 2, 3, 3]);
    }

    #[test]
    fn rotations() {
        let d = cd("abcacb");
        let c = d.canonical_rotation();
        assert_eq!(c.canonical_rotation(), c);
        for k in 0..6 {
            assert_eq!(d.rotate(k).canonical_rotation(), c);
        }
        // mirror images are not identified: at order 4 exactly one class
        // and its mirror are distinct
        let classes = enumerate_diagrams(4).unwrap();
        let chiral: Vec<_> = classes
            .iter()
            .filter(|d| d.mirror().canonical_rotation() != **d)
            .collect();
        assert_eq!(chiral.len(), 2);
        assert_eq!(chiral[0].mirror().canonical_rotation(), *chiral[1]);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_diagrams(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 18, 105]);
        assert!(enumerate_diagrams(8).is_err());
    }

    #[test]
    fn products() {
        let d = cd("abcacb");
        assert_eq!(d.product(&ChordDiagram::empty()), d);
        let two = cd("aa").product(&cd("aa"));
        assert_eq!(two.intersection_graph().unwrap(), Graph::new(2));
        assert_eq!(two.to_word(), "aabb");
    }

    #[test]
    fn chord_removal() {
        let d = cd("abcacb");
        assert_eq!(d.remove_chord(0).unwrap().to_word(), "abba");
        assert!(d.remove_chord(3).is_err());
        assert_eq!(d.chord_of(4), 2);
        assert_eq!(d.chord_of(3), 0);
    }
}
