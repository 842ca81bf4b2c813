use super::ChordDiagram;
use crate::error::{Error, Result};

/// The four diagrams of one 4T relation with their signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourTerm {
    pub terms: [(i32, ChordDiagram); 4],
}

/// Builds the 4T relation in which one endpoint of a moving chord slides
/// past both endpoints of a fixed chord.
///
/// `moving_point` must sit next to an endpoint of chord `fixed_chord` (in
/// [`ChordDiagram::chords`] order) and must not belong to that chord. The
/// point is taken out and reinserted just before and just after each
/// endpoint `p`, `q` of the fixed chord; the signed terms are
/// `+[before p] - [after p] + [before q] - [after q]`.
pub fn four_term(d: &ChordDiagram, fixed_chord: usize, moving_point: usize) -> Result<FourTerm> {
    let m = d.points();
    let chords = d.chords();
    let Some(&(p, q)) = chords.get(fixed_chord) else {
        return Err(Error::InvalidFourTerm(format!("no chord {fixed_chord}")));
    };
    if moving_point >= m {
        return Err(Error::InvalidFourTerm(format!("no point {moving_point}")));
    }
    if moving_point == p || moving_point == q {
        return Err(Error::InvalidFourTerm(
            "the moving point belongs to the fixed chord".into(),
        ));
    }
    let prev = (moving_point + m - 1) % m;
    let next = (moving_point + 1) % m;
    let adjacent = [prev, next].iter().any(|&x| x == p || x == q);
    if !adjacent {
        return Err(Error::InvalidFourTerm(
            "the moving point is not next to an endpoint of the fixed chord".into(),
        ));
    }
    let moving = d.chord_of(moving_point);
    let labels: Vec<usize> = (0..m).map(|i| d.chord_of(i)).collect();
    let mut rest = labels.clone();
    rest.remove(moving_point);
    let positions: Vec<usize> = (0..rest.len())
        .filter(|&i| rest[i] == fixed_chord)
        .collect();
    let build = |at: usize| -> ChordDiagram {
        let mut w = rest.clone();
        w.insert(at, moving);
        ChordDiagram::from_labels(&w).expect("reinsertion keeps a valid word")
    };
    let (pp, qp) = (positions[0], positions[1]);
    Ok(FourTerm {
        terms: [
            (1, build(pp)),
            (-1, build(pp + 1)),
            (1, build(qp)),
            (-1, build(qp + 1)),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(w: &str) -> ChordDiagram {
        w.parse().unwrap()
    }

    #[test]
    fn two_chords() {
        // aabb: point 2 (chord b) sits after point 1 (chord a)
        let ft = four_term(&cd("aabb"), 0, 2).unwrap();
        let words: Vec<String> = ft.terms.iter().map(|(_, d)| d.to_word()).collect();
        assert_eq!(words, vec!["abba", "abab", "abab", "aabb"]);
        let signs: Vec<i32> = ft.terms.iter().map(|t| t.0).collect();
        assert_eq!(signs, vec![1, -1, 1, -1]);
    }

    #[test]
    fn rejected_inputs() {
        // own partner
        assert!(four_term(&cd("aabb"), 0, 1).is_err());
        // not adjacent: point 4 of aabbcc neighbors only b and c points
        assert!(four_term(&cd("aabbcc"), 0, 4).is_err());
        assert!(four_term(&cd("aabb"), 5, 2).is_err());
        assert!(four_term(&cd("aabb"), 0, 9).is_err());
    }
}
