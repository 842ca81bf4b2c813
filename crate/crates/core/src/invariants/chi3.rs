use crate::graph::{Graph, VertexSet};

/// Number of proper vertex colorings with three colors.
///
/// Vertices of degree 0 and 1 are peeled first (factors 3 and 2), then each
/// remaining component is counted by backtracking, highest degree first.
pub fn chi3(g: &Graph) -> u64 {
    let mut alive = g.vertices();
    let mut factor = 1u64;
    loop {
        let mut changed = false;
        for v in alive {
            match (g.neighbors(v) & alive).len() {
                0 => factor *= 3,
                1 => factor *= 2,
                _ => continue,
            }
            alive = alive.without(v);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    for comp in g.components_within(alive) {
        let c = count_component(g, comp);
        if c == 0 {
            return 0;
        }
        factor *= c;
    }
    factor
}

fn count_component(g: &Graph, comp: VertexSet) -> u64 {
    // order: start at max degree, then always take the vertex with the most
    // already-ordered neighbors (ties: higher degree, lower index)
    let deg = |v: usize| (g.neighbors(v) & comp).len();
    let mut order = Vec::with_capacity(comp.len());
    let mut placed = VertexSet::EMPTY;
    while placed != comp {
        let v = (comp - placed)
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & placed).len(), deg(v), usize::MAX - v))
            .unwrap();
        order.push(v);
        placed = placed.with(v);
    }
    let mut classes = [VertexSet::EMPTY; 3];
    // by symmetry of the colors the first vertex may be fixed to color 0
    classes[0] = VertexSet::singleton(order[0]);
    3 * backtrack(g, &order, 1, &mut classes)
}

fn backtrack(g: &Graph, order: &[usize], i: usize, classes: &mut [VertexSet; 3]) -> u64 {
    if i == order.len() {
        return 1;
    }
    let v = order[i];
    let nb = g.neighbors(v);
    let mut total = 0;
    for c in 0..3 {
        if (nb & classes[c]).is_empty() {
            classes[c] = classes[c].with(v);
            total += backtrack(g, order, i + 1, classes);
            classes[c] = classes[c].without(v);
        }
    }
    total
}

/// `Σ_{E' ⊆ E} (-1)^|E'| 3^c(E')`; exponential in the edge count, kept as an
/// independent check on [`chi3`].
pub fn chi3_inclusion_exclusion(g: &Graph) -> i128 {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 24, "inclusion-exclusion is 2^|E|");
    let mut total = 0i128;
    for mask in 0u32..(1 << m) {
        let mut h = Graph::new(g.n());
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                h.set_edge(u, v, true).unwrap();
            }
        }
        let term = 3i128.pow(h.component_count() as u32);
        total += if mask.count_ones() % 2 == 0 {
            term
        } else {
            -term
        };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(chi3(&Graph::new(1)), 3);
        assert_eq!(chi3(&Graph::complete(3)), 6);
        assert_eq!(chi3(&Graph::complete(4)), 0);
        assert_eq!(chi3(&Graph::new(0)), 1);
    }

    #[test]
    fn cycles_and_trees() {
        // chromatic polynomial of C_n at 3: 2^n + 2(-1)^n
        for n in 3..12 {
            let expect = (1i64 << n) + 2 * if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(chi3(&Graph::cycle(n)) as i64, expect, "C{n}");
        }
        assert_eq!(chi3(&Graph::path(10)), 3 << 9);
        assert_eq!(chi3(&Graph::star(5)), 3 << 5);
    }

    #[test]
    fn inclusion_exclusion_matches_small() {
        let gs = [
            Graph::complete(4),
            Graph::cycle(5),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ];
        for g in gs {
            assert_eq!(chi3(&g) as i128, chi3_inclusion_exclusion(&g));
        }
    }
}
