//! Known values and worked examples, checked through the public API.

use phi_core::chords::{sl2_trace_oracle, w_at_c38, Rep2Basis};
use phi_core::invariants::{check_bound, phi, psi, Evaluator};
use phi_core::relations::{
    check_delcont, check_delcont_var, check_triangle, eval_sum, expand_dashed, FormalSum,
};
use phi_core::{ChordDiagram, Dyadic, EdgeSet, EvalCache, EvalOptions, Graph, VertexSet};

fn d(s: &str) -> Dyadic {
    s.parse().unwrap()
}

fn all_evaluators(g: &Graph) -> Vec<Dyadic> {
    let o = EvalOptions::default();
    Evaluator::ALL
        .iter()
        .map(|e| e.eval(g, &o, Some(&EvalCache::new())).unwrap())
        .collect()
}

#[test]
fn value_table() {
    for n in 0..=5 {
        let want = d("3/8").pow(n as u32);
        assert!(
            all_evaluators(&Graph::new(n)).iter().all(|v| *v == want),
            "N{n}"
        );
    }
    for (g, want) in [
        (Graph::complete(2), "-3/64"),
        (Graph::path(3), "3/512"),
        (Graph::complete(3), "15/512"),
    ] {
        assert!(all_evaluators(&g).iter().all(|v| *v == d(want)), "{g:?}");
    }
}

#[test]
fn string_forms() {
    let o = EvalOptions::default();
    let k2 = phi(&Graph::from_graph6("A_").unwrap(), &o).unwrap();
    assert_eq!(k2.to_string(), "-3/2^6");
    assert_eq!(k2.to_fraction_string(), "-3/64");
    assert_eq!(k2.to_decimal_string(), "-0.046875");
    assert_eq!(
        phi(&Graph::from_graph6("@").unwrap(), &o)
            .unwrap()
            .to_string(),
        "3/2^3"
    );
}

#[test]
fn psi_on_small_graphs() {
    let o = EvalOptions::default();
    for g in [
        Graph::new(3),
        Graph::complete(2),
        Graph::path(3),
        Graph::complete(3),
    ] {
        assert_eq!(psi(&g, &o).unwrap(), phi(&g, &o).unwrap(), "{g:?}");
    }
}

#[test]
fn hand_expansions() {
    // φ(K3) = -φ(P3) + ¼ φ(N2)
    assert_eq!(d("15/512"), -d("3/512") + d("1/4") * d("9/64"));
    // φ(K2) = -φ(N2) + ¼ φ(N1)
    assert_eq!(d("-3/64"), -d("9/64") + d("1/4") * d("3/8"));
    let o = EvalOptions::default();
    assert!(check_delcont(&Graph::complete(3), 1, 2, &o).unwrap());

    let s = expand_dashed(&Graph::new(2), &EdgeSet::new([(0, 1)]).unwrap()).unwrap();
    assert_eq!(eval_sum(&s, &o).unwrap(), d("-3/16"));
    let g = FormalSum::single(Graph::cycle(6));
    assert_eq!(eval_sum(&g.minus(&g), &o).unwrap(), Dyadic::zero());
}

#[test]
fn bound_and_extremes() {
    let o = EvalOptions::default();
    let c = check_bound(&Graph::new(4), &o).unwrap();
    assert!(c.holds() && c.attained);
    let c = check_bound(&Graph::complete(4), &o).unwrap();
    assert!(c.holds() && !c.attained);
    // large sparse graphs fall through to deletion-contraction
    let big = Graph::path(28);
    let c = check_bound(&big, &o).unwrap();
    assert!(c.holds());
    // a path: leaf deletion gives (-1/8)^(n-1) (3/8)
    assert_eq!(c.value, d("-1/8").pow(27) * d("3/8"));
}

#[test]
fn weight_system_values() {
    let b = Rep2Basis::default();
    let id = [[d("3/8"), Dyadic::zero()], [Dyadic::zero(), d("3/8")]];
    assert_eq!(b.casimir(), id);
    for (word, trace, w) in [
        ("aa", "3/4", "3/8"),
        ("abab", "-3/32", "-3/64"),
        ("aabb", "9/32", "9/64"),
    ] {
        let diagram: ChordDiagram = word.parse().unwrap();
        assert_eq!(sl2_trace_oracle(&diagram).unwrap(), d(trace), "{word}");
        assert_eq!(w_at_c38(&diagram).unwrap(), d(w), "{word}");
    }
    // the four-chord example has the diamond as intersection graph
    let diamond: ChordDiagram = "abcadbcd".parse().unwrap();
    let g = diamond.intersection_graph().unwrap();
    assert_eq!(g.edge_count(), 5);
    let mut degrees: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    degrees.sort();
    assert_eq!(degrees, vec![2, 2, 3, 3]);
    let o = EvalOptions::default();
    assert_eq!(w_at_c38(&diamond).unwrap(), phi(&g, &o).unwrap());
}

#[test]
fn gadget_identities_on_larger_hosts() {
    let o = EvalOptions::default();
    let host = Graph::cycle(5);
    let s = |bits: u32| VertexSet(bits);
    for (x, y, z) in [
        (0b00011, 0b00110, 0b11000),
        (0b11111, 0, 0b10101),
        (0b01010, 0b01010, 0b00001),
    ] {
        assert!(check_triangle(&host, s(x), s(y), s(z), &o).unwrap());
        assert!(check_delcont_var(&host, s(x), s(y), s(z), &o).unwrap());
    }
    // an empty w_set leaves the dashed pairs hanging off an isolated vertex,
    // which reduces the identity to plain deletion-contraction
    assert!(check_delcont_var(&host, s(0b00011), s(0b01100), VertexSet::EMPTY, &o).unwrap());
}
