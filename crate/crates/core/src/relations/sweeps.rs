//! Exhaustive and seeded-random sweeps over graphs and chord diagrams.
//!
//! Instances are generated up front in a fixed order (random ones from a
//! ChaCha stream seeded by the caller), checked in parallel, and collected
//! back in generation order, so a report depends only on its arguments.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::{
    delcont_relation, delcont_var_relation, four_t_relation, six_t_difference_is_triangle,
    six_t_relation, triangle_relation, Relation, SixTVariant,
};
use super::formal::eval_sum;
use super::report::{Failure, SuiteReport};
use crate::arith::Dyadic;
use crate::chords::{
    enumerate_diagrams, four_term, sl2_trace_oracle_with, ChordDiagram, Rep2Basis,
};
use crate::error::Result;
use crate::graph::{canonical_form, enumerate_graphs_up_to, Graph, VertexSet};
use crate::invariants::{
    check_bound, phi_components, phi_delcont, phi_direct, phi_eulerian, psi, EvalCache, EvalOptions,
};
use crate::par::{self, Exec};

/// Largest host for which gadget sweeps enumerate every attachment triple.
pub const MAX_EXHAUSTIVE_HOST: usize = 3;

/// Per-instance evaluation runs sequentially; parallelism is over instances.
fn inner() -> EvalOptions {
    EvalOptions::sequential()
}

fn run<I, F>(suite: &str, instances: &[I], exec: Exec, check: F) -> SuiteReport
where
    I: Sync,
    F: Fn(&I) -> Option<Failure> + Sync + Send,
{
    let mut r = SuiteReport::new(suite);
    r.instances_checked = instances.len() as u64;
    r.failures = par::map(exec, instances, check)
        .into_iter()
        .flatten()
        .collect();
    r
}

fn compare(instance: impl FnOnce() -> String, sides: Result<(Dyadic, Dyadic)>) -> Option<Failure> {
    match sides {
        Ok((l, r)) if l == r => None,
        Ok((l, r)) => Some(Failure {
            instance: instance(),
            detail: format!("lhs={l} rhs={r}"),
        }),
        Err(e) => Some(Failure {
            instance: instance(),
            detail: format!("error: {e}"),
        }),
    }
}

fn flag(instance: impl FnOnce() -> String, ok: Result<bool>, what: &str) -> Option<Failure> {
    match ok {
        Ok(true) => None,
        Ok(false) => Some(Failure {
            instance: instance(),
            detail: what.to_string(),
        }),
        Err(e) => Some(Failure {
            instance: instance(),
            detail: format!("error: {e}"),
        }),
    }
}

fn sides(rel: Result<Relation>) -> Result<(Dyadic, Dyadic)> {
    let rel = rel?;
    let o = inner();
    Ok((eval_sum(&rel.lhs, &o)?, eval_sum(&rel.rhs, &o)?))
}

fn all_classes(max_n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_up_to(max_n)?
        .into_iter()
        .flatten()
        .collect())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for j in 0..n {
        for i in 0..j {
            if rng.random::<bool>() {
                g.set_edge(i, j, true).expect("distinct in-range vertices");
            }
        }
    }
    g
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    VertexSet(rng.random::<u32>()) & VertexSet::full(n)
}

/// `φ_direct = φ_eulerian = φ_components = φ_delcont` on every class with
/// at most `max_all` vertices, and `φ_eulerian = φ_delcont` on the classes
/// with `max_all < n <= max_pair`.
pub fn evaluator_agreement(max_all: usize, max_pair: usize, exec: Exec) -> Result<SuiteReport> {
    let levels = enumerate_graphs_up_to(max_all.max(max_pair))?;
    let cache = EvalCache::new();
    let o = inner();
    let four: Vec<Graph> = levels[..=max_all].iter().flatten().copied().collect();
    let all_four = run("agreement/all-four", &four, exec, |g| {
        let vals = (|| -> Result<[Dyadic; 4]> {
            Ok([
                phi_direct(g, &o)?,
                phi_eulerian(g, &o)?,
                phi_components(g, &o)?,
                phi_delcont(g, &cache),
            ])
        })();
        flag(
            || g.to_graph6(),
            vals.map(|v| v.iter().all(|x| *x == v[0])),
            "evaluators disagree",
        )
    });
    let two: Vec<Graph> = levels
        .get(max_all + 1..=max_pair)
        .unwrap_or(&[])
        .iter()
        .flatten()
        .copied()
        .collect();
    let pair = run("agreement/eulerian-delcont", &two, exec, |g| {
        compare(
            || g.to_graph6(),
            phi_eulerian(g, &o).map(|e| (e, phi_delcont(g, &cache))),
        )
    });
    Ok(SuiteReport::from_parts("agreement", vec![all_four, pair]))
}

/// Deletion-contraction on every (class, edge) with at most `max_n` vertices.
pub fn delcont_sweep(max_n: usize, exec: Exec) -> Result<SuiteReport> {
    let instances: Vec<(Graph, usize, usize)> = all_classes(max_n)?
        .into_iter()
        .flat_map(|g| g.edges().into_iter().map(move |(u, v)| (g, u, v)))
        .collect();
    Ok(run("delcont", &instances, exec, |&(g, u, v)| {
        compare(
            || format!("{g} u={u} v={v}"),
            sides(delcont_relation(&g, u, v)),
        )
    }))
}

fn four_t_report(suite: &str, instances: &[(Graph, usize, usize)], exec: Exec) -> SuiteReport {
    run(suite, instances, exec, |&(g, u, v)| {
        compare(
            || format!("{g} u={u} v={v}"),
            sides(four_t_relation(&g, u, v)),
        )
    })
}

/// Graph 4T on every class with at most `max_exhaustive` vertices and every
/// ordered pair of distinct vertices, plus `samples` random instances on
/// `sample_n` vertices.
pub fn four_t_sweep(
    max_exhaustive: usize,
    sample_n: usize,
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<SuiteReport> {
    let exhaustive: Vec<(Graph, usize, usize)> = all_classes(max_exhaustive)?
        .into_iter()
        .flat_map(|g| {
            let n = g.n();
            (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (g, u, v)))
        })
        .collect();
    let mut parts = vec![four_t_report("fourT/exhaustive", &exhaustive, exec)];
    if samples > 0 && sample_n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sampled: Vec<(Graph, usize, usize)> = (0..samples)
            .map(|_| {
                let g = random_graph(&mut rng, sample_n);
                let u = rng.random_range(0..sample_n);
                let v = (u + rng.random_range(1..sample_n)) % sample_n;
                (g, u, v)
            })
            .collect();
        parts.push(four_t_report("fourT/sampled", &sampled, exec));
    }
    Ok(SuiteReport::from_parts("fourT", parts))
}

type Gadget = (Graph, VertexSet, VertexSet, VertexSet);

fn gadget_label(&(h, x, y, z): &Gadget) -> String {
    format!("host={h} x={x:?} y={y:?} z={z:?}")
}

/// Every host class with at most `max_host` vertices and every triple of
/// its vertex subsets.
fn exhaustive_gadgets(max_host: usize) -> Result<Vec<Gadget>> {
    let mut out = Vec::new();
    for h in all_classes(max_host)? {
        let m = 1u32 << h.n();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    out.push((h, VertexSet(x), VertexSet(y), VertexSet(z)));
                }
            }
        }
    }
    Ok(out)
}

fn sampled_gadgets(host_n: usize, samples: usize, seed: u64) -> Vec<Gadget> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let h = random_graph(&mut rng, host_n);
            let x = random_subset(&mut rng, host_n);
            let y = random_subset(&mut rng, host_n);
            let z = random_subset(&mut rng, host_n);
            (h, x, y, z)
        })
        .collect()
}

/// Sizes for a gadget sweep: hosts up to `max_exhaustive_host` vertices
/// exhaustively, then `samples` random instances on hosts of `sample_host`
/// vertices (skipped when `sample_host` is not larger).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetSweep {
    pub max_exhaustive_host: usize,
    pub sample_host: usize,
    pub samples: usize,
    pub seed: u64,
}

impl GadgetSweep {
    /// Gadgets add three explicit vertices, so hosts have at most
    /// `max_n - 3` vertices; exhaustive coverage stops at
    /// [`MAX_EXHAUSTIVE_HOST`].
    pub fn for_total_size(max_n: usize, samples: usize, seed: u64) -> Self {
        let host = max_n.saturating_sub(3);
        GadgetSweep {
            max_exhaustive_host: host.min(MAX_EXHAUSTIVE_HOST),
            sample_host: host,
            samples,
            seed,
        }
    }

    fn instances(&self) -> Result<(Vec<Gadget>, Vec<Gadget>)> {
        let exhaustive = exhaustive_gadgets(self.max_exhaustive_host)?;
        let sampled = if self.sample_host > self.max_exhaustive_host {
            sampled_gadgets(self.sample_host, self.samples, self.seed)
        } else {
            Vec::new()
        };
        Ok((exhaustive, sampled))
    }
}

fn gadget_parts<F>(
    suite: &str,
    sizes: &GadgetSweep,
    exec: Exec,
    check: F,
) -> Result<Vec<SuiteReport>>
where
    F: Fn(&Gadget) -> Option<Failure> + Sync + Send,
{
    let (exhaustive, sampled) = sizes.instances()?;
    let mut parts = vec![run(
        &format!("{suite}/exhaustive"),
        &exhaustive,
        exec,
        &check,
    )];
    if !sampled.is_empty() {
        parts.push(run(&format!("{suite}/sampled"), &sampled, exec, &check));
    }
    Ok(parts)
}

pub fn triangle_sweep(sizes: &GadgetSweep, exec: Exec) -> Result<SuiteReport> {
    let parts = gadget_parts("triangle", sizes, exec, |gd| {
        let &(h, x, y, z) = gd;
        compare(|| gadget_label(gd), sides(triangle_relation(&h, x, y, z)))
    })?;
    Ok(SuiteReport::from_parts("triangle", parts))
}

fn six_t_variant(sizes: &GadgetSweep, variant: SixTVariant, exec: Exec) -> Result<SuiteReport> {
    let name = match variant {
        SixTVariant::First => "sixT/first",
        SixTVariant::Second => "sixT/second",
    };
    let parts = gadget_parts(name, sizes, exec, |gd| {
        let &(h, x, y, z) = gd;
        compare(
            || gadget_label(gd),
            sides(six_t_relation(&h, x, y, z, variant)),
        )
    })?;
    Ok(SuiteReport::from_parts(name, parts))
}

/// Both 6T relations, plus the term-by-term identity
/// `(second) - (first) = (triangle)` on the exhaustive instances.
pub fn six_t_sweep(sizes: &GadgetSweep, exec: Exec) -> Result<SuiteReport> {
    let first = six_t_variant(sizes, SixTVariant::First, exec)?;
    let second = six_t_variant(sizes, SixTVariant::Second, exec)?;
    let (exhaustive, _) = sizes.instances()?;
    let symbolic = run("sixT/symbolic", &exhaustive, exec, |gd| {
        let &(h, x, y, z) = gd;
        flag(
            || gadget_label(gd),
            six_t_difference_is_triangle(&h, x, y, z),
            "6T difference does not cancel against the triangle identity",
        )
    });
    Ok(SuiteReport::from_parts(
        "sixT",
        vec![first, second, symbolic],
    ))
}

pub fn delcont_var_sweep(sizes: &GadgetSweep, exec: Exec) -> Result<SuiteReport> {
    let parts = gadget_parts("dcv", sizes, exec, |gd| {
        let &(h, u, v, w) = gd;
        compare(
            || gadget_label(gd),
            sides(delcont_var_relation(&h, u, v, w)),
        )
    })?;
    Ok(SuiteReport::from_parts("dcv", parts))
}

/// The graph weight-system axioms at `3/8`: normalization,
/// multiplicativity over disjoint unions with `n1 + n2 <= max_n`, the leaf
/// factor `3/8 - 1/2 = -1/8` on every leaf of every class with at most
/// `max_n` vertices, and both 6T relations on gadgets of total size at most
/// `max_n`.
pub fn cv_axioms(max_n: usize, exec: Exec) -> Result<SuiteReport> {
    let levels = enumerate_graphs_up_to(max_n)?;
    let o = inner();

    let mut norm = SuiteReport::new("cv/normalization");
    norm.instances_checked = 1;
    if let Some(f) = compare(
        || "N1".into(),
        phi_eulerian(&Graph::new(1), &o).map(|v| (v, Dyadic::ratio(3, 3))),
    ) {
        norm.failures.push(f);
    }

    let mut pairs = Vec::new();
    for n1 in 1..=max_n {
        for n2 in n1..=max_n - n1 {
            for a in &levels[n1] {
                for b in &levels[n2] {
                    pairs.push((*a, *b));
                }
            }
        }
    }
    let mult = run("cv/multiplicativity", &pairs, exec, |(a, b)| {
        compare(
            || format!("{a} + {b}"),
            (|| {
                let u = a.disjoint_union(b)?;
                Ok((
                    phi_eulerian(&u, &o)?,
                    &phi_eulerian(a, &o)? * &phi_eulerian(b, &o)?,
                ))
            })(),
        )
    });

    let leafed: Vec<(Graph, usize)> = levels
        .iter()
        .flatten()
        .flat_map(|g| g.leaves().into_iter().map(move |l| (*g, l)))
        .collect();
    let factor = Dyadic::ratio(3, 3) - Dyadic::ratio(1, 1);
    let leaf = run("cv/leaf-deletion", &leafed, exec, |&(g, l)| {
        compare(
            || format!("{g} leaf={l}"),
            (|| {
                let smaller = g.remove_vertex(l)?;
                Ok((
                    phi_eulerian(&g, &o)?,
                    &factor * &phi_eulerian(&smaller, &o)?,
                ))
            })(),
        )
    });

    let sizes = GadgetSweep::for_total_size(max_n, 0, 0);
    let six = six_t_sweep(&sizes, exec)?;
    Ok(SuiteReport::from_parts("cv", vec![norm, mult, leaf, six]))
}

/// `0 < |φ(G)| <= (3/8)^n` on every class with at most `max_n` vertices,
/// with equality exactly on edgeless graphs.
pub fn bound_sweep(max_n: usize, exec: Exec) -> Result<SuiteReport> {
    let classes = all_classes(max_n)?;
    Ok(run("bound", &classes, exec, |g| {
        let c = match check_bound(g, &inner()) {
            Ok(c) => c,
            Err(e) => {
                return Some(Failure {
                    instance: g.to_graph6(),
                    detail: format!("error: {e}"),
                })
            }
        };
        let edgeless = g.edge_count() == 0;
        if c.holds() && c.attained == edgeless {
            None
        } else {
            Some(Failure {
                instance: g.to_graph6(),
                detail: format!(
                    "phi={} bound={} nonzero={} within={} attained={}",
                    c.value, c.bound, c.nonzero, c.within_bound, c.attained
                ),
            })
        }
    }))
}

/// Lists every class with at most `max_n` vertices on which `φ ≠ ψ`. One
/// part per vertex count; the report never counts as failed.
pub fn conjecture_scan(max_n: usize, exec: Exec) -> Result<SuiteReport> {
    let levels = enumerate_graphs_up_to(max_n)?;
    let o = inner();
    let parts = levels
        .iter()
        .enumerate()
        .map(|(n, level)| {
            run(&format!("conjecture/n={n}"), level, exec, |g| {
                compare(
                    || g.to_graph6(),
                    phi_eulerian(g, &o).and_then(|p| Ok((p, psi(g, &o)?))),
                )
            })
        })
        .collect();
    Ok(SuiteReport::from_parts("conjecture", parts).report_only())
}

/// `w` at `c = 3/8`, evaluated sequentially.
fn w(d: &ChordDiagram) -> Result<Dyadic> {
    Ok(sl2_trace_oracle_with(d, &Rep2Basis::default(), Exec::Sequential)?.shl(-1))
}

fn diagrams_up_to(max_chords: usize) -> Result<Vec<Vec<ChordDiagram>>> {
    (0..=max_chords).map(enumerate_diagrams).collect()
}

/// `φ(Γ_D) = w(D)` for every diagram with at most `max_chords` chords.
pub fn bridge_scan(max_chords: usize, exec: Exec) -> Result<SuiteReport> {
    let diagrams: Vec<ChordDiagram> = diagrams_up_to(max_chords)?.into_iter().flatten().collect();
    Ok(run("bridge", &diagrams, exec, |d| {
        compare(
            || d.to_word(),
            (|| Ok((phi_eulerian(&d.intersection_graph()?, &inner())?, w(d)?)))(),
        )
    }))
}

/// Chord-level 4T: the signed sum of `w` vanishes on every quadruple built
/// from every diagram with at most `max_chords` chords.
pub fn chord_four_t(max_chords: usize, exec: Exec) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for d in diagrams_up_to(max_chords)?.into_iter().flatten() {
        let m = d.points();
        for (c, &(p, q)) in d.chords().iter().enumerate() {
            for point in 0..m {
                if point == p || point == q {
                    continue;
                }
                let next_to = |e: usize| point == (e + 1) % m || (point + 1) % m == e;
                if next_to(p) || next_to(q) {
                    instances.push((d.clone(), c, point));
                }
            }
        }
    }
    Ok(run("chords/fourT", &instances, exec, |(d, c, point)| {
        compare(
            || format!("{} chord={c} point={point}", d.to_word()),
            (|| {
                let ft = four_term(d, *c, *point)?;
                let mut total = Dyadic::zero();
                for (s, e) in &ft.terms {
                    total = &total + &(&Dyadic::from_int(*s as i64) * &w(e)?);
                }
                Ok((total, Dyadic::zero()))
            })(),
        )
    }))
}

/// `w(D1 · D2) = w(D1) w(D2)` with every choice of break points, for
/// `n1 + n2 <= max_total`.
pub fn chord_products(max_total: usize, exec: Exec) -> Result<SuiteReport> {
    let levels = diagrams_up_to(max_total)?;
    let mut pairs = Vec::new();
    for n1 in 1..=max_total {
        for n2 in 1..=max_total - n1 {
            for a in &levels[n1] {
                for b in &levels[n2] {
                    for i in 0..a.points() {
                        for j in 0..b.points() {
                            pairs.push((a.clone(), b.clone(), i, j));
                        }
                    }
                }
            }
        }
    }
    Ok(run("chords/products", &pairs, exec, |(a, b, i, j)| {
        compare(
            || format!("{} * {} breaks={i},{j}", a.to_word(), b.to_word()),
            (|| Ok((w(&a.product_at(b, *i, *j))?, &w(a)? * &w(b)?)))(),
        )
    }))
}

/// `w(D) = -1/8 · w(D - c)` for every leaf chord `c`.
pub fn chord_leaf_deletion(max_chords: usize, exec: Exec) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for d in diagrams_up_to(max_chords)?.into_iter().flatten() {
        for c in d.leaf_chords()? {
            instances.push((d.clone(), c));
        }
    }
    let factor = Dyadic::ratio(-1, 3);
    Ok(run("chords/leaf-deletion", &instances, exec, |(d, c)| {
        compare(
            || format!("{} chord={c}", d.to_word()),
            (|| Ok((w(d)?, &factor * &w(&d.remove_chord(*c)?)?)))(),
        )
    }))
}

/// Diagrams whose intersection graphs are isomorphic have equal `w`.
pub fn chord_graph_consistency(max_chords: usize, exec: Exec) -> Result<SuiteReport> {
    let diagrams: Vec<ChordDiagram> = diagrams_up_to(max_chords)?.into_iter().flatten().collect();
    let keyed = par::map(exec, &diagrams, |d| -> Result<(Graph, Dyadic)> {
        Ok((canonical_form(&d.intersection_graph()?), w(d)?))
    });
    let mut groups: BTreeMap<Graph, Vec<(String, Dyadic)>> = BTreeMap::new();
    let mut r = SuiteReport::new("chords/graph-consistency");
    r.instances_checked = diagrams.len() as u64;
    for (d, k) in diagrams.iter().zip(keyed) {
        match k {
            Ok((g, v)) => groups.entry(g).or_default().push((d.to_word(), v)),
            Err(e) => r.failures.push(Failure {
                instance: d.to_word(),
                detail: format!("error: {e}"),
            }),
        }
    }
    for (g, members) in groups {
        let (w0, v0) = &members[0];
        for (word, v) in &members[1..] {
            if v != v0 {
                r.failures.push(Failure {
                    instance: format!("{word} vs {w0} (graph {g})"),
                    detail: format!("{v} != {v0}"),
                });
            }
        }
    }
    Ok(r)
}

/// Every chord-level check: 4T, products, leaf deletion and consistency.
pub fn chord_suite(max_chords: usize, exec: Exec) -> Result<SuiteReport> {
    Ok(SuiteReport::from_parts(
        "chords",
        vec![
            chord_four_t(max_chords, exec)?,
            chord_products(max_chords, exec)?,
            chord_leaf_deletion(max_chords, exec)?,
            chord_graph_consistency(max_chords, exec)?,
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: Exec = Exec::Sequential;

    #[test]
    fn small_sweeps_pass() {
        for r in [
            evaluator_agreement(4, 5, S).unwrap(),
            delcont_sweep(5, S).unwrap(),
            four_t_sweep(4, 6, 50, 7, S).unwrap(),
            bound_sweep(5, S).unwrap(),
            bridge_scan(4, S).unwrap(),
            chord_suite(4, S).unwrap(),
            cv_axioms(5, S).unwrap(),
        ] {
            assert!(r.passed(), "{r:?}");
            assert!(r.instances_checked > 0, "{}", r.suite);
        }
    }

    #[test]
    fn gadget_sweeps_pass() {
        let sizes = GadgetSweep {
            max_exhaustive_host: 2,
            sample_host: 4,
            samples: 20,
            seed: 1,
        };
        for r in [
            triangle_sweep(&sizes, S).unwrap(),
            six_t_sweep(&sizes, S).unwrap(),
            delcont_var_sweep(&sizes, S).unwrap(),
        ] {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn instance_counts() {
        // edges over the classes on at most 3 vertices: K2, then 0+1+2+3
        assert_eq!(delcont_sweep(3, S).unwrap().instances_checked, 7);
        // host sizes 0,1,2,2,3,3,3,3: Σ 8^n
        assert_eq!(
            exhaustive_gadgets(3).unwrap().len(),
            1 + 8 + 2 * 64 + 4 * 512
        );
        let r = conjecture_scan(4, S).unwrap();
        let counts: Vec<u64> = r.parts.iter().map(|p| p.instances_checked).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11]);
        assert!(r.total_failures() == 0);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = four_t_sweep(3, 7, 30, 42, Exec::default()).unwrap();
        let b = four_t_sweep(3, 7, 30, 42, S).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wrong_factor_is_caught() {
        // a deliberately wrong leaf factor must produce failures, so a
        // passing sweep is not vacuous
        let o = inner();
        let g = Graph::path(3);
        let lhs = phi_eulerian(&g, &o).unwrap();
        let rhs = &Dyadic::ratio(1, 3) * &phi_eulerian(&g.remove_vertex(0).unwrap(), &o).unwrap();
        assert!(compare(|| "P3".into(), Ok((lhs, rhs))).is_some());
    }
}
