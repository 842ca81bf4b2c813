use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use phi_core::invariants::Evaluator;
use phi_core::{EvalCache, EvalOptions, Graph};

use crate::output::{print_json, Envelope};
use crate::Format;

#[derive(Args, Debug, Serialize)]
pub struct BenchArgs {
    /// Largest vertex count; sizes run from 4 in steps of 2.
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
    /// Random graphs per (n, density) bucket.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Edge probabilities.
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5])]
    pub densities: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    #[serde(skip)]
    pub fmt: Format,
}

#[derive(Debug, Serialize)]
struct Cell {
    n: usize,
    density: f64,
    evaluator: &'static str,
    /// Median over the bucket's graphs; absent when the guard refused.
    median_ms: Option<f64>,
    refused: Option<String>,
}

#[derive(Debug, Serialize)]
struct BenchReport {
    cells: Vec<Cell>,
    graphs: usize,
    /// Every evaluator that ran on a graph returned the same value.
    all_agree: bool,
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for j in 0..n {
        for i in 0..j {
            if rng.random_bool(p) {
                g.set_edge(i, j, true).expect("valid pair");
            }
        }
    }
    g
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

pub fn run(a: &BenchArgs) -> anyhow::Result<ExitCode> {
    if a.max_n > phi_core::graph::MAX_VERTICES {
        return Err(crate::output::input_error(format!(
            "--max-n {} exceeds the vertex cap {}",
            a.max_n,
            phi_core::graph::MAX_VERTICES
        )));
    }
    if let Some(p) = a.densities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(crate::output::input_error(format!(
            "density {p} is not in [0, 1]"
        )));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut cells = Vec::new();
    let mut graphs = 0;
    let mut all_agree = true;
    for n in (4..=a.max_n.max(4)).step_by(2) {
        for &p in &a.densities {
            let gs: Vec<Graph> = (0..a.samples.max(1))
                .map(|_| random_graph(&mut rng, n, p))
                .collect();
            graphs += gs.len();
            let mut times: Vec<Vec<f64>> = vec![Vec::new(); Evaluator::ALL.len()];
            let mut refused: Vec<Option<String>> = vec![None; Evaluator::ALL.len()];
            for g in &gs {
                let mut seen = None;
                for (k, e) in Evaluator::ALL.into_iter().enumerate() {
                    let start = Instant::now();
                    match e.eval(g, &opts, Some(&EvalCache::new())) {
                        Ok(v) => {
                            times[k].push(start.elapsed().as_secs_f64() * 1e3);
                            match &seen {
                                None => seen = Some(v),
                                Some(s) => all_agree &= *s == v,
                            }
                        }
                        Err(err) => refused[k] = Some(err.to_string()),
                    }
                }
            }
            for (k, e) in Evaluator::ALL.into_iter().enumerate() {
                let t = std::mem::take(&mut times[k]);
                cells.push(Cell {
                    n,
                    density: p,
                    evaluator: e.name(),
                    median_ms: (!t.is_empty()).then(|| median(t)),
                    refused: refused[k].take(),
                });
            }
        }
    }
    let report = BenchReport {
        cells,
        graphs,
        all_agree,
    };
    match a.fmt {
        Format::Text => {
            println!(
                "{:>3} {:>7} {:<11} {:>12}",
                "n", "density", "evaluator", "median_ms"
            );
            for c in &report.cells {
                let t = match (c.median_ms, &c.refused) {
                    (Some(t), _) => format!("{t:.3}"),
                    (None, Some(r)) => format!("refused ({r})"),
                    (None, None) => "-".into(),
                };
                println!("{:>3} {:>7} {:<11} {:>12}", c.n, c.density, c.evaluator, t);
            }
            println!(
                "graphs: {}, all evaluators agree: {}",
                report.graphs, report.all_agree
            );
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for c in &report.cells {
                w.serialize(c)?;
            }
            w.flush()?;
        }
        Format::Json => print_json(&Envelope::new("bench", a, &report))?,
    }
    Ok(if report.all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
