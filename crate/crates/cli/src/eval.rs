use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;

use phi_core::invariants::{psi, Evaluator};
use phi_core::{Dyadic, EvalCache, EvalOptions, Graph};

use crate::output::input_error;
use crate::Format;

#[derive(Debug, Serialize)]
struct Record {
    line: usize,
    graph6: String,
    n: usize,
    edges: usize,
    phi_exact: String,
    phi_fraction: String,
    phi_decimal: String,
    psi_exact: Option<String>,
    evaluator: &'static str,
    /// Every evaluator whose size guard admits the graph gave the same value.
    agree: bool,
    evaluators_compared: usize,
    phi_equals_psi: Option<bool>,
}

#[derive(Debug, Serialize)]
struct ErrorRecord {
    line: usize,
    input: String,
    error: String,
}

fn choose(g: &Graph, requested: &str, opts: &EvalOptions) -> anyhow::Result<Evaluator> {
    if requested == "auto" {
        return Ok(if g.n() <= opts.max_eulerian_vertices {
            Evaluator::Eulerian
        } else {
            Evaluator::DelCont
        });
    }
    Evaluator::from_name(requested).ok_or_else(|| {
        input_error(format!(
            "unknown evaluator {requested:?} (auto, direct, eulerian, components, delcont)"
        ))
    })
}

fn evaluate(line: usize, g: &Graph, requested: &str) -> anyhow::Result<Record> {
    let opts = EvalOptions::default();
    let cache = EvalCache::new();
    let chosen = choose(g, requested, &opts)?;
    let phi = chosen
        .eval(g, &opts, Some(&cache))
        .map_err(|e| input_error(format!("line {line}: {e}")))?;
    let mut compared = 0;
    let mut agree = true;
    for e in Evaluator::ALL {
        if let Ok(v) = e.eval(g, &opts, Some(&cache)) {
            compared += 1;
            agree &= v == phi;
        }
    }
    let psi = psi(g, &opts).ok();
    Ok(Record {
        line,
        graph6: g.to_graph6(),
        n: g.n(),
        edges: g.edge_count(),
        phi_exact: phi.to_string(),
        phi_fraction: phi.to_fraction_string(),
        phi_decimal: phi.to_decimal_string(),
        phi_equals_psi: psi.as_ref().map(|p| *p == phi),
        psi_exact: psi.as_ref().map(Dyadic::to_string),
        evaluator: chosen.name(),
        agree,
        evaluators_compared: compared,
    })
}

pub fn run(fmt: Format, evaluator: &str, file: Option<&Path>) -> anyhow::Result<ExitCode> {
    choose(&Graph::new(0), evaluator, &EvalOptions::default())?;
    let reader: Box<dyn BufRead> = match file {
        None => Box::new(io::stdin().lock()),
        Some(p) if p == Path::new("-") => Box::new(io::stdin().lock()),
        Some(p) => {
            Box::new(BufReader::new(File::open(p).map_err(|e| {
                input_error(format!("cannot open {}: {e}", p.display()))
            })?))
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut csv_out = (fmt == Format::Csv).then(|| csv::Writer::from_writer(io::stdout()));
    if fmt == Format::Text {
        writeln!(
            out,
            "{:<12} {:>3} {:>4} {:<20} {:<20} {:<9} agree",
            "graph6", "n", "m", "phi", "psi", "evaluator"
        )?;
    }
    let mut bad = 0usize;
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        let parsed = Graph::from_graph6(text)
            .map_err(|e| input_error(e.to_string()))
            .and_then(|g| evaluate(line_no, &g, evaluator));
        match parsed {
            Ok(r) => match fmt {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
                Format::Csv => csv_out.as_mut().expect("csv writer").serialize(&r)?,
                Format::Text => writeln!(
                    out,
                    "{:<12} {:>3} {:>4} {:<20} {:<20} {:<9} {}",
                    r.graph6,
                    r.n,
                    r.edges,
                    r.phi_exact,
                    r.psi_exact.as_deref().unwrap_or("-"),
                    r.evaluator,
                    r.agree
                )?,
            },
            Err(e) => {
                bad += 1;
                let rec = ErrorRecord {
                    line: line_no,
                    input: text.to_string(),
                    error: e.to_string(),
                };
                match fmt {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                    _ => eprintln!("line {}: {}: {}", rec.line, rec.input, rec.error),
                }
            }
        }
    }
    if let Some(mut w) = csv_out {
        w.flush()?;
    }
    out.flush()?;
    Ok(if bad > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
