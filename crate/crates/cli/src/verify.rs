use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde::Serialize;

use phi_core::chords::MAX_ENUM_CHORDS;
use phi_core::graph::MAX_EXHAUSTIVE_N;
use phi_core::relations::{
    bound_sweep, bridge_scan, chord_suite, conjecture_scan, cv_axioms, delcont_sweep,
    delcont_var_sweep, evaluator_agreement, four_t_sweep, six_t_sweep, triangle_sweep, GadgetSweep,
    SuiteReport,
};
use phi_core::Exec;

use crate::output::{input_error, print_json, Envelope};
use crate::Format;

/// Largest class size swept exhaustively by the 4T suite; above it only
/// sampled instances are drawn.
const FOUR_T_EXHAUSTIVE_N: usize = 6;
/// All four evaluators are compared up to this size, the two fast ones above.
const ALL_FOUR_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Delcont,
    #[value(name = "fourT")]
    #[serde(rename = "fourT")]
    FourT,
    #[value(name = "sixT")]
    #[serde(rename = "sixT")]
    SixT,
    Triangle,
    Dcv,
    Cv,
    Bound,
    Bridge,
    Agreement,
    Conjecture,
    All,
}

impl Suite {
    const EVERY: [Suite; 10] = [
        Suite::Agreement,
        Suite::Delcont,
        Suite::FourT,
        Suite::Triangle,
        Suite::SixT,
        Suite::Dcv,
        Suite::Cv,
        Suite::Bound,
        Suite::Bridge,
        Suite::Conjecture,
    ];
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest number of vertices of any graph the suite evaluates.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Random instances for the sampled parts of the 4T and gadget suites.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest chord diagram order for the bridge suite.
    #[arg(long, default_value_t = 5)]
    pub max_chords: usize,
    /// Add wall-clock times (makes the report non-reproducible).
    #[arg(long)]
    #[serde(skip)]
    pub timings: bool,
    /// `json` prints the full report, `csv` one summary row per sub-suite.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    #[serde(skip)]
    pub fmt: Format,
}

fn check_args(a: &VerifyArgs) -> anyhow::Result<()> {
    if a.max_n > MAX_EXHAUSTIVE_N {
        return Err(input_error(format!(
            "--max-n {} exceeds the enumeration limit {MAX_EXHAUSTIVE_N}",
            a.max_n
        )));
    }
    if a.max_chords > MAX_ENUM_CHORDS {
        return Err(input_error(format!(
            "--max-chords {} exceeds the enumeration limit {MAX_ENUM_CHORDS}",
            a.max_chords
        )));
    }
    Ok(())
}

fn timed(
    timings: bool,
    f: impl FnOnce() -> phi_core::Result<SuiteReport>,
) -> anyhow::Result<SuiteReport> {
    let start = Instant::now();
    let mut r = f()?;
    if timings {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

pub fn run_suite(suite: Suite, a: &VerifyArgs) -> anyhow::Result<SuiteReport> {
    let exec = Exec::default();
    let n = a.max_n;
    let gadgets = GadgetSweep::for_total_size(n, a.samples, a.seed);
    let t = a.timings;
    match suite {
        Suite::Agreement => timed(t, || evaluator_agreement(n.min(ALL_FOUR_N), n, exec)),
        Suite::Delcont => timed(t, || delcont_sweep(n, exec)),
        Suite::FourT => timed(t, || {
            four_t_sweep(n.min(FOUR_T_EXHAUSTIVE_N), n, a.samples, a.seed, exec)
        }),
        Suite::Triangle => timed(t, || triangle_sweep(&gadgets, exec)),
        Suite::SixT => timed(t, || six_t_sweep(&gadgets, exec)),
        Suite::Dcv => timed(t, || delcont_var_sweep(&gadgets, exec)),
        Suite::Cv => timed(t, || cv_axioms(n, exec)),
        Suite::Bound => timed(t, || bound_sweep(n, exec)),
        Suite::Bridge => timed(t, || {
            Ok(SuiteReport::from_parts(
                "bridge",
                vec![
                    bridge_scan(a.max_chords, exec)?,
                    chord_suite(a.max_chords, exec)?,
                ],
            ))
        }),
        Suite::Conjecture => timed(t, || conjecture_scan(n, exec)),
        Suite::All => {
            let start = Instant::now();
            let parts = Suite::EVERY
                .iter()
                .map(|&s| run_suite(s, a))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let mut r = SuiteReport::from_parts("all", parts);
            if t {
                r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            Ok(r)
        }
    }
}

#[derive(Debug, Serialize)]
struct Summary<'a> {
    passed: bool,
    instances_checked: u64,
    failures: usize,
    report: &'a SuiteReport,
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    suite: &'a str,
    asserted: bool,
    instances_checked: u64,
    failures: usize,
    wall_time_ms: Option<u64>,
}

fn csv_rows<'a>(r: &'a SuiteReport, out: &mut Vec<CsvRow<'a>>) {
    out.push(CsvRow {
        suite: &r.suite,
        asserted: r.asserted,
        instances_checked: r.instances_checked,
        failures: r.total_failures(),
        wall_time_ms: r.wall_time_ms,
    });
    for p in &r.parts {
        csv_rows(p, out);
    }
}

fn emit<C: Serialize>(
    command: &'static str,
    config: C,
    fmt: Format,
    r: &SuiteReport,
) -> anyhow::Result<()> {
    match fmt {
        Format::Csv => {
            let mut rows = Vec::new();
            csv_rows(r, &mut rows);
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
            Ok(())
        }
        _ => print_json(&Envelope::new(
            command,
            config,
            Summary {
                passed: r.passed(),
                instances_checked: r.instances_checked,
                failures: r.total_failures(),
                report: r,
            },
        )),
    }
}

pub fn run(a: &VerifyArgs) -> anyhow::Result<ExitCode> {
    check_args(a)?;
    let r = run_suite(a.suite, a)?;
    emit("verify", a, a.fmt, &r)?;
    Ok(if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Debug, Serialize)]
struct ScanConfig {
    max_n: usize,
    /// Nothing in the scan is random; echoed for a uniform report shape.
    seed: Option<u64>,
}

pub fn scan_conjecture(max_n: usize, timings: bool) -> anyhow::Result<ExitCode> {
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(input_error(format!(
            "--max-n {max_n} exceeds the enumeration limit {MAX_EXHAUSTIVE_N}"
        )));
    }
    let r = timed(timings, || conjecture_scan(max_n, Exec::default()))?;
    emit(
        "scan-conjecture",
        ScanConfig { max_n, seed: None },
        Format::Json,
        &r,
    )?;
    Ok(ExitCode::SUCCESS)
}
