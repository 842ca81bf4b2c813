use std::process::ExitCode;

use clap::Subcommand;
use serde::Serialize;

use phi_core::chords::{enumerate_diagrams, w_at_c38, MAX_ENUM_CHORDS};
use phi_core::invariants::phi_eulerian;
use phi_core::{ChordDiagram, EvalOptions};

use crate::output::input_error;
use crate::Format;

#[derive(Subcommand, Debug)]
pub enum ChordsAction {
    /// List every diagram of the given order up to rotation.
    Enumerate {
        #[arg(long)]
        chords: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        fmt: Format,
    },
    /// Compare the weight system with φ of the intersection graph, on every
    /// diagram of the given order or on the listed words (e.g. `abab`).
    Eval {
        #[arg(long, required_unless_present = "words")]
        chords: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        fmt: Format,
        words: Vec<String>,
    },
}

#[derive(Debug, Serialize)]
struct Row {
    word: String,
    chords: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    w_at_c38: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn diagrams(n: usize) -> anyhow::Result<Vec<ChordDiagram>> {
    if n > MAX_ENUM_CHORDS {
        return Err(input_error(format!(
            "--chords {n} exceeds the enumeration limit {MAX_ENUM_CHORDS}"
        )));
    }
    Ok(enumerate_diagrams(n)?)
}

fn row(d: &ChordDiagram, values: bool) -> anyhow::Result<Row> {
    let g = d.intersection_graph()?;
    let (w, phi) = if values {
        let w = w_at_c38(d).map_err(|e| input_error(e.to_string()))?;
        (Some(w), Some(phi_eulerian(&g, &EvalOptions::default())?))
    } else {
        (None, None)
    };
    Ok(Row {
        word: d.to_word(),
        chords: d.order(),
        graph6: g.to_graph6(),
        agree: w.as_ref().zip(phi.as_ref()).map(|(a, b)| a == b),
        w_at_c38: w.map(|v| v.to_string()),
        phi: phi.map(|v| v.to_string()),
    })
}

fn print(rows: &[Row], fmt: Format) -> anyhow::Result<()> {
    match fmt {
        Format::Json => crate::output::print_json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            for r in rows {
                match (&r.w_at_c38, &r.phi, r.agree) {
                    (Some(w), Some(p), Some(a)) => {
                        println!("{:<16} {:<10} {:<14} {:<14} {}", r.word, r.graph6, w, p, a)
                    }
                    _ => println!("{:<16} {}", r.word, r.graph6),
                }
            }
            Ok(())
        }
    }
}

pub fn run(action: &ChordsAction) -> anyhow::Result<ExitCode> {
    let (rows, fmt) = match action {
        ChordsAction::Enumerate { chords, fmt } => (
            diagrams(*chords)?
                .iter()
                .map(|d| row(d, false))
                .collect::<anyhow::Result<Vec<_>>>()?,
            *fmt,
        ),
        ChordsAction::Eval { chords, fmt, words } => {
            let ds = if words.is_empty() {
                diagrams(chords.unwrap_or(0))?
            } else {
                words
                    .iter()
                    .map(|w| {
                        w.parse::<ChordDiagram>()
                            .map_err(|e| input_error(format!("{w:?}: {e}")))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()?
            };
            (
                ds.iter()
                    .map(|d| row(d, true))
                    .collect::<anyhow::Result<Vec<_>>>()?,
                *fmt,
            )
        }
    };
    print(&rows, fmt)?;
    let all_agree = rows.iter().all(|r| r.agree != Some(false));
    Ok(if all_agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
