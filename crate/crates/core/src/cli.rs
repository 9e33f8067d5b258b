// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `balcol` command-line tool.
//!
//! Exit codes: 0 success, 1 a negative answer (imbalance above one, no
//! balanced coloring, adversary below its bound), 2 bad usage or input,
//! 3 an internal failure.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arcs::{arc_color, arc_imbalance, arc_min_imbalance_oracle};
use crate::error::Error;
use crate::formats;
use crate::hardness::{
    decide_balanced_boxes, reduce_nae_to_boxes, reduce_nae_to_multiple_intervals, DEFAULT_NODE_BUDGET,
};
use crate::interval::{imbalance, min_imbalance_oracle, Coloring, Instance, DEFAULT_ORACLE_LIMIT};
use crate::k_color::{color_hypergraph, column_spread, k_color, k_color_dewerra};
use crate::online::{adversary_general, builtin, run_online};
use crate::two_color::two_color;

#[derive(Debug, Parser)]
#[command(
    name = "balcol",
    version,
    about = "Balanced k-colorings of intervals and related objects"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Sweep,
    Dewerra,
    TwoColor,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color an interval instance.
    Color {
        #[arg(long)]
        input: PathBuf,
        /// Number of colors; overrides the file.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Algorithm::Sweep)]
        algorithm: Algorithm,
    },
    /// Measure the imbalance of a coloring.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive minimum imbalance of a small instance.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Color circular arcs.
    Arcs {
        #[arg(long)]
        input: PathBuf,
        /// Report the exhaustive minimum instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Run an online algorithm on a stream or against the adversary.
    Online {
        #[arg(long)]
        algorithm: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        rounds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        adversary: bool,
        /// Re-presentations allowed per round when `k > 2`.
        #[arg(long, default_value_t = 64)]
        repeat_budget: usize,
        /// Stream file, required without `--adversary`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Build a hardness reduction.
    Reduce {
        #[command(subcommand)]
        target: ReduceTarget,
    },
    /// Search for a balanced coloring of boxes.
    DecideBoxes {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Color the rows of a consecutive-ones matrix.
    Hypergraph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceTarget {
    /// Formula to rectangles.
    Nae3sat {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Also draw the rectangles.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Formula to grouped intervals.
    Multiple {
        #[arg(long)]
        input: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Internal(_) | Error::RecoloringBound(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path, k: Option<usize>) -> Result<Instance, Failure> {
    let inst = formats::parse_instance(&read(path)?, k.unwrap_or(2))?;
    Ok(match k {
        Some(k) if k != inst.k() => inst.with_k(k)?,
        _ => inst,
    })
}

fn join(colors: &[usize]) -> String {
    colors.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn emit(out: &mut dyn Write, format: Format, value: serde_json::Value, text: String) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{value}"),
        Format::Text => writeln!(out, "{text}"),
    }
}

fn color(out: &mut dyn Write, format: Format, inst: &Instance, algorithm: Algorithm) -> Outcome {
    let coloring = match algorithm {
        Algorithm::Sweep => k_color(inst)?,
        Algorithm::Dewerra => k_color_dewerra(inst)?.coloring,
        Algorithm::TwoColor => two_color(inst)?,
    };
    let report = imbalance(inst, &coloring)?;
    if report.value > 1 {
        return Err(Failure::Internal(format!("produced imbalance {}", report.value)));
    }
    emit(
        out,
        format,
        json!({"colors": coloring.colors(), "imbalance": report.value}),
        format!("{}\nimbalance {}", join(coloring.colors()), report.value),
    )?;
    Ok(0)
}

fn verify(out: &mut dyn Write, format: Format, inst: &Instance, colors: Vec<usize>) -> Outcome {
    let coloring = Coloring::new(colors, inst.k())?;
    let report = imbalance(inst, &coloring)?;
    emit(
        out,
        format,
        json!({"imbalance": report.value, "witness": report.witness, "balanced": report.value <= 1}),
        format!("imbalance {} at {}", report.value, report.witness),
    )?;
    Ok(if report.value <= 1 { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn online(
    out: &mut dyn Write,
    format: Format,
    name: &str,
    k: usize,
    rounds: usize,
    seed: u64,
    adversary: Option<usize>,
    input: Option<&Path>,
) -> Outcome {
    if rounds == 0 {
        return Err(Failure::Usage("--rounds must be at least 1".into()));
    }
    let mut alg = builtin(name, seed).ok_or_else(|| Failure::Usage(format!("unknown algorithm {name:?}")))?;
    if let Some(repeat_budget) = adversary {
        let budget = if k == 2 { 0 } else { repeat_budget };
        let transcript = adversary_general(alg.as_mut(), k, rounds, budget, (1, 2))?;
        let bound = rounds.div_ceil(3);
        for p in &transcript.presentations {
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(p).expect("presentation serializes"))?,
                Format::Text => writeln!(
                    out,
                    "{} [{}, {}] color {} imbalance {}",
                    p.round, p.lo, p.hi, p.color, p.imbalance
                )?,
            }
        }
        emit(
            out,
            format,
            json!({"final_imbalance": transcript.max_imbalance, "stalled": transcript.stalled}),
            format!("final imbalance {}", transcript.max_imbalance),
        )?;
        // the guarantee holds for two colors
        return Ok(if k == 2 && transcript.max_imbalance < bound {
            1
        } else {
            0
        });
    }
    let Some(path) = input else {
        return Err(Failure::Usage("give --input STREAM or --adversary".into()));
    };
    let stream = load_instance(path, Some(k))?;
    let take: Vec<usize> = (0..stream.len().min(rounds)).collect();
    let stream = stream.subset(&take, k)?;
    let run = run_online(alg.as_mut(), &stream)?;
    for (i, iv) in stream.intervals().iter().enumerate() {
        let color = run.coloring.colors()[i];
        emit(
            out,
            format,
            json!({"round": i, "lo": iv.lo, "hi": iv.hi, "color": color, "imbalance": run.trace[i]}),
            format!("{i} [{}, {}] color {color} imbalance {}", iv.lo, iv.hi, run.trace[i]),
        )?;
    }
    Ok(0)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Color { input, k, algorithm } => color(out, format, &load_instance(&input, k)?, algorithm),
        Command::Verify { input, coloring, k } => {
            let inst = load_instance(&input, k)?;
            verify(out, format, &inst, formats::parse_coloring(&read(&coloring)?)?)
        }
        Command::Oracle { input, k, limit } => {
            let inst = load_instance(&input, k)?;
            let (value, coloring) = min_imbalance_oracle(&inst, limit)?;
            emit(
                out,
                format,
                json!({"minimum": value, "colors": coloring.colors()}),
                format!("minimum {value}\n{}", join(coloring.colors())),
            )?;
            Ok(0)
        }
        Command::Arcs { input, oracle } => {
            let arcs = formats::parse_arcs_json(&read(&input)?)?;
            let (value, coloring) = if oracle {
                arc_min_imbalance_oracle(&arcs, DEFAULT_ORACLE_LIMIT)?
            } else {
                let coloring = arc_color(&arcs)?;
                (arc_imbalance(&arcs, &coloring)?.value, coloring)
            };
            emit(
                out,
                format,
                json!({"colors": coloring.colors(), "imbalance": value}),
                format!("{}\nimbalance {value}", join(coloring.colors())),
            )?;
            Ok(0)
        }
        Command::Online {
            algorithm,
            k,
            rounds,
            seed,
            adversary,
            repeat_budget,
            input,
        } => online(
            out,
            format,
            &algorithm,
            k,
            rounds,
            seed,
            adversary.then_some(repeat_budget),
            input.as_deref(),
        ),
        Command::Reduce { target } => match target {
            ReduceTarget::Nae3sat { input, k, svg } => {
                let formula = formats::parse_nae(&read(&input)?)?;
                let boxes = reduce_nae_to_boxes(&formula, k)?;
                if let Some(path) = svg {
                    std::fs::write(&path, formats::boxes_to_svg(&boxes)?)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                }
                writeln!(out, "{}", formats::boxes_to_json(&boxes))?;
                Ok(0)
            }
            ReduceTarget::Multiple { input } => {
                let formula = formats::parse_nae(&read(&input)?)?;
                let multi = reduce_nae_to_multiple_intervals(&formula)?;
                let groups: Vec<String> = multi.groups.iter().map(|g| join(g)).collect();
                emit(
                    out,
                    format,
                    json!({
                        "instance": serde_json::from_str::<serde_json::Value>(&formats::instance_to_json(&multi.instance))
                            .expect("instance JSON parses"),
                        "groups": multi.groups,
                    }),
                    format!(
                        "{}groups\n{}",
                        formats::instance_to_text(&multi.instance),
                        groups.join("\n")
                    ),
                )?;
                Ok(0)
            }
        },
        Command::DecideBoxes { input, budget } => {
            let boxes = formats::parse_boxes_json(&read(&input)?)?;
            let found = decide_balanced_boxes(&boxes, budget)?;
            let colors = found.as_ref().map(|c| c.colors().to_vec());
            emit(
                out,
                format,
                json!({"balanced": found.is_some(), "colors": colors}),
                match &colors {
                    Some(c) => format!("balanced\n{}", join(c)),
                    None => "no balanced coloring".into(),
                },
            )?;
            Ok(if found.is_some() { 0 } else { 1 })
        }
        Command::Hypergraph { input, k } => {
            let matrix = formats::parse_matrix(&read(&input)?)?;
            let coloring = color_hypergraph(&matrix, k)?;
            let spread = column_spread(&matrix, &coloring, k)?;
            emit(
                out,
                format,
                json!({"colors": coloring.colors(), "spread": spread}),
                format!("{}\nspread {spread}", join(coloring.colors())),
            )?;
            Ok(0)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            3
        }
    }
}
