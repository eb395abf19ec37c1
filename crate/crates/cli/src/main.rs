//! `zfc` — zero forcing, constrained matchings and strong controllability of
//! networked systems from the command line.
//!
//! Exit codes: 0 on successful analysis (the verdict, true or false, is in
//! the report body), 2 on input errors, 3 when `--method both` finds the two
//! decision routes disagreeing.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zfc_core::{
    DirectedGraph, GraphKind, Matching, MinInputMethod, Pattern, StrongControllabilityReport,
    SystemSpec,
};

#[derive(Parser)]
#[command(
    name = "zfc",
    version,
    about = "Zero forcing sets, constrained matchings and strong structural controllability"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Zero forcing analyses.
    #[command(subcommand)]
    Zf(ZfCommand),
    /// Constrained matching analyses.
    #[command(subcommand)]
    Match(MatchCommand),
    /// Triangle number of a loop directed graph.
    Tri {
        /// Graph JSON file, or "-" for stdin.
        #[arg(long)]
        graph: String,
    },
    /// Minimum rank of a symmetric tree.
    MrTree {
        #[arg(long)]
        graph: String,
    },
    /// Strong controllability analyses.
    #[command(subcommand)]
    Ctrl(CtrlCommand),
}

#[derive(Subcommand)]
enum ZfCommand {
    /// Run the color change rule from an initial black set to its fixed point.
    Propagate {
        #[arg(long)]
        graph: String,
        /// Comma-separated 1-indexed vertices, e.g. "1,3".
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Check whether a set is a zero forcing set.
    Check {
        #[arg(long)]
        graph: String,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Exact zero forcing number with a minimum witness.
    Number {
        #[arg(long)]
        graph: String,
    },
    /// Polynomial-time minimum zero forcing set of a symmetric tree.
    Tree {
        #[arg(long)]
        graph: String,
    },
}

#[derive(Subcommand)]
enum MatchCommand {
    /// Check whether a matching is constrained in a pattern's bipartite graph.
    Check {
        /// Pattern text file over {*, 0, ?}, or "-" for stdin.
        #[arg(long)]
        pattern: String,
        /// Matching JSON file {"edges": [[row, col], ...]}.
        #[arg(long)]
        matching: String,
    },
    /// Exact maximum constrained matching of a pattern.
    Max {
        #[arg(long)]
        pattern: String,
        /// Forbid all diagonal edges (i, i).
        #[arg(long, conflicts_with = "forbid")]
        self_less: bool,
        /// Forbid the diagonal edges (i, i) for these indices.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    Zf,
    Matching,
    Both,
}

#[derive(Subcommand)]
enum CtrlCommand {
    /// Decide strong controllability from an input set.
    Strong {
        #[arg(long)]
        graph: String,
        /// Comma-separated 1-indexed input vertices.
        #[arg(long, value_delimiter = ',')]
        input: Vec<usize>,
        /// Decision route (loop-directed graphs; simple-directed graphs
        /// always use the simple rule route).
        #[arg(long, value_enum, default_value_t = MethodChoice::Zf)]
        method: MethodChoice,
    },
    /// Minimum-size input set for strong controllability.
    MinInput {
        #[arg(long)]
        graph: String,
        /// For undamped loop-directed graphs, also report the input set read
        /// off a maximum constrained self-less matching and its size gap.
        #[arg(long)]
        corollary_gap: bool,
    },
    /// Sample exact realizations and count Kalman-controllable outcomes.
    Kalman {
        #[arg(long)]
        graph: String,
        #[arg(long, value_delimiter = ',')]
        input: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_graph(path: &str) -> Result<(DirectedGraph, GraphKind)> {
    let text = read_input(path)?;
    Ok(zfc_core::parse_graph_json(&text)?)
}

fn load_pattern(path: &str) -> Result<Pattern> {
    Ok(read_input(path)?.parse::<Pattern>()?)
}

fn load_matching(path: &str) -> Result<Matching> {
    let text = read_input(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing matching from {path}"))
}

fn to_set(list: &[usize]) -> BTreeSet<usize> {
    list.iter().copied().collect()
}

fn fmt_vertices(vs: impl IntoIterator<Item = usize>) -> String {
    let rendered: Vec<String> = vs.into_iter().map(|v| v.to_string()).collect();
    if rendered.is_empty() {
        "(none)".into()
    } else {
        rendered.join(", ")
    }
}

fn fmt_forces(forces: &zfc_core::ForceList) -> String {
    let rendered: Vec<String> = forces
        .forces()
        .iter()
        .map(|(f, t)| format!("{f} -> {t}"))
        .collect();
    if rendered.is_empty() {
        "(none)".into()
    } else {
        rendered.join(", ")
    }
}

fn fmt_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> String {
    let rendered: Vec<String> = pairs
        .into_iter()
        .map(|(r, c)| format!("({r}, {c})"))
        .collect();
    if rendered.is_empty() {
        "(none)".into()
    } else {
        rendered.join(", ")
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value)?),
        Format::Text => println!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckReport {
    set: Vec<usize>,
    verdict: bool,
}

#[derive(Serialize)]
struct NumberReport {
    zero_forcing_number: usize,
    witness: Vec<usize>,
    method: &'static str,
}

#[derive(Serialize)]
struct MatchCheckReport {
    edges: Vec<(usize, usize)>,
    constrained: bool,
    certificate: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct MatchMaxReport {
    size: usize,
    edges: Vec<(usize, usize)>,
    constrained: bool,
}

#[derive(Serialize)]
struct TriReport {
    triangle_number: usize,
}

#[derive(Serialize)]
struct MrTreeReport {
    minimum_rank: usize,
    zero_forcing_number: usize,
}

#[derive(Serialize)]
struct StrongBothReport {
    verdict: bool,
    methods_agree: bool,
    zero_forcing: StrongControllabilityReport,
    matching: StrongControllabilityReport,
}

#[derive(Serialize)]
struct CorollaryReport {
    input_set: Vec<usize>,
    size: usize,
    gap: usize,
}

#[derive(Serialize)]
struct MinInputReport {
    size: usize,
    witness: Vec<usize>,
    method: MinInputMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    selfless_corollary: Option<CorollaryReport>,
}

fn render_strong_text(report: &StrongControllabilityReport) -> String {
    let mut lines = vec![
        format!("verdict: {}", yesno(report.verdict)),
        format!(
            "method: {}",
            serde_json::to_value(report.method)
                .expect("method serializes")
                .as_str()
                .unwrap_or_default()
                .to_string()
        ),
    ];
    if let Some(failed) = report.failed_condition {
        lines.push(format!("failed condition: {failed}"));
    }
    match &report.evidence {
        zfc_core::Evidence::ZeroForcing {
            base_forces,
            starred_forces,
        } => {
            if let Some(f) = base_forces {
                lines.push(format!("base forces: {}", fmt_forces(f)));
            }
            if let Some(f) = starred_forces {
                lines.push(format!("starred forces: {}", fmt_forces(f)));
            }
        }
        zfc_core::Evidence::Matching {
            base_matching,
            starred_matching,
        } => {
            if let Some(m) = base_matching {
                lines.push(format!("base matching: {}", fmt_pairs(m.edges())));
            }
            if let Some(m) = starred_matching {
                lines.push(format!("starred matching: {}", fmt_pairs(m.edges())));
            }
        }
        zfc_core::Evidence::SimpleRule { forces } => {
            if let Some(f) = forces {
                lines.push(format!("forces: {}", fmt_forces(f)));
            }
        }
    }
    lines.join("\n")
}

fn run_zf(format: Format, cmd: ZfCommand) -> Result<ExitCode> {
    match cmd {
        ZfCommand::Propagate { graph, set } => {
            let (g, kind) = load_graph(&graph)?;
            let result = zfc_core::propagate(&g, kind, &to_set(&set))?;
            let text = format!(
                "complete: {}\nblack: {}\nforces: {}",
                yesno(result.complete),
                fmt_vertices(result.black.iter().copied()),
                fmt_forces(&result.forces)
            );
            emit(format, &result, text)?;
        }
        ZfCommand::Check { graph, set } => {
            let (g, kind) = load_graph(&graph)?;
            let s = to_set(&set);
            let verdict = zfc_core::is_zero_forcing_set(&g, kind, &s)?;
            let report = CheckReport {
                set: s.into_iter().collect(),
                verdict,
            };
            emit(
                format,
                &report,
                format!("zero forcing set: {}", yesno(verdict)),
            )?;
        }
        ZfCommand::Number { graph } => {
            let (g, kind) = load_graph(&graph)?;
            let (z, witness) = zfc_core::zero_forcing_number(&g, kind)?;
            let report = NumberReport {
                zero_forcing_number: z,
                witness: witness.iter().copied().collect(),
                method: "exhaustive",
            };
            emit(
                format,
                &report,
                format!(
                    "zero forcing number: {z}\nwitness: {}",
                    fmt_vertices(witness)
                ),
            )?;
        }
        ZfCommand::Tree { graph } => {
            let (g, _) = load_graph(&graph)?;
            let (z, witness) = zfc_core::tree_min_zero_forcing_set(&g)?;
            let report = NumberReport {
                zero_forcing_number: z,
                witness: witness.iter().copied().collect(),
                method: "tree",
            };
            emit(
                format,
                &report,
                format!(
                    "zero forcing number: {z}\nwitness: {}\nmethod: tree",
                    fmt_vertices(witness)
                ),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_match(format: Format, cmd: MatchCommand) -> Result<ExitCode> {
    match cmd {
        MatchCommand::Check { pattern, matching } => {
            let b = load_pattern(&pattern)?.to_bipartite()?;
            let m = load_matching(&matching)?;
            let (constrained, certificate) = zfc_core::is_constrained(&b, &m)?;
            let report = MatchCheckReport {
                edges: m.edges().collect(),
                constrained,
                certificate: certificate.as_ref().map(|c| c.ordering().to_vec()),
            };
            let mut text = format!("constrained: {}", yesno(constrained));
            if let Some(c) = &certificate {
                text.push_str(&format!(
                    "\ncertificate: {}",
                    fmt_pairs(c.ordering().iter().copied())
                ));
            }
            emit(format, &report, text)?;
        }
        MatchCommand::Max {
            pattern,
            self_less,
            forbid,
        } => {
            let p = load_pattern(&pattern)?;
            let forbidden: BTreeSet<usize> = if self_less {
                (1..=p.rows().max(p.cols())).collect()
            } else {
                to_set(&forbid)
            };
            let b = p.to_bipartite()?;
            let (size, witness) = zfc_core::max_constrained_matching(&b, &forbidden);
            let report = MatchMaxReport {
                size,
                edges: witness.edges().collect(),
                constrained: true,
            };
            emit(
                format,
                &report,
                format!(
                    "maximum constrained matching size: {size}\nedges: {}",
                    fmt_pairs(witness.edges())
                ),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_ctrl(format: Format, cmd: CtrlCommand) -> Result<ExitCode> {
    match cmd {
        CtrlCommand::Strong {
            graph,
            input,
            method,
        } => {
            let (g, kind) = load_graph(&graph)?;
            let s = to_set(&input);
            if kind == GraphKind::SimpleDirected {
                let report = zfc_core::strong_simple(&g, &s)?;
                emit(format, &report, render_strong_text(&report))?;
                return Ok(ExitCode::SUCCESS);
            }
            let spec = SystemSpec::new(g, kind, s)?;
            match method {
                MethodChoice::Zf => {
                    let report = zfc_core::strong_zf(&spec)?;
                    emit(format, &report, render_strong_text(&report))?;
                }
                MethodChoice::Matching => {
                    let report = zfc_core::strong_matching(&spec)?;
                    emit(format, &report, render_strong_text(&report))?;
                }
                MethodChoice::Both => {
                    let zf = zfc_core::strong_zf(&spec)?;
                    let matching = zfc_core::strong_matching(&spec)?;
                    let agree = zf.verdict == matching.verdict;
                    let report = StrongBothReport {
                        verdict: zf.verdict,
                        methods_agree: agree,
                        zero_forcing: zf,
                        matching,
                    };
                    let text = format!(
                        "verdict: {}\nmethods agree: {}\n--- zero forcing route ---\n{}\n--- matching route ---\n{}",
                        yesno(report.verdict),
                        yesno(agree),
                        render_strong_text(&report.zero_forcing),
                        render_strong_text(&report.matching)
                    );
                    emit(format, &report, text)?;
                    if !agree {
                        eprintln!("error: the two decision routes disagree");
                        return Ok(ExitCode::from(3));
                    }
                }
            }
        }
        CtrlCommand::MinInput {
            graph,
            corollary_gap,
        } => {
            let (g, kind) = load_graph(&graph)?;
            let (size, witness, method) = zfc_core::min_input_set(&g, kind)?;
            let selfless_corollary = if corollary_gap {
                if kind != GraphKind::LoopDirected || g.has_loops() {
                    bail!("--corollary-gap requires an undamped loop-directed graph");
                }
                let (s, _) = zfc_core::selfless_matching_input_set(&g)?;
                Some(CorollaryReport {
                    input_set: s.iter().copied().collect(),
                    size: s.len(),
                    gap: s.len() - size,
                })
            } else {
                None
            };
            let mut text = format!(
                "minimum input set size: {size}\nwitness: {}\nmethod: {}",
                fmt_vertices(witness.iter().copied()),
                serde_json::to_value(method)?.as_str().unwrap_or_default()
            );
            if let Some(c) = &selfless_corollary {
                text.push_str(&format!(
                    "\nself-less matching input set: {} (size {}, gap {})",
                    fmt_vertices(c.input_set.iter().copied()),
                    c.size,
                    c.gap
                ));
            }
            let report = MinInputReport {
                size,
                witness: witness.into_iter().collect(),
                method,
                selfless_corollary,
            };
            emit(format, &report, text)?;
        }
        CtrlCommand::Kalman {
            graph,
            input,
            samples,
            seed,
        } => {
            let (g, kind) = load_graph(&graph)?;
            let spec = SystemSpec::new(g, kind, to_set(&input))?;
            let report = zfc_core::kalman_trial(&spec, samples, seed)?;
            let mut text = format!(
                "samples: {}\nseed: {}\nstrong verdict: {}\ncontrollable: {}/{}",
                report.samples,
                report.seed,
                yesno(report.strong_verdict),
                report.controllable_count,
                report.samples
            );
            if let Some(w) = &report.first_uncontrollable_witness {
                text.push_str(&format!(
                    "\nfirst uncontrollable witness (rank {}):\nA =\n{}\nB =\n{}",
                    w.rank, w.a, w.b
                ));
            }
            emit(format, &report, text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Zf(cmd) => run_zf(cli.format, cmd),
        Command::Match(cmd) => run_match(cli.format, cmd),
        Command::Tri { graph } => {
            let (g, kind) = load_graph(&graph)?;
            if kind != GraphKind::LoopDirected {
                bail!("the triangle number is defined for loop-directed graphs");
            }
            let tri = zfc_core::triangle_number(&g);
            let report = TriReport {
                triangle_number: tri,
            };
            emit(cli.format, &report, format!("triangle number: {tri}"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::MrTree { graph } => {
            let (g, _) = load_graph(&graph)?;
            let mr = zfc_core::tree_min_rank(&g)?;
            let report = MrTreeReport {
                minimum_rank: mr,
                zero_forcing_number: g.n() - mr,
            };
            emit(cli.format, &report, format!("minimum rank: {mr}"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ctrl(cmd) => run_ctrl(cli.format, cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
