//! Command-line front end: parse instances, run the solver, decomposition,
//! generators and validators, and emit results, traces and timing tables.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid input
//! (class violation or refused size), 4 internal error.

use clap::{Parser, Subcommand};
use mwss::basic::BasicClass;
use mwss::solver::{alpha, alpha_value, decompose_trace, max_stable_set_graph};
use mwss::testkit::{
    brute_alpha_bounded, find_class_violation, Generator, GeneratorConfig, InstanceClass,
};
use mwss::text::{parse, serialize};
use mwss::Error;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "mwss",
    about = "Exact maximum weight stable set solver for {ISK4,wheel}-free trigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the stability number of an instance.
    Solve {
        /// Instance file in the trigraph text format.
        input: PathBuf,
        /// Also print a maximum weight stable set (graph instances only).
        #[arg(long)]
        extract: bool,
        /// Write the decomposition trace to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Emit a machine-readable JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the extreme decomposition only and print its trace.
    Decompose {
        input: PathBuf,
        /// Also write the block tree in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate instance files.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        weight_max: u64,
        /// Comma-separated class mix (series-parallel, complete-bipartite,
        /// line, glued-clique, glued-stable).
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
        /// Output directory for the .tri files and the manifest.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an instance against the solver's graph class.
    Validate { input: PathBuf },
    /// Brute-force stability number (small instances only).
    Oracle {
        input: PathBuf,
        /// Vertex-count bound for the exponential enumeration.
        #[arg(long, default_value_t = 16)]
        bound: usize,
    },
    /// Solve every .tri file in a directory and report per-size timings.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Internal(_) => EXIT_INTERNAL,
            Error::InvalidArgument(_) | Error::InvalidInput(_) | Error::Refused(_) => EXIT_INVALID,
        };
        fail(code, e.to_string())
    }
}

fn read_instance(path: &Path) -> Result<mwss::WeightedTrigraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| fail(EXIT_PARSE, e.to_string()))
}

#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    alpha: u64,
    elapsed_ms: f64,
    recursion_steps: usize,
    basic_class_histogram: Vec<(String, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stable_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_path: Option<String>,
}

fn class_histogram(classes: impl Iterator<Item = BasicClass>) -> Vec<(String, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for class in classes {
        *counts.entry(class.to_string()).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            extract,
            trace,
            json,
        } => {
            let wt = read_instance(&input)?;
            let start = Instant::now();
            let result = alpha(&wt)?;
            let stable_set = if extract {
                if !wt.trigraph.is_graph() {
                    return Err(fail(
                        EXIT_INVALID,
                        "--extract requires a graph instance (no semi-adjacent pairs)",
                    ));
                }
                let extraction = max_stable_set_graph(&wt)?;
                Some(extraction.stable_set.iter().collect::<Vec<usize>>())
            } else {
                None
            };
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            if let Some(path) = &trace {
                std::fs::write(path, result.trace.to_text()).map_err(|e| {
                    fail(EXIT_PARSE, format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let report = RunReport {
                schema_version: 1,
                alpha: result.alpha,
                elapsed_ms,
                recursion_steps: result.trace.steps.len(),
                basic_class_histogram: class_histogram(
                    result
                        .trace
                        .steps
                        .iter()
                        .map(|s| s.a_class)
                        .chain(std::iter::once(result.trace.terminal_class)),
                ),
                stable_set,
                trace_path: trace.as_ref().map(|p| p.display().to_string()),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("alpha {}", report.alpha);
                if let Some(set) = &report.stable_set {
                    let labels: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                    println!("stable {}", labels.join(" "));
                }
            }
            Ok(())
        }
        Command::Decompose { input, dot } => {
            let wt = read_instance(&input)?;
            let trace = decompose_trace(&wt.trigraph)?;
            print!("{}", trace.to_text());
            if let Some(path) = dot {
                std::fs::write(&path, trace.to_dot()).map_err(|e| {
                    fail(EXIT_PARSE, format!("cannot write {}: {e}", path.display()))
                })?;
            }
            Ok(())
        }
        Command::Gen {
            seed,
            count,
            n_min,
            n_max,
            weight_max,
            classes,
            out,
        } => {
            let mut class_mix = Vec::new();
            for name in &classes {
                let class: InstanceClass = name
                    .parse()
                    .map_err(|e: String| fail(EXIT_PARSE, e))?;
                class_mix.push((class, 1));
            }
            let default = GeneratorConfig::default();
            let config = GeneratorConfig {
                seed,
                n_min,
                n_max,
                weight_max,
                class_mix: if class_mix.is_empty() {
                    default.class_mix
                } else {
                    class_mix
                },
            };
            std::fs::create_dir_all(&out).map_err(|e| {
                fail(EXIT_PARSE, format!("cannot create {}: {e}", out.display()))
            })?;
            let mut manifest = String::new();
            manifest.push_str(&format!(
                "seed {seed}\nn_min {n_min}\nn_max {n_max}\nweight_max {weight_max}\nclasses {}\ncount {count}\n",
                config
                    .class_mix
                    .iter()
                    .map(|(c, _)| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            let mut generator = Generator::new(config);
            for i in 0..count {
                let (class, wt) = generator.next_instance();
                let name = format!("{class}_{i:04}.tri");
                std::fs::write(out.join(&name), serialize(&wt)).map_err(|e| {
                    fail(EXIT_PARSE, format!("cannot write {name}: {e}"))
                })?;
                manifest.push_str(&format!("instance {name} n={}\n", wt.trigraph.n()));
                println!("{name}");
            }
            std::fs::write(out.join("manifest.txt"), manifest)
                .map_err(|e| fail(EXIT_PARSE, format!("cannot write manifest: {e}")))?;
            Ok(())
        }
        Command::Validate { input } => {
            let wt = read_instance(&input)?;
            match find_class_violation(&wt.trigraph)? {
                None => {
                    println!("ok: ISK4-free and wheel-free (all realizations)");
                    Ok(())
                }
                Some(violation) => Err(fail(EXIT_INVALID, violation.to_string())),
            }
        }
        Command::Oracle { input, bound } => {
            let wt = read_instance(&input)?;
            let value = brute_alpha_bounded(&wt, bound)?;
            println!("alpha {value}");
            Ok(())
        }
        Command::Bench { dir, json } => {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(&dir)
                .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", dir.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "tri"))
                .collect();
            entries.sort();
            if entries.is_empty() {
                return Err(fail(EXIT_PARSE, "no .tri files in the directory"));
            }
            let mut by_size: std::collections::BTreeMap<usize, Vec<f64>> =
                std::collections::BTreeMap::new();
            for path in &entries {
                let wt = read_instance(path)?;
                let start = Instant::now();
                let _ = alpha_value(&wt)?;
                by_size
                    .entry(wt.trigraph.n())
                    .or_default()
                    .push(start.elapsed().as_secs_f64());
            }
            let medians: Vec<(usize, f64, usize)> = by_size
                .iter()
                .map(|(&n, times)| {
                    let mut sorted = times.clone();
                    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    (n, sorted[sorted.len() / 2], times.len())
                })
                .collect();
            let slope = if medians.len() >= 2 {
                let xs: Vec<f64> = medians.iter().map(|&(n, _, _)| (n as f64).ln()).collect();
                let ys: Vec<f64> = medians
                    .iter()
                    .map(|&(_, t, _)| t.max(1e-9).ln())
                    .collect();
                let xm = xs.iter().sum::<f64>() / xs.len() as f64;
                let ym = ys.iter().sum::<f64>() / ys.len() as f64;
                let denom: f64 = xs.iter().map(|x| (x - xm) * (x - xm)).sum();
                if denom > 0.0 {
                    Some(
                        xs.iter()
                            .zip(&ys)
                            .map(|(x, y)| (x - xm) * (y - ym))
                            .sum::<f64>()
                            / denom,
                    )
                } else {
                    None
                }
            } else {
                None
            };
            if json {
                #[derive(Serialize)]
                struct BenchReport {
                    schema_version: u32,
                    instances: usize,
                    per_size: Vec<SizeRow>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    loglog_slope: Option<f64>,
                }
                #[derive(Serialize)]
                struct SizeRow {
                    n: usize,
                    median_seconds: f64,
                    count: usize,
                }
                let report = BenchReport {
                    schema_version: 1,
                    instances: entries.len(),
                    per_size: medians
                        .iter()
                        .map(|&(n, median_seconds, count)| SizeRow {
                            n,
                            median_seconds,
                            count,
                        })
                        .collect(),
                    loglog_slope: slope,
                };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("{:>8} {:>14} {:>7}", "n", "median_s", "count");
                for (n, median, count) in &medians {
                    println!("{n:>8} {median:>14.6} {count:>7}");
                }
                if let Some(s) = slope {
                    println!("loglog_slope {s:.3}");
                }
            }
            Ok(())
        }
    }
}
