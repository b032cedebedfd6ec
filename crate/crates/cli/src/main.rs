use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dynreach_cli::{
    benchmark, generate_workload, parse_stream, render_bench, render_report, run_stream,
    GenConfig, MixWeights, Mode, RunError, StreamCommand, WorkloadModel,
};

/// Fully dynamic reachability oracle harness.
#[derive(Parser)]
#[command(name = "dynreach", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a stream file; prints one line per query, then a summary.
    Run {
        file: PathBuf,
        /// Verify every query and the witness matrix against brute-force
        /// recomputation while running.
        #[arg(long)]
        checked: bool,
    },
    /// Generate a deterministic random workload on stdout.
    Gen {
        /// Vertex count.
        #[arg(long)]
        n: u32,
        /// Number of commands after init.
        #[arg(long)]
        ops: u64,
        /// Insert,delete,query probabilities, e.g. 0.4,0.3,0.3.
        #[arg(long, default_value = "0.4,0.3,0.3")]
        mix: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// erdos-renyi-touching or path-heavy.
        #[arg(long, default_value = "erdos-renyi-touching")]
        model: String,
    },
    /// Run a stream through the oracle and a recompute baseline, comparing
    /// wall time and work counters.
    Bench { file: PathBuf },
    /// Execute a stream, then print the witness matrix row-major.
    DumpTcm { file: PathBuf },
}

fn load_commands(file: &PathBuf) -> Result<Vec<StreamCommand>, String> {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    parse_stream(&text).map_err(|e| e.to_string())
}

fn parse_mix(raw: &str) -> Result<MixWeights, String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("mix must be three comma-separated numbers, got '{raw}'"));
    }
    let mut values = [0.0f64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part.trim().parse::<f64>().map_err(|_| format!("bad mix component '{part}'"))?;
    }
    Ok(MixWeights { insert: values[0], delete: values[1], query: values[2] })
}

fn real_main() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, checked } => {
            let commands = load_commands(&file).map_err(|e| (1, e))?;
            let mode = if checked { Mode::Checked } else { Mode::Fast };
            match run_stream(&commands, mode) {
                Ok(report) => {
                    print!("{}", render_report(&report));
                    Ok(())
                }
                Err(err @ RunError::CheckFailure { .. }) => Err((2, err.to_string())),
                Err(err) => Err((1, err.to_string())),
            }
        }
        Command::Gen { n, ops, mix, seed, model } => {
            let mix = parse_mix(&mix).map_err(|e| (1, e))?;
            let model = WorkloadModel::parse(&model)
                .ok_or_else(|| (1, format!("unknown model '{model}'")))?;
            let text = generate_workload(&GenConfig { n, ops, mix, seed, model })
                .map_err(|e| (1, e.to_string()))?;
            print!("{text}");
            Ok(())
        }
        Command::Bench { file } => {
            let commands = load_commands(&file).map_err(|e| (1, e))?;
            let report = benchmark(&commands).map_err(|e| (1, e.to_string()))?;
            print!("{}", render_bench(&report));
            Ok(())
        }
        Command::DumpTcm { file } => {
            let commands = load_commands(&file).map_err(|e| (1, e))?;
            let Some(&StreamCommand::Init { n }) = commands.first() else {
                return Err((1, "stream must start with init".into()));
            };
            let mut oracle = dynreach::DynamicOracle::new(n).map_err(|e| (1, e.to_string()))?;
            for command in commands.iter().skip(1) {
                match command {
                    StreamCommand::Init { .. } => {
                        return Err((1, "duplicate init".into()));
                    }
                    StreamCommand::Insert { center, edges } => {
                        oracle.insert(*center, edges).map_err(|e| (1, e.to_string()))?;
                    }
                    StreamCommand::Delete { edges } => {
                        oracle.delete(edges).map_err(|e| (1, e.to_string()))?;
                    }
                    StreamCommand::Query { .. } => {}
                }
            }
            let counts = oracle.tcm().counts_row_major();
            let n = n as usize;
            let mut line = String::new();
            for row in 0..n {
                line.clear();
                for col in 0..n {
                    if col > 0 {
                        line.push(' ');
                    }
                    line.push_str(&counts[row * n + col].to_string());
                }
                println!("{line}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
