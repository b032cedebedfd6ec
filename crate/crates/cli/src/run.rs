//! Stream execution against the dynamic oracle.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use dynreach::reference::{reachable_bruteforce, witness_count_oracle};
use dynreach::{CounterReport, DynamicOracle};
use thiserror::Error;

use crate::stream::StreamCommand;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Execute only.
    Fast,
    /// Additionally recompute the witness matrix after every update and
    /// every query result from scratch, failing loudly on divergence.
    Checked,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RunError {
    #[error("stream must start with init")]
    MissingInit,
    #[error("command {index}: {detail}")]
    CheckFailure { index: usize, detail: String },
    #[error(transparent)]
    Oracle(#[from] dynreach::Error),
}

#[derive(Debug, Clone)]
pub struct RunReport {
    /// One entry per query command, in stream order.
    pub outputs: Vec<bool>,
    pub counters: CounterReport,
    pub elapsed: Duration,
    pub command_count: usize,
}

pub fn run_stream(commands: &[StreamCommand], mode: Mode) -> Result<RunReport, RunError> {
    let Some(StreamCommand::Init { n }) = commands.first() else {
        return Err(RunError::MissingInit);
    };
    let mut oracle = DynamicOracle::new(*n)?;
    let mut outputs = Vec::new();
    let started = Instant::now();

    for (index, command) in commands.iter().enumerate().skip(1) {
        match command {
            StreamCommand::Init { .. } => return Err(RunError::MissingInit),
            StreamCommand::Insert { center, edges } => {
                oracle.insert(*center, edges)?;
                if mode == Mode::Checked {
                    check_witness_matrix(&oracle, index)?;
                }
            }
            StreamCommand::Delete { edges } => {
                oracle.delete(edges)?;
                if mode == Mode::Checked {
                    check_witness_matrix(&oracle, index)?;
                }
            }
            StreamCommand::Query { from, to } => {
                let answer = oracle.query(*from, *to)?;
                if mode == Mode::Checked {
                    let expected =
                        reachable_bruteforce(&oracle.store().current_view(), *from, *to);
                    if answer != expected {
                        return Err(RunError::CheckFailure {
                            index,
                            detail: format!(
                                "query({from},{to}) -> {}, recompute -> {}",
                                answer as u8, expected as u8
                            ),
                        });
                    }
                }
                outputs.push(answer);
            }
        }
    }

    Ok(RunReport {
        outputs,
        counters: oracle.snapshot_counters(),
        elapsed: started.elapsed(),
        command_count: commands.len(),
    })
}

fn check_witness_matrix(oracle: &DynamicOracle, index: usize) -> Result<(), RunError> {
    let expected = witness_count_oracle(oracle);
    let actual = oracle.tcm().counts_row_major();
    if actual == expected.as_slice() {
        return Ok(());
    }
    let n = oracle.vertex_count() as usize;
    let cell = actual
        .iter()
        .zip(expected.iter())
        .position(|(a, e)| a != e)
        .expect("some cell differs");
    let (row, col) = (cell / n + 1, cell % n + 1);
    Err(RunError::CheckFailure {
        index,
        detail: format!(
            "witness cell ({row},{col}) holds {} but recomputes to {}",
            actual[cell], expected[cell]
        ),
    })
}

/// Query output lines ("1"/"0" each), then a "##"-prefixed summary block.
pub fn render_report(report: &RunReport) -> String {
    let mut out = String::new();
    for &answer in &report.outputs {
        out.push(if answer { '1' } else { '0' });
        out.push('\n');
    }
    let c = &report.counters;
    writeln!(
        out,
        "## commands={} ins={} del={} queries={}",
        report.command_count, c.ins, c.del,
        report.outputs.len()
    )
    .unwrap();
    writeln!(
        out,
        "## timeline={} tcm_cell_updates={} tree_work={} centers={}",
        c.timeline, c.tcm_cell_updates, c.tree_work,
        c.centers.len()
    )
    .unwrap();
    writeln!(out, "## elapsed_us={}", report.elapsed.as_micros()).unwrap();
    out
}

/// The query-output section of a rendered report (everything before the
/// summary block); the part required to be reproducible bit for bit.
pub fn query_output_lines(rendered: &str) -> String {
    rendered
        .lines()
        .filter(|line| !line.starts_with("##"))
        .map(|line| format!("{line}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::parse_stream;

    #[test]
    fn executes_the_three_line_example() {
        let commands = parse_stream("init 3\ninsert 2 1 2 2 3\nquery 1 3\n").unwrap();
        let report = run_stream(&commands, Mode::Fast).unwrap();
        assert_eq!(report.outputs, vec![true]);
        let rendered = render_report(&report);
        assert!(rendered.starts_with("1\n"));
        assert!(rendered.contains("## commands=3 ins=1 del=0 queries=1"));
    }

    #[test]
    fn delete_flips_the_answer() {
        let commands =
            parse_stream("init 3\ninsert 2 1 2 2 3\nquery 1 3\ndelete 1 2 2 3\nquery 1 3\n")
                .unwrap();
        let report = run_stream(&commands, Mode::Checked).unwrap();
        assert_eq!(report.outputs, vec![true, false]);
    }

    #[test]
    fn fast_and_checked_agree() {
        let text = crate::gen::generate_workload(&crate::gen::GenConfig {
            n: 12,
            ops: 200,
            mix: crate::gen::MixWeights { insert: 0.4, delete: 0.3, query: 0.3 },
            seed: 9,
            model: crate::gen::WorkloadModel::ErdosRenyiTouching,
        })
        .unwrap();
        let commands = parse_stream(&text).unwrap();
        let fast = run_stream(&commands, Mode::Fast).unwrap();
        let checked = run_stream(&commands, Mode::Checked).unwrap();
        assert_eq!(fast.outputs, checked.outputs);
    }

    #[test]
    fn stream_without_init_is_rejected() {
        assert_eq!(run_stream(&[], Mode::Fast).unwrap_err(), RunError::MissingInit);
    }
}
