//! Side-by-side comparison of the dynamic oracle against a baseline that
//! recomputes the full transitive closure after every update.

use std::fmt::Write as _;
use std::time::Instant;

use dynreach::reference::{closure_with_work, BoolMatrix};
use dynreach::{DynamicOracle, VersionedEdgeStore};

use crate::run::RunError;
use crate::stream::StreamCommand;

#[derive(Debug, Clone, Copy, Default)]
pub struct ClassStats {
    pub count: u64,
    pub total_ns: u128,
    pub tree_work: u64,
    pub tcm_updates: u64,
}

impl ClassStats {
    fn mean_ns(&self) -> f64 {
        if self.count == 0 { 0.0 } else { self.total_ns as f64 / self.count as f64 }
    }

    fn mean_tree_work(&self) -> f64 {
        if self.count == 0 { 0.0 } else { self.tree_work as f64 / self.count as f64 }
    }

    fn mean_tcm_updates(&self) -> f64 {
        if self.count == 0 { 0.0 } else { self.tcm_updates as f64 / self.count as f64 }
    }

    fn mean_work(&self) -> f64 {
        self.mean_tree_work() + self.mean_tcm_updates()
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub oracle_outputs: Vec<bool>,
    pub baseline_outputs: Vec<bool>,
    pub oracle_insert: ClassStats,
    pub oracle_delete: ClassStats,
    pub oracle_query: ClassStats,
    pub baseline_update: ClassStats,
    pub baseline_query: ClassStats,
}

impl BenchReport {
    /// Mean insert work over mean delete work (tree work + matrix updates).
    pub fn insert_delete_work_ratio(&self) -> f64 {
        let delete = self.oracle_delete.mean_work();
        if delete == 0.0 { f64::INFINITY } else { self.oracle_insert.mean_work() / delete }
    }

    pub fn mean_delete_tree_work(&self) -> f64 {
        self.oracle_delete.mean_tree_work()
    }

    pub fn mean_baseline_update_work(&self) -> f64 {
        self.baseline_update.mean_tree_work()
    }
}

/// Run `commands` through the oracle and through the recompute baseline,
/// collecting wall times and work counters per operation class. Query
/// outputs of both sides are preserved for cross-checking.
pub fn benchmark(commands: &[StreamCommand]) -> Result<BenchReport, RunError> {
    let Some(StreamCommand::Init { n }) = commands.first() else {
        return Err(RunError::MissingInit);
    };

    // Oracle pass.
    let mut oracle = DynamicOracle::new(*n)?;
    let mut oracle_outputs = Vec::new();
    let mut oracle_insert = ClassStats::default();
    let mut oracle_delete = ClassStats::default();
    let mut oracle_query = ClassStats::default();
    let mut last = oracle.snapshot_counters();

    for command in commands.iter().skip(1) {
        match command {
            StreamCommand::Init { .. } => return Err(RunError::MissingInit),
            StreamCommand::Insert { center, edges } => {
                let started = Instant::now();
                oracle.insert(*center, edges)?;
                let elapsed = started.elapsed().as_nanos();
                let now = oracle.snapshot_counters();
                oracle_insert.count += 1;
                oracle_insert.total_ns += elapsed;
                oracle_insert.tree_work += now.tree_work - last.tree_work;
                oracle_insert.tcm_updates += now.tcm_cell_updates - last.tcm_cell_updates;
                last = now;
            }
            StreamCommand::Delete { edges } => {
                let started = Instant::now();
                oracle.delete(edges)?;
                let elapsed = started.elapsed().as_nanos();
                let now = oracle.snapshot_counters();
                oracle_delete.count += 1;
                oracle_delete.total_ns += elapsed;
                oracle_delete.tree_work += now.tree_work - last.tree_work;
                oracle_delete.tcm_updates += now.tcm_cell_updates - last.tcm_cell_updates;
                last = now;
            }
            StreamCommand::Query { from, to } => {
                let started = Instant::now();
                let answer = oracle.query(*from, *to)?;
                oracle_query.total_ns += started.elapsed().as_nanos();
                oracle_query.count += 1;
                oracle_outputs.push(answer);
            }
        }
    }

    // Baseline pass: a bare store plus a closure recomputation per update.
    let mut store = VersionedEdgeStore::new(*n)?;
    let (mut closure, _): (BoolMatrix, u64) = closure_with_work(&store.current_view());
    let mut baseline_outputs = Vec::new();
    let mut baseline_update = ClassStats::default();
    let mut baseline_query = ClassStats::default();

    for command in commands.iter().skip(1) {
        match command {
            StreamCommand::Init { .. } => unreachable!("rejected in the oracle pass"),
            StreamCommand::Insert { center, edges } => {
                let started = Instant::now();
                store.record_insertion(*center, edges)?;
                let (next, work) = closure_with_work(&store.current_view());
                closure = next;
                baseline_update.total_ns += started.elapsed().as_nanos();
                baseline_update.count += 1;
                baseline_update.tree_work += work;
            }
            StreamCommand::Delete { edges } => {
                let started = Instant::now();
                store.record_deletion(edges)?;
                let (next, work) = closure_with_work(&store.current_view());
                closure = next;
                baseline_update.total_ns += started.elapsed().as_nanos();
                baseline_update.count += 1;
                baseline_update.tree_work += work;
            }
            StreamCommand::Query { from, to } => {
                let started = Instant::now();
                let answer = closure.get(*from, *to);
                baseline_query.total_ns += started.elapsed().as_nanos();
                baseline_query.count += 1;
                baseline_outputs.push(answer);
            }
        }
    }

    Ok(BenchReport {
        oracle_outputs,
        baseline_outputs,
        oracle_insert,
        oracle_delete,
        oracle_query,
        baseline_update,
        baseline_query,
    })
}

pub fn render_bench(report: &BenchReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "## ops insert={} delete={} query={}",
        report.oracle_insert.count, report.oracle_delete.count, report.oracle_query.count
    )
    .unwrap();
    writeln!(
        out,
        "## oracle insert: mean_ns={:.0} mean_tree_work={:.1} mean_tcm_updates={:.1}",
        report.oracle_insert.mean_ns(),
        report.oracle_insert.mean_tree_work(),
        report.oracle_insert.mean_tcm_updates()
    )
    .unwrap();
    writeln!(
        out,
        "## oracle delete: mean_ns={:.0} mean_tree_work={:.1} mean_tcm_updates={:.1}",
        report.oracle_delete.mean_ns(),
        report.oracle_delete.mean_tree_work(),
        report.oracle_delete.mean_tcm_updates()
    )
    .unwrap();
    writeln!(out, "## oracle query: mean_ns={:.0}", report.oracle_query.mean_ns()).unwrap();
    writeln!(
        out,
        "## oracle insert:delete work ratio={:.2}",
        report.insert_delete_work_ratio()
    )
    .unwrap();
    writeln!(
        out,
        "## baseline update: mean_ns={:.0} mean_closure_work={:.1}",
        report.baseline_update.mean_ns(),
        report.baseline_update.mean_tree_work()
    )
    .unwrap();
    writeln!(out, "## baseline query: mean_ns={:.0}", report.baseline_query.mean_ns()).unwrap();
    writeln!(
        out,
        "## outputs agree={}",
        report.oracle_outputs == report.baseline_outputs
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate_workload, GenConfig, MixWeights, WorkloadModel};
    use crate::run::{run_stream, Mode};
    use crate::stream::parse_stream;

    #[test]
    fn benchmark_preserves_query_outputs() {
        let text = generate_workload(&GenConfig {
            n: 15,
            ops: 250,
            mix: MixWeights { insert: 0.35, delete: 0.3, query: 0.35 },
            seed: 4,
            model: WorkloadModel::ErdosRenyiTouching,
        })
        .unwrap();
        let commands = parse_stream(&text).unwrap();
        let report = benchmark(&commands).unwrap();
        let reference = run_stream(&commands, Mode::Fast).unwrap();
        assert_eq!(report.oracle_outputs, reference.outputs);
        assert_eq!(report.baseline_outputs, reference.outputs);
    }

    #[test]
    fn insert_only_stream_respects_the_matrix_update_cap() {
        let n = 18u64;
        let text = generate_workload(&GenConfig {
            n: n as u32,
            ops: 120,
            mix: MixWeights { insert: 1.0, delete: 0.0, query: 0.0 },
            seed: 11,
            model: WorkloadModel::ErdosRenyiTouching,
        })
        .unwrap();
        let commands = parse_stream(&text).unwrap();
        let report = benchmark(&commands).unwrap();
        assert!(report.oracle_insert.count > 0);
        let per_insert = report.oracle_insert.tcm_updates as f64 / report.oracle_insert.count as f64;
        assert!(per_insert <= (2 * n * n) as f64);
    }
}
