//! Workload harness for the dynreach oracle: stream parsing, execution with
//! optional differential checking, deterministic workload generation, and a
//! recompute-baseline benchmark.

#![forbid(unsafe_code)]

pub mod bench;
pub mod gen;
pub mod run;
pub mod stream;

pub use bench::{benchmark, render_bench, BenchReport};
pub use gen::{generate_workload, GenConfig, GenError, MixWeights, SplitMix64, WorkloadModel};
pub use run::{query_output_lines, render_report, run_stream, Mode, RunError, RunReport};
pub use stream::{parse_stream, StreamCommand, StreamError};
