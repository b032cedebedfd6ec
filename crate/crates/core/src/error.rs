use thiserror::Error;

/// Errors surfaced by the store, the witness matrix and the oracle facade.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    ZeroVertexCount,

    #[error("vertex {id} out of range 1..={n}")]
    VertexOutOfRange { id: u32, n: u32 },

    #[error("edge ({src},{dst}) does not touch insertion center {center}")]
    CenterViolation { src: u32, dst: u32, center: u32 },

    #[error("insertion edge set is empty")]
    EmptyEdgeSet,

    #[error("edge ({src},{dst}) is already alive in the current view")]
    EdgeAlreadyAlive { src: u32, dst: u32 },

    #[error("version {requested} exceeds current version {current}")]
    VersionOutOfRange { requested: u32, current: u32 },

    /// A witness-count cell was asked to go below zero. This is a
    /// bookkeeping bug in the caller, never a user input problem.
    #[error("witness count underflow at cell ({row},{col})")]
    WitnessUnderflow { row: u32, col: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
