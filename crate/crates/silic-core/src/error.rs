//! Error types shared across the crate.

use thiserror::Error;

/// Errors from state-space construction and transition lookups.
#[derive(Debug, Error)]
pub enum MdpError {
    #[error("invalid-config: {0}")]
    InvalidConfig(String),
    /// The last hour of the day has no successor states.
    #[error("terminal-state: hour {0} has no successors")]
    TerminalState(u8),
}

/// Errors from diary parsing, filtering, and trajectory construction.
#[derive(Debug, Error)]
pub enum DiaryError {
    #[error("schema-error: missing column '{0}'")]
    SchemaError(String),
    #[error("row-error: line {line}: {reason}")]
    RowError { line: u64, reason: String },
    #[error("unmapped-activity: '{0}'")]
    UnmappedActivity(String),
    #[error("insufficient-data: {0}")]
    InsufficientData(String),
    #[error("invalid-trajectory: {0}")]
    InvalidTrajectory(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Errors from the IRL training loop.
#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid-config: {0}")]
    InvalidConfig(String),
    #[error("divergence: value iteration still moving after {sweeps} sweeps (last delta {last_delta:e})")]
    Divergence { sweeps: usize, last_delta: f64 },
    #[error("invalid-guidance: {0}")]
    InvalidGuidance(String),
    #[error("insufficient-data: {0}")]
    InsufficientData(String),
    #[error(transparent)]
    Diary(#[from] DiaryError),
}

/// Errors from guidance providers (prompt parsing, transport, replay).
#[derive(Debug, Error)]
pub enum GuidanceError {
    #[error("parse-error: {0}")]
    ParseError(String),
    #[error("provider-unavailable: {0}")]
    ProviderUnavailable(String),
    #[error("replay-exhausted: no logged {kind} exchange left for person '{person_id}'")]
    ReplayExhausted { person_id: String, kind: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Errors from the prediction stage.
#[derive(Debug, Error)]
pub enum CcrError {
    #[error("parse-error: {0}")]
    ParseError(String),
    #[error("context-missing: no context row for person '{0}'")]
    ContextMissing(String),
    #[error("invalid-mode: {0}")]
    InvalidMode(String),
    #[error("schema-error: missing column '{0}'")]
    SchemaError(String),
    #[error("row-error: line {line}: {reason}")]
    RowError { line: u64, reason: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Errors from classification metrics.
#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("invalid-label: label {label} outside [0, {n_classes})")]
    InvalidLabel { label: usize, n_classes: usize },
    #[error("length mismatch: {truth} truth labels vs {pred} predictions")]
    LengthMismatch { truth: usize, pred: usize },
}

/// Errors from feature extraction and selection.
#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("insufficient-data: {0}")]
    InsufficientData(String),
    #[error("invalid-labels: {0}")]
    InvalidLabels(String),
    #[error(transparent)]
    Diary(#[from] DiaryError),
}

/// Errors from brute-force oracles.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error("oracle-too-large: {paths} trajectories exceed the enumeration budget of {budget}")]
    TooLarge { paths: usize, budget: usize },
}
