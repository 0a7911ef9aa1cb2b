use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the mining, labeling and modeling pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("repository not found: {0}")]
    RepositoryNotFound(PathBuf),

    #[error("branch not found: {branch} in {repo}")]
    BranchNotFound { repo: PathBuf, branch: String },

    #[error("git {command} failed: {detail}")]
    Git { command: String, detail: String },

    #[error("path {path} absent at {commit_id}")]
    MissingPath { commit_id: String, path: String },

    #[error("issue fetch failed at page starting {start_at}: {detail}")]
    IssueFetch { start_at: usize, detail: String },

    #[error("invalid issue dump line {line}: {detail}")]
    IssueDump { line: usize, detail: String },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("dataset contains a single class only")]
    SingleClass,

    #[error("too few rows for {k} folds: {rows}")]
    TooFewRows { rows: usize, k: usize },

    #[error("unknown metric name: {0}")]
    UnknownMetric(String),

    #[error("feature schema mismatch: expected {expected:?}, got {got:?}")]
    SchemaMismatch { expected: Vec<String>, got: Vec<String> },

    #[error("non-finite feature value at row {row}, column {column}")]
    NonFiniteFeature { row: usize, column: usize },

    #[error("model is not a tree ensemble")]
    NotATreeEnsemble,

    #[error("tree ensemble produced no splits; importance undefined")]
    DegenerateEnsemble,

    #[error("input lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank correlation undefined for constant input")]
    ConstantInput,

    #[error("{stage} stage failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error("{0}")]
    Other(String),
}

impl Error {
    /// Wrap an error with the name of the pipeline stage that produced it.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
