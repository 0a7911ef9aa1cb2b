//! Toolkit for mining the Git + Jira history of multi-language projects,
//! labeling commits that induce bugs fixed across several programming
//! languages, computing per-commit metrics, and training/evaluating
//! just-in-time prediction models on the result.

pub mod analyzer;
pub mod error;

pub use error::{Error, Result};
