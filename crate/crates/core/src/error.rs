use thiserror::Error;

use crate::diagram::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid diagram: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("operation undefined: {0}")]
    Undefined(String),

    #[error("arc is not maximal")]
    NotMaximal,

    #[error("symbol counts do not match the algebra: {0}")]
    CountMismatch(String),

    #[error("weight is not dominant: {0}")]
    NonDominant(String),

    #[error("arithmetic overflow")]
    Overflow,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
