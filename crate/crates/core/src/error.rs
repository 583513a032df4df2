use thiserror::Error;

use crate::set::ArgumentSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("framework has no arguments")]
    Empty,
    #[error("invalid argument name {0:?}")]
    InvalidName(String),
    #[error("argument {0:?} declared twice")]
    DuplicateArgument(String),
    #[error("unknown argument {0:?}")]
    UnknownArgument(String),
    #[error("attack ({from}, {to}) out of range for {len} arguments")]
    AttackOutOfRange { from: usize, to: usize, len: usize },
}

/// A framework file could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Framework {
        line: usize,
        #[source]
        source: FrameworkError,
    },
    #[error("no arguments declared")]
    Empty,
    #[error("unknown format {0:?} (expected apx, tgf or iccma23)")]
    UnknownFormat(String),
}

impl ParseError {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        ParseError::Malformed {
            line,
            message: message.into(),
        }
    }
}

/// A DIMACS / QDIMACS file or a formula failed validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: malformed header: {message}")]
    Header { line: usize, message: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("literal {literal} out of range for {vars} variables")]
    LiteralOutOfRange { literal: i64, vars: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {0} is tautological")]
    TautologicalClause(usize),
    #[error("header announces {expected} clauses but {found} were given")]
    ClauseCount { expected: usize, found: usize },
    #[error("unsupported quantifier prefix: {0}")]
    UnsupportedPrefix(String),
    #[error("variable {0} is quantified twice or left free")]
    Quantification(usize),
}

/// The search ran past its deadline. `partial` carries whatever narrowing
/// state was reached, when the operation has one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("deadline exceeded")]
pub struct DeadlineExceeded {
    pub partial: Option<ArgumentSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("argument {0} is both required in and required out")]
    Conflicting(usize),
    #[error("argument {0} out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("brute force is limited to {limit} arguments, framework has {len}")]
    TooLarge { len: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FacetError {
    #[error("argument {0:?} is not a facet")]
    NotAFacet(String),
    #[error("history is empty")]
    EmptyHistory,
    #[error("argument {0} out of range")]
    OutOfRange(usize),
    #[error(transparent)]
    Deadline(#[from] DeadlineExceeded),
}
