use std::fmt;

use thiserror::Error;

/// First structural problem found in a candidate instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    NoVertices,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    Cycle { u: usize, v: usize },
    Disconnected { vertex: usize },
    LabelSetCount { expected: usize, found: usize },
    DuplicateLabel { vertex: usize, label: String },
    BadToken { vertex: usize, token: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NoVertices => write!(f, "instance has no vertices"),
            Diagnostic::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            Diagnostic::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Diagnostic::Cycle { u, v } => write!(f, "cycle: edge {u} {v} closes a cycle"),
            Diagnostic::Disconnected { vertex } => {
                write!(f, "disconnected: vertex {vertex} is not reachable from vertex 0")
            }
            Diagnostic::LabelSetCount { expected, found } => {
                write!(f, "expected {expected} label sets, found {found}")
            }
            Diagnostic::DuplicateLabel { vertex, label } => {
                write!(f, "duplicate label {label:?} at vertex {vertex}")
            }
            Diagnostic::BadToken { vertex, token } => {
                write!(f, "invalid label token {token:?} at vertex {vertex}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("not a tree: {0}")]
    NotATree(Diagnostic),
    #[error("invalid instance: {0}")]
    Invalid(Diagnostic),
    #[error("invalid assignment at vertex {vertex}: {reason}")]
    InvalidAssignment { vertex: usize, reason: String },
    #[error("size guard `{guard}` exceeded: measured {measured}, limit {limit}")]
    SizeGuard {
        guard: &'static str,
        measured: String,
        limit: String,
    },
    #[error("not binary: vertex {vertex} has {children} children under root {root}")]
    NotBinary {
        vertex: usize,
        children: usize,
        root: usize,
    },
    #[error("L must be >= 2 (got {0})")]
    BlockHeight(usize),
    #[error("epsilon must satisfy 0 < epsilon < 1 (got {0})")]
    Epsilon(f64),
    #[error("not a star centered at vertex {center}: edge {u} {v}")]
    NotAStar { center: usize, u: usize, v: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("infeasible solution: {0}")]
    Infeasible(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}

impl Error {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
