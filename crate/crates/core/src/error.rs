use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("node label must be non-empty")]
    EmptyLabel,
    #[error("label {0:?} is not usable here (commas, '#' prefixes and control characters break the text formats)")]
    UnusableLabel(String),
    #[error("self-loop on {0:?} is not allowed")]
    SelfLoop(String),
    #[error("edge {from:?} -> {to:?} has invalid weight {weight} (weights must be finite and non-negative)")]
    InvalidWeight { from: String, to: String, weight: f64 },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("node index {index} out of range for a network of {node_count} nodes")]
    InvalidNode { index: usize, node_count: usize },

    #[error("pairwise CON is defined for distinct nodes only")]
    IdenticalPair,
    #[error("node set must contain at least two nodes (got {0})")]
    SetTooSmall(usize),
    #[error("node set contains a duplicate member")]
    DuplicateMember,

    #[error("power iteration did not converge after {iterations} iterations (last residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("operation requires a non-empty network")]
    EmptyNetwork,
    #[error("score tables cover different node sets")]
    NodeSetMismatch,
    #[error("at least two nodes are required (got {0})")]
    TooFewNodes(usize),

    #[error("target {0:?} not present in the score table")]
    UnknownTarget(String),
    #[error("season list must be non-empty")]
    NoSeasons,
    #[error("season {season:?} has {players} players, fewer than k = {k}")]
    SeasonTooSmall { season: String, players: usize, k: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid season record: {0}")]
    InvalidSeason(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
