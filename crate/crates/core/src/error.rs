use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("P({n},{k}) is not admissible: need k >= 1 and n > 2k")]
    InvalidParams { n: usize, k: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("cover selects every inner vertex; strips are undefined for trivial covers")]
    TrivialCover,

    #[error("selection is not a vertex cover: edge {0} is uncovered")]
    NotACover(Edge),

    #[error("cover is not minimum: {0}")]
    NotMinimum(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeded its limit ({limit})")]
    ResourceLimit { what: String, limit: u64 },

    #[error(
        "node budget of {budget} exhausted for P({n},{k}); best bounds {lower} <= beta <= {upper}"
    )]
    BudgetExhausted {
        n: usize,
        k: usize,
        budget: u64,
        lower: usize,
        upper: usize,
    },

    #[error("strip reduction did not settle within {0} iterations")]
    IterationCap(usize),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
