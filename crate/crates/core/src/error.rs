use thiserror::Error;

/// Errors produced by graph construction, codecs and the exact solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {0} out of range (maximum {max})", max = crate::graph::MAX_ORDER)]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex set has members outside 0..{order}")]
    SetOutOfRange { order: usize },
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("truncated graph6 payload")]
    TruncatedPayload,
    #[error("nonzero padding bits in graph6 payload")]
    NonzeroPadding,
    #[error("order {order} too large for this operation (limit {limit})")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("order {order} too small for this operation (minimum {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error("subset order {s} exceeds graph order {order}")]
    SubsetOrderExceedsOrder { s: usize, order: usize },
    #[error("edge threshold {t} impossible for subset order {s}")]
    InvalidStQuery { s: usize, t: u64 },
    #[error("cycle length {k} out of range 3..={order}")]
    CycleLengthOutOfRange { k: usize, order: usize },
    #[error("invalid range: need n >= k >= {min_k}, got n={n}, k={k}")]
    InvalidRange { n: usize, k: usize, min_k: usize },
    #[error("search space of {0} compositions exceeds cap {1}")]
    SearchTooLarge(u128, u128),
    #[error("blow-up multiplicity {q} out of range 1..={max}")]
    MultiplicityOutOfRange { q: usize, max: usize },
    #[error("campaign parameter error: {0}")]
    CampaignParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
