//! Exact verification engine for small-graph combinatorics: compact bitmask
//! graphs with a graph6 codec, exact property deciders (subset edge
//! thresholds, independence number, connectivity, cycle spectrum,
//! pancyclicity), extremal quadratic-form bounds with a brute-force oracle,
//! isomorphism-free exhaustive enumeration validated by cycle-index
//! counting, and reproducible verification campaigns.

pub mod campaigns;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod properties;
pub mod qforms;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_ORDER};
