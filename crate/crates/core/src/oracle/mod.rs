//! Ground truth for small graphs: exhaustive search, isomorph-free
//! enumeration of connected graphs, and a seeded instance generator.

mod enumerate;
mod random;
mod search;

pub use enumerate::{canonical_code, enumerate_connected_graphs, graph_from_code, MAX_ENUMERATION_N};
pub use random::{random_connected_graph, GeneratedGraph};
pub use search::{brute_force_solve, OracleError, SearchBudget, SearchOutcome};
