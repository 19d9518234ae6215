//! Exact computation of the connective eccentric index
//! `C(G) = Σ_v deg(v) / ecc(v)`, the graph operations it is studied under,
//! closed-form expressions for those operations, and a harness that checks
//! each expression against brute-force BFS.

pub mod cli;
pub mod closed_forms;
pub mod constructions;
pub mod error;
pub mod generators;
pub mod graph;
pub mod index;
pub mod io;
pub mod rational;
pub mod verify;

pub use error::{FamilyError, FormulaError, GraphError, ParseError};
pub use generators::FamilySpec;
pub use graph::{DistanceRow, Graph};
pub use index::{connective_eccentric_index, count_well_connected, index_summary, total_eccentricity, IndexSummary};
pub use rational::Rational;
