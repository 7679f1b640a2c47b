//! Dirichlet-character sums over `Z_{p^α}` and clique counts of
//! Peisert-like graphs.
//!
//! Exact quantities are Gaussian integers; floating point only appears in
//! dual-group cross-checks.

pub mod character;
pub mod charsums;
pub mod error;
pub mod gaussian;
pub mod graph;
pub mod hypergeometric;
pub mod report;
pub mod ring;
pub mod verify;

pub use character::{DirichletCharacter, QuarticTable, RootsOfUnity};
pub use error::{Error, Result};
pub use gaussian::GaussianInt;
pub use graph::{build_graph, k3_formula, k4_formula, ExportFormat, PeisertLikeGraph};
pub use hypergeometric::{HypTuple, OrbitListing};
pub use report::{CliqueReport, TABLE1};
pub use ring::UnitGroup;
