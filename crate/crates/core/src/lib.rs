//! Lexicographic standard complexes of 0/1 point configurations and
//! matroids, the canonical basis-to-face bijection, and its description on
//! lattice path matroids by a marking-path statistic.

pub mod complex;
pub mod config;
pub mod corpus;
pub mod descriptor;
pub mod error;
pub mod latpath;
pub mod matroid;
pub mod oracle;
pub mod report;
pub mod set;
pub mod stdcomplex;
pub mod verify;

pub use complex::SimplicialComplex;
pub use config::PointConfig;
pub use descriptor::MatroidDescriptor;
pub use error::{Error, Result};
pub use latpath::LatticePath;
pub use matroid::Matroid;
pub use oracle::TermOrder;
pub use set::FiniteSet;
pub use stdcomplex::{
    lambda_of_basis, lambda_table, lex_standard_complex_config, lex_standard_complex_matroid,
    BijectionTable, LexMemo,
};
