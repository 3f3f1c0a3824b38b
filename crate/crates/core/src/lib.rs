//! Exact and numeric evaluation of degenerate special numbers: λ-falling factorials,
//! degenerate Stirling and Bell numbers, degenerate hypergeometric functions and the
//! hypergeometric number families built from them.
//!
//! Exact arithmetic uses arbitrary-precision rationals throughout; floating point only
//! appears in numeric evaluation modes, the Gamma function and quadrature.

pub mod bell;
pub mod error;
pub mod gamma;
pub mod hypergeometric;
pub mod identities;
pub mod numbers;
pub mod oracle;
pub mod quadrature;
pub mod rational;
pub mod sequences;
pub mod series;
pub mod stirling;
pub mod value;

pub use error::{Error, ErrorKind, Result};
pub use hypergeometric::{EvalMode, HyperParams, ModeKind};
pub use numbers::{Family, NumberQuery};
pub use oracle::{gf_extract_family, GfDescriptor};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use stirling::{StirlingKind, StirlingTable};
pub use value::Value;
