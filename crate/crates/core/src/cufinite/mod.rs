//! Finite positively ordered monoids viewed as algebraic, all-compact
//! Cu-semigroups: ideals, quotients, the ideal lattice, soft elements,
//! the simple-elementary classification, and functional existence.

mod classify;
mod fourier;
mod functional;
mod ideals;

pub use classify::{classify_simple, soft_elements, SimpleClass};
pub use fourier::{feasible, LinSystem};
pub use functional::{
    functional_exists, state_extension_bounds, FunctionalSearchResult, StateBounds,
};
pub use ideals::{ideals, idl, latf, quotient, IdealSet, QuotientMap};

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CufiniteError {
    #[error("member set is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("normalization at zero is rejected")]
    NormalizationAtZero,
    #[error("bound must be at least 1")]
    BadBound,
    #[error("member set is not a submonoid: {0}")]
    NotASubmonoid(String),
    #[error("f is not a state on the submonoid: {0}")]
    NotAState(String),
    #[error("criterion and linear-feasibility cross-check disagree")]
    CrossCheckMismatch,
}
