//! W-semigroups (positively pre-ordered monoid plus auxiliary relation),
//! the axiom checkers W1–W6, the W- and Cu-completions, algebraic
//! Cu-semigroups, and inductive limits at finite truncation.

mod gamma;
mod limits;
mod wsemi;

pub use gamma::{cu_of_pom, gamma, GammaResult};
pub use limits::{inductive_limit_stage, LimitStage};
pub use wsemi::{enumerate_w_morphisms, mu, validate_w, FinW, MuResult, WAxiom};

use crate::pom::PomError;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CompletionError {
    #[error("auxiliary relation matrix has wrong size")]
    BadAuxSize,
    #[error("auxiliary relation condition violated: {0}")]
    BadAux(String),
    #[error("axiom precondition violated: {0} fails")]
    Precondition(&'static str),
    #[error("carrier too large for round-ideal enumeration (max 12, got {0})")]
    CarrierTooLarge(usize),
    #[error("completion check failed: {0}")]
    CheckFailed(String),
    #[error("stage map {index}: {reason}")]
    BadMap { index: usize, reason: String },
    #[error("stage index {0} out of range")]
    BadStage(usize),
    #[error(transparent)]
    Pom(#[from] PomError),
}
