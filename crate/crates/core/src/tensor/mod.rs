//! Tensor products by congruence rewriting over the free abelian monoid on
//! pairs: sound, depth-bounded derivation search with replayable
//! certificates, plus certified saturation to a finite quotient and the
//! closed-form identity table for the named Cu-semirings.

mod engine;
mod factors;
mod identity;
mod saturate;

pub use engine::{replay, Engine, RewriteCertificate, Step, StepKind};
pub use factors::{FinPomFactor, FinWFactor, NatFactor, SolidCompactFactor};
pub use identity::cu_tensor_identity;
pub use saturate::{
    tensor_algebraic_check, tensor_auxrel, tensor_leq, tensor_saturate, Saturated,
    SaturateOperand,
};

use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

/// One side of a tensor product. `splits` enumerates binary decompositions
/// `e = p + q` into nonzero parts (bounded for infinite carriers); `down`
/// lists elements below `e` when that set is finitely enumerable.
pub trait TensorFactor {
    type Elem: Clone + Ord + Eq + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, e: &Self::Elem) -> bool {
        *e == self.zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn splits(&self, e: &Self::Elem) -> Vec<(Self::Elem, Self::Elem)>;
    /// Elements `x ≤ e`, or None when not finitely enumerable.
    fn down(&self, e: &Self::Elem) -> Option<Vec<Self::Elem>>;
    /// The cofinal self-related auxiliary predecessor of `e` (the head of a
    /// constant chain under W1), when the factor carries an auxiliary
    /// relation.
    fn aux_top(&self, _e: &Self::Elem) -> Option<Self::Elem> {
        None
    }
}

/// A multiset of pairs over two carriers, canonically sorted, zero
/// coordinates absorbed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormalSum<A: Ord, B: Ord> {
    terms: Vec<(A, B)>,
}

impl<A: Ord + Clone, B: Ord + Clone> FormalSum<A, B> {
    pub fn terms(&self) -> &[(A, B)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Builds the canonical form: zero-coordinate pairs dropped, terms sorted.
pub fn formal_sum<L: TensorFactor, R: TensorFactor>(
    left: &L,
    right: &R,
    terms: Vec<(L::Elem, R::Elem)>,
) -> FormalSum<L::Elem, R::Elem> {
    let mut terms: Vec<(L::Elem, R::Elem)> = terms
        .into_iter()
        .filter(|(a, b)| !left.is_zero(a) && !right.is_zero(b))
        .collect();
    terms.sort();
    FormalSum { terms }
}

/// Outcome of a bounded derivation search.
#[derive(Clone, Debug)]
pub enum TensorVerdict<A: Ord, B: Ord> {
    Yes(RewriteCertificate<A, B>),
    /// Emitted only when the reachable set saturated below every bound, so
    /// absence of a derivation is exhaustively certified.
    No,
    Unknown { depth: u64, frontier: usize },
}

impl<A: Ord, B: Ord> TensorVerdict<A, B> {
    pub fn is_yes(&self) -> bool {
        matches!(self, TensorVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, TensorVerdict::No)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("size bound {bound} is below the operand sizes {need}")]
    SizeBoundTooSmall { bound: usize, need: usize },
    #[error("pair coordinate is zero; zeros are absorbed before search")]
    ZeroCoordinate,
    #[error("axiom precondition violated: {0}")]
    Precondition(String),
    #[error("saturation overflow: {reason} (candidates {candidates}, frontier {frontier})")]
    Overflow {
        reason: String,
        candidates: usize,
        frontier: usize,
    },
    #[error("certificate replay failed: {0}")]
    Replay(String),
    #[error("unsupported operand for this mode")]
    Unsupported,
}
