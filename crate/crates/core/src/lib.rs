//! Exact symbolic computation for positively ordered monoids and abstract
//! Cuntz semigroups: axiom and property decision procedures on finite
//! carriers, closed-form named Cu-semirings, W- and Cu-completions, tensor
//! products by congruence rewriting, ideal lattices and quotients, and the
//! classification of solid Cu-semirings.

pub mod cufinite;
pub mod completion;
pub mod grothendieck;
pub mod named;
pub mod pom;
pub mod props;
pub mod rational;
pub mod tensor;
pub mod verdict;

pub use pom::{algebraic_order, validate, validate_pre, FinPom, FinPrePom, PomData, PomError};
pub use verdict::{Status, Verdict, Witness};
