//! Exact closed-form implementations of the named Cu-semirings: the extended
//! naturals, the elementary semigroups, `{0, ∞}`, the interval `[0, ∞]`, and
//! the Cu-semirings of solid rings (covering the stably finite
//! strongly-self-absorbing examples and their torsion relatives).

mod arith;
mod compare;
mod laws;
mod modules;
mod solid;

pub use arith::{
    add, approximants, functional, glimm_half, is_compact_elem, is_soft, is_soft_definitional,
    leq, mul, mul_nat, predecessor, softify, stable_ratio, waybelow,
};
pub use compare::{comparison_suite, ComparisonRecord};
pub use laws::{check_semiring_laws, named_property, sample_elem, LawReport};
pub use modules::{semimodule_test, tensor_unit_compare, OverRing};
pub use solid::{classify_solid, classify_solid_fin, initial_terminal_maps, solidity_witness, InitialTerminal, SolidClass};

use crate::rational::{ExtRat, Q};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NamedError {
    #[error("element does not belong to the carrier: {0}")]
    NotInCarrier(String),
    #[error("variant has no Z-multiplication")]
    NoZMultiplication,
    #[error("variant has no normalized functional")]
    NoNormalizedFunctional,
    #[error("operation requires a nonelementary carrier")]
    Elementary,
    #[error("operation requires a simple, stably finite, Z-multiplicative carrier")]
    BadCarrier,
    #[error("element must be compact and nonzero: {0}")]
    NotCompact(String),
    #[error("element is soft; the functional argument applies instead")]
    SoftElement,
    #[error("element must be nonzero")]
    Zero,
    #[error("invalid solid ring specification: {0}")]
    BadSpec(String),
    #[error("unsupported over-ring for this carrier")]
    UnsupportedOver,
    #[error("theorem check failed: {0}")]
    CheckFailed(String),
}

/// An idempotent supernatural number: a set of primes, each implicitly with
/// infinite multiplicity, or the largest one containing every prime.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct Supernatural {
    pub primes: BTreeSet<u64>,
    pub all_primes: bool,
}

impl Supernatural {
    pub fn from_primes(primes: impl IntoIterator<Item = u64>) -> Result<Self, NamedError> {
        let primes: BTreeSet<u64> = primes.into_iter().collect();
        for &p in &primes {
            if !is_prime(p) {
                return Err(NamedError::BadSpec(format!("{p} is not prime")));
            }
        }
        Ok(Supernatural {
            primes,
            all_primes: false,
        })
    }

    pub fn all() -> Self {
        Supernatural {
            primes: BTreeSet::new(),
            all_primes: true,
        }
    }

    pub fn one() -> Self {
        Supernatural {
            primes: BTreeSet::new(),
            all_primes: false,
        }
    }

    pub fn is_one(&self) -> bool {
        !self.all_primes && self.primes.is_empty()
    }

    pub fn contains_prime(&self, p: u64) -> bool {
        self.all_primes || self.primes.contains(&p)
    }

    /// Whether the natural number `n ≥ 1` divides this supernatural number.
    pub fn divides(&self, n: u64) -> bool {
        factorize(n).keys().all(|&p| self.contains_prime(p))
    }

    pub fn product(&self, other: &Supernatural) -> Supernatural {
        if self.all_primes || other.all_primes {
            return Supernatural::all();
        }
        Supernatural {
            primes: self.primes.union(&other.primes).copied().collect(),
            all_primes: false,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// A solid ring with non-torsion unit: the inverted primes `P` (as a
/// supernatural number) and the torsion part `⊕_{p∈K} Z_{p^{e(p)}}` with
/// `K ⊆ P`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SolidRingSpec {
    pub primes: Supernatural,
    /// `p ↦ e(p)` for `p ∈ K`.
    pub torsion: BTreeMap<u64, u32>,
}

impl SolidRingSpec {
    pub fn new(
        primes: Supernatural,
        torsion: BTreeMap<u64, u32>,
    ) -> Result<Self, NamedError> {
        for (&p, &e) in &torsion {
            if !primes.contains_prime(p) {
                return Err(NamedError::BadSpec(format!(
                    "torsion prime {p} is not inverted"
                )));
            }
            if e < 1 {
                return Err(NamedError::BadSpec(format!("torsion exponent at {p} must be ≥ 1")));
            }
        }
        Ok(SolidRingSpec { primes, torsion })
    }

    /// `Z = ℕ ⊔ (0,∞]`: no inverted primes, no torsion.
    pub fn z() -> Self {
        SolidRingSpec {
            primes: Supernatural::one(),
            torsion: BTreeMap::new(),
        }
    }

    /// `R_q = K_q ⊔ (0,∞]` for an idempotent supernatural `q ≠ 1`.
    pub fn rq(q: Supernatural) -> Result<Self, NamedError> {
        if q.is_one() {
            return Err(NamedError::BadSpec("R_q requires q ≠ 1".into()));
        }
        Ok(SolidRingSpec {
            primes: q,
            torsion: BTreeMap::new(),
        })
    }

    /// `Q = Cu(ℚ₊)`: all primes inverted, no torsion.
    pub fn q() -> Self {
        SolidRingSpec {
            primes: Supernatural::all(),
            torsion: BTreeMap::new(),
        }
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }

    pub fn torsion_modulus(&self, p: u64) -> u64 {
        let e = self.torsion[&p];
        p.pow(e)
    }

    /// Whether a denominator is supported on the inverted primes.
    pub fn denominator_ok(&self, r: &Q) -> bool {
        let den = r.denom().clone();
        let den: u64 = match den.try_into() {
            Ok(v) => v,
            Err(_) => return false,
        };
        self.primes.divides(den)
    }
}

/// The compact part of a solid-ring Cu-semiring: a nonnegative rational with
/// denominator supported on the inverted primes, plus a torsion vector.
/// Either the rational part is positive or the whole element is zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactRep {
    pub r: Q,
    /// `p ↦ residue mod p^{e(p)}`; always carries every torsion prime.
    pub tor: BTreeMap<u64, u64>,
}

impl CompactRep {
    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }
}

impl fmt::Debug for CompactRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tor.is_empty() {
            write!(f, "c({})", self.r)
        } else {
            let tor: Vec<String> = self.tor.iter().map(|(p, v)| format!("{p}:{v}")).collect();
            write!(f, "c({};{})", self.r, tor.join(","))
        }
    }
}

/// An element of a solid-ring Cu-semiring: a compact, or a soft element
/// carried by its functional value in `(0, ∞]`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum GenSolidElem {
    Compact(CompactRep),
    Soft(ExtRat),
}

/// Extended natural number.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

/// An element of a named carrier.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Elem {
    Nat(ExtNat),
    Rat(ExtRat),
    Gen(GenSolidElem),
}

impl Elem {
    pub fn nat(n: u64) -> Self {
        Elem::Nat(ExtNat::Fin(n))
    }

    pub fn nat_inf() -> Self {
        Elem::Nat(ExtNat::Inf)
    }

    pub fn rat(v: Q) -> Self {
        Elem::Rat(ExtRat::from_q(v))
    }

    pub fn rat_inf() -> Self {
        Elem::Rat(ExtRat::Inf)
    }

    pub fn compact(r: Q) -> Self {
        Elem::Gen(GenSolidElem::Compact(CompactRep {
            r,
            tor: BTreeMap::new(),
        }))
    }

    pub fn compact_tor(r: Q, tor: BTreeMap<u64, u64>) -> Self {
        Elem::Gen(GenSolidElem::Compact(CompactRep { r, tor }))
    }

    pub fn soft(t: Q) -> Self {
        Elem::Gen(GenSolidElem::Soft(ExtRat::from_q(t)))
    }

    pub fn soft_inf() -> Self {
        Elem::Gen(GenSolidElem::Soft(ExtRat::Inf))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Nat(ExtNat::Fin(n)) => write!(f, "{n}"),
            Elem::Nat(ExtNat::Inf) => write!(f, "inf"),
            Elem::Rat(v) => write!(f, "{v}"),
            Elem::Gen(GenSolidElem::Compact(c)) => write!(f, "{:?}", c),
            Elem::Gen(GenSolidElem::Soft(t)) => write!(f, "s({t})"),
        }
    }
}

/// The named Cu-semirings addressable in closed form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NamedCu {
    /// `ℕ̄ = {0, 1, 2, ..., ∞}`, the tensor unit.
    ExtNat,
    /// `E_k = {0, 1, ..., k, ∞}` with saturating operations.
    Elementary(u64),
    /// `{0, ∞}`.
    PureInf,
    /// `[0, ∞]` over the rationals.
    Interval,
    /// `Cu(R₊)` for a solid ring `R` with non-torsion unit.
    GenSolid(SolidRingSpec),
}

impl NamedCu {
    pub fn z() -> Self {
        NamedCu::GenSolid(SolidRingSpec::z())
    }

    pub fn rq(q: Supernatural) -> Result<Self, NamedError> {
        Ok(NamedCu::GenSolid(SolidRingSpec::rq(q)?))
    }

    pub fn r2inf() -> Self {
        NamedCu::GenSolid(SolidRingSpec::rq(Supernatural::from_primes([2]).unwrap()).unwrap())
    }

    pub fn zero(&self) -> Elem {
        match self {
            NamedCu::ExtNat | NamedCu::Elementary(_) | NamedCu::PureInf => Elem::nat(0),
            NamedCu::Interval => Elem::rat(Q::zero()),
            NamedCu::GenSolid(_) => Elem::compact(Q::zero()),
        }
    }

    /// The multiplicative unit.
    pub fn unit(&self) -> Elem {
        match self {
            NamedCu::ExtNat => Elem::nat(1),
            NamedCu::Elementary(0) | NamedCu::PureInf => Elem::nat_inf(),
            NamedCu::Elementary(_) => Elem::nat(1),
            NamedCu::Interval => Elem::rat(Q::one()),
            NamedCu::GenSolid(spec) => {
                let tor = spec.torsion.keys().map(|&p| (p, 1)).collect();
                Elem::Gen(GenSolidElem::Compact(CompactRep { r: Q::one(), tor }))
            }
        }
    }

    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (NamedCu::ExtNat, Elem::Nat(_)) => true,
            (NamedCu::Elementary(k), Elem::Nat(ExtNat::Fin(j))) => j <= k,
            (NamedCu::Elementary(_), Elem::Nat(ExtNat::Inf)) => true,
            (NamedCu::PureInf, Elem::Nat(ExtNat::Fin(0))) => true,
            (NamedCu::PureInf, Elem::Nat(ExtNat::Inf)) => true,
            (NamedCu::Interval, Elem::Rat(_)) => true,
            (NamedCu::GenSolid(spec), Elem::Gen(g)) => match g {
                GenSolidElem::Compact(c) => {
                    if c.r.is_negative() || !spec.denominator_ok(&c.r) {
                        return false;
                    }
                    if c.r.is_zero() && c.tor.values().any(|&v| v != 0) {
                        return false;
                    }
                    // torsion vector must list exactly the torsion primes
                    c.tor.len() == spec.torsion.len()
                        && c.tor.iter().all(|(p, &v)| {
                            spec.torsion.contains_key(p) && v < spec.torsion_modulus(*p)
                        })
                }
                GenSolidElem::Soft(t) => !t.is_zero(),
            },
            _ => false,
        }
    }

    pub fn check(&self, e: &Elem) -> Result<(), NamedError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(NamedError::NotInCarrier(format!("{e} in {self:?}")))
        }
    }

    /// Normalizes a torsion vector to carry exactly this carrier's torsion
    /// primes (used when constructing compacts programmatically).
    pub fn normalize_compact(&self, r: Q, tor: BTreeMap<u64, u64>) -> Result<Elem, NamedError> {
        if let NamedCu::GenSolid(spec) = self {
            if r.is_negative() || !spec.denominator_ok(&r) {
                return Err(NamedError::NotInCarrier(format!("compact {r}")));
            }
            let tor: BTreeMap<u64, u64> = spec
                .torsion
                .keys()
                .map(|&p| {
                    let m = spec.torsion_modulus(p);
                    (p, tor.get(&p).copied().unwrap_or(0) % m)
                })
                .collect();
            if r.is_zero() && tor.values().any(|&v| v != 0) {
                return Err(NamedError::NotInCarrier(
                    "zero rational part with nonzero torsion".into(),
                ));
            }
            Ok(Elem::Gen(GenSolidElem::Compact(CompactRep { r, tor })))
        } else {
            Err(NamedError::NotInCarrier("not a solid-ring carrier".into()))
        }
    }

    /// Whether the carrier has a Z-multiplication (is almost unperforated and
    /// almost divisible).
    pub fn has_z_multiplication(&self) -> bool {
        matches!(
            self,
            NamedCu::PureInf | NamedCu::Interval | NamedCu::GenSolid(_)
        ) || matches!(self, NamedCu::Elementary(0))
    }
}
