//! Exact extended-rational scalars used throughout the library.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A value in `[0, ∞]`, exact: a nonnegative rational or infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Fin(Q),
    Inf,
}

impl ExtRat {
    pub fn zero() -> Self {
        ExtRat::Fin(Q::zero())
    }

    pub fn one() -> Self {
        ExtRat::Fin(Q::one())
    }

    pub fn from_q(v: Q) -> Self {
        assert!(!v.is_negative(), "ExtRat must be nonnegative");
        ExtRat::Fin(v)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRat::Fin(v) if v.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Fin(_))
    }

    pub fn as_q(&self) -> Option<&Q> {
        match self {
            ExtRat::Fin(v) => Some(v),
            ExtRat::Inf => None,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => a.cmp(b),
            (ExtRat::Fin(_), ExtRat::Inf) => Ordering::Less,
            (ExtRat::Inf, ExtRat::Fin(_)) => Ordering::Greater,
            (ExtRat::Inf, ExtRat::Inf) => Ordering::Equal,
        }
    }
}

impl Add for ExtRat {
    type Output = ExtRat;
    fn add(self, rhs: ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => ExtRat::Fin(a + b),
            _ => ExtRat::Inf,
        }
    }
}

impl<'a> Add for &'a ExtRat {
    type Output = ExtRat;
    fn add(self, rhs: &'a ExtRat) -> ExtRat {
        self.clone() + rhs.clone()
    }
}

impl Mul for ExtRat {
    type Output = ExtRat;
    // Convention of the extended half-line: 0·∞ = 0.
    fn mul(self, rhs: ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => ExtRat::Fin(a * b),
            (ExtRat::Fin(a), ExtRat::Inf) | (ExtRat::Inf, ExtRat::Fin(a)) => {
                if a.is_zero() {
                    ExtRat::zero()
                } else {
                    ExtRat::Inf
                }
            }
            (ExtRat::Inf, ExtRat::Inf) => ExtRat::Inf,
        }
    }
}

impl<'a> Mul for &'a ExtRat {
    type Output = ExtRat;
    fn mul(self, rhs: &'a ExtRat) -> ExtRat {
        self.clone() * rhs.clone()
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Fin(v) => write!(f, "{}", v),
            ExtRat::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A value in `[-∞, ∞]`, used for the state extension bounds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtQ {
    NegInf,
    Fin(Q),
    PosInf,
}

impl ExtQ {
    pub fn sup_update(&mut self, v: Q) {
        match self {
            ExtQ::NegInf => *self = ExtQ::Fin(v),
            ExtQ::Fin(cur) => {
                if v > *cur {
                    *self = ExtQ::Fin(v);
                }
            }
            ExtQ::PosInf => {}
        }
    }

    pub fn inf_update(&mut self, v: Q) {
        match self {
            ExtQ::PosInf => *self = ExtQ::Fin(v),
            ExtQ::Fin(cur) => {
                if v < *cur {
                    *self = ExtQ::Fin(v);
                }
            }
            ExtQ::NegInf => {}
        }
    }
}

impl PartialOrd for ExtQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use ExtQ::*;
        Some(match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Fin(a), Fin(b)) => a.cmp(b),
        })
    }
}

impl fmt::Display for ExtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtQ::NegInf => write!(f, "-inf"),
            ExtQ::Fin(v) => write!(f, "{}", v),
            ExtQ::PosInf => write!(f, "inf"),
        }
    }
}
