//! Exact element arithmetic, order, and way-below tables for the named
//! carriers, plus the element-level operations built on them.

use super::{CompactRep, Elem, ExtNat, GenSolidElem, NamedCu, NamedError, SolidRingSpec};
use crate::rational::{ExtRat, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

fn sat_add(k: u64, a: ExtNat, b: ExtNat) -> ExtNat {
    match (a, b) {
        (ExtNat::Fin(x), ExtNat::Fin(y)) if x + y <= k => ExtNat::Fin(x + y),
        _ => ExtNat::Inf,
    }
}

fn sat_mul(k: u64, a: ExtNat, b: ExtNat) -> ExtNat {
    match (a, b) {
        (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::Fin(0),
        (ExtNat::Fin(x), ExtNat::Fin(y)) if x * y <= k => ExtNat::Fin(x * y),
        _ => ExtNat::Inf,
    }
}

fn nat_leq(a: ExtNat, b: ExtNat) -> bool {
    match (a, b) {
        (ExtNat::Fin(x), ExtNat::Fin(y)) => x <= y,
        (_, ExtNat::Inf) => true,
        (ExtNat::Inf, ExtNat::Fin(_)) => false,
    }
}

fn tor_add(spec: &SolidRingSpec, a: &BTreeMap<u64, u64>, b: &BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    spec.torsion
        .keys()
        .map(|&p| {
            let m = spec.torsion_modulus(p);
            (p, (a.get(&p).copied().unwrap_or(0) + b.get(&p).copied().unwrap_or(0)) % m)
        })
        .collect()
}

fn tor_mul(spec: &SolidRingSpec, a: &BTreeMap<u64, u64>, b: &BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    spec.torsion
        .keys()
        .map(|&p| {
            let m = spec.torsion_modulus(p);
            (p, (a.get(&p).copied().unwrap_or(0) * b.get(&p).copied().unwrap_or(0)) % m)
        })
        .collect()
}

pub(super) fn lambda0(g: &GenSolidElem) -> ExtRat {
    match g {
        GenSolidElem::Compact(c) => ExtRat::Fin(c.r.clone()),
        GenSolidElem::Soft(t) => t.clone(),
    }
}

fn gen_add(spec: &SolidRingSpec, a: &GenSolidElem, b: &GenSolidElem) -> GenSolidElem {
    match (a, b) {
        (GenSolidElem::Compact(x), GenSolidElem::Compact(y)) => {
            GenSolidElem::Compact(CompactRep {
                r: &x.r + &y.r,
                tor: tor_add(spec, &x.tor, &y.tor),
            })
        }
        // the soft part is additively absorbing: n + a = n' + a
        (GenSolidElem::Compact(x), GenSolidElem::Soft(t))
        | (GenSolidElem::Soft(t), GenSolidElem::Compact(x)) => {
            GenSolidElem::Soft(ExtRat::Fin(x.r.clone()) + t.clone())
        }
        (GenSolidElem::Soft(t), GenSolidElem::Soft(u)) => GenSolidElem::Soft(t + u),
    }
}

fn gen_mul(spec: &SolidRingSpec, a: &GenSolidElem, b: &GenSolidElem) -> GenSolidElem {
    match (a, b) {
        (GenSolidElem::Compact(x), GenSolidElem::Compact(y)) => {
            GenSolidElem::Compact(CompactRep {
                r: &x.r * &y.r,
                tor: if (&x.r * &y.r).is_zero() {
                    spec.torsion.keys().map(|&p| (p, 0)).collect()
                } else {
                    tor_mul(spec, &x.tor, &y.tor)
                },
            })
        }
        (GenSolidElem::Compact(x), GenSolidElem::Soft(t))
        | (GenSolidElem::Soft(t), GenSolidElem::Compact(x)) => {
            if x.is_zero() {
                GenSolidElem::Compact(CompactRep {
                    r: Q::zero(),
                    tor: spec.torsion.keys().map(|&p| (p, 0)).collect(),
                })
            } else {
                GenSolidElem::Soft(ExtRat::Fin(x.r.clone()) * t.clone())
            }
        }
        (GenSolidElem::Soft(t), GenSolidElem::Soft(u)) => GenSolidElem::Soft(t * u),
    }
}

fn gen_leq(a: &GenSolidElem, b: &GenSolidElem) -> bool {
    match (a, b) {
        // algebraic order of R₊: a difference is positive or zero
        (GenSolidElem::Compact(x), GenSolidElem::Compact(y)) => x == y || x.r < y.r,
        (GenSolidElem::Compact(x), GenSolidElem::Soft(t)) => &ExtRat::Fin(x.r.clone()) < t,
        (GenSolidElem::Soft(t), GenSolidElem::Compact(y)) => t <= &ExtRat::Fin(y.r.clone()),
        (GenSolidElem::Soft(t), GenSolidElem::Soft(u)) => t <= u,
    }
}

fn gen_waybelow(a: &GenSolidElem, b: &GenSolidElem) -> bool {
    match (a, b) {
        (GenSolidElem::Compact(_), GenSolidElem::Compact(_)) => gen_leq(a, b),
        (GenSolidElem::Compact(x), GenSolidElem::Soft(t)) => &ExtRat::Fin(x.r.clone()) < t,
        (GenSolidElem::Soft(t), GenSolidElem::Compact(y)) => t <= &ExtRat::Fin(y.r.clone()),
        (GenSolidElem::Soft(t), GenSolidElem::Soft(u)) => t < u,
    }
}

pub fn add(s: &NamedCu, a: &Elem, b: &Elem) -> Result<Elem, NamedError> {
    s.check(a)?;
    s.check(b)?;
    Ok(match (s, a, b) {
        (NamedCu::ExtNat, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(match (x, y) {
            (ExtNat::Fin(p), ExtNat::Fin(q)) => ExtNat::Fin(p + q),
            _ => ExtNat::Inf,
        }),
        (NamedCu::Elementary(k), Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(sat_add(*k, *x, *y)),
        (NamedCu::PureInf, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(sat_add(0, *x, *y)),
        (NamedCu::Interval, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
        (NamedCu::GenSolid(spec), Elem::Gen(x), Elem::Gen(y)) => Elem::Gen(gen_add(spec, x, y)),
        _ => unreachable!("membership was checked"),
    })
}

pub fn mul(s: &NamedCu, a: &Elem, b: &Elem) -> Result<Elem, NamedError> {
    s.check(a)?;
    s.check(b)?;
    Ok(match (s, a, b) {
        (NamedCu::ExtNat, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(match (x, y) {
            (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::Fin(0),
            (ExtNat::Fin(p), ExtNat::Fin(q)) => ExtNat::Fin(p * q),
            _ => ExtNat::Inf,
        }),
        (NamedCu::Elementary(k), Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(sat_mul(*k, *x, *y)),
        (NamedCu::PureInf, Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(sat_mul(0, *x, *y)),
        (NamedCu::Interval, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
        (NamedCu::GenSolid(spec), Elem::Gen(x), Elem::Gen(y)) => Elem::Gen(gen_mul(spec, x, y)),
        _ => unreachable!("membership was checked"),
    })
}

pub fn leq(s: &NamedCu, a: &Elem, b: &Elem) -> Result<bool, NamedError> {
    s.check(a)?;
    s.check(b)?;
    Ok(match (a, b) {
        (Elem::Nat(x), Elem::Nat(y)) => nat_leq(*x, *y),
        (Elem::Rat(x), Elem::Rat(y)) => x <= y,
        (Elem::Gen(x), Elem::Gen(y)) => gen_leq(x, y),
        _ => unreachable!("membership was checked"),
    })
}

pub fn waybelow(s: &NamedCu, a: &Elem, b: &Elem) -> Result<bool, NamedError> {
    s.check(a)?;
    s.check(b)?;
    Ok(match (s, a, b) {
        // in ℕ̄ only the finite elements are compact
        (NamedCu::ExtNat, Elem::Nat(x), Elem::Nat(y)) => {
            matches!(x, ExtNat::Fin(_)) && nat_leq(*x, *y)
        }
        // finite carriers: everything compact
        (NamedCu::Elementary(_) | NamedCu::PureInf, Elem::Nat(x), Elem::Nat(y)) => nat_leq(*x, *y),
        (NamedCu::Interval, Elem::Rat(x), Elem::Rat(y)) => x.is_zero() || x < y,
        (NamedCu::GenSolid(_), Elem::Gen(x), Elem::Gen(y)) => gen_waybelow(x, y),
        _ => unreachable!("membership was checked"),
    })
}

pub fn is_compact_elem(s: &NamedCu, a: &Elem) -> Result<bool, NamedError> {
    waybelow(s, a, a)
}

/// Tag-based softness: every way-below predecessor is stably dominated.
pub fn is_soft(s: &NamedCu, a: &Elem) -> Result<bool, NamedError> {
    s.check(a)?;
    Ok(match (s, a) {
        (NamedCu::ExtNat, Elem::Nat(x)) => matches!(x, ExtNat::Inf | ExtNat::Fin(0)),
        // saturation makes every element soft on the elementary carriers
        (NamedCu::Elementary(_) | NamedCu::PureInf, _) => true,
        (NamedCu::Interval, _) => true,
        (NamedCu::GenSolid(_), Elem::Gen(g)) => match g {
            GenSolidElem::Compact(c) => c.is_zero(),
            GenSolidElem::Soft(_) => true,
        },
        _ => unreachable!("membership was checked"),
    })
}

/// Definitional softness check over the canonical approximant sequence:
/// every approximant is stably dominated with multiplier at most `bound`.
pub fn is_soft_definitional(s: &NamedCu, a: &Elem, bound: u64) -> Result<bool, NamedError> {
    let approx = approximants(s, a, 8)?;
    for ap in &approx {
        let mut ok = false;
        for n in 1..=bound {
            let lhs = mul_nat(s, n + 1, ap)?;
            let rhs = mul_nat(s, n, a)?;
            if leq(s, &lhs, &rhs)? {
                ok = true;
                break;
            }
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn mul_nat(s: &NamedCu, k: u64, a: &Elem) -> Result<Elem, NamedError> {
    let mut acc = s.zero();
    for _ in 0..k {
        acc = add(s, &acc, a)?;
    }
    Ok(acc)
}

/// The unique normalized functional, where it exists.
pub fn functional(s: &NamedCu, a: &Elem) -> Result<ExtRat, NamedError> {
    s.check(a)?;
    match (s, a) {
        (NamedCu::ExtNat, Elem::Nat(ExtNat::Fin(n))) => {
            Ok(ExtRat::Fin(Q::from_integer(BigInt::from(*n))))
        }
        (NamedCu::ExtNat, Elem::Nat(ExtNat::Inf)) => Ok(ExtRat::Inf),
        (NamedCu::Elementary(_) | NamedCu::PureInf, _) => Err(NamedError::NoNormalizedFunctional),
        (NamedCu::Interval, Elem::Rat(v)) => Ok(v.clone()),
        (NamedCu::GenSolid(_), Elem::Gen(g)) => Ok(lambda0(g)),
        _ => unreachable!("membership was checked"),
    }
}

/// `a ↦ 1'a`, the product with the soft unit; defined on the carriers with
/// Z-multiplication. Idempotent, soft-valued, functional-preserving.
pub fn softify(s: &NamedCu, a: &Elem) -> Result<Elem, NamedError> {
    s.check(a)?;
    if !s.has_z_multiplication() {
        return Err(NamedError::NoZMultiplication);
    }
    Ok(match (s, a) {
        (NamedCu::PureInf | NamedCu::Elementary(0), Elem::Nat(x)) => Elem::Nat(*x),
        (NamedCu::Interval, Elem::Rat(v)) => Elem::Rat(v.clone()),
        (NamedCu::GenSolid(_), Elem::Gen(g)) => match g {
            GenSolidElem::Compact(c) if c.is_zero() => Elem::compact(Q::zero()),
            GenSolidElem::Compact(c) => Elem::Gen(GenSolidElem::Soft(ExtRat::Fin(c.r.clone()))),
            GenSolidElem::Soft(t) => Elem::Gen(GenSolidElem::Soft(t.clone())),
        },
        _ => unreachable!("z-multiplication was checked"),
    })
}

/// The predecessor `γ(p) = 1'p` of a nonzero compact, on simple, stably
/// finite carriers with Z-multiplication.
pub fn predecessor(s: &NamedCu, p: &Elem) -> Result<Elem, NamedError> {
    s.check(p)?;
    match s {
        NamedCu::Elementary(_) | NamedCu::PureInf => Err(NamedError::Elementary),
        NamedCu::ExtNat => Err(NamedError::NoZMultiplication),
        NamedCu::Interval => Err(NamedError::NotCompact(format!("{p}"))),
        NamedCu::GenSolid(_) => match p {
            Elem::Gen(GenSolidElem::Compact(c)) if !c.is_zero() => {
                softify(s, p)
            }
            _ => Err(NamedError::NotCompact(format!("{p}"))),
        },
    }
}

/// Glimm halving: a nonzero `b` with `2b ≤ a`, on simple nonelementary
/// carriers. Canonically `b = Soft(λ(a)/2)`, or `Soft(1)` at `λ(a) = ∞`.
pub fn glimm_half(s: &NamedCu, a: &Elem) -> Result<Elem, NamedError> {
    s.check(a)?;
    if leq(s, a, &s.zero())? {
        return Err(NamedError::Zero);
    }
    match s {
        NamedCu::ExtNat | NamedCu::Elementary(_) | NamedCu::PureInf => Err(NamedError::Elementary),
        NamedCu::Interval => match functional(s, a)? {
            ExtRat::Fin(v) => Ok(Elem::rat(v / Q::from_integer(2.into()))),
            ExtRat::Inf => Ok(Elem::rat(Q::one())),
        },
        NamedCu::GenSolid(_) => match functional(s, a)? {
            ExtRat::Fin(v) => Ok(Elem::soft(v / Q::from_integer(2.into()))),
            ExtRat::Inf => Ok(Elem::soft(Q::one())),
        },
    }
}

/// A rapidly increasing sequence of length `count` with supremum `a`:
/// constant for compacts, `t·k/(k+1)` for finite soft values, the integers
/// for the top.
pub fn approximants(s: &NamedCu, a: &Elem, count: u64) -> Result<Vec<Elem>, NamedError> {
    s.check(a)?;
    let soft_chain = |t: &ExtRat, mk: &dyn Fn(Q) -> Elem| -> Vec<Elem> {
        match t {
            ExtRat::Fin(v) => (1..=count)
                .map(|k| {
                    mk(v * Q::new(BigInt::from(k), BigInt::from(k + 1)))
                })
                .collect(),
            ExtRat::Inf => (1..=count)
                .map(|k| mk(Q::from_integer(BigInt::from(k))))
                .collect(),
        }
    };
    Ok(match (s, a) {
        (NamedCu::ExtNat, Elem::Nat(ExtNat::Inf)) => {
            (1..=count).map(Elem::nat).collect()
        }
        (NamedCu::ExtNat | NamedCu::Elementary(_) | NamedCu::PureInf, _) => {
            (0..count).map(|_| a.clone()).collect()
        }
        (NamedCu::Interval, Elem::Rat(t)) => {
            if t.is_zero() {
                (0..count).map(|_| a.clone()).collect()
            } else {
                soft_chain(t, &Elem::rat)
            }
        }
        (NamedCu::GenSolid(_), Elem::Gen(g)) => match g {
            GenSolidElem::Compact(_) => (0..count).map(|_| a.clone()).collect(),
            GenSolidElem::Soft(t) => soft_chain(t, &Elem::soft),
        },
        _ => unreachable!("membership was checked"),
    })
}

/// `r̃ = inf { k/n : nx ≤ ka }`, in closed form through the functional with
/// saturation conventions on the elementary carriers.
pub fn stable_ratio(s: &NamedCu, a: &Elem, x: &Elem) -> Result<ExtRat, NamedError> {
    s.check(a)?;
    s.check(x)?;
    if leq(s, a, &s.zero())? {
        return Err(NamedError::Zero);
    }
    if leq(s, x, &s.zero())? {
        return Ok(ExtRat::zero());
    }
    match s {
        // saturation: some multiple of a is the top, which dominates all
        NamedCu::Elementary(_) | NamedCu::PureInf => Ok(ExtRat::zero()),
        NamedCu::ExtNat | NamedCu::Interval | NamedCu::GenSolid(_) => {
            let la = functional(s, a)?;
            let lx = functional(s, x)?;
            Ok(match (lx, la) {
                (ExtRat::Inf, ExtRat::Inf) => ExtRat::zero(),
                (ExtRat::Inf, ExtRat::Fin(_)) => ExtRat::Inf,
                (ExtRat::Fin(_), ExtRat::Inf) => ExtRat::zero(),
                (ExtRat::Fin(vx), ExtRat::Fin(va)) => ExtRat::Fin(vx / va),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_int};

    fn z() -> NamedCu {
        NamedCu::z()
    }

    #[test]
    fn z_mixed_addition() {
        // Compact(2) + Soft(3) = Soft(5)
        let s = z();
        let r = add(&s, &Elem::compact(q_int(2)), &Elem::soft(q_int(3))).unwrap();
        assert_eq!(r, Elem::soft(q_int(5)));
    }

    #[test]
    fn e2_saturating_addition() {
        let s = NamedCu::Elementary(2);
        let r = add(&s, &Elem::nat(1), &Elem::nat(2)).unwrap();
        assert_eq!(r, Elem::nat_inf());
    }

    #[test]
    fn torsion_compact_addition() {
        // GenSolid(P={2}, K={2}, e=1): (1/2, 1) + (1/2, 1) = (1, 0)
        let spec = SolidRingSpec::new(
            super::super::Supernatural::from_primes([2]).unwrap(),
            [(2u64, 1u32)].into_iter().collect(),
        )
        .unwrap();
        let s = NamedCu::GenSolid(spec);
        let a = s.normalize_compact(q(1, 2), [(2u64, 1u64)].into_iter().collect()).unwrap();
        let r = add(&s, &a, &a).unwrap();
        let expect = s.normalize_compact(q_int(1), BTreeMap::new()).unwrap();
        assert_eq!(r, expect);
        // the unit carries torsion coordinate one, so 2a is not the unit
        assert_ne!(r, s.unit());
    }

    #[test]
    fn z_mixed_order_rules() {
        let s = z();
        // n ≤ a iff n' < a: Compact(2) ≤ Soft(2) is false
        assert!(!leq(&s, &Elem::compact(q_int(2)), &Elem::soft(q_int(2))).unwrap());
        // a ≤ n iff a ≤ n': Soft(2) ≤ Compact(2) is true
        assert!(leq(&s, &Elem::soft(q_int(2)), &Elem::compact(q_int(2))).unwrap());
    }

    #[test]
    fn carrier_membership_enforced() {
        let r2 = NamedCu::r2inf();
        // Compact(1/3) is not in R_{2^∞}
        assert!(matches!(
            leq(&r2, &Elem::compact(q(1, 3)), &Elem::compact(q_int(1))),
            Err(NamedError::NotInCarrier(_))
        ));
        assert!(leq(&r2, &Elem::compact(q(1, 2)), &Elem::compact(q_int(1))).unwrap());
    }

    #[test]
    fn softify_examples() {
        let s = z();
        assert_eq!(
            softify(&s, &Elem::compact(q_int(3))).unwrap(),
            Elem::soft(q_int(3))
        );
        // idempotent
        let once = softify(&s, &Elem::compact(q_int(3))).unwrap();
        assert_eq!(softify(&s, &once).unwrap(), once);
        // Interval: every element soft already
        let i = NamedCu::Interval;
        assert_eq!(softify(&i, &Elem::rat(q(1, 2))).unwrap(), Elem::rat(q(1, 2)));
        // torsion killed: λ determines soft products
        let spec = SolidRingSpec::new(
            super::super::Supernatural::from_primes([2]).unwrap(),
            [(2u64, 1u32)].into_iter().collect(),
        )
        .unwrap();
        let t = NamedCu::GenSolid(spec);
        let a = t.normalize_compact(q(1, 2), [(2u64, 1u64)].into_iter().collect()).unwrap();
        assert_eq!(softify(&t, &a).unwrap(), Elem::soft(q(1, 2)));
        // no Z-multiplication on ℕ̄
        assert!(matches!(
            softify(&NamedCu::ExtNat, &Elem::nat(1)),
            Err(NamedError::NoZMultiplication)
        ));
    }

    #[test]
    fn predecessor_examples() {
        let s = z();
        assert_eq!(
            predecessor(&s, &Elem::compact(q_int(3))).unwrap(),
            Elem::soft(q_int(3))
        );
        let r2 = NamedCu::r2inf();
        assert_eq!(
            predecessor(&r2, &Elem::compact(q(1, 2))).unwrap(),
            Elem::soft(q(1, 2))
        );
        // p ≤ pred(p) + z for nonzero z
        let pred = predecessor(&s, &Elem::compact(q_int(3))).unwrap();
        let bumped = add(&s, &pred, &Elem::soft(q(1, 1000))).unwrap();
        assert!(leq(&s, &Elem::compact(q_int(3)), &bumped).unwrap());
        assert!(matches!(
            predecessor(&NamedCu::Elementary(2), &Elem::nat(1)),
            Err(NamedError::Elementary)
        ));
        assert!(matches!(
            predecessor(&s, &Elem::soft(q_int(1))),
            Err(NamedError::NotCompact(_))
        ));
    }

    #[test]
    fn glimm_half_examples() {
        let s = z();
        let b = glimm_half(&s, &Elem::compact(q_int(1))).unwrap();
        assert_eq!(b, Elem::soft(q(1, 2)));
        let twice = mul_nat(&s, 2, &b).unwrap();
        assert!(leq(&s, &twice, &Elem::compact(q_int(1))).unwrap());

        let i = NamedCu::Interval;
        assert_eq!(glimm_half(&i, &Elem::rat(q_int(1))).unwrap(), Elem::rat(q(1, 2)));

        let r3 = NamedCu::rq(super::super::Supernatural::from_primes([3]).unwrap()).unwrap();
        assert_eq!(
            glimm_half(&r3, &Elem::compact(q(1, 3))).unwrap(),
            Elem::soft(q(1, 6))
        );
        assert!(matches!(
            glimm_half(&NamedCu::Elementary(1), &Elem::nat(1)),
            Err(NamedError::Elementary)
        ));
    }

    #[test]
    fn functional_examples() {
        let s = z();
        assert_eq!(functional(&s, &Elem::compact(q_int(5))).unwrap(), ExtRat::Fin(q_int(5)));
        assert_eq!(functional(&s, &Elem::soft(q_int(5))).unwrap(), ExtRat::Fin(q_int(5)));
        // multiplicativity
        let prod = mul(&s, &Elem::compact(q_int(2)), &Elem::soft(q_int(3))).unwrap();
        assert_eq!(functional(&s, &prod).unwrap(), ExtRat::Fin(q_int(6)));
        assert_eq!(functional(&s, &s.zero()).unwrap(), ExtRat::zero());
        assert!(matches!(
            functional(&NamedCu::Elementary(1), &Elem::nat(1)),
            Err(NamedError::NoNormalizedFunctional)
        ));
        assert!(matches!(
            functional(&NamedCu::PureInf, &Elem::nat_inf()),
            Err(NamedError::NoNormalizedFunctional)
        ));
        assert_eq!(functional(&NamedCu::ExtNat, &Elem::nat_inf()).unwrap(), ExtRat::Inf);
    }

    #[test]
    fn approximant_examples() {
        let s = z();
        let chain = approximants(&s, &Elem::soft(q_int(1)), 3).unwrap();
        assert_eq!(
            chain,
            vec![Elem::soft(q(1, 2)), Elem::soft(q(2, 3)), Elem::soft(q(3, 4))]
        );
        // each way-below the next
        for w in chain.windows(2) {
            assert!(waybelow(&s, &w[0], &w[1]).unwrap());
        }
        let c = approximants(&s, &Elem::compact(q_int(2)), 3).unwrap();
        assert!(c.iter().all(|e| e == &Elem::compact(q_int(2))));
        let i = approximants(&NamedCu::Interval, &Elem::rat_inf(), 3).unwrap();
        assert_eq!(i, vec![Elem::rat(q_int(1)), Elem::rat(q_int(2)), Elem::rat(q_int(3))]);
    }

    #[test]
    fn soft_tags_match_definitional() {
        let s = z();
        for (e, want) in [
            (Elem::soft(q_int(2)), true),
            (Elem::compact(q_int(2)), false),
            (s.zero(), true),
        ] {
            assert_eq!(is_soft(&s, &e).unwrap(), want, "{e}");
            assert_eq!(is_soft_definitional(&s, &e, 64).unwrap(), want, "{e}");
        }
        // 0 is both compact and soft
        assert!(is_compact_elem(&s, &s.zero()).unwrap());
        // every element of the interval is soft
        assert!(is_soft(&NamedCu::Interval, &Elem::rat(q(3, 7))).unwrap());
        // saturation makes all of E_1 soft
        for e in [Elem::nat(0), Elem::nat(1), Elem::nat_inf()] {
            assert!(is_soft(&NamedCu::Elementary(1), &e).unwrap());
            assert!(is_soft_definitional(&NamedCu::Elementary(1), &e, 64).unwrap());
        }
    }

    #[test]
    fn stable_ratio_examples() {
        let s = z();
        assert_eq!(
            stable_ratio(&s, &Elem::compact(q_int(1)), &Elem::soft(q(1, 3))).unwrap(),
            ExtRat::Fin(q(1, 3))
        );
        assert_eq!(
            stable_ratio(&s, &Elem::compact(q_int(1)), &s.zero()).unwrap(),
            ExtRat::zero()
        );
        assert_eq!(
            stable_ratio(&NamedCu::Interval, &Elem::rat(q_int(2)), &Elem::rat(q_int(1))).unwrap(),
            ExtRat::Fin(q(1, 2))
        );
        assert!(stable_ratio(&s, &s.zero(), &Elem::soft(q_int(1))).is_err());
    }

    #[test]
    fn waybelow_tables() {
        let s = z();
        // compacts are way-below closed
        assert!(waybelow(&s, &Elem::compact(q_int(2)), &Elem::compact(q_int(2))).unwrap());
        // Soft(t) ≪ Soft(s) iff t < s
        assert!(waybelow(&s, &Elem::soft(q_int(1)), &Elem::soft(q_int(2))).unwrap());
        assert!(!waybelow(&s, &Elem::soft(q_int(2)), &Elem::soft(q_int(2))).unwrap());
        // Soft(t) ≪ Compact(n) iff t ≤ n
        assert!(waybelow(&s, &Elem::soft(q_int(2)), &Elem::compact(q_int(2))).unwrap());
        // Compact(n) ≪ Soft(t) iff n < t
        assert!(!waybelow(&s, &Elem::compact(q_int(2)), &Elem::soft(q_int(2))).unwrap());
        assert!(waybelow(&s, &Elem::compact(q_int(2)), &Elem::soft(q(5, 2))).unwrap());
        // everything finite is way-below the soft top
        assert!(waybelow(&s, &Elem::compact(q_int(7)), &Elem::soft_inf()).unwrap());
        assert!(waybelow(&s, &Elem::soft(q_int(7)), &Elem::soft_inf()).unwrap());
        assert!(!waybelow(&s, &Elem::soft_inf(), &Elem::soft_inf()).unwrap());
        // ℕ̄: the top is not compact
        assert!(!waybelow(&NamedCu::ExtNat, &Elem::nat_inf(), &Elem::nat_inf()).unwrap());
        assert!(waybelow(&NamedCu::ExtNat, &Elem::nat(3), &Elem::nat_inf()).unwrap());
        // E_k: everything compact
        assert!(waybelow(&NamedCu::Elementary(1), &Elem::nat_inf(), &Elem::nat_inf()).unwrap());
    }
}
