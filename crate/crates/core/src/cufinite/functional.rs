//! Functional existence on finite carriers and state extension bounds.

use super::fourier::{feasible, LinSystem};
use super::ideals::idl;
use super::CufiniteError;
use crate::pom::FinPom;
use crate::rational::{ExtQ, Q};
use num_traits::{One, Zero};

/// Result of the normalized-functional search. When a functional exists the
/// `values` vector holds its finite rational part on `Idl(at)`; entries are
/// `None` outside the ideal, where the functional takes the value `∞`.
#[derive(Clone, Debug)]
pub struct FunctionalSearchResult {
    pub exists: bool,
    pub values: Option<Vec<Option<Q>>>,
    pub normalization: usize,
}

/// Decides whether a functional `λ` with `λ(at) = 1` exists: the
/// multiplicative criterion (`ma ≤ na` iff `m ≤ n`, plus a stably
/// non-dominated companion) evaluated exhaustively, cross-checked by exact
/// rational feasibility of additivity + monotonicity + normalization on
/// `Idl(at)`. On any finite carrier with `at ≠ 0` the result is negative:
/// some `ma = na` with `m < n` by pigeonhole.
pub fn functional_exists(
    pom: &FinPom,
    at: usize,
) -> Result<FunctionalSearchResult, CufiniteError> {
    if at >= pom.n() {
        return Err(CufiniteError::ElementOutOfRange(at));
    }
    if at == pom.zero() {
        return Err(CufiniteError::NormalizationAtZero);
    }
    let bound = pom.default_bound();

    // criterion item: ma ≤ na iff m ≤ n
    let mut multiples = Vec::with_capacity(bound as usize + 1);
    let mut acc = pom.zero();
    for _ in 0..=bound {
        multiples.push(acc);
        acc = pom.add(acc, at);
    }
    let scaling_ok = (0..=bound).all(|m| {
        (0..=bound).all(|n| {
            pom.leq(multiples[m as usize], multiples[n as usize]) == (m <= n)
        })
    });
    let criterion = scaling_ok && {
        // some x ≪ l·at that no multiple of at stably dominates after scaling
        pom.elements().any(|x| {
            (1..=bound).any(|l| pom.leq(x, multiples[l as usize]))
                && (1..=bound).any(|big_l| {
                    (1..=bound).all(|k| {
                        !pom.leq(pom.mul_nat(k * big_l, x), pom.mul_nat(k, at))
                    })
                })
        })
    };

    // linear feasibility on the ideal generated by `at`
    let members = idl(pom, at);
    let vars: Vec<usize> = pom.elements().filter(|&e| members[e]).collect();
    let var_of = |e: usize| vars.iter().position(|&v| v == e).unwrap();
    let mut sys = LinSystem::new(vars.len());
    let unit = |i: usize, len: usize, sign: i64| {
        let mut c = vec![Q::zero(); len];
        c[i] = if sign >= 0 { Q::one() } else { -Q::one() };
        c
    };
    sys.eq(unit(var_of(pom.zero()), vars.len(), 1), Q::zero());
    sys.eq(unit(var_of(at), vars.len(), 1), Q::one());
    for &a in &vars {
        sys.le(unit(var_of(a), vars.len(), -1), Q::zero());
        for &b in &vars {
            let s = pom.add(a, b);
            debug_assert!(members[s]);
            let mut c = vec![Q::zero(); vars.len()];
            c[var_of(a)] = &c[var_of(a)] + &Q::one();
            c[var_of(b)] = &c[var_of(b)] + &Q::one();
            c[var_of(s)] = &c[var_of(s)] - &Q::one();
            sys.eq(c, Q::zero());
            if pom.leq(a, b) {
                let mut c = vec![Q::zero(); vars.len()];
                c[var_of(a)] = Q::one();
                c[var_of(b)] = -Q::one();
                sys.le(c, Q::zero());
            }
        }
    }
    let solution = feasible(&sys);

    if criterion != solution.is_some() {
        return Err(CufiniteError::CrossCheckMismatch);
    }
    let values = solution.map(|sol| {
        pom.elements()
            .map(|e| {
                if members[e] {
                    Some(sol[var_of(e)].clone())
                } else {
                    None
                }
            })
            .collect()
    });
    Ok(FunctionalSearchResult {
        exists: criterion,
        values,
        normalization: at,
    })
}

/// The four extension bounds for a state on a submonoid, computed by
/// exhaustive search with all multiplicities capped by `bound`.
#[derive(Clone, Debug)]
pub struct StateBounds {
    pub p: ExtQ,
    pub p_prime: ExtQ,
    pub r: ExtQ,
    pub r_prime: ExtQ,
    /// `0 ≤ p = p' ≤ r` and `r' ≤ r` within the searched range.
    pub stmt1_ok: bool,
    /// Present when `x ≤ l·y` for some submonoid element `y`; then asserts
    /// `p < ∞` and `r = r'`.
    pub stmt2_ok: Option<bool>,
}

/// `members` marks a submonoid `N` of the carrier; `f` is an additive,
/// monotone, zero-preserving rational map defined on `N` (entries off `N`
/// are ignored). Computes
///   p  = sup { (f(y1)-f(y2))/m : y1 ≤ y2 + m·x },
///   p' = sup { (f(y1)-f(y2))/m : y1 + m̄·x ≤ y2 + (m+m̄)·x },
///   r  = inf { (f(z2)-f(z1))/n : z1 + n·x ≤ z2 },
///   r' = inf { (f(z2)-f(z1))/n : z1 + (n+n̄)·x ≤ z2 + n̄·x }.
pub fn state_extension_bounds(
    pom: &FinPom,
    members: &[bool],
    f: &[Option<Q>],
    x: usize,
    bound: u64,
) -> Result<StateBounds, CufiniteError> {
    if x >= pom.n() {
        return Err(CufiniteError::ElementOutOfRange(x));
    }
    if bound < 1 {
        return Err(CufiniteError::BadBound);
    }
    if members.len() != pom.n() || f.len() != pom.n() {
        return Err(CufiniteError::NotASubmonoid("vector size mismatch".into()));
    }
    if !members[pom.zero()] {
        return Err(CufiniteError::NotASubmonoid("missing zero".into()));
    }
    let elems: Vec<usize> = pom.elements().filter(|&e| members[e]).collect();
    for &a in &elems {
        for &b in &elems {
            if !members[pom.add(a, b)] {
                return Err(CufiniteError::NotASubmonoid(format!(
                    "not closed under addition at ({a},{b})"
                )));
            }
        }
    }
    let fv = |e: usize| -> Result<&Q, CufiniteError> {
        f[e].as_ref()
            .ok_or_else(|| CufiniteError::NotAState(format!("f undefined at element {e}")))
    };
    if !fv(pom.zero())?.is_zero() {
        return Err(CufiniteError::NotAState("f(0) must be 0".into()));
    }
    for &a in &elems {
        for &b in &elems {
            let sum = fv(a)? + fv(b)?;
            if &sum != fv(pom.add(a, b))? {
                return Err(CufiniteError::NotAState(format!(
                    "additivity fails at ({a},{b})"
                )));
            }
            if pom.leq(a, b) && fv(a)? > fv(b)? {
                return Err(CufiniteError::NotAState(format!(
                    "monotonicity fails at ({a},{b})"
                )));
            }
        }
    }

    let mx: Vec<usize> = {
        let mut v = Vec::with_capacity(bound as usize + 1);
        let mut acc = pom.zero();
        for _ in 0..=bound {
            v.push(acc);
            acc = pom.add(acc, x);
        }
        v
    };
    let mut p = ExtQ::NegInf;
    let mut p_prime = ExtQ::NegInf;
    let mut r = ExtQ::PosInf;
    let mut r_prime = ExtQ::PosInf;
    for &y1 in &elems {
        for &y2 in &elems {
            let delta = fv(y1)? - fv(y2)?;
            for m in 1..=bound as usize {
                let value = &delta / &Q::from_integer(m.into());
                if pom.leq(y1, pom.add(y2, mx[m])) {
                    p.sup_update(value.clone());
                }
                for mbar in 0..=(bound as usize - m) {
                    if pom.leq(pom.add(y1, mx[mbar]), pom.add(y2, mx[m + mbar])) {
                        p_prime.sup_update(value.clone());
                        break;
                    }
                }
                // inf side, read with (z1, z2) = (y2, y1)
                if pom.leq(pom.add(y2, mx[m]), y1) {
                    r.inf_update(value.clone());
                }
                for nbar in 0..=(bound as usize - m) {
                    if pom.leq(pom.add(y2, mx[m + nbar]), pom.add(y1, mx[nbar])) {
                        r_prime.inf_update(value.clone());
                        break;
                    }
                }
            }
        }
    }
    let stmt1_ok = p == p_prime
        && p >= ExtQ::Fin(Q::zero())
        && p.partial_cmp(&r).map_or(false, |o| o.is_le())
        && r_prime.partial_cmp(&r).map_or(false, |o| o.is_le());
    let dominated = elems.iter().any(|&y| {
        (1..=bound).any(|l| pom.leq(x, pom.mul_nat(l, y)))
    });
    let stmt2_ok = if dominated {
        Some(p != ExtQ::PosInf && r == r_prime)
    } else {
        None
    };
    Ok(StateBounds {
        p,
        p_prime,
        r,
        r_prime,
        stmt1_ok,
        stmt2_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pom::FinPom;
    use crate::rational::q_int;

    #[test]
    fn no_functional_on_e1() {
        let e1 = FinPom::elementary(1);
        // 2·1 = 3·1 = ∞ would force λ(∞) = 2 and 3
        let r = functional_exists(&e1, 1).unwrap();
        assert!(!r.exists);
        assert!(r.values.is_none());
    }

    #[test]
    fn no_functional_on_pure_inf() {
        let s = FinPom::pure_inf();
        // ∞ = 2∞ forces λ(∞) ∈ {0, ∞}
        let r = functional_exists(&s, 1).unwrap();
        assert!(!r.exists);
    }

    #[test]
    fn normalization_at_zero_rejected() {
        let e1 = FinPom::elementary(1);
        assert!(matches!(
            functional_exists(&e1, 0),
            Err(CufiniteError::NormalizationAtZero)
        ));
    }

    #[test]
    fn state_bounds_trivial_submonoid() {
        let e1 = FinPom::elementary(1);
        let members = vec![true, false, false];
        let f = vec![Some(q_int(0)), None, None];
        let b = state_extension_bounds(&e1, &members, &f, 1, e1.default_bound()).unwrap();
        assert_eq!(b.p, ExtQ::Fin(q_int(0)));
        assert_eq!(b.r, ExtQ::PosInf);
        assert!(b.stmt1_ok);
    }

    #[test]
    fn state_bounds_x_zero_collapse() {
        let e1 = FinPom::elementary(1);
        let members = vec![true, false, false];
        let f = vec![Some(q_int(0)), None, None];
        let b = state_extension_bounds(&e1, &members, &f, 0, e1.default_bound()).unwrap();
        assert_eq!(b.p, ExtQ::Fin(q_int(0)));
        assert_eq!(b.r, ExtQ::Fin(q_int(0)));
        assert!(b.stmt1_ok);
        assert_eq!(b.stmt2_ok, Some(true));
    }

    #[test]
    fn non_state_rejected() {
        // N = {0, ∞} in E_2 with f(∞) = 1 is not a state: ∞ = 2∞
        let e2 = FinPom::elementary(2);
        let inf = 3;
        let mut members = vec![false; 4];
        members[0] = true;
        members[inf] = true;
        let mut f = vec![None; 4];
        f[0] = Some(q_int(0));
        f[inf] = Some(q_int(1));
        assert!(matches!(
            state_extension_bounds(&e2, &members, &f, 1, e2.default_bound()),
            Err(CufiniteError::NotAState(_))
        ));
    }
}
