//! The comparison-relation suite on named carriers: order, way-below,
//! stable domination and its regularization, ideal comparison, eventual
//! domination, and functional comparison, with the implication diagram
//! asserted on every call.

use super::arith::{functional, is_compact_elem, leq, waybelow};
use super::{Elem, ExtNat, GenSolidElem, NamedCu, NamedError};
use crate::rational::ExtRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRecord {
    pub leq: bool,
    pub waybelow: bool,
    /// `a <_s b`: some `k` with `(k+1)a ≤ kb`.
    pub stably_dominated: bool,
    /// The regularization `a <_s^τ b`: every `a' ≪ a` has `a' <_s b`.
    pub stably_dominated_reg: bool,
    /// `a ∝ b`: `a ≤ kb` for some `k`.
    pub propto: bool,
    /// The regularization: `a ≤ ∞·b`, i.e. ideal containment.
    pub propto_reg: bool,
    /// `a ≤_p b`: all large multiples dominate.
    pub le_p: bool,
    /// `ĥa ≤ ĥb`: comparison under every functional.
    pub hat_leq: bool,
    /// `ĥa <_s ĥb`.
    pub hat_stably_dominated: bool,
}

fn is_zero(s: &NamedCu, a: &Elem) -> Result<bool, NamedError> {
    Ok(a == &s.zero())
}

/// Computes the full record. Requires a carrier with closed-form functional.
pub fn comparison_suite(s: &NamedCu, a: &Elem, b: &Elem) -> Result<ComparisonRecord, NamedError> {
    s.check(a)?;
    s.check(b)?;
    let la = functional(s, a)?;
    let lb = functional(s, b)?;
    let za = is_zero(s, a)?;
    let zb = is_zero(s, b)?;
    let lb_inf = lb == ExtRat::Inf;
    let la_inf = la == ExtRat::Inf;

    let stably_dominated = za || (!zb && (la < lb || lb_inf));
    let hat_stably_dominated = stably_dominated;
    let cond3 = za || (!zb && (lb_inf || la < lb));
    let hat_leq = za || (!zb && la <= lb);
    let compact = is_compact_elem(s, a)?;
    let stably_dominated_reg = if compact { stably_dominated } else { hat_leq };
    let propto = za || (!zb && (!la_inf || lb_inf));
    let propto_reg = za || !zb;
    let le_p = match (s, a, b) {
        (NamedCu::ExtNat, _, _) => leq(s, a, b)?,
        (NamedCu::Interval, _, _) => hat_leq,
        (NamedCu::GenSolid(_), Elem::Gen(x), Elem::Gen(y)) => {
            za || (!zb
                && match (x, y) {
                    (GenSolidElem::Compact(_), GenSolidElem::Compact(_)) => la < lb || a == b,
                    (GenSolidElem::Compact(_), GenSolidElem::Soft(_)) => la < lb,
                    (GenSolidElem::Soft(_), _) => la <= lb,
                })
        }
        _ => unreachable!("functional restricted the carrier"),
    };
    let record = ComparisonRecord {
        leq: leq(s, a, b)?,
        waybelow: waybelow(s, a, b)?,
        stably_dominated,
        stably_dominated_reg,
        propto,
        propto_reg,
        le_p,
        hat_leq,
        hat_stably_dominated,
    };

    // the implication diagram, asserted exactly
    let implies = |p: bool, q: bool| !p || q;
    let checks = [
        ("s => hat_s", implies(record.stably_dominated, record.hat_stably_dominated)),
        ("hat_s => (3)", implies(record.hat_stably_dominated, cond3)),
        ("(3) => s_reg", implies(cond3, record.stably_dominated_reg)),
        ("s_reg => hat_leq", implies(record.stably_dominated_reg, record.hat_leq)),
        (
            "compact: s_reg => s",
            implies(compact && record.stably_dominated_reg, record.stably_dominated),
        ),
        (
            "soft: hat_leq => s_reg",
            implies(
                super::arith::is_soft(s, a)? && record.hat_leq,
                record.stably_dominated_reg,
            ),
        ),
        // the named functional carriers are almost unperforated
        ("a.unp: s_reg => leq", implies(record.stably_dominated_reg, record.leq)),
        ("leq => hat_leq", implies(record.leq, record.hat_leq)),
        ("waybelow => leq", implies(record.waybelow, record.leq)),
        ("s => le_p", implies(record.stably_dominated, record.le_p)),
        ("le_p => propto-ish", implies(record.le_p && !za, record.propto_reg)),
    ];
    for (name, ok) in checks {
        if !ok {
            return Err(NamedError::CheckFailed(format!(
                "comparison diagram violated: {name} at a={a}, b={b}"
            )));
        }
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_int};

    #[test]
    fn soft_vs_compact_unit() {
        let s = NamedCu::z();
        // Soft(1) against Compact(1): ≤ holds and the regularized relation too
        let r = comparison_suite(&s, &Elem::soft(q_int(1)), &Elem::compact(q_int(1))).unwrap();
        assert!(r.stably_dominated_reg);
        assert!(r.leq);
        // Compact(1) against Soft(1): ≤ fails, ĥ-comparison holds
        let r = comparison_suite(&s, &Elem::compact(q_int(1)), &Elem::soft(q_int(1))).unwrap();
        assert!(!r.leq);
        assert!(r.hat_leq);
        assert!(!r.stably_dominated);
    }

    #[test]
    fn zero_dominates_everything_trivially() {
        let s = NamedCu::z();
        let r = comparison_suite(&s, &s.zero(), &Elem::soft(q(1, 7))).unwrap();
        assert!(r.leq && r.stably_dominated && r.stably_dominated_reg && r.hat_leq && r.le_p);
    }

    #[test]
    fn strict_functional_gap_gives_stable_domination() {
        let s = NamedCu::r2inf();
        let r = comparison_suite(&s, &Elem::compact(q(1, 2)), &Elem::compact(q(3, 4))).unwrap();
        assert!(r.stably_dominated && r.leq);
        let r = comparison_suite(&s, &Elem::compact(q(3, 4)), &Elem::compact(q(1, 2))).unwrap();
        assert!(!r.stably_dominated && !r.hat_leq);
    }

    #[test]
    fn top_absorbs() {
        let s = NamedCu::z();
        let r = comparison_suite(&s, &Elem::soft_inf(), &Elem::soft_inf()).unwrap();
        assert!(r.leq && r.stably_dominated && r.le_p);
        let r = comparison_suite(&s, &Elem::soft_inf(), &Elem::compact(q_int(3))).unwrap();
        assert!(!r.leq && !r.propto);
        // still in the ideal of b
        assert!(r.propto_reg);
    }

    #[test]
    fn interval_identity_functional() {
        let s = NamedCu::Interval;
        let r = comparison_suite(&s, &Elem::rat(q(2, 3)), &Elem::rat(q(2, 3))).unwrap();
        assert!(r.leq && r.hat_leq && r.stably_dominated_reg && !r.stably_dominated);
    }

    #[test]
    fn elementary_carriers_rejected() {
        assert!(matches!(
            comparison_suite(&NamedCu::Elementary(1), &Elem::nat(1), &Elem::nat(1)),
            Err(NamedError::NoNormalizedFunctional)
        ));
    }
}
