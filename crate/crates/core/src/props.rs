//! Decision procedures for monoid and order properties of finite positively
//! ordered monoids.
//!
//! Every checker sits behind the [`PropertyCheck`] trait and is registered by
//! name, so front ends select procedures at runtime (`--props cancellative,o5`).
//! On a finite carrier every increasing sequence stabilizes, so compact
//! containment coincides with the order; all `≪`-quantified axioms are
//! evaluated with `≤` substituted for `≪`.

use crate::pom::{FinPom, PomError};
use crate::verdict::{Verdict, Witness};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PropError {
    #[error("unknown property name: {0}")]
    Unknown(String),
    #[error("bound must be at least 1")]
    BadBound,
    #[error("property {0} has no decision procedure on this carrier")]
    UnsupportedCarrier(String),
    #[error(transparent)]
    Pom(#[from] PomError),
}

/// A single property decision procedure. `bound` caps every scalar
/// quantifier; checkers report how far a verdict is certain.
pub trait PropertyCheck: Sync + Send {
    fn name(&self) -> &'static str;
    fn check(&self, pom: &FinPom, bound: u64) -> Verdict;
}

/// `preperiod + lcm of cycle lengths` bound: the vector `x ↦ kx` is
/// eventually periodic with preperiod at most `n` and period dividing
/// `lcm(1..n-1)` (cycles avoid zero on a positively ordered carrier).
/// `n`-quantified checkers are exact once the bound reaches this.
fn lcm_exactness_bound(n: usize) -> u64 {
    let mut l: u64 = 1;
    for k in 1..n.max(2) as u64 {
        l = num_integer::lcm(l, k);
    }
    n as u64 + l
}

/// Holds if the searched range certainly covers all quantifier values,
/// Unknown otherwise.
fn holds_or_unknown(bound: u64, needed: u64) -> Verdict {
    if bound >= needed {
        Verdict::holds_within(bound)
    } else {
        Verdict::unknown(bound)
    }
}

macro_rules! checker {
    ($ty:ident, $name:literal, |$pom:ident, $bound:ident| $body:block) => {
        pub struct $ty;
        impl PropertyCheck for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn check(&self, $pom: &FinPom, $bound: u64) -> Verdict {
                let _ = $bound;
                $body
            }
        }
    };
}

checker!(Conical, "conical", |p, _b| {
    let z = p.zero();
    for a in p.elements() {
        for b in p.elements() {
            if p.add(a, b) == z && (a != z || b != z) {
                return Verdict::fails(Witness::new("conical", vec![a, b], vec![]));
            }
        }
    }
    Verdict::holds()
});

fn cancellation(p: &FinPom, tag: &str) -> Verdict {
    for a in p.elements() {
        for b in p.elements() {
            for x in p.elements() {
                if p.leq(p.add(a, x), p.add(b, x)) && !p.leq(a, b) {
                    return Verdict::fails(Witness::new(tag, vec![a, b, x], vec![]));
                }
            }
        }
    }
    Verdict::holds()
}

checker!(Cancellative, "cancellative", |p, _b| {
    cancellation(p, "cancellative")
});

// With ≪ = ≤ on a finite carrier, `a + x ≪ b + x ⇒ a ≪ b` becomes the same
// quantifier as order cancellation; kept as its own registry entry so the
// differential suites exercise both code paths by name.
checker!(WeaklyCancellative, "weakly-cancellative", |p, _b| {
    cancellation(p, "weakly-cancellative")
});

checker!(RieszRefinement, "riesz-refinement", |p, _b| {
    let n = p.n();
    for a1 in 0..n {
        for a2 in 0..n {
            let s = p.add(a1, a2);
            for b1 in 0..n {
                for b2 in 0..n {
                    if p.add(b1, b2) != s {
                        continue;
                    }
                    let mut found = false;
                    'search: for x11 in 0..n {
                        for x12 in 0..n {
                            if p.add(x11, x12) != a1 {
                                continue;
                            }
                            for x21 in 0..n {
                                if p.add(x11, x21) != b1 {
                                    continue;
                                }
                                for x22 in 0..n {
                                    if p.add(x21, x22) == a2 && p.add(x12, x22) == b2 {
                                        found = true;
                                        break 'search;
                                    }
                                }
                            }
                        }
                    }
                    if !found {
                        return Verdict::fails(Witness::new(
                            "riesz-refinement",
                            vec![a1, a2, b1, b2],
                            vec![],
                        ));
                    }
                }
            }
        }
    }
    Verdict::holds()
});

checker!(RieszDecomposition, "riesz-decomposition", |p, _b| {
    let n = p.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !p.leq(a, p.add(b, c)) {
                    continue;
                }
                let found = (0..n).any(|bp| {
                    p.leq(bp, b) && (0..n).any(|cp| p.leq(cp, c) && p.add(bp, cp) == a)
                });
                if !found {
                    return Verdict::fails(Witness::new(
                        "riesz-decomposition",
                        vec![a, b, c],
                        vec![],
                    ));
                }
            }
        }
    }
    Verdict::holds()
});

checker!(RieszInterpolation, "riesz-interpolation", |p, _b| {
    let n = p.n();
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    if !(p.leq(a1, b1) && p.leq(a1, b2) && p.leq(a2, b1) && p.leq(a2, b2)) {
                        continue;
                    }
                    let found = (0..n).any(|c| {
                        p.leq(a1, c) && p.leq(a2, c) && p.leq(c, b1) && p.leq(c, b2)
                    });
                    if !found {
                        return Verdict::fails(Witness::new(
                            "riesz-interpolation",
                            vec![a1, a2, b1, b2],
                            vec![],
                        ));
                    }
                }
            }
        }
    }
    Verdict::holds()
});

fn unperforation_at(p: &FinPom, n: u64) -> Option<Witness> {
    for a in p.elements() {
        for b in p.elements() {
            if p.leq(p.mul_nat(n, a), p.mul_nat(n, b)) && !p.leq(a, b) {
                return Some(Witness::new("unperforated", vec![a, b], vec![n]));
            }
        }
    }
    None
}

checker!(Unperforated, "unperforated", |p, bound| {
    for n in 1..=bound {
        if let Some(w) = unperforation_at(p, n) {
            return Verdict::fails(w);
        }
    }
    // The pair sequence k ↦ (ka, kb) is eventually periodic with
    // preperiod + period ≤ n², so 2n² covers every multiplier.
    holds_or_unknown(bound, p.default_bound())
});

pub struct NUnperforated(pub u64);
impl PropertyCheck for NUnperforated {
    fn name(&self) -> &'static str {
        "n-unperforated"
    }
    fn check(&self, p: &FinPom, _bound: u64) -> Verdict {
        match unperforation_at(p, self.0) {
            Some(w) => Verdict::fails(w),
            None => Verdict::holds(),
        }
    }
}

checker!(NearlyUnperforated, "nearly-unperforated", |p, _b| {
    for a in p.elements() {
        for b in p.elements() {
            if p.leq(p.mul_nat(2, a), p.mul_nat(2, b))
                && p.leq(p.mul_nat(3, a), p.mul_nat(3, b))
                && !p.leq(a, b)
            {
                return Verdict::fails(Witness::new("nearly-unperforated", vec![a, b], vec![2, 3]));
            }
        }
    }
    Verdict::holds()
});

checker!(AlmostUnperforated, "almost-unperforated", |p, bound| {
    for a in p.elements() {
        for b in p.elements() {
            for k in 1..=bound {
                if p.leq(p.mul_nat(k + 1, a), p.mul_nat(k, b)) && !p.leq(a, b) {
                    return Verdict::fails(Witness::new(
                        "almost-unperforated",
                        vec![a, b],
                        vec![k],
                    ));
                }
            }
        }
    }
    holds_or_unknown(bound, p.default_bound())
});

fn divisibility_at(p: &FinPom, n: u64) -> Option<Witness> {
    for b in p.elements() {
        if !p.elements().any(|x| p.mul_nat(n, x) == b) {
            return Some(Witness::new("divisible", vec![b], vec![n]));
        }
    }
    None
}

checker!(Divisible, "divisible", |p, bound| {
    for n in 1..=bound {
        if let Some(w) = divisibility_at(p, n) {
            return Verdict::fails(w);
        }
    }
    holds_or_unknown(bound, lcm_exactness_bound(p.n()))
});

pub struct NDivisible(pub u64);
impl PropertyCheck for NDivisible {
    fn name(&self) -> &'static str {
        "n-divisible"
    }
    fn check(&self, p: &FinPom, _bound: u64) -> Verdict {
        match divisibility_at(p, self.0) {
            Some(w) => Verdict::fails(w),
            None => Verdict::holds(),
        }
    }
}

checker!(AlmostDivisible, "almost-divisible", |p, bound| {
    for k in 1..=bound {
        for a in p.elements() {
            let found = p
                .elements()
                .any(|x| p.leq(p.mul_nat(k, x), a) && p.leq(a, p.mul_nat(k + 1, x)));
            if !found {
                return Verdict::fails(Witness::new("almost-divisible", vec![a], vec![k]));
            }
        }
    }
    holds_or_unknown(bound, lcm_exactness_bound(p.n()))
});

checker!(WeaklyDivisible, "weakly-divisible", |p, _b| {
    for s in p.elements() {
        let found = p
            .elements()
            .any(|a| p.elements().any(|b| p.add(p.mul_nat(2, a), p.mul_nat(3, b)) == s));
        if !found {
            return Verdict::fails(Witness::new("weakly-divisible", vec![s], vec![2, 3]));
        }
    }
    Verdict::holds()
});

checker!(Simple, "simple", |p, bound| {
    // `{0}` and the whole carrier are the only ideals iff every nonzero b
    // dominates every a up to a multiple. Multiples of b stabilize within the
    // carrier size, so the search is exact once bound ≥ n.
    for b in p.elements() {
        if b == p.zero() {
            continue;
        }
        for a in p.elements() {
            let found = (0..=bound).any(|k| p.leq(a, p.mul_nat(k, b)));
            if !found {
                if bound >= p.n() as u64 {
                    return Verdict::fails(Witness::new("simple", vec![a, b], vec![]));
                }
                return Verdict::unknown(bound);
            }
        }
    }
    Verdict::holds()
});

checker!(StablyFinite, "stably-finite", |p, _b| {
    for a in p.elements() {
        for b in p.elements() {
            if p.add(a, b) == a && b != p.zero() {
                return Verdict::fails(Witness::new("stably-finite", vec![a, b], vec![]));
            }
        }
    }
    Verdict::holds()
});

checker!(Elementary, "elementary", |p, bound| {
    let simple = Simple.check(p, bound);
    if !simple.is_holds() {
        return simple;
    }
    if p.n() == 1 {
        return Verdict::holds();
    }
    // a finite poset always has a minimal nonzero element
    let minimal = p.elements().find(|&m| {
        m != p.zero() && !p.elements().any(|x| x != p.zero() && x != m && p.leq(x, m))
    });
    match minimal {
        Some(_) => Verdict::holds(),
        None => Verdict::fails(Witness::new("elementary", vec![], vec![])),
    }
});

checker!(AlgebraicallyOrdered, "algebraically-ordered", |p, _b| {
    // a + x = b always implies a ≤ b; only the converse needs checking
    for a in p.elements() {
        for b in p.elements() {
            if p.leq(a, b) && !p.elements().any(|x| p.add(a, x) == b) {
                return Verdict::fails(Witness::new("algebraically-ordered", vec![a, b], vec![]));
            }
        }
    }
    Verdict::holds()
});

checker!(O5, "o5", |p, _b| {
    // Almost algebraic order with ≤ for ≪. The instance a' = a, b' = b
    // dominates: any x for it serves all a' ≤ a, b' ≤ b.
    for a in p.elements() {
        for b in p.elements() {
            for c in p.elements() {
                if !p.leq(p.add(a, b), c) {
                    continue;
                }
                let found = p
                    .elements()
                    .any(|x| p.leq(p.add(a, x), c) && p.leq(c, p.add(a, x)) && p.leq(b, x));
                if !found {
                    return Verdict::fails(Witness::new("o5", vec![a, b, c], vec![]));
                }
            }
        }
    }
    Verdict::holds()
});

checker!(O6, "o6", |p, _b| {
    // Almost Riesz decomposition with ≤ for ≪; a' = a dominates.
    for a in p.elements() {
        for b in p.elements() {
            for c in p.elements() {
                if !p.leq(a, p.add(b, c)) {
                    continue;
                }
                let found = p.elements().any(|e| {
                    p.leq(e, a)
                        && p.leq(e, b)
                        && p.elements().any(|f| {
                            p.leq(f, a) && p.leq(f, c) && p.leq(a, p.add(e, f))
                        })
                });
                if !found {
                    return Verdict::fails(Witness::new("o6", vec![a, b, c], vec![]));
                }
            }
        }
    }
    Verdict::holds()
});

checker!(Idempotent, "idempotent", |p, _b| {
    for a in p.elements() {
        if p.add(a, a) != a {
            return Verdict::fails(Witness::new("idempotent", vec![a], vec![]));
        }
    }
    Verdict::holds()
});

/// The original form O5' of almost algebraic order: `a' ≪ a ≤ b` admits a
/// complement `x` with `a' + x ≤ b ≤ a + x`. With ≤ for ≪ the dominating
/// instance a' = a reduces this to algebraic order. Not a registry entry; used
/// by the theorem suites.
pub fn o5_prime(p: &FinPom) -> Verdict {
    for a in p.elements() {
        for b in p.elements() {
            if !p.leq(a, b) {
                continue;
            }
            let found = p
                .elements()
                .any(|x| p.leq(p.add(a, x), b) && p.leq(b, p.add(a, x)));
            if !found {
                return Verdict::fails(Witness::new("o5-prime", vec![a, b], vec![]));
            }
        }
    }
    Verdict::holds()
}

/// Weak separativity: `2a ≤ a + b ≤ 2b` implies `a ≤ b`.
pub fn weakly_separative(p: &FinPom) -> Verdict {
    for a in p.elements() {
        for b in p.elements() {
            let ab = p.add(a, b);
            if p.leq(p.mul_nat(2, a), ab) && p.leq(ab, p.mul_nat(2, b)) && !p.leq(a, b) {
                return Verdict::fails(Witness::new("weakly-separative", vec![a, b], vec![]));
            }
        }
    }
    Verdict::holds()
}

/// All registered property names, in registry order.
pub fn property_names() -> Vec<&'static str> {
    vec![
        "conical",
        "cancellative",
        "weakly-cancellative",
        "riesz-refinement",
        "riesz-decomposition",
        "riesz-interpolation",
        "unperforated",
        "n-unperforated(n)",
        "nearly-unperforated",
        "almost-unperforated",
        "divisible",
        "n-divisible(n)",
        "almost-divisible",
        "weakly-divisible",
        "simple",
        "stably-finite",
        "elementary",
        "algebraically-ordered",
        "o5",
        "o6",
        "idempotent",
    ]
}

/// Resolves a property name (e.g. `cancellative`, `n-unperforated(3)`) to its
/// decision procedure.
pub fn resolve(name: &str) -> Result<Box<dyn PropertyCheck>, PropError> {
    let name = name.trim().to_ascii_lowercase();
    if let Some(arg) = parse_parametric(&name, "n-unperforated") {
        return Ok(Box::new(NUnperforated(arg?)));
    }
    if let Some(arg) = parse_parametric(&name, "n-divisible") {
        return Ok(Box::new(NDivisible(arg?)));
    }
    Ok(match name.as_str() {
        "conical" => Box::new(Conical),
        "cancellative" => Box::new(Cancellative),
        "weakly-cancellative" => Box::new(WeaklyCancellative),
        "riesz-refinement" => Box::new(RieszRefinement),
        "riesz-decomposition" => Box::new(RieszDecomposition),
        "riesz-interpolation" => Box::new(RieszInterpolation),
        "unperforated" => Box::new(Unperforated),
        "nearly-unperforated" => Box::new(NearlyUnperforated),
        "almost-unperforated" => Box::new(AlmostUnperforated),
        "divisible" => Box::new(Divisible),
        "almost-divisible" => Box::new(AlmostDivisible),
        "weakly-divisible" => Box::new(WeaklyDivisible),
        "simple" => Box::new(Simple),
        "stably-finite" => Box::new(StablyFinite),
        "elementary" => Box::new(Elementary),
        "algebraically-ordered" => Box::new(AlgebraicallyOrdered),
        "o5" => Box::new(O5),
        "o6" => Box::new(O6),
        "idempotent" => Box::new(Idempotent),
        _ => return Err(PropError::Unknown(name)),
    })
}

fn parse_parametric(name: &str, prefix: &str) -> Option<Result<u64, PropError>> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<u64>()
            .map_err(|_| PropError::Unknown(name.to_string()))
            .and_then(|v| if v == 0 { Err(PropError::BadBound) } else { Ok(v) }),
    )
}

/// Runs a named property check with the default bound when `bound` is None.
pub fn check_property(pom: &FinPom, name: &str, bound: Option<u64>) -> Result<Verdict, PropError> {
    let bound = bound.unwrap_or_else(|| pom.default_bound());
    if bound < 1 {
        return Err(PropError::BadBound);
    }
    Ok(resolve(name)?.check(pom, bound))
}

/// Stable domination `a <_s b`: some `k` with `(k+1)a ≤ kb`. Also reports
/// whether the equivalent formulations (eventual domination; shifted
/// multiplicity for every `n`) agree within the bound.
pub fn stable_domination(p: &FinPom, a: usize, b: usize, bound: u64) -> Result<Verdict, PomError> {
    p.check_elem(a)?;
    p.check_elem(b)?;
    if bound < 1 {
        return Err(PomError::BadBound);
    }
    let items = rel_s_tfae_items(p, a, b, bound);
    let all_equal = items.iter().all(|&v| v == items[0]);
    if !all_equal {
        // should be impossible once the bound covers the periodic range
        return Ok(Verdict::fails(Witness::new(
            "stable-domination-tfae-mismatch",
            vec![a, b],
            vec![bound],
        )));
    }
    if items[0] {
        let k = (1..=bound)
            .find(|&k| p.leq(p.mul_nat(k + 1, a), p.mul_nat(k, b)))
            .unwrap();
        Ok(Verdict {
            status: crate::verdict::Status::Holds,
            witness: Some(Witness::new("stable-domination", vec![a, b], vec![k])),
            depth: Some(bound),
        })
    } else if bound >= p.default_bound() {
        Ok(Verdict::fails(Witness::new(
            "stable-domination",
            vec![a, b],
            vec![bound],
        )))
    } else {
        Ok(Verdict::unknown(bound))
    }
}

/// The four finite-checkable characterizations of `a <_s b`:
/// (1) some `k` with `(k+1)a ≤ kb`;
/// (2) a tail `k ≥ k₀` with `(k+1)a ≤ kb` throughout the bound;
/// (3) for each `n`, some `k` with `(k+n)a ≤ kb`;
/// (4) for each `n`, a tail of such `k`.
pub fn rel_s_tfae_items(p: &FinPom, a: usize, b: usize, bound: u64) -> [bool; 4] {
    let holds_at = |k: u64, n: u64| p.leq(p.mul_nat(k + n, a), p.mul_nat(k, b));
    let item1 = (1..=bound).any(|k| holds_at(k, 1));
    let item2 = (1..=bound).any(|k0| (k0..=bound).all(|k| holds_at(k, 1)));
    let ns = [1u64, 2, 3, p.n() as u64];
    let item3 = ns.iter().all(|&n| (1..=bound).any(|k| holds_at(k, n)));
    let item4 = ns
        .iter()
        .all(|&n| (1..=bound).any(|k0| (k0..=bound).all(|k| holds_at(k, n))));
    [item1, item2, item3, item4]
}

/// `a ≤_p b`: all large multiples dominate. Exact via the consecutive-pair
/// criterion within the periodic range.
pub fn le_p(p: &FinPom, a: usize, b: usize) -> bool {
    let bound = p.default_bound();
    (1..=bound).any(|k| {
        p.leq(p.mul_nat(k, a), p.mul_nat(k, b)) && p.leq(p.mul_nat(k + 1, a), p.mul_nat(k + 1, b))
    })
}

/// `a ≤_p b` by the definitional tail criterion, searched within the bound.
pub fn le_p_definitional(p: &FinPom, a: usize, b: usize) -> bool {
    let bound = p.default_bound();
    (1..=bound).any(|k0| (k0..=bound).all(|k| p.leq(p.mul_nat(k, a), p.mul_nat(k, b))))
}
