//! Finite positively ordered monoids given by Cayley table and order matrix.

use crate::verdict::{Verdict, Witness};
use thiserror::Error;

/// Raw tables before validation. `add` and `leq` are `n x n`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PomData {
    pub n: usize,
    pub add: Vec<usize>,
    pub zero: usize,
    pub leq: Vec<bool>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PomError {
    #[error("empty carrier: a monoid has at least the zero element")]
    Empty,
    #[error("addition table has {got} entries, expected {want}")]
    BadAddSize { got: usize, want: usize },
    #[error("order matrix has {got} entries, expected {want}")]
    BadLeqSize { got: usize, want: usize },
    #[error("table entry {value} out of range for carrier of size {n}")]
    IndexOutOfRange { value: usize, n: usize },
    #[error("element index {value} out of range for carrier of size {n}")]
    ElementOutOfRange { value: usize, n: usize },
    #[error("axiom violated: {0}")]
    AxiomFailed(Verdict),
    #[error("bound must be at least 1")]
    BadBound,
}

impl PomData {
    pub fn check_shape(&self) -> Result<(), PomError> {
        let n = self.n;
        if n == 0 {
            return Err(PomError::Empty);
        }
        if self.add.len() != n * n {
            return Err(PomError::BadAddSize {
                got: self.add.len(),
                want: n * n,
            });
        }
        if self.leq.len() != n * n {
            return Err(PomError::BadLeqSize {
                got: self.leq.len(),
                want: n * n,
            });
        }
        if self.zero >= n {
            return Err(PomError::IndexOutOfRange { value: self.zero, n });
        }
        for &v in &self.add {
            if v >= n {
                return Err(PomError::IndexOutOfRange { value: v, n });
            }
        }
        Ok(())
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }
}

/// Axiom check shared by the partial-order and pre-order variants.
/// `antisymmetric` toggles the antisymmetry axiom.
fn validate_axioms(d: &PomData, antisymmetric: bool) -> Verdict {
    let n = d.n;
    for a in 0..n {
        for b in 0..n {
            if d.add(a, b) != d.add(b, a) {
                return Verdict::fails(Witness::new("commutativity", vec![a, b], vec![]));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if d.add(d.add(a, b), c) != d.add(a, d.add(b, c)) {
                    return Verdict::fails(Witness::new("associativity", vec![a, b, c], vec![]));
                }
            }
        }
    }
    for a in 0..n {
        if d.add(d.zero, a) != a {
            return Verdict::fails(Witness::new("neutral-zero", vec![a], vec![]));
        }
    }
    for a in 0..n {
        if !d.leq(a, a) {
            return Verdict::fails(Witness::new("reflexivity", vec![a], vec![]));
        }
    }
    if antisymmetric {
        for a in 0..n {
            for b in 0..n {
                if a != b && d.leq(a, b) && d.leq(b, a) {
                    return Verdict::fails(Witness::new("antisymmetry", vec![a, b], vec![]));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if d.leq(a, b) && d.leq(b, c) && !d.leq(a, c) {
                    return Verdict::fails(Witness::new("transitivity", vec![a, b, c], vec![]));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if d.leq(a, b) {
                for c in 0..n {
                    if !d.leq(d.add(a, c), d.add(b, c)) {
                        return Verdict::fails(Witness::new(
                            "translation-invariance",
                            vec![a, b, c],
                            vec![],
                        ));
                    }
                }
            }
        }
    }
    for a in 0..n {
        if !d.leq(d.zero, a) {
            return Verdict::fails(Witness::new("positivity", vec![a], vec![]));
        }
    }
    Verdict::holds()
}

/// Checks the full positively-ordered-monoid axioms. Malformed tables are an
/// input error rather than a verdict.
pub fn validate(d: &PomData) -> Result<Verdict, PomError> {
    d.check_shape()?;
    Ok(validate_axioms(d, true))
}

/// Pre-order variant (antisymmetry dropped).
pub fn validate_pre(d: &PomData) -> Result<Verdict, PomError> {
    d.check_shape()?;
    Ok(validate_axioms(d, false))
}

/// A validated finite positively ordered monoid. On a finite carrier every
/// increasing sequence stabilizes, so compact containment coincides with the
/// order and the structure doubles as an (algebraic, all-compact)
/// Cu-semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinPom {
    data: PomData,
}

/// A validated finite positively pre-ordered monoid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinPrePom {
    data: PomData,
}

macro_rules! carrier_accessors {
    () => {
        pub fn n(&self) -> usize {
            self.data.n
        }

        pub fn zero(&self) -> usize {
            self.data.zero
        }

        pub fn add(&self, a: usize, b: usize) -> usize {
            self.data.add(a, b)
        }

        pub fn leq(&self, a: usize, b: usize) -> bool {
            self.data.leq(a, b)
        }

        pub fn data(&self) -> &PomData {
            &self.data
        }

        /// `k * a` by repeated addition.
        pub fn mul_nat(&self, k: u64, a: usize) -> usize {
            let mut acc = self.zero();
            for _ in 0..k {
                acc = self.add(acc, a);
            }
            acc
        }

        pub fn elements(&self) -> std::ops::Range<usize> {
            0..self.data.n
        }

        pub fn check_elem(&self, a: usize) -> Result<(), PomError> {
            if a < self.data.n {
                Ok(())
            } else {
                Err(PomError::ElementOutOfRange {
                    value: a,
                    n: self.data.n,
                })
            }
        }
    };
}

impl FinPom {
    carrier_accessors!();

    pub fn from_data(data: PomData) -> Result<Self, PomError> {
        let v = validate(&data)?;
        if v.is_holds() {
            Ok(FinPom { data })
        } else {
            Err(PomError::AxiomFailed(v))
        }
    }

    /// The trivial monoid `{0}`.
    pub fn trivial() -> Self {
        FinPom {
            data: PomData {
                n: 1,
                add: vec![0],
                zero: 0,
                leq: vec![true],
            },
        }
    }

    /// The elementary Cu-semigroup `E_k = {0, 1, ..., k, ∞}` where sums
    /// exceeding `k` saturate to `∞`. `E_0 = {0, ∞}`.
    pub fn elementary(k: u64) -> Self {
        let k = k as usize;
        let n = k + 2;
        let inf = k + 1;
        let mut add = vec![0; n * n];
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = if a == inf || b == inf || a + b > k {
                    inf
                } else {
                    a + b
                };
                leq[a * n + b] = a <= b;
            }
        }
        FinPom {
            data: PomData { n, add, zero: 0, leq },
        }
    }

    /// `{0, ∞}` with `∞ + ∞ = ∞`.
    pub fn pure_inf() -> Self {
        Self::elementary(0)
    }

    /// `{0, 1, ..., m}` with addition truncated at `m` (a totally ordered,
    /// algebraically ordered monoid with finite top).
    pub fn truncated_nat(m: u64) -> Self {
        let m = m as usize;
        let n = m + 1;
        let mut add = vec![0; n * n];
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = (a + b).min(m);
                leq[a * n + b] = a <= b;
            }
        }
        FinPom {
            data: PomData { n, add, zero: 0, leq },
        }
    }

    /// Direct product, componentwise addition and order.
    pub fn product(&self, other: &FinPom) -> FinPom {
        let (m, k) = (self.n(), other.n());
        let n = m * k;
        let idx = |a: usize, b: usize| a * k + b;
        let mut add = vec![0; n * n];
        let mut leq = vec![false; n * n];
        for a1 in 0..m {
            for a2 in 0..k {
                for b1 in 0..m {
                    for b2 in 0..k {
                        let i = idx(a1, a2);
                        let j = idx(b1, b2);
                        add[i * n + j] = idx(self.add(a1, b1), other.add(a2, b2));
                        leq[i * n + j] = self.leq(a1, b1) && other.leq(a2, b2);
                    }
                }
            }
        }
        FinPom {
            data: PomData {
                n,
                add,
                zero: idx(self.zero(), other.zero()),
                leq,
            },
        }
    }

    /// The submonoid generated by `gens`, with the induced order. Returns the
    /// sub-POM together with the carrier embedding.
    pub fn submonoid(&self, gens: &[usize]) -> (FinPom, Vec<usize>) {
        let mut members = vec![self.zero()];
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for &g in gens {
                if !members.contains(&g) {
                    members.push(g);
                    changed = true;
                }
            }
            for &a in &snapshot {
                for &b in &snapshot {
                    let s = self.add(a, b);
                    if !members.contains(&s) {
                        members.push(s);
                        changed = true;
                    }
                }
            }
        }
        members.sort_unstable();
        let n = members.len();
        let pos = |x: usize| members.iter().position(|&m| m == x).unwrap();
        let mut add = vec![0; n * n];
        let mut leq = vec![false; n * n];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                add[i * n + j] = pos(self.add(a, b));
                leq[i * n + j] = self.leq(a, b);
            }
        }
        (
            FinPom {
                data: PomData {
                    n,
                    add,
                    zero: pos(self.zero()),
                    leq,
                },
            },
            members,
        )
    }

    /// Default multiplicity bound: `2 n^2`. For a carrier of size `n` the
    /// sequence `k ↦ (ka, kb)` lives in a set of size `n^2` and is an orbit of
    /// a translation, hence eventually periodic with preperiod plus period at
    /// most `n^2`; searching to `2 n^2` is exact for all `(ka, kb)`-shaped
    /// quantifiers.
    pub fn default_bound(&self) -> u64 {
        2 * (self.n() as u64) * (self.n() as u64)
    }

    /// Searches for a zero-preserving bijection respecting `add` and `leq`.
    pub fn isomorphism(&self, other: &FinPom) -> Option<Vec<usize>> {
        if self.n() != other.n() {
            return None;
        }
        let n = self.n();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.zero()] = other.zero();
        used[other.zero()] = true;

        // Match immediate invariants before descending.
        fn compatible(this: &FinPom, other: &FinPom, map: &[usize]) -> bool {
            let n = this.n();
            for a in 0..n {
                if map[a] == usize::MAX {
                    continue;
                }
                for b in 0..n {
                    if map[b] == usize::MAX {
                        continue;
                    }
                    if this.leq(a, b) != other.leq(map[a], map[b]) {
                        return false;
                    }
                    let s = this.add(a, b);
                    if map[s] != usize::MAX && map[s] != other.add(map[a], map[b]) {
                        return false;
                    }
                }
            }
            true
        }

        fn go(this: &FinPom, other: &FinPom, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let a = match map.iter().position(|&m| m == usize::MAX) {
                Some(a) => a,
                None => return true,
            };
            for t in 0..other.n() {
                if used[t] {
                    continue;
                }
                map[a] = t;
                used[t] = true;
                if compatible(this, other, map) && go(this, other, map, used) {
                    return true;
                }
                map[a] = usize::MAX;
                used[t] = false;
            }
            false
        }

        if !compatible(self, other, &map) {
            return None;
        }
        if go(self, other, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &FinPom) -> bool {
        self.isomorphism(other).is_some()
    }
}

impl FinPrePom {
    carrier_accessors!();

    pub fn from_data(data: PomData) -> Result<Self, PomError> {
        let v = validate_pre(&data)?;
        if v.is_holds() {
            Ok(FinPrePom { data })
        } else {
            Err(PomError::AxiomFailed(v))
        }
    }

    /// Whether the pre-order is antisymmetric, i.e. the carrier is a FinPom.
    pub fn as_pom(&self) -> Option<FinPom> {
        FinPom::from_data(self.data.clone()).ok()
    }
}

impl From<FinPom> for FinPrePom {
    fn from(p: FinPom) -> Self {
        FinPrePom { data: p.data }
    }
}

/// The algebraic pre-order on a bare addition table: `a ≤ b` iff `a + x = b`
/// for some `x`. The result always satisfies the pre-POM axioms.
pub fn algebraic_order(n: usize, add: &[usize], zero: usize) -> Result<FinPrePom, PomError> {
    let probe = PomData {
        n,
        add: add.to_vec(),
        zero,
        leq: vec![true; n * n],
    };
    probe.check_shape()?;
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = (0..n).any(|x| probe.add(a, x) == b);
        }
    }
    FinPrePom::from_data(PomData {
        n,
        add: add.to_vec(),
        zero,
        leq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_validates() {
        let e1 = FinPom::elementary(1);
        assert_eq!(e1.n(), 3);
        assert!(validate(e1.data()).unwrap().is_holds());
        // 1 + 1 = ∞
        assert_eq!(e1.add(1, 1), 2);
    }

    #[test]
    fn trivial_monoid_validates() {
        assert!(validate(FinPom::trivial().data()).unwrap().is_holds());
    }

    #[test]
    fn antisymmetry_violation_reported() {
        // three elements with 1 ≤ 2 and 2 ≤ 1 but 1 ≠ 2
        let n = 3;
        let e1 = FinPom::elementary(1);
        let mut leq = e1.data().leq.clone();
        leq[1 * n + 2] = true;
        leq[2 * n + 1] = true;
        let d = PomData {
            n,
            add: e1.data().add.clone(),
            zero: 0,
            leq,
        };
        let v = validate(&d).unwrap();
        assert!(v.is_fails());
        let w = v.witness.unwrap();
        assert_eq!(w.tag, "antisymmetry");
        assert_eq!(w.elements, vec![1, 2]);
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        let d = PomData {
            n: 2,
            add: vec![0, 1, 1], // wrong size
            zero: 0,
            leq: vec![true, true, false, true],
        };
        assert!(matches!(validate(&d), Err(PomError::BadAddSize { .. })));
        let d = PomData {
            n: 2,
            add: vec![0, 1, 1, 5], // out of range
            zero: 0,
            leq: vec![true, true, false, true],
        };
        assert!(matches!(validate(&d), Err(PomError::IndexOutOfRange { .. })));
        let d = PomData {
            n: 0,
            add: vec![],
            zero: 0,
            leq: vec![],
        };
        assert!(matches!(validate(&d), Err(PomError::Empty)));
    }

    #[test]
    fn algebraic_order_on_e1_is_chain() {
        let e1 = FinPom::elementary(1);
        let p = algebraic_order(3, &e1.data().add, 0).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(p.leq(a, b), a <= b, "({},{})", a, b);
            }
        }
        assert!(p.as_pom().is_some());
    }

    #[test]
    fn algebraic_order_on_z2_is_preorder_not_partial() {
        // Z_2 = {0, g} with g + g = 0: g = 0 + g and 0 = g + g,
        // so 0 ≤ g ≤ 0 in the algebraic pre-order.
        let add = vec![0, 1, 1, 0];
        let p = algebraic_order(2, &add, 0).unwrap();
        assert!(p.leq(0, 1) && p.leq(1, 0));
        assert!(p.as_pom().is_none());
    }

    #[test]
    fn elementary_isomorphism_detected() {
        let e2 = FinPom::elementary(2);
        // relabeled copy of E_2: swap elements 1 and 2
        let perm = [0usize, 2, 1, 3];
        let n = 4;
        let mut add = vec![0; n * n];
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[e2.add(a, b)];
                leq[perm[a] * n + perm[b]] = e2.leq(a, b);
            }
        }
        let other = FinPom::from_data(PomData { n, add, zero: 0, leq }).unwrap();
        let iso = e2.isomorphism(&other).unwrap();
        assert_eq!(iso[1], 2);
        assert!(!e2.is_isomorphic(&FinPom::elementary(1)));
    }

    #[test]
    fn product_carrier() {
        let e1 = FinPom::elementary(1);
        let p = e1.product(&e1);
        assert_eq!(p.n(), 9);
        assert!(validate(p.data()).unwrap().is_holds());
    }
}
