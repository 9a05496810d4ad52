//! Grothendieck completion of a finite monoid.

use crate::pom::FinPom;

/// A finite abelian group given by tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinGroup {
    pub n: usize,
    pub add: Vec<usize>,
    pub zero: usize,
    pub neg: Vec<usize>,
}

impl FinGroup {
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
}

/// The Grothendieck completion `Gr(M)` together with the universal map
/// `δ: M → Gr(M)`.
///
/// On a finite carrier the stable-equality quotient `a ~ b iff a + c = b + c
/// for some c` is cancellative, and a finite cancellative commutative monoid
/// is a group (translation by any element is a bijection).
pub struct Grothendieck {
    pub group: FinGroup,
    pub delta: Vec<usize>,
    /// δ is injective iff M is cancellative.
    pub injective: bool,
}

pub fn grothendieck(m: &FinPom) -> Grothendieck {
    grothendieck_table(m.n(), &m.data().add, m.zero())
}

/// Raw-table variant; the input need not carry an order (e.g. a finite group
/// viewed as a monoid).
pub fn grothendieck_table(n: usize, add_table: &[usize], zero_elem: usize) -> Grothendieck {
    assert_eq!(add_table.len(), n * n);
    let m = |a: usize, b: usize| add_table[a * n + b];
    // stable equality: a ~ b iff ∃c: a + c = b + c
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        let mut found = None;
        for (ci, &r) in reps.iter().enumerate() {
            if (0..n).any(|c| m(a, c) == m(r, c)) {
                found = Some(ci);
                break;
            }
        }
        match found {
            Some(ci) => class[a] = ci,
            None => {
                class[a] = reps.len();
                reps.push(a);
            }
        }
    }
    let g = reps.len();
    let mut add = vec![0; g * g];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * g + j] = class[m(a, b)];
        }
    }
    let zero = class[zero_elem];
    let mut neg = vec![usize::MAX; g];
    for i in 0..g {
        for j in 0..g {
            if add[i * g + j] == zero {
                neg[i] = j;
            }
        }
    }
    debug_assert!(neg.iter().all(|&v| v != usize::MAX));
    let injective = {
        let mut seen = vec![false; g];
        let mut inj = true;
        for a in 0..n {
            if seen[class[a]] {
                inj = false;
                break;
            }
            seen[class[a]] = true;
        }
        inj
    };
    Grothendieck {
        group: FinGroup { n: g, add, zero, neg },
        delta: class,
        injective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pom::FinPom;
    use crate::props::check_property;

    #[test]
    fn gr_of_e1_is_trivial() {
        // 3·1 = 2·1 forces 1 = 0 after group closure
        let g = grothendieck(&FinPom::elementary(1));
        assert_eq!(g.group.n, 1);
        assert!(!g.injective);
    }

    #[test]
    fn gr_of_trivial_is_trivial() {
        let g = grothendieck(&FinPom::trivial());
        assert_eq!(g.group.n, 1);
        assert!(g.injective);
    }

    #[test]
    fn gr_functorial_on_samples() {
        for m in [FinPom::elementary(2), FinPom::truncated_nat(3)] {
            let g = grothendieck(&m);
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(
                        g.group.add(g.delta[a], g.delta[b]),
                        g.delta[m.add(a, b)]
                    );
                }
            }
            assert_eq!(g.delta[m.zero()], g.group.zero);
        }
    }

    #[test]
    fn delta_injective_iff_cancellative() {
        // on positively ordered carriers order cancellation pins the carrier
        // to {0}; both sides of the iff degenerate together
        for m in [
            FinPom::trivial(),
            FinPom::elementary(1),
            FinPom::truncated_nat(2),
            FinPom::pure_inf(),
        ] {
            let canc = check_property(&m, "cancellative", None).unwrap().is_holds();
            let g = grothendieck(&m);
            assert_eq!(g.injective, canc, "carrier n={}", m.n());
        }
    }

    #[test]
    fn z2_monoid_is_its_own_group() {
        // ℤ₂ = {0, g} with g + g = 0 is already a group; δ is injective
        let g = grothendieck_table(2, &[0, 1, 1, 0], 0);
        assert_eq!(g.group.n, 2);
        assert!(g.injective);
        assert_eq!(g.group.neg(1), 1);
        assert_eq!(g.group.add(1, 1), g.group.zero);
    }
}
