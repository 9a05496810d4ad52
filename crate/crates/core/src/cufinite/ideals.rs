//! Ideals, the ideal lattice, and quotients of finite Cu-semigroups.

use super::CufiniteError;
use crate::pom::{FinPom, PomData};

/// An order-hereditary subsemigroup containing zero. On a finite carrier
/// every ideal is closed under suprema automatically and is singly
/// generated: the sum of its members is a generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealSet {
    pub members: Vec<bool>,
    /// Elements `a` with `Idl(a)` equal to this ideal.
    pub generators: Vec<usize>,
}

impl IdealSet {
    pub fn contains(&self, a: usize) -> bool {
        self.members[a]
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_zero_ideal(&self, pom: &FinPom) -> bool {
        self.size() == 1 && self.contains(pom.zero())
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    /// Checks the ideal axioms against a carrier.
    pub fn verify(&self, pom: &FinPom) -> Result<(), CufiniteError> {
        if self.members.len() != pom.n() {
            return Err(CufiniteError::NotAnIdeal("member vector size mismatch".into()));
        }
        if !self.contains(pom.zero()) {
            return Err(CufiniteError::NotAnIdeal("does not contain zero".into()));
        }
        for a in pom.elements() {
            for b in pom.elements() {
                if self.contains(a) && self.contains(b) && !self.contains(pom.add(a, b)) {
                    return Err(CufiniteError::NotAnIdeal(format!(
                        "not closed under addition at ({a},{b})"
                    )));
                }
                if self.contains(b) && pom.leq(a, b) && !self.contains(a) {
                    return Err(CufiniteError::NotAnIdeal(format!(
                        "not order-hereditary at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The ideal generated by `a`: everything below some multiple of `a`.
/// Multiples stabilize within the carrier size.
pub fn idl(pom: &FinPom, a: usize) -> Vec<bool> {
    let n = pom.n();
    let mut members = vec![false; n];
    let mut ka = pom.zero();
    for _ in 0..=n {
        for x in pom.elements() {
            if pom.leq(x, ka) {
                members[x] = true;
            }
        }
        ka = pom.add(ka, a);
    }
    members
}

/// The complete list of ideals, each tagged with its generators.
pub fn ideals(pom: &FinPom) -> Vec<IdealSet> {
    let mut out: Vec<IdealSet> = Vec::new();
    for a in pom.elements() {
        let members = idl(pom, a);
        match out.iter_mut().find(|i| i.members == members) {
            Some(existing) => existing.generators.push(a),
            None => out.push(IdealSet {
                members,
                generators: vec![a],
            }),
        }
    }
    out.sort_by_key(|i| i.size());
    out
}

/// The ideal lattice `Lat_f(S)` as a Cu-semigroup: addition is the join
/// `Idl(a) ∨ Idl(b) = Idl(a + b)` and order is inclusion.
pub fn latf(pom: &FinPom) -> FinPom {
    let all = ideals(pom);
    let n = all.len();
    let index_of = |members: &Vec<bool>| all.iter().position(|i| &i.members == members).unwrap();
    let mut add = vec![0; n * n];
    let mut leq = vec![false; n * n];
    for (i, ii) in all.iter().enumerate() {
        for (j, jj) in all.iter().enumerate() {
            let join = idl(pom, pom.add(ii.generators[0], jj.generators[0]));
            add[i * n + j] = index_of(&join);
            leq[i * n + j] = pom
                .elements()
                .all(|x| !ii.contains(x) || jj.contains(x));
        }
    }
    let zero = all
        .iter()
        .position(|i| i.is_zero_ideal(pom))
        .expect("zero ideal always exists");
    FinPom::from_data(PomData { n, add, zero, leq }).expect("ideal lattice is a valid FinPom")
}

/// A surjective order- and addition-preserving quotient map.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub target: FinPom,
    pub class_of: Vec<usize>,
}

/// The quotient `S/I` by the congruence `a ∼_I b` iff `a ≤ b + c` and
/// `b ≤ a + c'` for some `c, c' ∈ I`.
pub fn quotient(pom: &FinPom, ideal: &IdealSet) -> Result<QuotientMap, CufiniteError> {
    ideal.verify(pom)?;
    let n = pom.n();
    let leq_i = |a: usize, b: usize| {
        pom.elements()
            .any(|c| ideal.contains(c) && pom.leq(a, pom.add(b, c)))
    };
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        match reps.iter().position(|&r| leq_i(a, r) && leq_i(r, a)) {
            Some(ci) => class[a] = ci,
            None => {
                class[a] = reps.len();
                reps.push(a);
            }
        }
    }
    let q = reps.len();
    let mut add = vec![0; q * q];
    let mut leq = vec![false; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * q + j] = class[pom.add(a, b)];
            leq[i * q + j] = leq_i(a, b);
        }
    }
    let target = FinPom::from_data(PomData {
        n: q,
        add,
        zero: class[pom.zero()],
        leq,
    })
    .expect("quotient by an ideal congruence is a valid FinPom");
    Ok(QuotientMap {
        target,
        class_of: class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pom::FinPom;
    use crate::props::check_property;

    #[test]
    fn ideals_of_e1() {
        let e1 = FinPom::elementary(1);
        let all = ideals(&e1);
        assert_eq!(all.len(), 2);
        assert!(all[0].is_zero_ideal(&e1));
        assert!(all[1].is_full());
        for i in &all {
            i.verify(&e1).unwrap();
        }
    }

    #[test]
    fn ideals_of_e1_squared() {
        let p = FinPom::elementary(1).product(&FinPom::elementary(1));
        let all = ideals(&p);
        // {0}², {0}×E_1, E_1×{0}, E_1²: any ideal containing (1,0) contains (∞,0)
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn ideals_of_trivial() {
        let t = FinPom::trivial();
        assert_eq!(ideals(&t).len(), 1);
    }

    #[test]
    fn latf_shapes() {
        let e1 = FinPom::elementary(1);
        assert!(latf(&e1).is_isomorphic(&FinPom::pure_inf()));
        assert!(latf(&FinPom::pure_inf()).is_isomorphic(&FinPom::pure_inf()));
        let sq = e1.product(&e1);
        let expect = FinPom::pure_inf().product(&FinPom::pure_inf());
        assert!(latf(&sq).is_isomorphic(&expect));
    }

    #[test]
    fn latf_is_algebraically_ordered_with_o5() {
        for s in [
            FinPom::elementary(2),
            FinPom::truncated_nat(3),
            FinPom::elementary(1).product(&FinPom::pure_inf()),
        ] {
            let l = latf(&s);
            assert!(check_property(&l, "algebraically-ordered", None)
                .unwrap()
                .is_holds());
            assert!(check_property(&l, "o5", None).unwrap().is_holds());
        }
    }

    #[test]
    fn quotient_examples() {
        let e1 = FinPom::elementary(1);
        let sq = e1.product(&e1);
        // E_1 × {0} as member set: elements with second coordinate 0
        let all = ideals(&sq);
        let side = all
            .iter()
            .find(|i| i.size() == 3 && i.contains(sq.zero()))
            .unwrap();
        let qm = quotient(&sq, side).unwrap();
        assert!(qm.target.is_isomorphic(&e1));

        let zero_ideal = all.iter().find(|i| i.is_zero_ideal(&sq)).unwrap();
        assert!(quotient(&sq, zero_ideal).unwrap().target.is_isomorphic(&sq));

        let full = all.iter().find(|i| i.is_full()).unwrap();
        assert!(quotient(&sq, full)
            .unwrap()
            .target
            .is_isomorphic(&FinPom::trivial()));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let e1 = FinPom::elementary(1);
        let bad = IdealSet {
            members: vec![true, true, false], // {0,1} not closed under addition
            generators: vec![],
        };
        assert!(quotient(&e1, &bad).is_err());
    }

    #[test]
    fn quotient_map_preserves_structure() {
        let sq = FinPom::elementary(1).product(&FinPom::elementary(2));
        for ideal in ideals(&sq) {
            let qm = quotient(&sq, &ideal).unwrap();
            for a in sq.elements() {
                for b in sq.elements() {
                    assert_eq!(
                        qm.class_of[sq.add(a, b)],
                        qm.target.add(qm.class_of[a], qm.class_of[b])
                    );
                    if sq.leq(a, b) {
                        assert!(qm.target.leq(qm.class_of[a], qm.class_of[b]));
                    }
                }
            }
        }
    }
}
