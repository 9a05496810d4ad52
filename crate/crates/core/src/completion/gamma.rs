//! The Cu-completion via round ideals, and algebraic Cu-semigroups.

use super::wsemi::{validate_w, FinW, WAxiom};
use super::CompletionError;
use crate::pom::{FinPom, PomData};

/// Result of the Cu-completion of a finite PreW-semigroup.
#[derive(Clone, Debug)]
pub struct GammaResult {
    /// The completed carrier. On a finite input all of O1–O4 hold.
    pub cu: FinPom,
    /// Round ideals indexed like `cu`, as membership vectors.
    pub ideals: Vec<Vec<bool>>,
    /// The universal map: element `a` to the index of its downset `a^≺`.
    pub alpha: Vec<usize>,
}

fn is_round_ideal(w: &FinW, members: &[bool]) -> bool {
    let n = w.n();
    if !members.iter().any(|&m| m) {
        return false;
    }
    for y in 0..n {
        if !members[y] {
            continue;
        }
        // downward closed under the order
        for x in 0..n {
            if w.leq(x, y) && !members[x] {
                return false;
            }
        }
        // round: some successor inside
        if !(0..n).any(|z| members[z] && w.aux(y, z)) {
            return false;
        }
    }
    // directed: common ≺-upper bound inside
    for y1 in 0..n {
        for y2 in 0..n {
            if members[y1] && members[y2] {
                let ok = (0..n).any(|z| members[z] && w.aux(y1, z) && w.aux(y2, z));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// The Cu-completion `γ(S)` of a finite PreW-semigroup, enumerated through
/// round ideals (the classes of `≺`-increasing sequences, which on a finite
/// carrier stabilize into exactly these subsets). Also verifies the two
/// completion conditions: `α(a') ≪ α(a)` forces `a' ≺ a`, and every
/// way-below pair interleaves through the image of `α`.
pub fn gamma(w: &FinW) -> Result<GammaResult, CompletionError> {
    for (axiom, name) in [(WAxiom::W1, "W1"), (WAxiom::W3, "W3"), (WAxiom::W4, "W4")] {
        if !validate_w(w, axiom).is_holds() {
            return Err(CompletionError::Precondition(name));
        }
    }
    let n = w.n();
    if n > 12 {
        return Err(CompletionError::CarrierTooLarge(n));
    }
    let mut ideals: Vec<Vec<bool>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        if is_round_ideal(w, &members) {
            ideals.push(members);
        }
    }
    let g = ideals.len();
    let index_of = |members: &Vec<bool>| -> usize {
        ideals
            .iter()
            .position(|i| i == members)
            .expect("closure under the constructed operations")
    };
    // every round ideal on a finite carrier has a self-related top
    let top_of: Vec<usize> = ideals
        .iter()
        .map(|members| {
            (0..n)
                .find(|&z| {
                    members[z]
                        && w.aux(z, z)
                        && (0..n).all(|y| !members[y] || w.aux(y, z))
                })
                .expect("finite round ideal has a cofinal self-related element")
        })
        .collect();
    let mut add = vec![0; g * g];
    let mut leq = vec![false; g * g];
    for i in 0..g {
        for j in 0..g {
            let t = w.add(top_of[i], top_of[j]);
            let sum: Vec<bool> = (0..n).map(|y| w.aux(y, t)).collect();
            add[i * g + j] = index_of(&sum);
            leq[i * g + j] = ideals[i]
                .iter()
                .zip(&ideals[j])
                .all(|(&x, &y)| !x || y);
        }
    }
    let zero_ideal: Vec<bool> = (0..n).map(|y| w.aux(y, w.zero())).collect();
    let cu = FinPom::from_data(PomData {
        n: g,
        add,
        zero: index_of(&zero_ideal),
        leq,
    })?;
    let alpha: Vec<usize> = (0..n).map(|a| index_of(&w.downset(a))).collect();

    // way-below in γ(S): D ≪ E iff D sits below a single member of E
    let waybelow = |i: usize, j: usize| -> bool {
        (0..n).any(|d| {
            ideals[j][d] && (0..n).all(|y| !ideals[i][y] || w.aux(y, d))
        })
    };
    // embedding: α(a') ≪ α(a) ⇒ a' ≺ a
    for ap in 0..n {
        for a in 0..n {
            if waybelow(alpha[ap], alpha[a]) && !w.aux(ap, a) {
                return Err(CompletionError::CheckFailed(format!(
                    "embedding fails at ({ap},{a})"
                )));
            }
        }
    }
    // dense image: b' ≪ b admits a with b' ≤ α(a) ≤ b
    for i in 0..g {
        for j in 0..g {
            if !waybelow(i, j) {
                continue;
            }
            let found = (0..n).any(|a| cu.leq(i, alpha[a]) && cu.leq(alpha[a], j));
            if !found {
                return Err(CompletionError::CheckFailed(format!(
                    "dense image fails at ideals ({i},{j})"
                )));
            }
        }
    }
    Ok(GammaResult { cu, ideals, alpha })
}

/// The Cu-completion of a bare positively ordered monoid, taking the order
/// itself as the auxiliary relation. The result is algebraic with compact
/// elements exactly the image of the carrier; on finite carriers it is an
/// isomorphism.
pub fn cu_of_pom(m: &FinPom) -> Result<GammaResult, CompletionError> {
    gamma(&FinW::from_pom_leq(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::mu;
    use crate::pom::FinPom;
    use crate::props::check_property;

    #[test]
    fn gamma_of_order_aux_is_identity_like() {
        for m in [FinPom::elementary(1), FinPom::truncated_nat(3), FinPom::pure_inf()] {
            let g = cu_of_pom(&m).unwrap();
            assert!(g.cu.is_isomorphic(&m));
            // α is an order-isomorphism onto the (all-compact) image
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(m.leq(a, b), g.cu.leq(g.alpha[a], g.alpha[b]));
                }
            }
        }
    }

    #[test]
    fn gamma_idempotent() {
        let m = FinPom::elementary(2);
        let g1 = cu_of_pom(&m).unwrap();
        let g2 = cu_of_pom(&g1.cu).unwrap();
        assert!(g2.cu.is_isomorphic(&g1.cu));
    }

    #[test]
    fn gamma_collapsing_aux() {
        // aux = {(0,a)}: only the zero sequence exists, γ ≅ {0}
        let e1 = FinPom::elementary(1);
        let n = 3;
        let mut aux = vec![false; n * n];
        for a in 0..n {
            aux[0 * n + a] = true;
        }
        let w = FinW::new(e1.into(), aux).unwrap();
        let g = gamma(&w).unwrap();
        assert_eq!(g.cu.n(), 1);
    }

    #[test]
    fn gamma_after_mu_agrees_with_gamma() {
        let e1 = FinPom::elementary(1);
        let n = 3;
        let mut aux = vec![false; n * n];
        for a in 0..n {
            aux[0 * n + a] = true;
        }
        let w = FinW::new(e1.into(), aux).unwrap();
        let via_mu = gamma(&mu(&w).unwrap().w).unwrap();
        let direct = gamma(&w).unwrap();
        assert!(via_mu.cu.is_isomorphic(&direct.cu));
    }

    #[test]
    fn o5_transfer_for_algebraic_orders() {
        // γ satisfies O5 iff the input monoid is algebraically ordered
        for m in [FinPom::elementary(1), FinPom::truncated_nat(2)] {
            let g = cu_of_pom(&m).unwrap();
            assert_eq!(
                check_property(&m, "algebraically-ordered", None).unwrap().is_holds(),
                check_property(&g.cu, "o5", None).unwrap().is_holds()
            );
        }
    }
}
