//! Inductive limits of finite positively ordered monoids at finite
//! truncation: the stage-k slice of the sequential colimit, with order and
//! identification decided by pushing forward through the available maps.

use super::CompletionError;
use crate::pom::{FinPom, PomData};

/// The stage-k truncation of the limit of a finite chain of stages.
#[derive(Clone, Debug)]
pub struct LimitStage {
    /// Classes of stage-k elements after identification at the last stage.
    pub pom: FinPom,
    /// Stage-k element to its class.
    pub class_of: Vec<usize>,
    /// Image of each stage-k element in the final stage.
    pub pushed: Vec<usize>,
}

fn check_map(
    index: usize,
    src: &FinPom,
    dst: &FinPom,
    map: &[usize],
) -> Result<(), CompletionError> {
    if map.len() != src.n() {
        return Err(CompletionError::BadMap {
            index,
            reason: format!("length {} does not match stage size {}", map.len(), src.n()),
        });
    }
    for &v in map {
        if v >= dst.n() {
            return Err(CompletionError::BadMap {
                index,
                reason: format!("image {v} out of range for target of size {}", dst.n()),
            });
        }
    }
    if map[src.zero()] != dst.zero() {
        return Err(CompletionError::BadMap {
            index,
            reason: "zero not preserved".into(),
        });
    }
    for a in src.elements() {
        for b in src.elements() {
            if map[src.add(a, b)] != dst.add(map[a], map[b]) {
                return Err(CompletionError::BadMap {
                    index,
                    reason: format!("addition not preserved at ({a},{b})"),
                });
            }
            if src.leq(a, b) && !dst.leq(map[a], map[b]) {
                return Err(CompletionError::BadMap {
                    index,
                    reason: format!("order not preserved at ({a},{b})"),
                });
            }
        }
    }
    Ok(())
}

/// `maps[i]` carries stage `i` into stage `i+1`. `k` is a zero-based stage
/// index. Elements of the result are stage-k elements identified when their
/// images agree at the last available stage; order is decided there too.
pub fn inductive_limit_stage(
    stages: &[FinPom],
    maps: &[Vec<usize>],
    k: usize,
) -> Result<LimitStage, CompletionError> {
    if stages.is_empty() || k >= stages.len() {
        return Err(CompletionError::BadStage(k));
    }
    if maps.len() + 1 != stages.len() {
        return Err(CompletionError::BadMap {
            index: maps.len(),
            reason: format!(
                "{} maps given for {} stages",
                maps.len(),
                stages.len()
            ),
        });
    }
    for (i, map) in maps.iter().enumerate() {
        check_map(i, &stages[i], &stages[i + 1], map)?;
    }
    let last = stages.len() - 1;
    let push = |mut a: usize, from: usize, to: usize| {
        for map in maps.iter().take(to).skip(from) {
            a = map[a];
        }
        a
    };
    let sk = &stages[k];
    let sl = &stages[last];
    let pushed: Vec<usize> = sk.elements().map(|a| push(a, k, last)).collect();

    let mut class = vec![usize::MAX; sk.n()];
    let mut reps: Vec<usize> = Vec::new();
    for a in sk.elements() {
        match reps.iter().position(|&r| pushed[r] == pushed[a]) {
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
            add[i * q + j] = class[sk.add(a, b)];
            leq[i * q + j] = sl.leq(pushed[a], pushed[b]);
        }
    }
    let pom = FinPom::from_data(PomData {
        n: q,
        add,
        zero: class[sk.zero()],
        leq,
    })?;
    Ok(LimitStage {
        pom,
        class_of: class,
        pushed,
    })
}

/// The doubling chain `E_{2^0} → E_{2^1} → ... → E_{2^m}` with `a ↦ 2a`,
/// whose stage-m compacts realize the dyadic grid of denominator `2^m`.
pub fn doubling_system(m: u32) -> (Vec<FinPom>, Vec<Vec<usize>>) {
    let stages: Vec<FinPom> = (0..=m).map(|i| FinPom::elementary(1 << i)).collect();
    let maps: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let k = 1usize << i;
            let inf_src = k + 1;
            let inf_dst = 2 * k + 1;
            (0..=inf_src)
                .map(|a| if a == inf_src { inf_dst } else { 2 * a })
                .collect()
        })
        .collect();
    (stages, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::check_property;

    #[test]
    fn constant_identity_system_is_stage() {
        let e2 = FinPom::elementary(2);
        let stages = vec![e2.clone(), e2.clone(), e2.clone()];
        let id: Vec<usize> = e2.elements().collect();
        let maps = vec![id.clone(), id];
        let stage = inductive_limit_stage(&stages, &maps, 1).unwrap();
        assert!(stage.pom.is_isomorphic(&e2));
    }

    #[test]
    fn doubling_system_stage_orders() {
        let (stages, maps) = doubling_system(3);
        let stage = inductive_limit_stage(&stages, &maps, 3).unwrap();
        // last stage: nothing identified
        assert_eq!(stage.pom.n(), stages[3].n());
        // earlier stage embeds: doubling maps are order embeddings
        let s1 = inductive_limit_stage(&stages, &maps, 1).unwrap();
        assert_eq!(s1.pom.n(), stages[1].n());
    }

    #[test]
    fn stage_verdicts_monotone_under_refinement() {
        // verdicts at stage k never flip at a later stage for elements
        // already identified: doubling maps are injective order-embeddings
        let (stages, maps) = doubling_system(3);
        let k = 1;
        let sk = inductive_limit_stage(&stages, &maps, k).unwrap();
        for a in stages[k].elements() {
            for b in stages[k].elements() {
                let now = sk.pom.leq(sk.class_of[a], sk.class_of[b]);
                // push a, b one more stage and re-decide there
                let a2 = maps[k][a];
                let b2 = maps[k][b];
                let later = inductive_limit_stage(&stages, &maps, k + 1).unwrap();
                assert_eq!(
                    now,
                    later.pom.leq(later.class_of[a2], later.class_of[b2])
                );
            }
        }
    }

    #[test]
    fn weak_cancellation_passes_to_stage_data() {
        // every stage of the doubling system is cancellative-as-weak;
        // the stage-k limit data keeps it
        let (stages, maps) = doubling_system(2);
        for k in 0..stages.len() {
            let st = inductive_limit_stage(&stages, &maps, k).unwrap();
            assert_eq!(
                check_property(&stages[k], "weakly-cancellative", None)
                    .unwrap()
                    .is_holds(),
                check_property(&st.pom, "weakly-cancellative", None)
                    .unwrap()
                    .is_holds()
            );
        }
    }

    #[test]
    fn bad_maps_rejected() {
        let e1 = FinPom::elementary(1);
        let stages = vec![e1.clone(), e1.clone()];
        assert!(matches!(
            inductive_limit_stage(&stages, &[vec![0, 0, 0]], 0),
            Err(CompletionError::BadMap { .. })
        ));
        assert!(matches!(
            inductive_limit_stage(&stages, &[vec![0, 2]], 0),
            Err(CompletionError::BadMap { .. })
        ));
    }
}
