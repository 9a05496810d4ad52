//! Exact rational linear feasibility by Fourier–Motzkin elimination.
//! Systems here have at most one variable per carrier element, so
//! the doubly exponential worst case never bites at desk scale.

use crate::rational::Q;
use num_traits::{Signed, Zero};

/// `eqs`: rows `(c, d)` meaning `Σ c_i x_i = d`;
/// `ineqs`: rows meaning `Σ c_i x_i ≤ d`.
#[derive(Clone, Debug, Default)]
pub struct LinSystem {
    pub nvars: usize,
    pub eqs: Vec<(Vec<Q>, Q)>,
    pub ineqs: Vec<(Vec<Q>, Q)>,
}

impl LinSystem {
    pub fn new(nvars: usize) -> Self {
        LinSystem {
            nvars,
            eqs: Vec::new(),
            ineqs: Vec::new(),
        }
    }

    pub fn eq(&mut self, coeffs: Vec<Q>, rhs: Q) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        self.eqs.push((coeffs, rhs));
    }

    pub fn le(&mut self, coeffs: Vec<Q>, rhs: Q) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        self.ineqs.push((coeffs, rhs));
    }
}

/// Returns a satisfying assignment, or None when infeasible.
pub fn feasible(sys: &LinSystem) -> Option<Vec<Q>> {
    let n = sys.nvars;
    let mut eqs = sys.eqs.clone();
    let mut ineqs = sys.ineqs.clone();

    // Gaussian elimination on the equalities; record pivots for
    // back-substitution.
    let mut pivots: Vec<(usize, Vec<Q>, Q)> = Vec::new(); // (var, row, rhs)
    let mut row = 0;
    while row < eqs.len() {
        let (coeffs, rhs) = eqs[row].clone();
        match (0..n).find(|&j| !coeffs[j].is_zero()) {
            None => {
                if !rhs.is_zero() {
                    return None; // 0 = nonzero
                }
                eqs.remove(row);
            }
            Some(p) => {
                let cp = coeffs[p].clone();
                let norm: Vec<Q> = coeffs.iter().map(|c| c / &cp).collect();
                let nrhs = &rhs / &cp;
                for (c2, r2) in eqs.iter_mut().skip(row + 1) {
                    if !c2[p].is_zero() {
                        let f = c2[p].clone();
                        for j in 0..n {
                            c2[j] = &c2[j] - &(&f * &norm[j]);
                        }
                        *r2 = &*r2 - &(&f * &nrhs);
                    }
                }
                for (c2, r2) in ineqs.iter_mut() {
                    if !c2[p].is_zero() {
                        let f = c2[p].clone();
                        for j in 0..n {
                            c2[j] = &c2[j] - &(&f * &norm[j]);
                        }
                        *r2 = &*r2 - &(&f * &nrhs);
                    }
                }
                pivots.push((p, norm, nrhs));
                eqs.remove(row);
            }
        }
    }

    // Fourier–Motzkin on the remaining inequalities.
    let free: Vec<usize> = (0..n)
        .filter(|j| !pivots.iter().any(|(p, _, _)| p == j))
        .collect();
    let mut elim_stack: Vec<(usize, Vec<(Vec<Q>, Q)>)> = Vec::new();
    let mut current = ineqs;
    for &v in &free {
        let mut lower = Vec::new(); // rows with negative coefficient on v
        let mut upper = Vec::new(); // positive coefficient
        let mut rest = Vec::new();
        for (c, d) in current.into_iter() {
            if c[v].is_zero() {
                rest.push((c, d));
            } else if c[v].is_positive() {
                upper.push((c, d));
            } else {
                lower.push((c, d));
            }
        }
        elim_stack.push((v, lower.iter().chain(upper.iter()).cloned().collect()));
        for (cl, dl) in &lower {
            for (cu, du) in &upper {
                // combine to cancel v
                let a = -cl[v].clone(); // positive
                let b = cu[v].clone(); // positive
                let mut c = vec![Q::zero(); n];
                for j in 0..n {
                    c[j] = &(&b * &cl[j]) + &(&a * &cu[j]);
                }
                let d = &(&b * dl) + &(&a * du);
                rest.push((c, d));
            }
        }
        current = rest;
    }
    // all variables eliminated: rows must read 0 ≤ d
    for (c, d) in &current {
        debug_assert!(c.iter().all(|x| x.is_zero()));
        if d.is_negative() {
            return None;
        }
    }

    // Back-substitute: pick values for the eliminated variables in reverse.
    let mut val = vec![Q::zero(); n];
    let mut assigned = vec![false; n];
    for (v, rows) in elim_stack.into_iter().rev() {
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for (c, d) in &rows {
            // Σ c_j x_j ≤ d with every variable but v already assigned
            let mut rest = Q::zero();
            for j in 0..n {
                if j != v && !c[j].is_zero() {
                    debug_assert!(assigned[j] || c[j].is_zero());
                    rest = &rest + &(&c[j] * &val[j]);
                }
            }
            let bound = &(d - &rest) / &c[v];
            if c[v].is_positive() {
                hi = Some(match hi {
                    None => bound,
                    Some(h) => h.min(bound),
                });
            } else {
                lo = Some(match lo {
                    None => bound,
                    Some(l) => l.max(bound),
                });
            }
        }
        let x = match (lo, hi) {
            (Some(l), Some(h)) => {
                if l > h {
                    return None;
                }
                l
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Q::zero(),
        };
        val[v] = x;
        assigned[v] = true;
    }
    // pivot variables from the recorded equality rows, in reverse order
    for (p, norm, rhs) in pivots.into_iter().rev() {
        let mut x = rhs;
        for j in 0..n {
            if j != p && !norm[j].is_zero() {
                x = &x - &(&norm[j] * &val[j]);
            }
        }
        val[p] = x;
        assigned[p] = true;
    }

    // final verification against the original system
    let ok = sys.eqs.iter().all(|(c, d)| {
        let lhs = c
            .iter()
            .zip(&val)
            .fold(Q::zero(), |acc, (ci, xi)| &acc + &(ci * xi));
        &lhs == d
    }) && sys.ineqs.iter().all(|(c, d)| {
        let lhs = c
            .iter()
            .zip(&val)
            .fold(Q::zero(), |acc, (ci, xi)| &acc + &(ci * xi));
        &lhs <= d
    });
    if ok {
        Some(val)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_int};

    #[test]
    fn simple_feasible_system() {
        // x + y = 1, x ≥ 0, y ≥ 0, x ≤ 1/3
        let mut s = LinSystem::new(2);
        s.eq(vec![q_int(1), q_int(1)], q_int(1));
        s.le(vec![q_int(-1), q_int(0)], q_int(0));
        s.le(vec![q_int(0), q_int(-1)], q_int(0));
        s.le(vec![q_int(1), q_int(0)], q(1, 3));
        let v = feasible(&s).unwrap();
        assert_eq!(&v[0] + &v[1], q_int(1));
        assert!(v[0] <= q(1, 3));
    }

    #[test]
    fn infeasible_system() {
        // x = 1 and x = 2
        let mut s = LinSystem::new(1);
        s.eq(vec![q_int(1)], q_int(1));
        s.eq(vec![q_int(1)], q_int(2));
        assert!(feasible(&s).is_none());
        // x ≤ 0 and x ≥ 1
        let mut s = LinSystem::new(1);
        s.le(vec![q_int(1)], q_int(0));
        s.le(vec![q_int(-1)], q_int(-1));
        assert!(feasible(&s).is_none());
    }

    #[test]
    fn pure_inequalities() {
        // 2x + y ≤ 4, x − y ≤ 0, −x ≤ −1  (so x ≥ 1, y ≥ x)
        let mut s = LinSystem::new(2);
        s.le(vec![q_int(2), q_int(1)], q_int(4));
        s.le(vec![q_int(1), q_int(-1)], q_int(0));
        s.le(vec![q_int(-1), q_int(0)], q_int(-1));
        let v = feasible(&s).unwrap();
        assert!(&(&v[0] * &q_int(2)) + &v[1] <= q_int(4));
        assert!(v[0] >= q_int(1));
        assert!(v[1] >= v[0]);
    }
}
