//! Bidirectional breadth-first derivation search over formal sums.
//!
//! Forward states are provably `≥` the source, backward states provably `≤`
//! the target; the two meet through a final matching hop (termwise
//! relaxation plus zero-pair padding). Emitted certificates replay step by
//! step, each step instantiating exactly one defining relation: a one-sided
//! split or merge, a coordinatewise relaxation, or a zero-pair absorption.
//! Bounded search alone never yields a negative verdict.

use super::{FormalSum, TensorFactor, TensorVerdict};
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepKind {
    SplitLeft,
    SplitRight,
    MergeLeft,
    MergeRight,
    Relax,
    ZeroAbsorb,
}

/// A single rewriting step, identified by the terms it consumes and
/// produces. Multisets are kept sorted, so values determine positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Step<A, B> {
    /// `(a, b) → (p, b) + (q, b)` with `a = p + q`, parts nonzero.
    SplitLeft { pair: (A, B), parts: (A, A) },
    /// `(a, b) → (a, p) + (a, q)` with `b = p + q`, parts nonzero.
    SplitRight { pair: (A, B), parts: (B, B) },
    /// `(p, b) + (q, b) → (p + q, b)`.
    MergeLeft { first: (A, B), second: (A, B) },
    /// `(a, p) + (a, q) → (a, p + q)`.
    MergeRight { first: (A, B), second: (A, B) },
    /// `(a, b) → (a', b')` with `a ≤ a'` and `b ≤ b'`.
    Relax { from: (A, B), to: (A, B) },
    /// Insert or remove a pair with a zero coordinate.
    ZeroAbsorb { pair: (A, B), insert: bool },
}

impl<A, B> Step<A, B> {
    pub fn kind(&self) -> StepKind {
        match self {
            Step::SplitLeft { .. } => StepKind::SplitLeft,
            Step::SplitRight { .. } => StepKind::SplitRight,
            Step::MergeLeft { .. } => StepKind::MergeLeft,
            Step::MergeRight { .. } => StepKind::MergeRight,
            Step::Relax { .. } => StepKind::Relax,
            Step::ZeroAbsorb { .. } => StepKind::ZeroAbsorb,
        }
    }
}

/// A derivation chain; replaying it from the source yields the target.
#[derive(Clone, Debug)]
pub struct RewriteCertificate<A: Ord, B: Ord> {
    pub source: FormalSum<A, B>,
    pub target: FormalSum<A, B>,
    pub chain: Vec<Step<A, B>>,
}

/// Applies one step to a working multiset (zero-coordinate pairs permitted
/// transiently); None when the step does not apply.
pub(crate) fn apply_step<L: TensorFactor, R: TensorFactor>(
    left: &L,
    right: &R,
    state: &[(L::Elem, R::Elem)],
    step: &Step<L::Elem, R::Elem>,
) -> Option<Vec<(L::Elem, R::Elem)>> {
    let mut out: Vec<(L::Elem, R::Elem)> = state.to_vec();
    fn remove<T: PartialEq>(v: &mut Vec<T>, t: &T) -> bool {
        match v.iter().position(|x| x == t) {
            Some(i) => {
                v.remove(i);
                true
            }
            None => false,
        }
    }
    match step {
        Step::SplitLeft { pair, parts } => {
            if left.add(&parts.0, &parts.1) != pair.0
                || left.is_zero(&parts.0)
                || left.is_zero(&parts.1)
                || !remove(&mut out, pair)
            {
                return None;
            }
            out.push((parts.0.clone(), pair.1.clone()));
            out.push((parts.1.clone(), pair.1.clone()));
        }
        Step::SplitRight { pair, parts } => {
            if right.add(&parts.0, &parts.1) != pair.1
                || right.is_zero(&parts.0)
                || right.is_zero(&parts.1)
                || !remove(&mut out, pair)
            {
                return None;
            }
            out.push((pair.0.clone(), parts.0.clone()));
            out.push((pair.0.clone(), parts.1.clone()));
        }
        Step::MergeLeft { first, second } => {
            if first.1 != second.1 || !remove(&mut out, first) || !remove(&mut out, second) {
                return None;
            }
            out.push((left.add(&first.0, &second.0), first.1.clone()));
        }
        Step::MergeRight { first, second } => {
            if first.0 != second.0 || !remove(&mut out, first) || !remove(&mut out, second) {
                return None;
            }
            out.push((first.0.clone(), right.add(&first.1, &second.1)));
        }
        Step::Relax { from, to } => {
            if !left.leq(&from.0, &to.0)
                || !right.leq(&from.1, &to.1)
                || !remove(&mut out, from)
            {
                return None;
            }
            out.push(to.clone());
        }
        Step::ZeroAbsorb { pair, insert } => {
            if !left.is_zero(&pair.0) && !right.is_zero(&pair.1) {
                return None;
            }
            if *insert {
                out.push(pair.clone());
            } else if !remove(&mut out, pair) {
                return None;
            }
        }
    }
    out.sort();
    Some(out)
}

/// Replays a certificate against its source; errors on any illegal step or a
/// final-state mismatch.
pub fn replay<L: TensorFactor, R: TensorFactor>(
    left: &L,
    right: &R,
    cert: &RewriteCertificate<L::Elem, R::Elem>,
) -> Result<(), super::TensorError> {
    let mut state: Vec<(L::Elem, R::Elem)> = cert.source.terms.clone();
    for (i, step) in cert.chain.iter().enumerate() {
        state = apply_step(left, right, &state, step)
            .ok_or_else(|| super::TensorError::Replay(format!("step {i} does not apply")))?;
    }
    let canonical = super::formal_sum(left, right, state);
    if canonical == cert.target {
        Ok(())
    } else {
        Err(super::TensorError::Replay(
            "final state differs from target".into(),
        ))
    }
}

pub struct Engine<'a, L: TensorFactor, R: TensorFactor> {
    pub left: &'a L,
    pub right: &'a R,
    pub depth: u64,
    pub size_bound: usize,
    /// Per-side state cap; exceeding it degrades the verdict to Unknown.
    pub max_states: usize,
}

struct Explored<L: TensorFactor, R: TensorFactor> {
    states: Vec<FormalSum<L::Elem, R::Elem>>,
    parent: Vec<Option<(usize, Step<L::Elem, R::Elem>)>>,
}

impl<'a, L: TensorFactor, R: TensorFactor> Engine<'a, L, R> {
    pub fn new(left: &'a L, right: &'a R, depth: u64, size_bound: usize) -> Self {
        Engine {
            left,
            right,
            depth,
            size_bound,
            max_states: 4000,
        }
    }

    fn canonical(
        &self,
        terms: Vec<(L::Elem, R::Elem)>,
    ) -> FormalSum<L::Elem, R::Elem> {
        super::formal_sum(self.left, self.right, terms)
    }

    /// Successors of `s`. Forward steps keep `s ≤ successor`; backward steps
    /// keep `successor ≤ s`, and the recorded step is written in the
    /// forward reading (applying it to the successor restores `s`).
    fn successors(
        &self,
        s: &FormalSum<L::Elem, R::Elem>,
        goal: &FormalSum<L::Elem, R::Elem>,
        forward: bool,
    ) -> Vec<(Step<L::Elem, R::Elem>, FormalSum<L::Elem, R::Elem>)> {
        let mut out = Vec::new();
        let terms = &s.terms;
        for (i, (a, b)) in terms.iter().enumerate() {
            if terms.len() < self.size_bound {
                for (p, q) in self.left.splits(a) {
                    let mut next = terms.clone();
                    next.remove(i);
                    next.push((p.clone(), b.clone()));
                    next.push((q.clone(), b.clone()));
                    let step = if forward {
                        Step::SplitLeft {
                            pair: (a.clone(), b.clone()),
                            parts: (p, q),
                        }
                    } else {
                        Step::MergeLeft {
                            first: (p, b.clone()),
                            second: (q, b.clone()),
                        }
                    };
                    out.push((step, self.canonical(next)));
                }
                for (p, q) in self.right.splits(b) {
                    let mut next = terms.clone();
                    next.remove(i);
                    next.push((a.clone(), p.clone()));
                    next.push((a.clone(), q.clone()));
                    let step = if forward {
                        Step::SplitRight {
                            pair: (a.clone(), b.clone()),
                            parts: (p, q),
                        }
                    } else {
                        Step::MergeRight {
                            first: (a.clone(), p),
                            second: (a.clone(), q),
                        }
                    };
                    out.push((step, self.canonical(next)));
                }
            }
        }
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                if terms[i].1 == terms[j].1 {
                    let merged = (
                        self.left.add(&terms[i].0, &terms[j].0),
                        terms[i].1.clone(),
                    );
                    let mut next = terms.clone();
                    next.remove(j);
                    next.remove(i);
                    next.push(merged.clone());
                    let step = if forward {
                        Step::MergeLeft {
                            first: terms[i].clone(),
                            second: terms[j].clone(),
                        }
                    } else {
                        Step::SplitLeft {
                            pair: merged,
                            parts: (terms[i].0.clone(), terms[j].0.clone()),
                        }
                    };
                    out.push((step, self.canonical(next)));
                }
                if terms[i].0 == terms[j].0 {
                    let merged = (
                        terms[i].0.clone(),
                        self.right.add(&terms[i].1, &terms[j].1),
                    );
                    let mut next = terms.clone();
                    next.remove(j);
                    next.remove(i);
                    next.push(merged.clone());
                    let step = if forward {
                        Step::MergeRight {
                            first: terms[i].clone(),
                            second: terms[j].clone(),
                        }
                    } else {
                        Step::SplitRight {
                            pair: merged,
                            parts: (terms[i].1.clone(), terms[j].1.clone()),
                        }
                    };
                    out.push((step, self.canonical(next)));
                }
            }
        }
        if forward {
            // relax upward, targets drawn from the goal's coordinates
            for (i, (a, b)) in terms.iter().enumerate() {
                for (ga, gb) in goal.terms.iter() {
                    for to in [
                        (ga.clone(), b.clone()),
                        (a.clone(), gb.clone()),
                        (ga.clone(), gb.clone()),
                    ] {
                        if to == terms[i]
                            || !self.left.leq(a, &to.0)
                            || !self.right.leq(b, &to.1)
                        {
                            continue;
                        }
                        let mut next = terms.clone();
                        next.remove(i);
                        next.push(to.clone());
                        out.push((
                            Step::Relax {
                                from: (a.clone(), b.clone()),
                                to,
                            },
                            self.canonical(next),
                        ));
                    }
                }
            }
            // pad a goal term; encoded as a relax from a zero pair and
            // expanded to zero-insert + relax when the chain is assembled
            if terms.len() < self.size_bound {
                for gt in goal.terms.iter() {
                    let mut next = terms.clone();
                    next.push(gt.clone());
                    out.push((
                        Step::Relax {
                            from: (self.left.zero(), gt.1.clone()),
                            to: gt.clone(),
                        },
                        self.canonical(next),
                    ));
                }
            }
        } else {
            // relax downward within enumerable down-sets
            for (i, (a, b)) in terms.iter().enumerate() {
                if let (Some(da), Some(db)) = (self.left.down(a), self.right.down(b)) {
                    for xa in &da {
                        for xb in &db {
                            if xa == a && xb == b {
                                continue;
                            }
                            let mut next = terms.clone();
                            next.remove(i);
                            if !self.left.is_zero(xa) && !self.right.is_zero(xb) {
                                next.push((xa.clone(), xb.clone()));
                            }
                            out.push((
                                Step::Relax {
                                    from: (xa.clone(), xb.clone()),
                                    to: (a.clone(), b.clone()),
                                },
                                self.canonical(next),
                            ));
                        }
                    }
                }
            }
            // drop a term entirely (a pad, read forward)
            for (i, t) in terms.iter().enumerate() {
                let mut next = terms.clone();
                next.remove(i);
                out.push((
                    Step::Relax {
                        from: (self.left.zero(), t.1.clone()),
                        to: t.clone(),
                    },
                    self.canonical(next),
                ));
            }
        }
        out
    }

    fn explore(
        &self,
        start: &FormalSum<L::Elem, R::Elem>,
        goal: &FormalSum<L::Elem, R::Elem>,
        forward: bool,
    ) -> Explored<L, R> {
        let mut ex = Explored {
            states: vec![start.clone()],
            parent: vec![None],
        };
        let mut index: HashMap<FormalSum<L::Elem, R::Elem>, usize> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut queue: VecDeque<(usize, u64)> = VecDeque::new();
        queue.push_back((0, 0));
        while let Some((si, d)) = queue.pop_front() {
            if d >= self.depth {
                continue;
            }
            let state = ex.states[si].clone();
            for (step, next) in self.successors(&state, goal, forward) {
                if next.terms.len() > self.size_bound || index.contains_key(&next) {
                    continue;
                }
                if ex.states.len() >= self.max_states {
                    return ex;
                }
                let ni = ex.states.len();
                ex.states.push(next.clone());
                ex.parent.push(Some((si, step)));
                index.insert(next, ni);
                queue.push_back((ni, d + 1));
            }
        }
        ex
    }

    /// Injection of `h`'s terms into `g`'s terms with coordinatewise ≤.
    fn match_into(
        &self,
        h: &FormalSum<L::Elem, R::Elem>,
        g: &FormalSum<L::Elem, R::Elem>,
    ) -> Option<Vec<usize>> {
        if h.terms.len() > g.terms.len() {
            return None;
        }
        let mut assign = vec![usize::MAX; h.terms.len()];
        let mut used = vec![false; g.terms.len()];
        fn go<L: TensorFactor, R: TensorFactor>(
            eng: &Engine<L, R>,
            h: &[(L::Elem, R::Elem)],
            g: &[(L::Elem, R::Elem)],
            i: usize,
            assign: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == h.len() {
                return true;
            }
            for j in 0..g.len() {
                if used[j] || !eng.left.leq(&h[i].0, &g[j].0) || !eng.right.leq(&h[i].1, &g[j].1)
                {
                    continue;
                }
                used[j] = true;
                assign[i] = j;
                if go(eng, h, g, i + 1, assign, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        if go(self, &h.terms, &g.terms, 0, &mut assign, &mut used) {
            Some(assign)
        } else {
            None
        }
    }

    /// Steps realizing a matching `h ↪ g`: relax matched terms, pad the
    /// rest (pads written as zero-source relaxes, expanded later).
    fn matching_steps(
        &self,
        h: &FormalSum<L::Elem, R::Elem>,
        g: &FormalSum<L::Elem, R::Elem>,
        assign: &[usize],
    ) -> Vec<Step<L::Elem, R::Elem>> {
        let mut steps = Vec::new();
        let mut covered = vec![false; g.terms.len()];
        for (i, &j) in assign.iter().enumerate() {
            covered[j] = true;
            if h.terms[i] != g.terms[j] {
                steps.push(Step::Relax {
                    from: h.terms[i].clone(),
                    to: g.terms[j].clone(),
                });
            }
        }
        for (j, c) in covered.iter().enumerate() {
            if !c {
                let t = &g.terms[j];
                steps.push(Step::Relax {
                    from: (self.left.zero(), t.1.clone()),
                    to: t.clone(),
                });
            }
        }
        steps
    }

    fn path_from_root(
        &self,
        ex: &Explored<L, R>,
        mut i: usize,
    ) -> Vec<Step<L::Elem, R::Elem>> {
        let mut steps = Vec::new();
        while let Some((pi, step)) = &ex.parent[i] {
            steps.push(step.clone());
            i = *pi;
        }
        steps.reverse();
        steps
    }

    /// Expands zero-source relaxes into the two relations they compose:
    /// a zero-pair insertion followed by a coordinatewise relaxation.
    fn expand_pads(
        &self,
        steps: Vec<Step<L::Elem, R::Elem>>,
    ) -> Vec<Step<L::Elem, R::Elem>> {
        let mut out = Vec::new();
        for s in steps {
            match &s {
                Step::Relax { from, to } if self.left.is_zero(&from.0) || self.right.is_zero(&from.1) => {
                    out.push(Step::ZeroAbsorb {
                        pair: from.clone(),
                        insert: true,
                    });
                    out.push(Step::Relax {
                        from: from.clone(),
                        to: to.clone(),
                    });
                }
                _ => out.push(s),
            }
        }
        out
    }

    /// Decides `f ≤ g` by bidirectional search; Yes with certificate, or
    /// Unknown. Negative verdicts are the business of certified saturation.
    pub fn leq(
        &self,
        f: &FormalSum<L::Elem, R::Elem>,
        g: &FormalSum<L::Elem, R::Elem>,
    ) -> TensorVerdict<L::Elem, R::Elem> {
        if let Some(assign) = self.match_into(f, g) {
            let chain = self.expand_pads(self.matching_steps(f, g, &assign));
            return TensorVerdict::Yes(RewriteCertificate {
                source: f.clone(),
                target: g.clone(),
                chain,
            });
        }
        let fwd = self.explore(f, g, true);
        let bwd = self.explore(g, f, false);
        for (fi, fs) in fwd.states.iter().enumerate() {
            for (bi, bs) in bwd.states.iter().enumerate() {
                if fs.terms.len() > bs.terms.len() {
                    continue;
                }
                if let Some(assign) = self.match_into(fs, bs) {
                    let mut chain = self.expand_pads(self.path_from_root(&fwd, fi));
                    chain.extend(self.expand_pads(self.matching_steps(fs, bs, &assign)));
                    let mut back = self.path_from_root(&bwd, bi);
                    back.reverse();
                    chain.extend(self.expand_pads(back));
                    return TensorVerdict::Yes(RewriteCertificate {
                        source: f.clone(),
                        target: g.clone(),
                        chain,
                    });
                }
            }
        }
        TensorVerdict::Unknown {
            depth: self.depth,
            frontier: fwd.states.len() + bwd.states.len(),
        }
    }

    /// Decides `f ≅ g` (both inequalities), returning both certificates.
    pub fn equiv(
        &self,
        f: &FormalSum<L::Elem, R::Elem>,
        g: &FormalSum<L::Elem, R::Elem>,
    ) -> Option<(
        RewriteCertificate<L::Elem, R::Elem>,
        RewriteCertificate<L::Elem, R::Elem>,
    )> {
        match (self.leq(f, g), self.leq(g, f)) {
            (TensorVerdict::Yes(c1), TensorVerdict::Yes(c2)) => Some((c1, c2)),
            _ => None,
        }
    }
}
