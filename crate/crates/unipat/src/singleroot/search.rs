//! Constrained search for arms of a hook.
//!
//! Each pair `{β, α−β}` of the hook sends one root to the arm and the other to
//! the leg. The search runs in two phases over the same pruned space:
//!
//! 1. find an arm with a closed source and `ℓ ∪ k ⊴ s` (the normal case);
//! 2. failing that, minimize `|ℓ̄|` over arms with a closed source whose
//!    enlarged leg is admissible.
//!
//! Before branching, the hook roots that lie in `N_γ ∩ N_γ' ∩ h(α)` are put in
//! the leg, where `(γ, γ')` is the decomposition of `α` with the largest first
//! index and `N_γ` is the normal closure of `{γ}` in the closed pattern
//! generated by `(Φ+ ∖ h(α)) ∪ {γ}`. Source closure is propagated as Horn
//! clauses: an arm root `β = γ + γ'` needs `γ` or `γ'` in the arm.
//!
//! Pairs are branched in increasing order of their smaller root, smaller root
//! to the arm first, so complete assignments are visited in increasing
//! lexicographic order of the arm. The first hit of phase 1 and the first
//! optimum of phase 2 are therefore the lexicographically smallest arms.

use std::collections::HashSet;

use super::{sums_within, ArmSolution};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::patterns::{closure, is_closed, normal_closure};
use crate::rootspace::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Commit `N_γ ∩ N_γ' ∩ h(α)` to the leg before branching.
    pub precommit: bool,
    /// Propagate necessary conditions at every node. Without it the search
    /// only checks complete assignments.
    pub propagate: bool,
    /// Attach subhook certificates to non-normal solutions.
    pub subhooks: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            precommit: true,
            propagate: true,
            subhooks: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// `(|h(α)| − 1) / 2`.
    pub hook_pairs: usize,
    /// The decomposition `(γ, γ')` with the largest first index.
    pub pivot: Option<(usize, usize)>,
    /// `|N_γ ∩ N_γ' ∩ h(α)|`.
    pub forced_leg: usize,
    /// Pairs still undecided after the precommit.
    pub free_pairs: usize,
    /// Search nodes expanded over both phases.
    pub nodes: u64,
    /// Distinct complete assignments that were evaluated.
    pub assignments: u64,
}

impl SearchStats {
    /// `2^free_pairs`: the size of the branch space left after the precommit.
    pub fn branch_space(&self) -> u128 {
        1u128 << self.free_pairs
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Normal,
    Minimize,
}

#[derive(Clone)]
struct State {
    arm: Pattern,
    leg: Pattern,
}

struct Ctx<'a> {
    rs: &'a RootSystem,
    alpha: usize,
    /// `h(α) ∖ {α}`.
    petals: Pattern,
    kernel: Pattern,
    partner: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    propagate: bool,
    nodes: u64,
    seen: HashSet<Pattern>,
    best: Option<(usize, Pattern)>,
}

impl Ctx<'_> {
    fn unknown(&self, st: &State, x: usize) -> bool {
        self.petals.contains(x) && !st.arm.contains(x) && !st.leg.contains(x)
    }

    fn set_arm(&self, st: &mut State, x: usize) -> bool {
        if !self.petals.contains(x) || st.leg.contains(x) {
            return false;
        }
        if !st.arm.insert(x) {
            return true;
        }
        let p = self.partner[x];
        if st.arm.contains(p) {
            return false;
        }
        st.leg.insert(p);
        true
    }

    fn set_leg(&self, st: &mut State, x: usize) -> bool {
        self.petals.contains(x) && self.set_arm(st, self.partner[x])
    }

    /// Lower part of the source known so far: everything not in the arm
    /// and not undecided.
    fn known_source(&self, st: &State) -> Pattern {
        let undecided = self.petals.difference(&st.arm).difference(&st.leg);
        st.arm.union(&undecided).complement()
    }

    /// Applies the necessary conditions until nothing changes. Returns false
    /// on a contradiction.
    fn propagate(&self, st: &mut State, phase: Phase) -> bool {
        let rs = self.rs;
        loop {
            let mut changed = false;

            // Closed source: β ∈ arm and β = γ+γ' needs γ or γ' in the arm.
            for x in st.arm.to_vec() {
                for &(u, v) in rs.decompositions(x) {
                    if st.arm.contains(u) || st.arm.contains(v) {
                        continue;
                    }
                    match (self.unknown(st, u), self.unknown(st, v)) {
                        (false, false) => return false,
                        (false, true) => {
                            if !self.set_arm(st, v) {
                                return false;
                            }
                            changed = true;
                        }
                        (true, false) => {
                            if !self.set_arm(st, u) {
                                return false;
                            }
                            changed = true;
                        }
                        (true, true) => {}
                    }
                }
            }

            match phase {
                Phase::Normal => {
                    // {α} ∪ ℓ ∪ k ⊴ Φ+, which also gives ℓ ∪ k ⊴ s.
                    let mut target = st.leg.union(&self.kernel);
                    target.insert(self.alpha);
                    for y in target.to_vec() {
                        for x in rs.addable(y).iter() {
                            let z = rs.root_sum(x, y).unwrap();
                            if target.contains(z) {
                                continue;
                            }
                            if !self.unknown(st, z) || !self.set_leg(st, z) {
                                return false;
                            }
                            target.insert(z);
                            changed = true;
                        }
                    }
                    if !sums_within(rs, &st.leg, &self.kernel) {
                        return false;
                    }
                }
                Phase::Minimize => {
                    let cl = self.closure_bound(st);
                    if cl.contains(self.alpha) {
                        return false;
                    }
                    // {α} ∪ ℓ̄ ∪ k ⊴ Φ+ puts every sum out of cl ∪ {α} in the source,
                    // so such sums cannot be arm roots.
                    let mut grow = cl.clone();
                    grow.insert(self.alpha);
                    for y in grow.iter() {
                        for x in rs.addable(y).iter() {
                            let z = rs.root_sum(x, y).unwrap();
                            if st.arm.contains(z) {
                                return false;
                            }
                            if self.unknown(st, z) {
                                if !self.set_leg(st, z) {
                                    return false;
                                }
                                changed = true;
                            }
                        }
                    }
                    if !sums_within(rs, &cl.difference(&self.kernel), &self.kernel) {
                        return false;
                    }
                }
            }

            if !changed {
                return true;
            }
        }
    }

    /// `ncl(ℓ ∪ k)` inside the known part of the source: a subset of the final
    /// `ℓ̄ ∪ k` for every completion of `st`.
    fn closure_bound(&self, st: &State) -> Pattern {
        normal_closure(self.rs, &st.leg.union(&self.kernel), &self.known_source(st))
    }

    fn next_pair(&self, st: &State) -> Option<(usize, usize)> {
        self.pairs
            .iter()
            .copied()
            .find(|&(a, _)| self.unknown(st, a))
    }

    fn free_pairs(&self, st: &State) -> usize {
        self.pairs
            .iter()
            .filter(|&&(a, _)| self.unknown(st, a))
            .count()
    }

    fn leaf(&mut self, st: &State, phase: Phase) -> Option<ArmSolution> {
        self.seen.insert(st.arm.clone());
        let sol = ArmSolution::from_arm_with_kernel(
            self.rs,
            self.alpha,
            st.arm.clone(),
            self.kernel.clone(),
        );
        match phase {
            Phase::Normal => {
                (sol.normal_flag && sol.enlarged_leg_admissible(self.rs)).then_some(sol)
            }
            Phase::Minimize => {
                if is_closed(self.rs, &sol.source) && sol.enlarged_leg_admissible(self.rs) {
                    let size = sol.enlarged_leg.len();
                    if self.best.as_ref().is_none_or(|(b, _)| size < *b) {
                        self.best = Some((size, st.arm.clone()));
                    }
                }
                None
            }
        }
    }

    /// Phase 1 stops at the first hit; phase 2 keeps the best in `self.best`.
    fn dfs(&mut self, mut st: State, phase: Phase) -> Option<ArmSolution> {
        self.nodes += 1;
        if self.propagate {
            if !self.propagate(&mut st, phase) {
                return None;
            }
            if phase == Phase::Minimize {
                if let Some((best, _)) = self.best {
                    let cl = self.closure_bound(&st);
                    let lb = cl.difference(&self.kernel).len() + self.free_pairs(&st);
                    if lb >= best {
                        return None;
                    }
                }
            }
        }
        let Some((a, b)) = self.next_pair(&st) else {
            return self.leaf(&st, phase);
        };
        for x in [a, b] {
            let mut child = st.clone();
            if self.set_arm(&mut child, x) {
                if let Some(sol) = self.dfs(child, phase) {
                    return Some(sol);
                }
            }
        }
        None
    }
}

/// Searches for an arm of `h(α)` with the default pruning.
pub fn arm_search(rs: &RootSystem, alpha: usize) -> Result<(ArmSolution, SearchStats)> {
    arm_search_with(rs, alpha, SearchOptions::default())
}

pub fn arm_search_with(
    rs: &RootSystem,
    alpha: usize,
    opts: SearchOptions,
) -> Result<(ArmSolution, SearchStats)> {
    let hook = rs.hook(alpha);
    let mut petals = hook.clone();
    petals.remove(alpha);
    let pairs = rs.decompositions(alpha).to_vec();
    let mut partner = vec![usize::MAX; rs.len()];
    for &(a, b) in &pairs {
        partner[a] = b;
        partner[b] = a;
    }
    let mut ctx = Ctx {
        rs,
        alpha,
        petals,
        kernel: super::k_pattern(rs, alpha),
        partner,
        pairs,
        propagate: opts.propagate,
        nodes: 0,
        seen: HashSet::new(),
        best: None,
    };
    let mut stats = SearchStats {
        hook_pairs: ctx.pairs.len(),
        ..Default::default()
    };

    let mut root = State {
        arm: rs.empty_pattern(),
        leg: rs.empty_pattern(),
    };
    if let Some(&(g, g2)) = ctx.pairs.last() {
        stats.pivot = Some((g, g2));
        if opts.precommit {
            let forced = forced_leg(rs, &hook, g, g2);
            stats.forced_leg = forced.len();
            for z in &forced {
                if !ctx.set_leg(&mut root, z) {
                    return Err(Error::NoAdmissibleArm(alpha));
                }
            }
        }
    }
    stats.free_pairs = ctx.free_pairs(&root);

    let found = ctx.dfs(root.clone(), Phase::Normal);
    let mut sol = match found {
        Some(sol) => sol,
        None => {
            ctx.dfs(root, Phase::Minimize);
            let (_, arm) = ctx.best.take().ok_or(Error::NoAdmissibleArm(alpha))?;
            ArmSolution::from_arm_with_kernel(rs, alpha, arm, ctx.kernel.clone())
        }
    };
    stats.nodes = ctx.nodes;
    stats.assignments = ctx.seen.len() as u64;

    if opts.subhooks && !sol.normal_flag {
        for beta in sol.leg_excess().iter() {
            let cert = super::subhook_search(rs, &sol, beta)?;
            sol.subhooks.insert(beta, cert);
        }
    }
    Ok((sol, stats))
}

/// `N_γ ∩ N_γ' ∩ h(α)`.
fn forced_leg(rs: &RootSystem, hook: &Pattern, g: usize, g2: usize) -> Pattern {
    let heart = hook.complement();
    let n_of = |x: usize| {
        let mut m = heart.clone();
        m.insert(x);
        let s = closure(rs, &m);
        normal_closure(rs, &Pattern::singleton(rs.len(), x), &s)
    };
    n_of(g).intersection(&n_of(g2)).intersection(hook)
}
