//! Single-root machinery: the patterns n(α), k(α), w(α), kernels of
//! representable sets, arms and legs of hooks, and midafi summaries.

mod classical;
mod midafi;
mod search;
mod subhook;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::patterns::{
    self, commutator_roots, is_antichain, is_closed, is_normal_in, normal_closure, normalizes,
};
use crate::rootspace::RootSystem;

pub use classical::classical_arm;
pub use midafi::{midafi_row, midafi_table, solve_all, solve_root, MidafiRow};
pub use search::{arm_search, arm_search_with, SearchOptions, SearchStats};
pub use subhook::{check_subhook, subhook_search, SubhookCertificate, SubhookChecks};

/// `n(α)`: the normal closure of `{α}` in `Φ+`, with `α` removed.
pub fn n_pattern(rs: &RootSystem, alpha: usize) -> Pattern {
    let full = rs.full_pattern();
    let mut cur = Pattern::singleton(rs.len(), alpha);
    let mut acc = cur.clone();
    // n_i = {β+γ | β ∈ n_{i-1}, γ ∈ Φ+} ∩ Φ+
    while !cur.is_empty() {
        let mut next = rs.empty_pattern();
        for b in &cur {
            for g in rs.addable(b).intersection(&full).iter() {
                next.insert(rs.root_sum(g, b).unwrap());
            }
        }
        next.difference_with(&acc);
        acc.union_with(&next);
        cur = next;
    }
    acc.remove(alpha);
    acc
}

/// `k(α)`, computed by the iteration `k_0 = n(α)`,
/// `k_i = (rz(Φ+/k_{i−1}) ∖ {α}) ∪ k_{i−1}` until it stabilizes.
pub fn k_pattern(rs: &RootSystem, alpha: usize) -> Pattern {
    let full = rs.full_pattern();
    let mut k = n_pattern(rs, alpha);
    loop {
        let mut rz = patterns::center_unchecked(rs, &full, &k).difference(&k);
        rz.remove(alpha);
        if rz.is_empty() {
            return k;
        }
        k.union_with(&rz);
    }
}

/// `w(α) = {β | β ≼ α}`.
pub fn w_pattern(rs: &RootSystem, alpha: usize) -> Pattern {
    rs.down_set(alpha).clone()
}

/// `k(Σ) = ⋂_{α ∈ Σ} k(α)` for an antichain `Σ`; `Φ+` when `Σ` is empty.
pub fn k_sigma(rs: &RootSystem, sigma: &Pattern) -> Result<Pattern> {
    if !is_antichain(rs, sigma) {
        return Err(Error::NotAntichain);
    }
    let mut k = rs.full_pattern();
    for a in sigma {
        k.intersect_with(&k_pattern(rs, a));
    }
    Ok(k)
}

/// A hook together with its perfect matching `β ↔ α−β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookData {
    pub alpha: usize,
    pub hook: Pattern,
    pub pairs: Vec<(usize, usize)>,
}

impl HookData {
    pub fn new(rs: &RootSystem, alpha: usize) -> Self {
        HookData {
            alpha,
            hook: rs.hook(alpha),
            pairs: rs.decompositions(alpha).to_vec(),
        }
    }
}

/// One root's hook decomposition and the pattern data derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArmSolution {
    pub alpha: usize,
    pub hook: Pattern,
    pub arm: Pattern,
    pub leg: Pattern,
    pub source: Pattern,
    pub kernel: Pattern,
    /// `ℓ̄(α)`: the normal closure of `ℓ ∪ k` in the source, minus `k`.
    pub enlarged_leg: Pattern,
    /// Conditions (1) and (2) hold: closed source and `ℓ ∪ k ⊴ s`.
    pub normal_flag: bool,
    /// `s ∖ ({α} ∪ ℓ̄ ∪ k)`.
    pub tbar_roots: Pattern,
    pub subhooks: BTreeMap<usize, SubhookCertificate>,
}

impl ArmSolution {
    /// Completes an arm choice into the full set of derived patterns.
    ///
    /// The arm must pick exactly one root from every pair of the hook of `alpha`.
    pub fn from_arm(rs: &RootSystem, alpha: usize, arm: Pattern) -> Self {
        let kernel = k_pattern(rs, alpha);
        Self::from_arm_with_kernel(rs, alpha, arm, kernel)
    }

    pub(crate) fn from_arm_with_kernel(
        rs: &RootSystem,
        alpha: usize,
        arm: Pattern,
        kernel: Pattern,
    ) -> Self {
        let hook = rs.hook(alpha);
        debug_assert!(rs
            .decompositions(alpha)
            .iter()
            .all(|&(a, b)| arm.contains(a) != arm.contains(b)));
        let mut leg = hook.difference(&arm);
        leg.remove(alpha);
        let source = arm.complement();
        let lk = leg.union(&kernel);
        let closed = is_closed(rs, &source);
        let enlarged_leg = normal_closure(rs, &lk, &source).difference(&kernel);
        let normal_flag = closed && is_normal_in(rs, &lk, &source);
        let mut n = enlarged_leg.union(&kernel);
        n.insert(alpha);
        let tbar_roots = source.difference(&n);
        ArmSolution {
            alpha,
            hook,
            arm,
            leg,
            source,
            kernel,
            enlarged_leg,
            normal_flag,
            tbar_roots,
            subhooks: BTreeMap::new(),
        }
    }

    /// `|ℓ̄ ∖ ℓ|`.
    pub fn enlarged_leg_excess(&self) -> usize {
        self.enlarged_leg.difference(&self.leg).len()
    }

    /// Roots of `ℓ̄ ∖ ℓ`.
    pub fn leg_excess(&self) -> Pattern {
        self.enlarged_leg.difference(&self.leg)
    }

    /// The conditions required of an enlarged leg: `ℓ̄ ∪ k ⊴ s`,
    /// `{α} ∪ ℓ̄ ∪ k ⊴ Φ+`, `α ∉ ℓ̄`, and sums of two `ℓ̄` roots in `k`.
    pub fn enlarged_leg_admissible(&self, rs: &RootSystem) -> bool {
        let lk = self.enlarged_leg.union(&self.kernel);
        let mut alk = lk.clone();
        alk.insert(self.alpha);
        !self.enlarged_leg.contains(self.alpha)
            && is_normal_in(rs, &lk, &self.source)
            && is_normal_in(rs, &alk, &rs.full_pattern())
            && sums_within(rs, &self.enlarged_leg, &self.kernel)
    }
}

/// Every sum of two members of `p` that is a root lies in `target`.
pub(crate) fn sums_within(rs: &RootSystem, p: &Pattern, target: &Pattern) -> bool {
    p.iter().all(|y| {
        rs.addable(y)
            .intersection(p)
            .iter()
            .all(|x| target.contains(rs.root_sum(x, y).unwrap()))
    })
}

/// The four hypotheses of the reduction to a source group, hypothesis (4)
/// in its root-set form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RedHypotheses {
    /// (1) the source is closed.
    pub source_closed: bool,
    /// (2) `ℓ ∪ k ⊴ s`.
    pub leg_kernel_normal: bool,
    /// (3) `h ∪ k` is closed and the arm normalizes `{α} ∪ ℓ ∪ k`.
    pub hook_closed_arm_normalizes: bool,
    /// (4) the arm and leg pair up perfectly, and every nonempty set `T` of
    /// arm roots contains some `γ` whose partner `β = α − γ` has
    /// `[X_γ', X_β] ⊆ P(k)` for all other `γ' ∈ T`. Then any nontrivial
    /// `y` supported on `T` satisfies `{[y, x_β(t)]} = X_α` modulo `P(k)`.
    pub hook_special: bool,
}

impl RedHypotheses {
    pub fn all(&self) -> bool {
        self.source_closed
            && self.leg_kernel_normal
            && self.hook_closed_arm_normalizes
            && self.hook_special
    }
}

pub fn verify_red_hypotheses(rs: &RootSystem, sol: &ArmSolution) -> RedHypotheses {
    let alpha = sol.alpha;
    let lk = sol.leg.union(&sol.kernel);
    let mut alk = lk.clone();
    alk.insert(alpha);
    let hk = sol.hook.union(&sol.kernel);

    let pairing = sol.arm.len() == sol.leg.len()
        && sol.arm.is_disjoint(&sol.leg)
        && !sol.arm.contains(alpha)
        && !sol.leg.contains(alpha)
        && sol
            .arm
            .union(&sol.leg)
            .union(&Pattern::singleton(rs.len(), alpha))
            == sol.hook
        && sol.arm.iter().all(|b| {
            sol.leg
                .iter()
                .filter(|&g| rs.root_sum(b, g) == Some(alpha))
                .count()
                == 1
        });

    RedHypotheses {
        source_closed: is_closed(rs, &sol.source),
        leg_kernel_normal: is_normal_in(rs, &lk, &sol.source),
        hook_closed_arm_normalizes: is_closed(rs, &hk) && normalizes(rs, &sol.arm, &alk),
        hook_special: pairing && arm_conflicts_acyclic(rs, sol),
    }
}

/// The relation "`γ'` obstructs `γ`" on the arm, where `γ'` obstructs `γ`
/// when `[X_γ', X_{α−γ}]` leaves `P(k)`. Every subset of the arm has an
/// unobstructed member exactly when this relation has no cycle.
fn arm_conflicts_acyclic(rs: &RootSystem, sol: &ArmSolution) -> bool {
    let arm = sol.arm.to_vec();
    let mut indegree = vec![0usize; arm.len()];
    let mut edges = vec![Vec::new(); arm.len()];
    for (gi, &g) in arm.iter().enumerate() {
        let Some(beta) = rs.hook_partner(sol.alpha, g) else {
            return false;
        };
        for (oi, &other) in arm.iter().enumerate() {
            if oi != gi && !commutator_roots(rs, other, beta).is_subset(&sol.kernel) {
                edges[oi].push(gi);
                indegree[gi] += 1;
            }
        }
    }
    let mut ready: Vec<usize> = (0..arm.len()).filter(|&i| indegree[i] == 0).collect();
    let mut removed = 0;
    while let Some(i) = ready.pop() {
        removed += 1;
        for &j in &edges[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    removed == arm.len()
}
