//! Subhook certificates for roots of an enlarged leg.

use super::{sums_within, ArmSolution};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::patterns::{closure, is_closed, normalizes};
use crate::rootspace::RootSystem;

/// A subhook `h'(β)` of `h(β)` with a chosen arm and leg.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubhookCertificate {
    pub beta: usize,
    pub subhook: Pattern,
    pub sub_arm: Pattern,
    pub sub_leg: Pattern,
}

/// Outcome of the certificate conditions for a subhook `h'(β)` attached to
/// an arm solution for `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubhookChecks {
    /// `β ∈ h'`, `h'` is closed under `γ ↦ β−γ`, and the arm and leg pair up.
    pub well_formed: bool,
    /// (a) `h ∪ k`, `h' ∪ k` and the source are closed.
    pub closed: bool,
    /// (b) `closure(h ∪ h' ∪ k) ∖ a` normalizes `ℓ ∪ k`.
    pub normalizes_leg: bool,
    /// (c) `(h ∪ k) ∩ h' = ∅`.
    pub disjoint: bool,
    /// Sums of two roots of `h'` land in `{β} ∪ k`.
    pub special: bool,
    /// `|a'(β)| ≥ 1`.
    pub nontrivial: bool,
}

impl SubhookChecks {
    pub fn all(&self) -> bool {
        self.well_formed
            && self.closed
            && self.normalizes_leg
            && self.disjoint
            && self.special
            && self.nontrivial
    }
}

pub fn check_subhook(
    rs: &RootSystem,
    sol: &ArmSolution,
    cert: &SubhookCertificate,
) -> SubhookChecks {
    let beta = cert.beta;
    let h2 = &cert.subhook;
    let k = &sol.kernel;

    let mut petals = h2.clone();
    petals.remove(beta);
    let well_formed = h2.contains(beta)
        && petals.iter().all(|g| {
            rs.hook_partner(beta, g).is_some_and(|p| {
                h2.contains(p) && cert.sub_arm.contains(g) != cert.sub_arm.contains(p)
            })
        })
        && cert.sub_arm.union(&cert.sub_leg) == petals
        && cert.sub_arm.is_disjoint(&cert.sub_leg);

    let hk = sol.hook.union(k);
    let h2k = h2.union(k);
    let closed = is_closed(rs, &hk) && is_closed(rs, &h2k) && is_closed(rs, &sol.source);

    let joint = closure(rs, &hk.union(h2)).difference(&sol.arm);
    let normalizes_leg = normalizes(rs, &joint, &sol.leg.union(k));

    let mut bk = k.clone();
    bk.insert(beta);
    SubhookChecks {
        well_formed,
        closed,
        normalizes_leg,
        disjoint: hk.is_disjoint(h2),
        special: sums_within(rs, h2, &bk),
        nontrivial: !cert.sub_arm.is_empty(),
    }
}

/// The smallest subhook of `h(β)` with a nonempty arm passing
/// [`check_subhook`]; among subhooks of equal size, the first in the
/// lexicographic order of their pairs.
pub fn subhook_search(
    rs: &RootSystem,
    sol: &ArmSolution,
    beta: usize,
) -> Result<SubhookCertificate> {
    if !sol.leg_excess().contains(beta) {
        return Err(Error::NotEnlargedLeg {
            alpha: sol.alpha,
            beta,
        });
    }
    let pairs = rs.decompositions(beta);
    let m = pairs.len();
    for size in 1..=m {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut subhook = Pattern::singleton(rs.len(), beta);
            let mut sub_arm = rs.empty_pattern();
            let mut sub_leg = rs.empty_pattern();
            for &p in &pick {
                let (a, b) = pairs[p];
                subhook.insert(a);
                subhook.insert(b);
                sub_arm.insert(a);
                sub_leg.insert(b);
            }
            let cert = SubhookCertificate {
                beta,
                subhook,
                sub_arm,
                sub_leg,
            };
            if check_subhook(rs, sol, &cert).all() {
                return Ok(cert);
            }
            if !next_combination(&mut pick, m) {
                break;
            }
        }
    }
    Err(Error::NoSubhook {
        alpha: sol.alpha,
        beta,
    })
}

fn next_combination(pick: &mut [usize], m: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < m - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
