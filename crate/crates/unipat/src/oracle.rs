//! Brute-force unitriangular matrix groups for checking pattern-level
//! statements in type A.
//!
//! `UA_n(q)` is realized as the upper unitriangular `(n+1)×(n+1)` matrices over
//! the prime field `F_q`, with `x_{e_i−e_j}(t)` the identity plus `t` at
//! entry `(i, j)`. Everything is enumerated explicitly, guarded by a cap on
//! group order.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::patterns::{self, is_closed, is_normal_in};
use crate::rootspace::{RootSystem, RootType};
use crate::singleroot::{classical_arm, k_pattern};

/// Largest group order the oracle will enumerate.
pub const SIZE_GUARD: u128 = 1_000_000;

/// Largest supported matrix size.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    dim: usize,
    entries: [u8; MAX_DIM * MAX_DIM],
}

impl Matrix {
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A set of group elements.
pub type ElementSet = HashSet<Matrix>;

#[derive(Debug, Clone)]
pub struct UnitriangularGroup {
    rs: RootSystem,
    q: u8,
    dim: usize,
    /// Matrix position of each positive root.
    positions: Vec<(usize, usize)>,
}

impl UnitriangularGroup {
    pub fn new(rank: usize, q: u32) -> Result<Self> {
        if ![2, 3, 5].contains(&q) {
            return Err(Error::UnsupportedField(q));
        }
        if rank + 1 > MAX_DIM {
            return Err(Error::InadmissibleRank {
                ty: RootType::A,
                rank,
                reason: "matrix oracle supports rank at most 7",
            });
        }
        let rs = RootSystem::new(RootType::A, rank)?;
        let positions = rs
            .roots()
            .iter()
            .map(|r| {
                let i = r.coords2x.iter().position(|&c| c > 0).unwrap();
                let j = r.coords2x.iter().position(|&c| c < 0).unwrap();
                (i, j)
            })
            .collect();
        Ok(UnitriangularGroup {
            rs,
            q: q as u8,
            dim: rank + 1,
            positions,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn order(&self) -> u128 {
        (self.q as u128).pow(self.rs.len() as u32)
    }

    pub fn identity(&self) -> Matrix {
        let mut entries = [0; MAX_DIM * MAX_DIM];
        for i in 0..self.dim {
            entries[i * self.dim + i] = 1;
        }
        Matrix {
            dim: self.dim,
            entries,
        }
    }

    /// `x_α(t)` for the positive root with index `alpha`.
    pub fn root_element(&self, alpha: usize, t: u32) -> Matrix {
        let mut m = self.identity();
        let (i, j) = self.positions[alpha];
        m.entries[i * self.dim + j] = (t % self.q as u32) as u8;
        m
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let d = self.dim;
        let q = self.q as u32;
        let mut out = [0u8; MAX_DIM * MAX_DIM];
        for i in 0..d {
            for j in i..d {
                let mut s = 0u32;
                for k in i..=j {
                    s += a.entries[i * d + k] as u32 * b.entries[k * d + j] as u32;
                }
                out[i * d + j] = (s % q) as u8;
            }
        }
        Matrix {
            dim: d,
            entries: out,
        }
    }

    pub fn inv(&self, a: &Matrix) -> Matrix {
        let d = self.dim;
        let q = self.q as u32;
        let mut v = self.identity();
        for i in (0..d).rev() {
            for j in i + 1..d {
                let mut s = 0u32;
                for k in i + 1..=j {
                    s += a.entries[i * d + k] as u32 * v.entries[k * d + j] as u32;
                }
                v.entries[i * d + j] = ((q - s % q) % q) as u8;
            }
        }
        v
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let xi = self.inv(x);
        let yi = self.inv(y);
        self.mul(&self.mul(&xi, &yi), &self.mul(x, y))
    }

    pub fn pow(&self, x: &Matrix, e: u32) -> Matrix {
        let mut r = self.identity();
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Support of a matrix above the diagonal, as roots.
    pub fn support(&self, m: &Matrix) -> Pattern {
        Pattern::from_indices(
            self.rs.len(),
            self.positions
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| m.get(i, j) != 0)
                .map(|(k, _)| k),
        )
    }

    fn guard(&self, exponent: usize) -> Result<()> {
        let size = (self.q as u128).pow(exponent as u32);
        if size > SIZE_GUARD {
            return Err(Error::SizeGuard {
                size,
                limit: SIZE_GUARD,
            });
        }
        Ok(())
    }

    /// `P(S) = ∏ X_α` over `S` in increasing root order, enumerated as products.
    pub fn pattern_subgroup(&self, s: &Pattern) -> Result<ElementSet> {
        if !is_closed(&self.rs, s) {
            return Err(Error::NotClosed);
        }
        self.guard(s.len())?;
        let mut elems = vec![self.identity()];
        for a in s {
            let mut next = Vec::with_capacity(elems.len() * self.q as usize);
            for g in &elems {
                for t in 0..self.q as u32 {
                    next.push(self.mul(g, &self.root_element(a, t)));
                }
            }
            elems = next;
        }
        Ok(elems.into_iter().collect())
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &ElementSet) -> Result<ElementSet> {
        let mut out: ElementSet = HashSet::new();
        let id = self.identity();
        out.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        let gens: Vec<&Matrix> = gens.iter().collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                if out.insert(y.clone()) {
                    if out.len() as u128 > SIZE_GUARD {
                        return Err(Error::SizeGuard {
                            size: out.len() as u128,
                            limit: SIZE_GUARD,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }

    /// Preimage in `G` of the center of `G/N`.
    pub fn brute_center(&self, g: &ElementSet, n: &ElementSet) -> Result<ElementSet> {
        self.guard_pairs(g.len(), g.len())?;
        Ok(g.iter()
            .filter(|x| g.iter().all(|y| n.contains(&self.commutator(x, y))))
            .cloned()
            .collect())
    }

    /// `⟨[a, b] | a ∈ A, b ∈ B⟩`.
    pub fn brute_commutator_group(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.guard_pairs(a.len(), b.len())?;
        let mut comms: ElementSet = HashSet::new();
        for x in a {
            for y in b {
                comms.insert(self.commutator(x, y));
            }
        }
        self.generate(&comms)
    }

    /// Preimage in `G` of the derived subgroup of `G/N`.
    pub fn brute_derived(&self, g: &ElementSet, n: &ElementSet) -> Result<ElementSet> {
        let mut gens = self.brute_commutator_group(g, g)?;
        gens.extend(n.iter().cloned());
        self.generate(&gens)
    }

    /// Preimage in `G` of the Frattini subgroup `(G/N)^p [G/N, G/N]`.
    pub fn brute_frattini(&self, g: &ElementSet, n: &ElementSet) -> Result<ElementSet> {
        let mut gens = self.brute_derived(g, n)?;
        gens.extend(g.iter().map(|x| self.pow(x, self.q as u32)));
        self.generate(&gens)
    }

    /// Number of conjugacy classes of `G`.
    pub fn class_count(&self, g: &ElementSet) -> Result<usize> {
        self.guard_pairs(g.len(), g.len())?;
        let mut seen: ElementSet = HashSet::new();
        let mut classes = 0;
        let inverses: Vec<(Matrix, Matrix)> = g.iter().map(|h| (h.clone(), self.inv(h))).collect();
        for x in g {
            if seen.contains(x) {
                continue;
            }
            classes += 1;
            for (h, hi) in &inverses {
                seen.insert(self.mul(&self.mul(hi, x), h));
            }
        }
        Ok(classes)
    }

    pub fn is_normal_subgroup(&self, h: &ElementSet, g: &ElementSet) -> bool {
        h.iter().all(|x| g.contains(x))
            && g.iter().all(|y| {
                let yi = self.inv(y);
                h.iter()
                    .all(|x| h.contains(&self.mul(&self.mul(&yi, x), y)))
            })
    }

    fn guard_pairs(&self, a: usize, b: usize) -> Result<()> {
        let size = a as u128 * b as u128;
        if size > SIZE_GUARD {
            return Err(Error::SizeGuard {
                size,
                limit: SIZE_GUARD,
            });
        }
        Ok(())
    }
}

/// Outcome of one oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn closed_patterns(rs: &RootSystem) -> Vec<Pattern> {
    let n = rs.len();
    (0u64..1 << n)
        .map(|bits| Pattern::from_indices(n, (0..n).filter(|i| bits >> i & 1 == 1)))
        .filter(|p| is_closed(rs, p))
        .collect()
}

/// Compares the pattern calculus with brute-force group computations in
/// `UA_rank(q)`.
pub fn verify_all(rank: usize, q: u32) -> Result<Vec<Check>> {
    let g = UnitriangularGroup::new(rank, q)?;
    g.guard(g.rs.len())?;
    let rs = &g.rs;
    let closed = closed_patterns(rs);
    let mut groups = Vec::with_capacity(closed.len());
    for s in &closed {
        groups.push(g.pattern_subgroup(s)?);
    }
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    // Pattern subgroups have order q^|S| and consist of the matrices supported on S.
    let mut bad = 0;
    for (s, ps) in closed.iter().zip(&groups) {
        let order_ok = ps.len() as u128 == (q as u128).pow(s.len() as u32);
        let support_ok = ps.iter().all(|m| g.support(m).is_subset(s));
        if !(order_ok && support_ok) {
            bad += 1;
        }
    }
    push(
        "pattern subgroup order",
        bad == 0,
        format!("{} closed patterns, {bad} mismatches", closed.len()),
    );

    // P(N) ⊴ P(S) exactly when N ⊴ S.
    let mut bad = 0;
    let mut pairs = 0;
    for (i, s) in closed.iter().enumerate() {
        for (j, n) in closed.iter().enumerate() {
            if !n.is_subset(s) {
                continue;
            }
            pairs += 1;
            if g.is_normal_subgroup(&groups[j], &groups[i]) != is_normal_in(rs, n, s) {
                bad += 1;
            }
        }
    }
    push(
        "normal pattern iff normal subgroup",
        bad == 0,
        format!("{pairs} nested pairs, {bad} mismatches"),
    );

    // Center and derived subgroup of every quotient P(S)/P(N).
    let (mut bad_z, mut bad_d, mut bad_t, mut quotients) = (0, 0, 0, 0);
    for (i, s) in closed.iter().enumerate() {
        for (j, n) in closed.iter().enumerate() {
            if !is_normal_in(rs, n, s) {
                continue;
            }
            quotients += 1;
            let zp = patterns::center_pattern(rs, s, n)?;
            let dp = patterns::derived_pattern(rs, s, n)?;
            let z = g.brute_center(&groups[i], &groups[j])?;
            let d = g.brute_derived(&groups[i], &groups[j])?;
            if z != g.pattern_subgroup(&zp)? {
                bad_z += 1;
            }
            if d != g.pattern_subgroup(&dp)? {
                bad_d += 1;
            }
            let t = patterns::linear_count_exponent(rs, s, n)?;
            if groups[i].len() as u128 != d.len() as u128 * (q as u128).pow(t as u32) {
                bad_t += 1;
            }
        }
    }
    push(
        "center of quotient pattern groups",
        bad_z == 0,
        format!("{quotients} quotients, {bad_z} mismatches"),
    );
    push(
        "derived subgroup of quotient pattern groups",
        bad_d == 0,
        format!("{quotients} quotients, {bad_d} mismatches"),
    );
    push(
        "abelianization index q^t",
        bad_t == 0,
        format!("{quotients} quotients, {bad_t} mismatches"),
    );

    // P(h(α) ∪ k(α)) / P(k(α)) is special of type q^{1+2m} with center X_α.
    let mut bad = 0;
    let mut detail = Vec::new();
    for alpha in 0..rs.len() {
        let hook = rs.hook(alpha);
        if hook.len() == 1 {
            continue;
        }
        let k = k_pattern(rs, alpha);
        let hk = hook.union(&k);
        let mut ak = k.clone();
        ak.insert(alpha);
        let h = g.pattern_subgroup(&hk)?;
        let kk = g.pattern_subgroup(&k)?;
        let target = g.pattern_subgroup(&ak)?;
        let z = g.brute_center(&h, &kk)?;
        let d = g.brute_derived(&h, &kk)?;
        let f = g.brute_frattini(&h, &kk)?;
        let m = (hook.len() - 1) / 2;
        let order_ok = h.len() as u128 == kk.len() as u128 * (q as u128).pow(1 + 2 * m as u32);
        // [x, H] covers the center for every non-central x.
        let sharp = h.iter().filter(|x| !z.contains(*x)).all(|x| {
            let cs: ElementSet = h
                .iter()
                .map(|y| {
                    let c = g.commutator(x, y);
                    // reduce modulo P(k) by clearing kernel entries
                    let mut r = c;
                    for b in &k {
                        let (i, j) = g.positions[b];
                        r.entries[i * g.dim + j] = 0;
                    }
                    r
                })
                .collect();
            cs.len() == q as usize
        });
        let ok = z == target && d == target && f == target && order_ok && sharp;
        if !ok {
            bad += 1;
            detail.push(rs.format_root(alpha));
        }
    }
    push(
        "hook groups are special",
        bad == 0,
        if detail.is_empty() {
            "all hooks".to_string()
        } else {
            format!("failures at {}", detail.join(" "))
        },
    );

    // For every y ≠ 1 in the arm group some leg root β has
    // {[y, x_β(t)] | t} = X_α modulo P(k).
    let mut bad = 0;
    let mut detail = Vec::new();
    for alpha in 0..rs.len() {
        let sol = classical_arm(rs, alpha)?;
        if sol.arm.is_empty() {
            continue;
        }
        let (ai, aj) = g.positions[alpha];
        let mut ak = sol.kernel.clone();
        ak.insert(alpha);
        let target = g.pattern_subgroup(&ak)?;
        let arm_group = g.pattern_subgroup(&sol.arm)?;
        let ok = arm_group.iter().filter(|y| **y != g.identity()).all(|y| {
            sol.leg.iter().any(|beta| {
                let mut hit = vec![false; q as usize];
                for t in 0..q {
                    let c = g.commutator(y, &g.root_element(beta, t));
                    if !target.contains(&c) {
                        return false;
                    }
                    hit[c.get(ai, aj) as usize] = true;
                }
                hit.iter().all(|&h| h)
            })
        });
        if !ok {
            bad += 1;
            detail.push(rs.format_root(alpha));
        }
    }
    push(
        "arm elements commute onto the root subgroup",
        bad == 0,
        if detail.is_empty() {
            "all roots".to_string()
        } else {
            format!("failures at {}", detail.join(" "))
        },
    );

    // Commutators of root elements.
    let mut bad = 0;
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            for s in 1..q {
                for t in 1..q {
                    let c = g.commutator(&g.root_element(a, s), &g.root_element(b, t));
                    let ok = match rs.root_sum(a, b) {
                        Some(sum) => {
                            let st = s * t % q;
                            c == g.root_element(sum, st) || c == g.root_element(sum, q - st)
                        }
                        None => c == g.identity(),
                    };
                    if !ok {
                        bad += 1;
                    }
                }
            }
        }
    }
    push(
        "root element commutators",
        bad == 0,
        format!("{bad} mismatches"),
    );

    if rank == 2 {
        let full = groups.last().unwrap();
        let classes = g.class_count(full)?;
        let expected = (q * q + q - 1) as usize;
        push(
            "class count q^2+q-1",
            classes == expected,
            format!("{classes} classes, expected {expected}"),
        );
    }
    Ok(checks)
}
