//! Closed patterns, normality and the derived and center subpatterns of
//! quotient pattern groups, all at the level of root sets.

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::qpoly::{QPolynomial, Var};
use crate::rootspace::RootSystem;

/// `α+β ∈ P` whenever `α, β ∈ P` and `α+β ∈ Φ+`.
pub fn is_closed(rs: &RootSystem, p: &Pattern) -> bool {
    normalizes(rs, p, p)
}

/// Smallest closed superset of `m`.
pub fn closure(rs: &RootSystem, m: &Pattern) -> Pattern {
    let mut out = m.clone();
    let mut stack: Vec<usize> = m.to_vec();
    while let Some(y) = stack.pop() {
        for x in rs.addable(y).intersection(&out).to_vec() {
            let z = rs.root_sum(x, y).unwrap();
            if out.insert(z) {
                stack.push(z);
            }
        }
    }
    out
}

/// `M` normalizes `N`: `α+β ∈ N` or `α+β ∉ Φ+` for all `α ∈ M`, `β ∈ N`.
pub fn normalizes(rs: &RootSystem, m: &Pattern, n: &Pattern) -> bool {
    n.iter().all(|y| {
        rs.addable(y)
            .intersection(m)
            .iter()
            .all(|x| n.contains(rs.root_sum(x, y).unwrap()))
    })
}

/// `N ⊴ S`: `N ⊆ S` and `S` normalizes `N` (which forces `N` to be closed).
pub fn is_normal_in(rs: &RootSystem, n: &Pattern, s: &Pattern) -> bool {
    n.is_subset(s) && normalizes(rs, s, n)
}

/// Smallest `N` with `M ⊆ N ⊆ S` that `S` normalizes. `S` should be closed.
pub fn normal_closure(rs: &RootSystem, m: &Pattern, s: &Pattern) -> Pattern {
    let mut out = m.clone();
    let mut stack: Vec<usize> = m.to_vec();
    while let Some(y) = stack.pop() {
        for x in rs.addable(y).intersection(s).to_vec() {
            let z = rs.root_sum(x, y).unwrap();
            if out.insert(z) {
                stack.push(z);
            }
        }
    }
    out
}

fn check_quotient(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Result<()> {
    if !is_closed(rs, s) {
        return Err(Error::NotClosed);
    }
    if !is_normal_in(rs, n, s) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

/// Root set of the derived subgroup of `P(S)/P(N)`:
/// `({α+β | α, β ∈ S} ∩ Φ+) ∪ N`.
pub fn derived_pattern(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Result<Pattern> {
    check_quotient(rs, s, n)?;
    Ok(derived_unchecked(rs, s, n))
}

pub(crate) fn derived_unchecked(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Pattern {
    let mut d = n.clone();
    for y in s {
        for x in rs.addable(y).intersection(s).iter() {
            d.insert(rs.root_sum(x, y).unwrap());
        }
    }
    d
}

/// Root set of the center of `P(S)/P(N)`:
/// `{α ∈ S | α+γ ∉ Φ+ or α+γ ∈ N for all γ ∈ S} ∪ N`.
pub fn center_pattern(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Result<Pattern> {
    check_quotient(rs, s, n)?;
    Ok(center_unchecked(rs, s, n))
}

pub(crate) fn center_unchecked(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Pattern {
    let mut z = n.clone();
    for a in s {
        let central = rs
            .addable(a)
            .intersection(s)
            .iter()
            .all(|g| n.contains(rs.root_sum(g, a).unwrap()));
        if central {
            z.insert(a);
        }
    }
    z
}

/// `{iα + jβ ∈ Φ+ | i, j > 0}`: the roots whose root subgroups make up
/// `[X_α, X_β]`.
pub fn commutator_roots(rs: &RootSystem, a: usize, b: usize) -> Pattern {
    let (x, y) = (&rs.root(a).coords2x, &rs.root(b).coords2x);
    let mut out = rs.empty_pattern();
    // Root strings have length at most 4, so coefficients never exceed 3.
    for i in 1..=3 {
        for j in 1..=3 {
            let v: Vec<i32> = x.iter().zip(y).map(|(p, q)| i * p + j * q).collect();
            if let Some(c) = rs.index_of_coords2x(&v) {
                out.insert(c);
            }
        }
    }
    out
}

/// Root center `rz(P(S)/P(N))`: the center pattern with `N` removed.
pub fn root_center(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Result<Pattern> {
    Ok(center_pattern(rs, s, n)?.difference(n))
}

/// `t` with `|P(S)/P(N) : derived subgroup| = q^t`.
pub fn linear_count_exponent(rs: &RootSystem, s: &Pattern, n: &Pattern) -> Result<usize> {
    let d = derived_pattern(rs, s, n)?;
    Ok(s.difference(n).len() - d.difference(n).len())
}

/// No two distinct members are comparable under ≼.
pub fn is_antichain(rs: &RootSystem, p: &Pattern) -> bool {
    p.iter().all(|a| {
        rs.up_set(a)
            .union(rs.down_set(a))
            .intersection(p)
            .iter()
            .all(|b| b == a)
    })
}

/// Depth-first enumeration of all antichains of the root poset, each
/// antichain listed once with members added in increasing index order.
pub struct Antichains<'a> {
    rs: &'a RootSystem,
    comparable: Vec<Pattern>,
    // (current antichain, blocked roots, next candidate)
    stack: Vec<(Pattern, Pattern, usize)>,
}

impl<'a> Antichains<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let comparable = (0..rs.len())
            .map(|i| rs.up_set(i).union(rs.down_set(i)))
            .collect();
        Antichains {
            rs,
            comparable,
            stack: vec![(rs.empty_pattern(), rs.empty_pattern(), 0)],
        }
    }
}

impl Iterator for Antichains<'_> {
    type Item = Pattern;

    fn next(&mut self) -> Option<Pattern> {
        let (cur, blocked, from) = self.stack.pop()?;
        for c in (from..self.rs.len()).rev() {
            if !blocked.contains(c) {
                let mut next = cur.clone();
                next.insert(c);
                self.stack
                    .push((next, blocked.union(&self.comparable[c]), c + 1));
            }
        }
        Some(cur)
    }
}

pub fn antichains(rs: &RootSystem) -> Antichains<'_> {
    Antichains::new(rs)
}

/// Generating polynomial `Σ_k N_k t^k` of antichains by size.
pub fn antichain_counts(rs: &RootSystem) -> QPolynomial {
    let comparable: Vec<Pattern> = (0..rs.len())
        .map(|i| rs.up_set(i).union(rs.down_set(i)))
        .collect();
    let mut counts = vec![0i128; rs.rank() + 2];
    fn walk(
        comparable: &[Pattern],
        blocked: &Pattern,
        from: usize,
        size: usize,
        counts: &mut Vec<i128>,
    ) {
        if counts.len() <= size {
            counts.resize(size + 1, 0);
        }
        counts[size] += 1;
        for c in from..comparable.len() {
            if !blocked.contains(c) {
                walk(
                    comparable,
                    &blocked.union(&comparable[c]),
                    c + 1,
                    size + 1,
                    counts,
                );
            }
        }
    }
    walk(&comparable, &rs.empty_pattern(), 0, 0, &mut counts);
    QPolynomial::new(Var::T, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootspace::RootType;

    fn a(n: usize) -> RootSystem {
        RootSystem::new(RootType::A, n).unwrap()
    }

    #[test]
    fn closure_of_simples_in_a2() {
        let rs = a(2);
        let m = Pattern::from_indices(3, [0, 1]);
        assert!(!is_closed(&rs, &m));
        assert_eq!(closure(&rs, &m), rs.full_pattern());
    }

    #[test]
    fn derived_and_center_of_a2() {
        let rs = a(2);
        let full = rs.full_pattern();
        let none = rs.empty_pattern();
        assert_eq!(derived_pattern(&rs, &full, &none).unwrap().to_vec(), [2]);
        assert_eq!(root_center(&rs, &full, &none).unwrap().to_vec(), [2]);
        assert_eq!(linear_count_exponent(&rs, &full, &none).unwrap(), 2);
    }

    #[test]
    fn a3_linear_exponent() {
        let rs = a(3);
        let e = linear_count_exponent(&rs, &rs.full_pattern(), &rs.empty_pattern()).unwrap();
        assert_eq!(e, 3);
    }

    #[test]
    fn non_normal_is_rejected() {
        let rs = a(2);
        let n = Pattern::singleton(3, 0);
        assert_eq!(
            derived_pattern(&rs, &rs.full_pattern(), &n),
            Err(Error::NotNormal)
        );
        assert_eq!(
            center_pattern(&rs, &rs.full_pattern(), &n),
            Err(Error::NotNormal)
        );
    }

    #[test]
    fn g2_and_f4_antichains() {
        let g2 = RootSystem::new(RootType::G2, 2).unwrap();
        assert_eq!(antichain_counts(&g2).coeffs(), &[1, 6, 1]);
        assert_eq!(antichains(&g2).count(), 8);
        let f4 = RootSystem::new(RootType::F4, 4).unwrap();
        assert_eq!(antichain_counts(&f4).coeffs(), &[1, 24, 55, 24, 1]);
        assert!(antichains(&f4).all(|p| is_antichain(&f4, &p)));
    }
}
