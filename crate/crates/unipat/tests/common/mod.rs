#![allow(dead_code)]

use std::collections::BTreeMap;

use unipat::{Pattern, RootSystem, RootType};

pub const MIDAFI: &str = include_str!("../data/midafi.txt");
pub const NONNORMAL: &str = include_str!("../data/nonnormal.txt");

/// Table rows keyed by type: 1-based index to (count exponent, degree exponent).
pub fn midafi_tables() -> BTreeMap<RootType, BTreeMap<usize, (usize, usize)>> {
    let mut out: BTreeMap<RootType, BTreeMap<usize, (usize, usize)>> = BTreeMap::new();
    for line in MIDAFI
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let f: Vec<&str> = line.split_whitespace().collect();
        let ty: RootType = f[0].parse().unwrap();
        out.entry(ty).or_default().insert(
            f[1].parse().unwrap(),
            (f[2].parse().unwrap(), f[3].parse().unwrap()),
        );
    }
    out
}

pub fn nonnormal(ty: RootType) -> Vec<usize> {
    NONNORMAL
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .find(|f| !f.is_empty() && f[0].parse::<RootType>().ok() == Some(ty))
        .map(|f| f[1..].iter().map(|s| s.parse().unwrap()).collect())
        .unwrap_or_default()
}

/// Every system with rank at most `max_rank`, the exceptional ones included.
pub fn all_systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for ty in RootType::ALL {
        match ty.fixed_rank() {
            Some(r) if r <= max_rank => out.push(RootSystem::new(ty, r).unwrap()),
            Some(_) => {}
            None => {
                for r in ty.min_rank()..=max_rank {
                    out.push(RootSystem::new(ty, r).unwrap());
                }
            }
        }
    }
    out
}

pub fn classical_systems(max_rank: usize) -> Vec<RootSystem> {
    all_systems(max_rank)
        .into_iter()
        .filter(|rs| rs.root_type().is_classical())
        .collect()
}

/// Index of the root `Σ c·e_i` given as (1-based basis index, coefficient).
pub fn e(rs: &RootSystem, terms: &[(usize, i32)]) -> usize {
    let mut v = vec![0; rs.ambient_dim()];
    for &(i, c) in terms {
        v[i - 1] += 2 * c;
    }
    rs.index_of_coords2x(&v)
        .unwrap_or_else(|| panic!("{terms:?} is not a root of {}", rs.label()))
}

pub fn try_e(rs: &RootSystem, terms: &[(usize, i32)]) -> Option<usize> {
    let mut v = vec![0; rs.ambient_dim()];
    for &(i, c) in terms {
        v[i - 1] += 2 * c;
    }
    rs.index_of_coords2x(&v)
}

/// Shape of a classical root in the `e`-basis, with 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `e_i − e_j`
    Minus(usize, usize),
    /// `e_i + e_j`
    Plus(usize, usize),
    /// `e_i`
    Short(usize),
    /// `2e_i`
    Long(usize),
}

impl Shape {
    pub fn lead(self) -> usize {
        match self {
            Shape::Minus(i, _) | Shape::Plus(i, _) | Shape::Short(i) | Shape::Long(i) => i,
        }
    }
}

pub fn shape(rs: &RootSystem, idx: usize) -> Shape {
    let c = &rs.root(idx).coords2x;
    let nz: Vec<(usize, i32)> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i + 1, x))
        .collect();
    match nz.as_slice() {
        [(i, 2), (j, -2)] => Shape::Minus(*i, *j),
        [(i, 2), (j, 2)] => Shape::Plus(*i, *j),
        [(i, 2)] => Shape::Short(*i),
        [(i, 4)] => Shape::Long(*i),
        _ => panic!("unexpected root {:?}", c),
    }
}

pub fn pattern_where(rs: &RootSystem, f: impl Fn(Shape) -> bool) -> Pattern {
    Pattern::from_indices(rs.len(), (0..rs.len()).filter(|&b| f(shape(rs, b))))
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Antichain counts by size.
pub fn narayana(ty: RootType, n: u64) -> Vec<u64> {
    match ty {
        RootType::A => (0..=n)
            .map(|k| binom(n + 1, k) * binom(n + 1, k + 1) / (n + 1))
            .collect(),
        RootType::B | RootType::C => (0..=n).map(|k| binom(n, k).pow(2)).collect(),
        RootType::D => (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    1
                } else {
                    binom(n, k).pow(2) - n * binom(n - 1, k - 1) * binom(n - 1, k) / (n - 1)
                }
            })
            .collect(),
        RootType::E6 => vec![1, 36, 204, 351, 204, 36, 1],
        RootType::E7 => vec![1, 63, 546, 1470, 1470, 546, 63, 1],
        RootType::E8 => vec![1, 120, 1540, 6120, 9518, 6120, 1540, 120, 1],
        RootType::F4 => vec![1, 24, 55, 24, 1],
        RootType::G2 => vec![1, 6, 1],
    }
}

pub fn total(ty: RootType, n: u64) -> u64 {
    match ty {
        RootType::A => binom(2 * n + 2, n + 1) / (n + 2),
        RootType::B | RootType::C => binom(2 * n, n),
        RootType::D => (3 * n - 2) * binom(2 * n - 2, n - 1) / n,
        RootType::E6 => 833,
        RootType::E7 => 4160,
        RootType::E8 => 25080,
        RootType::F4 => 105,
        RootType::G2 => 8,
    }
}

/// Kernel of a classical root from its `e`-basis shape. Roots whose leading
/// index is `r` see every root of smaller leading index in their kernel; the
/// rest is the first-row formula on indices `r..=n`.
pub fn kernel_formula(rs: &RootSystem, a: Shape) -> Option<Pattern> {
    use Shape::*;
    let ty = rs.root_type();
    let n = rs.rank();
    let r = a.lead();
    let above = |b: Shape| b.lead() < r;
    let p = match (ty, a) {
        (RootType::A, Minus(i, j)) => pattern_where(rs, |b| match b {
            Minus(s, t) => s < i || t > j,
            _ => false,
        }),
        (_, Minus(i, j)) => pattern_where(rs, |b| match b {
            Minus(s, t) => s < i || t > j,
            _ => true,
        }),
        (RootType::B, Plus(_, i)) => pattern_where(rs, |b| {
            above(b) || matches!(b, Plus(s, t) if r <= s && t < i)
        }),
        (RootType::B, Short(_)) => {
            pattern_where(rs, |b| above(b) || matches!(b, Plus(s, _) if r <= s))
        }
        (RootType::C, Plus(_, i)) => pattern_where(rs, |b| {
            above(b)
                || match b {
                    Plus(s, t) => r <= s && t < i,
                    Long(s) => r <= s && s < i,
                    _ => false,
                }
        }),
        (RootType::C, Long(_)) => pattern_where(rs, above),
        (RootType::D, Plus(_, i)) if i < n => pattern_where(rs, |b| {
            above(b) || matches!(b, Plus(s, t) if r <= s && t < i)
        }),
        _ => return None,
    };
    Some(p)
}
