//! Irreducible root systems in exact doubled-integer coordinates.
//!
//! Positive roots are generated from the simple roots by root strings and then
//! numbered by height, with ties broken by decreasing simple-root coefficient
//! vectors. For F4 this reproduces the customary table numbering exactly
//! (e.g. the root with coefficients (1,2,3,1) is the 19th).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl RootType {
    pub const ALL: [RootType; 9] = [
        RootType::A,
        RootType::B,
        RootType::C,
        RootType::D,
        RootType::E6,
        RootType::E7,
        RootType::E8,
        RootType::F4,
        RootType::G2,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, RootType::A | RootType::B | RootType::C | RootType::D)
    }

    /// The rank of an exceptional type, `None` for the classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            RootType::E6 => Some(6),
            RootType::E7 => Some(7),
            RootType::E8 => Some(8),
            RootType::F4 => Some(4),
            RootType::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            RootType::A => 1,
            RootType::B => 2,
            RootType::C => 3,
            RootType::D => 4,
            t => t.fixed_rank().unwrap(),
        }
    }

    /// Characteristic restriction needed for the commutator formulas.
    pub fn prime_hypothesis(self) -> PrimeHypothesis {
        match self {
            RootType::B | RootType::C | RootType::F4 => PrimeHypothesis::GreaterThan(2),
            RootType::G2 => PrimeHypothesis::GreaterThan(3),
            _ => PrimeHypothesis::Any,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E6 => "E6",
            RootType::E7 => "E7",
            RootType::E8 => "E8",
            RootType::F4 => "F4",
            RootType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E6" => Ok(RootType::E6),
            "E7" => Ok(RootType::E7),
            "E8" => Ok(RootType::E8),
            "F4" => Ok(RootType::F4),
            "G2" => Ok(RootType::G2),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeHypothesis {
    Any,
    GreaterThan(u32),
}

impl fmt::Display for PrimeHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeHypothesis::Any => f.write_str("none"),
            PrimeHypothesis::GreaterThan(p) => write!(f, "p>{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the ambient Euclidean space, each multiplied by 2.
    pub coords2x: Vec<i32>,
    /// Coefficients with respect to the simple roots.
    pub coeffs: Vec<u32>,
    pub height: u32,
}

const NO_SUM: u16 = u16::MAX;

/// A root system with its positive roots in canonical order.
///
/// Immutable once built; every query is a table lookup.
#[derive(Debug, Clone)]
pub struct RootSystem {
    root_type: RootType,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Root>,
    simple: Vec<usize>,
    sums: Vec<u16>,
    decomps: Vec<Vec<(usize, usize)>>,
    addable: Vec<Pattern>,
    above: Vec<Pattern>,
    below: Vec<Pattern>,
    by_coords: HashMap<Vec<i32>, usize>,
}

fn unit2(i: usize, dim: usize) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = 2;
    v
}

fn sub(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()
}

/// Simple roots (doubled coordinates) and the ambient dimension.
fn simple_roots(ty: RootType, n: usize) -> (Vec<Vec<i32>>, usize) {
    match ty {
        RootType::A => {
            let d = n + 1;
            let s = (0..n)
                .map(|i| sub(&unit2(i, d), &unit2(i + 1, d)))
                .collect();
            (s, d)
        }
        RootType::B | RootType::C | RootType::D => {
            let d = n;
            let mut s: Vec<Vec<i32>> = (0..n - 1)
                .map(|i| sub(&unit2(i, d), &unit2(i + 1, d)))
                .collect();
            s.push(match ty {
                RootType::B => unit2(n - 1, d),
                RootType::C => unit2(n - 1, d).iter().map(|x| 2 * x).collect(),
                _ => add(&unit2(n - 2, d), &unit2(n - 1, d)),
            });
            (s, d)
        }
        RootType::E6 | RootType::E7 | RootType::E8 => {
            let d = 8;
            let mut s = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                add(&unit2(0, d), &unit2(1, d)),
                sub(&unit2(1, d), &unit2(0, d)),
            ];
            for i in 2..7 {
                s.push(sub(&unit2(i, d), &unit2(i - 1, d)));
            }
            s.truncate(n);
            (s, d)
        }
        RootType::F4 => {
            let d = 4;
            let s = vec![
                sub(&unit2(1, d), &unit2(2, d)),
                sub(&unit2(2, d), &unit2(3, d)),
                unit2(3, d),
                vec![1, -1, -1, -1],
            ];
            (s, d)
        }
        RootType::G2 => (vec![vec![2, -2, 0], vec![-4, 2, 2]], 3),
    }
}

/// All positive roots as simple-root coefficient vectors, via root strings:
/// for a root β and simple root δ, β+δ is a root iff p − ⟨β,δ^∨⟩ > 0 where p
/// is the largest integer with β−pδ a root.
fn positive_coeffs(simple: &[Vec<i32>]) -> Vec<Vec<u32>> {
    let r = simple.len();
    let dim = simple[0].len();
    let coords = |c: &[u32]| -> Vec<i32> {
        (0..dim)
            .map(|k| (0..r).map(|i| c[i] as i32 * simple[i][k]).sum())
            .collect()
    };
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    let mut layer: Vec<Vec<u32>> = (0..r)
        .map(|i| (0..r).map(|j| u32::from(i == j)).collect())
        .collect();
    seen.extend(layer.iter().cloned());
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for c in &layer {
            let v = coords(c);
            for i in 0..r {
                let mut p = 0;
                let mut d = c.clone();
                while d[i] > 0 {
                    d[i] -= 1;
                    if seen.contains(&d) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let cartan = 2 * dot(&v, &simple[i]) / dot(&simple[i], &simple[i]);
                if p as i64 - cartan > 0 {
                    let mut up = c.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up.clone());
                        all.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

impl RootSystem {
    /// Builds the positive roots of `ty` at the given rank.
    pub fn new(ty: RootType, rank: usize) -> Result<Self> {
        if let Some(fixed) = ty.fixed_rank() {
            if rank != fixed {
                return Err(Error::InadmissibleRank {
                    ty,
                    rank,
                    reason: "exceptional types have a fixed rank",
                });
            }
        } else if rank < ty.min_rank() {
            let reason = match ty {
                RootType::A => "A_n needs n >= 1",
                RootType::B => "B_n needs n >= 2",
                RootType::C => "C_n needs n >= 3 (C_2 = B_2)",
                _ => "D_n needs n >= 4 (smaller ranks coincide with A or are reducible)",
            };
            return Err(Error::InadmissibleRank { ty, rank, reason });
        }
        Ok(Self::build_unchecked(ty, rank))
    }

    /// Builds an exceptional type at its own rank, or a classical one at `rank`.
    pub fn of_type(ty: RootType, rank: Option<usize>) -> Result<Self> {
        match (ty.fixed_rank(), rank) {
            (Some(r), None) => Self::new(ty, r),
            (_, Some(r)) => Self::new(ty, r),
            (None, None) => Err(Error::InadmissibleRank {
                ty,
                rank: 0,
                reason: "classical types need an explicit rank",
            }),
        }
    }

    fn build_unchecked(ty: RootType, rank: usize) -> Self {
        let (simple_coords, ambient_dim) = simple_roots(ty, rank);
        let mut coeffs = positive_coeffs(&simple_coords);
        coeffs.sort_by(|a, b| {
            let ha: u32 = a.iter().sum();
            let hb: u32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let roots: Vec<Root> = coeffs
            .into_iter()
            .map(|c| {
                let coords2x = (0..ambient_dim)
                    .map(|k| (0..rank).map(|i| c[i] as i32 * simple_coords[i][k]).sum())
                    .collect();
                let height = c.iter().sum();
                Root {
                    coords2x,
                    coeffs: c,
                    height,
                }
            })
            .collect();
        let n = roots.len();
        let by_coords: HashMap<Vec<i32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords2x.clone(), i))
            .collect();
        let simple = (0..rank)
            .map(|i| by_coords[&simple_coords[i]])
            .collect::<Vec<_>>();

        let mut sums = vec![NO_SUM; n * n];
        let mut decomps = vec![Vec::new(); n];
        let mut addable = vec![Pattern::empty(n); n];
        for i in 0..n {
            for j in 0..n {
                if let Some(&k) = by_coords.get(&add(&roots[i].coords2x, &roots[j].coords2x)) {
                    sums[i * n + j] = k as u16;
                    addable[j].insert(i);
                    if i < j {
                        decomps[k].push((i, j));
                    }
                }
            }
        }
        let mut above = vec![Pattern::empty(n); n];
        let mut below = vec![Pattern::empty(n); n];
        for i in 0..n {
            for j in 0..n {
                if roots[i]
                    .coeffs
                    .iter()
                    .zip(&roots[j].coeffs)
                    .all(|(a, b)| a <= b)
                {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        RootSystem {
            root_type: ty,
            rank,
            ambient_dim,
            roots,
            simple,
            sums,
            decomps,
            addable,
            above,
            below,
            by_coords,
        }
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn height(&self, i: usize) -> u32 {
        self.roots[i].height
    }

    /// Indices of the simple roots, in Dynkin numbering.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    /// Height of the highest root plus one.
    pub fn coxeter_number(&self) -> u32 {
        self.height(self.highest_root()) + 1
    }

    /// Exponents of the Weyl group, read off the heights: `k` occurs as an
    /// exponent as often as the number of roots of height `k` exceeds the
    /// number of height `k + 1`.
    pub fn exponents(&self) -> Vec<u32> {
        let h = self.coxeter_number() as usize;
        let mut per_height = vec![0usize; h + 1];
        for r in &self.roots {
            per_height[r.height as usize] += 1;
        }
        let mut out = Vec::with_capacity(self.rank);
        for k in 1..h {
            for _ in per_height[k + 1]..per_height[k] {
                out.push(k as u32);
            }
        }
        out
    }

    pub fn prime_hypothesis(&self) -> PrimeHypothesis {
        self.root_type.prime_hypothesis()
    }

    pub fn label(&self) -> String {
        if self.root_type.is_classical() {
            format!("{}{}", self.root_type, self.rank)
        } else {
            self.root_type.to_string()
        }
    }

    pub fn empty_pattern(&self) -> Pattern {
        Pattern::empty(self.len())
    }

    pub fn full_pattern(&self) -> Pattern {
        Pattern::full(self.len())
    }

    /// `α_i + α_j` when it is a positive root.
    #[inline]
    pub fn root_sum(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.roots.len() + j];
        (k != NO_SUM).then_some(k as usize)
    }

    /// The roots `α_i` for which `α_i + α_j` is a positive root.
    #[inline]
    pub fn addable(&self, j: usize) -> &Pattern {
        &self.addable[j]
    }

    /// The order ≼: true iff `α_j − α_i` is a nonnegative combination of simple roots.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Up-set `{β | α_i ≼ β}`.
    pub fn up_set(&self, i: usize) -> &Pattern {
        &self.above[i]
    }

    /// Down-set `{β | β ≼ α_i}`.
    pub fn down_set(&self, i: usize) -> &Pattern {
        &self.below[i]
    }

    /// Pairs `(j, j')` with `j < j'` and `α_j + α_{j'} = α_i`, sorted by `j`.
    pub fn decompositions(&self, i: usize) -> &[(usize, usize)] {
        &self.decomps[i]
    }

    /// `h(α) = {γ | α − γ ∈ Φ+ ∪ {0}}`.
    pub fn hook(&self, i: usize) -> Pattern {
        let mut h = Pattern::singleton(self.len(), i);
        for &(a, b) in &self.decomps[i] {
            h.insert(a);
            h.insert(b);
        }
        h
    }

    /// For `γ` in the hook of `α`, the root `α − γ`.
    pub fn hook_partner(&self, alpha: usize, gamma: usize) -> Option<usize> {
        self.decomps[alpha].iter().find_map(|&(a, b)| {
            if a == gamma {
                Some(b)
            } else if b == gamma {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn index_of_coords2x(&self, coords2x: &[i32]) -> Option<usize> {
        self.by_coords.get(coords2x).copied()
    }

    pub fn index_of_coeffs(&self, coeffs: &[u32]) -> Option<usize> {
        self.roots.iter().position(|r| r.coeffs == coeffs)
    }

    /// Root in e-basis notation, e.g. `e1-e4`, `2e1`, or `(e1+e2+e3+e4)/2`
    /// for roots with half-integer coordinates.
    pub fn format_root(&self, i: usize) -> String {
        format_coords2x(&self.roots[i].coords2x)
    }

    /// Resolves a root selector.
    ///
    /// Accepted forms: a 1-based index (`115`, `a115`, `alpha115`), an e-basis
    /// expression (`e1+e4`, `e2-e3`, `2e1`, `-2e1+e2+e3`, `(e1-e2-e3-e4)/2`),
    /// or a coordinate tuple (`(1,0,-1,0)`, or `(1,1,1,1)/2` for doubled
    /// entries).
    pub fn parse_root(&self, sel: &str) -> Result<usize> {
        let err = || Error::UnknownRoot(sel.to_string());
        let s: String = sel.chars().filter(|c| !c.is_whitespace()).collect();
        let idx_part = s
            .strip_prefix("alpha")
            .or_else(|| s.strip_prefix('a'))
            .unwrap_or(&s);
        if !idx_part.is_empty() && idx_part.chars().all(|c| c.is_ascii_digit()) {
            let k: usize = idx_part.parse().map_err(|_| err())?;
            return if (1..=self.len()).contains(&k) {
                Ok(k - 1)
            } else {
                Err(err())
            };
        }
        let coords2x = if s.starts_with('(') && s.contains('e') {
            let inner = s
                .strip_suffix("/2")
                .and_then(|b| b.strip_prefix('('))
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(err)?;
            parse_ebasis(inner, self.ambient_dim)
                .ok_or_else(err)?
                .into_iter()
                .map(|v| v / 2)
                .collect()
        } else if s.starts_with('(') {
            parse_tuple(&s, self.ambient_dim).ok_or_else(err)?
        } else {
            parse_ebasis(&s, self.ambient_dim).ok_or_else(err)?
        };
        self.index_of_coords2x(&coords2x).ok_or_else(err)
    }
}

fn format_coords2x(c: &[i32]) -> String {
    if c.iter().any(|x| x % 2 != 0) {
        return format!("({})/2", format_ebasis(c.iter().copied()));
    }
    format_ebasis(c.iter().map(|x| x / 2))
}

fn format_ebasis(c: impl Iterator<Item = i32>) -> String {
    let mut out = String::new();
    for (k, v) in c.enumerate() {
        if v == 0 {
            continue;
        }
        if v < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if v.abs() != 1 {
            out.push_str(&v.abs().to_string());
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_tuple(s: &str, dim: usize) -> Option<Vec<i32>> {
    let (body, halved) = match s.strip_suffix("/2") {
        Some(b) => (b, true),
        None => (s, false),
    };
    let inner = body.strip_prefix('(')?.strip_suffix(')')?;
    let vals: Vec<i32> = inner
        .split(',')
        .map(|t| t.parse::<i32>().ok())
        .collect::<Option<_>>()?;
    if vals.len() != dim {
        return None;
    }
    Some(if halved {
        vals
    } else {
        vals.into_iter().map(|v| 2 * v).collect()
    })
}

fn parse_ebasis(s: &str, dim: usize) -> Option<Vec<i32>> {
    let mut out = vec![0i32; dim];
    let bytes = s.as_bytes();
    let mut pos = 0;
    if bytes.is_empty() {
        return None;
    }
    while pos < bytes.len() {
        let mut sign = 1;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1
            }
            _ if pos > 0 => return None,
            _ => {}
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: i32 = if pos == start {
            1
        } else {
            s[start..pos].parse().ok()?
        };
        if pos >= bytes.len() || bytes[pos] != b'e' {
            return None;
        }
        pos += 1;
        let istart = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let k: usize = s[istart..pos].parse().ok()?;
        if k == 0 || k > dim {
            return None;
        }
        out[k - 1] += 2 * sign * coef;
    }
    Some(out)
}
