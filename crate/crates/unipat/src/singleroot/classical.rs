//! Closed-form arms for the classical series.
//!
//! A root `e_i − e_j` uses the type A arm in every series. Roots involving a
//! plus sign only see the coordinates from their first index onward, so the
//! rank-one-indexed formulas are applied to the tail system on indices `r..n`.

use super::{k_pattern, ArmSolution};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::rootspace::{RootSystem, RootType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// `e_i − e_j`, `i < j`.
    Minus(usize, usize),
    /// `e_i + e_j`, `i < j`.
    Plus(usize, usize),
    /// `e_i` (type B).
    Short(usize),
    /// `2e_i` (type C).
    Long(usize),
}

fn shape(coords2x: &[i32]) -> Option<Shape> {
    let nz: Vec<(usize, i32)> = coords2x
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(k, &v)| (k, v))
        .collect();
    match nz[..] {
        [(i, 2), (j, -2)] => Some(Shape::Minus(i, j)),
        [(i, 2), (j, 2)] => Some(Shape::Plus(i, j)),
        [(i, 2)] => Some(Shape::Short(i)),
        [(i, 4)] => Some(Shape::Long(i)),
        _ => None,
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    arm: Pattern,
}

impl Builder<'_> {
    fn vec(&self, terms: &[(usize, i32)]) -> Vec<i32> {
        let mut v = vec![0; self.rs.ambient_dim()];
        for &(k, c) in terms {
            v[k] += 2 * c;
        }
        v
    }

    fn add(&mut self, terms: &[(usize, i32)]) {
        let v = self.vec(terms);
        let idx = self
            .rs
            .index_of_coords2x(&v)
            .unwrap_or_else(|| panic!("closed-form arm root {v:?} missing"));
        self.arm.insert(idx);
    }
}

/// The closed-form arm of `α` in a classical root system, completed into an
/// [`ArmSolution`].
pub fn classical_arm(rs: &RootSystem, alpha: usize) -> Result<ArmSolution> {
    let ty = rs.root_type();
    if !ty.is_classical() {
        return Err(Error::NotClassical(ty));
    }
    let n = rs.ambient_dim();
    let mut b = Builder {
        rs,
        arm: rs.empty_pattern(),
    };
    let sh = shape(&rs.root(alpha).coords2x).expect("classical root shape");
    match (ty, sh) {
        (_, Shape::Minus(i, j)) => {
            for s in i + 1..j {
                b.add(&[(i, 1), (s, -1)]);
            }
        }
        (RootType::B, Shape::Short(r)) => {
            for s in r + 1..n {
                b.add(&[(s, 1)]);
            }
        }
        (RootType::B, Shape::Plus(r, i)) => {
            b.add(&[(i, 1)]);
            for s in i + 1..n {
                b.add(&[(i, 1), (s, 1)]);
                b.add(&[(i, 1), (s, -1)]);
            }
            for s in r + 1..i {
                b.add(&[(r, 1), (s, -1)]);
            }
        }
        (RootType::C, Shape::Long(r)) => {
            for s in r + 1..n {
                b.add(&[(r, 1), (s, -1)]);
            }
        }
        (RootType::C, Shape::Plus(r, i)) => {
            b.add(&[(i, 2)]);
            for s in i + 1..n {
                b.add(&[(i, 1), (s, 1)]);
                b.add(&[(i, 1), (s, -1)]);
            }
            for s in r + 1..i {
                b.add(&[(r, 1), (s, -1)]);
            }
        }
        (RootType::D, Shape::Plus(r, i)) => {
            for s in i + 1..n {
                b.add(&[(i, 1), (s, 1)]);
                b.add(&[(i, 1), (s, -1)]);
            }
            for s in r + 1..i {
                b.add(&[(r, 1), (s, -1)]);
            }
        }
        _ => unreachable!("root shape {sh:?} does not occur in type {ty}"),
    }
    let kernel = k_pattern(rs, alpha);
    Ok(ArmSolution::from_arm_with_kernel(rs, alpha, b.arm, kernel))
}
