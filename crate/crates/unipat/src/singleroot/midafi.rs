//! Per-root midafi summaries: `q^t(q−1)` characters of degree `q^{|a(α)|}`.

use rayon::prelude::*;

use super::{arm_search, classical_arm, ArmSolution, SearchStats};
use crate::error::Result;
use crate::qpoly::{QPolynomial, Var};
use crate::rootspace::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidafiRow {
    pub alpha: usize,
    pub height: u32,
    pub arm_size: usize,
    /// `t` with `|T̄_α : [T̄_α, T̄_α]| = q^t`.
    pub count_exponent: usize,
    pub normal_flag: bool,
    pub enlarged_leg_excess: usize,
}

impl MidafiRow {
    /// Number of midafis, `q^t (q − 1)`.
    pub fn count(&self) -> QPolynomial {
        QPolynomial::q_power_times_q_minus_one(self.count_exponent)
    }

    /// Common degree `q^{|a(α)|}`.
    pub fn degree(&self) -> QPolynomial {
        QPolynomial::monomial(Var::Q, self.arm_size, 1)
    }
}

/// Arm for `α`: the closed form for classical types, the search otherwise.
pub fn solve_root(rs: &RootSystem, alpha: usize) -> Result<(ArmSolution, Option<SearchStats>)> {
    if rs.root_type().is_classical() {
        Ok((classical_arm(rs, alpha)?, None))
    } else {
        let (sol, stats) = arm_search(rs, alpha)?;
        Ok((sol, Some(stats)))
    }
}

pub fn midafi_row(rs: &RootSystem, sol: &ArmSolution) -> MidafiRow {
    let t = &sol.tbar_roots;
    let mut derived = rs.empty_pattern();
    for y in t {
        for x in rs.addable(y).intersection(t).iter() {
            let z = rs.root_sum(x, y).unwrap();
            if t.contains(z) {
                derived.insert(z);
            }
        }
    }
    MidafiRow {
        alpha: sol.alpha,
        height: rs.height(sol.alpha),
        arm_size: sol.arm.len(),
        count_exponent: t.len() - derived.len(),
        normal_flag: sol.normal_flag,
        enlarged_leg_excess: sol.enlarged_leg_excess(),
    }
}

/// Arm solutions for every positive root, in root order. `jobs = 0` uses
/// every core.
pub fn solve_all(rs: &RootSystem, jobs: usize) -> Result<Vec<ArmSolution>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        (0..rs.len())
            .into_par_iter()
            .map(|a| solve_root(rs, a).map(|(sol, _)| sol))
            .collect()
    })
}

/// One row per positive root, in root order. `jobs = 0` uses every core.
pub fn midafi_table(rs: &RootSystem, jobs: usize) -> Result<Vec<MidafiRow>> {
    Ok(solve_all(rs, jobs)?
        .iter()
        .map(|sol| midafi_row(rs, sol))
        .collect())
}
