//! Fixtures shared by the benchmarks.

use unipat::{RootSystem, RootType};

/// The exceptional root systems, built once per benchmark run.
pub fn exceptional() -> Vec<RootSystem> {
    [
        RootType::G2,
        RootType::F4,
        RootType::E6,
        RootType::E7,
        RootType::E8,
    ]
    .into_iter()
    .map(|t| RootSystem::of_type(t, None).expect("exceptional type"))
    .collect()
}

/// First root of the given height in canonical order.
pub fn e8_root_of_height(rs: &RootSystem, height: u32) -> usize {
    (0..rs.len())
        .find(|&i| rs.height(i) == height)
        .expect("height occurs in E8")
}
