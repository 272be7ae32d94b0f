//! Exact combinatorics of positive roots and their pattern subgroups.
//!
//! Root systems are built in doubled-integer coordinates, so every computation
//! is exact. On top of them the crate offers closed patterns and normality,
//! antichain counts, the single-root kernels `n(α)`, `k(α)`, `w(α)`, arms and
//! legs of hooks (closed forms for the classical series, a pruned search for
//! every type), midafi tables, and a brute-force unitriangular-matrix oracle
//! for type A.

pub mod error;
pub mod oracle;
pub mod pattern;
pub mod patterns;
pub mod qpoly;
pub mod rootspace;
pub mod singleroot;

pub use error::{Error, Result};
pub use pattern::Pattern;
pub use qpoly::{QPolynomial, Var};
pub use rootspace::{PrimeHypothesis, Root, RootSystem, RootType};
pub use singleroot::{ArmSolution, MidafiRow, SearchStats, SubhookCertificate};
