use thiserror::Error;

use crate::rootspace::RootType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root system type `{0}` (expected one of A, B, C, D, E6, E7, E8, F4, G2)")]
    UnknownType(String),

    #[error("type {ty} does not admit rank {rank}: {reason}")]
    InadmissibleRank {
        ty: RootType,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot resolve root `{0}`")]
    UnknownRoot(String),

    #[error("pattern is not closed")]
    NotClosed,

    #[error("pattern is not a normal closed subpattern of the ambient pattern")]
    NotNormal,

    #[error("root set is not an antichain of the root poset")]
    NotAntichain,

    #[error("closed-form arms exist only for the classical types A, B, C, D (got {0})")]
    NotClassical(RootType),

    #[error("no admissible arm for root {0}")]
    NoAdmissibleArm(usize),

    #[error("no subhook certificate for root {beta} in the hook of root {alpha}")]
    NoSubhook { alpha: usize, beta: usize },

    #[error("root {beta} does not lie in the enlarged leg of root {alpha}")]
    NotEnlargedLeg { alpha: usize, beta: usize },

    #[error("group of order {size} exceeds the enumeration guard of {limit}")]
    SizeGuard { size: u128, limit: u128 },

    #[error("unsupported field size {0} (expected 2, 3 or 5)")]
    UnsupportedField(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
