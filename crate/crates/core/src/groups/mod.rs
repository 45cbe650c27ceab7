//! Finite permutation groups, conjugacy classes and character tables.

mod dixon;
mod finite;
mod parse;
mod perm;

pub use dixon::{
    character_table, charpoly_mod, choose_prime, dixon_schneider, root_of_unity_mod, CharTable,
    ClassStructure, GroupClasses,
};
pub use finite::{ConjugacyData, FiniteGroup, DEFAULT_ORDER_CAP};
pub use parse::{parse_group, preset_generators};
pub use perm::Perm;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("cannot parse group {0:?}")]
    Parse(String),
    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),
    #[error("eigenspace splitting failed")]
    SplittingFailed,
}
