//! Lusztig's set `M(G)`, the nonabelian Fourier matrix, almost-character
//! transforms and the bundled `E7` family data.

mod dataset;
mod pairing;
mod transform;

pub use dataset::{
    load_family_dataset, FamilyDataset, LABEL_21_6, LABEL_35_4, LABEL_512_11, LABEL_512_12,
    LABEL_56_3, LABEL_X1, LABEL_X2,
};
pub use pairing::{
    fourier_matrix, m_set, pairing, Centralizer, FourierContext, FourierMatrix, MPair,
};
pub use transform::{almost_transform, Direction, Family, FamilyMember, MemberKind};

use thiserror::Error;

use crate::groups::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourierError {
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("key mismatch: {0}")]
    KeyMismatch(String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("pinning error: {0}")]
    PinningError(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
