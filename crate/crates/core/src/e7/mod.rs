//! The regular unipotent class of `E7` in characteristic 2: derivation of
//! the bundled datasets, the sign constraint on `ξ` and the value tables.

mod derive;
mod pipeline;

pub use derive::{
    derive_datasets, derive_family_dataset, derive_trace_dataset, fake_degree_in_v,
    summarize_characters, CharacterSummary, DerivedData, FamilySearchReport,
};
pub use pipeline::{
    cell_sum, chi_cuspidal_table, empty_cell_backsolve, empty_cell_sum, final_value_table,
    recover_almost_characters, regular_class_model, regular_class_sum, solve_signs,
    solve_signs_with, unipotent_values, AuditEntry, AuditKind, CharValueTable, RegUnipModel,
    RegularValues, SignAxioms, SignSolution, CHI_A1, CHI_A2, ELSEWHERE, F0_ROWS, LABEL_TRIVIAL,
};

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::fourier::FourierError;
use crate::groups::GroupError;
use crate::hecke::HeckeError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum E7Error {
    #[error("dataset derivation failed: {0}")]
    Derivation(String),
    #[error("dataset pinning violated: {0}")]
    PinningError(String),
    #[error("sign constraints do not determine xi: surviving (xi, delta) = {survivors:?}")]
    AmbiguousSign { survivors: Vec<(i8, i8)> },
    #[error("invalid sign {0}; expected +1 or -1")]
    InvalidSign(i64),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
}
