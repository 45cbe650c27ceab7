//! Finite general linear groups `GL_n(F_q)`, `n ≤ 3`, enumerated in full to
//! check Bruhat and Hecke algebra statements exhaustively.

mod checks;
mod field;
mod group;

pub use checks::{
    class_cell_counts, convolution_hecke_check, convolution_operators, heckeuch_report,
    heckeuch_verify, sandbox_char_table, specialized_traces, unipotent_summary,
    verify_cell_products, CheckReport, ConvolutionAlgebra, HeckeUchCase, HeckeUchData,
    SandboxCharTable,
};
pub use field::FiniteField;
pub use group::{
    bruhat_permutation, build_sandbox, permutation_word, LieGroupSandbox, Mat, SANDBOX_CAP,
};

use thiserror::Error;

use crate::arith::ArithError;
use crate::coxeter::CoxeterError;
use crate::hecke::HeckeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SandboxError {
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("unsupported field size {0}")]
    UnsupportedField(u8),
    #[error("non-integer character value: {0}")]
    NonIntegerCharacter(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
