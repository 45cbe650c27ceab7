//! The generic Iwahori–Hecke algebra, matrix models of its irreducible
//! modules, and the bundled `E7` Coxeter-element traces.

mod algebra;
mod dataset;
pub mod matrix;
mod models;
pub mod wgraph;

pub use algebra::{t_multiply, HeckeElement};
pub use dataset::{
    coxeter_trace_from_characters, load_coxeter_traces, parse_phi_label, CharacterData,
    CoxeterTraceDataset, E7_H, E7_N, E7_ORDER,
};
pub use models::{
    braid_relations_hold, build_irrep_model, hecke_trace, parse_partition, partition_label,
    quadratic_relations_hold, supported_labels, trace_of_word, IrrepModel,
};

use thiserror::Error;

use crate::coxeter::CoxeterError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("operands belong to different Cartan data")]
    DatumMismatch,
    #[error("unsupported label {0:?}")]
    UnsupportedLabel(String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("consistency check {constraint} failed: {detail}")]
    ConsistencyError { constraint: String, detail: String },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}
