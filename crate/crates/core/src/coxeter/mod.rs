//! Finite root systems, Weyl groups and Coxeter elements.

mod cartan;
mod classes;
mod conjugate;
mod element;
mod roots;

pub use cartan::CartanDatum;
pub use classes::{cyclotomic_factorization, WeylClasses};
pub use conjugate::{
    coxeter_conjugator, parse_ordering, replay_moves, ConjugatorCertificate, ShiftMove,
};
pub use element::WeylElement;
pub use roots::RootSystem;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("not a permutation of all nodes")]
    NotAnOrdering,
    #[error("permutation is not induced by a Weyl group element")]
    NotAnElement,
    #[error("generator {generator} does not give an involution of the relative Weyl group")]
    NotRelative { generator: usize },
    #[error("illegal shift move")]
    IllegalMove,
    #[error("enumeration exceeded {0} elements")]
    EnumerationCap(usize),
}
