//! Exact scalars: cyclotomic numbers and Laurent polynomials in `v`, `q = v²`.

mod cyclo;
mod laurent;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycNum};
pub use laurent::{laurent_specialize, LaurentPoly, QuadSurd};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("unsupported specialization: {0}")]
    UnsupportedSpecialization(String),
}

/// Convenience: `ζ_m^k`.
pub fn zeta(m: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(m, k)
}

/// A vector space over the cyclotomic numbers; the value type of almost
/// character transforms.
pub trait CycModule: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &CycNum) -> Self;
}

impl CycModule for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &CycNum) -> Self {
        self * c
    }
}

impl CycModule for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, c: &CycNum) -> Self {
        self.scale(c)
    }
}
