//! Exact computations with Weyl groups, Iwahori–Hecke algebras, Lusztig's
//! nonabelian Fourier transform and unipotent character values of `E7`.

pub mod arith;
pub mod coxeter;
pub mod data;
pub mod e7;
pub mod fourier;
pub mod groups;
pub mod hecke;
pub mod sandbox;
