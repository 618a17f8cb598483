//! Exact linear algebra over finite fields and over the integers.

pub mod field;
pub mod intmat;
pub mod matrix;
pub mod poly;

pub use field::{Elem, FieldError, FiniteField};
pub use intmat::{hnf, lattice_min_multiple, snf, HermiteForm, IntMatrix, LatticeMultiple, SmithForm};
pub use matrix::{linear_combination, spin, Echelon, FieldMatrix, LinalgError, Subspace};
