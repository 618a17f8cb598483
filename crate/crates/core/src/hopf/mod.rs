//! Hopf algebras, comodule algebras, the twist construction and the
//! standard families (group algebras, Taft algebras).

pub mod bialgebra;
pub mod comodule;
pub mod group;
pub mod taft;

use thiserror::Error;

use crate::algcore::{AlgebraError, ModuleError};

pub use bialgebra::{validate_hopf, AntipodeEntry, ComulEntry, HopfAlgebra};
pub use comodule::{CoactionEntry, ComoduleAlgebra};
pub use group::{group_algebra, Group};
pub use taft::sweedler_taft;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("comultiplication is not coassociative on basis element {0}")]
    NotCoassociative(usize),
    #[error("counit axiom fails on basis element {0}")]
    CounitAxiomFails(usize),
    #[error("comultiplication or counit is not an algebra map: {0}")]
    NotBialgebraMap(String),
    #[error("antipode axiom fails on basis element {0}")]
    AntipodeAxiomFails(usize),
    #[error("antipode is singular")]
    AntipodeSingular,
    #[error("σ⁻¹(h₂)h₁ = ε(h) = h₂σ⁻¹(h₁) fails on basis element {0}")]
    AntipodeInverseIdentity(usize),
    #[error("coaction is not an algebra map: {0}")]
    CoactionNotAlgebraMap(String),
    #[error("coaction is not coassociative on basis element {0}")]
    CoactionNotCoassociative(usize),
    #[error("coaction counit axiom fails on basis element {0}")]
    CoactionCounitFails(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{q} is not a primitive {n}-th root of unity")]
    NotPrimitiveRoot { n: usize, q: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

impl HopfError {
    /// Short name of the failing axiom family.
    pub fn axiom(&self) -> &'static str {
        match self {
            HopfError::NotCoassociative(_) => "NotCoassociative",
            HopfError::CounitAxiomFails(_) => "CounitAxiomFails",
            HopfError::NotBialgebraMap(_) => "NotBialgebraMap",
            HopfError::AntipodeAxiomFails(_) => "AntipodeAxiomFails",
            HopfError::AntipodeSingular => "AntipodeSingular",
            HopfError::AntipodeInverseIdentity(_) => "AntipodeInverseIdentity",
            HopfError::CoactionNotAlgebraMap(_) => "CoactionNotAlgebraMap",
            HopfError::CoactionNotCoassociative(_) => "CoactionNotCoassociative",
            HopfError::CoactionCounitFails(_) => "CoactionCounitFails",
            HopfError::NotAGroup(_) => "NotAGroup",
            HopfError::NotPrimitiveRoot { .. } => "NotPrimitiveRoot",
            HopfError::Dimension(_) => "Dimension",
            HopfError::Algebra(_) => "Algebra",
            HopfError::Module(_) => "Module",
        }
    }
}
