//! Degree-zero K-theory: Grothendieck classes, Cartan maps, the G₀(H) ring
//! and the Cartan bound verifier.

mod classes;
mod resolution;
mod ring;
mod theorem;

use thiserror::Error;

use crate::algcore::ModuleError;
use crate::chop::ChopError;
use crate::galois::GaloisError;
use crate::hopf::HopfError;

pub use classes::{
    cartan_analysis, cartan_matrix, g0_class, k0_class, pim_sum, CartanAnalysis, CartanData, ClassKind,
    GrothendieckClass,
};
pub use resolution::{resolve_in_c, Resolution};
pub use ring::{g0_action, g0_ring_product, ActionTable, G0Ring};
pub use theorem::{
    find_pq, hopf_cartan, minimal_m, verify_cartan_bound, MechanismRow, MinimalM, PqWitness, TheoremReport,
};

#[derive(Debug, Error)]
pub enum KzeroError {
    #[error("module is not projective")]
    NotProjective,
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("the Cartan map of H is not injective")]
    CartanNotInjective,
    #[error("finite global dimension of the coinvariants was not detected within the bound")]
    RegularityNotDetected,
    #[error("resolution did not reach the category within gldim(B) steps")]
    IterationBoundExceeded,
    #[error("Cartan bound violated: {0}")]
    BoundViolated(String),
    #[error("no positive multiple of [1] lies in the image of the Cartan map")]
    NoSuchPQ,
    #[error("classes belong to different Grothendieck groups")]
    KindMismatch,
    #[error(transparent)]
    Chop(#[from] ChopError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

impl KzeroError {
    /// Stable variant name.
    pub fn kind(&self) -> &'static str {
        match self {
            KzeroError::NotProjective => "NotProjective",
            KzeroError::ClassMismatch(_) => "ClassMismatch",
            KzeroError::CartanNotInjective => "CartanNotInjective",
            KzeroError::RegularityNotDetected => "RegularityNotDetected",
            KzeroError::IterationBoundExceeded => "IterationBoundExceeded",
            KzeroError::BoundViolated(_) => "BoundViolated",
            KzeroError::NoSuchPQ => "NoSuchPQ",
            KzeroError::KindMismatch => "KindMismatch",
            KzeroError::Chop(_) => "Chop",
            KzeroError::Module(_) => "Module",
            KzeroError::Hopf(_) => "Hopf",
            KzeroError::Galois(_) => "Galois",
        }
    }
}
