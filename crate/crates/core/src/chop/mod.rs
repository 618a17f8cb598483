//! MeatAxe: irreducibility, composition series, isomorphism, and the
//! splitting of an algebra into simples and projective indecomposables.

pub mod meataxe;
pub mod series;
pub mod wedderburn;

use thiserror::Error;

use crate::algcore::ModuleError;

pub use meataxe::{is_irreducible, Certificate, Irreducibility};
pub use series::{chop_module, composition_factors, distinct_simples, find_isomorphism, iso_test, SimpleList};
pub use wedderburn::{common_annihilator, decompose, lift_idempotent, pims, Decomposition, PimList};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChopError {
    #[error("the zero module has no irreducibility verdict")]
    ZeroModule,
    #[error("random and exhaustive budgets exhausted; undecided")]
    Undecided,
    #[error("composition factor of dimension {dim} matches no listed simple")]
    UnknownSimple { dim: usize },
    #[error("Wedderburn splitting failed: {0}")]
    WedderburnSplitFailure(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
