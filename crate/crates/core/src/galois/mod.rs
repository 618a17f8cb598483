//! Coinvariants, the Galois map β, induction and restriction, the
//! twisting isomorphisms, and crossed products.

pub mod crossed;
pub mod extension;
pub mod props;
pub mod tensor;

use thiserror::Error;

use crate::algcore::{AlgebraError, ModuleError};
use crate::chop::ChopError;
use crate::hopf::HopfError;

pub use crossed::{crossed_product, CrossedProductSpec};
pub use extension::{coinvariants, galois_check, GaloisExtension, NotGaloisReason};
pub use props::{verify_ind_res, verify_ind_twist, IsoCertificate, TwistCertificate};
pub use tensor::{relative_tensor, RelativeTensor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("not Galois: {0:?}")]
    NotGalois(NotGaloisReason),
    #[error("coinvariants do not form a unital subalgebra")]
    CoinvariantsNotSubalgebra,
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("β is not a bimodule map: {0}")]
    NotBimoduleMap(String),
    #[error("β is bijective but A is not projective over B")]
    KreimerTakeuchiContradiction,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("crossed product data has the wrong shape: {0}")]
    CrossedShape(String),
    #[error("action of group element {0} is not an algebra automorphism")]
    NotAutomorphism(usize),
    #[error("cocycle is not normalized at group element {0}")]
    CocycleNotNormalized(usize),
    #[error("cocycle value τ({0},{1}) is not invertible")]
    CocycleNotInvertible(usize, usize),
    #[error("twisted action condition fails at ({0},{1})")]
    TwistedActionFails(usize, usize),
    #[error("cocycle condition fails at ({0},{1},{2})")]
    CocycleConditionFails(usize, usize, usize),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Chop(#[from] ChopError),
}
