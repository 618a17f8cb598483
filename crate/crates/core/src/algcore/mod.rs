//! Algebras by structure constants, right modules, hom-spaces and
//! projective homological structure.

pub mod algebra;
pub mod hom;
pub mod module;
pub mod projective;

pub use algebra::{validate_algebra, Algebra, AlgebraError, StructEntry};
pub use hom::{endo_dim, hom_space, HomBasis};
pub use module::{ModuleError, ModuleRep};
pub use projective::{radical, AlgebraData, ProjDim, ProjectiveCover};
