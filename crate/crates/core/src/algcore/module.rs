use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::algebra::Algebra;
use crate::exactla::{linear_combination, spin, Elem, FieldMatrix, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("expected {expected} action matrices, got {got}")]
    WrongActionCount { expected: usize, got: usize },
    #[error("action matrix {index} is not {dim}x{dim}")]
    WrongShape { index: usize, dim: usize },
    #[error("action is not multiplicative: R{basis}·R(gen {generator}) ≠ R(a{basis}·gen {generator})")]
    NotARepresentation { basis: usize, generator: usize },
    #[error("the unit does not act as the identity")]
    NotUnital,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("matrix is not a module homomorphism")]
    NotHomomorphism,
}

/// A finitely generated right module: row vectors with `v·aᵢ = v·Rᵢ`.
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<FieldMatrix>,
    gens: Vec<FieldMatrix>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep(dim {} over {:?})", self.dim, self.algebra)
    }
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.algebra == other.algebra && self.action == other.action
    }
}

impl ModuleRep {
    /// Checks unitality and `Rᵢ·R(g) = R(aᵢ·g)` for every basis element and
    /// algebra generator, which forces the full multiplicativity.
    pub fn new(algebra: Arc<Algebra>, action: Vec<FieldMatrix>) -> Result<Self, ModuleError> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(ModuleError::WrongActionCount { expected: n, got: action.len() });
        }
        let dim = action[0].rows();
        for (index, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(ModuleError::WrongShape { index, dim });
            }
        }
        let field = algebra.field().clone();
        if linear_combination(&field, algebra.unit(), &action) != FieldMatrix::identity(&field, dim) {
            return Err(ModuleError::NotUnital);
        }
        let gens: Vec<FieldMatrix> =
            algebra.generators().iter().map(|g| linear_combination(&field, g, &action)).collect();
        for (gi, (g, rg)) in algebra.generators().iter().zip(&gens).enumerate() {
            for i in 0..n {
                let prod = algebra.mul(&algebra.basis_vector(i), g);
                if action[i].mul(rg) != linear_combination(&field, &prod, &action) {
                    return Err(ModuleError::NotARepresentation { basis: i, generator: gi });
                }
            }
        }
        Ok(ModuleRep { algebra, dim, action, gens })
    }

    /// Trusted constructor for actions that are correct by construction
    /// (restrictions of valid modules to invariant subspaces and the like).
    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, action: Vec<FieldMatrix>) -> Self {
        let dim = action[0].rows();
        let field = algebra.field().clone();
        let gens = algebra.generators().iter().map(|g| linear_combination(&field, g, &action)).collect();
        let m = ModuleRep { algebra, dim, action, gens };
        debug_assert!(ModuleRep::new(m.algebra.clone(), m.action.clone()).is_ok());
        m
    }

    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|j| algebra.right_basis_mult(j).clone()).collect();
        Self::new_unchecked(algebra.clone(), action)
    }

    /// The zero module.
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|_| FieldMatrix::zeros(f, 0, 0)).collect();
        ModuleRep {
            algebra: algebra.clone(),
            dim: 0,
            action,
            gens: vec![FieldMatrix::zeros(f, 0, 0); algebra.generators().len()],
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[FieldMatrix] {
        &self.action
    }

    /// Actions of the algebra generators.
    pub fn generator_action(&self) -> &[FieldMatrix] {
        &self.gens
    }

    /// Matrix by which an algebra element acts.
    pub fn act(&self, x: &[Elem]) -> FieldMatrix {
        linear_combination(self.algebra.field(), x, &self.action)
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    /// Submodule generated by the given vectors.
    pub fn spin(&self, seeds: &[Vec<Elem>]) -> Subspace {
        spin(self.algebra.field(), self.dim, seeds, &self.gens)
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.is_invariant(&self.gens)
    }

    /// Action on an invariant subspace, in its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> Result<ModuleRep, ModuleError> {
        if !self.is_invariant(s) {
            return Err(ModuleError::NotInvariant);
        }
        if s.dim() == 0 {
            return Ok(ModuleRep::zero(&self.algebra));
        }
        let f = self.algebra.field();
        let action = self
            .action
            .iter()
            .map(|r| {
                let rows: Vec<Vec<Elem>> = (0..s.dim()).map(|i| s.coords(&r.vec_mul(s.basis().row(i)))).collect();
                FieldMatrix::from_rows(f, s.dim(), &rows)
            })
            .collect();
        Ok(ModuleRep::new_unchecked(self.algebra.clone(), action))
    }

    /// Action on `M / s`, in the basis of complementary standard vectors.
    pub fn quotient(&self, s: &Subspace) -> Result<ModuleRep, ModuleError> {
        if !self.is_invariant(s) {
            return Err(ModuleError::NotInvariant);
        }
        let comp = s.complement();
        if comp.is_empty() {
            return Ok(ModuleRep::zero(&self.algebra));
        }
        let f = self.algebra.field();
        let action = self
            .action
            .iter()
            .map(|r| {
                let rows: Vec<Vec<Elem>> = comp.iter().map(|&c| s.quotient_coords(r.row(c))).collect();
                FieldMatrix::from_rows(f, comp.len(), &rows)
            })
            .collect();
        Ok(ModuleRep::new_unchecked(self.algebra.clone(), action))
    }

    /// Matrix of the projection `M → M/s` (rows are images of basis vectors).
    pub fn quotient_map(&self, s: &Subspace) -> FieldMatrix {
        let f = self.algebra.field();
        let rows: Vec<Vec<Elem>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                s.quotient_coords(&e)
            })
            .collect();
        FieldMatrix::from_rows(f, s.complement().len(), &rows)
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        if !self.same_algebra(other) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if self.dim == 0 {
            return Ok(other.clone());
        }
        if other.dim == 0 {
            return Ok(self.clone());
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(ModuleRep::new_unchecked(self.algebra.clone(), action))
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> ModuleRep {
        let mut out = ModuleRep::zero(&self.algebra);
        for _ in 0..k {
            out = out.direct_sum(self).expect("same algebra");
        }
        out
    }

    /// Whether `x` (rows: images of basis vectors) intertwines the actions.
    pub fn is_homomorphism(&self, target: &ModuleRep, x: &FieldMatrix) -> bool {
        if x.rows() != self.dim || x.cols() != target.dim {
            return false;
        }
        if self.dim == 0 || target.dim == 0 {
            return true;
        }
        self.gens.iter().zip(&target.gens).all(|(a, b)| a.mul(x) == x.mul(b))
    }

    /// Image of a homomorphism, as a subspace of the target.
    pub fn image(&self, x: &FieldMatrix) -> Subspace {
        Subspace::from_matrix(x)
    }

    /// Kernel of a homomorphism, as a subspace of the source.
    pub fn kernel(&self, x: &FieldMatrix) -> Subspace {
        Subspace::from_matrix(&x.left_kernel())
    }

    /// Rebuilds the module over an equal algebra held in a different handle.
    pub fn rebase(&self, algebra: &Arc<Algebra>) -> Result<ModuleRep, ModuleError> {
        if *algebra.as_ref() != *self.algebra {
            return Err(ModuleError::AlgebraMismatch);
        }
        Ok(ModuleRep { algebra: algebra.clone(), ..self.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::validate_algebra;
    use crate::exactla::FiniteField;

    fn f2c2() -> Arc<Algebra> {
        let f = FiniteField::prime(2).unwrap();
        Arc::new(validate_algebra(&f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], None).unwrap())
    }

    #[test]
    fn regular_module_submodule_and_quotient() {
        let a = f2c2();
        let reg = ModuleRep::regular(&a);
        let s = reg.spin(&[vec![1, 1]]);
        assert_eq!(s.dim(), 1);
        let sub = reg.submodule(&s).unwrap();
        let quo = reg.quotient(&s).unwrap();
        assert_eq!((sub.dim(), quo.dim()), (1, 1));
        // g acts trivially on both
        assert_eq!(sub.action()[1].get(0, 0), 1);
        assert_eq!(quo.action()[1].get(0, 0), 1);
        let pi = reg.quotient_map(&s);
        assert!(reg.is_homomorphism(&quo, &pi));
    }

    #[test]
    fn rejects_non_multiplicative_action() {
        let a = f2c2();
        let f = a.field().clone();
        let id = FieldMatrix::identity(&f, 2);
        let swap = FieldMatrix::from_rows(&f, 2, &[vec![0, 1], vec![1, 1]]);
        let err = ModuleRep::new(a.clone(), vec![id.clone(), swap]).unwrap_err();
        assert!(matches!(err, ModuleError::NotARepresentation { .. }));
        let err = ModuleRep::new(a, vec![FieldMatrix::zeros(&f, 2, 2), id]).unwrap_err();
        assert_eq!(err, ModuleError::NotUnital);
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let a = f2c2();
        let reg = ModuleRep::regular(&a);
        let s = Subspace::from_rows(a.field(), 2, &[vec![1, 0]]);
        assert_eq!(reg.submodule(&s).unwrap_err(), ModuleError::NotInvariant);
    }
}
