use std::sync::Arc;

use crate::algcore::{Algebra, ModuleError, ModuleRep};
use crate::exactla::{Elem, FieldMatrix, Subspace};

/// `N ⊗_B A` as the quotient of the plain space `N ⊗ A` (index `s·dim A + i`)
/// by the relations `n·b ⊗ a − n ⊗ b·a`, with its right A-module structure.
#[derive(Debug, Clone)]
pub struct RelativeTensor {
    pub left_dim: usize,
    pub relations: Subspace,
    pub module: ModuleRep,
}

impl RelativeTensor {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn plain_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    /// Coordinates in the quotient of a plain tensor.
    pub fn project(&self, v: &[Elem]) -> Vec<Elem> {
        self.relations.quotient_coords(v)
    }

    /// Plain basis indices whose images form the quotient basis.
    pub fn basis_indices(&self) -> Vec<usize> {
        self.relations.complement()
    }
}

/// Free right A-module `A^k` on the plain space `F^k ⊗ A`.
pub(crate) fn plain_free(a: &Arc<Algebra>, k: usize) -> ModuleRep {
    let id = FieldMatrix::identity(a.field(), k);
    let action = (0..a.dim()).map(|j| id.kron(a.right_basis_mult(j))).collect();
    ModuleRep::new_unchecked(a.clone(), action)
}

/// `N ⊗_B A` for a right B-module N, where B is the subalgebra of A whose
/// echelon basis (in A's coordinates) is `b_basis`, in the same order as
/// the basis of N's algebra.
pub fn relative_tensor(n: &ModuleRep, b_basis: &Subspace, a: &Arc<Algebra>) -> Result<RelativeTensor, ModuleError> {
    if n.algebra().dim() != b_basis.dim() || b_basis.ambient_dim() != a.dim() {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = a.field();
    let (dn, na) = (n.dim(), a.dim());
    let mut rows = Vec::new();
    for t in 0..b_basis.dim() {
        let bt = b_basis.basis().row(t);
        let lb = a.left_mult(bt);
        for s in 0..dn {
            let nb = n.action()[t].row(s);
            for i in 0..na {
                let mut r = vec![0; dn * na];
                for (s2, &c) in nb.iter().enumerate() {
                    r[s2 * na + i] = c;
                }
                for (k, &c) in lb.row(i).iter().enumerate() {
                    let idx = s * na + k;
                    r[idx] = f.sub(r[idx], c);
                }
                rows.push(r);
            }
        }
    }
    let relations = Subspace::from_rows(f, dn * na, &rows);
    let plain = plain_free(a, dn);
    let module = plain.quotient(&relations)?;
    Ok(RelativeTensor { left_dim: dn, relations, module })
}
