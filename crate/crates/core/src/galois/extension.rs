use std::sync::Arc;

use super::tensor::{relative_tensor, RelativeTensor};
use super::GaloisError;
use crate::algcore::{Algebra, AlgebraData, ModuleError, ModuleRep};
use crate::exactla::{linear_combination, Elem, FieldMatrix, Subspace};
use crate::hopf::ComoduleAlgebra;
use crate::rng::Rng;

/// `B = {a : ρ(a) = a ⊗ 1}`, echelonized in A's coordinates.
pub fn coinvariants(ca: &ComoduleAlgebra) -> Result<Subspace, GaloisError> {
    let a = ca.algebra();
    let (n, m) = (a.dim(), ca.hopf().dim());
    let f = a.field();
    let hunit = ca.hopf().algebra().unit();
    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|i| {
            let mut r = ca.rho(i).to_vec();
            for k in 0..m {
                r[i * m + k] = f.sub(r[i * m + k], hunit[k]);
            }
            r
        })
        .collect();
    let kernel = FieldMatrix::from_rows(f, n * m, &rows).left_kernel();
    let b = Subspace::from_matrix(&kernel);
    if !b.contains(a.unit()) {
        return Err(GaloisError::CoinvariantsNotSubalgebra);
    }
    for s in 0..b.dim() {
        for t in 0..b.dim() {
            if !b.contains(&a.mul(b.basis().row(s), b.basis().row(t))) {
                return Err(GaloisError::CoinvariantsNotSubalgebra);
            }
        }
    }
    Ok(b)
}

/// Why β fails to be bijective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotGaloisReason {
    /// `dim A⊗_B A ≠ dim A · dim H`.
    DimensionDefect { tensor_dim: usize, target_dim: usize },
    /// A nonzero element of `A⊗_B A` killed by β (quotient coordinates).
    Kernel(Vec<Elem>),
}

/// A comodule algebra with its coinvariants, β on `A⊗_B A` and the
/// homological data of both algebras.
#[derive(Debug, Clone)]
pub struct GaloisExtension {
    pub ca: ComoduleAlgebra,
    pub coinv_basis: Subspace,
    pub b: Arc<Algebra>,
    pub tensor: RelativeTensor,
    /// Rows: images of the quotient basis of `A⊗_B A` in `A⊗H`.
    pub beta: FieldMatrix,
    pub galois: bool,
    pub defect: Option<NotGaloisReason>,
    pub a_data: AlgebraData,
    pub b_data: AlgebraData,
}

impl GaloisExtension {
    /// Computes everything and records whether β is bijective.
    pub fn analyze(ca: &ComoduleAlgebra, rng: &mut Rng) -> Result<Self, GaloisError> {
        let a = ca.algebra().clone();
        let h = ca.hopf().clone();
        let f = a.field().clone();
        let (n, m) = (a.dim(), h.dim());
        let coinv = coinvariants(ca)?;
        let b = Arc::new(a.subalgebra(&coinv)?);
        let a_reg = ModuleRep::regular(&a);
        let a_over_b = restrict_to(&a_reg, &coinv, &b);
        let tensor = relative_tensor(&a_over_b, &coinv, &a)?;

        // β on the plain space: x_s ⊗ a_i ↦ Σ ρ(a_i)_{(j,k)} (a_s a_j) ⊗ h_k
        let mut plain_beta = FieldMatrix::zeros(&f, n * n, n * m);
        for s in 0..n {
            for i in 0..n {
                let row = s * n + i;
                for (jk, &c) in ca.rho(i).iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let (j, k) = (jk / m, jk % m);
                    for (l, &v) in a.left_basis_mult(s).row(j).iter().enumerate() {
                        if v != 0 {
                            let col = l * m + k;
                            plain_beta.set(row, col, f.mul_add(plain_beta.get(row, col), c, v));
                        }
                    }
                }
            }
        }
        for r in 0..tensor.relations.dim() {
            if plain_beta.vec_mul(tensor.relations.basis().row(r)).iter().any(|&x| x != 0) {
                return Err(GaloisError::NotWellDefined("β does not vanish on the relations of A⊗_B A".into()));
            }
        }
        check_bimodule(ca, &plain_beta)?;

        let beta = plain_beta.select_rows(&tensor.basis_indices());
        let defect = if beta.rows() != beta.cols() {
            Some(NotGaloisReason::DimensionDefect { tensor_dim: beta.rows(), target_dim: beta.cols() })
        } else {
            let k = beta.left_kernel();
            (k.rows() > 0).then(|| NotGaloisReason::Kernel(k.row(0).to_vec()))
        };
        let galois = defect.is_none();

        let a_data = AlgebraData::compute(&a, rng)?;
        let b_data = AlgebraData::compute(&b, rng)?;
        let projective = b_data.is_projective(&a_over_b)?;
        if galois && !projective {
            return Err(GaloisError::KreimerTakeuchiContradiction);
        }
        Ok(GaloisExtension { ca: ca.clone(), coinv_basis: coinv, b, tensor, beta, galois, defect, a_data, b_data })
    }

    pub fn a(&self) -> &Arc<Algebra> {
        self.ca.algebra()
    }

    /// Restriction of an A-module to B.
    pub fn restrict(&self, m: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        if m.algebra() != self.a() {
            return Err(ModuleError::AlgebraMismatch);
        }
        Ok(restrict_to(m, &self.coinv_basis, &self.b_data.algebra))
    }

    /// `N ⊗_B A`.
    pub fn induce_tensor(&self, n: &ModuleRep) -> Result<RelativeTensor, ModuleError> {
        if n.algebra().as_ref() != self.b.as_ref() {
            return Err(ModuleError::AlgebraMismatch);
        }
        relative_tensor(n, &self.coinv_basis, self.a())
    }

    pub fn induce(&self, n: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        Ok(self.induce_tensor(n)?.module)
    }

    /// Whether the restriction to B is projective.
    pub fn in_category_c(&self, m: &ModuleRep) -> Result<bool, ModuleError> {
        self.b_data.is_projective(&self.restrict(m)?)
    }
}

/// Action of the B-basis on M, where `b_basis` lists B inside A.
fn restrict_to(m: &ModuleRep, b_basis: &Subspace, b: &Arc<Algebra>) -> ModuleRep {
    let f = m.algebra().field();
    if m.dim() == 0 {
        return ModuleRep::zero(b);
    }
    let action = (0..b_basis.dim()).map(|t| linear_combination(f, b_basis.basis().row(t), m.action())).collect();
    ModuleRep::new_unchecked(b.clone(), action)
}

/// β commutes with left multiplication on the first factor and with the
/// right A-actions on `A⊗A` and `A⊗H`.
fn check_bimodule(ca: &ComoduleAlgebra, beta: &FieldMatrix) -> Result<(), GaloisError> {
    let a = ca.algebra();
    let h = ca.hopf().algebra();
    let f = a.field();
    let (n, m) = (a.dim(), h.dim());
    let id_a = FieldMatrix::identity(f, n);
    let id_h = FieldMatrix::identity(f, m);
    for k in 0..n {
        let left_plain = a.left_basis_mult(k).kron(&id_a);
        let left_target = a.left_basis_mult(k).kron(&id_h);
        if left_plain.mul(beta) != beta.mul(&left_target) {
            return Err(GaloisError::NotBimoduleMap(format!("left multiplication by a{k}")));
        }
        let right_plain = id_a.kron(a.right_basis_mult(k));
        let mut right_target = FieldMatrix::zeros(f, n * m, n * m);
        for (jl, &c) in ca.rho(k).iter().enumerate() {
            if c != 0 {
                right_target.add_scaled_kron(c, a.right_basis_mult(jl / m), h.right_basis_mult(jl % m));
            }
        }
        if right_plain.mul(beta) != beta.mul(&right_target) {
            return Err(GaloisError::NotBimoduleMap(format!("right multiplication by a{k}")));
        }
    }
    Ok(())
}

/// Galois certification: an error unless β is bijective.
pub fn galois_check(ca: &ComoduleAlgebra, rng: &mut Rng) -> Result<GaloisExtension, GaloisError> {
    let ext = GaloisExtension::analyze(ca, rng)?;
    match &ext.defect {
        None => Ok(ext),
        Some(reason) => Err(GaloisError::NotGalois(reason.clone())),
    }
}
