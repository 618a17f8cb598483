use std::fmt;
use std::sync::Arc;

use super::bialgebra::HopfAlgebra;
use super::HopfError;
use crate::algcore::{Algebra, ModuleError, ModuleRep};
use crate::exactla::{Elem, FieldMatrix};

/// A right H-comodule algebra; `ρ(aᵢ)` is stored on the basis `a_j ⊗ h_k`
/// (index `j·dim H + k`).
#[derive(Clone)]
pub struct ComoduleAlgebra {
    algebra: Arc<Algebra>,
    hopf: Arc<HopfAlgebra>,
    rho: Vec<Vec<Elem>>,
}

impl fmt::Debug for ComoduleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComoduleAlgebra({:?} over {:?})", self.algebra, self.hopf)
    }
}

impl PartialEq for ComoduleAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.hopf == other.hopf && self.rho == other.rho
    }
}

/// Sparse coaction entry `(i, j, k, v)`: `ρ(aᵢ)` has `v` at `a_j ⊗ h_k`.
pub type CoactionEntry = (usize, usize, usize, Elem);

impl ComoduleAlgebra {
    pub fn from_sparse(
        algebra: Arc<Algebra>,
        hopf: Arc<HopfAlgebra>,
        entries: &[CoactionEntry],
    ) -> Result<Self, HopfError> {
        let (n, m) = (algebra.dim(), hopf.dim());
        let f = algebra.field().clone();
        let mut rho = vec![vec![0; n * m]; n];
        for &(i, j, k, v) in entries {
            if i >= n || j >= n || k >= m {
                return Err(HopfError::Dimension(format!("coaction index ({i},{j},{k}) out of range")));
            }
            rho[i][j * m + k] = f.add(rho[i][j * m + k], v);
        }
        Self::new(algebra, hopf, rho)
    }

    /// Checks that ρ is a unital algebra map, coassociative and counital.
    pub fn new(algebra: Arc<Algebra>, hopf: Arc<HopfAlgebra>, rho: Vec<Vec<Elem>>) -> Result<Self, HopfError> {
        let (n, m) = (algebra.dim(), hopf.dim());
        if algebra.field() != hopf.field() {
            return Err(HopfError::Dimension("algebra and Hopf algebra over different fields".into()));
        }
        if rho.len() != n || rho.iter().any(|r| r.len() != n * m) {
            return Err(HopfError::Dimension("coaction has the wrong shape".into()));
        }
        let ca = ComoduleAlgebra { algebra, hopf, rho };
        ca.check()?;
        Ok(ca)
    }

    fn check(&self) -> Result<(), HopfError> {
        let a = &self.algebra;
        let h = &self.hopf;
        let f = a.field();
        let (n, m) = (a.dim(), h.dim());
        let one_one: Vec<Elem> = (0..n * m).map(|k| f.mul(a.unit()[k / m], h.algebra().unit()[k % m])).collect();
        if self.coact(a.unit()) != one_one {
            return Err(HopfError::CoactionNotAlgebraMap("ρ(1) ≠ 1⊗1".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = a.mul(&a.basis_vector(i), &a.basis_vector(j));
                if self.coact(&prod) != a.tensor_mul(h.algebra(), &self.rho[i], &self.rho[j]) {
                    return Err(HopfError::CoactionNotAlgebraMap(format!("ρ(a{i}·a{j}) ≠ ρ(a{i})·ρ(a{j})")));
                }
            }
        }
        for i in 0..n {
            // (ρ⊗id)ρ and (id⊗Δ)ρ on the basis a ⊗ h ⊗ h
            let mut lhs = vec![0; n * m * m];
            let mut rhs = vec![0; n * m * m];
            let mut counit = vec![0; n];
            for (jk, &c) in self.rho[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (j, k) = (jk / m, jk % m);
                for (xy, &d) in self.rho[j].iter().enumerate() {
                    if d != 0 {
                        let idx = xy * m + k;
                        lhs[idx] = f.mul_add(lhs[idx], c, d);
                    }
                }
                for (xy, &d) in h.delta(k).iter().enumerate() {
                    if d != 0 {
                        let idx = j * m * m + xy;
                        rhs[idx] = f.mul_add(rhs[idx], c, d);
                    }
                }
                counit[j] = f.mul_add(counit[j], c, h.counit()[k]);
            }
            if lhs != rhs {
                return Err(HopfError::CoactionNotCoassociative(i));
            }
            if counit != a.basis_vector(i) {
                return Err(HopfError::CoactionCounitFails(i));
            }
        }
        Ok(())
    }

    /// H as a comodule algebra over itself via Δ.
    pub fn regular(hopf: &Arc<HopfAlgebra>) -> Self {
        let rho = (0..hopf.dim()).map(|i| hopf.delta(i).to_vec()).collect();
        ComoduleAlgebra { algebra: hopf.algebra().clone(), hopf: hopf.clone(), rho }
    }

    /// `ρ(a) = a ⊗ 1` for all a.
    pub fn trivial(algebra: Arc<Algebra>, hopf: Arc<HopfAlgebra>) -> Result<Self, HopfError> {
        let (n, m) = (algebra.dim(), hopf.dim());
        let unit = hopf.algebra().unit().to_vec();
        let rho = (0..n)
            .map(|i| {
                let mut r = vec![0; n * m];
                r[i * m..(i + 1) * m].copy_from_slice(&unit);
                r
            })
            .collect();
        Self::new(algebra, hopf, rho)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn rho(&self, i: usize) -> &[Elem] {
        &self.rho[i]
    }

    /// `(dim A · dim H) × dim A` matrix whose i-th column is `ρ(aᵢ)`.
    pub fn coaction_matrix(&self) -> FieldMatrix {
        let (n, m) = (self.algebra.dim(), self.hopf.dim());
        FieldMatrix::from_fn(self.algebra.field(), n * m, n, |r, c| self.rho[c][r])
    }

    pub fn coact(&self, x: &[Elem]) -> Vec<Elem> {
        let f = self.algebra.field();
        let mut out = vec![0; self.algebra.dim() * self.hopf.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                for (o, &d) in out.iter_mut().zip(&self.rho[i]) {
                    *o = f.mul_add(*o, c, d);
                }
            }
        }
        out
    }

    pub fn sparse_coaction(&self) -> Vec<CoactionEntry> {
        let m = self.hopf.dim();
        let mut out = Vec::new();
        for (i, r) in self.rho.iter().enumerate() {
            for (jk, &v) in r.iter().enumerate() {
                if v != 0 {
                    out.push((i, jk / m, jk % m, v));
                }
            }
        }
        out
    }

    /// `M ⊗ V` with `(m⊗v)·a = m·a₀ ⊗ v·a₁`.
    pub fn twist(&self, m: &ModuleRep, v: &ModuleRep) -> Result<ModuleRep, HopfError> {
        if m.algebra() != &self.algebra || v.algebra() != self.hopf.algebra() {
            return Err(HopfError::Module(ModuleError::AlgebraMismatch));
        }
        let f = self.algebra.field();
        let hd = self.hopf.dim();
        let d = m.dim() * v.dim();
        let action: Vec<FieldMatrix> = self
            .rho
            .iter()
            .map(|r| {
                let mut out = FieldMatrix::zeros(f, d, d);
                for (jk, &c) in r.iter().enumerate() {
                    if c != 0 {
                        out.add_scaled_kron(c, &m.action()[jk / hd], &v.action()[jk % hd]);
                    }
                }
                out
            })
            .collect();
        if d == 0 {
            return Ok(ModuleRep::zero(&self.algebra));
        }
        Ok(ModuleRep::new(self.algebra.clone(), action)?)
    }
}

impl HopfAlgebra {
    /// `V ⊗ W` for H-modules, via Δ.
    pub fn tensor_modules(self: &Arc<Self>, v: &ModuleRep, w: &ModuleRep) -> Result<ModuleRep, HopfError> {
        ComoduleAlgebra::regular(self).twist(v, w)
    }
}
