use std::fmt;
use std::sync::Arc;

use super::HopfError;
use crate::algcore::{Algebra, ModuleRep};
use crate::exactla::{Elem, FieldMatrix};

/// A finite-dimensional Hopf algebra. `Δ(hᵢ)` is stored on the basis
/// `h_a ⊗ h_b` (index `a·n + b`), `σ(hᵢ)` on the basis of H.
#[derive(Clone)]
pub struct HopfAlgebra {
    algebra: Arc<Algebra>,
    delta: Vec<Vec<Elem>>,
    counit: Vec<Elem>,
    sigma: Vec<Vec<Elem>>,
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({:?})", self.algebra)
    }
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.delta == other.delta
            && self.counit == other.counit
            && self.sigma == other.sigma
    }
}

/// Sparse comultiplication entry `(i, a, b, v)`: `Δ(hᵢ)` has `v` at `h_a ⊗ h_b`.
pub type ComulEntry = (usize, usize, usize, Elem);
/// Sparse antipode entry `(i, j, v)`: `σ(hᵢ)` has `v` at `hⱼ`.
pub type AntipodeEntry = (usize, usize, Elem);

/// Builds and validates Hopf data from sparse entries.
pub fn validate_hopf(
    algebra: Arc<Algebra>,
    comul: &[ComulEntry],
    counit: Vec<Elem>,
    antipode: &[AntipodeEntry],
) -> Result<HopfAlgebra, HopfError> {
    let n = algebra.dim();
    let f = algebra.field().clone();
    let mut delta = vec![vec![0; n * n]; n];
    for &(i, a, b, v) in comul {
        if i >= n || a >= n || b >= n {
            return Err(HopfError::Dimension(format!("comultiplication index ({i},{a},{b}) out of range")));
        }
        delta[i][a * n + b] = f.add(delta[i][a * n + b], v);
    }
    let mut sigma = vec![vec![0; n]; n];
    for &(i, j, v) in antipode {
        if i >= n || j >= n {
            return Err(HopfError::Dimension(format!("antipode index ({i},{j}) out of range")));
        }
        sigma[i][j] = f.add(sigma[i][j], v);
    }
    HopfAlgebra::new(algebra, delta, counit, sigma)
}

impl HopfAlgebra {
    /// Checks, in order: coassociativity, counit, that Δ and ε are algebra
    /// maps, and the antipode axiom.
    pub fn new(
        algebra: Arc<Algebra>,
        delta: Vec<Vec<Elem>>,
        counit: Vec<Elem>,
        sigma: Vec<Vec<Elem>>,
    ) -> Result<Self, HopfError> {
        let n = algebra.dim();
        if delta.len() != n || delta.iter().any(|d| d.len() != n * n) {
            return Err(HopfError::Dimension("comultiplication has the wrong shape".into()));
        }
        if counit.len() != n {
            return Err(HopfError::Dimension("counit has the wrong length".into()));
        }
        if sigma.len() != n || sigma.iter().any(|s| s.len() != n) {
            return Err(HopfError::Dimension("antipode has the wrong shape".into()));
        }
        let h = HopfAlgebra { algebra, delta, counit, sigma };
        h.check_coassociative()?;
        h.check_counit()?;
        h.check_bialgebra()?;
        h.check_antipode()?;
        Ok(h)
    }

    fn check_coassociative(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let mut lhs = vec![0; n * n * n];
            let mut rhs = vec![0; n * n * n];
            for (ab, &c) in self.delta[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (a, b) = (ab / n, ab % n);
                for (xy, &d) in self.delta[a].iter().enumerate() {
                    if d != 0 {
                        let k = xy * n + b;
                        lhs[k] = f.mul_add(lhs[k], c, d);
                    }
                }
                for (xy, &d) in self.delta[b].iter().enumerate() {
                    if d != 0 {
                        let k = a * n * n + xy;
                        rhs[k] = f.mul_add(rhs[k], c, d);
                    }
                }
            }
            if lhs != rhs {
                return Err(HopfError::NotCoassociative(i));
            }
        }
        Ok(())
    }

    fn check_counit(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            let mut left = vec![0; n];
            let mut right = vec![0; n];
            for (ab, &c) in self.delta[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (a, b) = (ab / n, ab % n);
                left[b] = f.mul_add(left[b], c, self.counit[a]);
                right[a] = f.mul_add(right[a], c, self.counit[b]);
            }
            let e = self.algebra.basis_vector(i);
            if left != e || right != e {
                return Err(HopfError::CounitAxiomFails(i));
            }
        }
        Ok(())
    }

    fn check_bialgebra(&self) -> Result<(), HopfError> {
        let a = &self.algebra;
        let n = self.dim();
        let f = self.field();
        let unit = a.unit();
        let one_one: Vec<Elem> = (0..n * n).map(|k| f.mul(unit[k / n], unit[k % n])).collect();
        if self.comul(unit) != one_one {
            return Err(HopfError::NotBialgebraMap("Δ(1) ≠ 1⊗1".into()));
        }
        if self.epsilon(unit) != f.one() {
            return Err(HopfError::NotBialgebraMap("ε(1) ≠ 1".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = a.mul(&a.basis_vector(i), &a.basis_vector(j));
                if self.comul(&prod) != a.tensor_mul(a, &self.delta[i], &self.delta[j]) {
                    return Err(HopfError::NotBialgebraMap(format!("Δ(h{i}·h{j}) ≠ Δ(h{i})·Δ(h{j})")));
                }
                if self.epsilon(&prod) != f.mul(self.counit[i], self.counit[j]) {
                    return Err(HopfError::NotBialgebraMap(format!("ε(h{i}·h{j}) ≠ ε(h{i})·ε(h{j})")));
                }
            }
        }
        Ok(())
    }

    /// `Σ s(h₁)·h₂` and `Σ h₁·s(h₂)` for a linear map `s` given by basis images.
    fn convolve(&self, i: usize, s: &[Vec<Elem>]) -> (Vec<Elem>, Vec<Elem>) {
        let a = &self.algebra;
        let n = self.dim();
        let mut left = a.zero_element();
        let mut right = a.zero_element();
        for (ab, &c) in self.delta[i].iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (x, y) = (ab / n, ab % n);
            let l = a.mul(&s[x], &a.basis_vector(y));
            let r = a.mul(&a.basis_vector(x), &s[y]);
            left = a.add(&left, &a.scale(&l, c));
            right = a.add(&right, &a.scale(&r, c));
        }
        (left, right)
    }

    fn check_antipode(&self) -> Result<(), HopfError> {
        let a = &self.algebra;
        for i in 0..self.dim() {
            let (l, r) = self.convolve(i, &self.sigma);
            let target = a.scale(a.unit(), self.counit[i]);
            if l != target || r != target {
                return Err(HopfError::AntipodeAxiomFails(i));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> &crate::exactla::FiniteField {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self, i: usize) -> &[Elem] {
        &self.delta[i]
    }

    pub fn counit(&self) -> &[Elem] {
        &self.counit
    }

    pub fn sigma(&self, i: usize) -> &[Elem] {
        &self.sigma[i]
    }

    /// `n² × n` matrix whose i-th column is `Δ(hᵢ)`.
    pub fn comul_matrix(&self) -> FieldMatrix {
        let n = self.dim();
        FieldMatrix::from_fn(self.field(), n * n, n, |r, c| self.delta[c][r])
    }

    /// `n × n` matrix whose i-th column is `σ(hᵢ)`.
    pub fn antipode_matrix(&self) -> FieldMatrix {
        let n = self.dim();
        FieldMatrix::from_fn(self.field(), n, n, |r, c| self.sigma[c][r])
    }

    /// `Δ(x)`.
    pub fn comul(&self, x: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut out = vec![0; self.dim() * self.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                for (o, &d) in out.iter_mut().zip(&self.delta[i]) {
                    *o = f.mul_add(*o, c, d);
                }
            }
        }
        out
    }

    pub fn epsilon(&self, x: &[Elem]) -> Elem {
        let f = self.field();
        x.iter().zip(&self.counit).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))
    }

    /// `σ(x)`.
    pub fn antipode(&self, x: &[Elem]) -> Vec<Elem> {
        self.antipode_matrix().mul_col(x)
    }

    /// `σ⁻¹`, checked against `σ⁻¹(h₂)h₁ = ε(h)1 = h₂σ⁻¹(h₁)`.
    pub fn antipode_inverse(&self) -> Result<FieldMatrix, HopfError> {
        let s = self.antipode_matrix();
        let inv = s.inverse().ok_or(HopfError::AntipodeSingular)?;
        let id = FieldMatrix::identity(self.field(), self.dim());
        if s.mul(&inv) != id || inv.mul(&s) != id {
            return Err(HopfError::AntipodeSingular);
        }
        let a = &self.algebra;
        let n = self.dim();
        let images: Vec<Vec<Elem>> = (0..n).map(|i| inv.col(i)).collect();
        for i in 0..n {
            // Σ σ⁻¹(h₂)h₁ and Σ h₂σ⁻¹(h₁)
            let mut left = a.zero_element();
            let mut right = a.zero_element();
            for (xy, &c) in self.delta[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (x, y) = (xy / n, xy % n);
                left = a.add(&left, &a.scale(&a.mul(&images[y], &a.basis_vector(x)), c));
                right = a.add(&right, &a.scale(&a.mul(&a.basis_vector(y), &images[x]), c));
            }
            let target = a.scale(a.unit(), self.counit[i]);
            if left != target || right != target {
                return Err(HopfError::AntipodeInverseIdentity(i));
            }
        }
        Ok(inv)
    }

    /// The trivial module given by ε.
    pub fn trivial_module(&self) -> ModuleRep {
        let f = self.field();
        let action = self.counit.iter().map(|&e| FieldMatrix::scalar(f, 1, e)).collect();
        ModuleRep::new(self.algebra.clone(), action).expect("counit is an algebra map")
    }

    pub fn sparse_comul(&self) -> Vec<ComulEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for (i, d) in self.delta.iter().enumerate() {
            for (ab, &v) in d.iter().enumerate() {
                if v != 0 {
                    out.push((i, ab / n, ab % n, v));
                }
            }
        }
        out
    }

    pub fn sparse_antipode(&self) -> Vec<AntipodeEntry> {
        let mut out = Vec::new();
        for (i, s) in self.sigma.iter().enumerate() {
            for (j, &v) in s.iter().enumerate() {
                if v != 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}
