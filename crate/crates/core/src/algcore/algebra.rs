use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactla::{spin, Elem, FieldMatrix, FiniteField, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constants are not associative: (a{0}·a{1})·a{2} ≠ a{0}·(a{1}·a{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided unit exists")]
    NoUnit,
    #[error("the supplied unit is not a two-sided identity")]
    NotUnit,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// A finite-dimensional associative unital algebra given by structure
/// constants `aᵢ·aⱼ = Σₖ c[i][j][k]·aₖ`.
#[derive(Clone)]
pub struct Algebra {
    field: FiniteField,
    dim: usize,
    consts: Vec<Elem>,
    unit: Vec<Elem>,
    right: Vec<FieldMatrix>,
    left: Vec<FieldMatrix>,
    generators: Vec<Vec<Elem>>,
    labels: Vec<String>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.field == other.field && self.dim == other.dim && self.consts == other.consts)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {:?}, basis {:?})", self.dim, self.field, self.labels)
    }
}

/// Sparse structure-constant input `(i, j, k, value)`.
pub type StructEntry = (usize, usize, usize, Elem);

/// Builds and checks an algebra. The unit is checked first, then
/// associativity on every basis triple. When `unit` is `None` it is solved for.
pub fn validate_algebra(
    field: &FiniteField,
    dim: usize,
    entries: &[StructEntry],
    unit: Option<Vec<Elem>>,
) -> Result<Algebra, AlgebraError> {
    let n = dim;
    let mut consts = vec![0; n * n * n];
    for &(i, j, k, v) in entries {
        if i >= n || j >= n || k >= n {
            return Err(AlgebraError::Dimension(format!(
                "structure constant index ({i},{j},{k}) out of range for dimension {n}"
            )));
        }
        let slot = &mut consts[(i * n + j) * n + k];
        *slot = field.add(*slot, v);
    }
    Algebra::from_dense(field, n, consts, unit)
}

impl Algebra {
    pub fn from_dense(
        field: &FiniteField,
        n: usize,
        consts: Vec<Elem>,
        unit: Option<Vec<Elem>>,
    ) -> Result<Algebra, AlgebraError> {
        if consts.len() != n * n * n {
            return Err(AlgebraError::Dimension(format!("expected {} structure constants", n * n * n)));
        }
        if n == 0 {
            return Err(AlgebraError::Dimension("the zero algebra is not allowed".into()));
        }
        let c = |i: usize, j: usize, k: usize| consts[(i * n + j) * n + k];
        let right: Vec<FieldMatrix> = (0..n).map(|j| FieldMatrix::from_fn(field, n, n, |i, k| c(i, j, k))).collect();
        let left: Vec<FieldMatrix> = (0..n).map(|i| FieldMatrix::from_fn(field, n, n, |j, k| c(i, j, k))).collect();

        let id = FieldMatrix::identity(field, n);
        let unit = match unit {
            Some(u) => {
                if u.len() != n {
                    return Err(AlgebraError::Dimension("unit vector has wrong length".into()));
                }
                let lu = crate::exactla::linear_combination(field, &u, &left);
                let ru = crate::exactla::linear_combination(field, &u, &right);
                if lu != id || ru != id {
                    return Err(AlgebraError::NotUnit);
                }
                u
            }
            None => {
                // Σ uᵢ Lᵢ = I and Σ uᵢ Rᵢ = I as one row system in u.
                let width = 2 * n * n;
                let rows: Vec<Vec<Elem>> = (0..n)
                    .map(|i| {
                        let mut r = left[i].flatten().to_vec();
                        r.extend_from_slice(right[i].flatten());
                        r
                    })
                    .collect();
                let sys = FieldMatrix::from_rows(field, width, &rows);
                let mut target = id.flatten().to_vec();
                target.extend_from_slice(id.flatten());
                sys.solve_left(&target).ok_or(AlgebraError::NoUnit)?
            }
        };
        for j in 0..n {
            for k in 0..n {
                let lhs = right[j].mul(&right[k]);
                let mut rhs = FieldMatrix::zeros(field, n, n);
                for l in 0..n {
                    rhs.add_scaled(c(j, k, l), &right[l]);
                }
                if lhs != rhs {
                    let i = (0..n).find(|&i| lhs.row(i) != rhs.row(i)).unwrap();
                    return Err(AlgebraError::NotAssociative(i, j, k));
                }
            }
        }

        let mut alg = Algebra {
            field: field.clone(),
            dim: n,
            consts,
            unit,
            right,
            left,
            generators: vec![],
            labels: (0..n).map(|i| format!("a{i}")).collect(),
        };
        alg.generators = alg.find_generators();
        Ok(alg)
    }

    fn find_generators(&self) -> Vec<Vec<Elem>> {
        let n = self.dim;
        let mut gens: Vec<Vec<Elem>> = Vec::new();
        let mut span = spin(&self.field, n, std::slice::from_ref(&self.unit), &[]);
        for i in 0..n {
            if span.dim() == n {
                break;
            }
            let e = self.basis_vector(i);
            if span.contains(&e) {
                continue;
            }
            gens.push(e);
            let mats: Vec<FieldMatrix> = gens.iter().map(|g| self.right_mult(g)).collect();
            span = spin(&self.field, n, std::slice::from_ref(&self.unit), &mats);
        }
        gens
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Elem] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Elem {
        self.consts[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero structure constants in index order.
    pub fn sparse_constants(&self) -> Vec<StructEntry> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.constant(i, j, k);
                    if v != 0 {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    /// Algebra generators found greedily among the basis elements.
    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero_element(&self) -> Vec<Elem> {
        vec![0; self.dim]
    }

    /// Matrix of `x ↦ x·aⱼ` on row vectors.
    pub fn right_basis_mult(&self, j: usize) -> &FieldMatrix {
        &self.right[j]
    }

    /// Matrix of `y ↦ aᵢ·y` on row vectors.
    pub fn left_basis_mult(&self, i: usize) -> &FieldMatrix {
        &self.left[i]
    }

    pub fn right_mult(&self, y: &[Elem]) -> FieldMatrix {
        crate::exactla::linear_combination(&self.field, y, &self.right)
    }

    pub fn left_mult(&self, x: &[Elem]) -> FieldMatrix {
        crate::exactla::linear_combination(&self.field, x, &self.left)
    }

    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let xy = f.mul(xi, yj);
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.consts[base + k];
                    if c != 0 {
                        *o = f.mul_add(*o, xy, c);
                    }
                }
            }
        }
        out
    }

    /// Product in `self ⊗ other` of two tensors given on the basis `aᵢ ⊗ bⱼ`.
    pub fn tensor_mul(&self, other: &Algebra, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let (n, m) = (self.dim, other.dim);
        let mut out = vec![0; n * m];
        let nz = |v: &[Elem]| -> Vec<(usize, Elem)> {
            v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for &(p, xv) in &xs {
            let (pa, pb) = (p / m, p % m);
            for &(q, yv) in &ys {
                let (qa, qb) = (q / m, q % m);
                let c = f.mul(xv, yv);
                let left = &self.consts[(pa * n + qa) * n..(pa * n + qa + 1) * n];
                let right = &other.consts[(pb * m + qb) * m..(pb * m + qb + 1) * m];
                for (k, &ck) in left.iter().enumerate() {
                    if ck == 0 {
                        continue;
                    }
                    let ckc = f.mul(ck, c);
                    for (l, &cl) in right.iter().enumerate() {
                        if cl != 0 {
                            out[k * m + l] = f.mul_add(out[k * m + l], ckc, cl);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, x: &[Elem], c: Elem) -> Vec<Elem> {
        x.iter().map(|&a| self.field.mul(a, c)).collect()
    }

    pub fn is_idempotent(&self, e: &[Elem]) -> bool {
        self.mul(e, e) == e
    }

    /// Whether a subspace is a two-sided ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.is_invariant(&self.right) && s.is_invariant(&self.left)
    }

    /// Smallest `t` with `Sᵗ = 0` for a subspace `S` of nilpotent elements,
    /// or `None` if powers stabilise at a nonzero subspace.
    pub fn nilpotency_index(&self, s: &Subspace) -> Option<usize> {
        let mut power = s.clone();
        let mut t = 1;
        while power.dim() > 0 {
            let mut rows = Vec::new();
            for i in 0..power.dim() {
                for j in 0..s.dim() {
                    rows.push(self.mul(power.basis().row(i), s.basis().row(j)));
                }
            }
            let next = Subspace::from_rows(&self.field, self.dim, &rows);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
            t += 1;
        }
        Some(t)
    }

    /// Subalgebra on a subspace containing the unit and closed under products,
    /// with structure constants in the echelon basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Algebra, AlgebraError> {
        let k = s.dim();
        let f = &self.field;
        if !s.contains(&self.unit) {
            return Err(AlgebraError::NoUnit);
        }
        let mut consts = vec![0; k * k * k];
        for a in 0..k {
            for b in 0..k {
                let prod = self.mul(s.basis().row(a), s.basis().row(b));
                if !s.contains(&prod) {
                    return Err(AlgebraError::Dimension("subspace is not closed under multiplication".into()));
                }
                for (c, v) in s.coords(&prod).into_iter().enumerate() {
                    consts[(a * k + b) * k + c] = v;
                }
            }
        }
        let unit = s.coords(&self.unit);
        Algebra::from_dense(f, k, consts, Some(unit))
    }

    /// Quotient algebra by a two-sided ideal, in the complement basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Algebra, AlgebraError> {
        let comp = ideal.complement();
        let k = comp.len();
        let mut consts = vec![0; k * k * k];
        for (a, &ia) in comp.iter().enumerate() {
            for (b, &ib) in comp.iter().enumerate() {
                let prod = self.mul(&self.basis_vector(ia), &self.basis_vector(ib));
                for (c, v) in ideal.quotient_coords(&prod).into_iter().enumerate() {
                    consts[(a * k + b) * k + c] = v;
                }
            }
        }
        let unit = ideal.quotient_coords(&self.unit);
        Algebra::from_dense(&self.field, k, consts, Some(unit))
    }

    /// Tensor product algebra on the basis `aᵢ ⊗ bⱼ` (index `i·dim B + j`).
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        let f = &self.field;
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut consts = vec![0; d * d * d];
        for i1 in 0..n {
            for j1 in 0..n {
                for k1 in 0..n {
                    let c1 = self.constant(i1, j1, k1);
                    if c1 == 0 {
                        continue;
                    }
                    for i2 in 0..m {
                        for j2 in 0..m {
                            for k2 in 0..m {
                                let c2 = other.constant(i2, j2, k2);
                                if c2 == 0 {
                                    continue;
                                }
                                let (a, b, c) = (i1 * m + i2, j1 * m + j2, k1 * m + k2);
                                consts[(a * d + b) * d + c] = f.mul(c1, c2);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0; d];
        for i in 0..n {
            for j in 0..m {
                unit[i * m + j] = f.mul(self.unit[i], other.unit[j]);
            }
        }
        let labels = self.labels.iter().flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}"))).collect();
        Ok(Algebra::from_dense(f, d, consts, Some(unit))?.with_labels(labels))
    }

    pub fn into_arc(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper-triangular 2×2 matrices over F_2 on e11, e12, e22.
    fn ut2() -> Algebra {
        let f = FiniteField::prime(2).unwrap();
        let entries = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)];
        validate_algebra(&f, 3, &entries, None).unwrap()
    }

    #[test]
    fn ut2_is_valid_with_unit_e11_plus_e22() {
        let a = ut2();
        assert_eq!(a.unit(), &[1, 0, 1]);
        assert_eq!(a.mul(&[0, 1, 0], &[0, 1, 0]), vec![0, 0, 0]);
    }

    #[test]
    fn group_algebra_of_c2_is_valid() {
        let f = FiniteField::prime(2).unwrap();
        let a = validate_algebra(&f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], None).unwrap();
        assert_eq!(a.unit(), &[1, 0]);
        assert_eq!(a.generators().len(), 1);
    }

    #[test]
    fn missing_unit_is_reported() {
        let f = FiniteField::prime(2).unwrap();
        // a1·a1 = a2, a2·a1 = a1 (0-indexed: a0·a0 = a1, a1·a0 = a0)
        let err = validate_algebra(&f, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)], None).unwrap_err();
        assert_eq!(err, AlgebraError::NoUnit);
    }

    #[test]
    fn non_associative_constants_are_rejected() {
        let f = FiniteField::prime(3).unwrap();
        // unit a0, and a1·a1 = a2, a1·a2 = a1, a2·a1 = 0, a2·a2 = 0
        let entries =
            [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1), (1, 2, 1, 1)];
        let err = validate_algebra(&f, 3, &entries, None).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAssociative(..)), "{err:?}");
    }

    #[test]
    fn radical_candidate_of_ut2_is_nilpotent_ideal() {
        let a = ut2();
        let j = Subspace::from_rows(a.field(), 3, &[vec![0, 1, 0]]);
        assert!(a.is_ideal(&j));
        assert_eq!(a.nilpotency_index(&j), Some(2));
        let q = a.quotient(&j).unwrap();
        assert_eq!(q.dim(), 2);
    }
}
