//! Dense matrices over a [`FiniteField`], row echelon machinery and subspaces.
//!
//! Vectors are rows. A matrix `M` acts on a row vector `v` by `v ↦ v·M`, which
//! is the convention used for right modules throughout the crate.

use std::fmt;

use thiserror::Error;

use super::field::{Elem, FiniteField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("operands live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl FieldMatrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Multiple of the identity.
    pub fn scalar(field: &FiniteField, n: usize, c: Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(field: &FiniteField, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend_from_slice(r);
        }
        FieldMatrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn from_vec(field: &FiniteField, rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), rows * cols);
        FieldMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_fn(field: &FiniteField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        FieldMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = &self.field;
        let n = other.cols;
        let mut out = vec![0; self.rows * n];
        for i in 0..self.rows {
            let orow = &mut out[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = f.mul_add(*o, a, b);
                    }
                }
            }
        }
        FieldMatrix { field: f.clone(), rows: self.rows, cols: n, data: out }
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        FieldMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        FieldMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: Elem) -> FieldMatrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        FieldMatrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: Elem, other: &FieldMatrix) {
        if c == 0 {
            return;
        }
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.mul_add(*a, c, b);
            }
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                if b != 0 {
                    *o = f.mul_add(*o, a, b);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_col(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))).collect()
    }

    /// Column `c` as a vector.
    pub fn col(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Kronecker product; the row/column index of `self` is the major one.
    pub fn kronecker(&self, other: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(self.kron(other))
    }

    pub(crate) fn kron(&self, other: &FieldMatrix) -> FieldMatrix {
        let f = &self.field;
        let (r2, c2) = (other.rows, other.cols);
        let mut out = FieldMatrix::zeros(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * r2 + k, j * c2 + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// `self += c * (a ⊗ b)` without materialising the Kronecker product.
    pub(crate) fn add_scaled_kron(&mut self, c: Elem, a: &FieldMatrix, b: &FieldMatrix) {
        if c == 0 {
            return;
        }
        let f = self.field.clone();
        let (r2, c2) = (b.rows, b.cols);
        debug_assert_eq!(self.rows, a.rows * r2);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x == 0 {
                    continue;
                }
                let cx = f.mul(c, x);
                for k in 0..r2 {
                    let base = (i * r2 + k) * self.cols + j * c2;
                    for l in 0..c2 {
                        let y = b.data[k * c2 + l];
                        if y != 0 {
                            self.data[base + l] = f.mul_add(self.data[base + l], cx, y);
                        }
                    }
                }
            }
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FieldMatrix) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FieldMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).unwrap();
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..cols {
                    let pj = self.data[r * cols + j];
                    if pj != 0 {
                        self.data[i * cols + j] = f.mul_add(self.data[i * cols + j], neg, pj);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M·vᵀ = 0}`, in the canonical form read off the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis (as rows) of `{v : v·M = 0}`.
    pub fn left_kernel(&self) -> FieldMatrix {
        let k = self.transpose().kernel_basis();
        FieldMatrix::from_rows(&self.field, self.rows, &k)
    }

    /// Some `x` with `M·x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = FieldMatrix::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols);
        }
        debug_assert_eq!(self.mul_col(&x), b);
        Some(x)
    }

    /// Some row vector `x` with `x·M = b`.
    pub fn solve_left(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        self.transpose().solve(b)
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = FieldMatrix::zeros(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(FieldMatrix::from_fn(f, n, n, |r, c| aug.get(r, n + c)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut exp: u64) -> FieldMatrix {
        let mut acc = FieldMatrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Sub-matrix keeping the listed rows.
    pub fn select_rows(&self, idx: &[usize]) -> FieldMatrix {
        let rows: Vec<Vec<Elem>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        FieldMatrix::from_rows(&self.field, self.cols, &rows)
    }

    /// Row-major flattening, used to stack matrices as vectors.
    pub fn flatten(&self) -> &[Elem] {
        &self.data
    }
}

/// Linear combination `Σ cᵢ·Mᵢ`.
pub fn linear_combination(field: &FiniteField, coeffs: &[Elem], mats: &[FieldMatrix]) -> FieldMatrix {
    assert_eq!(coeffs.len(), mats.len());
    let (r, c) = mats.first().map(|m| (m.rows, m.cols)).unwrap_or((0, 0));
    let mut out = FieldMatrix::zeros(field, r, c);
    for (&a, m) in coeffs.iter().zip(mats) {
        out.add_scaled(a, m);
    }
    out
}

/// Incrementally built semi-echelon basis: each stored row has a normalised
/// pivot that is zero in every row stored after it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FiniteField,
    dim: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &FiniteField, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Residue of `v` after clearing all stored pivots.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.mul_add(*x, neg, y);
                }
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(r[p]).unwrap();
        for x in r.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_rows(&self.field, self.dim, &self.rows)
    }
}

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: FieldMatrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient_dim(), self.basis)
    }
}

impl Subspace {
    pub fn from_rows(field: &FiniteField, ambient: usize, rows: &[Vec<Elem>]) -> Self {
        let m = FieldMatrix::from_rows(field, ambient, rows);
        Self::from_matrix(&m)
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &FieldMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { basis, pivots }
    }

    pub fn zero(field: &FiniteField, ambient: usize) -> Self {
        Subspace { basis: FieldMatrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: &FiniteField, ambient: usize) -> Self {
        Subspace { basis: FieldMatrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> &FiniteField {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard basis indices complementing the pivots; the images of these
    /// vectors form the canonical basis of the quotient.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in v.iter_mut().zip(self.basis.row(i)) {
                if y != 0 {
                    *x = f.mul_add(*x, neg, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of `v ∈ self` in the echelon basis (read at pivots).
    pub fn coords(&self, v: &[Elem]) -> Vec<Elem> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Coordinates of the image of `v` in the quotient `F^n / self`.
    pub fn quotient_coords(&self, v: &[Elem]) -> Vec<Elem> {
        let r = self.reduce(v);
        self.complement().iter().map(|&c| r[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_matrix(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x·B1 = y·B2  ⇔  (x, -y) in the left kernel of [B1; B2]
        let stacked = self.basis.vstack(&other.basis);
        let k = stacked.left_kernel();
        let rows: Vec<Vec<Elem>> = (0..k.rows()).map(|i| self.basis.vec_mul(&k.row(i)[..self.dim()])).collect();
        Subspace::from_rows(self.field(), self.ambient_dim(), &rows)
    }

    /// Whether `v·g ∈ self` for every basis vector and every matrix `g`.
    pub fn is_invariant(&self, gens: &[FieldMatrix]) -> bool {
        gens.iter().all(|g| (0..self.dim()).all(|i| self.contains(&g.vec_mul(self.basis.row(i)))))
    }
}

/// Smallest subspace containing `seeds` and closed under `v ↦ v·g` for all `g`.
pub fn spin(field: &FiniteField, dim: usize, seeds: &[Vec<Elem>], gens: &[FieldMatrix]) -> Subspace {
    let mut ech = Echelon::new(field, dim);
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.vec_mul(&v);
            if ech.insert(&w) {
                queue.push(w);
            }
            if ech.len() == dim {
                return Subspace::full(field, dim);
            }
        }
    }
    ech.into_subspace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let f = f2();
        assert!(FieldMatrix::identity(&f, 3).kernel_basis().is_empty());
        assert_eq!(FieldMatrix::zeros(&f, 2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_of_all_ones_matches_enumeration() {
        let f = f2();
        let m = FieldMatrix::from_rows(&f, 2, &[vec![1, 1], vec![1, 1]]);
        let k = m.kernel_basis();
        // brute force over F_2^2
        let nonzero_solutions: Vec<Vec<Elem>> =
            (1..4u32).map(|x| vec![x & 1, (x >> 1) & 1]).filter(|v| m.mul_col(v).iter().all(|&y| y == 0)).collect();
        assert_eq!(nonzero_solutions, vec![vec![1, 1]]);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn kronecker_of_identities_and_units() {
        let f = FiniteField::prime(3).unwrap();
        let k = FieldMatrix::identity(&f, 2).kronecker(&FieldMatrix::identity(&f, 3)).unwrap();
        assert_eq!(k, FieldMatrix::identity(&f, 6));
        let mut e11 = FieldMatrix::zeros(&f, 2, 2);
        e11.set(0, 0, 1);
        let k = e11.kronecker(&e11).unwrap();
        assert_eq!(k.data().iter().filter(|&&x| x != 0).count(), 1);
        assert_eq!(k.get(0, 0), 1);
        let g = FiniteField::prime(2).unwrap();
        assert!(e11.kronecker(&FieldMatrix::identity(&g, 1)).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let f = FiniteField::prime(5).unwrap();
        let m = FieldMatrix::from_rows(&f, 2, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FieldMatrix::identity(&f, 2));
        let x = m.solve(&[1, 0]).unwrap();
        assert_eq!(m.mul_col(&x), vec![1, 0]);
        let sing = FieldMatrix::from_rows(&f, 2, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[1, 0]).is_none());
    }

    #[test]
    fn subspace_intersection_and_quotient() {
        let f = f2();
        let a = Subspace::from_rows(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_rows(&f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 1, 0]));
        assert_eq!(a.complement(), vec![2]);
        assert_eq!(a.quotient_coords(&[1, 1, 1]), vec![1]);
    }

    #[test]
    fn spin_under_cyclic_shift() {
        let f = f2();
        let shift = FieldMatrix::from_rows(&f, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(spin(&f, 3, &[vec![1, 0, 0]], std::slice::from_ref(&shift)).dim(), 3);
        assert_eq!(spin(&f, 3, &[vec![1, 1, 1]], &[shift]).dim(), 1);
    }
}
