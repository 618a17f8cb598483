//! Integer matrices with arbitrary-precision entries: Smith normal form with
//! transforms, row Hermite normal form, and lattice membership queries.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_nested())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    /// Empty-row matrix with a fixed number of columns.
    pub fn with_cols(cols: usize) -> Self {
        IntMatrix { rows: 0, cols, data: vec![] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_nested(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries as `i64`, panicking on overflow; convenient for small reports.
    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| i64::try_from(x).expect("entry exceeds i64")).collect())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(k)) {
                *o += a * b;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// Smith normal form `S = U·M·V` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub fn snf(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        // global minimum of the trailing block as the first pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = floor_div(a.get(i, t), a.get(t, t));
                a.add_row(i, t, &-&q);
                u.add_row(i, t, &-&q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = floor_div(a.get(t, j), a.get(t, t));
                a.add_col(j, t, &-&q);
                v.add_col(j, t, &-&q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = a.get(i, t);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = a.get(t, j);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block by the pivot
            let piv = a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { s: a, u, v }
}

/// Row Hermite normal form `H = T·M`: echelon rows with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`. Zero rows come last.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub t: IntMatrix,
    pub pivots: Vec<usize>,
}

pub fn hnf(m: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut t = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                let x = h.get(i, c);
                if !x.is_zero() && best.is_none_or(|b| x.abs() < h.get(b, c).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            t.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = floor_div(h.get(i, c), h.get(r, c));
                h.add_row(i, r, &-&q);
                t.add_row(i, r, &-&q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        for i in 0..r {
            let q = floor_div(h.get(i, c), h.get(r, c));
            h.add_row(i, r, &-&q);
            t.add_row(i, r, &-&q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { h, t, pivots }
}

/// Least positive `m` with `m·v` in the row lattice of `rows`, together with
/// integer coefficients `a` satisfying `a·rows = m·v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMultiple {
    pub m: BigInt,
    pub coeffs: Vec<BigInt>,
}

pub fn lattice_min_multiple(rows: &IntMatrix, v: &[BigInt]) -> Option<LatticeMultiple> {
    assert_eq!(v.len(), rows.cols(), "vector length must match the lattice ambient rank");
    let hf = hnf(rows);
    let r = hf.pivots.len();
    // Solve c·H_basis = v over Q by forward substitution along pivots.
    let mut residual: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let mut c = Vec::with_capacity(r);
    for (k, &p) in hf.pivots.iter().enumerate() {
        let ck = &residual[p] / BigRational::from_integer(hf.h.get(k, p).clone());
        for j in 0..rows.cols() {
            let hv = hf.h.get(k, j);
            if !hv.is_zero() {
                residual[j] -= &ck * BigRational::from_integer(hv.clone());
            }
        }
        c.push(ck);
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let m = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(m.clone())).to_integer()).collect();
    let mut coeffs = vec![BigInt::zero(); rows.rows()];
    for (k, s) in scaled.iter().enumerate() {
        for (i, t) in hf.t.row(k).iter().enumerate() {
            coeffs[i] += s * t;
        }
    }
    debug_assert_eq!(rows.vec_mul(&coeffs), v.iter().map(|x| x * &m).collect::<Vec<_>>());
    Some(LatticeMultiple { m, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_smith(m: &IntMatrix) -> SmithForm {
        let sf = snf(m);
        assert_eq!(sf.u.mul(m).mul(&sf.v), sf.s);
        assert!(sf.s.is_diagonal());
        assert_eq!(sf.u.det().abs(), BigInt::one());
        assert_eq!(sf.v.det().abs(), BigInt::one());
        let d = sf.invariant_factors();
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        sf
    }

    #[test]
    fn smith_of_small_examples() {
        let sf = check_smith(&IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]));
        assert_eq!(sf.invariant_factors(), big(&[1, 3]));
        let sf = check_smith(&IntMatrix::from_rows(&[vec![2, 2], vec![0, 2]]));
        assert_eq!(sf.invariant_factors(), big(&[2, 2]));
        let sf = check_smith(&IntMatrix::identity(4));
        assert_eq!(sf.s, IntMatrix::identity(4));
        let sf = check_smith(&IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(sf.invariant_factors(), big(&[1]));
    }

    #[test]
    fn smith_of_rectangular_and_zero() {
        check_smith(&IntMatrix::from_rows(&[vec![0, 0, 0], vec![0, 0, 0]]));
        let sf = check_smith(&IntMatrix::from_rows(&[vec![4, 6, 8], vec![6, 9, 12]]));
        assert_eq!(sf.invariant_factors(), big(&[1]));
        let sf = check_smith(&IntMatrix::from_rows(&[vec![6], vec![-4]]));
        assert_eq!(sf.invariant_factors(), big(&[2]));
    }

    #[test]
    fn hermite_is_echelon_and_reduced() {
        let m = IntMatrix::from_rows(&[vec![3, 3, 1], vec![2, 4, 0], vec![1, 1, 1]]);
        let hf = hnf(&m);
        assert_eq!(hf.t.mul(&m), hf.h);
        assert_eq!(hf.t.det().abs(), BigInt::one());
        for (k, &p) in hf.pivots.iter().enumerate() {
            assert!(hf.h.get(k, p).is_positive());
            for i in 0..k {
                assert!(!hf.h.get(i, p).is_negative() && hf.h.get(i, p) < hf.h.get(k, p));
            }
            for i in k + 1..m.rows() {
                assert!(hf.h.get(i, p).is_zero());
            }
        }
    }

    #[test]
    fn lattice_multiple_examples() {
        let r = lattice_min_multiple(&IntMatrix::from_rows(&[vec![2]]), &big(&[1])).unwrap();
        assert_eq!(r.m, BigInt::from(2));
        assert_eq!(r.coeffs, big(&[1]));
        let r = lattice_min_multiple(&IntMatrix::identity(2), &big(&[5, 7])).unwrap();
        assert_eq!(r.m, BigInt::one());
        assert!(lattice_min_multiple(&IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]), &big(&[1, 0])).is_none());
        let r = lattice_min_multiple(&IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]), &big(&[1, 0])).unwrap();
        assert_eq!(r.m, BigInt::from(3));
        assert_eq!(r.coeffs, big(&[2, -1]));
    }
}
