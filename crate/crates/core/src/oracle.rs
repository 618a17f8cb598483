//! Brute-force reference computations, independent of the main algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algcore::{hom_space, AlgebraData, ModuleRep};
use crate::exactla::{FieldMatrix, IntMatrix};
use crate::galois::GaloisExtension;

fn small(m: &IntMatrix) -> Vec<Vec<i128>> {
    m.to_nested().iter().map(|r| r.iter().map(|x| x.to_i128().expect("small entries")).collect()).collect()
}

/// Fraction-free Gaussian elimination (Bareiss).
fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minors(a: &[Vec<i128>], rows: &[usize], k: usize, cols: usize) -> Vec<i128> {
    let cs = subsets(cols, k);
    subsets(rows.len(), k)
        .iter()
        .flat_map(|r| {
            cs.iter().map(move |c| det(r.iter().map(|&i| c.iter().map(|&j| a[rows[i]][j]).collect()).collect()))
        })
        .collect()
}

/// gcd of all k×k minors.
fn divisor(a: &[Vec<i128>], k: usize, cols: usize) -> i128 {
    let rows: Vec<usize> = (0..a.len()).collect();
    minors(a, &rows, k, cols).into_iter().fold(0, |g, x| g.gcd(&x))
}

/// Invariant factors from determinantal divisors `dₖ / dₖ₋₁`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let a = small(m);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.rows().min(m.cols()) {
        let d = divisor(&a, k, m.cols());
        if d == 0 {
            break;
        }
        out.push(BigInt::from(d / prev));
        prev = d;
    }
    out
}

fn rank(a: &[Vec<i128>], cols: usize) -> usize {
    (1..=a.len().min(cols)).rev().find(|&k| divisor(a, k, cols) != 0).unwrap_or(0)
}

/// Least `m ≤ max_m` with `m·v` in the row lattice. `m·v` lies in the
/// lattice iff appending it keeps the rank and the gcd `d_r` of maximal minors.
pub fn min_multiple_search(rows: &IntMatrix, v: &[BigInt], max_m: i64) -> Option<i64> {
    let a = small(rows);
    let cols = rows.cols();
    let r = rank(&a, cols);
    let mut ext = a.clone();
    ext.push(v.iter().map(|x| x.to_i128().expect("small entries")).collect());
    if rank(&ext, cols) != r {
        return None;
    }
    if r == 0 {
        return v.iter().all(Zero::is_zero).then_some(1);
    }
    let base = divisor(&a, r, cols);
    // maximal minors that use the appended row
    let with_v: i128 = subsets(a.len(), r - 1)
        .into_iter()
        .flat_map(|mut idx| {
            idx.push(a.len());
            minors(&ext, &idx, r, cols)
        })
        .fold(0, |g, x| g.gcd(&x));
    (1..=max_m).find(|&m| base.gcd(&(with_v * m as i128)) == base)
}

/// Projectivity as splitting of `A^k → M`, `(x_s) ↦ Σ m_s·x_s`.
pub fn is_projective_by_splitting(m: &ModuleRep) -> bool {
    let a = m.algebra();
    let (d, n) = (m.dim(), a.dim());
    if d == 0 {
        return true;
    }
    let f = a.field();
    let id = FieldMatrix::identity(f, d);
    let free_action: Vec<FieldMatrix> = (0..n).map(|j| id.kron(a.right_basis_mult(j))).collect();
    let free = ModuleRep::new(a.clone(), free_action).expect("free module");
    // π(e_s ⊗ a_i) = m_s · a_i
    let rows: Vec<Vec<_>> =
        (0..d).flat_map(|s| (0..n).map(move |i| (s, i))).map(|(s, i)| m.action()[i].row(s).to_vec()).collect();
    let pi = FieldMatrix::from_rows(f, d, &rows);
    let hom = hom_space(m, &free).expect("same algebra");
    if hom.dim() == 0 {
        return false;
    }
    // Σ c_t X_t π = I, flattened
    let products: Vec<FieldMatrix> = hom.basis.iter().map(|x| x.mul(&pi)).collect();
    let system = FieldMatrix::from_rows(f, d * d, &products.iter().map(|p| p.flatten().to_vec()).collect::<Vec<_>>());
    system.solve_left(id.flatten()).is_some()
}

/// `C[i][j] = dim(Pᵢ eⱼ) / dim End(Sⱼ)`.
pub fn cartan_by_idempotents(data: &AlgebraData) -> Vec<Vec<i64>> {
    data.pims
        .pims
        .iter()
        .map(|p| {
            data.pims
                .idempotents
                .iter()
                .zip(&data.simples.endo_dims)
                .map(|(e, &k)| (p.act(e).rank() / k) as i64)
                .collect()
        })
        .collect()
}

/// In 𝒞 iff the restriction to B splits off a free module.
pub fn in_category_c(ext: &GaloisExtension, m: &ModuleRep) -> bool {
    is_projective_by_splitting(&ext.restrict(m).expect("A-module"))
}

pub fn det_i64(m: &IntMatrix) -> BigInt {
    BigInt::from(det(small(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_small_matrices() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(invariant_factors(&m), vec![BigInt::from(1), BigInt::from(3)]);
        assert_eq!(det_i64(&m), BigInt::from(3));
        let v = [BigInt::from(1), BigInt::from(0)];
        assert_eq!(min_multiple_search(&m, &v, 50), Some(3));
        let s = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(min_multiple_search(&s, &v, 50), None);
    }
}
