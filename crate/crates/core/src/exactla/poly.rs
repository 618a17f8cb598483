//! Univariate polynomials over a finite field, lowest degree first.
//!
//! Enough machinery for the MeatAxe: characteristic polynomials of matrices,
//! square-free decomposition and Berlekamp factorisation into irreducibles.

use super::field::{Elem, FiniteField};
use super::matrix::FieldMatrix;

pub type Poly = Vec<Elem>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(a: &[Elem]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn sub(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn scale(f: &FiniteField, a: &[Elem], c: Elem) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(f: &FiniteField, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).unwrap();
    let mut r = trim(a.to_vec());
    let mut q = vec![0; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        q[shift] = c;
        let neg = f.neg(c);
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = f.mul_add(r[shift + i], neg, bi);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[Elem]) -> Poly {
    match degree(a) {
        None => vec![],
        Some(d) => scale(f, a, f.inv(a[d]).unwrap()),
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn derivative(f: &FiniteField, a: &[Elem]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect())
}

pub fn pow_mod(f: &FiniteField, base: &[Elem], mut exp: u64, modulus: &[Elem]) -> Poly {
    let mut acc = rem(f, &[1], modulus);
    let mut b = rem(f, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), modulus);
        }
        b = rem(f, &mul(f, &b, &b), modulus);
        exp >>= 1;
    }
    acc
}

/// `p(M)` for a square matrix `M`, by Horner's rule.
pub fn eval_matrix(f: &FiniteField, p: &[Elem], m: &FieldMatrix) -> FieldMatrix {
    let n = m.rows();
    let mut acc = FieldMatrix::zeros(f, n, n);
    for &c in p.iter().rev() {
        acc = acc.mul(m).add(&FieldMatrix::scalar(f, n, c));
    }
    acc
}

/// Characteristic polynomial `det(x·I − M)` via reduction to Hessenberg form.
pub fn charpoly(m: &FieldMatrix) -> Poly {
    assert!(m.is_square());
    let f = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                let t = h.get(piv, c);
                h.set(piv, c, h.get(j + 1, c));
                h.set(j + 1, c, t);
            }
            for r in 0..n {
                let t = h.get(r, piv);
                h.set(r, piv, h.get(r, j + 1));
                h.set(r, j + 1, t);
            }
        }
        let pinv = f.inv(h.get(j + 1, j)).unwrap();
        for i in j + 2..n {
            let u = f.mul(h.get(i, j), pinv);
            if u == 0 {
                continue;
            }
            let nu = f.neg(u);
            for c in 0..n {
                let v = f.mul_add(h.get(i, c), nu, h.get(j + 1, c));
                h.set(i, c, v);
            }
            for r in 0..n {
                let v = f.mul_add(h.get(r, j + 1), u, h.get(r, i));
                h.set(r, j + 1, v);
            }
        }
    }
    // Recurrence on leading principal minors (1-indexed in the comments).
    let hh = |a: usize, b: usize| h.get(a - 1, b - 1);
    let mut ps: Vec<Poly> = vec![vec![1]];
    for k in 1..=n {
        let mut pk = mul(&f, &[f.neg(hh(k, k)), 1], &ps[k - 1]);
        let mut t = f.one();
        for i in (1..k).rev() {
            t = f.mul(t, hh(i + 1, i));
            let c = f.mul(hh(i, k), t);
            if c != 0 {
                pk = sub(&f, &pk, &scale(&f, &ps[i - 1], c));
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// `p`-th root of a polynomial whose exponents are all multiples of `p`.
fn pth_root(f: &FiniteField, a: &[Elem]) -> Poly {
    let p = f.characteristic() as usize;
    let root_exp = (f.order() / f.characteristic()) as u64;
    trim(a.iter().step_by(p).map(|&c| f.pow(c, root_exp)).collect())
}

/// Square-free decomposition of a monic polynomial: pairs `(g, k)` with the
/// `g` square-free, pairwise coprime and `a = Π g^k`.
pub fn squarefree_decomposition(f: &FiniteField, a: &[Elem]) -> Vec<(Poly, usize)> {
    let a = monic(f, a);
    let mut out = Vec::new();
    sqf_rec(f, &a, 1, &mut out);
    out.sort_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)));
    out
}

fn sqf_rec(f: &FiniteField, a: &[Elem], mult: usize, out: &mut Vec<(Poly, usize)>) {
    if degree(a).unwrap_or(0) == 0 {
        return;
    }
    let p = f.characteristic() as usize;
    let da = derivative(f, a);
    if da.is_empty() {
        sqf_rec(f, &pth_root(f, a), mult * p, out);
        return;
    }
    let mut c = gcd(f, a, &da);
    let mut w = divrem(f, a, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(f, &w, &c);
        let z = divrem(f, &w, &y).0;
        if degree(&z).unwrap_or(0) > 0 {
            out.push((monic(f, &z), i * mult));
        }
        i += 1;
        w = y;
        c = divrem(f, &c, &w).0;
    }
    if degree(&c).unwrap_or(0) > 0 {
        sqf_rec(f, &pth_root(f, &c), mult * p, out);
    }
}

/// Irreducible factors of a square-free monic polynomial (Berlekamp).
pub fn berlekamp(f: &FiniteField, a: &[Elem]) -> Vec<Poly> {
    let a = monic(f, a);
    let n = match degree(&a) {
        None | Some(0) => return vec![],
        Some(1) => return vec![a],
        Some(n) => n,
    };
    let xq = pow_mod(f, &[0, 1], f.order() as u64, &a);
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![1];
    for _ in 0..n {
        let mut r = cur.clone();
        r.resize(n, 0);
        rows.push(r);
        cur = rem(f, &mul(f, &cur, &xq), &a);
    }
    let mut q = FieldMatrix::from_rows(f, n, &rows);
    for i in 0..n {
        q.set(i, i, f.sub(q.get(i, i), 1));
    }
    let kernel = q.left_kernel();
    let r = kernel.rows();
    let mut factors = vec![a.clone()];
    for k in 0..r {
        if factors.len() == r {
            break;
        }
        let g = trim(kernel.row(k).to_vec());
        if degree(&g).unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if degree(&h) == Some(1) {
                next.push(h);
                continue;
            }
            for c in f.elements() {
                let d = gcd(f, &h, &sub(f, &g, &[c]));
                if degree(&d).unwrap_or(0) > 0 {
                    next.push(d);
                }
            }
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), r);
    factors.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
    factors
}

/// Distinct monic irreducible factors with multiplicities, sorted by degree.
pub fn factor(f: &FiniteField, a: &[Elem]) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, k) in squarefree_decomposition(f, a) {
        for h in berlekamp(f, &g) {
            out.push((h, k));
        }
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then(x.0.cmp(&y.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_x4_minus_1_over_f5() {
        let f = FiniteField::prime(5).unwrap();
        let a = vec![4, 0, 0, 0, 1];
        let fac = factor(&f, &a);
        assert_eq!(fac.len(), 4);
        assert!(fac.iter().all(|(g, k)| g.len() == 2 && *k == 1));
    }

    #[test]
    fn factors_with_repeated_and_pth_power_parts() {
        let f = FiniteField::prime(2).unwrap();
        // (x+1)^2 (x^2+x+1) = x^4 + x^3 + x + 1
        let a = vec![1, 1, 0, 1, 1];
        let fac = factor(&f, &a);
        assert_eq!(fac, vec![(vec![1, 1], 2), (vec![1, 1, 1], 1)]);
        // x^4 + 1 = (x+1)^4 over F_2
        assert_eq!(factor(&f, &[1, 0, 0, 0, 1]), vec![(vec![1, 1], 4)]);
    }

    #[test]
    fn product_of_factors_recovers_polynomial() {
        let f = FiniteField::new(2, 2).unwrap();
        // x^9 - x over F_4 ... use x^5 + x + 1 instead
        let a = vec![1, 1, 0, 0, 0, 1];
        let fac = factor(&f, &a);
        let mut prod = vec![1];
        for (g, k) in &fac {
            for _ in 0..*k {
                prod = mul(&f, &prod, g);
            }
        }
        assert_eq!(prod, a);
    }

    #[test]
    fn charpoly_satisfies_cayley_hamilton_and_matches_determinant() {
        let f = FiniteField::prime(7).unwrap();
        let m =
            FieldMatrix::from_rows(&f, 4, &[vec![1, 2, 0, 3], vec![0, 0, 5, 1], vec![4, 0, 0, 2], vec![6, 1, 1, 0]]);
        let cp = charpoly(&m);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        assert!(eval_matrix(&f, &cp, &m).is_zero());
        // independent check: det(xI - M) at every x, by Leibniz expansion
        for x in f.elements() {
            let a = FieldMatrix::scalar(&f, 4, x).sub(&m);
            let det = leibniz(&a);
            let val = cp.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c));
            assert_eq!(det, val);
        }
    }

    fn leibniz(a: &FieldMatrix) -> Elem {
        let f = a.field();
        let n = a.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0;
        permute(&mut perm, 0, &mut |p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = 1;
            for (i, &pi) in p.iter().enumerate() {
                term = f.mul(term, a.get(i, pi));
            }
            if inversions % 2 == 1 {
                term = f.neg(term);
            }
            total = f.add(total, term);
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            visit(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, visit);
            p.swap(k, i);
        }
    }
}
