use std::sync::Arc;

use super::bialgebra::HopfAlgebra;
use super::HopfError;
use crate::algcore::validate_algebra;
use crate::exactla::{Elem, FiniteField};

/// Taft algebra of dimension `n²`: `gⁿ = 1`, `xⁿ = 0`, `xg = q·gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `σ(x) = −g⁻¹x`. Basis `gⁱxʲ` at `i·n + j`.
/// For `n = 2`, `q = −1` this is Sweedler's four-dimensional algebra.
pub fn sweedler_taft(n: usize, field: &FiniteField, q: Elem) -> Result<HopfAlgebra, HopfError> {
    if n < 2 {
        return Err(HopfError::Dimension("Taft algebras need n ≥ 2".into()));
    }
    if field.multiplicative_order(q) != Some(n as u64) {
        return Err(HopfError::NotPrimitiveRoot { n, q: field.format(q) });
    }
    let f = field;
    let d = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let mut entries = Vec::new();
    // (gⁱxʲ)(gᵏxˡ) = q^{jk} g^{i+k} x^{j+l}
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l < n {
                        entries.push((idx(i, j), idx(k, l), idx(i + k, j + l), f.pow(q, (j * k) as u64)));
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let g = match i {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{i}"),
            };
            let x = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            if i == 0 && j == 0 {
                "1".into()
            } else {
                format!("{g}{x}")
            }
        })
        .collect();
    let a = Arc::new(validate_algebra(f, d, &entries, Some(unit_vector(d, 0)))?.with_labels(labels));

    let g = unit_vector(d, idx(1, 0));
    let x = unit_vector(d, idx(0, 1));
    let g_inv = unit_vector(d, idx(n - 1, 0));
    let one = unit_vector(d, 0);
    let tensor = |u: &[Elem], v: &[Elem]| -> Vec<Elem> {
        let mut out = vec![0; d * d];
        for (p, &a) in u.iter().enumerate() {
            for (r, &b) in v.iter().enumerate() {
                if a != 0 && b != 0 {
                    out[p * d + r] = f.mul(a, b);
                }
            }
        }
        out
    };
    let dg = tensor(&g, &g);
    let dx: Vec<Elem> = tensor(&x, &one).iter().zip(tensor(&g, &x)).map(|(&s, t)| f.add(s, t)).collect();
    let sg = g_inv.clone();
    let sx = a.scale(&a.mul(&g_inv, &x), f.neg(1));

    let mut delta = Vec::with_capacity(d);
    let mut sigma = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            // Δ(gⁱxʲ) = Δ(g)ⁱΔ(x)ʲ and σ(gⁱxʲ) = σ(x)ʲσ(g)ⁱ
            let mut dv = tensor(&one, &one);
            let mut sv = one.clone();
            for _ in 0..i {
                dv = a.tensor_mul(&a, &dv, &dg);
            }
            for _ in 0..j {
                dv = a.tensor_mul(&a, &dv, &dx);
                sv = a.mul(&sv, &sx);
            }
            for _ in 0..i {
                sv = a.mul(&sv, &sg);
            }
            delta.push(dv);
            sigma.push(sv);
        }
    }
    let counit = (0..d).map(|k| if k % n == 0 { 1 } else { 0 }).collect();
    HopfAlgebra::new(a, delta, counit, sigma)
}

fn unit_vector(d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}
