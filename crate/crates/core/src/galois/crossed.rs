use std::sync::Arc;

use super::GaloisError;
use crate::algcore::Algebra;
use crate::exactla::{Elem, FieldMatrix};
use crate::hopf::{group_algebra, ComoduleAlgebra, Group};

/// Data of a crossed product `B ∗ G`. `action[g]` has `g(bᵢ)` as its i-th
/// row; `cocycle[g][h]` is `τ(g,h) ∈ B`.
#[derive(Debug, Clone)]
pub struct CrossedProductSpec {
    pub base: Arc<Algebra>,
    pub group: Group,
    pub action: Vec<FieldMatrix>,
    pub cocycle: Vec<Vec<Vec<Elem>>>,
}

impl CrossedProductSpec {
    /// Trivial cocycle `τ ≡ 1`.
    pub fn with_trivial_cocycle(base: Arc<Algebra>, group: Group, action: Vec<FieldMatrix>) -> Self {
        let n = group.order();
        let one = base.unit().to_vec();
        CrossedProductSpec { base, group, action, cocycle: vec![vec![one; n]; n] }
    }

    /// Trivial action and cocycle: `B ⊗ kG`.
    pub fn trivial(base: Arc<Algebra>, group: Group) -> Self {
        let id = FieldMatrix::identity(base.field(), base.dim());
        let action = vec![id; group.order()];
        Self::with_trivial_cocycle(base, group, action)
    }

    fn apply(&self, g: usize, x: &[Elem]) -> Vec<Elem> {
        self.action[g].vec_mul(x)
    }

    fn inverse(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        let b = &self.base;
        let y = b.left_mult(x).solve_left(b.unit())?;
        (b.mul(&y, x) == b.unit()).then_some(y)
    }

    /// Checks automorphisms, normalization, invertibility of τ, the twisted
    /// action condition and the cocycle condition.
    pub fn validate(&self) -> Result<(), GaloisError> {
        let b = &self.base;
        let g_ord = self.group.order();
        let n = b.dim();
        if self.action.len() != g_ord || self.cocycle.len() != g_ord {
            return Err(GaloisError::CrossedShape("one automorphism and one cocycle row per group element".into()));
        }
        for (g, m) in self.action.iter().enumerate() {
            if m.rows() != n || m.cols() != n || !m.is_invertible() || self.apply(g, b.unit()) != b.unit() {
                return Err(GaloisError::NotAutomorphism(g));
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.apply(g, &b.mul(&b.basis_vector(i), &b.basis_vector(j)));
                    let rhs = b.mul(m.row(i), m.row(j));
                    if lhs != rhs {
                        return Err(GaloisError::NotAutomorphism(g));
                    }
                }
            }
        }
        let e = self.group.identity();
        let mut inverses = vec![vec![Vec::new(); g_ord]; g_ord];
        for g in 0..g_ord {
            if self.cocycle[g].len() != g_ord {
                return Err(GaloisError::CrossedShape("cocycle table is not square".into()));
            }
            for h in 0..g_ord {
                if self.cocycle[g][h].len() != n {
                    return Err(GaloisError::CrossedShape("cocycle value has the wrong length".into()));
                }
                inverses[g][h] = self.inverse(&self.cocycle[g][h]).ok_or(GaloisError::CocycleNotInvertible(g, h))?;
            }
            if self.cocycle[e][g] != b.unit() || self.cocycle[g][e] != b.unit() {
                return Err(GaloisError::CocycleNotNormalized(g));
            }
        }
        for g in 0..g_ord {
            for h in 0..g_ord {
                let gh = self.group.mul(g, h);
                let tau = &self.cocycle[g][h];
                for i in 0..n {
                    let c = b.basis_vector(i);
                    // g(h(c)) = τ(g,h)·(gh)(c)·τ(g,h)⁻¹
                    let lhs = self.apply(g, &self.apply(h, &c));
                    let rhs = b.mul(&b.mul(tau, &self.apply(gh, &c)), &inverses[g][h]);
                    if lhs != rhs {
                        return Err(GaloisError::TwistedActionFails(g, h));
                    }
                }
                for l in 0..g_ord {
                    // τ(g,h)τ(gh,l) = g(τ(h,l))τ(g,hl)
                    let hl = self.group.mul(h, l);
                    let lhs = b.mul(tau, &self.cocycle[gh][l]);
                    let rhs = b.mul(&self.apply(g, &self.cocycle[h][l]), &self.cocycle[g][hl]);
                    if lhs != rhs {
                        return Err(GaloisError::CocycleConditionFails(g, h, l));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `B ∗ G` on the basis `bᵢ ḡ` (index `i·|G| + g`) with
/// `(b ḡ)(c h̄) = b·g(c)·τ(g,h) \overline{gh}` and coaction `ρ(b ḡ) = b ḡ ⊗ g`.
pub fn crossed_product(spec: &CrossedProductSpec) -> Result<ComoduleAlgebra, GaloisError> {
    spec.validate()?;
    let b = &spec.base;
    let f = b.field();
    let (n, k) = (b.dim(), spec.group.order());
    let d = n * k;
    let mut consts = vec![0; d * d * d];
    for i in 0..n {
        for g in 0..k {
            let bi = b.basis_vector(i);
            for j in 0..n {
                let gc = spec.apply(g, &b.basis_vector(j));
                let left = b.mul(&bi, &gc);
                for h in 0..k {
                    let prod = b.mul(&left, &spec.cocycle[g][h]);
                    let gh = spec.group.mul(g, h);
                    let (x, y) = (i * k + g, j * k + h);
                    for (l, &v) in prod.iter().enumerate() {
                        consts[(x * d + y) * d + l * k + gh] = v;
                    }
                }
            }
        }
    }
    let mut unit = vec![0; d];
    for (i, &u) in b.unit().iter().enumerate() {
        unit[i * k + spec.group.identity()] = u;
    }
    let labels = b.labels().iter().flat_map(|bl| (0..k).map(move |g| format!("{bl}·u{g}"))).collect();
    let a = Arc::new(Algebra::from_dense(f, d, consts, Some(unit))?.with_labels(labels));
    let hopf = Arc::new(group_algebra(&spec.group, f)?);
    let rho = (0..d)
        .map(|x| {
            let mut r = vec![0; d * k];
            r[x * k + x % k] = 1;
            r
        })
        .collect();
    Ok(ComoduleAlgebra::new(a, hopf, rho)?)
}
