use super::extension::GaloisExtension;
use super::GaloisError;
use crate::algcore::ModuleRep;
use crate::exactla::{Elem, FieldMatrix, Subspace};

/// An explicit module isomorphism, checked A-linear and invertible.
#[derive(Debug, Clone)]
pub struct IsoCertificate {
    pub source_dim: usize,
    pub target_dim: usize,
    pub map: FieldMatrix,
}

/// Mutually inverse maps `φ`, `ψ` between `Ind(N⊗V)` and `Ind(N)⊗V`.
#[derive(Debug, Clone)]
pub struct TwistCertificate {
    pub dim: usize,
    pub phi: FieldMatrix,
    pub psi: FieldMatrix,
}

fn fail(msg: impl Into<String>) -> GaloisError {
    GaloisError::VerificationFailed(msg.into())
}

/// `Ind(Res M) → M⊗H`, `m⊗a ↦ m·a₀ ⊗ a₁`.
pub fn verify_ind_res(ext: &GaloisExtension, m: &ModuleRep) -> Result<IsoCertificate, GaloisError> {
    let a = ext.a();
    let hopf = ext.ca.hopf();
    let f = a.field();
    let (n, hd, dm) = (a.dim(), hopf.dim(), m.dim());
    let ind = ext.induce_tensor(&ext.restrict(m)?)?;
    let target = ext.ca.twist(m, &ModuleRep::regular(hopf.algebra()))?;
    let mut plain = FieldMatrix::zeros(f, dm * n, dm * hd);
    for s in 0..dm {
        for i in 0..n {
            let row = s * n + i;
            for (jk, &c) in ext.ca.rho(i).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (j, k) = (jk / hd, jk % hd);
                for (t, &v) in m.action()[j].row(s).iter().enumerate() {
                    if v != 0 {
                        let col = t * hd + k;
                        plain.set(row, col, f.mul_add(plain.get(row, col), c, v));
                    }
                }
            }
        }
    }
    for r in 0..ind.relations.dim() {
        if plain.vec_mul(ind.relations.basis().row(r)).iter().any(|&x| x != 0) {
            return Err(fail(format!("relation {r} of Ind(Res M) is not killed")));
        }
    }
    let map = plain.select_rows(&ind.basis_indices());
    if !ind.module.is_homomorphism(&target, &map) {
        return Err(fail("Ind(Res M) → M⊗H is not A-linear"));
    }
    if !map.is_invertible() {
        return Err(fail("Ind(Res M) → M⊗H is not invertible"));
    }
    Ok(IsoCertificate { source_dim: ind.dim(), target_dim: target.dim(), map })
}

/// `φ(n⊗v⊗a) = n⊗a₀⊗v·a₁` and `ψ(n⊗a⊗v) = n⊗v·σ⁻¹(a₁)⊗a₀`, checked well
/// defined, A-linear and mutually inverse.
pub fn verify_ind_twist(
    ext: &GaloisExtension,
    nmod: &ModuleRep,
    v: &ModuleRep,
) -> Result<TwistCertificate, GaloisError> {
    let a = ext.a();
    let hopf = ext.ca.hopf();
    let f = a.field().clone();
    let (n, hd, dn, dv) = (a.dim(), hopf.dim(), nmod.dim(), v.dim());
    let sigma_inv = hopf.antipode_inverse()?;
    let v_sigma_inv: Vec<FieldMatrix> = (0..hd).map(|k| v.act(&sigma_inv.col(k))).collect();

    // N⊗V as a B-module: B is coinvariant, so it acts on N only
    let id_v = FieldMatrix::identity(&f, dv);
    let nv_action: Vec<FieldMatrix> = nmod.action().iter().map(|x| x.kron(&id_v)).collect();
    let nv =
        if dn * dv == 0 { ModuleRep::zero(nmod.algebra()) } else { ModuleRep::new(nmod.algebra().clone(), nv_action)? };
    let lhs = ext.induce_tensor(&nv)?;
    let ind_n = ext.induce_tensor(nmod)?;
    let rhs_module = ext.ca.twist(&ind_n.module, v)?;

    let plain_dim = dn * n * dv;
    let lhs_idx = |s: usize, w: usize, i: usize| (s * dv + w) * n + i;
    let rhs_idx = |s: usize, i: usize, w: usize| (s * n + i) * dv + w;
    let rhs_project = |x: &[Elem]| -> Vec<Elem> {
        let q = ind_n.dim();
        let mut out = vec![0; q * dv];
        for w in 0..dv {
            let slice: Vec<Elem> = (0..dn * n).map(|p| x[p * dv + w]).collect();
            for (c, val) in ind_n.project(&slice).into_iter().enumerate() {
                out[c * dv + w] = val;
            }
        }
        out
    };

    let mut phi = FieldMatrix::zeros(&f, plain_dim, plain_dim);
    let mut psi = FieldMatrix::zeros(&f, plain_dim, plain_dim);
    for s in 0..dn {
        for i in 0..n {
            for (jk, &c) in ext.ca.rho(i).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (j, k) = (jk / hd, jk % hd);
                for w in 0..dv {
                    for w2 in 0..dv {
                        let x = v.action()[k].get(w, w2);
                        if x != 0 {
                            let (r, col) = (lhs_idx(s, w, i), rhs_idx(s, j, w2));
                            phi.set(r, col, f.mul_add(phi.get(r, col), c, x));
                        }
                        let y = v_sigma_inv[k].get(w, w2);
                        if y != 0 {
                            let (r, col) = (rhs_idx(s, i, w), lhs_idx(s, w2, j));
                            psi.set(r, col, f.mul_add(psi.get(r, col), c, y));
                        }
                    }
                }
            }
        }
    }

    for r in 0..lhs.relations.dim() {
        if rhs_project(&phi.vec_mul(lhs.relations.basis().row(r))).iter().any(|&x| x != 0) {
            return Err(fail("φ does not respect the relations of Ind(N⊗V)"));
        }
    }
    let rhs_relations = Subspace::from_matrix(&ind_n.relations.basis().kron(&id_v));
    for r in 0..rhs_relations.dim() {
        if lhs.project(&psi.vec_mul(rhs_relations.basis().row(r))).iter().any(|&x| x != 0) {
            return Err(fail("ψ does not respect the relations of Ind(N)⊗V"));
        }
    }
    let unit = |p: usize| {
        let mut e = vec![0; plain_dim];
        e[p] = 1;
        e
    };
    let phi_bar_rows: Vec<Vec<Elem>> =
        lhs.basis_indices().into_iter().map(|p| rhs_project(&phi.vec_mul(&unit(p)))).collect();
    let mut psi_bar_rows = Vec::new();
    for p in ind_n.basis_indices() {
        for w in 0..dv {
            psi_bar_rows.push(lhs.project(&psi.vec_mul(&unit(p * dv + w))));
        }
    }
    let d = lhs.dim();
    if rhs_module.dim() != d {
        return Err(fail(format!("dimensions differ: {d} vs {}", rhs_module.dim())));
    }
    let phi_bar = FieldMatrix::from_rows(&f, d, &phi_bar_rows);
    let psi_bar = FieldMatrix::from_rows(&f, d, &psi_bar_rows);
    if !lhs.module.is_homomorphism(&rhs_module, &phi_bar) {
        return Err(fail("φ is not A-linear"));
    }
    let id = FieldMatrix::identity(&f, d);
    if phi_bar.mul(&psi_bar) != id || psi_bar.mul(&phi_bar) != id {
        return Err(fail("φ and ψ are not mutually inverse"));
    }
    Ok(TwistCertificate { dim: d, phi: phi_bar, psi: psi_bar })
}
