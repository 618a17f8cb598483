use std::sync::Arc;

use super::series::{chop_module, distinct_simples, SimpleList};
use super::ChopError;
use crate::algcore::{hom_space, Algebra, ModuleRep};
use crate::exactla::{Elem, FieldMatrix, Subspace};
use crate::rng::Rng;

/// Projective indecomposables `Pᵢ = eᵢA`, index-aligned with the simples.
#[derive(Debug, Clone)]
pub struct PimList {
    pub pims: Vec<ModuleRep>,
    pub idempotents: Vec<Vec<Elem>>,
}

/// Simples, PIMs and the Jacobson radical of an algebra.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub simples: SimpleList,
    pub pims: PimList,
    pub radical: Subspace,
}

/// `{x ∈ A : x acts as 0 on every module in the list}`.
pub fn common_annihilator(a: &Algebra, modules: &[ModuleRep]) -> Subspace {
    let n = a.dim();
    let rows: Vec<Vec<Elem>> =
        (0..n).map(|i| modules.iter().flat_map(|m| m.action()[i].flatten().iter().copied()).collect()).collect();
    let width = rows[0].len();
    if width == 0 {
        return Subspace::full(a.field(), n);
    }
    let k = FieldMatrix::from_rows(a.field(), width, &rows).left_kernel();
    Subspace::from_matrix(&k)
}

/// Projection of S onto one line over `D = End(S)` along a D-stable complement.
fn rank_one_projection(s: &ModuleRep) -> Result<FieldMatrix, ChopError> {
    let f = s.algebra().field();
    let d = s.dim();
    let endo = hom_space(s, s)?.basis;
    let dspan = |v: &[Elem]| -> Vec<Vec<Elem>> { endo.iter().map(|x| x.vec_mul(v)).collect() };
    let mut e0 = vec![0; d];
    e0[0] = 1;
    let line = Subspace::from_rows(f, d, &dspan(&e0));
    let mut acc = line.clone();
    let mut rows = line.basis().row_vecs();
    for i in 0..d {
        if acc.dim() == d {
            break;
        }
        let mut e = vec![0; d];
        e[i] = 1;
        if acc.contains(&e) {
            continue;
        }
        let span = Subspace::from_rows(f, d, &dspan(&e));
        if acc.intersection(&span).dim() != 0 {
            return Err(ChopError::WedderburnSplitFailure("endomorphism ring is not a division ring".into()));
        }
        rows.extend(span.basis().row_vecs());
        acc = acc.sum(&span);
    }
    let t = FieldMatrix::from_rows(f, d, &rows);
    let tinv = t.inverse().ok_or_else(|| ChopError::WedderburnSplitFailure("degenerate basis".into()))?;
    let diag = FieldMatrix::from_fn(f, d, d, |r, c| (r == c && r < line.dim()) as Elem);
    Ok(tinv.mul(&diag).mul(&t))
}

/// Solves for `x ∈ A` acting as `targets[i]` on the i-th module.
fn preimage(a: &Algebra, modules: &[ModuleRep], targets: &[FieldMatrix]) -> Option<Vec<Elem>> {
    let n = a.dim();
    let rows: Vec<Vec<Elem>> =
        (0..n).map(|i| modules.iter().flat_map(|m| m.action()[i].flatten().iter().copied()).collect()).collect();
    let width = rows[0].len();
    let sys = FieldMatrix::from_rows(a.field(), width, &rows);
    let rhs: Vec<Elem> = targets.iter().flat_map(|t| t.flatten().iter().copied()).collect();
    sys.solve_left(&rhs)
}

fn ceil_log2(t: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < t {
        k += 1;
    }
    k
}

/// Lifts an idempotent modulo a nilpotent ideal by `e ← 3e² − 2e³`.
pub fn lift_idempotent(a: &Algebra, x: &[Elem], nilpotency: usize) -> Option<Vec<Elem>> {
    let f = a.field();
    let three = f.from_int(3);
    let two = f.from_int(2);
    let mut e = x.to_vec();
    for _ in 0..=ceil_log2(nilpotency) + 1 {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Some(e);
        }
        let e3 = a.mul(&e2, &e);
        e = a.sub(&a.scale(&e2, three), &a.scale(&e3, two));
    }
    a.is_idempotent(&e).then_some(e)
}

/// Simples of the regular module, a primitive idempotent for each and the
/// corresponding PIM. The idempotents are pairwise orthogonal.
pub fn decompose(a: &Arc<Algebra>, rng: &mut Rng) -> Result<Decomposition, ChopError> {
    let reg = ModuleRep::regular(a);
    let factors = chop_module(&reg, rng)?;
    let simples = distinct_simples(&factors)?;
    let radical = common_annihilator(a, &simples.simples);
    let nilpotency = a
        .nilpotency_index(&radical)
        .ok_or_else(|| ChopError::WedderburnSplitFailure("radical is not nilpotent".into()))?;

    let f = a.field();
    let one = a.unit().to_vec();
    let mut taken = a.zero_element();
    let mut idempotents = Vec::new();
    let mut pims = Vec::new();
    for i in 0..simples.len() {
        let targets: Vec<FieldMatrix> = simples
            .simples
            .iter()
            .enumerate()
            .map(|(j, s)| if i == j { rank_one_projection(s) } else { Ok(FieldMatrix::zeros(f, s.dim(), s.dim())) })
            .collect::<Result<_, _>>()?;
        let x = preimage(a, &simples.simples, &targets)
            .ok_or_else(|| ChopError::WedderburnSplitFailure(format!("no preimage for simple {i}")))?;
        // move into the corner orthogonal to the idempotents already chosen
        let c = a.sub(&one, &taken);
        let x = a.mul(&a.mul(&c, &x), &c);
        let e = lift_idempotent(a, &x, nilpotency)
            .ok_or_else(|| ChopError::WedderburnSplitFailure(format!("lifting failed for simple {i}")))?;
        let p = reg.submodule(&reg.spin(std::slice::from_ref(&e)))?;
        taken = a.add(&taken, &e);
        idempotents.push(e);
        pims.push(p);
    }
    for (i, p) in pims.iter().enumerate() {
        for (j, s) in simples.simples.iter().enumerate() {
            let h = hom_space(p, s)?.dim();
            let expect = if i == j { simples.endo_dims[j] } else { 0 };
            if h != expect {
                return Err(ChopError::WedderburnSplitFailure(format!(
                    "top of P{i} is wrong: dim Hom(P{i}, S{j}) = {h}"
                )));
            }
        }
    }
    let total: usize =
        pims.iter().zip(&simples.simples).zip(&simples.endo_dims).map(|((p, s), k)| p.dim() * s.dim() / k).sum();
    if total != a.dim() {
        return Err(ChopError::WedderburnSplitFailure(format!("PIM dimensions sum to {total}")));
    }
    Ok(Decomposition { simples, pims: PimList { pims, idempotents }, radical })
}

/// Simples and PIMs of an algebra.
pub fn pims(a: &Arc<Algebra>, rng: &mut Rng) -> Result<(SimpleList, PimList), ChopError> {
    let d = decompose(a, rng)?;
    Ok((d.simples, d.pims))
}
