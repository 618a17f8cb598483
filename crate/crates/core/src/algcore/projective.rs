use std::sync::Arc;

use super::algebra::Algebra;
use super::hom::hom_space;
use super::module::{ModuleError, ModuleRep};
use crate::chop::{decompose, ChopError, PimList, SimpleList};
use crate::exactla::{Elem, FieldMatrix, Subspace};
use crate::rng::Rng;

/// An algebra together with its simples, PIMs and radical.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub algebra: Arc<Algebra>,
    pub simples: SimpleList,
    pub pims: PimList,
    pub radical: Subspace,
}

/// Outcome of a bounded syzygy iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjDim {
    Finite(usize),
    NotDetected,
}

impl ProjDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            ProjDim::Finite(d) => Some(d),
            ProjDim::NotDetected => None,
        }
    }
}

/// A projective cover `P → M`; rows of `map` are the images of P's basis.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub module: ModuleRep,
    pub multiplicities: Vec<usize>,
    pub map: FieldMatrix,
}

impl AlgebraData {
    pub fn compute(algebra: &Arc<Algebra>, rng: &mut Rng) -> Result<Self, ChopError> {
        let d = decompose(algebra, rng)?;
        Ok(AlgebraData { algebra: algebra.clone(), simples: d.simples, pims: d.pims, radical: d.radical })
    }

    pub fn default_bound(&self) -> usize {
        2 * self.algebra.dim()
    }

    fn check(&self, m: &ModuleRep) -> Result<(), ModuleError> {
        if m.algebra() == &self.algebra {
            Ok(())
        } else {
            Err(ModuleError::AlgebraMismatch)
        }
    }

    /// `m_i = dim Hom(M, Sᵢ) / dim End(Sᵢ)`.
    pub fn top_multiplicities(&self, m: &ModuleRep) -> Result<Vec<usize>, ModuleError> {
        self.check(m)?;
        self.simples.simples.iter().zip(&self.simples.endo_dims).map(|(s, k)| Ok(hom_space(m, s)?.dim() / k)).collect()
    }

    /// `MJ`.
    pub fn radical_of(&self, m: &ModuleRep) -> Subspace {
        let f = self.algebra.field();
        let mut rows = Vec::new();
        for t in 0..self.radical.dim() {
            rows.extend(m.act(self.radical.basis().row(t)).row_vecs());
        }
        Subspace::from_rows(f, m.dim(), &rows)
    }

    /// `M / MJ`.
    pub fn top(&self, m: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        self.check(m)?;
        m.quotient(&self.radical_of(m))
    }

    pub fn projective_cover(&self, m: &ModuleRep) -> Result<ProjectiveCover, ModuleError> {
        let mult = self.top_multiplicities(m)?;
        let f = self.algebra.field();
        let mut covered = self.radical_of(m);
        let mut blocks: Vec<(usize, Vec<Elem>)> = Vec::new();
        for (i, &mi) in mult.iter().enumerate() {
            let ei = &self.pims.idempotents[i];
            let image = m.act(ei);
            let mut used = 0;
            for r in 0..image.rows() {
                if used == mi {
                    break;
                }
                let w = image.row(r).to_vec();
                if covered.contains(&w) {
                    continue;
                }
                covered = covered.sum(&m.spin(std::slice::from_ref(&w)));
                blocks.push((i, w));
                used += 1;
            }
            debug_assert_eq!(used, mi);
        }
        let mut module = ModuleRep::zero(&self.algebra);
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for (i, w) in &blocks {
            let p = &self.pims.pims[*i];
            module = module.direct_sum(p)?;
            let basis = self.pim_basis(*i);
            for x in basis.row_vecs() {
                rows.push(m.act(&x).vec_mul(w));
            }
        }
        let map = FieldMatrix::from_rows(f, m.dim(), &rows);
        let cover = ProjectiveCover { module, multiplicities: mult, map };
        if !cover.module.is_homomorphism(m, &cover.map) || cover.map.rank() != m.dim() {
            return Err(ModuleError::NotHomomorphism);
        }
        Ok(cover)
    }

    /// Echelon basis of `eᵢA` inside A, matching the basis of the i-th PIM.
    pub fn pim_basis(&self, i: usize) -> FieldMatrix {
        let reg = ModuleRep::regular(&self.algebra);
        reg.spin(std::slice::from_ref(&self.pims.idempotents[i])).basis().clone()
    }

    pub fn is_projective(&self, m: &ModuleRep) -> Result<bool, ModuleError> {
        let mult = self.top_multiplicities(m)?;
        let dim: usize = mult.iter().zip(&self.pims.pims).map(|(k, p)| k * p.dim()).sum();
        Ok(dim == m.dim())
    }

    /// Kernel of the projective cover, as a module.
    pub fn syzygy(&self, m: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        let cover = self.projective_cover(m)?;
        cover.module.submodule(&cover.module.kernel(&cover.map))
    }

    pub fn proj_dim(&self, m: &ModuleRep, bound: usize) -> Result<ProjDim, ModuleError> {
        let mut cur = m.clone();
        for d in 0..=bound {
            if self.is_projective(&cur)? {
                return Ok(ProjDim::Finite(d));
            }
            if d < bound {
                cur = self.syzygy(&cur)?;
            }
        }
        Ok(ProjDim::NotDetected)
    }

    /// Maximum projective dimension over the simples.
    pub fn gldim(&self, bound: usize) -> Result<ProjDim, ModuleError> {
        let mut best = 0;
        for s in &self.simples.simples {
            match self.proj_dim(s, bound)? {
                ProjDim::Finite(d) => best = best.max(d),
                ProjDim::NotDetected => return Ok(ProjDim::NotDetected),
            }
        }
        Ok(ProjDim::Finite(best))
    }
}

/// Jacobson radical, checked nilpotent with semisimple quotient.
pub fn radical(a: &Arc<Algebra>, rng: &mut Rng) -> Result<Subspace, ChopError> {
    let d = decompose(a, rng)?;
    let j = d.radical;
    if j.dim() > 0 {
        if !a.is_ideal(&j) || a.nilpotency_index(&j).is_none() {
            return Err(ChopError::WedderburnSplitFailure("radical is not a nilpotent ideal".into()));
        }
        let quotient = Arc::new(a.quotient(&j).map_err(|e| ChopError::WedderburnSplitFailure(e.to_string()))?);
        if decompose(&quotient, rng)?.radical.dim() != 0 {
            return Err(ChopError::WedderburnSplitFailure("quotient by the radical is not semisimple".into()));
        }
    }
    Ok(j)
}
