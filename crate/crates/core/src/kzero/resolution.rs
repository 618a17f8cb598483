use super::KzeroError;
use crate::algcore::ModuleRep;
use crate::exactla::FieldMatrix;
use crate::galois::GaloisExtension;

/// `0 → Ω → Pₙ₋₁ → … → P₀ → M → 0` with every term in 𝒞.
///
/// `maps[0]: P₀ → M`, `maps[k]: Pₖ → Pₖ₋₁`, and the last map is the
/// inclusion of Ω. For length 0 there are no maps and Ω = M.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub module: ModuleRep,
    pub projectives: Vec<ModuleRep>,
    pub syzygy: ModuleRep,
    pub maps: Vec<FieldMatrix>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.projectives.len()
    }

    /// Terms from left to right of the exact sequence, without the zeros.
    fn terms(&self) -> Vec<&ModuleRep> {
        let mut t = vec![&self.module];
        t.extend(self.projectives.iter());
        if self.length() > 0 {
            t.push(&self.syzygy);
        }
        t
    }

    /// Homomorphisms, consecutive composites zero, and
    /// `rank fₖ + rank fₖ₋₁ = dim` at every term.
    pub fn is_exact(&self) -> bool {
        let terms = self.terms();
        if self.maps.len() + 1 != terms.len() {
            return false;
        }
        for (k, f) in self.maps.iter().enumerate() {
            if !terms[k + 1].is_homomorphism(terms[k], f) {
                return false;
            }
        }
        let ranks: Vec<usize> = self.maps.iter().map(|f| f.rank()).collect();
        for (k, t) in terms.iter().enumerate() {
            let outgoing = if k == 0 { 0 } else { ranks[k - 1] };
            let incoming = ranks.get(k).copied().unwrap_or(0);
            if outgoing + incoming != t.dim() && !(k == 0 && terms.len() == 1) {
                return false;
            }
        }
        self.maps.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }
}

/// Iterated projective covers over A until the syzygy lies in 𝒞.
pub fn resolve_in_c(ext: &GaloisExtension, m: &ModuleRep, bound: Option<usize>) -> Result<Resolution, KzeroError> {
    let bound = bound.unwrap_or_else(|| ext.b_data.default_bound());
    let gldim = ext.b_data.gldim(bound)?.finite().ok_or(KzeroError::RegularityNotDetected)?;
    let data = &ext.a_data;
    let mut projectives = Vec::new();
    let mut maps: Vec<FieldMatrix> = Vec::new();
    let mut cur = m.clone();
    // inclusion of the current syzygy into the previous projective
    let mut inclusion: Option<FieldMatrix> = None;
    for step in 0..=gldim {
        if ext.in_category_c(&cur)? {
            if let Some(inc) = inclusion {
                maps.push(inc);
            }
            let res = Resolution { module: m.clone(), projectives, syzygy: cur, maps };
            for p in &res.projectives {
                if !data.is_projective(p)? || !ext.in_category_c(p)? {
                    return Err(KzeroError::BoundViolated("a resolution term is not in the category".into()));
                }
            }
            if !res.is_exact() {
                return Err(KzeroError::BoundViolated("resolution is not exact".into()));
            }
            return Ok(res);
        }
        if step == gldim {
            break;
        }
        let cover = data.projective_cover(&cur)?;
        let kernel = cover.module.kernel(&cover.map);
        let next = cover.module.submodule(&kernel)?;
        maps.push(match inclusion.take() {
            Some(inc) => cover.map.mul(&inc),
            None => cover.map.clone(),
        });
        inclusion = Some(kernel.basis().clone());
        projectives.push(cover.module);
        cur = next;
    }
    Err(KzeroError::IterationBoundExceeded)
}
