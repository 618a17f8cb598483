use rand::Rng as _;

use super::meataxe::{is_irreducible, Irreducibility};
use super::ChopError;
use crate::algcore::{endo_dim, hom_space, ModuleRep};
use crate::exactla::{Elem, FieldMatrix};
use crate::rng::Rng;

const ISO_TRIES: usize = 256;
const ISO_EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Pairwise non-isomorphic simple modules with their endomorphism dimensions.
#[derive(Debug, Clone)]
pub struct SimpleList {
    pub simples: Vec<ModuleRep>,
    pub endo_dims: Vec<usize>,
}

impl SimpleList {
    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    /// Index of the simple isomorphic to an irreducible module `s`.
    pub fn identify(&self, s: &ModuleRep) -> Result<usize, ChopError> {
        for (i, t) in self.simples.iter().enumerate() {
            if t.dim() == s.dim() && hom_space(s, t)?.dim() > 0 {
                return Ok(i);
            }
        }
        Err(ChopError::UnknownSimple { dim: s.dim() })
    }
}

/// Composition factors in series order, bottom first.
pub fn chop_module(m: &ModuleRep, rng: &mut Rng) -> Result<Vec<ModuleRep>, ChopError> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    // process the bottom of each split before its top
    while let Some(cur) = stack.pop() {
        if cur.dim() == 0 {
            continue;
        }
        match is_irreducible(&cur, rng)? {
            Irreducibility::Irreducible(_) => out.push(cur),
            Irreducibility::Reducible(s) => {
                let top = cur.quotient(&s)?;
                let bottom = cur.submodule(&s)?;
                stack.push(top);
                stack.push(bottom);
            }
            Irreducibility::Undecided => return Err(ChopError::Undecided),
        }
    }
    Ok(out)
}

/// Jordan–Hölder multiplicities of M against a list of simples.
pub fn composition_factors(m: &ModuleRep, simples: &SimpleList, rng: &mut Rng) -> Result<Vec<usize>, ChopError> {
    let mut mult = vec![0; simples.len()];
    for s in chop_module(m, rng)? {
        mult[simples.identify(&s)?] += 1;
    }
    Ok(mult)
}

fn combos(q: u64, k: usize) -> Option<u64> {
    q.checked_pow(k as u32)
}

/// Whether Hom(M, N) contains an invertible map. Random combinations first,
/// then every combination when there are at most 2¹⁶ of them.
pub fn iso_test(m: &ModuleRep, n: &ModuleRep, rng: &mut Rng) -> Result<bool, ChopError> {
    Ok(find_isomorphism(m, n, rng)?.is_some())
}

/// An explicit isomorphism M → N, if one exists.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep, rng: &mut Rng) -> Result<Option<FieldMatrix>, ChopError> {
    let hom = hom_space(m, n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(FieldMatrix::zeros(m.algebra().field(), 0, 0)));
    }
    if hom.dim() == 0 {
        return Ok(None);
    }
    let f = m.algebra().field();
    let q = f.order();
    for x in &hom.basis {
        if x.is_invertible() {
            return Ok(Some(x.clone()));
        }
    }
    for _ in 0..ISO_TRIES {
        let c: Vec<Elem> = (0..hom.dim()).map(|_| rng.random_range(0..q)).collect();
        let x = hom.combine(&c);
        if x.is_invertible() {
            return Ok(Some(x));
        }
    }
    match combos(q as u64, hom.dim()) {
        Some(total) if total <= ISO_EXHAUSTIVE_LIMIT => {
            for code in 0..total {
                let mut c = vec![0; hom.dim()];
                let mut r = code;
                for x in c.iter_mut() {
                    *x = (r % q as u64) as Elem;
                    r /= q as u64;
                }
                let x = hom.combine(&c);
                if x.is_invertible() {
                    return Ok(Some(x));
                }
            }
            Ok(None)
        }
        _ => Err(ChopError::Undecided),
    }
}

/// Deduplicates irreducible modules up to isomorphism, in a canonical order:
/// by dimension, then by the ranks of the basis actions (descending), then by
/// their traces.
pub fn distinct_simples(factors: &[ModuleRep]) -> Result<SimpleList, ChopError> {
    let mut reps: Vec<ModuleRep> = Vec::new();
    for s in factors {
        let mut seen = false;
        for t in &reps {
            if t.dim() == s.dim() && hom_space(s, t)?.dim() > 0 {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(s.clone());
        }
    }
    let key = |s: &ModuleRep| {
        let ranks: Vec<std::cmp::Reverse<usize>> = s.action().iter().map(|r| std::cmp::Reverse(r.rank())).collect();
        let traces: Vec<Elem> = s.action().iter().map(|r| r.trace()).collect();
        (s.dim(), ranks, traces)
    };
    reps.sort_by_cached_key(|s| key(s));
    let endo_dims = reps.iter().map(endo_dim).collect();
    Ok(SimpleList { simples: reps, endo_dims })
}
