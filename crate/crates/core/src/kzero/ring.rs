use std::sync::Arc;

use super::classes::{g0_class, k0_class, ClassKind, GrothendieckClass};
use super::KzeroError;
use crate::algcore::{AlgebraData, ModuleRep};
use crate::galois::GaloisExtension;
use crate::hopf::HopfAlgebra;
use crate::rng::Rng;

/// `G₀(H)` with structure constants `[Sᵢ]·[Sⱼ] = [Sᵢ ⊗ Sⱼ]`.
#[derive(Debug, Clone)]
pub struct G0Ring {
    pub hopf: Arc<HopfAlgebra>,
    pub data: AlgebraData,
    /// Index of the trivial module among the simples.
    pub trivial: usize,
    pub consts: Vec<Vec<Vec<i64>>>,
}

impl G0Ring {
    pub fn compute(hopf: &Arc<HopfAlgebra>, rng: &mut Rng) -> Result<Self, KzeroError> {
        let data = AlgebraData::compute(hopf.algebra(), rng)?;
        let trivial = data.simples.identify(&hopf.trivial_module())?;
        let simples = &data.simples.simples;
        let mut consts = Vec::with_capacity(simples.len());
        for si in simples {
            let mut row = Vec::with_capacity(simples.len());
            for sj in simples {
                row.push(g0_class(&data, &hopf.tensor_modules(si, sj)?, rng)?.coeffs);
            }
            consts.push(row);
        }
        Ok(G0Ring { hopf: hopf.clone(), data, trivial, consts })
    }

    pub fn rank(&self) -> usize {
        self.consts.len()
    }

    pub fn unit(&self) -> GrothendieckClass {
        GrothendieckClass::basis(ClassKind::G0, self.rank(), self.trivial)
    }

    /// Class of an arbitrary H-module.
    pub fn class_of(&self, v: &ModuleRep, rng: &mut Rng) -> Result<GrothendieckClass, KzeroError> {
        g0_class(&self.data, v, rng)
    }

    fn check(&self, u: &GrothendieckClass) -> Result<(), KzeroError> {
        if u.kind != ClassKind::G0 || u.coeffs.len() != self.rank() {
            return Err(KzeroError::KindMismatch);
        }
        Ok(())
    }

    pub fn product(&self, u: &GrothendieckClass, v: &GrothendieckClass) -> Result<GrothendieckClass, KzeroError> {
        self.check(u)?;
        self.check(v)?;
        let mut out = vec![0; self.rank()];
        for (i, &a) in u.coeffs.iter().enumerate() {
            for (j, &b) in v.coeffs.iter().enumerate() {
                if a * b != 0 {
                    for (o, c) in out.iter_mut().zip(&self.consts[i][j]) {
                        *o += a * b * c;
                    }
                }
            }
        }
        Ok(GrothendieckClass { kind: ClassKind::G0, coeffs: out })
    }

    /// Associativity on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.rank();
        let e = |i| GrothendieckClass::basis(ClassKind::G0, n, i);
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let l = self.product(&self.product(&e(i), &e(j)).unwrap(), &e(k)).unwrap();
                    let r = self.product(&e(i), &self.product(&e(j), &e(k)).unwrap()).unwrap();
                    l == r
                })
            })
        })
    }

    /// `[𝟙]` is a two-sided identity on the basis.
    pub fn is_unital(&self) -> bool {
        let n = self.rank();
        let one = self.unit();
        (0..n).all(|i| {
            let e = GrothendieckClass::basis(ClassKind::G0, n, i);
            self.product(&one, &e).unwrap() == e && self.product(&e, &one).unwrap() == e
        })
    }
}

pub fn g0_ring_product(
    ring: &G0Ring,
    u: &GrothendieckClass,
    v: &GrothendieckClass,
) -> Result<GrothendieckClass, KzeroError> {
    ring.product(u, v)
}

/// Right action of `G₀(H)` on K₀(A) or G₀(A): `table[i][j]` is the class
/// of `Xᵢ ⊗ Sⱼ` where X runs over the PIMs (K₀) or the simples (G₀) of A.
#[derive(Debug, Clone)]
pub struct ActionTable {
    pub kind: ClassKind,
    pub table: Vec<Vec<Vec<i64>>>,
}

impl ActionTable {
    pub fn compute(ext: &GaloisExtension, ring: &G0Ring, kind: ClassKind, rng: &mut Rng) -> Result<Self, KzeroError> {
        let data = &ext.a_data;
        let basis = match kind {
            ClassKind::K0 => &data.pims.pims,
            ClassKind::G0 => &data.simples.simples,
        };
        let mut table = Vec::with_capacity(basis.len());
        for x in basis {
            let mut row = Vec::with_capacity(ring.rank());
            for s in &ring.data.simples.simples {
                let t = ext.ca.twist(x, s)?;
                let class = match kind {
                    ClassKind::K0 => k0_class(data, &t, rng)?,
                    ClassKind::G0 => g0_class(data, &t, rng)?,
                };
                row.push(class.coeffs);
            }
            table.push(row);
        }
        Ok(ActionTable { kind, table })
    }

    pub fn apply(&self, x: &GrothendieckClass, v: &GrothendieckClass) -> Result<GrothendieckClass, KzeroError> {
        let width = self.table.first().map_or(0, |r| r.len());
        if x.kind != self.kind
            || x.coeffs.len() != self.table.len()
            || v.kind != ClassKind::G0
            || v.coeffs.len() != width
        {
            return Err(KzeroError::KindMismatch);
        }
        let mut out = vec![0; self.table.len()];
        for (i, &a) in x.coeffs.iter().enumerate() {
            for (j, &b) in v.coeffs.iter().enumerate() {
                if a * b != 0 {
                    for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                        *o += a * b * c;
                    }
                }
            }
        }
        Ok(GrothendieckClass { kind: self.kind, coeffs: out })
    }
}

pub fn g0_action(
    ext: &GaloisExtension,
    ring: &G0Ring,
    x: &GrothendieckClass,
    v: &GrothendieckClass,
    rng: &mut Rng,
) -> Result<GrothendieckClass, KzeroError> {
    ActionTable::compute(ext, ring, x.kind, rng)?.apply(x, v)
}
