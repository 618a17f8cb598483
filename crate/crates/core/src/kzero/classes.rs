use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::KzeroError;
use crate::algcore::{AlgebraData, ModuleRep};
use crate::chop::{composition_factors, iso_test};
use crate::exactla::{snf, IntMatrix, SmithForm};
use crate::rng::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// Coordinates over the PIMs.
    K0,
    /// Coordinates over the simples.
    G0,
}

/// An element of K₀ or G₀ in the PIM or simple basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrothendieckClass {
    pub kind: ClassKind,
    pub coeffs: Vec<i64>,
}

impl GrothendieckClass {
    pub fn zero(kind: ClassKind, len: usize) -> Self {
        GrothendieckClass { kind, coeffs: vec![0; len] }
    }

    pub fn basis(kind: ClassKind, len: usize, i: usize) -> Self {
        let mut c = Self::zero(kind, len);
        c.coeffs[i] = 1;
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        GrothendieckClass { kind: self.kind, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        GrothendieckClass { kind: self.kind, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }
}

/// Composition multiplicities over the simples.
pub fn g0_class(data: &AlgebraData, m: &ModuleRep, rng: &mut Rng) -> Result<GrothendieckClass, KzeroError> {
    let mult = composition_factors(m, &data.simples, rng)?;
    Ok(GrothendieckClass { kind: ClassKind::G0, coeffs: mult.into_iter().map(|x| x as i64).collect() })
}

/// `⊕ Pᵢ^{cᵢ}` for nonnegative counts.
pub fn pim_sum(data: &AlgebraData, counts: &[usize]) -> ModuleRep {
    let mut out = ModuleRep::zero(&data.algebra);
    for (p, &c) in data.pims.pims.iter().zip(counts) {
        out = out.direct_sum(&p.power(c)).expect("same algebra");
    }
    out
}

/// Multiplicities of the PIMs in a projective module, checked by an
/// explicit isomorphism with the corresponding sum of PIMs.
pub fn k0_class(data: &AlgebraData, p: &ModuleRep, rng: &mut Rng) -> Result<GrothendieckClass, KzeroError> {
    if !data.is_projective(p)? {
        return Err(KzeroError::NotProjective);
    }
    let mult = data.top_multiplicities(p)?;
    if !iso_test(&pim_sum(data, &mult), p, rng)? {
        return Err(KzeroError::ClassMismatch("projective module is not the predicted sum of PIMs".into()));
    }
    Ok(GrothendieckClass { kind: ClassKind::K0, coeffs: mult.into_iter().map(|x| x as i64).collect() })
}

/// `C[i][j] = [Pᵢ : Sⱼ]`.
#[derive(Debug, Clone)]
pub struct CartanData {
    pub data: AlgebraData,
    pub c: IntMatrix,
}

pub fn cartan_matrix(data: &AlgebraData, rng: &mut Rng) -> Result<CartanData, KzeroError> {
    let rows: Vec<Vec<i64>> =
        data.pims.pims.iter().map(|p| Ok(g0_class(data, p, rng)?.coeffs)).collect::<Result<_, KzeroError>>()?;
    for (i, (row, p)) in rows.iter().zip(&data.pims.pims).enumerate() {
        let dim: i64 = row.iter().zip(&data.simples.simples).map(|(c, s)| c * s.dim() as i64).sum();
        if row[i] < 1 || dim != p.dim() as i64 {
            return Err(KzeroError::ClassMismatch(format!("row {i} of the Cartan matrix is inconsistent")));
        }
    }
    Ok(CartanData { data: data.clone(), c: IntMatrix::from_rows(&rows) })
}

/// SNF-derived invariants of the Cartan map.
#[derive(Debug, Clone)]
pub struct CartanAnalysis {
    pub smith: SmithForm,
    pub invariant_factors: Vec<BigInt>,
    pub kernel_rank: usize,
    /// Cyclic factors `ℤ/d` with `d ≠ 1`; `0` stands for a free summand `ℤ`.
    pub cokernel: Vec<BigInt>,
    pub determinant: BigInt,
    pub injective: bool,
}

impl CartanAnalysis {
    pub fn cokernel_trivial(&self) -> bool {
        self.cokernel.is_empty()
    }

    /// Whether every cokernel factor divides `m` (a free summand never does).
    pub fn cokernel_killed_by(&self, m: &BigInt) -> bool {
        self.cokernel.iter().all(|d| !d.is_zero() && (m % d).is_zero())
    }
}

pub fn cartan_analysis(c: &IntMatrix) -> CartanAnalysis {
    let smith = snf(c);
    let rank = smith.rank();
    let invariant_factors: Vec<BigInt> = (0..c.rows().min(c.cols())).map(|i| smith.s.get(i, i).clone()).collect();
    let mut cokernel: Vec<BigInt> = smith.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
    cokernel.extend(std::iter::repeat_n(BigInt::zero(), c.cols() - rank));
    let determinant = if c.rows() == c.cols() { c.det() } else { BigInt::zero() };
    CartanAnalysis {
        smith,
        invariant_factors,
        kernel_rank: c.rows() - rank,
        cokernel,
        determinant,
        injective: rank == c.rows(),
    }
}
