use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::classes::{cartan_analysis, cartan_matrix, g0_class, k0_class, pim_sum, CartanAnalysis, CartanData};
use super::KzeroError;
use crate::algcore::{AlgebraData, ModuleRep};
use crate::exactla::{lattice_min_multiple, IntMatrix};
use crate::galois::galois_check;
use crate::hopf::{ComoduleAlgebra, HopfAlgebra};
use crate::rng::Rng;

/// Least `m > 0` with `m[𝟙]` in the image of the Cartan map, and PIM
/// coefficients `a` with `a·C = m·e_𝟙`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalM {
    pub m: i64,
    pub coeffs: Vec<i64>,
}

pub fn minimal_m(cartan: &IntMatrix, trivial: usize) -> Option<MinimalM> {
    let mut v = vec![BigInt::from(0); cartan.cols()];
    v[trivial] = BigInt::from(1);
    let lm = lattice_min_multiple(cartan, &v)?;
    Some(MinimalM {
        m: lm.m.to_i64().expect("m fits in i64"),
        coeffs: lm.coeffs.iter().map(|c| c.to_i64().expect("coefficient fits in i64")).collect(),
    })
}

/// Projectives with `[P] − [Q] = m[𝟙]` in `G₀(H)`.
#[derive(Debug, Clone)]
pub struct PqWitness {
    pub m: i64,
    pub p_counts: Vec<usize>,
    pub q_counts: Vec<usize>,
    pub p: ModuleRep,
    pub q: ModuleRep,
}

impl PqWitness {
    fn indices(counts: &[usize]) -> Vec<usize> {
        counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect()
    }

    /// P as a multiset of PIM indices.
    pub fn p_indices(&self) -> Vec<usize> {
        Self::indices(&self.p_counts)
    }

    pub fn q_indices(&self) -> Vec<usize> {
        Self::indices(&self.q_counts)
    }
}

/// Splits the minimal coefficients into positive and negative parts and
/// re-checks the identity through composition factors.
pub fn find_pq(cartan: &CartanData, trivial: usize, rng: &mut Rng) -> Result<PqWitness, KzeroError> {
    let mm = minimal_m(&cartan.c, trivial).ok_or(KzeroError::NoSuchPQ)?;
    let p_counts: Vec<usize> = mm.coeffs.iter().map(|&a| a.max(0) as usize).collect();
    let q_counts: Vec<usize> = mm.coeffs.iter().map(|&a| (-a).max(0) as usize).collect();
    let data = &cartan.data;
    let p = pim_sum(data, &p_counts);
    let q = pim_sum(data, &q_counts);
    let diff = g0_class(data, &p, rng)?.sub(&g0_class(data, &q, rng)?);
    let mut expected = vec![0; diff.coeffs.len()];
    expected[trivial] = mm.m;
    if diff.coeffs != expected {
        return Err(KzeroError::ClassMismatch(format!("[P] - [Q] = {:?}, expected {:?}", diff.coeffs, expected)));
    }
    Ok(PqWitness { m: mm.m, p_counts, q_counts, p, q })
}

/// Cartan data of H and the index of 𝟙 among its simples.
pub fn hopf_cartan(hopf: &Arc<HopfAlgebra>, rng: &mut Rng) -> Result<(CartanData, usize), KzeroError> {
    let data = AlgebraData::compute(hopf.algebra(), rng)?;
    let trivial = data.simples.identify(&hopf.trivial_module())?;
    Ok((cartan_matrix(&data, rng)?, trivial))
}

/// `k0(R⊗P) − k0(R⊗Q)` against `m·k0(R)` for one PIM R of A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MechanismRow {
    pub pim: usize,
    pub twisted_p: Vec<i64>,
    pub twisted_q: Vec<i64>,
    pub expected: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub dims: (usize, usize, usize),
    pub h_cartan: IntMatrix,
    pub h_analysis: CartanAnalysis,
    pub trivial: usize,
    pub witness: PqWitness,
    pub gldim_b: usize,
    pub a_cartan: IntMatrix,
    pub a_analysis: CartanAnalysis,
    pub mechanism: Vec<MechanismRow>,
}

impl TheoremReport {
    pub fn m(&self) -> i64 {
        self.witness.m
    }
}

/// Degree-zero check that the kernel and cokernel of the Cartan map of A
/// are killed by m.
pub fn verify_cartan_bound(
    ca: &ComoduleAlgebra,
    bound: Option<usize>,
    rng: &mut Rng,
) -> Result<TheoremReport, KzeroError> {
    let ext = galois_check(ca, rng)?;
    let (h_data, trivial) = hopf_cartan(ca.hopf(), rng)?;
    let h_analysis = cartan_analysis(&h_data.c);
    if !h_analysis.injective {
        return Err(KzeroError::CartanNotInjective);
    }
    let witness = find_pq(&h_data, trivial, rng)?;
    let m = BigInt::from(witness.m);

    let bound = bound.unwrap_or_else(|| ext.b_data.default_bound());
    let gldim_b = ext.b_data.gldim(bound)?.finite().ok_or(KzeroError::RegularityNotDetected)?;

    let a_data = cartan_matrix(&ext.a_data, rng)?;
    let a_analysis = cartan_analysis(&a_data.c);
    if a_analysis.kernel_rank != 0 {
        return Err(KzeroError::BoundViolated(format!("Cartan map of A has kernel rank {}", a_analysis.kernel_rank)));
    }
    if !a_analysis.cokernel_killed_by(&m) {
        return Err(KzeroError::BoundViolated(format!(
            "cokernel factors {:?} do not all divide m = {m}",
            a_analysis.cokernel
        )));
    }

    let mut mechanism = Vec::new();
    for (i, r) in ext.a_data.pims.pims.iter().enumerate() {
        let twisted_p = k0_class(&ext.a_data, &ca.twist(r, &witness.p)?, rng)?.coeffs;
        let twisted_q = k0_class(&ext.a_data, &ca.twist(r, &witness.q)?, rng)?.coeffs;
        let mut expected = vec![0; twisted_p.len()];
        expected[i] = witness.m;
        let diff: Vec<i64> = twisted_p.iter().zip(&twisted_q).map(|(p, q)| p - q).collect();
        if diff != expected {
            return Err(KzeroError::BoundViolated(format!("mechanism identity fails on PIM {i}: {diff:?}")));
        }
        mechanism.push(MechanismRow { pim: i, twisted_p, twisted_q, expected });
    }

    Ok(TheoremReport {
        dims: (ca.algebra().dim(), ext.b.dim(), ca.hopf().dim()),
        h_cartan: h_data.c,
        h_analysis,
        trivial,
        witness,
        gldim_b,
        a_cartan: a_data.c,
        a_analysis,
        mechanism,
    })
}
