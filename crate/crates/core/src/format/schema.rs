use serde::{Deserialize, Serialize};

/// A field element: an integer in the prime field or residue coefficients
/// `[c₀, c₁, …]` of `Σ cᵢ tⁱ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Int(i64),
    Poly(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub e: usize,
    /// Monic modulus, lowest degree first; defaults to the first irreducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> usize {
    1
}

fn is_one(e: &usize) -> bool {
    *e == 1
}

/// Structure constants `aᵢ·aⱼ = Σ v·aₖ` as `[i, j, k, v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub structure: Vec<(usize, usize, usize, ElemSpec)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ElemSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub field: FieldSpec,
}

/// Right module: one `dim × dim` matrix per basis element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    pub action: Vec<Vec<Vec<ElemSpec>>>,
    pub algebra: AlgebraSpec,
}

/// `Δ(hᵢ) ∋ v·h_a⊗h_b` as `[i, a, b, v]`, `σ(hᵢ) ∋ v·hⱼ` as `[i, j, v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub comul: Vec<(usize, usize, usize, ElemSpec)>,
    pub counit: Vec<ElemSpec>,
    pub antipode: Vec<(usize, usize, ElemSpec)>,
    pub algebra: AlgebraSpec,
}

/// Multiplication table over `0..n`; the group algebra is formed over `field`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
    pub field: FieldSpec,
}

/// `ρ(aᵢ) ∋ v·aⱼ⊗h_k` as `[i, j, k, v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub coaction: Vec<(usize, usize, usize, ElemSpec)>,
    pub algebra: AlgebraSpec,
    pub hopf: HopfSpec,
}

/// `B ∗ G`: `action[g]` has `g(bᵢ)` as row i; `cocycle` lists the values
/// `[g, h, τ(g,h)]` that differ from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedSpec {
    pub group: Vec<Vec<usize>>,
    pub action: Vec<Vec<Vec<ElemSpec>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cocycle: Vec<(usize, usize, Vec<ElemSpec>)>,
    pub base: AlgebraSpec,
}
