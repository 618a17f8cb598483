use std::sync::Arc;

use super::bialgebra::HopfAlgebra;
use super::HopfError;
use crate::algcore::validate_algebra;
use crate::exactla::FiniteField;

/// A finite group by its multiplication table `table[g][h] = gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = table.len();
        if n == 0 {
            return Err(HopfError::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(HopfError::NotAGroup("table is not a closed square".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| HopfError::NotAGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| HopfError::NotAGroup(format!("{g} has no inverse")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Group { table, identity, inverse })
    }

    /// `ℤ/n` with elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::new(table).expect("cyclic group")
    }

    /// `S₃` with elements listed as permutations of `{0,1,2}`: identity,
    /// the two 3-cycles, then the three transpositions.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        // (ab)(x) = a(b(x))
                        let (pa, pb) = (perms[a], perms[b]);
                        index([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
                    })
                    .collect()
            })
            .collect();
        Group::new(table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// The group algebra `kG` with `Δg = g⊗g`, `ε(g) = 1`, `σ(g) = g⁻¹`.
pub fn group_algebra(group: &Group, field: &FiniteField) -> Result<HopfAlgebra, HopfError> {
    let n = group.order();
    let mut entries = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            entries.push((g, h, group.mul(g, h), 1));
        }
    }
    let labels = (0..n).map(|g| if g == group.identity() { "1".to_string() } else { format!("g{g}") }).collect();
    let algebra = Arc::new(validate_algebra(field, n, &entries, None)?.with_labels(labels));
    let delta = (0..n)
        .map(|g| {
            let mut d = vec![0; n * n];
            d[g * n + g] = 1;
            d
        })
        .collect();
    let sigma = (0..n)
        .map(|g| {
            let mut s = vec![0; n];
            s[group.inv(g)] = 1;
            s
        })
        .collect();
    HopfAlgebra::new(algebra, delta, vec![1; n], sigma)
}
