use super::module::{ModuleError, ModuleRep};
use crate::exactla::{Echelon, Elem, FieldMatrix};

/// Basis of `Hom_A(M, N)`: matrices `X` (dim M × dim N) with `Rᵢ·X = X·R′ᵢ`.
#[derive(Debug, Clone)]
pub struct HomBasis {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub basis: Vec<FieldMatrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ cᵢ Xᵢ`.
    pub fn combine(&self, coeffs: &[Elem]) -> FieldMatrix {
        let f = self.source.algebra().field();
        let mut out = FieldMatrix::zeros(f, self.source.dim(), self.target.dim());
        for (&c, x) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(c, x);
        }
        out
    }
}

/// A basis of M obtained by spinning standard vectors, each vector remembered
/// as either a fresh seed or `parent · gen`.
struct SpinTree {
    vectors: Vec<Vec<Elem>>,
    origin: Vec<Origin>,
    seeds: usize,
}

enum Origin {
    Seed(usize),
    Image { parent: usize, gen: usize },
}

fn spin_tree(m: &ModuleRep) -> SpinTree {
    let f = m.algebra().field();
    let d = m.dim();
    let gens = m.generator_action();
    let mut ech = Echelon::new(f, d);
    let mut vectors = Vec::new();
    let mut origin = Vec::new();
    let mut seeds = 0;
    for i in 0..d {
        if ech.len() == d {
            break;
        }
        let mut e = vec![0; d];
        e[i] = 1;
        if !ech.insert(&e) {
            continue;
        }
        vectors.push(e);
        origin.push(Origin::Seed(seeds));
        seeds += 1;
        let mut k = vectors.len() - 1;
        while k < vectors.len() {
            for (g, mat) in gens.iter().enumerate() {
                let w = mat.vec_mul(&vectors[k]);
                if ech.insert(&w) {
                    vectors.push(w);
                    origin.push(Origin::Image { parent: k, gen: g });
                }
            }
            k += 1;
        }
    }
    SpinTree { vectors, origin, seeds }
}

/// Solves the intertwining equations. The unknowns are the images of the
/// seeds of a spinning basis of M; every other image is forced.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomBasis, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = m.algebra().field().clone();
    let (dm, dn) = (m.dim(), n.dim());
    let done = |basis| Ok(HomBasis { source: m.clone(), target: n.clone(), basis });
    if dm == 0 || dn == 0 {
        return done(vec![]);
    }
    let tree = spin_tree(m);
    let u = tree.seeds * dn;
    let ng = n.generator_action();
    // images[k] = L_k with X(b_k) = y · L_k
    let mut images: Vec<FieldMatrix> = Vec::with_capacity(dm);
    for o in &tree.origin {
        let l = match *o {
            Origin::Seed(s) => FieldMatrix::from_fn(&f, u, dn, |r, c| (r == s * dn + c) as Elem),
            Origin::Image { parent, gen } => images[parent].mul(&ng[gen]),
        };
        images.push(l);
    }
    let bmat = FieldMatrix::from_rows(&f, dm, &tree.vectors);
    let binv = bmat.inverse().expect("spinning basis is a basis");
    let mut blocks: Vec<FieldMatrix> = Vec::new();
    for (k, b) in tree.vectors.iter().enumerate() {
        for (g, mat) in m.generator_action().iter().enumerate() {
            let coeffs = binv.vec_mul(&mat.vec_mul(b));
            let mut c = images[k].mul(&ng[g]);
            for (l, &cl) in coeffs.iter().enumerate() {
                if cl != 0 {
                    c.add_scaled(f.neg(cl), &images[l]);
                }
            }
            if !c.is_zero() {
                blocks.push(c);
            }
        }
    }
    let sols = if blocks.is_empty() {
        FieldMatrix::identity(&f, u)
    } else {
        let width: usize = blocks.iter().map(|b| b.cols()).sum();
        let cmat = FieldMatrix::from_fn(&f, u, width, |r, c| {
            let mut c = c;
            for b in &blocks {
                if c < b.cols() {
                    return b.get(r, c);
                }
                c -= b.cols();
            }
            unreachable!()
        });
        cmat.left_kernel()
    };
    let basis = (0..sols.rows())
        .map(|i| {
            let y = sols.row(i);
            let rows: Vec<Vec<Elem>> = images.iter().map(|l| l.vec_mul(y)).collect();
            binv.mul(&FieldMatrix::from_rows(&f, dn, &rows))
        })
        .collect();
    done(basis)
}

/// `dim End_A(M)`.
pub fn endo_dim(m: &ModuleRep) -> usize {
    hom_space(m, m).map(|h| h.dim()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algcore::{validate_algebra, Algebra};
    use crate::exactla::{FiniteField, Subspace};

    fn ut2() -> Arc<Algebra> {
        // e11, e12, e22
        let f = FiniteField::prime(2).unwrap();
        validate_algebra(&f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], None).unwrap().into_arc()
    }

    fn one_dim(a: &Arc<Algebra>, vals: [Elem; 3]) -> ModuleRep {
        let f = a.field();
        ModuleRep::new(a.clone(), vals.iter().map(|&v| FieldMatrix::scalar(f, 1, v)).collect()).unwrap()
    }

    #[test]
    fn identity_is_an_endomorphism() {
        let a = ut2();
        let reg = ModuleRep::regular(&a);
        let h = hom_space(&reg, &reg).unwrap();
        assert_eq!(h.dim(), 3);
        for x in &h.basis {
            assert!(reg.is_homomorphism(&reg, x));
        }
        let id = FieldMatrix::identity(a.field(), 3);
        let span = Subspace::from_rows(a.field(), 9, &h.basis.iter().map(|x| x.flatten().to_vec()).collect::<Vec<_>>());
        assert!(span.contains(id.flatten()));
    }

    #[test]
    fn ut2_hom_dimensions() {
        let a = ut2();
        let s1 = one_dim(&a, [1, 0, 0]);
        let s2 = one_dim(&a, [0, 0, 1]);
        let reg = ModuleRep::regular(&a);
        let p1 = reg.submodule(&reg.spin(&[vec![1, 0, 0]])).unwrap();
        assert_eq!(p1.dim(), 2);
        assert_eq!(hom_space(&p1, &s1).unwrap().dim(), 1);
        assert_eq!(hom_space(&p1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s2, &p1).unwrap().dim(), 1);
    }
}
