use rand::Rng as _;

use super::ChopError;
use crate::algcore::ModuleRep;
use crate::exactla::poly::{self, Poly};
use crate::exactla::{spin, Elem, FieldMatrix, Subspace};
use crate::rng::Rng;

const RANDOM_TRIES: usize = 32;
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Evidence that a module is irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    OneDimensional,
    /// `p(θ)` has nullity `deg p`, a null vector spins to M and a null vector
    /// of the transpose spins to the dual.
    Norton {
        element: Vec<Elem>,
        factor: Poly,
        nullity: usize,
    },
    /// Every projective point of M spins to M.
    Exhaustive {
        points: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(Certificate),
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    Undecided,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

fn random_element(m: &ModuleRep, rng: &mut Rng) -> Vec<Elem> {
    let q = m.algebra().field().order();
    (0..m.algebra().dim()).map(|_| rng.random_range(0..q)).collect()
}

fn proper(s: &Subspace, d: usize) -> bool {
    s.dim() > 0 && s.dim() < d
}

/// Annihilator in M of a subspace of the dual.
fn annihilator(w: &Subspace) -> Subspace {
    let f = w.field();
    Subspace::from_rows(f, w.ambient_dim(), &w.basis().kernel_basis())
}

/// Tries one random element. Returns a verdict if it settles the question.
fn norton_step(m: &ModuleRep, transposed: &[FieldMatrix], element: Vec<Elem>) -> Option<Irreducibility> {
    let f = m.algebra().field();
    let d = m.dim();
    let theta = m.act(&element);
    let chi = poly::charpoly(&theta);
    let mut factors = poly::factor(f, &chi);
    factors.sort_by_key(|(p, _)| p.len());
    for (p, _) in factors {
        let pt = poly::eval_matrix(f, &p, &theta);
        let null = pt.left_kernel();
        for i in 0..null.rows() {
            let s = spin(f, d, &[null.row(i).to_vec()], m.generator_action());
            if proper(&s, d) {
                return Some(Irreducibility::Reducible(s));
            }
        }
        let dual_null = pt.kernel_basis();
        for w in &dual_null {
            let s = spin(f, d, std::slice::from_ref(w), transposed);
            if proper(&s, d) {
                return Some(Irreducibility::Reducible(annihilator(&s)));
            }
        }
        if null.rows() == p.len() - 1 {
            return Some(Irreducibility::Irreducible(Certificate::Norton { element, factor: p, nullity: null.rows() }));
        }
    }
    None
}

fn projective_points(q: u64, d: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..d {
        total = total.checked_add(pow)?;
        pow = pow.checked_mul(q)?;
    }
    Some(total)
}

/// Spins every vector whose first nonzero entry is 1.
fn exhaustive(m: &ModuleRep) -> Irreducibility {
    let f = m.algebra().field();
    let d = m.dim();
    let q = f.order();
    let mut points = 0u64;
    for lead in 0..d {
        let tail = d - lead - 1;
        let count = (q as u64).pow(tail as u32);
        for code in 0..count {
            let mut v = vec![0; d];
            v[lead] = 1;
            let mut c = code;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (c % q as u64) as Elem;
                c /= q as u64;
            }
            points += 1;
            let s = spin(f, d, &[v], m.generator_action());
            if proper(&s, d) {
                return Irreducibility::Reducible(s);
            }
        }
    }
    Irreducibility::Irreducible(Certificate::Exhaustive { points })
}

/// Norton irreducibility test with a deterministic fallback over projective
/// points when their number is at most 2¹⁶.
pub fn is_irreducible(m: &ModuleRep, rng: &mut Rng) -> Result<Irreducibility, ChopError> {
    let d = m.dim();
    if d == 0 {
        return Err(ChopError::ZeroModule);
    }
    if d == 1 {
        return Ok(Irreducibility::Irreducible(Certificate::OneDimensional));
    }
    let transposed: Vec<FieldMatrix> = m.generator_action().iter().map(|g| g.transpose()).collect();
    // cheap first pass: a standard vector that spins to a proper subspace
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        let s = m.spin(&[e]);
        if proper(&s, d) {
            return Ok(Irreducibility::Reducible(s));
        }
    }
    for _ in 0..RANDOM_TRIES {
        let x = random_element(m, rng);
        if let Some(v) = norton_step(m, &transposed, x) {
            return Ok(v);
        }
    }
    match projective_points(m.algebra().field().order() as u64, d) {
        Some(n) if n <= EXHAUSTIVE_LIMIT => Ok(exhaustive(m)),
        _ => Ok(Irreducibility::Undecided),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algcore::{validate_algebra, Algebra};
    use crate::exactla::FiniteField;
    use crate::rng::stream;

    fn m2_f2() -> Arc<Algebra> {
        // matrix units e11, e12, e21, e22
        let f = FiniteField::prime(2).unwrap();
        let mut entries = vec![];
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    entries.push((i * 2 + j, j * 2 + l, i * 2 + l, 1));
                }
            }
        }
        validate_algebra(&f, 4, &entries, None).unwrap().into_arc()
    }

    #[test]
    fn natural_module_of_m2_is_irreducible() {
        let a = m2_f2();
        let reg = ModuleRep::regular(&a);
        // row space of e11: e11 A = span{e11, e12}
        let nat = reg.submodule(&reg.spin(&[vec![1, 0, 0, 0]])).unwrap();
        assert_eq!(nat.dim(), 2);
        let mut rng = stream(0, "test");
        assert!(is_irreducible(&nat, &mut rng).unwrap().is_irreducible());
        assert!(matches!(exhaustive(&nat), Irreducibility::Irreducible(Certificate::Exhaustive { points: 3 })));
        assert!(!is_irreducible(&reg, &mut rng).unwrap().is_irreducible());
    }

    #[test]
    fn regular_c2_has_witness() {
        let f = FiniteField::prime(2).unwrap();
        let a = validate_algebra(&f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], None)
            .unwrap()
            .into_arc();
        let reg = ModuleRep::regular(&a);
        let mut rng = stream(1, "test");
        match is_irreducible(&reg, &mut rng).unwrap() {
            Irreducibility::Reducible(s) => {
                assert_eq!(s, Subspace::from_rows(&f, 2, &[vec![1, 1]]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_extension_module_is_irreducible() {
        // F4 as a 2-dim F2-algebra acting on itself
        let f = FiniteField::prime(2).unwrap();
        let a = validate_algebra(&f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)], None)
            .unwrap()
            .into_arc();
        let reg = ModuleRep::regular(&a);
        let mut rng = stream(2, "test");
        assert!(is_irreducible(&reg, &mut rng).unwrap().is_irreducible());
    }
}
