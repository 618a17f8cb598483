use std::sync::Arc;

use hopfk::algcore::{validate_algebra, Algebra, AlgebraData, ModuleRep, ProjDim};
use hopfk::chop::{composition_factors, is_irreducible, iso_test};
use hopfk::exactla::FiniteField;
use hopfk::hopf::{group_algebra, sweedler_taft, Group};
use hopfk::rng::stream;

fn cartan(a: &Arc<Algebra>, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = stream(seed, "test");
    let data = AlgebraData::compute(a, &mut rng).unwrap();
    data.pims.pims.iter().map(|p| composition_factors(p, &data.simples, &mut rng).unwrap()).collect()
}

fn ut2() -> Arc<Algebra> {
    let f = FiniteField::prime(2).unwrap();
    validate_algebra(&f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], None).unwrap().into_arc()
}

#[test]
fn group_algebra_cartan_matrices() {
    let f2 = FiniteField::prime(2).unwrap();
    let f3 = FiniteField::prime(3).unwrap();
    let c2 = group_algebra(&Group::cyclic(2), &f2).unwrap();
    assert_eq!(cartan(c2.algebra(), 0), vec![vec![2]]);
    let s3 = group_algebra(&Group::symmetric3(), &f3).unwrap();
    assert_eq!(cartan(s3.algebra(), 0), vec![vec![2, 1], vec![1, 2]]);
    let s3f2 = group_algebra(&Group::symmetric3(), &f2).unwrap();
    assert_eq!(cartan(s3f2.algebra(), 0), vec![vec![2, 0], vec![0, 1]]);
    let c3 = group_algebra(&Group::cyclic(3), &f3).unwrap();
    assert_eq!(cartan(c3.algebra(), 0), vec![vec![3]]);
}

#[test]
fn sweedler_cartan_is_singular() {
    let f3 = FiniteField::prime(3).unwrap();
    let h4 = sweedler_taft(2, &f3, 2).unwrap();
    assert_eq!(cartan(h4.algebra(), 0), vec![vec![1, 1], vec![1, 1]]);
}

#[test]
fn taft_over_f4_is_valid() {
    let f4 = FiniteField::new(2, 2).unwrap();
    let q = (0..4).find(|&a| f4.multiplicative_order(a) == Some(3)).unwrap();
    let t = sweedler_taft(3, &f4, q).unwrap();
    assert_eq!(t.dim(), 9);
    assert!(sweedler_taft(2, &FiniteField::prime(2).unwrap(), 1).is_err());
}

#[test]
fn ut2_homological_data() {
    let a = ut2();
    let mut rng = stream(3, "test");
    let data = AlgebraData::compute(&a, &mut rng).unwrap();
    assert_eq!(data.radical.dim(), 1);
    assert_eq!(data.gldim(6).unwrap(), ProjDim::Finite(1));
    let s1 = &data.simples.simples[0];
    let cover = data.projective_cover(s1).unwrap();
    assert_eq!(cover.module.dim(), 2);
    assert!(!data.is_projective(s1).unwrap());
    assert!(data.is_projective(&data.simples.simples[1]).unwrap());
    assert!(data.is_projective(&ModuleRep::regular(&a)).unwrap());
}

#[test]
fn trivial_module_of_c2_has_infinite_projective_dimension() {
    let f2 = FiniteField::prime(2).unwrap();
    let c2 = group_algebra(&Group::cyclic(2), &f2).unwrap();
    let mut rng = stream(0, "test");
    let data = AlgebraData::compute(c2.algebra(), &mut rng).unwrap();
    let triv = c2.trivial_module();
    assert_eq!(data.proj_dim(&triv, 8).unwrap(), ProjDim::NotDetected);
    assert!(is_irreducible(&triv, &mut rng).unwrap().is_irreducible());
    let reg = ModuleRep::regular(c2.algebra());
    assert!(!iso_test(&reg, &triv.direct_sum(&triv).unwrap(), &mut rng).unwrap());
}
