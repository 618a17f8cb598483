use std::sync::Arc;

use hopfk::algcore::{validate_algebra, Algebra, AlgebraData, ModuleRep};
use hopfk::exactla::{FieldMatrix, FiniteField, IntMatrix};
use hopfk::galois::{crossed_product, galois_check, CrossedProductSpec, GaloisExtension};
use hopfk::hopf::{group_algebra, sweedler_taft, ComoduleAlgebra, Group, HopfAlgebra};
use hopfk::kzero::{
    cartan_analysis, cartan_matrix, find_pq, g0_action, g0_class, hopf_cartan, k0_class, minimal_m, resolve_in_c,
    verify_cartan_bound, ClassKind, G0Ring, GrothendieckClass, KzeroError,
};
use hopfk::rng::stream;
use num_bigint::BigInt;

fn f2() -> FiniteField {
    FiniteField::prime(2).unwrap()
}

fn f3() -> FiniteField {
    FiniteField::prime(3).unwrap()
}

fn c2() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&Group::cyclic(2), &f2()).unwrap())
}

fn s3() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(&Group::symmetric3(), &f3()).unwrap())
}

fn h4() -> Arc<HopfAlgebra> {
    Arc::new(sweedler_taft(2, &f3(), 2).unwrap())
}

fn ut2() -> Arc<Algebra> {
    validate_algebra(&f2(), 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], None).unwrap().into_arc()
}

fn ut2_c2() -> ComoduleAlgebra {
    crossed_product(&CrossedProductSpec::trivial(ut2(), Group::cyclic(2))).unwrap()
}

fn swap() -> ComoduleAlgebra {
    let b = validate_algebra(&f2(), 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], None).unwrap().into_arc();
    let id = FieldMatrix::identity(&f2(), 2);
    let sw = FieldMatrix::from_rows(&f2(), 2, &[vec![0, 1], vec![1, 0]]);
    crossed_product(&CrossedProductSpec::with_trivial_cocycle(b, Group::cyclic(2), vec![id, sw])).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn classes_of_regular_modules() {
    let mut rng = stream(0, "k");
    let h = s3();
    let data = AlgebraData::compute(h.algebra(), &mut rng).unwrap();
    let reg = ModuleRep::regular(h.algebra());
    assert_eq!(g0_class(&data, &reg, &mut rng).unwrap().coeffs, vec![3, 3]);
    for (i, s) in data.simples.simples.iter().enumerate() {
        assert_eq!(g0_class(&data, s, &mut rng).unwrap(), GrothendieckClass::basis(ClassKind::G0, 2, i));
    }

    let a = ut2();
    let data = AlgebraData::compute(&a, &mut rng).unwrap();
    assert_eq!(k0_class(&data, &ModuleRep::regular(&a), &mut rng).unwrap().coeffs, vec![1, 1]);
    for (i, p) in data.pims.pims.iter().enumerate() {
        assert_eq!(k0_class(&data, p, &mut rng).unwrap(), GrothendieckClass::basis(ClassKind::K0, 2, i));
    }
    assert!(matches!(k0_class(&data, &data.simples.simples[0], &mut rng), Err(KzeroError::NotProjective)));
}

#[test]
fn cartan_matrices_and_their_invariants() {
    let mut rng = stream(0, "k");
    let (c, _) = hopf_cartan(&c2(), &mut rng).unwrap();
    assert_eq!(c.c.to_i64(), vec![vec![2]]);
    let an = cartan_analysis(&c.c);
    assert_eq!((an.kernel_rank, an.cokernel.clone()), (0, big(&[2])));

    let (c, _) = hopf_cartan(&s3(), &mut rng).unwrap();
    assert_eq!(c.c.to_i64(), vec![vec![2, 1], vec![1, 2]]);
    let an = cartan_analysis(&c.c);
    assert_eq!(an.invariant_factors, big(&[1, 3]));
    assert_eq!(an.cokernel, big(&[3]));

    let (c, _) = hopf_cartan(&h4(), &mut rng).unwrap();
    assert_eq!(c.c.to_i64(), vec![vec![1, 1], vec![1, 1]]);
    let an = cartan_analysis(&c.c);
    assert_eq!(an.kernel_rank, 1);
    assert!(!an.injective);

    let data = AlgebraData::compute(swap().algebra(), &mut rng).unwrap();
    assert_eq!(cartan_matrix(&data, &mut rng).unwrap().c.to_i64(), vec![vec![1]]);
}

#[test]
fn minimal_multiples_and_witnesses() {
    let mut rng = stream(0, "k");
    let (c, t) = hopf_cartan(&c2(), &mut rng).unwrap();
    let w = find_pq(&c, t, &mut rng).unwrap();
    assert_eq!((w.m, w.p_indices(), w.q_indices()), (2, vec![0], vec![]));

    let (c, t) = hopf_cartan(&s3(), &mut rng).unwrap();
    let w = find_pq(&c, t, &mut rng).unwrap();
    assert_eq!(w.m, 3);
    assert_eq!(w.p_indices(), vec![t, t]);
    assert_eq!(w.q_indices(), vec![1 - t]);

    let (c, t) = hopf_cartan(&h4(), &mut rng).unwrap();
    assert_eq!(minimal_m(&c.c, t), None);
    assert!(matches!(find_pq(&c, t, &mut rng), Err(KzeroError::NoSuchPQ)));

    assert_eq!(minimal_m(&IntMatrix::identity(2), 1).unwrap().m, 1);
}

#[test]
fn g0_ring_structure() {
    let mut rng = stream(0, "k");
    for h in [c2(), s3(), h4()] {
        let ring = G0Ring::compute(&h, &mut rng).unwrap();
        assert!(ring.is_associative());
        assert!(ring.is_unital());
    }
    let ring = G0Ring::compute(&s3(), &mut rng).unwrap();
    let sign = GrothendieckClass::basis(ClassKind::G0, 2, 1 - ring.trivial);
    assert_eq!(ring.product(&sign, &sign).unwrap(), ring.unit());
}

#[test]
fn action_of_g0_on_extension_classes() {
    let mut rng = stream(0, "k");
    let h = c2();
    let ext = galois_check(&ComoduleAlgebra::regular(&h), &mut rng).unwrap();
    let ring = G0Ring::compute(&h, &mut rng).unwrap();
    let hreg = ring.class_of(&ModuleRep::regular(h.algebra()), &mut rng).unwrap();
    let a = k0_class(&ext.a_data, &ModuleRep::regular(ext.a()), &mut rng).unwrap();
    assert_eq!(g0_action(&ext, &ring, &a, &hreg, &mut rng).unwrap(), a.scale(2));
    assert_eq!(g0_action(&ext, &ring, &a, &ring.unit(), &mut rng).unwrap(), a);

    let ext = galois_check(&ut2_c2(), &mut rng).unwrap();
    let ga = g0_class(&ext.a_data, &ModuleRep::regular(ext.a()), &mut rng).unwrap();
    assert_eq!(g0_action(&ext, &ring, &ga, &hreg, &mut rng).unwrap(), ga.scale(2));
}

fn resolve_all(ext: &GaloisExtension) -> Vec<usize> {
    let mut mods: Vec<ModuleRep> = ext.a_data.simples.simples.clone();
    mods.extend(ext.a_data.pims.pims.iter().cloned());
    mods.push(ModuleRep::regular(ext.a()));
    mods.iter().map(|m| resolve_in_c(ext, m, None).unwrap().length()).collect()
}

#[test]
fn resolutions_in_the_category() {
    let mut rng = stream(0, "k");
    let ext = galois_check(&ut2_c2(), &mut rng).unwrap();
    let s1 = &ext.a_data.simples.simples[0];
    let res = resolve_in_c(&ext, s1, None).unwrap();
    assert_eq!(res.length(), 1);
    assert!(res.is_exact());
    assert!(ext.in_category_c(&res.syzygy).unwrap());
    assert!(resolve_all(&ext).iter().all(|&l| l <= 1));

    let ext = galois_check(&ComoduleAlgebra::regular(&c2()), &mut rng).unwrap();
    assert!(resolve_all(&ext).iter().all(|&l| l == 0));
}

#[test]
fn cartan_bound_verdicts() {
    let mut rng = stream(0, "k");
    let r = verify_cartan_bound(&ComoduleAlgebra::regular(&c2()), None, &mut rng).unwrap();
    assert_eq!((r.m(), r.a_analysis.cokernel.clone(), r.a_analysis.kernel_rank), (2, big(&[2]), 0));

    let r = verify_cartan_bound(&ut2_c2(), None, &mut rng).unwrap();
    assert_eq!(r.a_cartan.to_i64(), vec![vec![2, 2], vec![0, 2]]);
    assert_eq!(r.a_analysis.invariant_factors, big(&[2, 2]));
    assert_eq!(r.m(), 2);
    assert_eq!(r.gldim_b, 1);

    let r = verify_cartan_bound(&swap(), None, &mut rng).unwrap();
    assert!(r.a_analysis.cokernel_trivial());

    let err = verify_cartan_bound(&ComoduleAlgebra::regular(&h4()), None, &mut rng).unwrap_err();
    assert!(matches!(err, KzeroError::CartanNotInjective));
}
