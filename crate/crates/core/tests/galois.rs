use std::sync::Arc;

use hopfk::algcore::{validate_algebra, Algebra, ModuleRep};
use hopfk::exactla::{FieldMatrix, FiniteField};
use hopfk::galois::{
    coinvariants, crossed_product, galois_check, verify_ind_res, verify_ind_twist, CrossedProductSpec, GaloisError,
    GaloisExtension,
};
use hopfk::hopf::{group_algebra, sweedler_taft, ComoduleAlgebra, Group, HopfAlgebra};
use hopfk::rng::stream;

fn f2() -> FiniteField {
    FiniteField::prime(2).unwrap()
}

fn ut2() -> Arc<Algebra> {
    validate_algebra(&f2(), 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], None).unwrap().into_arc()
}

fn hopfs() -> Vec<Arc<HopfAlgebra>> {
    let f3 = FiniteField::prime(3).unwrap();
    let f4 = FiniteField::new(2, 2).unwrap();
    let q = (0..4).find(|&a| f4.multiplicative_order(a) == Some(3)).unwrap();
    vec![
        Arc::new(group_algebra(&Group::cyclic(2), &f2()).unwrap()),
        Arc::new(group_algebra(&Group::symmetric3(), &f3).unwrap()),
        Arc::new(sweedler_taft(2, &f3, 2).unwrap()),
        Arc::new(sweedler_taft(3, &f4, q).unwrap()),
    ]
}

#[test]
fn hopf_algebras_are_galois_over_the_ground_field() {
    for h in hopfs() {
        let ca = ComoduleAlgebra::regular(&h);
        assert_eq!(coinvariants(&ca).unwrap().dim(), 1);
        let ext = galois_check(&ca, &mut stream(0, "t")).unwrap();
        assert_eq!(ext.tensor.dim(), h.dim() * h.dim());
    }
}

#[test]
fn trivial_coaction_is_not_galois() {
    let h = Arc::new(group_algebra(&Group::cyclic(2), &f2()).unwrap());
    let ca = ComoduleAlgebra::trivial(ut2(), h).unwrap();
    assert_eq!(coinvariants(&ca).unwrap().dim(), 3);
    assert!(matches!(galois_check(&ca, &mut stream(0, "t")), Err(GaloisError::NotGalois(_))));
}

fn ut2_c2() -> GaloisExtension {
    let spec = CrossedProductSpec::trivial(ut2(), Group::cyclic(2));
    let ca = crossed_product(&spec).unwrap();
    galois_check(&ca, &mut stream(0, "t")).unwrap()
}

#[test]
fn crossed_products_are_galois() {
    let ext = ut2_c2();
    assert_eq!(ext.a().dim(), 6);
    assert_eq!(ext.b.dim(), 3);
    assert_eq!(ext.tensor.dim(), 12);

    // F2×F2 with the swap
    let b = validate_algebra(&f2(), 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], None).unwrap().into_arc();
    let id = FieldMatrix::identity(&f2(), 2);
    let swap = FieldMatrix::from_rows(&f2(), 2, &[vec![0, 1], vec![1, 0]]);
    let spec = CrossedProductSpec::with_trivial_cocycle(b, Group::cyclic(2), vec![id, swap]);
    let ca = crossed_product(&spec).unwrap();
    let ext = galois_check(&ca, &mut stream(0, "t")).unwrap();
    assert_eq!(ext.a_data.radical.dim(), 0);
    assert_eq!(ext.a_data.simples.len(), 1);
    assert_eq!(ext.a_data.simples.simples[0].dim(), 2);
}

#[test]
fn induction_and_restriction_on_ut2_c2() {
    let ext = ut2_c2();
    let reg = ModuleRep::regular(ext.a());
    let res = ext.restrict(&reg).unwrap();
    assert_eq!(res.dim(), 6);
    assert!(ext.b_data.is_projective(&res).unwrap());
    let s2b = &ext.b_data.simples.simples[1];
    assert_eq!(ext.induce(s2b).unwrap().dim(), 2);
    let sa = &ext.a_data.simples.simples;
    assert!(!ext.in_category_c(&sa[0]).unwrap());
    assert!(ext.in_category_c(&sa[1]).unwrap());
}

#[test]
fn proposition_maps_verify() {
    let ext = ut2_c2();
    let h = ext.ca.hopf().clone();
    let triv = h.trivial_module();
    let hreg = ModuleRep::regular(h.algebra());
    for m in ext.a_data.simples.simples.iter().chain(&ext.a_data.pims.pims) {
        verify_ind_res(&ext, m).unwrap();
    }
    verify_ind_res(&ext, &ModuleRep::regular(ext.a())).unwrap();
    let breg = ModuleRep::regular(&ext.b);
    for n in std::iter::once(&breg).chain(&ext.b_data.simples.simples) {
        for v in [&triv, &hreg] {
            verify_ind_twist(&ext, n, v).unwrap();
        }
    }
    for hh in hopfs() {
        let ext = galois_check(&ComoduleAlgebra::regular(&hh), &mut stream(0, "t")).unwrap();
        let triv = hh.trivial_module();
        let hreg = ModuleRep::regular(hh.algebra());
        verify_ind_res(&ext, &triv).unwrap();
        for s in &ext.a_data.simples.simples {
            verify_ind_res(&ext, s).unwrap();
        }
        let breg = ModuleRep::regular(&ext.b);
        verify_ind_twist(&ext, &breg, &hreg).unwrap();
        verify_ind_twist(&ext, &breg, &triv).unwrap();
    }
}
