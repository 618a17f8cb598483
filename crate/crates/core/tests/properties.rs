use std::sync::OnceLock;

use hopfk::acceptance::random_modules;
use hopfk::algcore::{AlgebraData, ModuleRep};
use hopfk::chop::composition_factors;
use hopfk::exactla::{snf, FieldMatrix, FiniteField, IntMatrix};
use hopfk::fixtures;
use hopfk::galois::{galois_check, GaloisExtension};
use hopfk::kzero::{cartan_matrix, g0_class, k0_class, pim_sum, ActionTable, ClassKind, G0Ring, GrothendieckClass};
use hopfk::oracle;
use hopfk::rng::{stream, Rng};
use proptest::prelude::*;
use rand::Rng as _;

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

/// Product of random elementary row operations.
fn unimodular(n: usize, rng: &mut Rng) -> IntMatrix {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        if a == b {
            u[a].iter_mut().for_each(|x| *x = -*x);
        } else {
            let k = rng.random_range(-2..=2);
            let row_b = u[b].clone();
            u[a].iter_mut().zip(row_b).for_each(|(x, y)| *x += k * y);
        }
    }
    IntMatrix::from_rows(&u)
}

fn field(which: u8) -> FiniteField {
    match which {
        0 => FiniteField::prime(2).unwrap(),
        1 => FiniteField::prime(3).unwrap(),
        _ => FiniteField::new(2, 2).unwrap(),
    }
}

fn field_matrix(f: &FiniteField, r: usize, c: usize, rng: &mut Rng) -> FieldMatrix {
    let q = f.order();
    FieldMatrix::from_fn(f, r, c, |_, _| rng.random_range(0..q))
}

struct Setting {
    ext: GaloisExtension,
    ring: G0Ring,
}

fn ut2_c2() -> &'static Setting {
    static CELL: OnceLock<Setting> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rng = stream(0, "props");
        let ext = galois_check(&fixtures::comodule_algebra("ut2_c2.cross"), &mut rng).unwrap();
        let ring = G0Ring::compute(ext.ca.hopf(), &mut rng).unwrap();
        Setting { ext, ring }
    })
}

fn s3() -> &'static AlgebraData {
    static CELL: OnceLock<AlgebraData> = OnceLock::new();
    CELL.get_or_init(|| AlgebraData::compute(&fixtures::algebra("f3s3.alg"), &mut stream(0, "props")).unwrap())
}

fn random_class(kind: ClassKind, len: usize, rng: &mut Rng) -> GrothendieckClass {
    GrothendieckClass { kind, coeffs: (0..len).map(|_| rng.random_range(-2..=2)).collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_form_is_unimodular_invariant(rows in int_matrix(), seed in any::<u64>()) {
        let m = IntMatrix::from_rows(&rows);
        let mut rng = stream(seed, "unimodular");
        let u = unimodular(m.rows(), &mut rng);
        let v = unimodular(m.cols(), &mut rng);
        let moved = u.mul(&m).mul(&v);
        prop_assert_eq!(snf(&moved).invariant_factors(), snf(&m).invariant_factors());
        prop_assert_eq!(snf(&m).invariant_factors(), oracle::invariant_factors(&m));
    }

    #[test]
    fn rref_is_idempotent(which in 0u8..3, r in 1usize..7, c in 1usize..7, seed in any::<u64>()) {
        let f = field(which);
        let m = field_matrix(&f, r, c, &mut stream(seed, "rref"));
        let (e, piv) = m.rref();
        let (e2, piv2) = e.rref();
        prop_assert_eq!(&e, &e2);
        prop_assert_eq!(piv.len(), m.rank());
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn kronecker_rank_is_multiplicative(which in 0u8..3, dims in (1usize..5, 1usize..5, 1usize..5, 1usize..5), seed in any::<u64>()) {
        let f = field(which);
        let mut rng = stream(seed, "kron");
        let a = field_matrix(&f, dims.0, dims.1, &mut rng);
        let b = field_matrix(&f, dims.2, dims.3, &mut rng);
        prop_assert_eq!(a.kronecker(&b).unwrap().rank(), a.rank() * b.rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn composition_factors_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let data = s3();
        let mut rng = stream(seed, "jh");
        for m in random_modules(data, 3, 12, &mut rng) {
            let a = composition_factors(&m, &data.simples, &mut stream(seed, "one")).unwrap();
            let b = composition_factors(&m, &data.simples, &mut stream(seed ^ 1, "two")).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn g0_is_additive_on_short_exact_sequences(seed in any::<u64>()) {
        let data = &ut2_c2().ext.a_data;
        let mut rng = stream(seed, "additive");
        for y in random_modules(data, 3, 12, &mut rng) {
            let q = data.algebra.field().order();
            let v: Vec<_> = (0..y.dim()).map(|_| rng.random_range(0..q)).collect();
            let sub = y.spin(&[v]);
            let x = y.submodule(&sub).unwrap();
            let z = y.quotient(&sub).unwrap();
            let gy = g0_class(data, &y, &mut rng).unwrap();
            let gx = g0_class(data, &x, &mut rng).unwrap();
            let gz = g0_class(data, &z, &mut rng).unwrap();
            prop_assert_eq!(gy, gx.add(&gz));
        }
    }

    #[test]
    fn is_projective_agrees_with_the_splitting_oracle(seed in any::<u64>()) {
        let data = &ut2_c2().ext.a_data;
        let mut rng = stream(seed, "projective");
        for m in random_modules(data, 1, 12, &mut rng) {
            prop_assert_eq!(data.is_projective(&m).unwrap(), oracle::is_projective_by_splitting(&m));
        }
    }

    #[test]
    fn g0_product_is_well_defined(seed in any::<u64>()) {
        let ring = &ut2_c2().ring;
        let mut rng = stream(seed, "ring");
        let vs = random_modules(&ring.data, 2, 4, &mut rng);
        for v in &vs {
            for w in &vs {
                let t = ring.hopf.tensor_modules(v, w).unwrap();
                let lhs = ring.class_of(&t, &mut rng).unwrap();
                let rhs = ring.product(&ring.class_of(v, &mut rng).unwrap(), &ring.class_of(w, &mut rng).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn g0_action_is_a_unital_module_action(seed in any::<u64>()) {
        let s = ut2_c2();
        let mut rng = stream(seed, "action");
        let n = s.ring.rank();
        for kind in [ClassKind::K0, ClassKind::G0] {
            let table = ActionTable::compute(&s.ext, &s.ring, kind, &mut rng).unwrap();
            let x = random_class(kind, table.table.len(), &mut rng);
            let u = random_class(ClassKind::G0, n, &mut rng);
            let v = random_class(ClassKind::G0, n, &mut rng);
            let left = table.apply(&x, &s.ring.product(&u, &v).unwrap()).unwrap();
            let right = table.apply(&table.apply(&x, &u).unwrap(), &v).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(table.apply(&x, &s.ring.unit()).unwrap(), x);
        }
    }

    #[test]
    fn cartan_map_sends_k0_to_g0(seed in any::<u64>()) {
        let data = &ut2_c2().ext.a_data;
        let mut rng = stream(seed, "naturality");
        let c = cartan_matrix(data, &mut rng).unwrap().c;
        let counts: Vec<usize> = (0..data.pims.pims.len()).map(|_| rng.random_range(0..3)).collect();
        let p = pim_sum(data, &counts);
        if p.dim() > 0 {
            let k = k0_class(data, &p, &mut rng).unwrap();
            let g = g0_class(data, &p, &mut rng).unwrap();
            let image: Vec<i64> = (0..c.cols())
                .map(|j| k.coeffs.iter().enumerate().map(|(i, a)| a * c.to_i64()[i][j]).sum())
                .collect();
            prop_assert_eq!(g.coeffs, image);
        }
    }

    #[test]
    fn tensor_closure_of_categories(seed in any::<u64>()) {
        let s = ut2_c2();
        let ext = &s.ext;
        let mut rng = stream(seed, "closure");
        let ms = random_modules(&ext.a_data, 4, 8, &mut rng);
        let vs = random_modules(&s.ring.data, 3, 4, &mut rng);
        for m in &ms {
            for v in &vs {
                let t = ext.ca.twist(m, v).unwrap();
                let m_c = ext.in_category_c(m).unwrap();
                if m_c {
                    prop_assert!(ext.in_category_c(&t).unwrap());
                }
                if ext.a_data.is_projective(m).unwrap() {
                    prop_assert!(ext.a_data.is_projective(&t).unwrap());
                }
                if m_c && s.ring.data.is_projective(v).unwrap() {
                    prop_assert!(ext.a_data.is_projective(&t).unwrap());
                }
            }
        }
    }

    #[test]
    fn category_is_closed_under_extensions_and_kernels(seed in any::<u64>()) {
        let ext = &ut2_c2().ext;
        let mut rng = stream(seed, "extensions");
        for m in random_modules(&ext.a_data, 2, 8, &mut rng) {
            // 0 → Ω → P → M → 0
            let cover = ext.a_data.projective_cover(&m).unwrap();
            let omega = cover.module.submodule(&cover.module.kernel(&cover.map)).unwrap();
            let (c_o, c_p, c_m) = (
                ext.in_category_c(&omega).unwrap(),
                ext.in_category_c(&cover.module).unwrap(),
                ext.in_category_c(&m).unwrap(),
            );
            prop_assert!(!(c_o && c_m) || c_p);
            prop_assert!(!(c_p && c_m) || c_o);
        }
    }
}

#[test]
fn restriction_of_induction_scales_by_dim_h() {
    let mut rng = stream(0, "induce");
    for name in ["ut2_c2.cross", "b2xb2_swap.cross"] {
        let ext = galois_check(&fixtures::comodule_algebra(name), &mut rng).unwrap();
        let h = ext.ca.hopf().dim();
        let mut ns: Vec<ModuleRep> = ext.b_data.simples.simples.clone();
        ns.push(ModuleRep::regular(&ext.b));
        for n in &ns {
            let ind = ext.induce(n).unwrap();
            assert_eq!(ext.restrict(&ind).unwrap().dim(), n.dim() * h);
        }
    }
}
