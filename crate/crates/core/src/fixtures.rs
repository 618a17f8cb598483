//! Shipped fixture files, embedded at compile time, together with the code
//! constructors they are generated from.

use std::sync::Arc;

use crate::algcore::{validate_algebra, Algebra, ModuleRep};
use crate::exactla::{FieldMatrix, FiniteField};
use crate::format::{AlgebraSpec, ComoduleSpec, CrossedSpec, ElemSpec, GroupSpec, HopfSpec, ModuleSpec, SpecFile};
use crate::galois::{crossed_product, CrossedProductSpec};
use crate::hopf::{group_algebra, sweedler_taft, ComoduleAlgebra, Group, HopfAlgebra};
use crate::rng::stream;

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../fixtures/", $name)))),*]
    };
}

/// `(file name, contents)` of every fixture.
pub const FILES: &[(&str, &str)] = embedded![
    "f2c2.hopf",
    "f3s3.alg",
    "f3s3.hopf",
    "sweedler.hopf",
    "taft3_f4.hopf",
    "ut2.alg",
    "b2xb2_swap.cross",
    "ut2_c2.cross",
    "m2.alg",
    "c2_f2.group",
    "c3_f3.group",
    "s3_f3.group",
    "s3_f2.group",
    "ut2_trivial.coalg",
    "ut2c2_s1.mod",
    "f2c2_triv.mod",
    "f2c2_reg.mod",
];

/// Axiom-breaking copies of two Hopf fixtures with the expected failure.
pub const MUTATIONS: &[(&str, &str, &str)] = &[
    (
        "f2c2_antipode_one.hopf",
        include_str!("../../../fixtures/mutations/f2c2_antipode_one.hopf"),
        "AntipodeAxiomFails",
    ),
    ("f2c2_counit_zero.hopf", include_str!("../../../fixtures/mutations/f2c2_counit_zero.hopf"), "CounitAxiomFails"),
    ("f2c2_comul_skew.hopf", include_str!("../../../fixtures/mutations/f2c2_comul_skew.hopf"), "NotCoassociative"),
    ("f2c2_primitive.hopf", include_str!("../../../fixtures/mutations/f2c2_primitive.hopf"), "NotBialgebraMap"),
    (
        "f2c2_antipode_zero.hopf",
        include_str!("../../../fixtures/mutations/f2c2_antipode_zero.hopf"),
        "AntipodeAxiomFails",
    ),
    (
        "sweedler_antipode_x.hopf",
        include_str!("../../../fixtures/mutations/sweedler_antipode_x.hopf"),
        "AntipodeAxiomFails",
    ),
    ("sweedler_counit_x.hopf", include_str!("../../../fixtures/mutations/sweedler_counit_x.hopf"), "CounitAxiomFails"),
    ("sweedler_primitive.hopf", include_str!("../../../fixtures/mutations/sweedler_primitive.hopf"), "NotBialgebraMap"),
    (
        "sweedler_comul_extra.hopf",
        include_str!("../../../fixtures/mutations/sweedler_comul_extra.hopf"),
        "NotCoassociative",
    ),
    (
        "sweedler_antipode_zero.hopf",
        include_str!("../../../fixtures/mutations/sweedler_antipode_zero.hopf"),
        "AntipodeAxiomFails",
    ),
];

pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses an embedded fixture.
pub fn spec(name: &str) -> SpecFile {
    SpecFile::parse(source(name).unwrap_or_else(|| panic!("unknown fixture {name}")))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn hopf(name: &str) -> Arc<HopfAlgebra> {
    spec(name).hopf().unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn algebra(name: &str) -> Arc<Algebra> {
    spec(name).algebra().unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn comodule_algebra(name: &str) -> ComoduleAlgebra {
    spec(name).comodule_algebra().unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn module(name: &str) -> ModuleRep {
    spec(name).module().unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Group-algebra fixtures used for the injectivity check.
pub const GROUP_FIXTURES: &[&str] = &["c2_f2.group", "c3_f3.group", "s3_f3.group", "s3_f2.group"];

fn f2() -> FiniteField {
    FiniteField::prime(2).expect("F2")
}

fn f3() -> FiniteField {
    FiniteField::prime(3).expect("F3")
}

/// Upper triangular 2×2 matrices: `e₁₁`, `e₁₂`, `e₂₂`.
pub fn ut2() -> Arc<Algebra> {
    validate_algebra(&f2(), 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], None)
        .expect("UT2")
        .with_labels(vec!["e11".into(), "e12".into(), "e22".into()])
        .into_arc()
}

pub fn sweedler() -> HopfAlgebra {
    sweedler_taft(2, &f3(), 2).expect("Sweedler algebra")
}

pub fn taft3_f4() -> HopfAlgebra {
    let f4 = FiniteField::new(2, 2).expect("F4");
    let q = f4.elements().find(|&a| f4.multiplicative_order(a) == Some(3)).expect("cube root of unity");
    sweedler_taft(3, &f4, q).expect("Taft algebra")
}

/// `(F₂×F₂) ∗ C₂` with the generator swapping the factors.
pub fn swap_spec() -> CrossedProductSpec {
    let b = validate_algebra(&f2(), 2, &[(0, 0, 0, 1), (1, 1, 1, 1)], None)
        .expect("F2×F2")
        .with_labels(vec!["e1".into(), "e2".into()])
        .into_arc();
    let id = FieldMatrix::identity(&f2(), 2);
    let sw = FieldMatrix::from_rows(&f2(), 2, &[vec![0, 1], vec![1, 0]]);
    CrossedProductSpec::with_trivial_cocycle(b, Group::cyclic(2), vec![id, sw])
}

pub fn ut2_c2_spec() -> CrossedProductSpec {
    CrossedProductSpec::trivial(ut2(), Group::cyclic(2))
}

fn hopf_spec(h: &HopfAlgebra) -> SpecFile {
    SpecFile::Hopf(HopfSpec::from_hopf(h))
}

/// The fixture files as generated from the constructors above, with
/// descriptive headers.
pub fn generate() -> Vec<(&'static str, String)> {
    let c2 = Group::cyclic(2);
    let c2f2 = group_algebra(&c2, &f2()).expect("F2C2");
    let s3f3 = group_algebra(&Group::symmetric3(), &f3()).expect("F3S3");
    let ut2c2 = crossed_product(&ut2_c2_spec()).expect("UT2*C2");
    let mut rng = stream(0, "fixtures");
    let a_data = crate::algcore::AlgebraData::compute(ut2c2.algebra(), &mut rng).expect("UT2*C2 data");
    let c2f2 = Arc::new(c2f2);
    let trivial = ComoduleAlgebra::trivial(ut2(), c2f2.clone()).expect("trivial coaction");
    let s3_note = "# S3 as permutations of {0,1,2}: id, (012), (021), (01), (12), (02); (ab)(x) = a(b(x)).\n";
    let files: Vec<(&'static str, String, SpecFile)> = vec![
        ("f2c2.hopf", "# Group algebra of C2 over F2. Basis 1, g.\n".into(), hopf_spec(&c2f2)),
        ("f3s3.alg", format!("# Group algebra of S3 over F3.\n{s3_note}"), SpecFile::Algebra(AlgebraSpec::from_algebra(s3f3.algebra()))),
        ("f3s3.hopf", format!("# Group algebra of S3 over F3 as a Hopf algebra.\n{s3_note}"), hopf_spec(&s3f3)),
        (
            "sweedler.hopf",
            "# Sweedler algebra over F3: g^2 = 1, x^2 = 0, xg = -gx,\n# Dg = g(x)g, Dx = x(x)1 + g(x)x. Basis 1, x, g, gx.\n".into(),
            hopf_spec(&sweedler()),
        ),
        (
            "taft3_f4.hopf",
            "# Taft algebra of dimension 9 over F4 = F2[t]/(t^2+t+1), q = t.\n# Basis g^i x^j at index 3i + j.\n".into(),
            hopf_spec(&taft3_f4()),
        ),
        ("ut2.alg", "# Upper triangular 2x2 matrices over F2.\n".into(), SpecFile::Algebra(AlgebraSpec::from_algebra(&ut2()))),
        (
            "b2xb2_swap.cross",
            "# (F2 x F2) * C2, the generator swapping the two idempotents.\n".into(),
            SpecFile::CrossedProduct(CrossedSpec::from_spec(&swap_spec())),
        ),
        (
            "ut2_c2.cross",
            "# UT2 * C2 with trivial action and cocycle, i.e. UT2 (x) F2C2.\n".into(),
            SpecFile::CrossedProduct(CrossedSpec::from_spec(&ut2_c2_spec())),
        ),
        (
            "m2.alg",
            "# Algebra of the swap crossed product; isomorphic to M2(F2).\n# Basis e_i u_g at index 2i + g.\n".into(),
            SpecFile::Algebra(AlgebraSpec::from_algebra(crossed_product(&swap_spec()).expect("swap").algebra())),
        ),
        ("c2_f2.group", "# C2 over F2.\n".into(), SpecFile::Group(GroupSpec::from_group(&c2, &f2()))),
        ("c3_f3.group", "# C3 over F3.\n".into(), SpecFile::Group(GroupSpec::from_group(&Group::cyclic(3), &f3()))),
        ("s3_f3.group", format!("# S3 over F3.\n{s3_note}"), SpecFile::Group(GroupSpec::from_group(&Group::symmetric3(), &f3()))),
        ("s3_f2.group", format!("# S3 over F2.\n{s3_note}"), SpecFile::Group(GroupSpec::from_group(&Group::symmetric3(), &f2()))),
        (
            "ut2_trivial.coalg",
            "# UT2 with the trivial F2C2-coaction a -> a (x) 1; not Galois.\n".into(),
            SpecFile::ComoduleAlgebra(ComoduleSpec::from_comodule(&trivial)),
        ),
        (
            "ut2c2_s1.mod",
            "# First simple module of UT2 * C2; its restriction to UT2 is not projective.\n".into(),
            SpecFile::Module(ModuleSpec::from_module(&a_data.simples.simples[0])),
        ),
        ("f2c2_triv.mod", "# Trivial module of F2C2.\n".into(), SpecFile::Module(ModuleSpec::from_module(&c2f2.trivial_module()))),
        (
            "f2c2_reg.mod",
            "# Regular module of F2C2.\n".into(),
            SpecFile::Module(ModuleSpec::from_module(&ModuleRep::regular(c2f2.algebra()))),
        ),
    ];
    files.into_iter().map(|(n, header, s)| (n, format!("{header}{}", s.to_toml()))).collect()
}

fn set_comul(h: &mut HopfSpec, i: usize, terms: &[(usize, usize)]) {
    h.comul.retain(|e| e.0 != i);
    h.comul.extend(terms.iter().map(|&(a, b)| (i, a, b, ElemSpec::Int(1))));
}

fn set_antipode(h: &mut HopfSpec, i: usize, terms: &[(usize, i64)]) {
    h.antipode.retain(|e| e.0 != i);
    h.antipode.extend(terms.iter().map(|&(j, v)| (i, j, ElemSpec::Int(v))));
}

/// The mutation files, generated from the two base fixtures.
pub fn generate_mutations() -> Vec<(&'static str, String)> {
    let f2c2 = HopfSpec::from_hopf(&group_algebra(&Group::cyclic(2), &f2()).expect("F2C2"));
    let sw = HopfSpec::from_hopf(&sweedler());
    // F2C2 basis 1, g; Sweedler basis 1, x, g, gx
    let mut out: Vec<(&'static str, &'static str, HopfSpec)> = Vec::new();
    let mut h = f2c2.clone();
    set_antipode(&mut h, 1, &[(0, 1)]);
    out.push(("f2c2_antipode_one.hopf", "antipode(g) = 1", h));
    let mut h = f2c2.clone();
    h.counit[1] = ElemSpec::Int(0);
    out.push(("f2c2_counit_zero.hopf", "counit(g) = 0", h));
    let mut h = f2c2.clone();
    set_comul(&mut h, 1, &[(0, 1), (1, 1)]);
    out.push(("f2c2_comul_skew.hopf", "D(g) = 1(x)g + g(x)g", h));
    let mut h = f2c2.clone();
    set_comul(&mut h, 1, &[(1, 0), (0, 1)]);
    h.counit[1] = ElemSpec::Int(0);
    out.push(("f2c2_primitive.hopf", "D(g) = g(x)1 + 1(x)g, counit(g) = 0", h));
    let mut h = f2c2;
    set_antipode(&mut h, 1, &[]);
    out.push(("f2c2_antipode_zero.hopf", "antipode(g) = 0", h));

    let mut h = sw.clone();
    set_antipode(&mut h, 1, &[(1, 1)]);
    out.push(("sweedler_antipode_x.hopf", "antipode(x) = x", h));
    let mut h = sw.clone();
    h.counit[1] = ElemSpec::Int(1);
    out.push(("sweedler_counit_x.hopf", "counit(x) = 1", h));
    let mut h = sw.clone();
    set_comul(&mut h, 1, &[(1, 0), (0, 1)]);
    out.push(("sweedler_primitive.hopf", "D(x) = x(x)1 + 1(x)x", h));
    let mut h = sw.clone();
    set_comul(&mut h, 1, &[(1, 0), (2, 1), (2, 2)]);
    out.push(("sweedler_comul_extra.hopf", "D(x) = x(x)1 + g(x)x + g(x)g", h));
    let mut h = sw;
    set_antipode(&mut h, 1, &[]);
    out.push(("sweedler_antipode_zero.hopf", "antipode(x) = 0", h));

    out.into_iter().map(|(n, what, h)| (n, format!("# Mutation: {what}.\n{}", SpecFile::Hopf(h).to_toml()))).collect()
}
