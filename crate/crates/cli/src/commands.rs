use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopfk::algcore::{AlgebraData, ModuleRep};
use hopfk::chop::{chop_module, composition_factors, is_irreducible, Irreducibility};
use hopfk::format::{AlgebraSpec, ComoduleSpec, Kind, ModuleSpec, SpecFile};
use hopfk::galois::{coinvariants, galois_check, verify_ind_res, verify_ind_twist, GaloisExtension, NotGaloisReason};
use hopfk::hopf::ComoduleAlgebra;
use hopfk::kzero::{
    cartan_analysis, cartan_matrix, find_pq, g0_class, hopf_cartan, k0_class, minimal_m, resolve_in_c,
    verify_cartan_bound, CartanAnalysis,
};
use serde_json::{json, Value};

use crate::context::{
    big, bigs, built, diag, elems, field_matrix, group, input, int_matrix, list, write_spec, CliError, Ctx, ModuleSel,
    VSel,
};
use crate::report::Outcome;

type Res = Result<Outcome, CliError>;

fn analysis_json(a: &CartanAnalysis) -> Value {
    json!({
        "snf_diagonal": bigs(&a.invariant_factors),
        "determinant": big(&a.determinant),
        "kernel_rank": a.kernel_rank,
        "cokernel": bigs(&a.cokernel),
        "injective": a.injective,
    })
}

fn module_out(path: &Option<PathBuf>, m: &ModuleRep, out: &mut Outcome) -> Result<(), CliError> {
    if let Some(p) = path {
        write_spec(p, &SpecFile::Module(ModuleSpec::from_module(m)))?;
        out.line(format!("wrote {}", p.display()));
    }
    Ok(())
}

pub fn validate(ctx: &mut Ctx, files: &[PathBuf]) -> Res {
    let mut out = Outcome::default();
    let mut entries = Vec::new();
    for path in files {
        let spec = ctx.load(path)?;
        let kind = spec.kind().name();
        match built(path, spec.validate()) {
            Ok(()) => {
                out.line(format!("{}: {kind} ok", path.display()));
                entries.push(json!({ "kind": kind, "valid": true }));
            }
            Err(CliError::Failure(f)) => {
                out.line(format!("{}: {kind} invalid ({}): {}", path.display(), f.kind, f.message));
                entries.push(json!({ "kind": kind, "valid": false, "error": f.kind }));
                out.fail(f.kind, format!("{}: {}", path.display(), f.message));
            }
            Err(e) => return Err(e),
        }
    }
    out.put("files", entries);
    Ok(out)
}

pub fn chop(ctx: &mut Ctx, file: &Path, sel: &ModuleSel) -> Res {
    let (data, label, m) = ctx.target(file, sel)?;
    let mut out = Outcome::default();
    let factors = chop_module(&m, &mut ctx.rng)?;
    let dims: Vec<usize> = factors.iter().map(ModuleRep::dim).collect();
    let mult = composition_factors(&m, &data.simples, &mut ctx.rng)?;
    let irreducible = match is_irreducible(&m, &mut ctx.rng) {
        Ok(Irreducibility::Irreducible(_)) => json!(true),
        Ok(Irreducibility::Reducible(_)) => json!(false),
        Ok(Irreducibility::Undecided) => json!("undecided"),
        Err(_) => json!(false),
    };
    out.line(format!("module {label}, dim {}", m.dim()));
    out.line(format!("composition factor dims {}", list(&dims)));
    out.line(format!("multiplicities over the simples {}", list(&mult)));
    out.put("module", label);
    out.put("dim", m.dim());
    out.put("factor_dims", dims);
    out.put("multiplicities", mult);
    out.put("simple_dims", data.simples.simples.iter().map(ModuleRep::dim).collect::<Vec<_>>());
    out.put("irreducible", irreducible);
    Ok(out)
}

pub fn pims(ctx: &mut Ctx, file: &Path) -> Res {
    let spec = ctx.load(file)?;
    let a = built(file, spec.algebra())?;
    let data = ctx.data(&a)?;
    let f = a.field();
    let mut out = Outcome::default();
    let simple_dims: Vec<usize> = data.simples.simples.iter().map(ModuleRep::dim).collect();
    let pim_dims: Vec<usize> = data.pims.pims.iter().map(ModuleRep::dim).collect();
    out.line(format!("dim A = {}, dim rad A = {}", a.dim(), data.radical.dim()));
    out.line(format!("simple dims {}", list(&simple_dims)));
    out.line(format!("PIM dims {}", list(&pim_dims)));
    out.put("dim", a.dim());
    out.put("radical_dim", data.radical.dim());
    out.put("simple_dims", simple_dims);
    out.put("pim_dims", pim_dims);
    out.put("idempotents", data.pims.idempotents.iter().map(|e| elems(f, e)).collect::<Vec<_>>());
    Ok(out)
}

pub fn cartan(ctx: &mut Ctx, file: &Path) -> Res {
    let spec = ctx.load(file)?;
    let a = built(file, spec.algebra())?;
    let data = ctx.data(&a)?;
    let c = cartan_matrix(&data, &mut ctx.rng)?.c;
    let an = cartan_analysis(&c);
    let mut out = Outcome::default();
    out.line(format!("C = {c}"));
    out.line(format!("SNF {}", diag(&an.invariant_factors)));
    out.line(format!("det = {}, kernel rank {}, coker {}", an.determinant, an.kernel_rank, group(&an.cokernel)));
    out.put("cartan", int_matrix(&c));
    out.put("analysis", analysis_json(&an));
    Ok(out)
}

pub fn class(ctx: &mut Ctx, file: &Path, sel: &ModuleSel, k0: bool) -> Res {
    let (data, label, m) = ctx.target(file, sel)?;
    let class = if k0 { k0_class(&data, &m, &mut ctx.rng)? } else { g0_class(&data, &m, &mut ctx.rng)? };
    let mut out = Outcome::default();
    let (name, basis) = if k0 { ("K0", "PIMs") } else { ("G0", "simples") };
    out.line(format!("[{label}] in {name} over the {basis}: {}", list(&class.coeffs)));
    out.put("module", label);
    out.put("kind", name);
    out.put("coeffs", class.coeffs);
    Ok(out)
}

pub fn minimal(ctx: &mut Ctx, file: &Path) -> Res {
    let h = ctx.hopf(file)?;
    let (cd, trivial) = hopf_cartan(&h, &mut ctx.rng)?;
    let mut out = Outcome::default();
    out.put("cartan", int_matrix(&cd.c));
    out.put("trivial", trivial);
    out.line(format!("C = {}, trivial simple S{trivial}", cd.c));
    match minimal_m(&cd.c, trivial) {
        Some(mm) => {
            out.line(format!("m = {}, coefficients {}", mm.m, list(&mm.coeffs)));
            out.put("m", mm.m);
            out.put("coeffs", mm.coeffs);
        }
        None => {
            out.put("m", Value::Null);
            out.fail("NoSuchPQ", "no positive multiple of [1] lies in the image of the Cartan map");
        }
    }
    Ok(out)
}

pub fn pq(ctx: &mut Ctx, file: &Path) -> Res {
    let h = ctx.hopf(file)?;
    let (cd, trivial) = hopf_cartan(&h, &mut ctx.rng)?;
    let w = find_pq(&cd, trivial, &mut ctx.rng)?;
    let mut out = Outcome::default();
    out.line(format!("m = {}", w.m));
    out.line(format!("P = {} (dim {}), Q = {} (dim {})", list(&w.p_counts), w.p.dim(), list(&w.q_counts), w.q.dim()));
    out.line("[P] - [Q] = m[1] verified by composition factors");
    out.put("m", w.m);
    out.put("trivial", trivial);
    out.put("p_counts", w.p_counts.clone());
    out.put("q_counts", w.q_counts.clone());
    out.put("p_dim", w.p.dim());
    out.put("q_dim", w.q.dim());
    Ok(out)
}

pub fn hopf_check(ctx: &mut Ctx, file: &Path) -> Res {
    let spec = ctx.load(file)?;
    if !matches!(spec.kind(), Kind::Hopf | Kind::Group) {
        return Err(input(format!(
            "{}: expected a Hopf algebra or group, found a {} file",
            file.display(),
            spec.kind().name()
        )));
    }
    let mut out = Outcome::default();
    match built(file, spec.hopf()) {
        Ok(h) => {
            let involutive = h.antipode_matrix().mul(&h.antipode_matrix())
                == hopfk::exactla::FieldMatrix::identity(h.field(), h.dim());
            h.antipode_inverse()?;
            out.line(format!("Hopf algebra of dim {} over {}", h.dim(), h.field()));
            out.line("coassociativity, counit, bialgebra and antipode axioms hold");
            out.put("dim", h.dim());
            out.put("field", h.field().to_string());
            out.put("axioms", "ok");
            out.put("antipode_involutive", involutive);
        }
        Err(CliError::Failure(f)) => {
            out.line(format!("axiom {} fails: {}", f.kind, f.message));
            out.put("axioms", "failed");
            out.put("axiom", f.kind.clone());
            out.fail(f.kind, f.message);
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

pub fn galois(ctx: &mut Ctx, file: &Path) -> Res {
    let ca = ctx.comodule(file)?;
    let ext = GaloisExtension::analyze(&ca, &mut ctx.rng)?;
    let mut out = Outcome::default();
    let (a, b, h) = (ext.a().dim(), ext.b.dim(), ca.hopf().dim());
    out.line(format!("dim A = {a}, dim B = {b}, dim H = {h}, dim A⊗_B A = {}", ext.tensor.dim()));
    out.put("dims", json!({ "a": a, "b": b, "h": h, "relative_tensor": ext.tensor.dim() }));
    out.put("galois", ext.galois);
    match &ext.defect {
        None => out.line("β: A⊗_B A → A⊗H is bijective"),
        Some(NotGaloisReason::DimensionDefect { tensor_dim, target_dim }) => {
            out.put("defect", json!({ "tensor_dim": tensor_dim, "target_dim": target_dim }));
            out.fail("NotGalois", format!("dim A⊗_B A = {tensor_dim} but dim A⊗H = {target_dim}"));
        }
        Some(NotGaloisReason::Kernel(v)) => {
            out.put("defect", json!({ "kernel_vector": elems(ext.a().field(), v) }));
            out.fail("NotGalois", "β has a nonzero kernel");
        }
    }
    Ok(out)
}

pub fn coinv(ctx: &mut Ctx, file: &Path) -> Res {
    let ca = ctx.comodule(file)?;
    let s = coinvariants(&ca)?;
    let mut out = Outcome::default();
    out.line(format!("dim B = {} inside dim A = {}", s.dim(), ca.algebra().dim()));
    for r in 0..s.dim() {
        out.line(format!("  {}", list(s.basis().row(r))));
    }
    out.put("dim", s.dim());
    out.put("basis", field_matrix(s.basis()));
    Ok(out)
}

fn extension(ctx: &mut Ctx, file: &Path) -> Result<GaloisExtension, CliError> {
    let ca = ctx.comodule(file)?;
    Ok(galois_check(&ca, &mut ctx.rng)?)
}

pub fn twist(ctx: &mut Ctx, file: &Path, sel: &ModuleSel, v: &VSel, dest: &Option<PathBuf>) -> Res {
    let ca = ctx.comodule(file)?;
    let a_data = ctx.data(ca.algebra())?;
    let h_data = ctx.data(ca.hopf().algebra())?;
    let (m_label, m) = ctx.select(sel, &a_data)?;
    let (v_label, vm) = v.select(ctx, &h_data, ca.hopf())?;
    let t = ca.twist(&m, &vm)?;
    let g = g0_class(&a_data, &t, &mut ctx.rng)?;
    let mut out = Outcome::default();
    out.line(format!("{m_label} ⊗ {v_label}: dim {}", t.dim()));
    out.line(format!("G0 class {}", list(&g.coeffs)));
    out.put("module", m_label);
    out.put("v", v_label);
    out.put("dim", t.dim());
    out.put("g0", g.coeffs);
    module_out(dest, &t, &mut out)?;
    Ok(out)
}

pub fn induce(ctx: &mut Ctx, file: &Path, sel: &ModuleSel, dest: &Option<PathBuf>) -> Res {
    let ext = extension(ctx, file)?;
    let (label, n) = ctx.select(sel, &ext.b_data)?;
    let ind = ext.induce(&n)?;
    let g = g0_class(&ext.a_data, &ind, &mut ctx.rng)?;
    let mut out = Outcome::default();
    out.line(format!("Ind {label}: dim {} -> {}", n.dim(), ind.dim()));
    out.line(format!("G0 class over A {}", list(&g.coeffs)));
    out.put("module", label);
    out.put("dim", n.dim());
    out.put("induced_dim", ind.dim());
    out.put("g0", g.coeffs);
    module_out(dest, &ind, &mut out)?;
    Ok(out)
}

pub fn restrict(ctx: &mut Ctx, file: &Path, sel: &ModuleSel, dest: &Option<PathBuf>) -> Res {
    let ext = extension(ctx, file)?;
    let (label, m) = ctx.select(sel, &ext.a_data)?;
    let res = ext.restrict(&m)?;
    let g = g0_class(&ext.b_data, &res, &mut ctx.rng)?;
    let projective = ext.b_data.is_projective(&res)?;
    let mut out = Outcome::default();
    out.line(format!("Res {label}: dim {}, projective over B: {projective}", res.dim()));
    out.line(format!("G0 class over B {}", list(&g.coeffs)));
    out.put("module", label);
    out.put("dim", res.dim());
    out.put("g0", g.coeffs);
    out.put("projective", projective);
    module_out(dest, &res, &mut out)?;
    Ok(out)
}

/// All simples, all PIMs and the regular module.
fn standard_modules(data: &AlgebraData) -> Vec<(String, ModuleRep)> {
    let mut v: Vec<(String, ModuleRep)> =
        data.simples.simples.iter().enumerate().map(|(i, s)| (format!("S{i}"), s.clone())).collect();
    v.extend(data.pims.pims.iter().enumerate().map(|(i, p)| (format!("P{i}"), p.clone())));
    v.push(("regular".into(), ModuleRep::regular(&data.algebra)));
    v
}

pub fn prop_a(ctx: &mut Ctx, file: &Path, sel: &ModuleSel) -> Res {
    let ext = extension(ctx, file)?;
    let modules = if sel.is_set() { vec![ctx.select(sel, &ext.a_data)?] } else { standard_modules(&ext.a_data) };
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for (label, m) in &modules {
        match verify_ind_res(&ext, m) {
            Ok(cert) => {
                out.line(format!("Ind Res {label} ≅ {label}⊗H (dim {})", cert.target_dim));
                rows.push(json!({ "module": label, "dim": cert.target_dim, "verified": true }));
            }
            Err(e) => {
                out.line(format!("Ind Res {label}: {e}"));
                rows.push(json!({ "module": label, "verified": false }));
                let CliError::Failure(f) = e.into() else { unreachable!() };
                out.fail(f.kind, format!("{label}: {}", f.message));
            }
        }
    }
    out.put("checks", rows);
    Ok(out)
}

pub fn prop_b(ctx: &mut Ctx, file: &Path, sel: &ModuleSel, v: &VSel) -> Res {
    let ext = extension(ctx, file)?;
    let h_data = ctx.data(ext.ca.hopf().algebra())?;
    let ns = if sel.is_set() {
        vec![ctx.select(sel, &ext.b_data)?]
    } else {
        let mut ns = vec![("B".to_string(), ModuleRep::regular(&ext.b))];
        ns.extend(ext.b_data.simples.simples.iter().enumerate().map(|(i, s)| (format!("S{i}"), s.clone())));
        ns
    };
    let vs = if v.is_set() {
        vec![v.select(ctx, &h_data, ext.ca.hopf())?]
    } else {
        vec![v.select(ctx, &h_data, ext.ca.hopf())?, ("regular".to_string(), ModuleRep::regular(&h_data.algebra))]
    };
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for (nl, n) in &ns {
        for (vl, vm) in &vs {
            match verify_ind_twist(&ext, n, vm) {
                Ok(cert) => {
                    out.line(format!("Ind({nl}⊗{vl}) ≅ Ind({nl})⊗{vl} (dim {}), φψ = id = ψφ", cert.dim));
                    rows.push(json!({ "n": nl, "v": vl, "dim": cert.dim, "verified": true }));
                }
                Err(e) => {
                    out.line(format!("Ind({nl}⊗{vl}): {e}"));
                    rows.push(json!({ "n": nl, "v": vl, "verified": false }));
                    let CliError::Failure(f) = e.into() else { unreachable!() };
                    out.fail(f.kind, format!("{nl}⊗{vl}: {}", f.message));
                }
            }
        }
    }
    out.put("checks", rows);
    Ok(out)
}

pub fn crossed(ctx: &mut Ctx, file: &Path, dest: &Option<PathBuf>, as_comodule: bool) -> Res {
    let spec = ctx.load(file)?;
    if spec.kind() != Kind::CrossedProduct {
        return Err(input(format!(
            "{}: expected a crossed-product file, found a {} file",
            file.display(),
            spec.kind().name()
        )));
    }
    let ca = built(file, spec.comodule_algebra())?;
    let a = ca.algebra();
    let ext = GaloisExtension::analyze(&ca, &mut ctx.rng)?;
    let mut out = Outcome::default();
    out.line(format!(
        "B ∗ G of dim {} over {}, coinvariants of dim {}, Galois: {}",
        a.dim(),
        a.field(),
        ext.b.dim(),
        ext.galois
    ));
    out.put("dim", a.dim());
    out.put("coinvariant_dim", ext.b.dim());
    out.put("galois", ext.galois);
    out.put(
        "structure",
        a.sparse_constants()
            .iter()
            .map(|&(i, j, k, v)| json!([i, j, k, elems(a.field(), &[v])[0]]))
            .collect::<Vec<_>>(),
    );
    if let Some(p) = dest {
        let written = if as_comodule {
            SpecFile::ComoduleAlgebra(ComoduleSpec::from_comodule(&ca))
        } else {
            SpecFile::Algebra(AlgebraSpec::from_algebra(a))
        };
        write_spec(p, &written)?;
        out.line(format!("wrote {}", p.display()));
    }
    if !ext.galois {
        out.fail("NotGalois", "the crossed product is not Galois over its coinvariants");
    }
    Ok(out)
}

pub fn resolve(ctx: &mut Ctx, file: &Path, sel: &ModuleSel) -> Res {
    let ext = extension(ctx, file)?;
    let modules = if sel.is_set() {
        vec![ctx.select(sel, &ext.a_data)?]
    } else {
        ext.a_data.simples.simples.iter().enumerate().map(|(i, s)| (format!("S{i}"), s.clone())).collect()
    };
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for (label, m) in &modules {
        let r = resolve_in_c(&ext, m, ctx.bound)?;
        let dims: Vec<usize> = r.projectives.iter().map(ModuleRep::dim).collect();
        let exact = r.is_exact();
        let in_c = ext.in_category_c(&r.syzygy)?;
        out.line(format!(
            "{label}: length {}, projective dims {}, last term dim {} in C: {in_c}, exact: {exact}",
            r.length(),
            list(&dims),
            r.syzygy.dim()
        ));
        rows.push(json!({
            "module": label,
            "length": r.length(),
            "projective_dims": dims,
            "last_dim": r.syzygy.dim(),
            "last_in_c": in_c,
            "exact": exact,
        }));
        if !exact || !in_c {
            out.fail("VerificationFailed", format!("{label}: resolution is not certified"));
        }
    }
    out.put("resolutions", rows);
    Ok(out)
}

pub fn theorem(ctx: &mut Ctx, file: &Path, hopf: &Option<PathBuf>, self_ext: bool) -> Res {
    let spec = ctx.load(file)?;
    let ca = match spec.kind() {
        Kind::Hopf | Kind::Group if hopf.is_none() => ComoduleAlgebra::regular(&built(file, spec.hopf())?),
        Kind::ComoduleAlgebra | Kind::CrossedProduct if !self_ext => built(file, spec.comodule_algebra())?,
        k => return Err(input(format!("{}: cannot verify a {} file this way", file.display(), k.name()))),
    };
    if let Some(hp) = hopf {
        let h = ctx.hopf(hp)?;
        if !Arc::ptr_eq(&h, ca.hopf()) && *h != **ca.hopf() {
            return Err(input(format!(
                "{}: does not match the Hopf algebra coacting on {}",
                hp.display(),
                file.display()
            )));
        }
    }
    let r = verify_cartan_bound(&ca, ctx.bound, &mut ctx.rng)?;
    let m = r.m();
    let (a, b, h) = r.dims;
    let mut out = Outcome::default();
    out.line(format!("dim A = {a}, dim B = {b}, dim H = {h}"));
    out.line(format!("H: C = {}, SNF {}", r.h_cartan, diag(&r.h_analysis.invariant_factors)));
    out.line(format!("m = {m}, P = {}, Q = {}", list(&r.witness.p_counts), list(&r.witness.q_counts)));
    out.line(format!("gldim B = {}", r.gldim_b));
    out.line(format!(
        "A: C = {}, SNF {}, kernel rank {}, coker {}",
        r.a_cartan,
        diag(&r.a_analysis.invariant_factors),
        r.a_analysis.kernel_rank,
        group(&r.a_analysis.cokernel)
    ));
    out.line(format!("[R⊗P] - [R⊗Q] = {m}[R] for all {} PIMs R of A", r.mechanism.len()));
    out.line(format!("PASS, m = {m}, coker {}", group(&r.a_analysis.cokernel)));
    out.put("dims", json!({ "a": a, "b": b, "h": h }));
    out.put("h_cartan", int_matrix(&r.h_cartan));
    out.put("h_analysis", analysis_json(&r.h_analysis));
    out.put("trivial", r.trivial);
    out.put("m", m);
    out.put("p_counts", r.witness.p_counts.clone());
    out.put("q_counts", r.witness.q_counts.clone());
    out.put("gldim_b", r.gldim_b);
    out.put("a_cartan", int_matrix(&r.a_cartan));
    out.put("a_analysis", analysis_json(&r.a_analysis));
    out.put(
        "mechanism",
        r.mechanism
            .iter()
            .map(|row| json!({ "pim": row.pim, "twisted_p": row.twisted_p, "twisted_q": row.twisted_q, "expected": row.expected }))
            .collect::<Vec<_>>(),
    );
    Ok(out)
}

pub fn selftest(ctx: &mut Ctx) -> Res {
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for r in hopfk::acceptance::run_all(ctx.seed) {
        out.line(r.to_string());
        rows.push(json!({ "id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }));
        if !r.passed {
            out.fail("CriterionFailed", format!("criterion {} failed: {}", r.id, r.detail));
        }
    }
    out.put("criteria", rows);
    Ok(out)
}
