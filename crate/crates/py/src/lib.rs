//! Python bindings for the hopfk kernel.

use std::sync::Arc;

use hopfk::algcore::{Algebra, AlgebraData, ModuleRep};
use hopfk::exactla::{lattice_min_multiple, snf, IntMatrix};
use hopfk::format::{FormatError, Kind, SpecFile};
use hopfk::galois::GaloisExtension;
use hopfk::hopf::{ComoduleAlgebra, HopfAlgebra};
use hopfk::kzero::{
    cartan_analysis, cartan_matrix, find_pq, g0_class, hopf_cartan, k0_class, minimal_m, verify_cartan_bound,
    CartanAnalysis, KzeroError,
};
use hopfk::rng::{stream, Rng};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(hopfk_py, HopfkError, PyException);
create_exception!(hopfk_py, InputError, HopfkError, "Malformed or unreadable input.");
create_exception!(hopfk_py, VerdictError, HopfkError, "A mathematical check failed.");

fn verdict(e: impl std::fmt::Display) -> PyErr {
    VerdictError::new_err(e.to_string())
}

fn kzero(e: KzeroError) -> PyErr {
    VerdictError::new_err(format!("{}: {e}", e.kind()))
}

fn format_err(e: FormatError) -> PyErr {
    match e {
        FormatError::Hopf(h) => VerdictError::new_err(format!("{}: {h}", h.axiom())),
        FormatError::Algebra(_) | FormatError::Module(_) | FormatError::Galois(_) => verdict(e),
        _ => InputError::new_err(e.to_string()),
    }
}

fn rng(seed: u64) -> Rng {
    stream(seed, "py")
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("fits in i64")).collect()
}

fn int_matrix(rows: &[Vec<i64>]) -> PyResult<IntMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(InputError::new_err("rows have different lengths"));
    }
    Ok(if rows.is_empty() { IntMatrix::with_cols(0) } else { IntMatrix::from_rows(rows) })
}

fn load(path: &str) -> PyResult<SpecFile> {
    SpecFile::load(path).map_err(|e| match e {
        FormatError::Parse(p) => InputError::new_err(format!("{path}:{p}")),
        e => format_err(e),
    })
}

/// Smith-form invariants of a Cartan matrix.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct Cartan {
    matrix: Vec<Vec<i64>>,
    snf_diagonal: Vec<i64>,
    determinant: i64,
    kernel_rank: usize,
    /// Cyclic factors of the cokernel; 0 stands for ℤ.
    cokernel: Vec<i64>,
    injective: bool,
}

impl Cartan {
    fn new(c: &IntMatrix, a: &CartanAnalysis) -> Self {
        Cartan {
            matrix: c.to_i64(),
            snf_diagonal: to_i64(&a.invariant_factors),
            determinant: a.determinant.to_i64().expect("fits in i64"),
            kernel_rank: a.kernel_rank,
            cokernel: to_i64(&a.cokernel),
            injective: a.injective,
        }
    }
}

#[pymethods]
impl Cartan {
    fn __repr__(&self) -> String {
        format!("Cartan(matrix={:?}, snf_diagonal={:?})", self.matrix, self.snf_diagonal)
    }
}

fn cartan_of(data: &AlgebraData, r: &mut Rng) -> PyResult<Cartan> {
    let c = cartan_matrix(data, r).map_err(kzero)?.c;
    Ok(Cartan::new(&c, &cartan_analysis(&c)))
}

/// A finite-dimensional algebra over a finite field.
#[pyclass(name = "Algebra", frozen)]
pub struct PyAlgebra {
    inner: Arc<Algebra>,
}

#[pymethods]
impl PyAlgebra {
    /// Underlying algebra of any spec file except a bare field.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: load(path)?.algebra().map_err(format_err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    #[pyo3(signature = (seed = 0))]
    fn simple_dims(&self, seed: u64) -> PyResult<Vec<usize>> {
        let data = AlgebraData::compute(&self.inner, &mut rng(seed)).map_err(verdict)?;
        Ok(data.simples.simples.iter().map(ModuleRep::dim).collect())
    }

    #[pyo3(signature = (seed = 0))]
    fn pim_dims(&self, seed: u64) -> PyResult<Vec<usize>> {
        let data = AlgebraData::compute(&self.inner, &mut rng(seed)).map_err(verdict)?;
        Ok(data.pims.pims.iter().map(ModuleRep::dim).collect())
    }

    #[pyo3(signature = (seed = 0))]
    fn cartan(&self, seed: u64) -> PyResult<Cartan> {
        let mut r = rng(seed);
        let data = AlgebraData::compute(&self.inner, &mut r).map_err(verdict)?;
        cartan_of(&data, &mut r)
    }

    fn regular(&self) -> PyModuleRep {
        PyModuleRep { inner: ModuleRep::regular(&self.inner) }
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, field={})", self.inner.dim(), self.inner.field())
    }
}

/// A right module given by one matrix per basis element.
#[pyclass(name = "Module", frozen)]
pub struct PyModuleRep {
    inner: ModuleRep,
}

#[pymethods]
impl PyModuleRep {
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyModuleRep { inner: load(path)?.module().map_err(format_err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra().clone() }
    }

    /// Composition multiplicities over the simples of the algebra.
    #[pyo3(signature = (seed = 0))]
    fn g0_class(&self, seed: u64) -> PyResult<Vec<i64>> {
        let mut r = rng(seed);
        let data = AlgebraData::compute(self.inner.algebra(), &mut r).map_err(verdict)?;
        let m = self.inner.rebase(&data.algebra).map_err(verdict)?;
        Ok(g0_class(&data, &m, &mut r).map_err(kzero)?.coeffs)
    }

    /// Multiplicities of the PIMs; raises for non-projective modules.
    #[pyo3(signature = (seed = 0))]
    fn k0_class(&self, seed: u64) -> PyResult<Vec<i64>> {
        let mut r = rng(seed);
        let data = AlgebraData::compute(self.inner.algebra(), &mut r).map_err(verdict)?;
        let m = self.inner.rebase(&data.algebra).map_err(verdict)?;
        Ok(k0_class(&data, &m, &mut r).map_err(kzero)?.coeffs)
    }

    fn __repr__(&self) -> String {
        format!("Module(dim={})", self.inner.dim())
    }
}

/// A Hopf algebra, validated on construction.
#[pyclass(name = "HopfAlgebra", frozen)]
pub struct PyHopf {
    inner: Arc<HopfAlgebra>,
}

#[pymethods]
impl PyHopf {
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyHopf { inner: load(path)?.hopf().map_err(format_err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra().clone() }
    }

    #[pyo3(signature = (seed = 0))]
    fn cartan(&self, seed: u64) -> PyResult<Cartan> {
        let (cd, _) = hopf_cartan(&self.inner, &mut rng(seed)).map_err(kzero)?;
        Ok(Cartan::new(&cd.c, &cartan_analysis(&cd.c)))
    }

    /// Least m with m[1] in the image of the Cartan map, or None.
    #[pyo3(signature = (seed = 0))]
    fn minimal_m(&self, seed: u64) -> PyResult<Option<i64>> {
        let (cd, trivial) = hopf_cartan(&self.inner, &mut rng(seed)).map_err(kzero)?;
        Ok(minimal_m(&cd.c, trivial).map(|m| m.m))
    }

    /// `(m, P counts, Q counts)` with `[P] - [Q] = m[1]`.
    #[pyo3(signature = (seed = 0))]
    fn find_pq(&self, seed: u64) -> PyResult<(i64, Vec<usize>, Vec<usize>)> {
        let mut r = rng(seed);
        let (cd, trivial) = hopf_cartan(&self.inner, &mut r).map_err(kzero)?;
        let w = find_pq(&cd, trivial, &mut r).map_err(kzero)?;
        Ok((w.m, w.p_counts, w.q_counts))
    }

    /// H as a comodule algebra over itself.
    fn regular_extension(&self) -> PyExtension {
        PyExtension { inner: ComoduleAlgebra::regular(&self.inner) }
    }

    fn __repr__(&self) -> String {
        format!("HopfAlgebra(dim={}, field={})", self.inner.dim(), self.inner.field())
    }
}

/// Outcome of the Cartan bound verification.
#[pyclass(get_all, frozen)]
pub struct BoundReport {
    m: i64,
    p_counts: Vec<usize>,
    q_counts: Vec<usize>,
    gldim_b: usize,
    hopf_cartan: Cartan,
    cartan: Cartan,
}

/// A right H-comodule algebra A with coinvariants B.
#[pyclass(name = "Extension", frozen)]
pub struct PyExtension {
    inner: ComoduleAlgebra,
}

#[pymethods]
impl PyExtension {
    /// Comodule-algebra or crossed-product file; a Hopf algebra or group
    /// file gives H over itself.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let spec = load(path)?;
        let inner = match spec.kind() {
            Kind::Hopf | Kind::Group => ComoduleAlgebra::regular(&spec.hopf().map_err(format_err)?),
            _ => spec.comodule_algebra().map_err(format_err)?,
        };
        Ok(PyExtension { inner })
    }

    fn algebra(&self) -> PyAlgebra {
        PyAlgebra { inner: self.inner.algebra().clone() }
    }

    fn hopf(&self) -> PyHopf {
        PyHopf { inner: self.inner.hopf().clone() }
    }

    /// `(dim A, dim B, dim H, is_galois)`.
    #[pyo3(signature = (seed = 0))]
    fn galois(&self, seed: u64) -> PyResult<(usize, usize, usize, bool)> {
        let ext = GaloisExtension::analyze(&self.inner, &mut rng(seed)).map_err(verdict)?;
        Ok((ext.a().dim(), ext.b.dim(), self.inner.hopf().dim(), ext.galois))
    }

    /// Checks kernel 0 and cokernel killed by m for the Cartan map of A.
    #[pyo3(signature = (seed = 0, bound = None))]
    fn verify_cartan_bound(&self, seed: u64, bound: Option<usize>) -> PyResult<BoundReport> {
        let r = verify_cartan_bound(&self.inner, bound, &mut rng(seed)).map_err(kzero)?;
        Ok(BoundReport {
            m: r.m(),
            p_counts: r.witness.p_counts.clone(),
            q_counts: r.witness.q_counts.clone(),
            gldim_b: r.gldim_b,
            hopf_cartan: Cartan::new(&r.h_cartan, &r.h_analysis),
            cartan: Cartan::new(&r.a_cartan, &r.a_analysis),
        })
    }
}

/// Invariant factors of an integer matrix.
#[pyfunction]
fn smith_invariants(rows: Vec<Vec<i64>>) -> PyResult<Vec<i64>> {
    Ok(to_i64(&snf(&int_matrix(&rows)?).invariant_factors()))
}

/// Least m > 0 with m·v in the row lattice, or None.
#[pyfunction]
fn min_multiple(rows: Vec<Vec<i64>>, v: Vec<i64>) -> PyResult<Option<i64>> {
    let m = int_matrix(&rows)?;
    if m.cols() != v.len() && !rows.is_empty() {
        return Err(InputError::new_err("vector length does not match the matrix"));
    }
    let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
    Ok(lattice_min_multiple(&m, &v).map(|l| l.m.to_i64().expect("fits in i64")))
}

/// Kind of a spec file given as text.
#[pyfunction]
fn spec_kind(text: &str) -> PyResult<&'static str> {
    SpecFile::parse(text).map(|s| s.kind().name()).map_err(|e| InputError::new_err(e.to_string()))
}

#[pymodule]
fn hopfk_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("HopfkError", py.get_type::<HopfkError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("VerdictError", py.get_type::<VerdictError>())?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyModuleRep>()?;
    m.add_class::<PyHopf>()?;
    m.add_class::<PyExtension>()?;
    m.add_class::<Cartan>()?;
    m.add_class::<BoundReport>()?;
    m.add_function(wrap_pyfunction!(smith_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(min_multiple, m)?)?;
    m.add_function(wrap_pyfunction!(spec_kind, m)?)?;
    Ok(())
}
