use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use super::schema::{AlgebraSpec, ComoduleSpec, CrossedSpec, ElemSpec, FieldSpec, GroupSpec, HopfSpec, ModuleSpec};
use super::{ParseError, SpecFile};
use crate::algcore::{validate_algebra, Algebra, AlgebraError, ModuleError, ModuleRep};
use crate::exactla::{Elem, FieldError, FieldMatrix, FiniteField};
use crate::galois::{crossed_product, CrossedProductSpec, GaloisError};
use crate::hopf::{group_algebra, validate_hopf, ComoduleAlgebra, Group, HopfAlgebra, HopfError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("expected {expected}, found a {found} file")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

fn elem(f: &FiniteField, e: &ElemSpec) -> Result<Elem, FormatError> {
    match e {
        ElemSpec::Int(n) if *n >= 0 && *n < f.characteristic() as i64 => Ok(f.from_int(*n)),
        ElemSpec::Int(n) => Err(FieldError::Unreduced { value: *n, p: f.characteristic() }.into()),
        ElemSpec::Poly(c) => Ok(f.from_coeffs(c)?),
    }
}

fn elems(f: &FiniteField, v: &[ElemSpec]) -> Result<Vec<Elem>, FormatError> {
    v.iter().map(|e| elem(f, e)).collect()
}

fn elem_spec(f: &FiniteField, a: Elem) -> ElemSpec {
    if f.degree() == 1 {
        ElemSpec::Int(a as i64)
    } else {
        ElemSpec::Poly(f.coeffs(a).into_iter().map(i64::from).collect())
    }
}

fn elem_specs(f: &FiniteField, v: &[Elem]) -> Vec<ElemSpec> {
    v.iter().map(|&a| elem_spec(f, a)).collect()
}

fn matrix(f: &FiniteField, dim: usize, rows: &[Vec<ElemSpec>], what: &str) -> Result<FieldMatrix, FormatError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(FormatError::Shape(format!("{what} must be a {dim}×{dim} matrix")));
    }
    let rows = rows.iter().map(|r| elems(f, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(FieldMatrix::from_rows(f, dim, &rows))
}

fn matrix_spec(m: &FieldMatrix) -> Vec<Vec<ElemSpec>> {
    m.row_vecs().iter().map(|r| elem_specs(m.field(), r)).collect()
}

impl FieldSpec {
    pub fn build(&self) -> Result<FiniteField, FormatError> {
        Ok(match &self.modulus {
            Some(m) => {
                if m.len() != self.e + 1 {
                    return Err(FieldError::BadModulus { expected: self.e, len: m.len() }.into());
                }
                FiniteField::with_modulus(self.p, m.clone())?
            }
            None => FiniteField::new(self.p, self.e)?,
        })
    }

    pub fn from_field(f: &FiniteField) -> Self {
        let e = f.degree();
        FieldSpec { p: f.characteristic(), e, modulus: (e > 1).then(|| f.modulus().to_vec()) }
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Arc<Algebra>, FormatError> {
        let f = self.field.build()?;
        let entries = self
            .structure
            .iter()
            .map(|(i, j, k, v)| Ok((*i, *j, *k, elem(&f, v)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        let unit = self.unit.as_ref().map(|u| elems(&f, u)).transpose()?;
        let mut a = validate_algebra(&f, self.dim, &entries, unit)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.dim {
                return Err(FormatError::Shape(format!("expected {} labels", self.dim)));
            }
            a = a.with_labels(labels.clone());
        }
        Ok(a.into_arc())
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let f = a.field();
        let default: Vec<String> = (0..a.dim()).map(|i| format!("a{i}")).collect();
        AlgebraSpec {
            dim: a.dim(),
            structure: a.sparse_constants().into_iter().map(|(i, j, k, v)| (i, j, k, elem_spec(f, v))).collect(),
            unit: None,
            labels: (a.labels() != default.as_slice()).then(|| a.labels().to_vec()),
            field: FieldSpec::from_field(f),
        }
    }
}

impl ModuleSpec {
    pub fn build(&self) -> Result<ModuleRep, FormatError> {
        let a = self.algebra.build()?;
        let f = a.field().clone();
        if self.action.len() != a.dim() {
            return Err(ModuleError::WrongActionCount { expected: a.dim(), got: self.action.len() }.into());
        }
        if self.dim == 0 {
            return Ok(ModuleRep::zero(&a));
        }
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&f, self.dim, m, &format!("action of basis element {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ModuleRep::new(a, action)?)
    }

    pub fn from_module(m: &ModuleRep) -> Self {
        ModuleSpec {
            dim: m.dim(),
            action: m.action().iter().map(matrix_spec).collect(),
            algebra: AlgebraSpec::from_algebra(m.algebra()),
        }
    }
}

impl HopfSpec {
    pub fn build(&self) -> Result<Arc<HopfAlgebra>, FormatError> {
        let a = self.algebra.build()?;
        let f = a.field().clone();
        let comul = self
            .comul
            .iter()
            .map(|(i, x, y, v)| Ok((*i, *x, *y, elem(&f, v)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        let antipode = self
            .antipode
            .iter()
            .map(|(i, j, v)| Ok((*i, *j, elem(&f, v)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        if self.counit.len() != a.dim() {
            return Err(FormatError::Shape(format!("counit needs {} values", a.dim())));
        }
        let counit = elems(&f, &self.counit)?;
        Ok(Arc::new(validate_hopf(a, &comul, counit, &antipode)?))
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let f = h.field();
        HopfSpec {
            comul: h.sparse_comul().into_iter().map(|(i, a, b, v)| (i, a, b, elem_spec(f, v))).collect(),
            counit: elem_specs(f, h.counit()),
            antipode: h.sparse_antipode().into_iter().map(|(i, j, v)| (i, j, elem_spec(f, v))).collect(),
            algebra: AlgebraSpec::from_algebra(h.algebra()),
        }
    }
}

impl GroupSpec {
    pub fn group(&self) -> Result<Group, FormatError> {
        Ok(Group::new(self.table.clone())?)
    }

    /// The group algebra over the declared field.
    pub fn build(&self) -> Result<Arc<HopfAlgebra>, FormatError> {
        Ok(Arc::new(group_algebra(&self.group()?, &self.field.build()?)?))
    }

    pub fn from_group(g: &Group, f: &FiniteField) -> Self {
        GroupSpec { table: g.table().to_vec(), field: FieldSpec::from_field(f) }
    }
}

impl ComoduleSpec {
    pub fn build(&self) -> Result<ComoduleAlgebra, FormatError> {
        let a = self.algebra.build()?;
        let h = self.hopf.build()?;
        let f = a.field().clone();
        let entries = self
            .coaction
            .iter()
            .map(|(i, j, k, v)| Ok((*i, *j, *k, elem(&f, v)?)))
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(ComoduleAlgebra::from_sparse(a, h, &entries)?)
    }

    pub fn from_comodule(ca: &ComoduleAlgebra) -> Self {
        let f = ca.algebra().field();
        ComoduleSpec {
            coaction: ca.sparse_coaction().into_iter().map(|(i, j, k, v)| (i, j, k, elem_spec(f, v))).collect(),
            algebra: AlgebraSpec::from_algebra(ca.algebra()),
            hopf: HopfSpec::from_hopf(ca.hopf()),
        }
    }
}

impl CrossedSpec {
    pub fn spec(&self) -> Result<CrossedProductSpec, FormatError> {
        let base = self.base.build()?;
        let group = Group::new(self.group.clone())?;
        let f = base.field().clone();
        let n = base.dim();
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(g, m)| matrix(&f, n, m, &format!("action of group element {g}")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut spec = CrossedProductSpec::with_trivial_cocycle(base, group, action);
        let order = spec.group.order();
        for (g, h, v) in &self.cocycle {
            if *g >= order || *h >= order || v.len() != n {
                return Err(FormatError::Shape(format!("cocycle entry ({g},{h}) is out of range")));
            }
            spec.cocycle[*g][*h] = elems(&f, v)?;
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<ComoduleAlgebra, FormatError> {
        Ok(crossed_product(&self.spec()?)?)
    }

    pub fn from_spec(spec: &CrossedProductSpec) -> Self {
        let f = spec.base.field();
        let one = spec.base.unit();
        let mut cocycle = Vec::new();
        for (g, row) in spec.cocycle.iter().enumerate() {
            for (h, v) in row.iter().enumerate() {
                if v.as_slice() != one {
                    cocycle.push((g, h, elem_specs(f, v)));
                }
            }
        }
        CrossedSpec {
            group: spec.group.table().to_vec(),
            action: spec.action.iter().map(matrix_spec).collect(),
            cocycle,
            base: AlgebraSpec::from_algebra(&spec.base),
        }
    }
}

impl SpecFile {
    pub fn load(path: impl AsRef<Path>) -> Result<SpecFile, FormatError> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path)
            .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
        Ok(SpecFile::parse(&src)?)
    }

    fn wrong(&self, expected: &'static str) -> FormatError {
        FormatError::WrongKind { expected, found: self.kind().name() }
    }

    pub fn field(&self) -> Result<FiniteField, FormatError> {
        match self {
            SpecFile::Field(s) => s.build(),
            SpecFile::Group(s) => s.field.build(),
            _ => Ok(self.algebra()?.field().clone()),
        }
    }

    /// The underlying algebra of any kind except `field`.
    pub fn algebra(&self) -> Result<Arc<Algebra>, FormatError> {
        match self {
            SpecFile::Field(_) => Err(self.wrong("an algebra")),
            SpecFile::Algebra(s) => s.build(),
            SpecFile::Module(s) => s.algebra.build(),
            SpecFile::Hopf(s) => s.algebra.build(),
            SpecFile::Group(s) => Ok(s.build()?.algebra().clone()),
            SpecFile::ComoduleAlgebra(_) | SpecFile::CrossedProduct(_) => {
                Ok(self.comodule_algebra()?.algebra().clone())
            }
        }
    }

    pub fn hopf(&self) -> Result<Arc<HopfAlgebra>, FormatError> {
        match self {
            SpecFile::Hopf(s) => s.build(),
            SpecFile::Group(s) => s.build(),
            SpecFile::ComoduleAlgebra(s) => s.hopf.build(),
            _ => Err(self.wrong("a Hopf algebra or group")),
        }
    }

    pub fn module(&self) -> Result<ModuleRep, FormatError> {
        match self {
            SpecFile::Module(s) => s.build(),
            _ => Err(self.wrong("a module")),
        }
    }

    pub fn comodule_algebra(&self) -> Result<ComoduleAlgebra, FormatError> {
        match self {
            SpecFile::ComoduleAlgebra(s) => s.build(),
            SpecFile::CrossedProduct(s) => s.build(),
            _ => Err(self.wrong("a comodule algebra or crossed product")),
        }
    }

    /// Checks that the file builds into its object.
    pub fn validate(&self) -> Result<(), FormatError> {
        match self {
            SpecFile::Field(s) => s.build().map(drop),
            SpecFile::Module(s) => s.build().map(drop),
            SpecFile::Hopf(_) | SpecFile::Group(_) => self.hopf().map(drop),
            SpecFile::ComoduleAlgebra(_) | SpecFile::CrossedProduct(_) => self.comodule_algebra().map(drop),
            SpecFile::Algebra(s) => s.build().map(drop),
        }
    }
}
