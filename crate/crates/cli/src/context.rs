use std::fmt::{Debug, Display};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Args;
use hopfk::algcore::{Algebra, AlgebraData, ModuleRep};
use hopfk::exactla::{Elem, FieldMatrix, FiniteField, IntMatrix};
use hopfk::format::{FormatError, Kind, SpecFile};
use hopfk::hopf::{ComoduleAlgebra, HopfAlgebra};
use hopfk::rng::{stream, Rng};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::Failure;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit code 2.
    Input(String),
    Failure(Failure),
}

/// Outermost variant name of a library error, looking through wrappers.
fn variant_name(debug: &str) -> String {
    const WRAPPERS: [&str; 7] = ["Galois(", "Chop(", "Module(", "Hopf(", "Algebra(", "Field(", "Linalg("];
    let mut s = debug;
    while let Some(rest) = WRAPPERS.iter().find_map(|w| s.strip_prefix(w)) {
        s = rest;
    }
    s.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect()
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Failure(Failure { kind: variant_name(&format!("{e:?}")), message: e.to_string() })
    }
}

pub fn input(msg: impl Display) -> CliError {
    CliError::Input(msg.to_string())
}

/// Structural problems in a file are input errors; failed axioms are verdicts.
pub fn built<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        FormatError::Io { .. } => input(e),
        FormatError::Parse(_) | FormatError::WrongKind { .. } | FormatError::Shape(_) | FormatError::Field(_) => {
            input(format!("{}: {e}", path.display()))
        }
        FormatError::Algebra(e) => e.into(),
        FormatError::Module(e) => e.into(),
        FormatError::Hopf(e) => CliError::Failure(Failure { kind: e.axiom().to_string(), message: e.to_string() }),
        FormatError::Galois(e) => e.into(),
    })
}

pub struct Ctx {
    pub seed: u64,
    pub bound: Option<usize>,
    pub inputs: Vec<Vec<u8>>,
    pub rng: Rng,
}

impl Ctx {
    pub fn new(seed: u64, bound: Option<usize>) -> Self {
        Ctx { seed, bound, inputs: Vec::new(), rng: stream(seed, "cli") }
    }

    pub fn load(&mut self, path: &Path) -> Result<SpecFile, CliError> {
        let bytes = std::fs::read(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let text = std::str::from_utf8(&bytes).map_err(|_| input(format!("{}: not valid UTF-8", path.display())))?;
        let spec = SpecFile::parse(text).map_err(|e| input(format!("{}:{e}", path.display())))?;
        self.inputs.push(bytes);
        Ok(spec)
    }

    pub fn data(&mut self, a: &Arc<Algebra>) -> Result<AlgebraData, CliError> {
        Ok(AlgebraData::compute(a, &mut self.rng)?)
    }

    /// The coacting side of a comodule-algebra file, or H over itself for a
    /// Hopf algebra or group.
    pub fn comodule(&mut self, path: &Path) -> Result<ComoduleAlgebra, CliError> {
        let spec = self.load(path)?;
        match spec.kind() {
            Kind::Hopf | Kind::Group => Ok(ComoduleAlgebra::regular(&built(path, spec.hopf())?)),
            _ => built(path, spec.comodule_algebra()),
        }
    }

    pub fn hopf(&mut self, path: &Path) -> Result<Arc<HopfAlgebra>, CliError> {
        let spec = self.load(path)?;
        built(path, spec.hopf())
    }

    /// The module named by a selector, over the algebra of `data`.
    pub fn select(&mut self, sel: &ModuleSel, data: &AlgebraData) -> Result<(String, ModuleRep), CliError> {
        pick(self, &sel.module, sel.simple, sel.pim, data)
    }

    /// A positional file that is either a module or something with an
    /// algebra to apply the selector to.
    pub fn target(&mut self, path: &Path, sel: &ModuleSel) -> Result<(AlgebraData, String, ModuleRep), CliError> {
        let spec = self.load(path)?;
        if spec.kind() == Kind::Module {
            if sel.is_set() {
                return Err(input("module selectors do not apply to a module file"));
            }
            let m = built(path, spec.module())?;
            let data = self.data(m.algebra())?;
            let m = m.rebase(&data.algebra)?;
            return Ok((data, path.display().to_string(), m));
        }
        let a = built(path, spec.algebra())?;
        let data = self.data(&a)?;
        let (label, m) = self.select(sel, &data)?;
        Ok((data, label, m))
    }
}

fn pick(
    ctx: &mut Ctx,
    file: &Option<PathBuf>,
    simple: Option<usize>,
    pim: Option<usize>,
    data: &AlgebraData,
) -> Result<(String, ModuleRep), CliError> {
    let out_of_range = |what: &str, i: usize, n: usize| input(format!("{what} {i} out of range: the algebra has {n}"));
    if let Some(path) = file {
        let spec = ctx.load(path)?;
        let m = built(path, spec.module())?;
        let m = m
            .rebase(&data.algebra)
            .map_err(|_| input(format!("{}: module is over a different algebra", path.display())))?;
        Ok((path.display().to_string(), m))
    } else if let Some(i) = simple {
        let n = data.simples.simples.len();
        let s = data.simples.simples.get(i).ok_or_else(|| out_of_range("simple", i, n))?;
        Ok((format!("S{i}"), s.clone()))
    } else if let Some(i) = pim {
        let n = data.pims.pims.len();
        let p = data.pims.pims.get(i).ok_or_else(|| out_of_range("PIM", i, n))?;
        Ok((format!("P{i}"), p.clone()))
    } else {
        Ok(("regular".into(), ModuleRep::regular(&data.algebra)))
    }
}

/// An A-module (or B-module) chosen on the command line.
#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct ModuleSel {
    /// Module file over the relevant algebra.
    #[arg(long, value_name = "FILE")]
    pub module: Option<PathBuf>,
    /// The i-th simple module.
    #[arg(long, value_name = "I")]
    pub simple: Option<usize>,
    /// The i-th projective indecomposable module.
    #[arg(long, value_name = "I")]
    pub pim: Option<usize>,
    /// The regular module (default).
    #[arg(long)]
    pub regular: bool,
}

impl ModuleSel {
    pub fn is_set(&self) -> bool {
        self.module.is_some() || self.simple.is_some() || self.pim.is_some() || self.regular
    }
}

/// An H-module chosen on the command line.
#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct VSel {
    #[arg(long, value_name = "FILE")]
    pub v_module: Option<PathBuf>,
    #[arg(long, value_name = "I")]
    pub v_simple: Option<usize>,
    #[arg(long, value_name = "I")]
    pub v_pim: Option<usize>,
    #[arg(long)]
    pub v_regular: bool,
    /// The trivial module given by the counit (default).
    #[arg(long)]
    pub v_trivial: bool,
}

impl VSel {
    pub fn is_set(&self) -> bool {
        self.v_module.is_some() || self.v_simple.is_some() || self.v_pim.is_some() || self.v_regular || self.v_trivial
    }

    pub fn select(
        &self,
        ctx: &mut Ctx,
        data: &AlgebraData,
        hopf: &HopfAlgebra,
    ) -> Result<(String, ModuleRep), CliError> {
        if self.is_set() && !self.v_trivial {
            return pick(ctx, &self.v_module, self.v_simple, self.v_pim, data);
        }
        Ok(("trivial".into(), hopf.trivial_module().rebase(&data.algebra)?))
    }
}

pub fn big(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn int_matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| bigs(m.row(r))).collect())
}

pub fn elem(f: &FiniteField, a: Elem) -> Value {
    if f.degree() == 1 {
        json!(a)
    } else {
        json!(f.coeffs(a))
    }
}

pub fn elems(f: &FiniteField, v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|&a| elem(f, a)).collect())
}

pub fn field_matrix(m: &FieldMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| elems(m.field(), m.row(r))).collect())
}

pub fn list<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn diag(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("diag({})", parts.join(","))
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap_or(0) as usize]).collect()
}

/// `(ℤ/2)² ⊕ ℤ` style rendering of a list of cyclic factors (0 = ℤ).
pub fn group(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    let mut runs: Vec<(&BigInt, usize)> = Vec::new();
    for d in factors {
        match runs.last_mut() {
            Some((x, k)) if *x == d => *k += 1,
            _ => runs.push((d, 1)),
        }
    }
    let parts: Vec<String> = runs
        .into_iter()
        .map(|(d, k)| {
            let base = if d.to_i64() == Some(0) { "ℤ".to_string() } else { format!("ℤ/{d}") };
            match (k, base.contains('/')) {
                (1, _) => base,
                (_, true) => format!("({base}){}", superscript(k)),
                (_, false) => format!("{base}{}", superscript(k)),
            }
        })
        .collect();
    parts.join(" ⊕ ")
}

pub fn write_spec(path: &Path, spec: &SpecFile) -> Result<(), CliError> {
    std::fs::write(path, spec.to_toml()).map_err(|e| input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_names_look_through_wrappers() {
        assert_eq!(variant_name("Galois(NotGalois(DimensionDefect { tensor_dim: 1 }))"), "NotGalois");
        assert_eq!(variant_name("CartanNotInjective"), "CartanNotInjective");
        assert_eq!(variant_name("Chop(Module(AlgebraMismatch))"), "AlgebraMismatch");
    }

    #[test]
    fn groups_render_with_exponents() {
        let g = |v: &[i64]| group(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(g(&[2, 2]), "(ℤ/2)²");
        assert_eq!(g(&[3]), "ℤ/3");
        assert_eq!(g(&[2, 0, 0]), "ℤ/2 ⊕ ℤ²");
        assert_eq!(g(&[]), "0");
    }
}
