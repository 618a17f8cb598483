//! Plain-text TOML input files for every object kind.

mod build;
mod schema;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::FormatError;
pub use schema::{AlgebraSpec, ComoduleSpec, CrossedSpec, ElemSpec, FieldSpec, GroupSpec, HopfSpec, ModuleSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Field,
    Algebra,
    Module,
    Hopf,
    ComoduleAlgebra,
    Group,
    CrossedProduct,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Field => "field",
            Kind::Algebra => "algebra",
            Kind::Module => "module",
            Kind::Hopf => "hopf",
            Kind::ComoduleAlgebra => "comodule-algebra",
            Kind::Group => "group",
            Kind::CrossedProduct => "crossed-product",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecFile {
    Field(FieldSpec),
    Algebra(AlgebraSpec),
    Module(ModuleSpec),
    Hopf(HopfSpec),
    ComoduleAlgebra(ComoduleSpec),
    Group(GroupSpec),
    CrossedProduct(CrossedSpec),
}

/// Syntax or schema error; `line` and `col` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn from_toml(src: &str, e: &toml::de::Error) -> Self {
        let (line, col) = match e.span() {
            Some(span) => line_col(src, span.start),
            None => (1, 1),
        };
        ParseError { line, col, message: e.message().trim().to_string() }
    }
}

fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

#[derive(Deserialize)]
struct Head {
    kind: toml::Spanned<Kind>,
}

fn body<T: DeserializeOwned>(src: &str) -> Result<T, ParseError> {
    toml::from_str(src).map_err(|e| ParseError::from_toml(src, &e))
}

impl SpecFile {
    /// Reads the `kind` key, then the kind-specific body with unknown keys
    /// rejected. The `kind` line is blanked so that positions are preserved.
    pub fn parse(src: &str) -> Result<SpecFile, ParseError> {
        let head: Head = body(src)?;
        let span = head.kind.span();
        let start = src[..span.start].rfind('\n').map_or(0, |i| i + 1);
        let end = src[span.end..].find('\n').map_or(src.len(), |i| span.end + i);
        let mut rest = String::with_capacity(src.len());
        rest.push_str(&src[..start]);
        rest.extend(src[start..end].chars().map(|_| ' '));
        rest.push_str(&src[end..]);
        Ok(match head.kind.into_inner() {
            Kind::Field => SpecFile::Field(body(&rest)?),
            Kind::Algebra => SpecFile::Algebra(body(&rest)?),
            Kind::Module => SpecFile::Module(body(&rest)?),
            Kind::Hopf => SpecFile::Hopf(body(&rest)?),
            Kind::ComoduleAlgebra => SpecFile::ComoduleAlgebra(body(&rest)?),
            Kind::Group => SpecFile::Group(body(&rest)?),
            Kind::CrossedProduct => SpecFile::CrossedProduct(body(&rest)?),
        })
    }

    pub fn kind(&self) -> Kind {
        match self {
            SpecFile::Field(_) => Kind::Field,
            SpecFile::Algebra(_) => Kind::Algebra,
            SpecFile::Module(_) => Kind::Module,
            SpecFile::Hopf(_) => Kind::Hopf,
            SpecFile::ComoduleAlgebra(_) => Kind::ComoduleAlgebra,
            SpecFile::Group(_) => Kind::Group,
            SpecFile::CrossedProduct(_) => Kind::CrossedProduct,
        }
    }

    pub fn to_toml(&self) -> String {
        let inner = match self {
            SpecFile::Field(s) => toml::to_string(s),
            SpecFile::Algebra(s) => toml::to_string(s),
            SpecFile::Module(s) => toml::to_string(s),
            SpecFile::Hopf(s) => toml::to_string(s),
            SpecFile::ComoduleAlgebra(s) => toml::to_string(s),
            SpecFile::Group(s) => toml::to_string(s),
            SpecFile::CrossedProduct(s) => toml::to_string(s),
        }
        .expect("specs serialize to TOML");
        format!("kind = \"{}\"\n{inner}", self.kind().name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALG: &str = "kind = \"algebra\"\ndim = 1\nstructure = [[0, 0, 0, 1]]\n\n[field]\np = 2\n";

    #[test]
    fn round_trip() {
        let s = SpecFile::parse(ALG).unwrap();
        assert_eq!(s.kind(), Kind::Algebra);
        assert_eq!(SpecFile::parse(&s.to_toml()).unwrap(), s);
    }

    #[test]
    fn errors_carry_positions() {
        let e =
            SpecFile::parse("kind = \"algebra\"\ndim = 1\nbogus = 2\nstructure = []\n[field]\np = 2\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        assert!(e.message.contains("bogus"));
        let e = SpecFile::parse("kind = \"ring\"\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        let e = SpecFile::parse("kind = \"field\"\np = 2\nq = 3\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = SpecFile::parse("kind = \"field\"\np = \n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
