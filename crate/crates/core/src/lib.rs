//! Exact degree-zero K-theory of Hopf-Galois extensions over finite fields.

#![allow(clippy::needless_range_loop)]

#[cfg(feature = "selftest")]
pub mod acceptance;
pub mod algcore;
pub mod chop;
pub mod exactla;
pub mod fixtures;
pub mod format;
pub mod galois;
pub mod hopf;
pub mod kzero;
#[cfg(any(test, feature = "selftest"))]
pub mod oracle;
pub mod rng;
