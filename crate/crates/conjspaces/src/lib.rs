//! An exact-arithmetic workbench for involutive algebra: Cayley–Dickson
//! algebras carrying a diagonal involution, Jordan-algebra projective
//! planes, the mod-2 Steenrod algebra in the admissible basis, finite
//! unstable algebras with a degree-doubling functor, cell-complex
//! constructions, and a rule-based realizability checker with a catalog of
//! worked spaces.
//!
//! Every computation is exact: coordinates are arbitrary-precision
//! rationals, cohomology coefficients are GF(2), and all comparisons are
//! equalities.  The `examples/` directory contains one runnable tour per
//! capability (`cargo run --example <name>`); the `conjspaces` binary
//! exposes the same operations as subcommands for scripting.

pub mod catalog;
pub mod cayley_dickson;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod f2;
pub mod formats;
pub mod jordan;
pub mod sampling;
pub mod steenrod;
pub mod unstable;

pub use error::{Error, Result};
