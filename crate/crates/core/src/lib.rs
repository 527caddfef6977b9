//! Exact rational workbench for finite-dimensional algebras: gendo-symmetric
//! classification, the coring structure on `(A, D(A))`, and the module
//! category of that bocs.
//!
//! Conventions used throughout:
//! - module elements are row vectors and maps act on the right, so a map
//!   `V -> W` is a `dim V x dim W` matrix and "first `f` then `g`" is `F * G`;
//! - right actions are multiplicative (`rho(ab) = rho(a) rho(b)`), left
//!   actions in this convention satisfy `lambda(ab) = lambda(b) lambda(a)`;
//! - the ground field is the rationals.

pub mod algebra;
pub mod bocs;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod gendo;
pub mod json;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod rational;

pub use algebra::{Algebra, AlgebraElement};
pub use error::{Error, Result};
pub use linalg::{Mat, Subspace};
pub use module::{Bimodule, Module, ModuleHom};
pub use rational::Rat;
