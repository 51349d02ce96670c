//! Exact computation of the Euler characteristic of the moduli of principally
//! polarized abelian varieties by several independent routes, together with
//! the lambda-class intersection theory and stable-graph combinatorics that
//! feed them.
//!
//! All arithmetic is over exact rationals.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod poly;
pub mod eulerhodge;
pub mod hodgering;
pub mod lagrangian;
pub mod level;
pub mod output;
pub mod strata;
pub mod symlambda;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{bernoulli, zeta_neg, Rational};
pub use symlambda::{ctop_sym2, elementary_to_lambda, giambelli_det, LambdaPoly, SymRootPoly};
