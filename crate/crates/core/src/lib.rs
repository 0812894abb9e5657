//! Exact torus-equivariant Schubert and Chern-Schwartz-MacPherson calculus on
//! type A flag varieties, with path-counting product rules, Grassmannian
//! pushforwards and rim hook tableau counting.

pub mod arith;
pub mod bruhat;
pub mod cli;
pub mod csm;
pub mod error;
pub mod grassmann;
pub mod perm;
pub mod rht;
pub mod rules;
pub mod schubert;
pub mod symfun;

pub use error::{Error, Result};
