//! Exact arithmetic: rationals, sparse multivariate polynomials, dense
//! univariate polynomials and cyclotomic residues.

pub mod cyclo;
pub mod mpoly;
pub mod rational;
pub mod upoly;

pub use cyclo::{cyclotomic, limit_ratio_at_root, vanishing_order, CycloElt};
pub use mpoly::{ArithOp, MPoly, Mono, Var};
pub use rational::{rat, rat_frac, QExt, Rational};
pub use upoly::UPoly;
