//! Exact quasideterminants, quasi-Plücker coordinates and quantum minor
//! calculus, with verifiers for the identities that tie them together.

pub mod check;
pub mod combinatorics;
pub mod grassmann;
pub mod harness;
pub mod quasi_plucker;
pub mod quasidet;
pub mod quantum;
pub mod scalars;
