//! Exact verification of Gelfand-Kazhdan type criteria for finite groups.
//!
//! Given a finite group `G`, a subgroup `H` and an involutive automorphism
//! `theta`, the crate computes double cosets and the action of
//! `sigma(g) = theta(g^-1)` on them, an exact character table modulo a
//! suitable prime, multiplicities `dim pi^H`, twisted Frobenius-Schur
//! indicators, and checks the equivalences and counting identities that
//! tie these together.

pub mod chartab;
pub mod cli;
pub mod cosets;
pub mod criteria;
pub mod error;
pub mod field;
pub mod group;

pub use error::{CharTableError, CosetError, Error, GroupError};
