//! Exact computations around finite subgroups of Lie groups: root data and
//! Weyl groups, embedding criteria, modular representations of SL2(F_p),
//! group cohomology and a small nonabelian obstruction calculus.

pub mod arith;
pub mod cohom;
pub mod embed;
pub mod error;
pub mod fp;
pub mod fppoly;
pub mod group;
pub mod intpoly;
pub mod modrep;
pub mod obstruction;
pub mod report;
pub mod ring;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
