//! Exact construction and verification of braided Hopf algebras obtained by
//! twisting a graded Hopf ∗-algebra with a phase cocycle.

pub mod calculus;
pub mod catalog;
pub mod cli;
pub mod display;
pub mod error;
pub mod exec;
pub mod freealg;
pub mod grading;
pub mod hopf;
pub mod report;
pub mod scalars;
pub mod spec_file;
pub mod twist;

pub use error::{Diagnostic, Error, Result};
