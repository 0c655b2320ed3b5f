//! Certified lower bounds for `depth R/I` via initially regular sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact polynomials over the rationals and term orders;
//! * [`groebner`]: Buchberger's algorithm, normal forms, ideal quotients;
//! * [`monomial_ideal`]: minimal generators, hypergraph view, leaf pairs, polarization;
//! * [`sequences`]: the sequence constructions and the certificate verifier;
//! * [`oracle`]: an independent depth computation via Hochster's formula;
//! * [`cli`]: problem files, fixtures and reports.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod monomial_ideal;
pub mod oracle;
pub mod sequences;

pub use error::{Error, ParseError, Result};
