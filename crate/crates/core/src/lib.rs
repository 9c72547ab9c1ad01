//! Certified interval verification of explicit zero-density estimates for
//! the Riemann zeta function.
//!
//! Every real quantity is carried as an [`Interval`] with outward rounding.
//! The [`ledger`] re-derives each numeric claim of the zero-density proof
//! over its whole parameter box and reports PASS, FAIL or INCONCLUSIVE.

pub mod error;
pub mod interval;
pub mod quadrature;
pub mod bounds;
pub mod density;
pub mod oracle;
pub mod ledger;
pub mod cli;

pub use error::{Error, Result};
pub use interval::{Interval, Precision};
