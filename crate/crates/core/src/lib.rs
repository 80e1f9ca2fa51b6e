//! Cores, edge covers, hypergraph widths and decomposition-guided solving for
//! constraint satisfaction problems and unions of conjunctive queries.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, random pools and
//! the command line front end live in the `semwidth` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod covers;
pub mod decomp;
mod error;
pub mod hom;
mod lp;
pub mod model;
pub mod reductions;
pub mod semantic;
pub mod solver;
pub mod ucq;

pub use error::{Error, Result};
pub use model::{Hypergraph, Instance, Signature, Structure};

/// Exact rational numbers used for every width and cover value.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// Size limits on the number of hypergraph vertices handled by the exact
/// width routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub tw: usize,
    pub ghw: usize,
    pub fhw: usize,
    pub hw: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tw: 16,
            ghw: 10,
            fhw: 10,
            hw: 9,
        }
    }
}
