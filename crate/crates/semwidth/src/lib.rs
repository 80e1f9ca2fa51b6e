//! File formats, seeded generators, property suites and the command line
//! front end for `semwidth-core`.

pub mod check;
pub mod cli;
pub mod format;
pub mod gen;
pub mod limits;
