//! Exact verification engine for the maximum pentagon density in
//! `K_{k+1}`-free graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] small graphs, canonical labelling, enumeration, subgraph statistics
//! * [`symbolic`] exact polynomials and rational functions in `k`, plus a
//!   nonnegativity prover for integer arguments
//! * [`flags`] typed flags, flag densities, products and the unlabelling operator
//! * [`certificate`] the transcribed certificate data, reconstruction of the
//!   graph index ordering and the end-to-end verification
//! * [`counts`] closed-form pentagon counts in complete multipartite graphs and
//!   the polynomial claims of the stability and exact-structure arguments
//! * [`oracle`] exhaustive extremal search on tiny graphs
//! * [`report`] machine-readable verdicts
//!
//! Everything is exact: rationals are arbitrary precision and no floating
//! point value participates in any verdict.

pub mod certificate;
pub mod counts;
pub mod error;
pub mod exec;
pub mod flags;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
pub use exec::Exec;
