//! Oriented link diagrams, their HOMFLY polynomials, and bookkeeping for
//! z-degree bounds along skein trees.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod canonical;
pub mod bounds;
pub mod constructors;
pub mod diagram;
pub mod error;
pub mod homfly;
mod planar;
pub mod poly;
pub mod report;

pub use diagram::{ArcLabel, Canonical, Crossing, Diagram, Face, FaceCensus, SeifertData, Sign, ValidationReport, Violation};
pub use error::{Error, Result};
pub use poly::{Coeff, LaurentPoly2, Term};
