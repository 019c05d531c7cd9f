//! Numerical laboratory for special flows over Diophantine circle rotations
//! with power-singular ceiling functions.
//!
//! The library builds Kochergin-type special flows `K_t` over an irrational
//! rotation, estimates Birkhoff sums of singular and bounded-variation
//! observables, searches for singularity tuples with good separation
//! properties, constructs mean-zero bump cocycles, and runs Monte Carlo
//! central-limit-theorem experiments on the associated (T,T⁻¹) skew product
//! with an exponentially mixing suspension-flow fiber.
//!
//! Modules mirror the pipeline stages:
//!
//! * [`diophantine`] — continued fractions, convergent denominators,
//!   Ostrovski expansions, orbit distances.
//! * [`roof`] — the one-singularity ceiling `f̄` and the composite roof.
//! * [`birkhoff`] — ergodic sums, Denjoy–Koksma checks, small-sum covers.
//! * [`kochergin`] — the special-flow simulator and S1/S3 verifiers.
//! * [`cocycle`] — smooth and analytic cocycles, orbital integrals, S2 scans.
//! * [`tuples`] — good-singularity-tuple machinery and randomized search.
//! * [`clt`] — the toy mixing fiber, skew products, CLT and variance runs.
//!
//! Monte Carlo loops are data-parallel via rayon when the `parallel` feature
//! (default) is enabled; every scan also has a sequential path, and both
//! produce bitwise-identical output for a fixed seed and chunk size.

pub mod birkhoff;
pub mod circle;
pub mod clt;
pub mod cocycle;
pub mod diophantine;
pub mod error;
pub mod exec;
pub mod interval;
pub mod kochergin;
pub mod quad;
pub mod roof;
pub mod stats;
pub mod tuples;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
