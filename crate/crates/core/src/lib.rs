//! Exact algebra over small prime fields for certifying that 6-nodal quartic
//! surfaces give general genus-5 curves.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure: the
//! `prym` crate layers file formats, reports and the command line on top.
//!
//! Layout, bottom up:
//!
//! * [`scalar`]: `F_p` and the dual numbers `F_p[ε]/(ε²)`.
//! * [`poly`]: multivariate polynomials with a fixed variable set.
//! * [`linalg`]: dense matrices, echelon forms, kernels and ranks.
//! * [`ideal`]: Buchberger's algorithm and the ideal operations built on it.
//! * [`geometry`]: nodal quartics, discriminant sextics and their certificates.
//! * [`canonical`]: the canonical genus-5 curve cut out by three quadrics.
//! * [`ks`]: first-order deformations and the Kodaira-Spencer rank matrix.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod canonical;
pub mod error;
pub mod geometry;
pub mod ideal;
pub mod ks;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Dual, Fp, Prime, Scalar};
