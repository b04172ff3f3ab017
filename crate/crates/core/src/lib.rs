//! Greedy λ-energy sequences on spheres.
//!
//! A greedy λ-energy sequence starts at a point `a_0` of the unit sphere and
//! chooses each new point `a_n` as a maximizer of the potential
//! `U_n(x) = Σ_{k<n} |x - a_k|^λ`. The crate provides
//!
//! * exact formulas on the circle, where the sequence is the base-2
//!   van der Corput sequence of turns ([`circle`]),
//! * a numeric greedy generator on `S^d` ([`numeric`]),
//! * the second-order asymptotic constants ([`asymptotics`], [`specfun`]),
//! * closed forms for `λ >= 2` ([`special`]) and verification suites ([`verify`]).
//!
//! Heavy loops run on rayon when the default `parallel` feature is on; every
//! entry point accepting an [`Exec`] also runs sequentially with bitwise
//! identical output.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod binary;
pub mod circle;
pub mod error;
pub mod exec;
pub mod numeric;
pub mod special;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};

/// Library version recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use exec::Exec;
pub use specfun::{Lambda, Regime};
