//! Exact computational kernel for simplicial commutative algebra.
//!
//! The crate is organized in layers:
//!
//! * [`ring`], [`poly`], [`matrix`], [`snf`], [`groebner`] — exact arithmetic:
//!   coefficient rings (ℤ, ℚ, 𝔽_p, ℤ/m), multivariate polynomials, dense
//!   matrices, Smith normal form over ℤ, and a Buchberger/Schreyer engine for
//!   ideals and submodules of free modules over polynomial rings with field
//!   coefficients.
//! * [`presentation`], [`parse`] — finitely presented algebras and modules,
//!   and the line-oriented input grammar shared with the CLI.
//! * [`complex`], [`resolution`] — chain complexes with homology over all
//!   supported bases, free resolutions, Tor, and exactness checking.
//! * [`simplex`], [`smod`] — the simplex category, truncated simplicial
//!   modules, Moore and normalized complexes, and the Dold-Kan correspondence
//!   in both directions.
//! * [`tower`] — truncated free simplicial algebras, resolution of a finite
//!   presentation by iterated cycle-killing, homotopy rings, derived tensor
//!   products, and the levelwise-free-algebra oracle.
//! * [`cotangent`], [`extension`], [`witt`] — cotangent complex truncations,
//!   Andre-Quillen (co)homology, square-zero extension classification,
//!   deformation obstructions, and Witt vector lifts.
//! * [`group`], [`modmat`], [`gres`], [`hecke`] — finite groups, group
//!   cohomology rings via free resolutions over the group ring, the torus
//!   derived Hecke algebra, the rank-one Satake restriction, and the derived
//!   Hecke action in a finite model.
//!
//! Everything is exact: coefficients are arbitrary-precision integers or
//! rationals (with machine-word fast paths for small moduli), and all
//! reported ranks, torsion coefficients and dimensions are certified by the
//! arithmetic, never by numerical tolerance.
//!
//! Homological (lower) indexing is used throughout. Statements usually made
//! cohomologically translate accordingly; for instance a morphism is
//! quasismooth when the cotangent complex has homology concentrated in
//! degrees {0, 1}.
//!
//! All values are immutable after construction and every operation is pure,
//! so the whole crate is safe to drive from multiple threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bar;
pub mod complex;
pub mod cotangent;
pub mod error;
pub mod extension;
pub mod gres;
pub mod groebner;
pub mod group;
pub mod hecke;
pub mod matrix;
pub mod modmat;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod random;
pub mod report;
pub mod resolution;
pub mod ring;
pub mod simplex;
pub mod smod;
pub mod snf;
pub mod tower;
pub mod witt;

pub use error::{Error, Result};
pub use num_bigint;
pub use ring::{CoefficientRing, Scalar};
