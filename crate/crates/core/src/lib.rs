//! Exact-arithmetic toolkit for hypercomplex nilpotent Lie algebras.
//!
//! Everything is computed over the rationals: structure constants, complex
//! structures, the Obata connection, its curvature, and the holonomy algebra
//! all live in exact linear algebra, so every equality test in this crate is
//! literal equality of reduced fractions.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`], [`matrix`], [`subspace`] build the exact linear algebra
//!   layer (RREF-canonical subspaces, kernels, the modular lattice of
//!   subspaces).
//! * [`lie`] holds Lie algebras given by structure constants, with the lower
//!   central series, center, and Jacobi checking.
//! * [`hyper`] adds (hyper)complex structures: integrability via the
//!   Nijenhuis tensor, quaternionic relations, the ascending J-series, and
//!   the H-solvable series.
//! * [`obata`] computes the Obata connection, its curvature, and a closed
//!   form for the curvature of 2-step algebras used as a cross-check.
//! * [`holonomy`] runs the infinitesimal holonomy closure and classifies the
//!   resulting matrix algebra.
//! * [`construct`] builds new hypercomplex algebras from old: central
//!   extensions by 2-cocycles and semidirect products by quaternionic
//!   representations.
//! * [`catalog`] contains the worked examples used throughout the test
//!   suite, constructed from their structure equations.
//! * [`dsl`] and [`report`] are the text/JSON interfaces of the CLI.
//! * [`sampling`] draws random valid extension data for property tests.

pub mod catalog;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod holonomy;
pub mod hyper;
pub mod lie;
pub mod matrix;
pub mod obata;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod subspace;

pub use error::HyperlieError;
pub use hyper::{HypercomplexLieAlgebra, HypercomplexStructure};
pub use lie::LieAlgebra;
pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::Subspace;
