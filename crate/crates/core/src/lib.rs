//! Exact-arithmetic checks and constructions for generalized contact structures on Lie
//! algebras, through the abelian extension `𝔤_ℝ = 𝔤 ⊕ ℝ𝟙` and its omni-Lie algebra.
//!
//! Everything is computed over `ℚ` or `ℚ(i)`; there are no floating-point values. The
//! `examples/` directory walks through each layer.

pub mod catalog;
pub mod certificate;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod omni;
pub mod scalar;
pub mod spectral;
pub mod structures;

pub use certificate::{Certificate, Verdict};
pub use error::{Error, Result};
pub use exterior::{BasedSpace, Form, Multivector};
pub use lie::{ExtendedAlgebra, LieAlgebra};
pub use linalg::{Field, Subspace};
pub use omni::{OmniSubspace, OmniVector, Twist};
pub use scalar::{Gauss, Rational};
