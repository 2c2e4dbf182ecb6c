//! Exact computations around Schur functors of `GL_n`: Littlewood–Richardson
//! decompositions, Young symmetrizers, unramified local L- and γ-factors, and
//! unit groups of Vinberg monoids together with their generalized Cartan
//! matrices.

pub mod error;
pub mod linalg;
pub mod local_factors;
pub mod lr;
pub mod partition;
pub mod poly;
pub mod rep_ring;
pub mod scalar;
pub mod vinberg;
pub mod young;

pub use error::{Error, Result};
pub use partition::Partition;
pub use local_factors::{GammaFactor, LocalLFactor, UnramifiedParameter};
pub use lr::lr_coefficient;
pub use rep_ring::SchurSum;
pub use scalar::Scalar;
pub use vinberg::{GeneralizedCartanMatrix, UnitGroupDescriptor};
pub use young::{GroupAlgebraElement, Permutation};
