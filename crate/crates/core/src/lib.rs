//! Special functions of planar quasiconformal map theory.
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`]: gamma, digamma, beta, the Ramanujan constant `R(a,b)` and the
//!   Gaussian hypergeometric function with its behaviour at `r = 1`;
//! * [`means`]: arithmetic, geometric, logarithmic and arithmetic–geometric
//!   means, and the complete elliptic integral `K(r)` through the AGM;
//! * [`modulus`]: the Grötzsch modulus `μ(r)`, its signature-`a` analogue
//!   `μ_a(r)`, safeguarded inverses and the planar ring capacities;
//! * [`distortion`]: the distortion function `φ_K`, its generalization
//!   `φ^a_K`, the quasisymmetry function `η_{K,2}`, `λ(K)` and related maps;
//! * [`bounds`]: closed-form constants and bounds from the distortion theory;
//! * [`identities`]: a registry of modular equations and inequalities that can
//!   be evaluated as residuals over parameter grids;
//! * [`geometry`]: planar quasicircle generation and discrete estimators of
//!   geometric constants and Möbius-invariant metrics.
//!
//! All evaluators are pure functions and safe to call from any thread.

pub mod bounds;
pub mod distortion;
pub mod error;
pub mod geometry;
pub mod identities;
pub mod means;
pub mod modulus;
mod radius;
pub mod specfun;

pub use error::{Error, Result};
pub use radius::UnitRadius;
