//! Exact classification of the growth of a two-variable polynomial's
//! gradient at infinity near every fiber.
//!
//! The pipeline: normalize the input (monic in `y`, total degree carried by
//! `y`), build the resultant profile `Res_y(f − λ, f′_y − u)` collected by
//! powers of `x`, and read off the critical values at infinity and the
//! per-fiber growth exponents. A Newton–Puiseux expansion engine recomputes
//! the same exponents from branch contact orders, and explicit Laurent
//! curves give certified upper bounds in any dimension.

pub mod alg;
pub mod classifier;
pub mod error;
pub mod laurent;
pub mod normalize;
pub mod poly;
pub mod puiseux;
pub mod resultant;
pub mod scalar;
pub mod unipoly;
pub mod witness;

pub use error::CoreError;
pub use poly::MultiPoly;
pub use scalar::{ExtRational, Rational, VanishingOrder};
