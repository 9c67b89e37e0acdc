//! Exact computation of lexicographic standard monomials for vanishing
//! ideals of point sets on the Boolean cube, with generators for linear
//! Sperner systems `S(a, k) = { v in {0,1}^n : a.v = k }` and machine checks
//! of the ballot-monomial containment and its corollaries.
//!
//! Module map:
//! - [`cube`]: points, monomials, term orders, multilinear polynomials.
//! - [`families`]: weight specs, family generators, ballot monomials, `H_t`.
//! - [`ideal`]: three engines for standard monomials plus vanishing
//!   certificates.
//! - [`analysis`]: shattering, linearity, and the verification suites.

pub mod analysis;
pub mod cube;
pub mod families;
pub mod ideal;
pub mod linalg;
pub mod par;
pub mod rational;

mod error;

pub use error::{Error, Result};
