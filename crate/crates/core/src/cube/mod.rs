//! Points of the Boolean cube, square-free monomials, term orders and
//! multilinear polynomials with exact rational coefficients.

mod monomial;
mod order;
pub(crate) mod point;
pub(crate) mod poly;
mod subset;

pub use monomial::{monomial_token, Monomial};
pub use order::{compare, compare_subsets, monomials_ascending, TermOrder};
pub use point::{CubePoint, PointSet};
pub use poly::{indicator, MultilinearPoly};
pub use subset::Subset;

/// Largest ambient dimension representable by the bitmask encodings.
pub const MAX_DIM: usize = 63;

pub(crate) fn check_dim(dim: usize) -> crate::Result<()> {
    if dim > MAX_DIM {
        Err(crate::Error::DimensionTooLarge(dim))
    } else {
        Ok(())
    }
}
