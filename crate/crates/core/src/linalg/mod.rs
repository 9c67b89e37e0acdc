//! Exact linear algebra: dense rational elimination, incremental rank
//! bases over `Q` and `F_p`, and Fourier-Motzkin feasibility.

mod dense;
mod fourier_motzkin;
mod rank;

pub use dense::{nullspace, rref, solve};
pub use fourier_motzkin::{feasible_point, Inequality};
pub use rank::{ExactInt, FractionFreeBasis, IncrementalBasis, Overflow, PrimeFieldBasis};
