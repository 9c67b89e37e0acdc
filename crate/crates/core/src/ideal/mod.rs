//! Standard and leading monomials of vanishing ideals `I(V)` for point sets
//! `V` on the Boolean cube.
//!
//! Three independent routes compute the same lexicographic standard set:
//! the linear-algebra [`oracle`](standard_monomials_oracle), the fibre
//! [`recursion`](lex_standard_monomials_recursive) on the last coordinate,
//! and the [Lex game](lexgame_winner). The certificate builders produce
//! explicit vanishing polynomials with prescribed leading monomials.

mod certificate;
mod lexgame;
mod oracle;
mod recursive;

pub use certificate::{construct_q, construct_q_alternative, shatter_polynomial, vanishes_on, vanishing_certificate};
pub use lexgame::{lexgame_winner, Player};
pub use oracle::{standard_monomials_oracle, standard_monomials_over, Field};
pub use recursive::{lex_standard_monomials_recursive, lex_standard_monomials_recursive_with};

pub(crate) use oracle::standard_in_order;
