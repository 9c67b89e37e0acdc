use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Monomial, Subset};
use crate::{Error, Result};

/// Term orders on monomials in `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    /// Decided by the exponent of the smallest-indexed variable where the
    /// monomials differ.
    Lex,
    /// Total degree first, ties broken by `Lex`.
    DegLex,
}

impl TermOrder {
    /// Integer key whose natural order is this term order on square-free
    /// monomials.
    #[inline]
    pub fn key(self, s: Subset) -> (u32, u64) {
        match self {
            TermOrder::Lex => (0, s.lex_key()),
            TermOrder::DegLex => (s.len() as u32, s.lex_key()),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
        })
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            other => Err(Error::Parse(format!("unknown term order '{other}'"))),
        }
    }
}

/// Compares square-free monomials given by their supports.
#[inline]
pub fn compare_subsets(order: TermOrder, a: Subset, b: Subset) -> Ordering {
    order.key(a).cmp(&order.key(b))
}

/// Compares two monomials of the same ambient dimension.
pub fn compare(order: TermOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.dim() != m2.dim() {
        return Err(Error::DimensionMismatch { expected: m1.dim(), found: m2.dim() });
    }
    if m1.is_square_free() && m2.is_square_free() {
        return Ok(compare_subsets(order, m1.support(), m2.support()));
    }
    let lex = m1.exponents().cmp(&m2.exponents());
    Ok(match order {
        TermOrder::Lex => lex,
        TermOrder::DegLex => m1.degree().cmp(&m2.degree()).then(lex),
    })
}

/// All `2^n` square-free monomials of `[n]`, ascending in `order`.
pub fn monomials_ascending(n: usize, order: TermOrder) -> Vec<Subset> {
    let mut all: Vec<Subset> = Subset::all(n).collect();
    all.sort_unstable_by_key(|&s| order.key(s));
    all
}
