use std::fmt;

use serde::{Serialize, Serializer};

use super::{check_dim, Subset};
use crate::{Error, Result};

/// A monomial in `x_1, ..., x_dim`.
///
/// Square-free monomials are identified with their support. A general
/// exponent vector is kept only when some exponent exceeds 1; such
/// monomials exist solely as Lex-game inputs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    dim: usize,
    support: Subset,
    exponents: Option<Vec<u32>>,
}

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial { dim, support: Subset::EMPTY, exponents: None }
    }

    pub fn square_free(dim: usize, support: Subset) -> Result<Self> {
        check_dim(dim)?;
        if let Some(top) = support.max_element() {
            if top > dim {
                return Err(Error::IndexOutOfRange { index: top, dim });
            }
        }
        Ok(Monomial { dim, support, exponents: None })
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Result<Self> {
        let dim = exponents.len();
        check_dim(dim)?;
        let support = Subset(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |m, (i, _)| m | 1 << i),
        );
        let general = exponents.iter().any(|&e| e > 1);
        Ok(Monomial { dim, support, exponents: general.then_some(exponents) })
    }

    /// Parses `1`, `[2,4]` or `[1^2,3]` in ambient dimension `dim`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let t = text.trim();
        if !t.contains('^') {
            let support: Subset = t.parse()?;
            return Monomial::square_free(dim, support);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad monomial '{text}'")))?;
        let mut exps = vec![0u32; dim];
        let mut prev = 0;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (var, exp) = match part.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (part, "1"),
            };
            let bad = || Error::Parse(format!("bad monomial factor '{part}' in '{text}'"));
            let j: usize = var.parse().map_err(|_| bad())?;
            let e: u32 = exp.parse().map_err(|_| bad())?;
            if j <= prev {
                return Err(Error::Parse(format!("monomial '{text}' is not strictly ascending")));
            }
            if j > dim {
                return Err(Error::IndexOutOfRange { index: j, dim });
            }
            prev = j;
            exps[j - 1] = e;
        }
        Monomial::from_exponents(exps)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn support(&self) -> Subset {
        self.support
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.is_none()
    }

    /// Exponent of `x_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        match &self.exponents {
            Some(e) => e.get(j.wrapping_sub(1)).copied().unwrap_or(0),
            None => self.support.contains(j) as u32,
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        (1..=self.dim).map(|j| self.exponent(j)).collect()
    }

    pub fn degree(&self) -> u32 {
        match &self.exponents {
            Some(e) => e.iter().sum(),
            None => self.support.len() as u32,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .support
            .iter()
            .map(|j| match self.exponent(j) {
                1 => j.to_string(),
                e => format!("{j}^{e}"),
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Token for a square-free monomial given by its support: `1` or `[2,4]`.
pub fn monomial_token(support: Subset) -> String {
    if support.is_empty() {
        "1".to_string()
    } else {
        support.to_set_token()
    }
}
