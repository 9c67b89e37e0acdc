use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A subset of `[n] = {1, ..., n}` stored as a bitmask; element `j` lives
/// in bit `j - 1`. Doubles as the support of a square-free monomial.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut mask = 0u64;
        for j in elements {
            if j == 0 || j > super::MAX_DIM {
                return Err(Error::IndexOutOfRange { index: j, dim: super::MAX_DIM });
            }
            mask |= 1 << (j - 1);
        }
        Ok(Subset(mask))
    }

    /// `{1, ..., m}`.
    pub fn prefix(m: usize) -> Self {
        if m >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << m) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, j: usize) -> bool {
        (1..=64).contains(&j) && self.0 >> (j - 1) & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn with(self, j: usize) -> Subset {
        Subset(self.0 | 1 << (j - 1))
    }

    pub fn without(self, j: usize) -> Subset {
        Subset(self.0 & !(1 << (j - 1)))
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let j = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(j)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sort key realising the lexicographic order of square-free monomials
    /// under `x_1 > x_2 > ... > x_n`: element 1 becomes the most significant
    /// bit.
    #[inline]
    pub fn lex_key(self) -> u64 {
        self.0.reverse_bits()
    }

    /// Lexicographic comparison of the sorted element sequences, i.e.
    /// `{1,5} < {2,3}` and `{2} < {2,3}`.
    pub fn cmp_as_sequence(self, other: Subset) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// All subsets of `[n]`, in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(Subset)
    }

    /// All `k`-subsets of `[n]` in increasing mask order (Gosper's hack).
    pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        let limit = 1u64 << n;
        let mut next = if k > n { None } else { Some(Subset::prefix(k).0) };
        std::iter::from_fn(move || {
            let cur = next?;
            if cur >= limit {
                return None;
            }
            next = if cur == 0 {
                None
            } else {
                let c = cur & cur.wrapping_neg();
                let r = cur + c;
                Some((((r ^ cur) >> 2) / c) | r)
            };
            Some(Subset(cur))
        })
    }

    /// Token form without the empty-monomial convention: `[]`, `[2,4]`.
    pub fn to_set_token(self) -> String {
        let inner: Vec<String> = self.iter().map(|j| j.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_set_token())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_set_token())
    }
}

/// Accepts `[2,4]`, `[]`, `{2,4}`, `2,4` and `1` (the empty monomial).
impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" || t == "[]" || t == "{}" || t.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('{').and_then(|r| r.strip_suffix('}')))
            .unwrap_or(t);
        let mut prev = 0usize;
        let mut out = Subset::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let j: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad subset element '{part}' in '{s}'")))?;
            if j <= prev {
                return Err(Error::Parse(format!("subset '{s}' is not strictly ascending")));
            }
            prev = j;
            out = out.union(Subset::from_elements([j])?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let s: Subset = "[2,4]".parse().unwrap();
        assert_eq!(s.elements(), vec![2, 4]);
        assert_eq!(s.to_string(), "[2,4]");
        assert_eq!("1".parse::<Subset>().unwrap(), Subset::EMPTY);
        assert!("[4,2]".parse::<Subset>().is_err());
        assert!("[0]".parse::<Subset>().is_err());
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(Subset::k_subsets(5, 2).count(), 10);
        assert_eq!(Subset::k_subsets(4, 0).collect::<Vec<_>>(), vec![Subset::EMPTY]);
        assert_eq!(Subset::k_subsets(3, 3).count(), 1);
        assert_eq!(Subset::k_subsets(3, 4).count(), 0);
        assert!(Subset::k_subsets(6, 3).all(|s| s.len() == 3));
    }

    #[test]
    fn sequence_order() {
        let a: Subset = "[1,5]".parse().unwrap();
        let b: Subset = "[2,3]".parse().unwrap();
        assert!(a.cmp_as_sequence(b).is_lt());
    }
}
