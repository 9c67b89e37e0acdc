use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{check_dim, Subset};
use crate::{Error, Result};

/// A 0/1 vector of length `dim`, the characteristic vector of its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubePoint {
    dim: usize,
    support: Subset,
}

impl CubePoint {
    pub fn new(dim: usize, support: Subset) -> Result<Self> {
        check_dim(dim)?;
        if let Some(top) = support.max_element() {
            if top > dim {
                return Err(Error::IndexOutOfRange { index: top, dim });
            }
        }
        Ok(CubePoint { dim, support })
    }

    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        check_dim(coords.len())?;
        let mut support = Subset::EMPTY;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => support = support.with(i + 1),
                _ => return Err(Error::Parse(format!("coordinate {} is {c}, not 0/1", i + 1))),
            }
        }
        Ok(CubePoint { dim: coords.len(), support })
    }

    /// Inverse of [`CubePoint::code`].
    pub fn from_code(dim: usize, code: u64) -> Self {
        debug_assert!(dim <= super::MAX_DIM && (dim == 64 || code >> dim == 0));
        let support = if dim == 0 { Subset::EMPTY } else { Subset((code << (64 - dim)).reverse_bits()) };
        CubePoint { dim, support }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn support(&self) -> Subset {
        self.support
    }

    /// Value of coordinate `j` (1-based).
    #[inline]
    pub fn coord(&self, j: usize) -> u8 {
        self.support.contains(j) as u8
    }

    pub fn coords(&self) -> Vec<u8> {
        (1..=self.dim).map(|j| self.coord(j)).collect()
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    /// Canonical integer encoding: coordinate 1 is the most significant bit.
    #[inline]
    pub fn code(&self) -> u64 {
        if self.dim == 0 {
            0
        } else {
            self.support.0.reverse_bits() >> (64 - self.dim)
        }
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.dim {
            f.write_str(if self.support.contains(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CubePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad point token '{s}'"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        CubePoint::from_coords(&coords)
    }
}

impl Serialize for CubePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A duplicate-free set of cube points of one dimension, kept in canonical
/// order (ascending [`CubePoint::code`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    codes: Vec<u64>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(PointSet { dim, codes: Vec::new() })
    }

    /// The whole cube `{0,1}^dim`.
    pub fn full(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        if dim > 30 {
            return Err(Error::TooLarge(format!("full cube of dimension {dim}")));
        }
        Ok(PointSet { dim, codes: (0..1u64 << dim).collect() })
    }

    pub fn new(dim: usize, points: impl IntoIterator<Item = CubePoint>) -> Result<Self> {
        check_dim(dim)?;
        let mut codes = Vec::new();
        for p in points {
            if p.dim != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim });
            }
            codes.push(p.code());
        }
        Ok(Self::from_codes_unchecked(dim, codes))
    }

    pub fn from_codes(dim: usize, codes: Vec<u64>) -> Result<Self> {
        check_dim(dim)?;
        if let Some(&bad) = codes.iter().find(|&&c| dim < 64 && c >> dim != 0) {
            return Err(Error::Parse(format!("code {bad} does not fit in {dim} bits")));
        }
        Ok(Self::from_codes_unchecked(dim, codes))
    }

    pub(crate) fn from_codes_unchecked(dim: usize, mut codes: Vec<u64>) -> Self {
        codes.sort_unstable();
        codes.dedup();
        PointSet { dim, codes }
    }

    /// Parses point tokens separated by commas or whitespace. The dimension
    /// is taken from the tokens; `dim` is required for the empty set.
    pub fn parse(text: &str, dim: Option<usize>) -> Result<Self> {
        let points = text
            .split(|c: char| c == ',' || c.is_whitespace() || c == ';')
            .filter(|t| !t.is_empty())
            .map(str::parse::<CubePoint>)
            .collect::<Result<Vec<_>>>()?;
        let dim = match (dim, points.first()) {
            (Some(d), _) => d,
            (None, Some(p)) => p.dim,
            (None, None) => return Err(Error::Parse("empty point list needs an explicit dimension".into())),
        };
        PointSet::new(dim, points)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Canonical codes, ascending.
    #[inline]
    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn iter(&self) -> impl Iterator<Item = CubePoint> + '_ {
        self.codes.iter().map(move |&c| CubePoint::from_code(self.dim, c))
    }

    pub fn supports(&self) -> Vec<Subset> {
        self.iter().map(|p| p.support()).collect()
    }

    pub fn contains(&self, p: &CubePoint) -> bool {
        p.dim == self.dim && self.codes.binary_search(&p.code()).is_ok()
    }

    /// A copy with `p` added (no-op when already present).
    pub fn with_point(&self, p: CubePoint) -> Result<Self> {
        if p.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim });
        }
        let mut codes = self.codes.clone();
        codes.push(p.code());
        Ok(Self::from_codes_unchecked(self.dim, codes))
    }

    /// A copy with the point at canonical position `index` removed.
    pub fn without_index(&self, index: usize) -> Self {
        let mut codes = self.codes.clone();
        codes.remove(index);
        PointSet { dim: self.dim, codes }
    }

    /// Splits on the last coordinate: `(V_0, V_1)` with
    /// `V_b = { v in {0,1}^(n-1) : (v, b) in V }`.
    pub fn split_last(&self) -> (PointSet, PointSet) {
        assert!(self.dim > 0, "cannot split a 0-dimensional point set");
        let (zero, one) = split_codes(&self.codes);
        (
            PointSet { dim: self.dim - 1, codes: zero },
            PointSet { dim: self.dim - 1, codes: one },
        )
    }

    pub fn tokens(&self) -> Vec<String> {
        self.iter().map(|p| p.to_string()).collect()
    }
}

/// Splits canonical codes by their lowest bit (the last coordinate) and
/// drops that bit. Both halves stay sorted.
pub(crate) fn split_codes(codes: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut zero = Vec::with_capacity(codes.len());
    let mut one = Vec::with_capacity(codes.len());
    for &c in codes {
        if c & 1 == 0 {
            zero.push(c >> 1);
        } else {
            one.push(c >> 1);
        }
    }
    (zero, one)
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(dim={}, {{{}}})", self.dim, self.tokens().join(", "))
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|p| p.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_puts_first_coordinate_high() {
        let p: CubePoint = "110".parse().unwrap();
        assert_eq!(p.code(), 0b110);
        assert_eq!(p.support().elements(), vec![1, 2]);
        assert_eq!(CubePoint::from_code(3, 0b110), p);
        assert_eq!(p.to_string(), "110");
    }

    #[test]
    fn canonical_order_and_dedup() {
        let v = PointSet::parse("001,100,010,100", None).unwrap();
        assert_eq!(v.tokens(), vec!["001", "010", "100"]);
    }

    #[test]
    fn split_last_coordinate() {
        let v = PointSet::parse("101,100,011", None).unwrap();
        let (v0, v1) = v.split_last();
        assert_eq!(v0.tokens(), vec!["10"]);
        assert_eq!(v1.tokens(), vec!["01", "10"]);
    }

    #[test]
    fn zero_dimensional() {
        let p = CubePoint::from_coords(&[]).unwrap();
        assert_eq!(p.code(), 0);
        let v = PointSet::new(0, [p]).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!("102".parse::<CubePoint>().is_err());
        assert!(PointSet::parse("10,101", None).is_err());
    }
}
