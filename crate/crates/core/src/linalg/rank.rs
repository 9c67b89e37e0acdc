use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Raised by the machine-integer basis when an entry leaves `i64`; callers
/// redo the computation with [`BigInt`] entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Incremental rank of 0/1 vectors of a fixed length.
pub trait IncrementalBasis {
    /// Adds `v`; `Ok(true)` iff it is independent of the vectors accepted so
    /// far (it is then kept, otherwise discarded).
    fn insert(&mut self, v: &[u8]) -> Result<bool, Overflow>;

    fn rank(&self) -> usize;
}

/// Integer entries for fraction-free elimination over `Q`.
pub trait ExactInt: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn from_bit(b: u8) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;

    /// `dst <- a * dst - b * src`, elementwise.
    fn combine(dst: &mut [Self], a: &Self, b: &Self, src: &[Self]) -> Result<(), Overflow>;

    /// Divides by the gcd of the entries and makes the entry at `lead`
    /// positive.
    fn make_primitive(row: &mut [Self], lead: usize);

    /// Divides by the gcd of the entries when that is cheap to justify.
    fn reduce_content(row: &mut [Self]);
}

impl ExactInt for i64 {
    fn zero() -> Self {
        0
    }

    fn from_bit(b: u8) -> Self {
        b as i64
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn is_negative(&self) -> bool {
        *self < 0
    }

    #[inline]
    fn combine(dst: &mut [i64], a: &i64, b: &i64, src: &[i64]) -> Result<(), Overflow> {
        let (a, b) = (*a as i128, *b as i128);
        let mut ok = true;
        for (d, &s) in dst.iter_mut().zip(src) {
            let x = a * *d as i128 - b * s as i128;
            ok &= x == x as i64 as i128;
            *d = x as i64;
        }
        if ok {
            Ok(())
        } else {
            Err(Overflow)
        }
    }

    fn reduce_content(row: &mut [i64]) {
        let g = row.iter().fold(0u64, |g, &x| gcd_u64(g, x.unsigned_abs()));
        if g > 1 {
            for x in row.iter_mut() {
                *x /= g as i64;
            }
        }
    }

    fn make_primitive(row: &mut [i64], lead: usize) {
        let g = row.iter().fold(0u64, |g, &x| gcd_u64(g, x.unsigned_abs()));
        let sign = if row[lead] < 0 { -1 } else { 1 };
        if g > 1 || sign < 0 {
            let g = g as i64 * sign;
            for x in row.iter_mut() {
                *x /= g;
            }
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn from_bit(b: u8) -> Self {
        BigInt::from(b)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn combine(dst: &mut [BigInt], a: &BigInt, b: &BigInt, src: &[BigInt]) -> Result<(), Overflow> {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = a * &*d - b * s;
        }
        Ok(())
    }

    fn reduce_content(row: &mut [BigInt]) {
        let g = row.iter().fold(<BigInt as Zero>::zero(), |g, x| g.gcd(x));
        if g > BigInt::from(1) {
            for x in row.iter_mut() {
                *x = &*x / &g;
            }
        }
    }

    fn make_primitive(row: &mut [BigInt], lead: usize) {
        let mut g = row.iter().fold(<BigInt as Zero>::zero(), |g, x| g.gcd(x));
        if Zero::is_zero(&g) {
            return;
        }
        if Signed::is_negative(&row[lead]) {
            g = -g;
        }
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

const NONE: u32 = u32::MAX;

/// Reduced row echelon basis over `Q` kept with primitive integer rows.
///
/// Every stored row is zero in the pivot columns of the other rows, so
/// reducing a new vector only touches the pivots where it starts nonzero.
#[derive(Clone, Debug)]
pub struct FractionFreeBasis<T> {
    len: usize,
    rows: Vec<Vec<T>>,
    pivot: Vec<usize>,
    row_of_col: Vec<u32>,
}

impl<T: ExactInt> FractionFreeBasis<T> {
    pub fn new(len: usize) -> Self {
        FractionFreeBasis { len, rows: Vec::new(), pivot: Vec::new(), row_of_col: vec![NONE; len] }
    }
}

impl<T: ExactInt> IncrementalBasis for FractionFreeBasis<T> {
    fn insert(&mut self, v01: &[u8]) -> Result<bool, Overflow> {
        debug_assert_eq!(v01.len(), self.len);
        if self.rows.len() == self.len {
            return Ok(false);
        }
        let mut v: Vec<T> = v01.iter().map(|&b| T::from_bit(b)).collect();
        let mut touched = false;
        for (c, &b) in v01.iter().enumerate() {
            let r = self.row_of_col[c];
            if b == 0 || r == NONE {
                continue;
            }
            let row = &self.rows[r as usize];
            let vc = v[c].clone();
            T::combine(&mut v, &row[c], &vc, row)?;
            T::reduce_content(&mut v);
            touched = true;
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        if touched {
            T::make_primitive(&mut v, lead);
        }
        for (j, row) in self.rows.iter_mut().enumerate() {
            if row[lead].is_zero() {
                continue;
            }
            let rc = row[lead].clone();
            T::combine(row, &v[lead], &rc, &v)?;
            T::make_primitive(row, self.pivot[j]);
        }
        self.row_of_col[lead] = self.rows.len() as u32;
        self.pivot.push(lead);
        self.rows.push(v);
        Ok(true)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon basis over the prime field `F_p`.
#[derive(Clone, Debug)]
pub struct PrimeFieldBasis {
    p: u64,
    len: usize,
    rows: Vec<Vec<u64>>,
    row_of_col: Vec<u32>,
}

impl PrimeFieldBasis {
    /// `p` must be prime and below `2^32`.
    pub fn new(len: usize, p: u64) -> Self {
        assert!((2..1 << 32).contains(&p), "modulus out of range");
        PrimeFieldBasis { p, len, rows: Vec::new(), row_of_col: vec![NONE; len] }
    }

    fn inverse(&self, x: u64) -> u64 {
        // Fermat: x^(p-2)
        let (mut base, mut e, mut acc) = (x % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl IncrementalBasis for PrimeFieldBasis {
    fn insert(&mut self, v01: &[u8]) -> Result<bool, Overflow> {
        debug_assert_eq!(v01.len(), self.len);
        if self.rows.len() == self.len {
            return Ok(false);
        }
        let p = self.p;
        let mut v: Vec<u64> = v01.iter().map(|&b| b as u64).collect();
        for (c, &b) in v01.iter().enumerate() {
            let r = self.row_of_col[c];
            if b == 0 || r == NONE {
                continue;
            }
            let f = v[c];
            if f == 0 {
                continue;
            }
            // rows are monic at their pivot
            for (x, &y) in v.iter_mut().zip(&self.rows[r as usize]) {
                *x = (*x + (p - f) * y) % p;
            }
        }
        let Some(lead) = v.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let inv = self.inverse(v[lead]);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for row in self.rows.iter_mut() {
            let f = row[lead];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&v) {
                *x = (*x + (p - f) * y) % p;
            }
        }
        self.row_of_col[lead] = self.rows.len() as u32;
        self.rows.push(v);
        Ok(true)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn accepted<B: IncrementalBasis>(mut b: B, vs: &[&[u8]]) -> Vec<bool> {
        vs.iter().map(|v| b.insert(v).unwrap()).collect()
    }

    #[test]
    fn rational_rank_examples() {
        let vs: [&[u8]; 4] = [&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]];
        // Over Q the first three are independent (det = 2).
        assert_eq!(accepted(FractionFreeBasis::<i64>::new(3), &vs), vec![true, true, true, false]);
        assert_eq!(accepted(FractionFreeBasis::<BigInt>::new(3), &vs), vec![true, true, true, false]);
        // Over F_2 the third is the sum of the first two.
        assert_eq!(accepted(PrimeFieldBasis::new(3, 2), &vs), vec![true, true, false, true]);
        assert_eq!(accepted(PrimeFieldBasis::new(3, 3), &vs), vec![true, true, true, false]);
    }

    #[test]
    fn zero_vector_is_dependent() {
        let mut b = FractionFreeBasis::<i64>::new(2);
        assert!(!b.insert(&[0, 0]).unwrap());
        assert_eq!(b.rank(), 0);
    }

    #[test]
    fn gcd_matches() {
        for (a, b) in [(0u64, 5u64), (12, 18), (17, 5), (1 << 40, 1 << 20), (0, 0)] {
            assert_eq!(gcd_u64(a, b), a.gcd(&b));
        }
    }
}
