use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{check_dim, CubePoint, Monomial, Subset, TermOrder};
use crate::rational::{parse_rational, Rational};
use crate::{Error, Result};

/// A polynomial in multilinear normal form: a map from supports to nonzero
/// rational coefficients. Products are reduced with `x_i^2 = x_i`, which is
/// exact as a function on the Boolean cube.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    dim: usize,
    terms: BTreeMap<Subset, Rational>,
}

impl MultilinearPoly {
    pub fn zero(dim: usize) -> Self {
        MultilinearPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::term(dim, Subset::EMPTY, c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    fn term(dim: usize, support: Subset, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(support, c);
        }
        MultilinearPoly { dim, terms }
    }

    /// `c * x_S`.
    pub fn monomial(dim: usize, support: Subset, c: Rational) -> Result<Self> {
        check_dim(dim)?;
        if let Some(top) = support.max_element() {
            if top > dim {
                return Err(Error::IndexOutOfRange { index: top, dim });
            }
        }
        Ok(Self::term(dim, support, c))
    }

    /// `x_j`.
    pub fn variable(dim: usize, j: usize) -> Result<Self> {
        if j == 0 || j > dim {
            return Err(Error::IndexOutOfRange { index: j, dim });
        }
        Ok(Self::term(dim, Subset::EMPTY.with(j), Rational::one()))
    }

    /// Builds a polynomial from `(coefficient, support)` pairs, merging
    /// repeated supports and dropping zero coefficients.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Rational, Subset)>) -> Result<Self> {
        check_dim(dim)?;
        let mut out = MultilinearPoly::zero(dim);
        for (c, s) in terms {
            if let Some(top) = s.max_element() {
                if top > dim {
                    return Err(Error::IndexOutOfRange { index: top, dim });
                }
            }
            out.add_term(s, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, s: Subset, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, s: Subset) -> Rational {
        self.terms.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    /// `(coefficient, support)` pairs in decreasing lex order.
    pub fn terms_lex_desc(&self) -> Vec<(Rational, Subset)> {
        let mut out: Vec<(Rational, Subset)> = self.terms.iter().map(|(s, c)| (c.clone(), *s)).collect();
        out.sort_by_key(|t| std::cmp::Reverse(t.1.lex_key()));
        out
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch { expected: self.dim, found: other.dim })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        MultilinearPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    /// Product reduced by `x_i^2 -> x_i`: supports multiply by union.
    pub fn multiply_reduce(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut out = MultilinearPoly::zero(self.dim);
        for (s, c) in &self.terms {
            for (t, d) in &other.terms {
                out.add_term(s.union(*t), c * d);
            }
        }
        Ok(out)
    }

    /// Exact value at a cube point: the sum of coefficients whose support
    /// lies inside the point's support.
    pub fn evaluate(&self, v: &CubePoint) -> Result<Rational> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        let ones = v.support();
        Ok(self
            .terms
            .iter()
            .filter(|(s, _)| s.is_subset_of(ones))
            .fold(Rational::zero(), |acc, (_, c)| acc + c))
    }

    /// Support of the order-maximal term.
    pub fn leading_support(&self, order: TermOrder) -> Result<Subset> {
        self.terms
            .keys()
            .copied()
            .max_by_key(|&s| order.key(s))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Result<Monomial> {
        Monomial::square_free(self.dim, self.leading_support(order)?)
    }

    pub fn leading_coefficient(&self, order: TermOrder) -> Result<Rational> {
        Ok(self.coefficient(self.leading_support(order)?))
    }

    /// Parses the text form produced by `Display`, e.g. `(1,[1,2]) (-1,[1])`
    /// or `0`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let t = text.trim();
        if t == "0" {
            return Ok(Self::zero(dim));
        }
        let mut terms = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("bad polynomial '{text}'")))?;
            let close = open.find(')').ok_or_else(|| Error::Parse(format!("unclosed term in '{text}'")))?;
            let body = &open[..close];
            let (coef, supp) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad term '({body})'")))?;
            terms.push((parse_rational(coef)?, supp.parse::<Subset>()?));
            rest = open[close + 1..].trim_start();
        }
        Self::from_terms(dim, terms)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms_lex_desc()
            .into_iter()
            .map(|(c, s)| format!("({},{})", c, super::monomial_token(s)))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultilinearPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `prod_{v_i = 1} x_i * prod_{v_i = 0} (1 - x_i)`: equal to 1 at `v` and
/// 0 at every other cube point.
pub fn indicator(v: &CubePoint) -> MultilinearPoly {
    partial_indicator(v.dim(), Subset::prefix(v.dim()), v.support())
}

/// Indicator of `x_j = [j in ones]` for every `j` in `vars`, as a
/// polynomial in `dim` variables. Expands to
/// `sum_{ones <= S <= vars} (-1)^{|S| - |ones|} x_S`.
pub(crate) fn partial_indicator(dim: usize, vars: Subset, ones: Subset) -> MultilinearPoly {
    debug_assert!(ones.is_subset_of(vars));
    let free = vars.difference(ones);
    let mut terms = BTreeMap::new();
    // Enumerate subsets of `free` by the standard submask walk.
    let mut sub = free.0;
    loop {
        let sign = if sub.count_ones().is_multiple_of(2) { 1 } else { -1 };
        terms.insert(Subset(ones.0 | sub), Rational::from_integer(sign.into()));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free.0;
    }
    MultilinearPoly { dim, terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(text: &str, dim: usize) -> MultilinearPoly {
        MultilinearPoly::parse(text, dim).unwrap()
    }

    fn pt(s: &str) -> CubePoint {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p("(1,[1,2]) (-1,[3])", 3).evaluate(&pt("110")).unwrap(), int(1));
        assert_eq!(MultilinearPoly::one(4).evaluate(&pt("1010")).unwrap(), int(1));
        assert_eq!(p("(1,[1]) (1,[2]) (-1,1)", 2).evaluate(&pt("10")).unwrap(), int(0));
        assert!(p("(1,[1])", 2).evaluate(&pt("100")).is_err());
    }

    #[test]
    fn multiply_examples() {
        let x1 = MultilinearPoly::variable(2, 1).unwrap();
        let x2m1 = p("(1,[2]) (-1,1)", 2);
        assert_eq!(x1.multiply_reduce(&x1).unwrap(), x1);
        assert_eq!(x1.multiply_reduce(&x2m1).unwrap(), p("(1,[1,2]) (-1,[1])", 2));
        let x1m1 = p("(1,[1]) (-1,1)", 2);
        assert!(x1m1.multiply_reduce(&x1).unwrap().is_zero());
        assert!(x1.multiply_reduce(&MultilinearPoly::one(3)).is_err());
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(indicator(&pt("10")), p("(-1,[1,2]) (1,[1])", 2));
        let all_zero = indicator(&pt("000"));
        let expected = ["(1,[1])", "(1,[2])", "(1,[3])"]
            .iter()
            .map(|t| p(&format!("(1,1) {}", t.replace("(1,", "(-1,")), 3))
            .try_fold(MultilinearPoly::one(3), |acc, f| acc.multiply_reduce(&f))
            .unwrap();
        assert_eq!(all_zero, expected);

        let sum = PointSetExt::all(2)
            .iter()
            .map(indicator)
            .try_fold(MultilinearPoly::zero(2), |acc, f| acc.add(&f))
            .unwrap();
        assert_eq!(sum, MultilinearPoly::one(2));
    }

    struct PointSetExt;
    impl PointSetExt {
        fn all(n: usize) -> Vec<CubePoint> {
            (0..1u64 << n).map(|c| CubePoint::from_code(n, c)).collect()
        }
    }

    #[test]
    fn leading_monomial_examples() {
        let f = p("(1,[1]) (1,[2,3])", 3);
        assert_eq!(f.leading_monomial(TermOrder::Lex).unwrap().to_string(), "[1]");
        assert_eq!(f.leading_monomial(TermOrder::DegLex).unwrap().to_string(), "[2,3]");
        assert_eq!(MultilinearPoly::constant(3, int(5)).leading_monomial(TermOrder::Lex).unwrap().to_string(), "1");
        assert_eq!(MultilinearPoly::zero(3).leading_monomial(TermOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_is_lex_descending() {
        let f = p("(-1,[3]) (2/3,[1,2]) (1,1)", 3);
        assert_eq!(f.to_string(), "(2/3,[1,2]) (-1,[3]) (1,1)");
    }
}
