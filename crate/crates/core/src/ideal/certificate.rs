use num_traits::{One, Zero};

use super::standard_in_order;
use crate::cube::{compare_subsets, Monomial, MultilinearPoly, PointSet, Subset, TermOrder};
use crate::families::{gen_linear_sperner, ht_index, WeightSpec};
use crate::linalg::solve;
use crate::rational::Rational;
use crate::{Error, Result};

/// A polynomial vanishing on `V` whose leading monomial is `m`, normalised
/// to leading coefficient 1.
///
/// `m` must be square-free and non-standard. The certificate is
/// `x_m - sum c_b x_b`, where the `x_b` are the standard monomials below
/// `m` and the `c_b` express the evaluation vector of `x_m` on `V` in
/// theirs.
pub fn vanishing_certificate(v: &PointSet, m: &Monomial, order: TermOrder) -> Result<MultilinearPoly> {
    let n = v.dim();
    if m.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.dim() });
    }
    if !m.is_square_free() {
        return Err(Error::NotSquareFree(m.to_string()));
    }
    let target = m.support();
    let standard = standard_in_order(v, order);
    if standard.contains(&target) {
        return Err(Error::MonomialIsStandard(m.to_string()));
    }
    let below: Vec<Subset> = standard
        .into_iter()
        .filter(|&b| compare_subsets(order, b, target).is_lt())
        .collect();
    let supports = v.supports();
    let eval = |g: Subset, s: Subset| if g.is_subset_of(s) { Rational::one() } else { Rational::zero() };
    // One equation per point, one unknown per smaller standard monomial.
    let a: Vec<Vec<Rational>> = supports.iter().map(|&s| below.iter().map(|&b| eval(b, s)).collect()).collect();
    let rhs: Vec<Rational> = supports.iter().map(|&s| eval(target, s)).collect();
    let coeffs = solve(&a, &rhs, below.len())
        .expect("a non-standard monomial lies in the span of the smaller standard ones");
    let terms = std::iter::once((Rational::one(), target)).chain(below.into_iter().zip(coeffs).map(|(b, c)| (-c, b)));
    MultilinearPoly::from_terms(n, terms)
}

/// `prod_{i in Y} x_i * prod_{j in S \ Y} (x_j - 1)`: vanishes wherever the
/// trace on `S` differs from `Y`; its leading monomial is `x_S` in every
/// term order.
pub fn shatter_polynomial(dim: usize, s: Subset, y: Subset) -> Result<MultilinearPoly> {
    if !y.is_subset_of(s) {
        return Err(Error::NotSubset(y.to_set_token(), s.to_set_token()));
    }
    let mut out = MultilinearPoly::one(dim);
    for j in s.iter() {
        let xj = MultilinearPoly::variable(dim, j)?;
        let factor = if y.contains(j) { xj } else { xj.sub(&MultilinearPoly::one(dim))? };
        out = out.multiply_reduce(&factor)?;
    }
    Ok(out)
}

struct QParts {
    n: usize,
    t_set: Subset,
    p: MultilinearPoly,
}

/// Validates the inputs and builds `P`: the function on the suffix
/// coordinates `x_{2t}, ..., x_n` that is 0 on `U_0` and 1 elsewhere, where
/// `U_0` collects suffixes of points of `S(a, k)` that vanish on `T`.
fn q_parts(spec: &WeightSpec, t_set: Subset) -> Result<QParts> {
    let n = spec.dim();
    if !spec.is_ascending() {
        return Err(Error::InvalidSpec(format!("weights of {spec} are not ascending")));
    }
    let t = ht_index(t_set).ok_or_else(|| Error::NotInHt(t_set.to_set_token()))?;
    if t == 1 {
        return Err(Error::OutOfRange("t = 1: use a.x - k, whose lex leading monomial is x_1".into()));
    }
    if 2 * t > n {
        return Err(Error::OutOfRange(format!("T = {t_set} needs t <= n/2 for n = {n}")));
    }
    let s = gen_linear_sperner(&spec.without_modulus());
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let suffix = Subset::prefix(n).difference(Subset::prefix(2 * t - 1));
    let mut u0: Vec<Subset> = s
        .iter()
        .map(|v| v.support())
        .filter(|sup| sup.intersection(t_set).is_empty())
        .map(|sup| sup.intersection(suffix))
        .collect();
    u0.sort_unstable();
    u0.dedup();
    let mut p = MultilinearPoly::one(n);
    for u in u0 {
        p = p.sub(&crate::cube::poly::partial_indicator(n, suffix, u))?;
    }
    Ok(QParts { n, t_set, p })
}

/// `Q = prod_{i in T} (x_i - P(x_{2t}, ..., x_n))` for `T in H_t`, `t > 1`:
/// vanishes on `S(a, k)` and has lex leading monomial `x_T`.
pub fn construct_q(spec: &WeightSpec, t_set: Subset) -> Result<MultilinearPoly> {
    let QParts { n, t_set, p } = q_parts(spec, t_set)?;
    let mut q = MultilinearPoly::one(n);
    for i in t_set.iter() {
        q = q.multiply_reduce(&MultilinearPoly::variable(n, i)?.sub(&p)?)?;
    }
    Ok(q)
}

/// The same function written as `x_T + (prod_{i in T}(x_i - 1) - x_T) P`,
/// which agrees with [`construct_q`] on the cube because `P^2 = P` there.
pub fn construct_q_alternative(spec: &WeightSpec, t_set: Subset) -> Result<MultilinearPoly> {
    let QParts { n, t_set, p } = q_parts(spec, t_set)?;
    let x_t = MultilinearPoly::monomial(n, t_set, Rational::one())?;
    let all_minus_one = shatter_polynomial(n, t_set, Subset::EMPTY)?;
    x_t.add(&all_minus_one.sub(&x_t)?.multiply_reduce(&p)?)
}

/// Evaluates `poly` on every point of `v`; true iff all values are zero.
pub fn vanishes_on(poly: &MultilinearPoly, v: &PointSet) -> Result<bool> {
    for point in v.iter() {
        if !poly.evaluate(&point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
