use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cube::PointSet;
use crate::families::{gen_linear_sperner, WeightSpec};
use crate::linalg::{feasible_point, nullspace, Inequality};
use crate::rational::{common_denominator, primitive_integer_vector, Rational};
use crate::{Error, Result};

/// Largest dimension accepted by the linearity decision, which looks at
/// every point outside the set.
pub const MAX_LINEARITY_DIM: usize = 12;

/// Integer basis of the weight vectors `a` (any sign) for which `a . v`
/// is the same for every `v` in the set.
pub fn weight_nullspace(v: &PointSet) -> Result<Vec<Vec<BigInt>>> {
    let first = v.iter().next().ok_or(Error::EmptyPointSet)?;
    let base = first.coords();
    let rows: Vec<Vec<Rational>> = v
        .iter()
        .skip(1)
        .map(|p| {
            p.coords()
                .iter()
                .zip(&base)
                .map(|(&x, &y)| Rational::from_integer(BigInt::from(x as i64 - y as i64)))
                .collect()
        })
        .collect();
    Ok(nullspace(rows, v.dim())
        .iter()
        .map(|b| primitive_integer_vector(b))
        .collect())
}

/// A weight vector with every entry at least 1 that is constant on the
/// set, or `None` if the set lies in no hyperplane `a . x = k` with
/// positive `a`.
pub fn positive_weight_fit(v: &PointSet) -> Result<Option<Vec<Rational>>> {
    let basis = weight_nullspace(v)?;
    Ok(fit_in_basis(&basis, v.dim())?.map(|lambda| combine(&basis, &lambda, v.dim()).into_iter().map(Rational::from_integer).collect()))
}

/// Integer coefficients `L` with `sum_j L_j basis_j >= 1` coordinatewise.
fn fit_in_basis(basis: &[Vec<BigInt>], n: usize) -> Result<Option<Vec<BigInt>>> {
    if basis.is_empty() {
        return Ok(None);
    }
    let system: Vec<Inequality> = (0..n)
        .map(|i| {
            let coeffs = basis.iter().map(|b| Rational::from_integer(b[i].clone())).collect();
            Inequality::new(coeffs, Rational::one())
        })
        .collect();
    let Some(lambda) = feasible_point(&system, basis.len())? else {
        return Ok(None);
    };
    let den = Rational::from_integer(common_denominator(&lambda));
    Ok(Some(lambda.iter().map(|x| (x * &den).to_integer()).collect()))
}

fn combine(basis: &[Vec<BigInt>], lambda: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|i| basis.iter().zip(lambda).map(|(b, l)| &b[i] * l).sum())
        .collect()
}

fn dot(x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Decides whether the set equals `S(a, k)` for some positive integer
/// weights, returning such a spec (verified by regenerating the set).
pub fn is_linear_sperner(v: &PointSet) -> Result<Option<WeightSpec>> {
    let n = v.dim();
    if n > MAX_LINEARITY_DIM {
        return Err(Error::TooLarge(format!(
            "linearity check is limited to n <= {MAX_LINEARITY_DIM}, got n = {n}"
        )));
    }
    let basis = weight_nullspace(v)?;
    if n == 0 {
        return Ok(Some(WeightSpec::new(Vec::new(), 0)?));
    }
    let Some(lambda0) = fit_in_basis(&basis, n)? else {
        return Ok(None);
    };
    let base: Vec<i64> = v.iter().next().expect("nonempty").coords().iter().map(|&c| c as i64).collect();

    // A point u outside the set is excluded by a = sum L_j b_j exactly when
    // g_u . L != 0, with g_u[j] = (u - base) . b_j.
    let outside: Vec<Vec<BigInt>> = (0..1u64 << n)
        .filter(|code| v.codes().binary_search(code).is_err())
        .map(|code| {
            let diff: Vec<BigInt> = (0..n)
                .map(|i| BigInt::from(((code >> (n - 1 - i)) & 1) as i64 - base[i]))
                .collect();
            basis.iter().map(|b| dot(&diff, b)).collect()
        })
        .collect();
    if outside.iter().any(|g: &Vec<BigInt>| g.iter().all(Zero::is_zero)) {
        return Ok(None);
    }

    // Direction along the moment curve missing every hyperplane g_u = 0.
    let r = basis.len();
    let direction = (1u64..)
        .map(|s| {
            let mut d = Vec::with_capacity(r);
            let mut power = BigInt::one();
            for _ in 0..r {
                d.push(power.clone());
                power *= s;
            }
            d
        })
        .find(|d| outside.iter().all(|g| !dot(g, d).is_zero()))
        .expect("a nonzero polynomial has finitely many roots");

    // L(q) = c q L0 + d stays in the positive cone; each outside point
    // vanishes for at most one q.
    let a0 = combine(&basis, &lambda0, n);
    let ad = combine(&basis, &direction, n);
    let c = ad.iter().map(|x| x.abs()).max().unwrap_or_default() + 1;
    let lambda = std::iter::once(lambda0.clone())
        .chain((1u64..).map(|q| {
            let scale = &c * q;
            lambda0.iter().zip(&direction).map(|(l, d)| l * &scale + d).collect::<Vec<_>>()
        }))
        .find(|l| outside.iter().all(|g| !dot(g, l).is_zero()))
        .expect("finitely many bad scales");
    debug_assert!(a0.iter().all(|x| x.is_positive()));

    let a = combine(&basis, &lambda, n);
    let g = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let weights: Option<Vec<u64>> = a.iter().map(|x| (x / &g).to_u64()).collect();
    let Some(weights) = weights else {
        return Err(Error::TooLarge("weight vector does not fit in 64 bits".into()));
    };
    let target = weights.iter().zip(&base).map(|(&w, &b)| w * b as u64).sum();
    let spec = WeightSpec::new(weights, target)?;
    assert_eq!(&gen_linear_sperner(&spec), v, "weight vector {spec} does not reproduce the set");
    Ok(Some(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_complete_uniform;

    fn pts(text: &str) -> PointSet {
        PointSet::parse(text, None).unwrap()
    }

    fn satisfies(v: &PointSet, a: &[Rational]) -> bool {
        let values: Vec<Rational> = v
            .iter()
            .map(|p| p.coords().iter().zip(a).filter(|(&c, _)| c == 1).map(|(_, w)| w.clone()).sum())
            .collect();
        a.iter().all(|w| w.is_positive()) && values.windows(2).all(|w| w[0] == w[1])
    }

    #[test]
    fn two_point_fit() {
        let v = pts("110,101");
        let a = positive_weight_fit(&v).unwrap().unwrap();
        assert!(satisfies(&v, &a));
        // a_2 = a_3 on every solution
        for b in weight_nullspace(&v).unwrap() {
            assert_eq!(b[1], b[2]);
        }
        let spec = is_linear_sperner(&v).unwrap().unwrap();
        assert_eq!(gen_linear_sperner(&spec), v);
    }

    #[test]
    fn comparable_pair_has_no_fit() {
        let v = pts("100,110");
        assert_eq!(positive_weight_fit(&v).unwrap(), None);
        assert_eq!(is_linear_sperner(&v).unwrap(), None);
    }

    #[test]
    fn first_five_points_force_equal_weights() {
        let v = pts("11000,10100,10010,10001,01100");
        for b in weight_nullspace(&v).unwrap() {
            assert!(b[..5].iter().all(|x| *x == b[0]));
        }
        // The full family is not linear: it would need a_1 = ... = a_5
        // and then 00111 has the wrong weight.
        let t = pts("11000,10100,10010,10001,01100,00111");
        assert!(positive_weight_fit(&t).unwrap().is_none());
    }

    #[test]
    fn uniform_and_single_points() {
        let u = gen_complete_uniform(4, 2).unwrap();
        let spec = is_linear_sperner(&u).unwrap().unwrap();
        assert_eq!(gen_linear_sperner(&spec), u);
        let zero = pts("0000");
        assert_eq!(is_linear_sperner(&zero).unwrap().unwrap().target(), 0);
        let single = pts("1011");
        assert_eq!(gen_linear_sperner(&is_linear_sperner(&single).unwrap().unwrap()), single);
    }

    #[test]
    fn contained_but_not_equal() {
        // Forces a_1 = a_3, and 101 is excluded only when a_2 != a_1.
        let v = pts("110,011");
        let spec = is_linear_sperner(&v).unwrap().unwrap();
        assert_eq!(gen_linear_sperner(&spec), v);
        let v = pts("1100,0011");
        assert!(is_linear_sperner(&v).unwrap().is_some());
        let v = pts("1000,0100,0010,0001,1100");
        assert!(is_linear_sperner(&v).unwrap().is_none());
    }

    #[test]
    fn errors() {
        assert!(matches!(is_linear_sperner(&PointSet::empty(3).unwrap()), Err(Error::EmptyPointSet)));
        let big = PointSet::parse("0000000000000", None).unwrap();
        assert!(matches!(is_linear_sperner(&big), Err(Error::TooLarge(_))));
    }
}
