use num_bigint::BigInt;

use crate::cube::{monomials_ascending, PointSet, Subset, TermOrder};
use crate::families::SubsetFamily;
use crate::linalg::{FractionFreeBasis, IncrementalBasis, Overflow, PrimeFieldBasis};
use crate::{Error, Result};

/// Coefficient field for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// Standard monomials of `I(V)` over `Q`.
///
/// Scans all square-free monomials in increasing `order` and accepts a
/// monomial iff its evaluation vector on `V` is linearly independent of the
/// vectors of the monomials accepted before it. The result has exactly
/// `|V|` members.
pub fn standard_monomials_oracle(v: &PointSet, order: TermOrder) -> SubsetFamily {
    SubsetFamily::new(v.dim(), standard_in_order(v, order))
}

/// The oracle over an explicit field; `Field::Prime(p)` needs a prime `p`
/// below `2^32`.
pub fn standard_monomials_over(v: &PointSet, order: TermOrder, field: Field) -> Result<SubsetFamily> {
    let members = match field {
        Field::Rationals => standard_in_order(v, order),
        Field::Prime(p) => {
            if !crate::families::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p >= 1 << 32 {
                return Err(Error::OutOfRange(format!("prime {p} must be below 2^32")));
            }
            greedy(v, order, PrimeFieldBasis::new(v.len(), p)).expect("prime field elimination cannot overflow")
        }
    };
    Ok(SubsetFamily::new(v.dim(), members))
}

/// Standard monomials over `Q` in increasing term order.
pub(crate) fn standard_in_order(v: &PointSet, order: TermOrder) -> Vec<Subset> {
    match greedy(v, order, FractionFreeBasis::<i64>::new(v.len())) {
        Ok(sm) => sm,
        Err(Overflow) => greedy(v, order, FractionFreeBasis::<BigInt>::new(v.len()))
            .expect("arbitrary-precision elimination cannot overflow"),
    }
}

fn greedy<B: IncrementalBasis>(v: &PointSet, order: TermOrder, mut basis: B) -> std::result::Result<Vec<Subset>, Overflow> {
    let supports = v.supports();
    let target = supports.len();
    let mut accepted = Vec::with_capacity(target);
    if target == 0 {
        return Ok(accepted);
    }
    let mut eval = vec![0u8; target];
    for g in monomials_ascending(v.dim(), order) {
        for (e, s) in eval.iter_mut().zip(&supports) {
            *e = g.is_subset_of(*s) as u8;
        }
        if basis.insert(&eval)? {
            accepted.push(g);
            if accepted.len() == target {
                break;
            }
        }
    }
    Ok(accepted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ballot_monomials, gen_complete_uniform};

    #[test]
    fn full_square() {
        let v = PointSet::full(2).unwrap();
        let sm = standard_monomials_oracle(&v, TermOrder::Lex);
        assert_eq!(sm.monomial_tokens(), vec!["1", "[1]", "[1,2]", "[2]"]);
    }

    #[test]
    fn uniform_families_give_ballot_monomials() {
        let v = gen_complete_uniform(3, 1).unwrap();
        let sm = standard_monomials_oracle(&v, TermOrder::Lex);
        assert_eq!(sm.monomial_tokens(), vec!["1", "[2]", "[3]"]);
        assert_eq!(sm, ballot_monomials(3, 1).unwrap());

        let v = gen_complete_uniform(5, 2).unwrap();
        assert_eq!(standard_monomials_oracle(&v, TermOrder::DegLex), ballot_monomials(5, 2).unwrap());
    }

    #[test]
    fn empty_set_has_no_standard_monomials() {
        let v = PointSet::empty(3).unwrap();
        assert!(standard_monomials_oracle(&v, TermOrder::Lex).is_empty());
    }

    #[test]
    fn prime_field_route() {
        let v = gen_complete_uniform(4, 2).unwrap();
        let q = standard_monomials_oracle(&v, TermOrder::Lex);
        for p in [2, 3, 101] {
            assert_eq!(standard_monomials_over(&v, TermOrder::Lex, Field::Prime(p)).unwrap(), q);
        }
        assert!(standard_monomials_over(&v, TermOrder::Lex, Field::Prime(4)).is_err());
    }

    #[test]
    fn bigint_fallback_agrees() {
        let v = PointSet::full(4).unwrap();
        let small = greedy(&v, TermOrder::DegLex, FractionFreeBasis::<i64>::new(v.len())).unwrap();
        let big = greedy(&v, TermOrder::DegLex, FractionFreeBasis::<BigInt>::new(v.len())).unwrap();
        assert_eq!(small, big);
        assert_eq!(small.len(), 16);
    }
}
