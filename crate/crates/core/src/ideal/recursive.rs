use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cube::point::split_codes;
use crate::cube::{PointSet, Subset};
use crate::families::SubsetFamily;
use crate::par::{self, Execution};

type Memo = Mutex<HashMap<(usize, Vec<u64>), Arc<Vec<u64>>>>;

/// Fibre sizes below this run both halves on the current thread.
const JOIN_THRESHOLD: usize = 128;

/// Lex standard monomials by recursion on the last coordinate:
/// `sm(V) = sm(V_0) | sm(V_1) | { m x_n : m in sm(V_0) & sm(V_1) }`.
pub fn lex_standard_monomials_recursive(v: &PointSet) -> SubsetFamily {
    lex_standard_monomials_recursive_with(v, Execution::Sequential)
}

/// As [`lex_standard_monomials_recursive`], optionally evaluating the two
/// fibres concurrently. The memo lives for this call only.
pub fn lex_standard_monomials_recursive_with(v: &PointSet, exec: Execution) -> SubsetFamily {
    let memo: Memo = Mutex::new(HashMap::new());
    let masks = recurse(v.dim(), v.codes(), &memo, exec);
    SubsetFamily::new(v.dim(), masks.iter().map(|&m| Subset(m)))
}

/// Standard monomials (as masks, ascending) of the points `codes` in
/// `{0,1}^dim`.
fn recurse(dim: usize, codes: &[u64], memo: &Memo, exec: Execution) -> Arc<Vec<u64>> {
    if codes.is_empty() {
        return Arc::new(Vec::new());
    }
    if dim == 0 {
        // V = {()}: the constants.
        return Arc::new(vec![0]);
    }
    let key = (dim, codes.to_vec());
    if let Some(hit) = memo.lock().expect("memo poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let (zero, one) = split_codes(codes);
    let (sm0, sm1) = if codes.len() >= JOIN_THRESHOLD {
        par::join(exec, || recurse(dim - 1, &zero, memo, exec), || recurse(dim - 1, &one, memo, exec))
    } else {
        (recurse(dim - 1, &zero, memo, exec), recurse(dim - 1, &one, memo, exec))
    };
    let last = 1u64 << (dim - 1);
    let mut out: Vec<u64> = Vec::with_capacity(sm0.len() + sm1.len());
    let (mut i, mut j) = (0, 0);
    let mut both = Vec::new();
    while i < sm0.len() || j < sm1.len() {
        match (sm0.get(i), sm1.get(j)) {
            (Some(&a), Some(&b)) if a == b => {
                out.push(a);
                both.push(a | last);
                i += 1;
                j += 1;
            }
            (Some(&a), Some(&b)) if a < b => {
                out.push(a);
                i += 1;
            }
            (Some(_), Some(&b)) => {
                out.push(b);
                j += 1;
            }
            (Some(&a), None) => {
                out.push(a);
                i += 1;
            }
            (None, Some(&b)) => {
                out.push(b);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    // Masks in `both` carry bit dim-1, above every mask of the fibres.
    out.extend(both);
    let out = Arc::new(out);
    memo.lock().expect("memo poisoned").insert(key, Arc::clone(&out));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_linear_sperner, WeightSpec};

    #[test]
    fn example_family() {
        let spec: WeightSpec = "a=1,1,1,1,2;k=2".parse().unwrap();
        let sm = lex_standard_monomials_recursive(&gen_linear_sperner(&spec));
        assert_eq!(sm.len(), 7);
        assert_eq!(sm.monomial_tokens(), vec!["1", "[2]", "[2,4]", "[3]", "[3,4]", "[4]", "[5]"]);
    }

    #[test]
    fn single_point_and_full_cube() {
        let v = PointSet::parse("1111", None).unwrap();
        assert_eq!(lex_standard_monomials_recursive(&v).monomial_tokens(), vec!["1"]);
        let full = PointSet::full(3).unwrap();
        assert_eq!(lex_standard_monomials_recursive(&full).len(), 8);
        assert!(lex_standard_monomials_recursive(&PointSet::empty(3).unwrap()).is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec: WeightSpec = "a=1,1,2,2,3,3,4,4,5;k=9".parse().unwrap();
        let v = gen_linear_sperner(&spec);
        assert_eq!(
            lex_standard_monomials_recursive_with(&v, Execution::Parallel),
            lex_standard_monomials_recursive_with(&v, Execution::Sequential)
        );
    }
}
