use super::WeightSpec;
use crate::cube::{PointSet, MAX_DIM};
use crate::{Error, Result};

/// `S(a, k)`: the 0/1 solutions of `a.v = k`.
///
/// Depth-first over coordinates `n, n-1, ..., 1`, pruning when the residual
/// target is negative or exceeds the total weight of the still-free
/// coordinates. Any modulus on `spec` is ignored.
pub fn gen_linear_sperner(spec: &WeightSpec) -> PointSet {
    let n = spec.dim();
    let a = spec.weights();
    // free_weight[i] = a_1 + ... + a_i
    let mut free_weight = vec![0u128; n + 1];
    for i in 0..n {
        free_weight[i + 1] = free_weight[i] + a[i] as u128;
    }
    let mut codes = Vec::new();
    dfs(a, &free_weight, n, spec.target() as u128, 0, &mut codes);
    PointSet::from_codes_unchecked(n, codes)
}

// Coordinates `i+1..=n` are fixed in `code` (coordinate j at bit n-j).
fn dfs(a: &[u64], free_weight: &[u128], i: usize, residual: u128, code: u64, out: &mut Vec<u64>) {
    if residual > free_weight[i] {
        return;
    }
    if i == 0 {
        // residual <= free_weight[0] = 0
        out.push(code);
        return;
    }
    if residual == 0 {
        out.push(code);
        return;
    }
    let n = a.len();
    let bit = 1u64 << (n - i);
    dfs(a, free_weight, i - 1, residual, code, out);
    let w = a[i - 1] as u128;
    if w <= residual {
        dfs(a, free_weight, i - 1, residual - w, code | bit, out);
    }
}

/// `S_p(a, k)`: cube points with `a.v = k (mod p)`.
pub fn gen_mod_p(spec: &WeightSpec) -> Result<PointSet> {
    let p = spec
        .modulus()
        .ok_or_else(|| Error::InvalidSpec("gen_mod_p needs a modulus 'p='".into()))?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = spec.dim();
    if n > 30 {
        return Err(Error::TooLarge(format!("mod-p enumeration in dimension {n}")));
    }
    let residues: Vec<u64> = spec.weights().iter().map(|&a| a % p).collect();
    let k = spec.target() % p;
    let mut codes = Vec::new();
    // Walk codes in order; the residue of a code is the sum over its bits.
    // Bit b (from the low end) is coordinate n - b.
    for code in 0..1u64 << n {
        let mut r = 0u64;
        let mut c = code;
        while c != 0 {
            let b = c.trailing_zeros() as usize;
            r = (r + residues[n - 1 - b]) % p;
            c &= c - 1;
        }
        if r == k {
            codes.push(code);
        }
    }
    Ok(PointSet::from_codes_unchecked(n, codes))
}

/// All weight-`d` points of `{0,1}^n`, i.e. `S(1, d)`.
pub fn gen_complete_uniform(n: usize, d: usize) -> Result<PointSet> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    if d > n {
        return Err(Error::OutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    Ok(gen_linear_sperner(&WeightSpec::uniform(n, d as u64)?))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> WeightSpec {
        text.parse().unwrap()
    }

    /// Brute force over all 2^n points.
    fn brute(spec: &WeightSpec) -> Vec<String> {
        let n = spec.dim();
        let all = PointSet::full(n).unwrap();
        let mut out: Vec<String> = all
            .iter()
            .filter(|p| {
                let s: u128 = (1..=n).map(|j| p.coord(j) as u128 * spec.weights()[j - 1] as u128).sum();
                match spec.modulus() {
                    None => s == spec.target() as u128,
                    Some(m) => s % m as u128 == spec.target() as u128,
                }
            })
            .map(|p| p.to_string())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn linear_examples() {
        assert_eq!(gen_linear_sperner(&spec("a=1,1,1;k=1")).tokens(), vec!["001", "010", "100"]);
        assert_eq!(gen_linear_sperner(&spec("a=1,2,2;k=3")).tokens(), vec!["101", "110"]);
        assert_eq!(brute(&spec("a=1,2,2;k=3")), vec!["101", "110"]);
        assert!(gen_linear_sperner(&spec("a=1,2;k=4")).is_empty());
        assert_eq!(gen_linear_sperner(&spec("a=5,3,9;k=0")).tokens(), vec!["000"]);
    }

    #[test]
    fn mod_p_examples() {
        assert_eq!(gen_mod_p(&spec("a=1,1,1;k=0;p=2")).unwrap().tokens(), vec!["000", "011", "101", "110"]);
        let four = gen_mod_p(&spec("a=1,1,1,1;k=1;p=5")).unwrap();
        assert_eq!(four.tokens(), brute(&spec("a=1,1,1,1;k=1;p=5")));
        assert_eq!(four.len(), 4);
        assert!(four.iter().all(|p| p.weight() == 1));
        assert_eq!(gen_mod_p(&spec("a=2;k=0;p=2")).unwrap().tokens(), vec!["0", "1"]);
        assert!(gen_mod_p(&spec("a=2;k=0")).is_err());
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(gen_complete_uniform(4, 2).unwrap().len(), 6);
        assert_eq!(gen_complete_uniform(5, 0).unwrap().tokens(), vec!["00000"]);
        assert_eq!(gen_complete_uniform(3, 3).unwrap().tokens(), vec!["111"]);
        assert!(gen_complete_uniform(3, 4).is_err());
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn matches_brute_force_on_mixed_specs() {
        for text in ["a=3,1,2,2,5;k=5", "a=1,1,2,3,5,8;k=8", "a=2,2,2,2;k=3", "a=1,2,3,4,5;k=5"] {
            let s = spec(text);
            let mut got = gen_linear_sperner(&s).tokens();
            got.sort();
            assert_eq!(got, brute(&s), "{text}");
        }
    }
}
