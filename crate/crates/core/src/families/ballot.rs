use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::cube::{monomial_token, Subset, MAX_DIM};
use crate::{Error, Result};

/// A set of subsets of `[n]`, kept duplicate-free in sequence order
/// (`[] < [2] < [2,4] < [3]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<Subset>,
}

impl SubsetFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = Subset>) -> Self {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_unstable_by(|a, b| a.cmp_as_sequence(*b));
        members.dedup();
        SubsetFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search_by(|m| m.cmp_as_sequence(s)).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Members rendered as monomial tokens (`1` for the empty set).
    pub fn monomial_tokens(&self) -> Vec<String> {
        self.members.iter().map(|&s| monomial_token(s)).collect()
    }

    /// Members rendered as set tokens (`[]` for the empty set).
    pub fn set_tokens(&self) -> Vec<String> {
        self.members.iter().map(|s| s.to_set_token()).collect()
    }
}

impl Serialize for SubsetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.monomial_tokens())
    }
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// True iff the `i`-th smallest element of `g` is at least `2i` for all `i`.
pub fn is_ballot(g: Subset) -> bool {
    g.iter().enumerate().all(|(i, s)| s >= 2 * (i + 1))
}

/// `M_{d,n}`: ballot subsets of `[n]` with at most `d` elements.
pub fn ballot_monomials(n: usize, d: usize) -> Result<SubsetFamily> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    if 2 * d > n {
        return Err(Error::OutOfRange(format!("ballot degree d = {d} exceeds n/2 for n = {n}")));
    }
    let mut out = Vec::new();
    extend_ballot(n, d, Subset::EMPTY, 0, 1, &mut out);
    // Pre-order DFS already yields sequence order.
    Ok(SubsetFamily { n, members: out })
}

fn extend_ballot(n: usize, d: usize, current: Subset, len: usize, next_min: usize, out: &mut Vec<Subset>) {
    out.push(current);
    if len == d {
        return;
    }
    let lower = next_min.max(2 * (len + 1));
    for s in lower..=n {
        extend_ballot(n, d, current.with(s), len + 1, s + 1, out);
    }
}

/// `t` such that `t_set` belongs to `H_t`, i.e. `|t_set| = t` and `t` is
/// the first index `j` with `s_j < 2j`.
pub fn ht_index(t_set: Subset) -> Option<usize> {
    let t = t_set.len();
    if t == 0 {
        return None;
    }
    let elems = t_set.elements();
    let prefix_ok = elems[..t - 1].iter().enumerate().all(|(i, &s)| s >= 2 * (i + 1));
    (prefix_ok && elems[t - 1] < 2 * t).then_some(t)
}

/// `H_t` as a family of subsets of `[n]`, for `0 < t <= n/2`.
pub fn gen_h_t(n: usize, t: usize) -> Result<SubsetFamily> {
    if t == 0 || 2 * t > n || n > MAX_DIM {
        return Err(Error::OutOfRange(format!("H_t needs 0 < t <= n/2; got t = {t}, n = {n}")));
    }
    let pool: Vec<usize> = (1..=2 * t - 1).collect();
    let mut out = Vec::new();
    search_ht(&pool, t, 0, Subset::EMPTY, 0, &mut out, false);
    Ok(SubsetFamily { n, members: out })
}

/// Depth-first search for `H_t` members drawn from `pool` (ascending). With
/// `first_only`, stops at the first hit, which is the lexicographically
/// smallest one.
fn search_ht(pool: &[usize], t: usize, start: usize, current: Subset, len: usize, out: &mut Vec<Subset>, first_only: bool) -> bool {
    if len == t {
        out.push(current);
        return first_only;
    }
    let i = len + 1;
    for idx in start..pool.len() {
        let s = pool[idx];
        let ok = if i < t { s >= 2 * i } else { s < 2 * t };
        if i == t && s >= 2 * t {
            break;
        }
        if ok && search_ht(pool, t, idx + 1, current.with(s), len + 1, out, first_only) {
            return true;
        }
    }
    false
}

/// For a non-ballot `g`, the smallest `t` and the lexicographically smallest
/// `Y in H_t` with `Y` contained in `g`. `None` iff `g` is ballot.
pub fn find_ht_subset(g: Subset) -> Option<(usize, Subset)> {
    let pool = g.elements();
    (1..=pool.len()).find_map(|t| {
        let mut hit = Vec::new();
        search_ht(&pool, t, 0, Subset::EMPTY, 0, &mut hit, true);
        hit.pop().map(|y| (t, y))
    })
}

fn check_ht_for_bijection(t_set: Subset) -> Result<usize> {
    let t = ht_index(t_set).ok_or_else(|| Error::NotInHt(t_set.to_set_token()))?;
    if t == 1 {
        return Err(Error::OutOfRange("the H_t bijection needs t > 1".into()));
    }
    Ok(t)
}

/// The injection `f: T \ {2t-1} -> [2t-1] \ T` with `f(l) < l`, built
/// inductively: elements `l_1 < l_2 < ...` are mapped in turn to the
/// smallest value in `[1, 2i-1]` not yet used as an `l_j` or an image.
pub fn ht_bijection(t_set: Subset) -> Result<BTreeMap<usize, usize>> {
    let t = check_ht_for_bijection(t_set)?;
    let sources: Vec<usize> = t_set.without(2 * t - 1).elements();
    let mut used = Subset::EMPTY;
    let mut f = BTreeMap::new();
    for (idx, &l) in sources.iter().enumerate() {
        let i = idx + 1;
        used = used.with(l);
        let s = (1..2 * i)
            .find(|&s| !used.contains(s))
            .expect("a free value below 2i exists while l_i >= 2i");
        used = used.with(s);
        f.insert(l, s);
    }
    Ok(f)
}

/// The alternative pairing: write `[2t-2]` as the disjoint union of
/// `T \ {2t-1} = {l_1 < ...}` and `{s_1 < ...}`, then `f(l_i) = s_i`.
pub fn complement_pairing(t_set: Subset) -> Result<BTreeMap<usize, usize>> {
    let t = check_ht_for_bijection(t_set)?;
    let sources = t_set.without(2 * t - 1);
    let targets = Subset::prefix(2 * t - 2).difference(sources);
    Ok(sources.iter().zip(targets.iter()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Subset {
        text.parse().unwrap()
    }

    /// Reference: filter all subsets of [n] by the definition.
    fn ballot_by_filter(n: usize, d: usize) -> Vec<Subset> {
        let mut v: Vec<Subset> = Subset::all(n).filter(|&g| g.len() <= d && is_ballot(g)).collect();
        v.sort_by(|a, b| a.cmp_as_sequence(*b));
        v
    }

    #[test]
    fn ballot_examples() {
        let m42 = ballot_monomials(4, 2).unwrap();
        assert_eq!(m42.set_tokens(), vec!["[]", "[2]", "[2,4]", "[3]", "[3,4]", "[4]"]);
        assert_eq!(m42.len() as u128, binomial(4, 2));
        assert_eq!(ballot_monomials(7, 0).unwrap().set_tokens(), vec!["[]"]);
        let m51 = ballot_monomials(5, 1).unwrap();
        assert_eq!(m51.set_tokens(), vec!["[]", "[2]", "[3]", "[4]", "[5]"]);
        assert!(ballot_monomials(5, 3).is_err());
    }

    #[test]
    fn ballot_generation_matches_filter() {
        for n in 0..=10 {
            for d in 0..=n / 2 {
                assert_eq!(ballot_monomials(n, d).unwrap().members(), ballot_by_filter(n, d).as_slice());
            }
        }
    }

    #[test]
    fn is_ballot_examples() {
        assert!(is_ballot(Subset::EMPTY));
        assert!(!is_ballot(s("[1]")));
        assert!(!is_ballot(s("[2,4,5]")));
        assert!(is_ballot(s("[2,4,6]")));
    }

    #[test]
    fn h_t_examples() {
        assert_eq!(gen_h_t(2, 1).unwrap().set_tokens(), vec!["[1]"]);
        assert_eq!(gen_h_t(4, 2).unwrap().set_tokens(), vec!["[2,3]"]);
        assert_eq!(gen_h_t(6, 3).unwrap().set_tokens(), vec!["[2,4,5]", "[3,4,5]"]);
        assert!(gen_h_t(5, 3).is_err());
        assert!(gen_h_t(5, 0).is_err());
    }

    #[test]
    fn h_t_structure() {
        for t in 1..=6 {
            for y in gen_h_t(2 * t, t).unwrap().members() {
                let e = y.elements();
                assert_eq!(e[t - 1], 2 * t - 1);
                if t > 1 {
                    assert_eq!(e[t - 2], 2 * t - 2);
                }
                assert!(!is_ballot(*y));
                assert!(is_ballot(y.without(2 * t - 1)));
                assert_eq!(ht_index(*y), Some(t));
            }
        }
    }

    #[test]
    fn find_ht_examples() {
        assert_eq!(find_ht_subset(s("[1,5]")), Some((1, s("[1]"))));
        assert_eq!(find_ht_subset(s("[2,3,6]")), Some((2, s("[2,3]"))));
        assert_eq!(find_ht_subset(s("[2,4,6]")), None);
    }

    #[test]
    fn find_ht_iff_not_ballot_exhaustive() {
        for g in Subset::all(12) {
            match find_ht_subset(g) {
                None => assert!(is_ballot(g)),
                Some((t, y)) => {
                    assert!(!is_ballot(g));
                    assert!(y.is_subset_of(g));
                    assert_eq!(ht_index(y), Some(t));
                }
            }
        }
    }

    #[test]
    fn find_ht_tie_breaking() {
        assert_eq!(find_ht_subset(s("[2,3,4,5]")), Some((2, s("[2,3]"))));
        assert_eq!(find_ht_subset(s("[2,4,5]")), Some((3, s("[2,4,5]"))));
        assert_eq!(find_ht_subset(s("[2,3,4,5,6,7]")), Some((2, s("[2,3]"))));
        assert_eq!(find_ht_subset(s("[3,4,5,8]")), Some((3, s("[3,4,5]"))));
        assert_eq!(find_ht_subset(s("[2,3,4,5,7]")).map(|(t, _)| t), Some(2));
    }

    #[test]
    fn bijection_examples() {
        let b = |text: &str| ht_bijection(s(text)).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(b("[2,3]"), vec![(2, 1)]);
        assert_eq!(b("[2,4,5]"), vec![(2, 1), (4, 3)]);
        assert_eq!(b("[3,4,5]"), vec![(3, 1), (4, 2)]);
        assert!(ht_bijection(s("[1]")).is_err());
        assert!(ht_bijection(s("[2,4]")).is_err());
    }

    #[test]
    fn both_constructions_are_valid_bijections() {
        for t in 2..=6 {
            for &y in gen_h_t(2 * t, t).unwrap().members() {
                let targets = Subset::prefix(2 * t - 1).difference(y);
                for f in [ht_bijection(y).unwrap(), complement_pairing(y).unwrap()] {
                    assert_eq!(f.len(), t - 1);
                    let image = Subset::from_elements(f.values().copied()).unwrap();
                    assert_eq!(image, targets);
                    assert!(f.iter().all(|(&l, &v)| v < l));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
