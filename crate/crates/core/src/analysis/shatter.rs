use std::collections::HashSet;

use crate::cube::{PointSet, Subset};

/// Whether every `Y` contained in `s` occurs as a trace `F & s`.
pub fn shatters(v: &PointSet, s: Subset) -> bool {
    let needed = 1u128 << s.len();
    if (v.len() as u128) < needed {
        return false;
    }
    let traces: HashSet<u64> = v.iter().map(|p| p.support().intersection(s).bits()).collect();
    traces.len() as u128 == needed
}

/// Smallest `l` such that no `l`-subset of `[n]` is shattered: one more
/// than the VC dimension, and 0 for the empty family (which shatters
/// nothing, not even the empty set).
pub fn min_unshattered_size(v: &PointSet) -> usize {
    if v.is_empty() {
        return 0;
    }
    let n = v.dim();
    // Shattered sets are closed under taking subsets, so scan upwards.
    (1..=n)
        .find(|&l| !Subset::k_subsets(n, l).any(|s| shatters(v, s)))
        .unwrap_or(n + 1)
}

/// True iff no member's support strictly contains another's.
pub fn is_antichain(v: &PointSet) -> bool {
    let supports = v.supports();
    supports.iter().enumerate().all(|(i, &a)| {
        supports
            .iter()
            .enumerate()
            .all(|(j, &b)| i == j || !a.is_subset_of(b))
    })
}
