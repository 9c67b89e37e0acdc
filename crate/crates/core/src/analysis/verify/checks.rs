use std::collections::BTreeSet;

use super::instances::{EngineInstance, FamilyInstance, HtInstance, Instance};
use super::Suite;
use crate::analysis::report::{InstanceRecord, Outcome, Witness, WitnessKind};
use crate::analysis::{min_unshattered_size, shatters};
use crate::cube::{Monomial, PointSet, Subset, TermOrder};
use crate::families::{ballot_monomials, binomial, gen_h_t, ht_bijection, ht_index, is_ballot};
use crate::ideal::{lex_standard_monomials_recursive_with, lexgame_winner, standard_monomials_oracle, Player};
use crate::par::Execution;
use crate::{Error, Result};

/// Outcome of one instance: its table row and, on failure, a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checked {
    pub record: InstanceRecord,
    pub witness: Option<Witness>,
}

struct Eval {
    outcome: Outcome,
    size: Option<usize>,
    bound: Option<u64>,
    failure: Option<WitnessKind>,
}

impl Eval {
    fn not_met(size: Option<usize>) -> Self {
        Eval { outcome: Outcome::HypothesisNotMet, size, bound: None, failure: None }
    }

    fn judged(size: Option<usize>, bound: Option<u64>, failure: Option<WitnessKind>) -> Self {
        let outcome = if failure.is_some() { Outcome::Fail } else { Outcome::Pass };
        Eval { outcome, size, bound, failure }
    }
}

/// Checks one instance against a suite's statement. Failing family and
/// engine instances are shrunk greedily (points removed while the failure
/// persists) before the witness is built, except for suites whose
/// statement is about one exact family.
pub fn check_instance(suite: Suite, inst: &Instance) -> Result<Checked> {
    match (suite, inst) {
        (Suite::TheoremMain, Instance::Family(f)) => check_family(f, theorem_main, true),
        (Suite::CorollaryBound, Instance::Family(f)) => check_family(f, corollary_bound, false),
        (Suite::FranklLinear, Instance::Family(f)) => check_family(f, frankl, true),
        (Suite::Pelda, Instance::Family(f)) => check_family(f, closed_form, false),
        (Suite::ModP, Instance::Family(f)) => check_family(f, modular, true),
        (Suite::LemmaHt, Instance::Ht(h)) => check_ht(h),
        (Suite::Engines, Instance::Engines(e)) => check_engines(e),
        _ => Err(Error::InvalidSpec(format!("instance {} does not belong to suite {suite}", inst.label()))),
    }
}

fn record(n: usize, params: &str, eval: &Eval, witness: Option<&Witness>) -> InstanceRecord {
    InstanceRecord {
        n,
        params: params.to_string(),
        outcome: eval.outcome,
        size: eval.size,
        bound: eval.bound,
        witness: witness.map(Witness::summary),
    }
}

fn bound_u64(value: u128) -> Option<u64> {
    u64::try_from(value).ok()
}

fn check_family(f: &FamilyInstance, eval: fn(&FamilyInstance) -> Result<Eval>, shrink: bool) -> Result<Checked> {
    let first = eval(f)?;
    let witness = if first.outcome == Outcome::Fail {
        let mut current = f.clone();
        let mut kind = first.failure.clone();
        if shrink {
            let mut i = 0;
            while i < current.points.len() {
                let candidate = current.with_points(current.points.without_index(i));
                let e = eval(&candidate)?;
                if e.outcome == Outcome::Fail {
                    current = candidate;
                    kind = e.failure;
                } else {
                    i += 1;
                }
            }
        }
        Some(Witness {
            instance: f.label.clone(),
            points: current.points,
            kind: kind.expect("failing evaluations carry a witness"),
        })
    } else {
        None
    };
    Ok(Checked { record: record(f.spec.dim(), &f.label, &first, witness.as_ref()), witness })
}

fn lex_sm(points: &PointSet) -> Vec<Subset> {
    standard_monomials_oracle(points, TermOrder::Lex).members().to_vec()
}

fn theorem_main(f: &FamilyInstance) -> Result<Eval> {
    if !f.spec.is_ascending() {
        return Ok(Eval::not_met(None));
    }
    let n = f.spec.dim() as u64;
    let k = f.spec.target();
    let sm = lex_sm(&f.points);
    let failure = sm
        .iter()
        .find(|m| !is_ballot(**m))
        .map(|&monomial| WitnessKind::StandardNotBallot { monomial })
        .or_else(|| {
            sm.iter()
                .find(|m| m.len() as u64 > k)
                .map(|&monomial| WitnessKind::DegreeAboveTarget { monomial, target: k })
        });
    let bound = (2 * k <= n).then(|| binomial(n, k)).and_then(bound_u64);
    Ok(Eval::judged(Some(sm.len()), bound, failure))
}

fn corollary_bound(f: &FamilyInstance) -> Result<Eval> {
    let n = f.spec.dim() as u64;
    let k = f.spec.target();
    if 2 * k > n || !f.spec.is_ascending() {
        return Ok(Eval::not_met(Some(f.points.len())));
    }
    let bound = binomial(n, k);
    let failure = (f.points.len() as u128 > bound).then_some(WitnessKind::SizeAboveBound { k });
    Ok(Eval::judged(Some(f.points.len()), bound_u64(bound), failure))
}

fn frankl(f: &FamilyInstance) -> Result<Eval> {
    let n = f.points.dim();
    let ell = min_unshattered_size(&f.points);
    if ell == 0 || 2 * ell > n {
        return Ok(Eval::not_met(Some(f.points.len())));
    }
    let bound = binomial(n as u64, ell as u64 - 1);
    let failure = (f.points.len() as u128 > bound).then_some(WitnessKind::ShatterBoundExceeded { ell });
    Ok(Eval::judged(Some(f.points.len()), bound_u64(bound), failure))
}

/// `t` when the weights are `(1, ..., 1, t)` with `1 <= t <= k <= (n-1)/2`.
fn closed_form_parameter(weights: &[u64], k: u64) -> Option<u64> {
    let (&t, rest) = weights.split_last()?;
    let n = weights.len() as u64;
    (rest.iter().all(|&w| w == 1) && 1 <= t && t <= k && 2 * k < n).then_some(t)
}

/// `M_{k,n-1}` together with `m x_n` for `m` in `M_{k-t,n-1}`.
fn closed_form_family(n: usize, t: u64, k: u64) -> Result<BTreeSet<Subset>> {
    let mut out: BTreeSet<Subset> = ballot_monomials(n - 1, k as usize)?.members().iter().copied().collect();
    for m in ballot_monomials(n - 1, (k - t) as usize)?.members() {
        out.insert(m.with(n));
    }
    Ok(out)
}

fn closed_form_predicts(n: usize, t: u64, k: u64, m: Subset) -> bool {
    if m.contains(n) {
        let rest = m.without(n);
        is_ballot(rest) && rest.len() as u64 + t <= k
    } else {
        is_ballot(m) && m.len() as u64 <= k
    }
}

fn closed_form(f: &FamilyInstance) -> Result<Eval> {
    let k = f.spec.target();
    let Some(t) = closed_form_parameter(f.spec.weights(), k) else {
        return Ok(Eval::not_met(None));
    };
    let n = f.spec.dim();
    let computed: BTreeSet<Subset> = lex_sm(&f.points).into_iter().collect();
    let predicted = closed_form_family(n, t, k)?;
    let mut diff: Vec<Subset> = computed.symmetric_difference(&predicted).copied().collect();
    diff.sort_by(|a, b| a.cmp_as_sequence(*b));
    let failure = diff.first().map(|&monomial| WitnessKind::ClosedFormMismatch { monomial, t, k });
    Ok(Eval::judged(Some(computed.len()), Some(predicted.len() as u64), failure))
}

fn weight_of(weights: &[u64], s: Subset) -> u64 {
    s.iter().map(|i| weights[i - 1]).sum()
}

fn modular(f: &FamilyInstance) -> Result<Eval> {
    let Some(p) = f.spec.modulus() else {
        return Ok(Eval::not_met(Some(f.points.len())));
    };
    if !f.spec.is_ascending() {
        return Ok(Eval::not_met(Some(f.points.len())));
    }
    let n = f.spec.dim();
    let weights = f.spec.weights();
    let mut candidates = Vec::new();
    for t in 1..=n / 2 {
        for &t_set in gen_h_t(n, t)?.members() {
            if weight_of(weights, t_set) < p {
                candidates.push(t_set);
            }
        }
    }
    if candidates.is_empty() {
        return Ok(Eval::not_met(Some(f.points.len())));
    }
    let sm: BTreeSet<Subset> = lex_sm(&f.points).into_iter().collect();
    let failure = candidates.into_iter().find(|t| sm.contains(t)).map(|t_set| WitnessKind::ModularLeading {
        t_set,
        weights: weights.to_vec(),
        modulus: p,
    });
    Ok(Eval::judged(Some(f.points.len()), None, failure))
}

/// The three sums of the weight inequality for `T` in `H_t`:
/// over `[2t-1] \ T`, over `T \ {2t-1}`, and over `T`.
fn ht_sums(t_set: Subset, weights: &[u64]) -> Option<(u64, u64, u64)> {
    let t = ht_index(t_set)?;
    let top = 2 * t - 1;
    if top > weights.len() {
        return None;
    }
    let left = weight_of(weights, Subset::prefix(top).difference(t_set));
    Some((left, weight_of(weights, t_set.without(top)), weight_of(weights, t_set)))
}

/// Whether `ht_bijection` maps onto `[2t-1] \ T` with `f(l) < l` and
/// `a_f(l) <= a_l` for every `l`.
fn dominated_by_bijection(t_set: Subset, weights: &[u64]) -> Result<bool> {
    let t = ht_index(t_set).ok_or_else(|| Error::NotInHt(t_set.to_set_token()))?;
    let f = ht_bijection(t_set)?;
    let image: Subset = f.values().fold(Subset::EMPTY, |acc, &s| acc.with(s));
    let onto = image == Subset::prefix(2 * t - 1).difference(t_set) && f.len() == t - 1;
    Ok(onto && f.iter().all(|(&l, &s)| s < l && weights[s - 1] <= weights[l - 1]))
}

fn ht_holds(t_set: Subset, weights: &[u64]) -> Result<bool> {
    let (left, middle, right) =
        ht_sums(t_set, weights).ok_or_else(|| Error::NotInHt(t_set.to_set_token()))?;
    Ok(left <= middle && middle < right && dominated_by_bijection(t_set, weights)?)
}

fn check_ht(h: &HtInstance) -> Result<Checked> {
    let t = ht_index(h.t_set).ok_or_else(|| Error::NotInHt(h.t_set.to_set_token()))?;
    if t < 2 || 2 * t > h.n {
        let eval = Eval::not_met(Some(h.weights.len()));
        let label = format!("T={}", h.t_set.to_set_token());
        return Ok(Checked { record: record(h.n, &label, &eval, None), witness: None });
    }
    let mut failure = None;
    for w in &h.weights {
        if w.len() != h.n {
            return Err(Error::DimensionMismatch { expected: h.n, found: w.len() });
        }
        if !ht_holds(h.t_set, w)? {
            failure = Some(WitnessKind::HtViolation { t_set: h.t_set, weights: w.clone() });
            break;
        }
    }
    let eval = Eval::judged(Some(h.weights.len()), None, failure);
    let label = format!("T={}", h.t_set.to_set_token());
    let witness = eval.failure.clone().map(|kind| Witness {
        instance: label.clone(),
        points: PointSet::from_codes_unchecked(h.n, Vec::new()),
        kind,
    });
    Ok(Checked { record: record(h.n, &label, &eval, witness.as_ref()), witness })
}

fn game_says_standard(points: &PointSet, m: Subset) -> Result<bool> {
    Ok(lexgame_winner(points, &Monomial::square_free(points.dim(), m)?)? == Player::Stan)
}

/// First square-free monomial on which the three engines disagree.
fn engine_disagreement(points: &PointSet, recursion_points: &PointSet) -> Result<Option<Subset>> {
    let oracle = standard_monomials_oracle(points, TermOrder::Lex);
    let recursion = lex_standard_monomials_recursive_with(recursion_points, Execution::Sequential);
    for m in Subset::all(points.dim()) {
        let a = oracle.contains(m);
        let b = recursion.contains(m);
        let c = game_says_standard(points, m)?;
        if a != b || b != c {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn engines_eval(e: &EngineInstance) -> Result<Eval> {
    let recursion_points = e.recursion_points()?;
    let failure = engine_disagreement(&e.points, &recursion_points)?
        .map(|monomial| WitnessKind::EnginesDisagree { monomial, recursion_points });
    Ok(Eval::judged(Some(e.points.len()), None, failure))
}

fn check_engines(e: &EngineInstance) -> Result<Checked> {
    let first = engines_eval(e)?;
    let witness = if first.outcome == Outcome::Fail {
        let mut current = e.clone();
        let mut kind = first.failure.clone();
        let mut i = 0;
        while i < current.points.len() {
            let candidate = EngineInstance { points: current.points.without_index(i), ..current.clone() };
            let ev = engines_eval(&candidate)?;
            if ev.outcome == Outcome::Fail {
                current = candidate;
                kind = ev.failure;
            } else {
                i += 1;
            }
        }
        Some(Witness {
            instance: e.label.clone(),
            points: current.points,
            kind: kind.expect("failing evaluations carry a witness"),
        })
    } else {
        None
    };
    Ok(Checked { record: record(e.points.dim(), &e.label, &first, witness.as_ref()), witness })
}

impl Witness {
    /// Re-derives the failure from the recorded data alone. Standard
    /// monomial claims are re-checked with the Lex game rather than the
    /// linear-algebra oracle that produced them.
    pub fn recheck(&self) -> bool {
        self.recheck_inner().unwrap_or(false)
    }

    fn recheck_inner(&self) -> Result<bool> {
        let v = &self.points;
        let n = v.dim();
        Ok(match &self.kind {
            WitnessKind::StandardNotBallot { monomial } => !is_ballot(*monomial) && game_says_standard(v, *monomial)?,
            WitnessKind::DegreeAboveTarget { monomial, target } => {
                monomial.len() as u64 > *target && game_says_standard(v, *monomial)?
            }
            WitnessKind::SizeAboveBound { k } => 2 * k <= n as u64 && v.len() as u128 > binomial(n as u64, *k),
            WitnessKind::ShatterBoundExceeded { ell } => {
                let ell = *ell;
                let none_at_ell = !Subset::k_subsets(n, ell).any(|s| shatters(v, s));
                let some_below = ell == 0 || Subset::k_subsets(n, ell - 1).any(|s| shatters(v, s));
                ell >= 1
                    && 2 * ell <= n
                    && none_at_ell
                    && some_below
                    && v.len() as u128 > binomial(n as u64, ell as u64 - 1)
            }
            WitnessKind::ClosedFormMismatch { monomial, t, k } => {
                game_says_standard(v, *monomial)? != closed_form_predicts(n, *t, *k, *monomial)
            }
            WitnessKind::HtViolation { t_set, weights } => match ht_sums(*t_set, weights) {
                Some((left, middle, right)) => {
                    !(left <= middle && middle < right) || !dominated_by_bijection(*t_set, weights)?
                }
                None => false,
            },
            WitnessKind::ModularLeading { t_set, weights, modulus } => {
                weights.len() == n
                    && ht_index(*t_set).is_some_and(|t| 2 * t <= n)
                    && weight_of(weights, *t_set) < *modulus
                    && game_says_standard(v, *t_set)?
            }
            WitnessKind::EnginesDisagree { monomial, recursion_points } => {
                let oracle = standard_monomials_oracle(v, TermOrder::Lex).contains(*monomial);
                let recursion = lex_standard_monomials_recursive_with(recursion_points, Execution::Sequential)
                    .contains(*monomial);
                let game = game_says_standard(v, *monomial)?;
                oracle != recursion || recursion != game
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify::instances::FamilyInstance;
    use crate::cube::CubePoint;
    use crate::families::WeightSpec;

    fn family(text: &str) -> FamilyInstance {
        FamilyInstance::generate(text.parse::<WeightSpec>().unwrap()).unwrap()
    }

    fn point(text: &str) -> CubePoint {
        text.parse().unwrap()
    }

    #[test]
    fn honest_instances_pass() {
        let f = family("a=1,2,2;k=3");
        for suite in [Suite::TheoremMain, Suite::CorollaryBound, Suite::FranklLinear] {
            let c = check_instance(suite, &Instance::Family(f.clone())).unwrap();
            assert_ne!(c.record.outcome, Outcome::Fail, "{suite}");
            assert!(c.witness.is_none());
        }
        let c = check_instance(Suite::Pelda, &Instance::Family(family("a=1,1,1,1,2;k=2"))).unwrap();
        assert_eq!(c.record.outcome, Outcome::Pass);
        assert_eq!(c.record.size, Some(7));
        let c = check_instance(Suite::ModP, &Instance::Family(family("a=1,1,1,1;k=1;p=5"))).unwrap();
        assert_eq!(c.record.outcome, Outcome::Pass);
    }

    #[test]
    fn frankl_example() {
        let c = check_instance(Suite::FranklLinear, &Instance::Family(family("a=1,2,2;k=3"))).unwrap();
        // |S| = 2 with l = 1 > 3/2 is outside the hypothesis
        assert_eq!(c.record.size, Some(2));
        assert_eq!(c.record.outcome, Outcome::HypothesisNotMet);
        let c = check_instance(Suite::FranklLinear, &Instance::Family(family("a=1,1,1,1,1,1;k=2"))).unwrap();
        assert_eq!((c.record.outcome, c.record.bound), (Outcome::Pass, Some(15)));
    }

    #[test]
    fn corrupted_instances_fail_with_verified_witnesses() {
        let cases = [
            (Suite::TheoremMain, family("a=1,1,1,1;k=1"), "1100"),
            (Suite::CorollaryBound, family("a=1,1,1,1;k=1"), "1100"),
            (Suite::FranklLinear, family("a=1,1,1,1,1,1;k=2"), "000000"),
            (Suite::Pelda, family("a=1,1,1,1,2;k=2"), "11100"),
            (Suite::ModP, family("a=1,1,1,1;k=1;p=5"), "0110"),
        ];
        for (suite, f, extra) in cases {
            let bad = f.with_injected(point(extra)).unwrap();
            let c = check_instance(suite, &Instance::Family(bad)).unwrap();
            assert_eq!(c.record.outcome, Outcome::Fail, "{suite}");
            let w = c.witness.unwrap();
            assert!(w.recheck(), "{suite}: {w:?}");
        }
    }

    #[test]
    fn engine_corruption() {
        let e = EngineInstance::new("a=1,1,1;k=1", PointSet::parse("100,010,001", None).unwrap());
        assert_eq!(check_instance(Suite::Engines, &Instance::Engines(e.clone())).unwrap().record.outcome, Outcome::Pass);
        let bad = e.with_injected(point("111"));
        let c = check_instance(Suite::Engines, &Instance::Engines(bad)).unwrap();
        let w = c.witness.unwrap();
        assert!(w.recheck());
        // shrinking leaves only what the disagreement needs
        assert!(w.points.len() < 3);
    }

    #[test]
    fn ht_corruption() {
        let t_set: Subset = "[2,3]".parse().unwrap();
        let honest = HtInstance { n: 4, t_set, weights: vec![vec![1, 2, 3, 4], vec![2, 2, 2, 2]] };
        assert_eq!(check_ht(&honest).unwrap().record.outcome, Outcome::Pass);
        let bad = HtInstance { weights: vec![vec![9, 2, 3, 4]], ..honest };
        let w = check_ht(&bad).unwrap().witness.unwrap();
        assert!(w.recheck());
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let bad = family("a=1,1,1,1;k=1").with_injected(point("1100")).unwrap();
        let mut w = check_instance(Suite::CorollaryBound, &Instance::Family(bad)).unwrap().witness.unwrap();
        assert!(w.recheck());
        w.points = w.points.without_index(0);
        assert!(!w.recheck());
    }

    #[test]
    fn mismatched_suite_is_an_error() {
        let h = Instance::Ht(HtInstance { n: 4, t_set: "[2,3]".parse().unwrap(), weights: vec![] });
        assert!(check_instance(Suite::TheoremMain, &h).is_err());
    }
}
