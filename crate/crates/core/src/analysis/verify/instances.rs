use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Suite, SuiteParams};
use crate::cube::{CubePoint, PointSet, Subset};
use crate::families::{gen_h_t, gen_linear_sperner, gen_mod_p, WeightSpec};
use crate::Result;

/// A weight spec together with the points under test. For honest
/// instances `points` is the generated family; corrupted instances carry
/// extra points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub label: String,
    pub spec: WeightSpec,
    pub points: PointSet,
}

impl FamilyInstance {
    /// `S(a, k)`, or `S_p(a, k)` when the spec has a modulus.
    pub fn generate(spec: WeightSpec) -> Result<Self> {
        let points = match spec.modulus() {
            Some(_) => gen_mod_p(&spec)?,
            None => gen_linear_sperner(&spec),
        };
        Ok(FamilyInstance { label: spec.to_string(), spec, points })
    }

    /// The same instance with one more point.
    pub fn with_injected(&self, p: CubePoint) -> Result<Self> {
        Ok(FamilyInstance {
            label: format!("{}+{p}", self.label),
            spec: self.spec.clone(),
            points: self.points.with_point(p)?,
        })
    }

    pub(crate) fn with_points(&self, points: PointSet) -> Self {
        FamilyInstance { label: self.label.clone(), spec: self.spec.clone(), points }
    }
}

/// One `T` in `H_t` checked against a batch of weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtInstance {
    pub n: usize,
    pub t_set: Subset,
    pub weights: Vec<Vec<u64>>,
}

/// Input for the engine comparison. `injected`, if present, is added only
/// to the recursion engine's input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineInstance {
    pub label: String,
    pub points: PointSet,
    pub injected: Option<CubePoint>,
}

impl EngineInstance {
    pub fn new(label: impl Into<String>, points: PointSet) -> Self {
        EngineInstance { label: label.into(), points, injected: None }
    }

    pub fn with_injected(&self, p: CubePoint) -> Self {
        EngineInstance { label: format!("{}+{p}", self.label), points: self.points.clone(), injected: Some(p) }
    }

    pub fn recursion_points(&self) -> Result<PointSet> {
        match self.injected {
            Some(p) => self.points.with_point(p),
            None => Ok(self.points.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Family(FamilyInstance),
    Ht(HtInstance),
    Engines(EngineInstance),
}

impl Instance {
    pub fn label(&self) -> String {
        match self {
            Instance::Family(f) => f.label.clone(),
            Instance::Ht(h) => format!("T={}", h.t_set.to_set_token()),
            Instance::Engines(e) => e.label.clone(),
        }
    }
}

/// Ascending vectors of length `1..=max_n` with entries in `1..=max_weight`,
/// by length and then lexicographically.
pub fn ascending_weight_vectors(max_n: usize, max_weight: u64) -> Vec<Vec<u64>> {
    fn extend(n: usize, max_weight: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let low = current.last().copied().unwrap_or(1);
        for w in low..=max_weight {
            current.push(w);
            extend(n, max_weight, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        extend(n, max_weight, &mut Vec::new(), &mut out);
    }
    out
}

/// Seeded random subsets of `{0,1}^n`: each sample draws a density
/// uniformly from `[0, 1)` and keeps every point with that probability.
pub fn random_point_sets(n: usize, count: usize, seed: u64) -> Result<Vec<PointSet>> {
    crate::cube::check_dim(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let density: f64 = rng.gen();
            let codes = (0..1u64 << n).filter(|_| rng.gen::<f64>() < density).collect();
            PointSet::from_codes(n, codes)
        })
        .collect()
}

/// Seeded ascending weight vectors of length `n`, entries in
/// `1..=max_weight`.
pub fn random_ascending_weights(n: usize, max_weight: u64, count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut a: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
            a.sort_unstable();
            a
        })
        .collect()
}

/// Nonempty `S(a, k)` over all ascending `a` and all `k`.
fn linear_families(params: &SuiteParams, max_k: impl Fn(usize) -> u64) -> Result<Vec<FamilyInstance>> {
    let mut out = Vec::new();
    for a in ascending_weight_vectors(params.n, params.max_weight) {
        let n = a.len();
        let total: u64 = a.iter().sum();
        for k in 0..=total.min(max_k(n)) {
            let inst = FamilyInstance::generate(WeightSpec::new(a.clone(), k)?)?;
            if !inst.points.is_empty() {
                out.push(inst);
            }
        }
    }
    Ok(out)
}

/// The instances of a suite, in canonical order.
pub fn enumerate_instances(suite: Suite, params: &SuiteParams) -> Result<Vec<Instance>> {
    let family = |v: Vec<FamilyInstance>| v.into_iter().map(Instance::Family).collect();
    Ok(match suite {
        Suite::TheoremMain | Suite::FranklLinear => family(linear_families(params, |_| u64::MAX)?),
        Suite::CorollaryBound => family(linear_families(params, |n| n as u64 / 2)?),
        Suite::Pelda => {
            let mut out = Vec::new();
            for n in 2..=params.n {
                let kmax = (n as u64 - 1) / 2;
                for k in 1..=kmax {
                    for t in 1..=k {
                        let mut a = vec![1; n];
                        a[n - 1] = t;
                        out.push(FamilyInstance::generate(WeightSpec::new(a, k)?)?);
                    }
                }
            }
            family(out)
        }
        Suite::ModP => {
            let mut out = Vec::new();
            for &p in &params.primes {
                for a in ascending_weight_vectors(params.n, params.max_weight) {
                    for k in 0..p {
                        out.push(FamilyInstance::generate(WeightSpec::with_modulus(a.clone(), k, p)?)?);
                    }
                }
            }
            family(out)
        }
        Suite::LemmaHt => {
            let n = params.n;
            let weights = random_ascending_weights(n, params.max_weight, params.samples, params.seed);
            let mut out = Vec::new();
            for t in 2..=n / 2 {
                for t_set in gen_h_t(n, t)?.members() {
                    out.push(Instance::Ht(HtInstance { n, t_set: *t_set, weights: weights.clone() }));
                }
            }
            out
        }
        Suite::Engines => {
            let mut out: Vec<Instance> = linear_families(params, |_| u64::MAX)?
                .into_iter()
                .map(|f| Instance::Engines(EngineInstance::new(f.label, f.points)))
                .collect();
            for (i, v) in random_point_sets(params.n, params.samples, params.seed)?.into_iter().enumerate() {
                out.push(Instance::Engines(EngineInstance::new(format!("random#{i}"), v)));
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascending_vectors_count() {
        // multisets of size n from 4 values, n = 1..=8: C(12,4) - 1
        assert_eq!(ascending_weight_vectors(8, 4).len(), 494);
        assert_eq!(ascending_weight_vectors(2, 2), vec![vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn random_sets_are_reproducible() {
        let a = random_point_sets(5, 20, 7).unwrap();
        let b = random_point_sets(5, 20, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_point_sets(5, 20, 8).unwrap());
    }
}
