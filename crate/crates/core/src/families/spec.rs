use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::is_prime;
use crate::cube::MAX_DIM;
use crate::{Error, Result};

/// Positive integer weights `a`, a target `k`, and an optional prime
/// modulus `p`. Text form: `a=1,2,2;k=3` or `a=1,1,1;k=0;p=2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    weights: Vec<u64>,
    target: u64,
    modulus: Option<u64>,
}

impl WeightSpec {
    pub fn new(weights: Vec<u64>, target: u64) -> Result<Self> {
        Self::build(weights, target, None)
    }

    pub fn with_modulus(weights: Vec<u64>, target: u64, p: u64) -> Result<Self> {
        Self::build(weights, target, Some(p))
    }

    fn build(weights: Vec<u64>, target: u64, modulus: Option<u64>) -> Result<Self> {
        if weights.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge(weights.len()));
        }
        if let Some(i) = weights.iter().position(|&a| a == 0) {
            return Err(Error::InvalidSpec(format!("weight a_{} must be positive", i + 1)));
        }
        if let Some(p) = modulus {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if target >= p {
                return Err(Error::InvalidSpec(format!("target {target} must lie in [0, {}]", p - 1)));
            }
        }
        Ok(WeightSpec { weights, target, modulus })
    }

    /// All-ones weights: `S(1, d)` is the complete `d`-uniform family.
    pub fn uniform(n: usize, d: u64) -> Result<Self> {
        Self::new(vec![1; n], d)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    /// `0 < a_1 <= a_2 <= ... <= a_n`.
    pub fn is_ascending(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn total_weight(&self) -> u128 {
        self.weights.iter().map(|&a| a as u128).sum()
    }

    /// Same weights and target without the modulus.
    pub fn without_modulus(&self) -> Self {
        WeightSpec { weights: self.weights.clone(), target: self.target, modulus: None }
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "a={};k={}", a.join(","), self.target)?;
        if let Some(p) = self.modulus {
            write!(f, ";p={p}")?;
        }
        Ok(())
    }
}

impl FromStr for WeightSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut weights = None;
        let mut target = None;
        let mut modulus = None;
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("field '{field}' is not key=value")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidSpec(format!("'{v}' is not a nonnegative integer")))
            };
            match key.trim() {
                "a" => {
                    let list = value
                        .split(',')
                        .map(str::trim)
                        .filter(|v| !v.is_empty())
                        .map(num)
                        .collect::<Result<Vec<_>>>()?;
                    weights = Some(list);
                }
                "k" => target = Some(num(value)?),
                "p" => modulus = Some(num(value)?),
                other => return Err(Error::InvalidSpec(format!("unknown field '{other}'"))),
            }
        }
        let weights = weights.ok_or_else(|| Error::InvalidSpec("missing 'a='".into()))?;
        let target = target.ok_or_else(|| Error::InvalidSpec("missing 'k='".into()))?;
        Self::build(weights, target, modulus)
    }
}

impl Serialize for WeightSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
