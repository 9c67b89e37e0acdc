//! Verification suites. Each suite enumerates instances in a canonical
//! order, checks them independently (in parallel when enabled) and folds
//! the results into a [`VerificationReport`].

mod checks;
mod instances;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

pub use checks::{check_instance, Checked};
pub use instances::{
    ascending_weight_vectors, enumerate_instances, random_ascending_weights, random_point_sets, EngineInstance, FamilyInstance, HtInstance,
    Instance,
};

use super::report::VerificationReport;
use crate::cube::TermOrder;
use crate::families::is_ballot;
use crate::ideal::standard_monomials_oracle;
use crate::par::{self, Execution};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    TheoremMain,
    CorollaryBound,
    FranklLinear,
    Pelda,
    LemmaHt,
    ModP,
    Engines,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::TheoremMain,
        Suite::CorollaryBound,
        Suite::FranklLinear,
        Suite::Pelda,
        Suite::LemmaHt,
        Suite::ModP,
        Suite::Engines,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::CorollaryBound => "corollary-bound",
            Suite::FranklLinear => "frankl-linear",
            Suite::Pelda => "pelda",
            Suite::LemmaHt => "lemma-ht",
            Suite::ModP => "modp",
            Suite::Engines => "engines",
        }
    }

    /// Whether the suite runs the exact-rational oracle (and so is limited
    /// to small `n`).
    pub fn uses_oracle(self) -> bool {
        matches!(self, Suite::TheoremMain | Suite::Pelda | Suite::ModP | Suite::Engines)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s.trim())
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl Serialize for Suite {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// Parameters of a suite run. Not every field matters to every suite;
/// [`SuiteParams::for_suite`] gives the defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Largest dimension enumerated.
    pub n: usize,
    /// Largest weight entry.
    pub max_weight: u64,
    /// Moduli for `modp`.
    pub primes: Vec<u64>,
    pub seed: u64,
    /// Random samples (`engines`: point sets, `lemma-ht`: weight vectors).
    pub samples: usize,
    /// Also record DegLex ballot containment for `theorem-main` (as data,
    /// not as a check).
    pub deglex_data: bool,
    pub execution: Execution,
}

impl SuiteParams {
    pub fn for_suite(suite: Suite) -> Self {
        let base = SuiteParams {
            n: 8,
            max_weight: 4,
            primes: Vec::new(),
            seed: 0,
            samples: 0,
            deglex_data: false,
            execution: Execution::default(),
        };
        match suite {
            Suite::TheoremMain | Suite::CorollaryBound | Suite::FranklLinear => base,
            Suite::Pelda => SuiteParams { n: 11, ..base },
            Suite::LemmaHt => SuiteParams { n: 12, max_weight: 20, samples: 1000, ..base },
            Suite::ModP => SuiteParams { max_weight: 3, primes: vec![3, 5, 7], ..base },
            Suite::Engines => SuiteParams { samples: 10_000, ..base },
        }
    }

    pub(crate) fn describe(&self, suite: Suite) -> String {
        let mut parts = vec![format!("n<={}", self.n)];
        match suite {
            Suite::Pelda => {}
            Suite::LemmaHt => {
                parts.push(format!("max-weight<={}", self.max_weight));
                parts.push(format!("samples={}", self.samples));
                parts.push(format!("seed={}", self.seed));
            }
            Suite::ModP => {
                parts.push(format!("max-weight<={}", self.max_weight));
                let ps: Vec<String> = self.primes.iter().map(u64::to_string).collect();
                parts.push(format!("p={}", ps.join("/")));
            }
            Suite::Engines => {
                parts.push(format!("max-weight<={}", self.max_weight));
                parts.push(format!("samples={}", self.samples));
                parts.push(format!("seed={}", self.seed));
            }
            _ => parts.push(format!("max-weight<={}", self.max_weight)),
        }
        parts.join(",")
    }

    fn validate(&self, suite: Suite) -> Result<()> {
        if self.n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        if self.n > crate::cube::MAX_DIM {
            return Err(Error::DimensionTooLarge(self.n));
        }
        if self.max_weight == 0 && suite != Suite::Pelda {
            return Err(Error::OutOfRange("max-weight must be at least 1".into()));
        }
        if suite == Suite::ModP {
            if self.primes.is_empty() {
                return Err(Error::OutOfRange("modp needs at least one prime".into()));
            }
            if let Some(&p) = self.primes.iter().find(|&&p| !crate::families::is_prime(p)) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(())
    }
}

/// Runs a suite and returns its report. The first failing instance (in
/// canonical order) supplies the witness, shrunk where that is meaningful.
pub fn run_verification(suite: Suite, params: &SuiteParams) -> Result<VerificationReport> {
    params.validate(suite)?;
    let start = Instant::now();
    let instances = enumerate_instances(suite, params)?;
    let results: Vec<Result<Checked>> = par::map(params.execution, &instances, |inst| check_instance(suite, inst));
    let results: Vec<Checked> = results.into_iter().collect::<Result<_>>()?;
    let witness = results.iter().find_map(|c| c.witness.clone());
    let mut notes = suite_notes(suite);
    if suite == Suite::TheoremMain && params.deglex_data {
        notes.push(deglex_note(&instances, params.execution));
    }
    let records = results.into_iter().map(|c| c.record).collect();
    Ok(VerificationReport::from_records(
        suite,
        params.describe(suite),
        records,
        witness,
        notes,
        start.elapsed(),
    ))
}

fn suite_notes(suite: Suite) -> Vec<String> {
    let note = match suite {
        Suite::TheoremMain => "lex standard monomials checked for ballot form and degree <= k",
        Suite::CorollaryBound => "instances restricted to k <= n/2",
        Suite::FranklLinear => "instances with smallest unshattered size l > n/2 are reported as hypothesis not met",
        Suite::Pelda => "weights (1,...,1,t) with 1 <= t <= k <= (n-1)/2",
        Suite::LemmaHt => "each row aggregates all sampled ascending weight vectors for one T",
        Suite::ModP => "rows without any T in H_t of weight below p are reported as hypothesis not met",
        Suite::Engines => "oracle, recursion and Lex game compared on every square-free monomial",
    };
    vec![note.to_string()]
}

fn deglex_note(instances: &[Instance], exec: Execution) -> String {
    let counts: Vec<bool> = par::map(exec, instances, |inst| match inst {
        Instance::Family(f) => standard_monomials_oracle(&f.points, TermOrder::DegLex)
            .members()
            .iter()
            .all(|&m| is_ballot(m)),
        _ => true,
    });
    let ballot = counts.iter().filter(|&&b| b).count();
    format!(
        "deglex data: {ballot} of {} instances have only ballot standard monomials",
        counts.len()
    )
}
