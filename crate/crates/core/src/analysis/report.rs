use std::fmt;
use std::time::Duration;

use serde::{Serialize, Serializer};

use super::verify::Suite;
use crate::cube::{PointSet, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Result of checking one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The statement's hypotheses do not hold for this instance.
    HypothesisNotMet,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::HypothesisNotMet => "hypothesis not met",
        })
    }
}

/// What went wrong, with enough data to re-check it from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessKind {
    /// A standard monomial that is not a ballot sequence.
    StandardNotBallot {
        #[serde(serialize_with = "as_monomial")]
        monomial: Subset,
    },
    /// A standard monomial of degree above the target.
    DegreeAboveTarget {
        #[serde(serialize_with = "as_monomial")]
        monomial: Subset,
        target: u64,
    },
    /// More points than `C(n, k)`.
    SizeAboveBound { k: u64 },
    /// More points than `C(n, l - 1)` with `l` the smallest unshattered size.
    ShatterBoundExceeded { ell: usize },
    /// A monomial whose membership differs from the closed form for
    /// weights `(1, ..., 1, t)` and target `k`.
    ClosedFormMismatch {
        #[serde(serialize_with = "as_monomial")]
        monomial: Subset,
        t: u64,
        k: u64,
    },
    /// The weight inequality or the pairing fails for `T` in `H_t`.
    HtViolation {
        #[serde(serialize_with = "as_set")]
        t_set: Subset,
        weights: Vec<u64>,
    },
    /// `x_T` is standard although `T` is in `H_t` with small weight.
    ModularLeading {
        #[serde(serialize_with = "as_set")]
        t_set: Subset,
        weights: Vec<u64>,
        modulus: u64,
    },
    /// The engines disagree on a monomial. `recursion_points` is the input
    /// actually handed to the recursion engine.
    EnginesDisagree {
        #[serde(serialize_with = "as_monomial")]
        monomial: Subset,
        recursion_points: PointSet,
    },
}

fn as_monomial<S: Serializer>(s: &Subset, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&crate::cube::monomial_token(*s))
}

fn as_set<S: Serializer>(s: &Subset, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&s.to_set_token())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Instance label, e.g. `a=1,2,2;k=3`.
    pub instance: String,
    pub points: PointSet,
    #[serde(flatten)]
    pub kind: WitnessKind,
}

impl Witness {
    /// One-line description for tables.
    pub fn summary(&self) -> String {
        let pts = self.points.tokens().join(" ");
        let what = match &self.kind {
            WitnessKind::StandardNotBallot { monomial } => {
                format!("standard non-ballot {}", crate::cube::monomial_token(*monomial))
            }
            WitnessKind::DegreeAboveTarget { monomial, target } => {
                format!("standard {} of degree > {target}", crate::cube::monomial_token(*monomial))
            }
            WitnessKind::SizeAboveBound { k } => format!("{} points exceed C(n,{k})", self.points.len()),
            WitnessKind::ShatterBoundExceeded { ell } => {
                format!("{} points exceed C(n,{}) with l={ell}", self.points.len(), ell.saturating_sub(1))
            }
            WitnessKind::ClosedFormMismatch { monomial, t, k } => {
                format!("closed form (t={t},k={k}) wrong at {}", crate::cube::monomial_token(*monomial))
            }
            WitnessKind::HtViolation { t_set, weights } => {
                let w: Vec<String> = weights.iter().map(u64::to_string).collect();
                format!("T={} fails for a={}", t_set.to_set_token(), w.join(","))
            }
            WitnessKind::ModularLeading { t_set, modulus, .. } => {
                format!("x_T standard for T={} mod {modulus}", t_set.to_set_token())
            }
            WitnessKind::EnginesDisagree { monomial, .. } => {
                format!("engines disagree on {}", crate::cube::monomial_token(*monomial))
            }
        };
        if pts.is_empty() {
            what
        } else {
            format!("{what}; points {pts}")
        }
    }
}

/// One row of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub n: usize,
    pub params: String,
    pub outcome: Outcome,
    /// `|S|` for the instance, when meaningful.
    pub size: Option<usize>,
    pub bound: Option<u64>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub params: String,
    pub status: Status,
    pub instances: usize,
    pub passed: usize,
    pub violations: usize,
    pub hypothesis_not_met: usize,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
    pub records: Vec<InstanceRecord>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn from_records(
        suite: Suite,
        params: String,
        records: Vec<InstanceRecord>,
        witness: Option<Witness>,
        notes: Vec<String>,
        elapsed: Duration,
    ) -> Self {
        let count = |o: Outcome| records.iter().filter(|r| r.outcome == o).count();
        let violations = count(Outcome::Fail);
        VerificationReport {
            suite,
            params,
            status: if violations == 0 { Status::Pass } else { Status::Fail },
            instances: records.len(),
            passed: count(Outcome::Pass),
            violations,
            hypothesis_not_met: count(Outcome::HypothesisNotMet),
            witness,
            notes,
            records,
            elapsed,
        }
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} {} [{}]: {} instances, {} passed, {} violations, {} hypothesis not met",
            self.status, self.suite, self.params, self.instances, self.passed, self.violations, self.hypothesis_not_met
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!("; witness {}: {}", w.instance, w.summary()));
        }
        line
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV table (`suite,n,params,pass,size,bound,witness`) followed by
    /// notes as `#` lines and the summary line.
    pub fn to_table(&self) -> String {
        let mut out = csv::Writer::from_writer(Vec::new());
        out.write_record(["suite", "n", "params", "pass", "size", "bound", "witness"])
            .expect("write to memory");
        let suite = self.suite.to_string();
        for r in &self.records {
            let size = r.size.map(|s| s.to_string()).unwrap_or_default();
            let bound = r.bound.map(|b| b.to_string()).unwrap_or_default();
            out.write_record([
                suite.as_str(),
                &r.n.to_string(),
                &r.params,
                &r.outcome.to_string(),
                &size,
                &bound,
                r.witness.as_deref().unwrap_or(""),
            ])
            .expect("write to memory");
        }
        let mut text = String::from_utf8(out.into_inner().expect("flush")).expect("utf-8");
        for note in &self.notes {
            text.push_str(&format!("# {note}\n"));
        }
        text.push_str(&self.summary_line());
        text.push('\n');
        text
    }
}
