use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// `coeffs . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Inequality { coeffs, rhs }
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
        lhs >= self.rhs
    }

    /// Scales by a positive factor so the largest absolute coefficient (or
    /// the right-hand side, for constant rows) is 1.
    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .filter(|m| !m.is_zero())
            .or_else(|| (!self.rhs.is_zero()).then(|| self.rhs.abs()));
        if let Some(s) = scale {
            for c in self.coeffs.iter_mut() {
                *c /= &s;
            }
            self.rhs /= &s;
        }
        self
    }
}

/// Largest system the elimination may build before giving up.
const MAX_ROWS: usize = 200_000;

/// Exact Fourier-Motzkin elimination. Returns a point satisfying every
/// inequality, `Ok(None)` when the system is infeasible, or an error when
/// the intermediate systems grow past a fixed size.
pub fn feasible_point(system: &[Inequality], nvars: usize) -> Result<Option<Vec<Rational>>> {
    debug_assert!(system.iter().all(|q| q.coeffs.len() == nvars));
    // stages[j] holds the system over x_0..=x_j, before x_j is eliminated.
    let mut stages: Vec<Vec<Inequality>> = Vec::with_capacity(nvars);
    let mut current: Vec<Inequality> = dedup(system.iter().cloned());
    for j in (0..nvars).rev() {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in &current {
            if q.coeffs[j].is_positive() {
                lower.push(q);
            } else if q.coeffs[j].is_negative() {
                upper.push(q);
            } else {
                rest.push(q.clone());
            }
        }
        if rest.len() + lower.len() * upper.len() > MAX_ROWS {
            return Err(Error::TooLarge("Fourier-Motzkin system grew too large".into()));
        }
        for lo in &lower {
            for up in &upper {
                let (a, b) = (lo.coeffs[j].clone(), -up.coeffs[j].clone());
                let coeffs = lo.coeffs.iter().zip(&up.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                rest.push(Inequality::new(coeffs, &lo.rhs * &b + &up.rhs * &a));
            }
        }
        stages.push(current);
        current = dedup(rest);
    }
    if current.iter().any(|q| q.rhs.is_positive()) {
        return Ok(None);
    }
    stages.reverse();
    let mut x: Vec<Rational> = Vec::with_capacity(nvars);
    for (j, stage) in stages.iter().enumerate() {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for q in stage {
            let c = &q.coeffs[j];
            if c.is_zero() {
                continue;
            }
            let known: Rational = q.coeffs[..j].iter().zip(&x).map(|(a, v)| a * v).sum();
            let bound = (&q.rhs - known) / c;
            if c.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        let value = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
        x.push(value);
    }
    debug_assert!(system.iter().all(|q| q.holds_at(&x)));
    Ok(Some(x))
}

fn dedup(rows: impl IntoIterator<Item = Inequality>) -> Vec<Inequality> {
    rows.into_iter()
        .map(Inequality::normalized)
        // trivially true constant rows carry no information
        .filter(|q| !(q.coeffs.iter().all(Zero::is_zero) && !q.rhs.is_positive()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
