//! Named verification checks. Each check states an identity or property,
//! carries default bounds, and either passes with a short summary or fails
//! with the first counterexample it meets.

mod cores;
mod golden;
mod partitions;
mod report;
mod series;
mod stanley;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stanley::{classify, stcrank_with, TypeClass};

pub use golden::{TABLE_ORBITS_NINE, TABLE_STCRANK_NINE};
pub use report::{render_reports, CheckReport, Counterexample, Verdict};

/// A deliberate defect, used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// The stcrank correction is `-1` instead of `+1` on type B partitions.
    NegatePsi,
    /// The correction is applied to type A partitions instead of type B.
    MisplacePsi,
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "negate-psi" => Ok(Mutation::NegatePsi),
            "misplace-psi" => Ok(Mutation::MisplacePsi),
            _ => Err(format!("unknown mutation {s:?} (negate-psi, misplace-psi)")),
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::NegatePsi => "negate-psi",
            Mutation::MisplacePsi => "misplace-psi",
        })
    }
}

/// Resolved parameters handed to a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub max_n: u32,
    pub order: usize,
    pub mutation: Option<Mutation>,
}

impl Params {
    /// stcrank, honouring the mutation if one is set.
    pub fn stcrank(&self, pi: &Partition) -> i64 {
        match self.mutation {
            None => crate::stanley::stcrank(pi),
            Some(Mutation::NegatePsi) => {
                stcrank_with(pi, |p| -i64::from(classify(p) == TypeClass::TypeB))
            }
            Some(Mutation::MisplacePsi) => {
                stcrank_with(pi, |p| i64::from(classify(p) == TypeClass::TypeA))
            }
        }
    }
}

/// User-supplied bounds; unset fields fall back to each check's defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub max_n: Option<u32>,
    pub order: Option<usize>,
    pub mutation: Option<Mutation>,
}

/// What a check found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(Counterexample),
}

pub(crate) fn fail(
    input: impl fmt::Display,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Result<Outcome> {
    Ok(Outcome::Fail(Counterexample {
        input: input.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }))
}

pub(crate) fn pass(summary: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Pass(summary.into()))
}

/// A catalog entry.
pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    /// Default weight bound, for checks that range over weights.
    pub max_n: Option<u32>,
    /// Default truncation order, for series checks.
    pub order: Option<usize>,
    pub run: fn(&Params) -> Result<Outcome>,
}

impl Check {
    pub fn params(&self, o: &Overrides) -> Params {
        Params {
            max_n: self.max_n.map_or(0, |d| o.max_n.unwrap_or(d)),
            order: self.order.map_or(0, |d| o.order.unwrap_or(d)),
            mutation: o.mutation,
        }
    }

    fn param_map(&self, p: &Params) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        if self.max_n.is_some() {
            m.insert("max_n".to_string(), p.max_n.to_string());
        }
        if self.order.is_some() {
            m.insert("order".to_string(), p.order.to_string());
        }
        if let Some(mu) = p.mutation {
            m.insert("mutation".to_string(), mu.to_string());
        }
        m
    }

    /// Runs the check. Library errors (bad bounds, budgets) are returned as
    /// errors rather than failed verdicts.
    pub fn run(&self, overrides: &Overrides) -> Result<CheckReport> {
        let params = self.params(overrides);
        let start = Instant::now();
        let outcome = (self.run)(&params)?;
        let elapsed: Duration = start.elapsed();
        let (verdict, summary, counterexample) = match outcome {
            Outcome::Pass(s) => (Verdict::Pass, s, None),
            Outcome::Fail(c) => (Verdict::Fail, String::new(), Some(c)),
        };
        Ok(CheckReport {
            check_name: self.name.to_string(),
            params: self.param_map(&params),
            verdict,
            summary,
            counterexample,
            elapsed,
        })
    }
}

/// Every registered check, in catalog order.
pub fn catalog() -> Vec<Check> {
    let mut all = Vec::new();
    all.extend(partitions::checks());
    all.extend(stanley::checks());
    all.extend(series::checks());
    all.extend(cores::checks());
    all
}

pub fn find_check(name: &str) -> Result<Check> {
    catalog()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Resolves names (`"all"` selects the whole catalog) preserving the order
/// given, then catalog order for `"all"`.
pub fn select(names: &[String]) -> Result<Vec<Check>> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(catalog());
    }
    names.iter().map(|n| find_check(n)).collect()
}

/// Runs checks in parallel; reports come back in input order.
pub fn run_checks(checks: &[Check], overrides: &Overrides) -> Result<Vec<CheckReport>> {
    checks.par_iter().map(|c| c.run(overrides)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolvable() {
        let cat = catalog();
        let mut names: Vec<_> = cat.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        assert!(matches!(find_check("nope"), Err(Error::UnknownCheck(_))));
        assert_eq!(select(&["all".to_string()]).unwrap().len(), cat.len());
    }

    #[test]
    fn small_bounds_pass() {
        let o = Overrides {
            max_n: Some(9),
            order: Some(12),
            mutation: None,
        };
        for c in catalog() {
            let r = c.run(&o).unwrap();
            assert_eq!(
                r.verdict,
                Verdict::Pass,
                "{}: {:?}",
                c.name,
                r.counterexample
            );
        }
    }
}
