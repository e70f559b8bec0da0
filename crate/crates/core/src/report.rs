//! Verification reports shared by every suite.
//!
//! Each check serializes as `{identity, parameters, status, counterexample?}`;
//! numeric checks add `residual`, `converged`, `terms_used` and `point`.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub parameters: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Value>,
}

impl Check {
    /// An exact check; `counterexample` is only rendered on failure.
    pub fn exact<F>(
        identity: impl Into<String>,
        parameters: Value,
        ok: bool,
        counterexample: F,
    ) -> Self
    where
        F: FnOnce() -> String,
    {
        Check {
            identity: identity.into(),
            parameters,
            status: Status::from_bool(ok),
            counterexample: if ok { None } else { Some(counterexample()) },
            residual: None,
            converged: None,
            terms_used: None,
            point: None,
        }
    }

    /// A check that could not be carried out (an error counts as failure).
    pub fn error(
        identity: impl Into<String>,
        parameters: Value,
        err: impl std::fmt::Display,
    ) -> Self {
        Self::exact(identity, parameters, false, || format!("error: {err}"))
    }

    /// A numeric check passing when `residual < tol` and the sums converged.
    pub fn numeric(
        identity: impl Into<String>,
        parameters: Value,
        residual: f64,
        tol: f64,
        converged: bool,
        terms_used: usize,
        point: Value,
    ) -> Self {
        let ok = residual.is_finite() && residual < tol && converged;
        Check {
            identity: identity.into(),
            parameters,
            status: Status::from_bool(ok),
            counterexample: if ok {
                None
            } else {
                Some(format!(
                    "residual {residual:e} (tol {tol:e}, converged {converged})"
                ))
            },
            residual: Some(residual),
            converged: Some(converged),
            terms_used: Some(terms_used),
            point: Some(point),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Largest residual among numeric checks.
    pub fn max_residual(&self) -> Option<f64> {
        self.checks
            .iter()
            .filter_map(|c| c.residual)
            .fold(None, |acc, r| Some(acc.map_or(r, |a: f64| a.max(r))))
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report {
            checks: iter.into_iter().collect(),
        }
    }
}
