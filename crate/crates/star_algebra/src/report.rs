//! Pass/fail records shared by the verification routines.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    /// Records `residual <= tolerance`.
    pub fn record(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) -> bool {
        let pass = residual.is_finite() && residual <= tolerance;
        self.checks.push(Check { name: name.into(), pass, residual, tolerance, detail: None });
        pass
    }

    /// Records a boolean outcome; residual is 0 or 1.
    pub fn flag(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            pass,
            residual: if pass { 0.0 } else { 1.0 },
            tolerance: 0.0,
            detail,
        });
        pass
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if let Some(c) = self.checks.last_mut() {
            c.detail = Some(detail.into());
        }
        self
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{} {} residual={:.3e} tol={:.1e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.residual,
                c.tolerance
            )?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
