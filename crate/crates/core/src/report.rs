//! Plain-text check reports, one line per property.

use std::fmt;

/// Outcome of one verified property.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Signed slack: positive when the property holds with room to spare.
    pub margin: f64,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, margin: f64) -> Self {
        Self {
            name: name.into(),
            passed,
            margin,
            witness: None,
        }
    }

    /// Pass iff `margin >= 0`.
    pub fn from_margin(name: impl Into<String>, margin: f64) -> Self {
        Self::new(name, margin >= 0.0, margin)
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

/// Ordered list of checks with an optional seed recorded for reproducibility.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub seed: Option<u64>,
    pub full_precision: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed: Some(seed),
            ..Self::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn worst_margin(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.margin)
            .fold(f64::INFINITY, f64::min)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(seed) = self.seed {
            writeln!(f, "# seed={seed:#x}")?;
        }
        for c in &self.checks {
            write!(
                f,
                "{} {} margin={}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                format_number(c.margin, self.full_precision)
            )?;
            if let Some(w) = &c.witness {
                write!(f, " witness={w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Formats with 15 significant digits (17 with `full`), then prints the
/// shortest representation of the rounded value.
pub fn format_number(x: f64, full: bool) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = if full { 16 } else { 14 };
    let rounded: f64 = format!("{x:.digits$e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        return "0".to_string();
    }
    if rounded.abs() >= 1e-5 && rounded.abs() < 1e16 {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// Comma-joined vector with [`format_number`] entries.
pub fn format_vector(v: &[f64], full: bool) -> String {
    v.iter()
        .map(|&x| format_number(x, full))
        .collect::<Vec<_>>()
        .join(",")
}
