use serde::{Deserialize, Serialize};

/// Outcome of comparing an exact value against a numeric one.
///
/// `passed` holds exactly when `abs_error ≤ tolerance + bound`, where
/// `bound` is the rigorous truncation bound of the numeric side (the tail
/// of a partial sum, zero for quadrature). The bound is not part of the
/// JSON form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub subject: String,
    pub exact: String,
    pub numeric: String,
    pub abs_error: f64,
    pub tolerance: f64,
    #[serde(skip)]
    pub bound: f64,
    pub passed: bool,
}

/// Decimal places used when rendering `f64` values into reports.
pub const FLOAT_DECIMALS: usize = 18;

pub fn render_f64(x: f64) -> String {
    let s = format!("{x:.FLOAT_DECIMALS$}");
    // No "-0.000…" for values that round to zero.
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

impl VerificationReport {
    /// Builds a report and derives `passed` from the error budget.
    pub fn compare(
        subject: impl Into<String>,
        exact: String,
        numeric: String,
        abs_error: f64,
        tolerance: f64,
        bound: f64,
    ) -> Self {
        VerificationReport {
            subject: subject.into(),
            exact,
            numeric,
            abs_error,
            tolerance,
            bound,
            passed: abs_error <= tolerance + bound,
        }
    }

    /// Both sides are `f64`; exact side rendered too.
    pub fn compare_f64(
        subject: impl Into<String>,
        exact: f64,
        numeric: f64,
        tolerance: f64,
    ) -> Self {
        Self::compare(
            subject,
            render_f64(exact),
            render_f64(numeric),
            (numeric - exact).abs(),
            tolerance,
            0.0,
        )
    }

    /// A check of exact equality: zero tolerance, zero bound.
    pub fn exact_equality(
        subject: impl Into<String>,
        expected: String,
        got: String,
        difference: f64,
    ) -> Self {
        Self::compare(subject, expected, got, difference, 0.0, 0.0)
    }

    /// Marks a report as failed because its numeric side could not be
    /// produced at the requested tolerance. `abs_error` is raised to the
    /// achieved error estimate so it still exceeds the budget.
    pub fn unreachable(mut self, estimate: f64, reason: &str) -> Self {
        self.abs_error = self.abs_error.max(estimate);
        self.numeric = format!("{} ({reason})", self.numeric);
        self.passed = false;
        self
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}
