//! Truncated sums of the odd-denominator series with sound tail bounds.

use num_traits::ToPrimitive;

use crate::error::Error;
use crate::ladder::{LadderRung, TrigKind};
use crate::precise::rational_times_pi_power;
use crate::rational::Rational;
use crate::report::{render_f64, VerificationReport};

/// Largest exponent for which float verification is attempted. Beyond it
/// exact oracle agreement carries the check.
pub const MAX_NUMERIC_S: u32 = 64;

/// A partial sum and a bound on everything left out:
/// the limit lies in `[value − tail_bound, value + tail_bound]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartialSumResult {
    pub value: f64,
    pub terms_used: u64,
    pub tail_bound: f64,
}

impl PartialSumResult {
    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.tail_bound
    }
}

/// Neumaier's compensated summation.
#[derive(Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn odd_power_inv(n: u64, s: u32) -> f64 {
    ((2 * n + 1) as f64).powi(-(s as i32))
}

/// Integral comparison: `Σ_{n≥N} (2n+1)^(−s) ≤ (2N−1)^(1−s) / (2(s−1))`.
pub fn lambda_tail_bound(s: u32, terms: u64) -> f64 {
    ((2 * terms - 1) as f64).powi(1 - s as i32) / (2.0 * (s as f64 - 1.0))
}

fn check_terms(terms: u64) -> Result<(), Error> {
    if terms == 0 {
        return Err(Error::InvalidArgument(
            "at least one term is required".into(),
        ));
    }
    Ok(())
}

/// `Σ_{n=0}^{N−1} (2n+1)^(−s)` for even `s ≥ 2`.
pub fn partial_lambda(s: u32, terms: u64) -> Result<PartialSumResult, Error> {
    if s < 2 || !s.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "lambda partial sums need even s ≥ 2, got {s}"
        )));
    }
    check_terms(terms)?;
    let mut acc = CompensatedSum::default();
    for n in 0..terms {
        acc.add(odd_power_inv(n, s));
    }
    Ok(PartialSumResult {
        value: acc.value(),
        terms_used: terms,
        tail_bound: lambda_tail_bound(s, terms),
    })
}

/// `Σ_{n=0}^{N−1} (−1)ⁿ (2n+1)^(−s)` for odd `s ≥ 3`. The first omitted
/// term bounds the alternating tail.
pub fn partial_beta(s: u32, terms: u64) -> Result<PartialSumResult, Error> {
    if s < 3 || s % 2 != 1 {
        return Err(Error::InvalidArgument(format!(
            "beta partial sums need odd s ≥ 3, got {s}"
        )));
    }
    check_terms(terms)?;
    let mut acc = CompensatedSum::default();
    for n in 0..terms {
        let t = odd_power_inv(n, s);
        acc.add(if n % 2 == 0 { t } else { -t });
    }
    Ok(PartialSumResult {
        value: acc.value(),
        terms_used: terms,
        tail_bound: odd_power_inv(terms, s),
    })
}

/// Produces `trig((2n+1)·qπ)` with the angle reduced modulo 2π exactly
/// when q has a small denominator.
struct AngleReducer {
    exact: Option<(u128, u128)>,
    q: f64,
}

impl AngleReducer {
    fn new(q: &Rational, terms: u64) -> Self {
        let exact = match (q.numer().to_u128(), q.denom().to_u128()) {
            (Some(a), Some(b))
                if b < (1 << 60) && a.checked_mul(2 * terms as u128 + 1).is_some() =>
            {
                Some((a, b))
            }
            _ => None,
        };
        AngleReducer {
            exact,
            q: q.to_f64().unwrap_or(0.0),
        }
    }

    /// Angle for index n, in units of π.
    fn angle(&self, n: u64) -> f64 {
        let odd = 2 * n as u128 + 1;
        match self.exact {
            Some((a, b)) => ((odd * a) % (2 * b)) as f64 / b as f64,
            None => odd as f64 * self.q,
        }
    }
}

/// Compares the truncated left-hand series of a rung at `x = qπ` with the
/// exact rung polynomial there.
pub fn verify_rung_pointwise(
    r: &LadderRung,
    q: &Rational,
    terms: u64,
    tol: f64,
) -> Result<VerificationReport, Error> {
    if *q < 0 || *q > Rational::frac(1, 2) {
        return Err(Error::PointOutOfRange(q.to_string()));
    }
    let s = r.s();
    if s > MAX_NUMERIC_S {
        return Err(Error::InvalidArgument(format!(
            "float verification is limited to s ≤ {MAX_NUMERIC_S}, got {s}"
        )));
    }
    check_terms(terms)?;

    let exact = rational_times_pi_power(&r.poly().eval_at(q), s, 20);
    let exact_f = exact.to_f64();

    let angles = AngleReducer::new(q, terms);
    let kind = r.kind();
    let mut acc = CompensatedSum::default();
    for n in 0..terms {
        let theta = angles.angle(n) * std::f64::consts::PI;
        acc.add(kind.apply(theta) * odd_power_inv(n, s));
    }
    let numeric = acc.value();
    let bound = lambda_tail_bound(s, terms);

    let trig = match kind {
        TrigKind::CosineForm => "cos",
        TrigKind::SineForm => "sin",
    };
    Ok(VerificationReport::compare(
        format!("{trig}-rung(s={s}, x={q}·pi)"),
        exact.to_string(),
        render_f64(numeric),
        (numeric - exact_f).abs(),
        tol,
        bound,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::run_ladder;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn single_term_bounds() {
        let l = partial_lambda(4, 1).unwrap();
        assert_eq!(l.value, 1.0);
        assert!((l.tail_bound - 1.0 / 6.0).abs() < 1e-16);

        let b = partial_beta(5, 1).unwrap();
        assert_eq!(b.value, 1.0);
        assert_eq!(b.tail_bound, 3f64.powi(-5));
    }

    #[test]
    fn lambda2_million_terms() {
        let l = partial_lambda(2, 1_000_000).unwrap();
        assert!(l.tail_bound < 2.6e-7);
        assert!(l.contains(PI * PI / 8.0));
        assert!((l.value - 1.2337005).abs() < 1e-6);
    }

    #[test]
    fn lambda6_and_beta_within_bounds() {
        assert!(partial_lambda(6, 100).unwrap().contains(PI.powi(6) / 960.0));
        let b3 = partial_beta(3, 1000).unwrap();
        assert!((b3.value - PI.powi(3) / 32.0).abs() < 1e-9);
        assert!(partial_beta(7, 50)
            .unwrap()
            .contains(61.0 * PI.powi(7) / 184320.0));
    }

    #[test]
    fn argument_checks() {
        assert!(partial_lambda(1, 10).is_err());
        assert!(partial_lambda(3, 10).is_err());
        assert!(partial_lambda(2, 0).is_err());
        assert!(partial_beta(4, 10).is_err());
        assert!(partial_beta(1, 10).is_err());
    }

    #[test]
    fn pointwise_examples() {
        let rungs = run_ladder(4).unwrap();
        let half = Rational::frac(1, 2);

        let r = verify_rung_pointwise(&rungs[0], &Rational::zero(), 1_000_000, 1e-6).unwrap();
        assert!(r.passed, "{r:?}");
        let r = verify_rung_pointwise(&rungs[1], &half, 10_000, 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
        let r = verify_rung_pointwise(&rungs[2], &half, 1, 1e-12).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.exact, "0");
    }

    #[test]
    fn pointwise_rejects_points_outside_range() {
        let rungs = run_ladder(2).unwrap();
        for q in [Rational::frac(-1, 4), Rational::frac(3, 4)] {
            assert!(matches!(
                verify_rung_pointwise(&rungs[0], &q, 10, 1e-9),
                Err(Error::PointOutOfRange(_))
            ));
        }
    }

    #[test]
    fn angle_reduction_fallback_agrees() {
        let q = Rational::frac(1, 3);
        let exact = AngleReducer::new(&q, 100);
        let loose = AngleReducer {
            exact: None,
            q: 1.0 / 3.0,
        };
        for n in 0..100 {
            let a = (exact.angle(n) * PI).cos();
            let b = (loose.angle(n) * PI).cos();
            assert!((a - b).abs() < 1e-12);
        }
    }
}
