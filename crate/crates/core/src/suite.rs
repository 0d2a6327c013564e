//! The full verification run behind `verify`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::fourier::fourier_coefficient_check;
use crate::ladder::{
    beta_value, lambda_value, run_ladder, zeta_from_lambda, ClosedFormValue, LadderRung, TrigKind,
};
use crate::oracle::{bernoulli_zeta_oracle, euler_beta_oracle};
use crate::precise::closed_form_to_float;
use crate::rational::Rational;
use crate::report::VerificationReport;
use crate::series::{verify_rung_pointwise, MAX_NUMERIC_S};

/// Partial-sum length for pointwise checks.
pub const POINTWISE_TERMS: u64 = 100_000;
/// Highest Fourier coefficient index checked.
pub const FOURIER_MAX_N: u32 = 16;

pub fn sample_points() -> [Rational; 3] {
    [Rational::zero(), Rational::frac(1, 4), Rational::frac(1, 2)]
}

fn describe(v: &ClosedFormValue) -> String {
    format!(
        "({})·pi^{} = {}",
        v.coeff(),
        v.s(),
        closed_form_to_float(v, 20)
    )
}

/// Exact comparison of two closed forms; `abs_error` is the coefficient
/// difference rounded to `f64` (never rounded to zero when they differ).
fn exact_report(
    subject: String,
    expected: &ClosedFormValue,
    got: &ClosedFormValue,
) -> VerificationReport {
    let diff = (got.coeff() - expected.coeff()).abs();
    let err = if diff.is_zero() {
        0.0
    } else {
        diff.to_f64()
            .filter(|d| *d > 0.0)
            .unwrap_or(f64::MIN_POSITIVE)
    };
    VerificationReport::exact_equality(subject, describe(expected), describe(got), err)
}

/// Ladder value at rung `r` against the Bernoulli or Euler closed form.
pub fn oracle_report(r: &LadderRung) -> Result<VerificationReport, Error> {
    let s = r.s();
    Ok(match r.kind() {
        TrigKind::CosineForm => {
            let ladder = zeta_from_lambda(&lambda_value(r)?)?;
            exact_report(
                format!("oracle:zeta({s})"),
                &bernoulli_zeta_oracle(s)?,
                &ladder,
            )
        }
        TrigKind::SineForm => exact_report(
            format!("oracle:phi({s})"),
            &euler_beta_oracle(s)?,
            &beta_value(r)?,
        ),
    })
}

/// `λ(s) = (1 − 2^(−s))·ζ(s)` with ζ from the Bernoulli oracle.
pub fn odd_even_split_report(r: &LadderRung) -> Result<VerificationReport, Error> {
    let s = r.s();
    let lambda = lambda_value(r)?;
    let zeta = bernoulli_zeta_oracle(s)?;
    let two_s = BigInt::one() << s;
    let factor = Rational::new(two_s.clone() - 1, two_s)?;
    let expected = ClosedFormValue::new(lambda.series(), s, zeta.coeff() * &factor)?;
    Ok(exact_report(
        format!("split:lambda({s})"),
        &expected,
        &lambda,
    ))
}

/// Oracle agreement and the odd/even split for every rung up to `s_max`,
/// pointwise float checks up to `min(s_max, 64)`, and Fourier checks
/// for n ≤ 16.
pub fn verify_suite(s_max: u32, tol: f64) -> Result<Vec<VerificationReport>, Error> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let rungs = run_ladder(s_max)?;
    let mut reports = Vec::new();
    for r in &rungs {
        reports.push(oracle_report(r)?);
        if r.kind() == TrigKind::CosineForm {
            reports.push(odd_even_split_report(r)?);
        }
    }

    let numeric: Vec<&LadderRung> = rungs.iter().filter(|r| r.s() <= MAX_NUMERIC_S).collect();
    let points = sample_points();
    let pointwise = std::thread::scope(|scope| {
        let handles: Vec<_> = numeric
            .iter()
            .map(|r| {
                let points = &points;
                scope.spawn(move || {
                    points
                        .iter()
                        .map(|q| verify_rung_pointwise(r, q, POINTWISE_TERMS, tol))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("pointwise worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    reports.extend(pointwise.into_iter().flatten());

    reports.extend((0..=FOURIER_MAX_N).map(|n| fourier_coefficient_check(n, tol)));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_through_seven_passes() {
        let reports = verify_suite(7, 1e-9).unwrap();
        for r in &reports {
            assert!(r.passed, "{r:?}");
        }
        // 6 oracle + 3 split + 18 pointwise + 17 fourier
        assert_eq!(reports.len(), 6 + 3 + 18 + 17);
    }

    #[test]
    fn exact_mismatch_is_reported() {
        let a = ClosedFormValue::new(crate::ladder::Series::Zeta, 2, Rational::frac(1, 6)).unwrap();
        let b = ClosedFormValue::new(crate::ladder::Series::Zeta, 2, Rational::frac(1, 7)).unwrap();
        let r = exact_report("x".into(), &a, &b);
        assert!(!r.passed);
        assert!(r.abs_error > 0.0);
        assert!(exact_report("x".into(), &a, &a).passed);
    }

    #[test]
    fn bad_arguments() {
        assert!(verify_suite(1, 1e-9).is_err());
        assert!(verify_suite(4, 0.0).is_err());
        assert!(verify_suite(4, f64::NAN).is_err());
    }
}
