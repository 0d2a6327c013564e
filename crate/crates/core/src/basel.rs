//! Numerical reproduction of the integral route to ζ(2) = π²/6.
//!
//! With `J = ∫₀¹ ln(1−x)/x dx` and `I(α) = ∫₀¹ ln(1−αx+x²)/x dx`:
//!
//! ```text
//! I(2) = 2J,   I(−2) = −J,   I(2) − I(−2) = 3J = ∫₋₂² I′(α) dα = −π²/2
//! ```
//!
//! where differentiating under the integral sign gives
//! `I′(α) = −∫₀¹ dx/(1−αx+x²)`, whose odd part integrates to zero over
//! [−2, 2] and whose even part reduces to `4∫_{π/2}^0 u du` under
//! `u = arctan√((2−α)/(2+α))`.

use std::f64::consts::PI;

use crate::error::Error;
use crate::quadrature::{tanh_sinh, Abscissa, QuadratureError, QuadratureResult};
use crate::report::{render_f64, VerificationReport};
use crate::series::{CompensatedSum, PartialSumResult};

/// `ln(1 − x)` on [0, 1] from whichever endpoint distance is accurate.
fn ln_one_minus(p: Abscissa) -> f64 {
    if p.from_right < 0.5 {
        p.from_right.ln()
    } else {
        (-p.from_left).ln_1p()
    }
}

fn j_integrand(p: Abscissa) -> f64 {
    let x = p.from_left;
    if x == 0.0 {
        -1.0
    } else {
        ln_one_minus(p) / x
    }
}

/// `J = ∫₀¹ ln(1−x)/x dx`, with the removable singularity at 0 filled by −1.
pub fn integral_j(tol: f64) -> Result<QuadratureResult, Error> {
    Ok(tanh_sinh(j_integrand, 0.0, 1.0, tol)?)
}

/// `1 − αx + x²`, written as `(1 − x)² + (2 − α)x` near x = 1.
fn quadratic(alpha: f64, p: Abscissa) -> f64 {
    let x = p.from_left;
    if x > 0.5 {
        p.from_right * p.from_right + (2.0 - alpha) * x
    } else {
        1.0 + x * (x - alpha)
    }
}

fn check_alpha(alpha: f64, open: bool) -> Result<(), Error> {
    let inside = if open {
        alpha > -2.0 && alpha < 2.0
    } else {
        (-2.0..=2.0).contains(&alpha)
    };
    if inside {
        Ok(())
    } else {
        let range = if open { "(-2, 2)" } else { "[-2, 2]" };
        Err(Error::InvalidArgument(format!(
            "alpha = {alpha} outside {range}"
        )))
    }
}

/// `I(α) = ∫₀¹ ln(1−αx+x²)/x dx` for α in [−2, 2].
///
/// At α = ±2 the log argument is a perfect square and the integrand is
/// taken as `2 ln(1∓x)/x`.
pub fn integral_i(alpha: f64, tol: f64) -> Result<QuadratureResult, Error> {
    check_alpha(alpha, false)?;
    let r = if alpha == 2.0 {
        tanh_sinh(|p| 2.0 * j_integrand(p), 0.0, 1.0, tol)?
    } else if alpha == -2.0 {
        tanh_sinh(
            |p| {
                let x = p.from_left;
                if x == 0.0 {
                    2.0
                } else {
                    2.0 * x.ln_1p() / x
                }
            },
            0.0,
            1.0,
            tol,
        )?
    } else {
        tanh_sinh(
            |p| {
                let x = p.from_left;
                if x == 0.0 {
                    -alpha
                } else if x > 0.5 {
                    quadratic(alpha, p).ln() / x
                } else {
                    (x * (x - alpha)).ln_1p() / x
                }
            },
            0.0,
            1.0,
            tol,
        )?
    };
    Ok(r)
}

/// `(2/√(4−α²))·(arctan(−α/√(4−α²)) − arctan√((2−α)/(2+α)))`.
pub fn i_prime_closed_form(alpha: f64) -> f64 {
    let root = ((2.0 - alpha) * (2.0 + alpha)).sqrt();
    2.0 / root * ((-alpha / root).atan() - ((2.0 - alpha) / (2.0 + alpha)).sqrt().atan())
}

/// `I′(α) = −∫₀¹ dx/(1−αx+x²)` by quadrature, cross-checked against
/// [`i_prime_closed_form`] at the same tolerance.
pub fn integral_i_prime(alpha: f64, tol: f64) -> Result<QuadratureResult, Error> {
    check_alpha(alpha, true)?;
    let r = tanh_sinh(|p| -1.0 / quadratic(alpha, p), 0.0, 1.0, tol)?;
    let closed = i_prime_closed_form(alpha);
    if (r.value - closed).abs() > tol {
        return Err(Error::Disagreement {
            quadrature: r.value,
            closed_form: closed,
        });
    }
    Ok(r)
}

/// `f(x) = Σ_{n=1}^{N} xⁿ/n²` for |x| ≤ 1.
///
/// The tail bound is `|x|^(N+1)/((N+1)(1−|x|))` inside the unit interval and
/// `1/N` on its boundary.
pub fn dilog_series(x: f64, terms: u64) -> Result<PartialSumResult, Error> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::InvalidArgument(format!("|x| must be ≤ 1, got {x}")));
    }
    if terms == 0 {
        return Err(Error::InvalidArgument(
            "at least one term is required".into(),
        ));
    }
    let mut acc = CompensatedSum::default();
    let mut power = 1.0;
    for n in 1..=terms {
        power *= x;
        let nf = n as f64;
        acc.add(power / (nf * nf));
    }
    let ax = x.abs();
    let tail_bound = if ax == 1.0 {
        1.0 / terms as f64
    } else {
        let n1 = (terms + 1) as f64;
        ax.powf(n1) / (n1 * (1.0 - ax))
    };
    Ok(PartialSumResult {
        value: acc.value(),
        terms_used: terms,
        tail_bound,
    })
}

/// Short statements of identities (a)–(f), in report order.
pub const IDENTITY_LABELS: [(&str, &str); 6] = [
    ("identity:(a)", "I(2) = 2J"),
    ("identity:(b)", "I(-2) = -J"),
    ("identity:(c)", "I(2) - I(-2) = 3J"),
    ("identity:(d)", "J = 2 int_0^1 ln(1-x^2)/x dx"),
    (
        "identity:(e)",
        "-2 int_-2^2 arctan(sqrt((2-a)/(2+a)))/sqrt(4-a^2) da = -pi^2/2",
    ),
    (
        "identity:(f)",
        "int_-2^2 (2/sqrt(4-a^2)) arctan(-a/sqrt(4-a^2)) da = 0",
    ),
];

type Quad = Result<(f64, f64), QuadratureError>;

fn quad<F: Fn(Abscissa) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Quad {
    tanh_sinh(f, a, b, tol).map(|r| (r.value, r.abs_error_estimate))
}

fn lift(r: Result<QuadratureResult, Error>) -> Quad {
    match r {
        Ok(q) => Ok((q.value, q.abs_error_estimate)),
        Err(Error::Quadrature(e)) => Err(e),
        Err(e) => unreachable!("argument already validated: {e}"),
    }
}

/// Best value and error estimate even when the tolerance was missed.
fn best(q: &Quad) -> Option<(f64, f64)> {
    match q {
        Ok(v) => Some(*v),
        Err(QuadratureError::ToleranceUnreachable { best, .. }) => {
            Some((best.value, best.abs_error_estimate))
        }
        Err(_) => None,
    }
}

/// Compares `lhs` against `rhs`, each a linear combination of integrals.
fn identity_report(
    subject: &str,
    lhs: &[(f64, &Quad)],
    rhs: &[(f64, &Quad)],
    constant: f64,
    tol: f64,
) -> VerificationReport {
    let mut failure: Option<String> = None;
    let mut side = |terms: &[(f64, &Quad)]| -> (f64, f64) {
        let mut value = 0.0;
        let mut est = 0.0;
        for (scale, q) in terms {
            if let Err(e) = q {
                failure.get_or_insert_with(|| e.to_string());
            }
            match best(q) {
                Some((v, e)) => {
                    value += scale * v;
                    est += scale.abs() * e;
                }
                None => {
                    value = f64::NAN;
                    est = f64::MAX;
                }
            }
        }
        (value, est)
    };
    let (l, le) = side(lhs);
    let (r, re) = side(rhs);
    let r = r + constant;
    let err = if l.is_finite() && r.is_finite() {
        (l - r).abs()
    } else {
        f64::MAX
    };
    let report = VerificationReport::compare(subject, render_f64(r), render_f64(l), err, tol, 0.0);
    match failure {
        Some(reason) => report.unreachable(le + re, &reason),
        None => report,
    }
}

/// Evaluates identities (a)–(f) numerically. A quadrature that misses its
/// tolerance fails only the identities that use it.
pub fn check_basel_identities(tol: f64) -> Result<Vec<VerificationReport>, Error> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    // Each identity combines at most four integrals.
    let qt = tol / 4.0;
    let j = lift(integral_j(qt));
    let i_plus = lift(integral_i(2.0, qt));
    let i_minus = lift(integral_i(-2.0, qt));
    let j_squared = quad(
        |p| {
            let x = p.from_left;
            if x == 0.0 {
                return 0.0;
            }
            let ln = if p.from_right < 0.5 {
                p.from_right.ln() + x.ln_1p()
            } else {
                (-x * x).ln_1p()
            };
            ln / x
        },
        0.0,
        1.0,
        qt,
    );
    let even_part = quad(
        |p| {
            let (l, r) = (p.from_left, p.from_right);
            (r / l).sqrt().atan() / (l * r).sqrt()
        },
        -2.0,
        2.0,
        qt,
    );
    let odd_part = quad(
        |p| {
            let root = (p.from_left * p.from_right).sqrt();
            2.0 / root * (-p.x / root).atan()
        },
        -2.0,
        2.0,
        qt,
    );

    let labels = IDENTITY_LABELS.map(|(s, _)| s);
    Ok(vec![
        identity_report(labels[0], &[(1.0, &i_plus)], &[(2.0, &j)], 0.0, tol),
        identity_report(labels[1], &[(1.0, &i_minus)], &[(-1.0, &j)], 0.0, tol),
        identity_report(
            labels[2],
            &[(1.0, &i_plus), (-1.0, &i_minus)],
            &[(3.0, &j)],
            0.0,
            tol,
        ),
        identity_report(labels[3], &[(1.0, &j)], &[(2.0, &j_squared)], 0.0, tol),
        identity_report(labels[4], &[(-2.0, &even_part)], &[], -PI * PI / 2.0, tol),
        identity_report(labels[5], &[(1.0, &odd_part)], &[], 0.0, tol),
    ])
}

/// J, I(2), I(−2) and I(0) against their closed values
/// −π²/6, −π²/3, π²/6 and π²/24.
pub fn basel_values(tol: f64) -> Result<Vec<VerificationReport>, Error> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let z2 = PI * PI / 6.0;
    let cases: [(&str, Quad, f64); 4] = [
        ("J", lift(integral_j(tol)), -z2),
        ("I(2)", lift(integral_i(2.0, tol)), -2.0 * z2),
        ("I(-2)", lift(integral_i(-2.0, tol)), z2),
        ("I(0)", lift(integral_i(0.0, tol)), z2 / 4.0),
    ];
    Ok(cases
        .into_iter()
        .map(|(name, q, exact)| identity_report(name, &[(1.0, &q)], &[], exact, tol))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: f64 = PI * PI / 6.0;

    #[test]
    fn j_value() {
        let r = integral_j(1e-10).unwrap();
        assert!((r.value + Z2).abs() < 1e-10, "{r:?}");
        assert!(r.abs_error_estimate <= 1e-10);
        let loose = integral_j(1e-4).unwrap();
        assert!((loose.value + Z2).abs() < 1e-4);
    }

    #[test]
    fn i_values() {
        assert!((integral_i(2.0, 1e-10).unwrap().value + 2.0 * Z2).abs() < 1e-9);
        assert!((integral_i(-2.0, 1e-10).unwrap().value - Z2).abs() < 1e-9);
        assert!((integral_i(0.0, 1e-10).unwrap().value - PI * PI / 24.0).abs() < 1e-9);
        assert!(integral_i(2.5, 1e-6).is_err());
        assert!(integral_i(f64::NAN, 1e-6).is_err());
    }

    #[test]
    fn generic_integrand_approaches_endpoint_forms() {
        // Continuity of I at the rewritten endpoints.
        let near = integral_i(2.0 - 1e-9, 1e-10).unwrap().value;
        let at = integral_i(2.0, 1e-10).unwrap().value;
        assert!((near - at).abs() < 1e-3);
    }

    #[test]
    fn i_prime_values() {
        let r = integral_i_prime(0.0, 1e-10).unwrap();
        assert!((r.value + PI / 4.0).abs() < 1e-10);
        for a in [-1.5, -0.5, 0.5, 1.5] {
            let q = integral_i_prime(a, 1e-8).unwrap();
            assert!((q.value - i_prime_closed_form(a)).abs() < 1e-8);
        }
        assert!(integral_i_prime(2.0, 1e-8).is_err());
        assert!(integral_i_prime(-2.0, 1e-8).is_err());
    }

    #[test]
    fn i_prime_matches_finite_difference() {
        let h = 1e-4;
        let fd = (integral_i(1.0 + h, 1e-13).unwrap().value
            - integral_i(1.0 - h, 1e-13).unwrap().value)
            / (2.0 * h);
        let exact = integral_i_prime(1.0, 1e-10).unwrap().value;
        assert!((fd - exact).abs() < 1e-6, "{fd} vs {exact}");
    }

    #[test]
    fn dilog_examples() {
        let one = dilog_series(1.0, 1_000_000).unwrap();
        assert!(one.tail_bound <= 1e-6);
        assert!(one.contains(Z2));
        assert!((one.value - 1.6449331).abs() < 1e-7);

        let zero = dilog_series(0.0, 10).unwrap();
        assert_eq!((zero.value, zero.tail_bound), (0.0, 0.0));

        let minus = dilog_series(-1.0, 1000).unwrap();
        assert!(minus.contains(-PI * PI / 12.0));
        assert!((minus.value + PI * PI / 12.0).abs() < 1e-6);

        let half = dilog_series(0.5, 20).unwrap();
        // Li₂(1/2) = π²/12 − ln²2 / 2
        let li2_half = PI * PI / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
        assert!(half.contains(li2_half));

        assert!(dilog_series(1.5, 10).is_err());
        assert!(dilog_series(0.5, 0).is_err());
    }

    #[test]
    fn identities_pass() {
        let reports = check_basel_identities(1e-7).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.passed, "{r:?}");
        }
        assert!(check_basel_identities(0.0).is_err());
    }

    #[test]
    fn j_agrees_with_dilog_and_exact_zeta2() {
        let j = integral_j(1e-10).unwrap();
        let f1 = dilog_series(1.0, 1_000_000).unwrap();
        assert!((j.value + f1.value).abs() <= j.abs_error_estimate + f1.tail_bound);
    }
}
