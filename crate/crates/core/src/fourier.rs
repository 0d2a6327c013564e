//! Quadrature check of the Fourier coefficients of the 2π-periodic |x|.
//!
//! On [−π, π]: `a₀ = π`, `aₙ = 2((−1)ⁿ − 1)/(n²π)` (so `−4/(n²π)` for odd n
//! and 0 for even n), and `bₙ = 0`.

use std::f64::consts::PI;

use crate::quadrature::{tanh_sinh, Abscissa, QuadratureError, QuadratureResult};
use crate::report::{render_f64, VerificationReport};

/// Closed-form cosine coefficient `aₙ`.
pub fn abs_cosine_coefficient(n: u32) -> f64 {
    if n == 0 {
        PI
    } else if n.is_multiple_of(2) {
        0.0
    } else {
        -4.0 / ((n as f64) * (n as f64) * PI)
    }
}

/// A coefficient estimate; `failure` is set when either half missed its
/// tolerance, in which case `value` and `estimate` are the best achieved.
struct Coefficient {
    value: f64,
    estimate: f64,
    failure: Option<QuadratureError>,
}

/// `(1/π) ∫_{−π}^{π} |x| g(nx) dx`, split at the kink.
fn coefficient(n: u32, g: fn(f64) -> f64, piece_tol: f64) -> Coefficient {
    let n = n as f64;
    // |x| is the distance to 0, the right end of [−π, 0] and left end of [0, π].
    let halves = [
        tanh_sinh(|p: Abscissa| p.from_right * g(n * p.x), -PI, 0.0, piece_tol),
        tanh_sinh(|p: Abscissa| p.from_left * g(n * p.x), 0.0, PI, piece_tol),
    ];
    let mut c = Coefficient {
        value: 0.0,
        estimate: 0.0,
        failure: None,
    };
    for half in halves {
        let best = match half {
            Ok(r) => r,
            Err(e) => {
                let best = match &e {
                    QuadratureError::ToleranceUnreachable { best, .. } => *best,
                    _ => QuadratureResult {
                        value: f64::NAN,
                        abs_error_estimate: f64::MAX,
                        evaluations: 0,
                    },
                };
                c.failure.get_or_insert(e);
                best
            }
        };
        c.value += best.value / PI;
        c.estimate += best.abs_error_estimate / PI;
    }
    c
}

pub fn fourier_coefficient_check(n: u32, tol: f64) -> VerificationReport {
    let a_exact = abs_cosine_coefficient(n);
    let piece_tol = tol * PI / 2.0;
    let a = coefficient(n, f64::cos, piece_tol);
    let b = coefficient(n, f64::sin, piece_tol);

    let err = (a.value - a_exact).abs().max(b.value.abs());
    let report = VerificationReport::compare(
        format!("fourier(n={n})"),
        format!("a={}; b={}", render_f64(a_exact), render_f64(0.0)),
        format!("a={}; b={}", render_f64(a.value), render_f64(b.value)),
        if err.is_finite() { err } else { f64::MAX },
        tol,
        0.0,
    );
    match a.failure.or(b.failure) {
        Some(e) => report.unreachable(a.estimate.max(b.estimate), &e.to_string()),
        None => report,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_coefficients() {
        for n in [0, 1, 2] {
            let r = fourier_coefficient_check(n, 1e-9);
            assert!(r.passed, "{r:?}");
        }
        assert!((abs_cosine_coefficient(1) + 1.2732395447351628).abs() < 1e-15);
        assert_eq!(abs_cosine_coefficient(2), 0.0);
    }

    #[test]
    fn unreachable_tolerance_fails_with_reason() {
        let r = fourier_coefficient_check(3, 1e-30);
        assert!(!r.passed);
        assert!(r.numeric.contains("unreachable"), "{}", r.numeric);
        assert!(r.abs_error > r.tolerance);
    }
}
