//! Double-exponential (tanh-sinh) quadrature on finite intervals.
//!
//! The substitution `x = c + h·tanh(π/2·sinh t)` crowds nodes at both ends
//! fast enough that integrable endpoint singularities (logarithms, inverse
//! square roots) need no special treatment. Integrands receive each node's
//! distance to both endpoints computed without cancellation, so e.g.
//! `ln(1 − x)` can be evaluated as `ln(from_right)` right up to `x = 1`.
//!
//! Refinement halves the step each level and reuses all earlier nodes.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::series::CompensatedSum;

/// Default cap on integrand evaluations per integral.
pub const DEFAULT_MAX_EVALUATIONS: usize = 1_000_000;

/// A node, with its distances to the interval ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_left: f64,
    pub from_right: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum QuadratureError {
    #[error(
        "tolerance {tol:e} unreachable (error estimate {:e} after {} evaluations)",
        best.abs_error_estimate,
        best.evaluations
    )]
    ToleranceUnreachable { tol: f64, best: QuadratureResult },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),

    #[error("integrand is not finite at x = {0}")]
    NonFinite(f64),
}

#[derive(Clone, Copy, Debug)]
pub struct TanhSinh {
    pub max_evaluations: usize,
    /// Levels computed before the error estimate is trusted.
    pub min_levels: u32,
    /// Half-width of the truncated t-range. At 6.0 the outermost node sits
    /// about 1e−275 from the endpoint.
    pub t_max: f64,
}

impl Default for TanhSinh {
    fn default() -> Self {
        TanhSinh {
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
            min_levels: 3,
            t_max: 6.0,
        }
    }
}

/// Node and weight for parameter t on [−1, 1]: `(x, 1 − |x|, w)`.
fn node(t: f64) -> (f64, f64, f64) {
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u.abs()).exp();
    let gap = 2.0 * e / (1.0 + e);
    let weight = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
    (u.tanh(), gap, weight)
}

impl TanhSinh {
    pub fn integrate<F>(
        &self,
        f: F,
        a: f64,
        b: f64,
        tol: f64,
    ) -> Result<QuadratureResult, QuadratureError>
    where
        F: Fn(Abscissa) -> f64,
    {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(QuadratureError::InvalidTolerance(tol));
        }
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(QuadratureError::InvalidInterval(a, b));
        }
        let half = 0.5 * (b - a);
        let mid = a + half;

        let eval = |t: f64| -> Result<(f64, f64), QuadratureError> {
            let (xr, gap, w) = node(t);
            let near = half * gap;
            if near == 0.0 || w == 0.0 {
                return Ok((0.0, 0.0));
            }
            let far = (b - a) - near;
            let point = if t > 0.0 {
                Abscissa {
                    x: b - near,
                    from_left: far,
                    from_right: near,
                }
            } else if t < 0.0 {
                Abscissa {
                    x: a + near,
                    from_left: near,
                    from_right: far,
                }
            } else {
                Abscissa {
                    x: mid + half * xr,
                    from_left: half,
                    from_right: half,
                }
            };
            let y = f(point);
            if !y.is_finite() {
                return Err(QuadratureError::NonFinite(point.x));
            }
            Ok((w * y, (w * y).abs()))
        };

        let mut sum = CompensatedSum::default();
        let mut abs_sum = 0.0;
        let mut evaluations = 0usize;
        let mut h = 1.0;

        // Level 0: integer multiples of h.
        let n0 = (self.t_max / h).floor() as i64;
        for k in -n0..=n0 {
            let (v, av) = eval(k as f64 * h)?;
            sum.add(v);
            abs_sum += av;
            evaluations += 1;
        }
        let mut estimate = h * half * sum.value();
        let mut best = QuadratureResult {
            value: estimate,
            abs_error_estimate: f64::INFINITY,
            evaluations,
        };

        let mut level = 0u32;
        loop {
            level += 1;
            h *= 0.5;
            let count = (self.t_max / h).floor() as i64;
            let new_points = (count + 1) as usize; // odd k in [−count, count]
            if evaluations + new_points > self.max_evaluations {
                return Err(QuadratureError::ToleranceUnreachable { tol, best });
            }
            // Smallest odd k ≥ −count.
            let mut k = -count | 1;
            while k <= count {
                let (v, av) = eval(k as f64 * h)?;
                sum.add(v);
                abs_sum += av;
                evaluations += 1;
                k += 2;
            }
            let refined = h * half * sum.value();
            let rounding = 8.0 * f64::EPSILON * h * half * abs_sum;
            let change = (refined - estimate).abs();
            let err = change + rounding;
            estimate = refined;
            best = QuadratureResult {
                value: refined,
                abs_error_estimate: err,
                evaluations,
            };
            if level >= self.min_levels {
                if err <= tol {
                    return Ok(best);
                }
                // Refinement has stalled at the rounding floor.
                if change <= rounding {
                    return Err(QuadratureError::ToleranceUnreachable { tol, best });
                }
            }
        }
    }
}

/// Integrates with the default settings.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(Abscissa) -> f64,
{
    TanhSinh::default().integrate(f, a, b, tol)
}
