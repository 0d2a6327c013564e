//! Exact values of `ζ(2k)` and of the Dirichlet beta function `β(2k+1)`
//! from an iterated integration ladder over the Fourier series of `|x|`,
//! together with numerical checks of those values and of the integral
//! evaluation of `ζ(2) = π²/6`.
//!
//! * [`rational`], [`poly`], [`ladder`], [`wire`]: exact arithmetic. No
//!   floating point.
//! * [`oracle`], [`series`], [`precise`], [`fourier`], [`report`],
//!   [`suite`]: independent closed forms, truncated sums with tail bounds,
//!   and the comparison reports.
//! * [`quadrature`], [`basel`]: tanh-sinh quadrature and the integrals
//!   `J`, `I(α)`, `I′(α)`.

pub mod basel;
pub mod error;
pub mod fourier;
pub mod ladder;
pub mod oracle;
pub mod poly;
pub mod precise;
pub mod quadrature;
pub mod rational;
pub mod report;
pub mod series;
pub mod suite;
pub mod wire;

pub use error::Error;
pub use ladder::{
    beta_value, closed_form, lambda_value, make_base_rung, next_rung, run_ladder, zeta_from_lambda,
    ClosedFormValue, LadderRung, Series, TrigKind,
};
pub use poly::PiPolynomial;
pub use precise::{closed_form_to_float, PreciseFloat};
pub use quadrature::{QuadratureError, QuadratureResult};
pub use rational::Rational;
pub use report::VerificationReport;
pub use series::PartialSumResult;
