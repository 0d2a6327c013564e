//! The integration ladder and the closed forms read off its rungs.
//!
//! Rung `s` holds the closed form of `Σₙ trig((2n+1)x) / (2n+1)ˢ` on
//! `[0, π/2]`, where `trig` is cosine for even `s` and sine for odd `s`.
//! The ladder starts from the Fourier series of `|x|`,
//!
//! ```text
//! Σ cos((2n+1)x) / (2n+1)² = π²/8 − πx/4
//! ```
//!
//! and climbs by alternately integrating from 0 (cosine to sine) and
//! integrating up to π/2 (sine to cosine).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::poly::PiPolynomial;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    CosineForm,
    SineForm,
}

impl TrigKind {
    pub fn for_degree(s: u32) -> TrigKind {
        if s.is_multiple_of(2) {
            TrigKind::CosineForm
        } else {
            TrigKind::SineForm
        }
    }

    /// Short wire name: `cos` or `sin`.
    pub fn as_str(self) -> &'static str {
        match self {
            TrigKind::CosineForm => "cos",
            TrigKind::SineForm => "sin",
        }
    }

    pub fn apply(self, x: f64) -> f64 {
        match self {
            TrigKind::CosineForm => x.cos(),
            TrigKind::SineForm => x.sin(),
        }
    }
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LadderRung {
    s: u32,
    kind: TrigKind,
    poly: PiPolynomial,
}

impl LadderRung {
    /// Validates degree, parity and the endpoint condition of the rung's kind.
    pub fn new(s: u32, kind: TrigKind, poly: PiPolynomial) -> Result<Self, Error> {
        if s < 2 {
            return Err(Error::InvalidArgument(format!(
                "rung degree must be ≥ 2, got {s}"
            )));
        }
        if poly.degree() != s {
            return Err(Error::InvalidArgument(format!(
                "rung s = {s} carries a degree-{} polynomial",
                poly.degree()
            )));
        }
        if kind != TrigKind::for_degree(s) {
            return Err(Error::InvalidArgument(format!(
                "rung s = {s} must be {}, not {kind}",
                TrigKind::for_degree(s)
            )));
        }
        let rung = LadderRung { s, kind, poly };
        if !rung.endpoint_vanishes() {
            return Err(Error::InvalidArgument(format!(
                "{kind} rung s = {s} does not vanish at its endpoint"
            )));
        }
        Ok(rung)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn kind(&self) -> TrigKind {
        self.kind
    }

    pub fn poly(&self) -> &PiPolynomial {
        &self.poly
    }

    /// Cosine rungs vanish at x = π/2, sine rungs at x = 0.
    pub fn endpoint_vanishes(&self) -> bool {
        let q = match self.kind {
            TrigKind::CosineForm => Rational::frac(1, 2),
            TrigKind::SineForm => Rational::zero(),
        };
        self.poly.eval_at(&q).is_zero()
    }
}

/// The base rung `π²/8 − πx/4`.
pub fn make_base_rung() -> LadderRung {
    let poly = PiPolynomial::new(vec![Rational::frac(1, 8), Rational::frac(-1, 4)])
        .expect("two coefficients");
    LadderRung {
        s: 2,
        kind: TrigKind::CosineForm,
        poly,
    }
}

pub fn next_rung(r: &LadderRung) -> LadderRung {
    let (kind, poly) = match r.kind {
        TrigKind::CosineForm => (TrigKind::SineForm, r.poly.integrate_from_zero()),
        TrigKind::SineForm => (TrigKind::CosineForm, r.poly.integrate_upto_half_pi()),
    };
    LadderRung {
        s: r.s + 1,
        kind,
        poly,
    }
}

/// Rungs for `s = 2..=s_max`.
///
/// Coefficient denominators grow roughly factorially, so memory and time
/// grow super-linearly with depth; rung 200 has denominators of
/// about 1200 bits.
pub fn run_ladder(s_max: u32) -> Result<Vec<LadderRung>, Error> {
    if s_max < 2 {
        return Err(Error::LadderTooShort(s_max));
    }
    let mut rungs = Vec::with_capacity(s_max as usize - 1);
    rungs.push(make_base_rung());
    for _ in 3..=s_max {
        let next = next_rung(rungs.last().expect("nonempty"));
        rungs.push(next);
    }
    Ok(rungs)
}

/// Which infinite series a closed form belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    /// `Σ_{n≥0} (2n+1)^(−s)`, even s.
    Lambda,
    /// `Σ_{n≥1} n^(−s)`, even s.
    Zeta,
    /// `Σ_{n≥0} (−1)ⁿ (2n+1)^(−s)`, odd s.
    Phi,
}

impl Series {
    pub fn as_str(self) -> &'static str {
        match self {
            Series::Lambda => "lambda",
            Series::Zeta => "zeta",
            Series::Phi => "phi",
        }
    }

    /// Whether the ladder yields this series at `s`.
    pub fn accepts(self, s: u32) -> bool {
        s >= 2
            && match self {
                Series::Lambda | Series::Zeta => s.is_multiple_of(2),
                Series::Phi => s % 2 == 1,
            }
    }

    pub fn parity(self) -> &'static str {
        match self {
            Series::Lambda | Series::Zeta => "even",
            Series::Phi => "odd",
        }
    }

    fn check(self, s: u32) -> Result<(), Error> {
        if self.accepts(s) {
            Ok(())
        } else {
            Err(Error::Parity {
                series: self,
                parity: self.parity(),
                s,
            })
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "lambda" => Ok(Series::Lambda),
            "zeta" => Ok(Series::Zeta),
            "phi" => Ok(Series::Phi),
            other => Err(Error::Parse(format!("unknown series {other:?}"))),
        }
    }
}

/// `coeff · πˢ`, the value of `series` at `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedFormValue {
    series: Series,
    s: u32,
    coeff: Rational,
}

impl ClosedFormValue {
    pub fn new(series: Series, s: u32, coeff: Rational) -> Result<Self, Error> {
        series.check(s)?;
        if !coeff.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "{series}({s}) coefficient must be positive, got {coeff}"
            )));
        }
        Ok(ClosedFormValue { series, s, coeff })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_power(&self) -> u32 {
        self.s
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) = ({})·π^{}",
            self.series, self.s, self.coeff, self.s
        )
    }
}

/// `λ(s)` from a cosine rung at x = 0.
pub fn lambda_value(r: &LadderRung) -> Result<ClosedFormValue, Error> {
    if r.kind != TrigKind::CosineForm {
        return Err(Error::KindMismatch {
            op: "lambda_value",
            expected: TrigKind::CosineForm,
            found: r.kind,
        });
    }
    ClosedFormValue::new(Series::Lambda, r.s, r.poly.eval_at(&Rational::zero()))
}

/// `Φ(s)` from a sine rung at x = π/2, where `sin((2n+1)π/2) = (−1)ⁿ`.
pub fn beta_value(r: &LadderRung) -> Result<ClosedFormValue, Error> {
    if r.kind != TrigKind::SineForm {
        return Err(Error::KindMismatch {
            op: "beta_value",
            expected: TrigKind::SineForm,
            found: r.kind,
        });
    }
    ClosedFormValue::new(Series::Phi, r.s, r.poly.eval_at(&Rational::frac(1, 2)))
}

/// Splitting `ζ(s)` into even and odd n gives `ζ(s) = 2ˢ/(2ˢ−1) · λ(s)`.
pub fn zeta_from_lambda(v: &ClosedFormValue) -> Result<ClosedFormValue, Error> {
    if v.series != Series::Lambda {
        return Err(Error::SeriesMismatch {
            expected: Series::Lambda,
            found: v.series,
        });
    }
    let two_s = BigInt::one() << v.s;
    let factor = Rational::new(two_s.clone(), two_s - 1)?;
    ClosedFormValue::new(Series::Zeta, v.s, &v.coeff * &factor)
}

/// Runs the ladder to depth `s` and extracts `series(s)`.
pub fn closed_form(series: Series, s: u32) -> Result<ClosedFormValue, Error> {
    series.check(s)?;
    let rungs = run_ladder(s)?;
    let top = rungs.last().expect("nonempty");
    match series {
        Series::Lambda => lambda_value(top),
        Series::Zeta => zeta_from_lambda(&lambda_value(top)?),
        Series::Phi => beta_value(top),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(r: &LadderRung) -> Vec<Rational> {
        r.poly().coeffs().to_vec()
    }

    fn fracs(cs: &[(i64, i64)]) -> Vec<Rational> {
        cs.iter().map(|&(n, d)| Rational::frac(n, d)).collect()
    }

    #[test]
    fn base_rung() {
        let r = make_base_rung();
        assert_eq!(r.s(), 2);
        assert_eq!(r.kind(), TrigKind::CosineForm);
        assert_eq!(coeffs(&r), fracs(&[(1, 8), (-1, 4)]));
        assert_eq!(r.poly().eval_at(&Rational::zero()), Rational::frac(1, 8));
        assert!(r.endpoint_vanishes());
    }

    #[test]
    fn next_rung_alternates() {
        let r3 = next_rung(&make_base_rung());
        assert_eq!((r3.s(), r3.kind()), (3, TrigKind::SineForm));
        assert_eq!(coeffs(&r3), fracs(&[(0, 1), (1, 8), (-1, 8)]));

        let rungs = run_ladder(7).unwrap();
        let r7 = next_rung(&rungs[4]);
        assert_eq!(r7, rungs[5]);
        assert_eq!(
            coeffs(&r7),
            fracs(&[
                (0, 1),
                (1, 960),
                (0, 1),
                (-1, 576),
                (0, 1),
                (1, 960),
                (-1, 2880)
            ])
        );
    }

    #[test]
    fn run_ladder_rejects_short_depths() {
        assert_eq!(run_ladder(1), Err(Error::LadderTooShort(1)));
        assert_eq!(run_ladder(0), Err(Error::LadderTooShort(0)));
        assert_eq!(run_ladder(2).unwrap(), vec![make_base_rung()]);
    }

    #[test]
    fn kind_mismatches_are_rejected() {
        let rungs = run_ladder(3).unwrap();
        assert!(matches!(
            beta_value(&rungs[0]),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            lambda_value(&rungs[1]),
            Err(Error::KindMismatch { .. })
        ));
        let phi3 = beta_value(&rungs[1]).unwrap();
        assert!(matches!(
            zeta_from_lambda(&phi3),
            Err(Error::SeriesMismatch { .. })
        ));
    }

    #[test]
    fn closed_values() {
        let cf = |series, s| closed_form(series, s).unwrap().coeff().clone();
        assert_eq!(cf(Series::Lambda, 2), Rational::frac(1, 8));
        assert_eq!(cf(Series::Lambda, 4), Rational::frac(1, 96));
        assert_eq!(cf(Series::Lambda, 6), Rational::frac(1, 960));
        assert_eq!(cf(Series::Zeta, 2), Rational::frac(1, 6));
        assert_eq!(cf(Series::Zeta, 4), Rational::frac(1, 90));
        assert_eq!(cf(Series::Zeta, 6), Rational::frac(1, 945));
        assert_eq!(cf(Series::Phi, 3), Rational::frac(1, 32));
        assert_eq!(cf(Series::Phi, 5), Rational::frac(5, 1536));
        assert_eq!(cf(Series::Phi, 7), Rational::frac(61, 184320));
        // λ(8) = (1 − 2⁻⁸)·ζ(8) with ζ(8) = π⁸/9450.
        assert_eq!(cf(Series::Lambda, 8), Rational::frac(17, 161280));
        assert_eq!(cf(Series::Zeta, 8), Rational::frac(1, 9450));
    }

    #[test]
    fn closed_form_parity() {
        assert!(matches!(
            closed_form(Series::Zeta, 3),
            Err(Error::Parity { .. })
        ));
        assert!(matches!(
            closed_form(Series::Phi, 4),
            Err(Error::Parity { .. })
        ));
        assert!(matches!(
            closed_form(Series::Phi, 1),
            Err(Error::Parity { .. })
        ));
    }

    #[test]
    fn rung_constructor_validates() {
        let base = make_base_rung();
        let p = base.poly().clone();
        assert!(LadderRung::new(2, TrigKind::SineForm, p.clone()).is_err());
        assert!(LadderRung::new(3, TrigKind::SineForm, p.clone()).is_err());
        assert_eq!(LadderRung::new(2, TrigKind::CosineForm, p).unwrap(), base);
        let bad = PiPolynomial::new(fracs(&[(1, 8), (-1, 5)])).unwrap();
        assert!(LadderRung::new(2, TrigKind::CosineForm, bad).is_err());
    }

    #[test]
    fn closed_form_value_invariants() {
        assert!(ClosedFormValue::new(Series::Zeta, 2, Rational::frac(-1, 6)).is_err());
        assert!(ClosedFormValue::new(Series::Phi, 2, Rational::one()).is_err());
        assert!(ClosedFormValue::new(Series::Lambda, 3, Rational::one()).is_err());
    }
}
