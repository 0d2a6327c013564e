//! JSON shapes for [`ClosedFormValue`] and [`LadderRung`].
//!
//! Big integers travel as decimal strings, never as JSON numbers:
//!
//! ```text
//! {"series":"phi","s":7,"pi_power":7,"numerator":"61","denominator":"184320"}
//! {"s":2,"kind":"cos","coeffs":[["1","8"],["-1","4"]]}
//! ```
//!
//! Decoding is strict: fractions must already be in lowest terms with a
//! positive denominator, and rung invariants are re-checked.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ladder::{ClosedFormValue, LadderRung, Series, TrigKind};
use crate::poly::PiPolynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedFormWire {
    pub series: String,
    pub s: u32,
    pub pi_power: u32,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RungWire {
    pub s: u32,
    pub kind: String,
    pub coeffs: Vec<[String; 2]>,
}

fn parse_canonical(numer: &str, denom: &str) -> Result<Rational, Error> {
    let int = |t: &str| {
        BigInt::from_str(t).map_err(|_| Error::Parse(format!("not a decimal integer: {t:?}")))
    };
    let (n, d) = (int(numer)?, int(denom)?);
    let r = Rational::new(n.clone(), d.clone())?;
    if r.numer() != &n || r.denom() != &d {
        return Err(Error::Parse(format!(
            "{numer}/{denom} is not in lowest terms"
        )));
    }
    Ok(r)
}

impl From<&ClosedFormValue> for ClosedFormWire {
    fn from(v: &ClosedFormValue) -> Self {
        ClosedFormWire {
            series: v.series().as_str().to_owned(),
            s: v.s(),
            pi_power: v.pi_power(),
            numerator: v.coeff().numer().to_string(),
            denominator: v.coeff().denom().to_string(),
        }
    }
}

impl TryFrom<ClosedFormWire> for ClosedFormValue {
    type Error = Error;

    fn try_from(w: ClosedFormWire) -> Result<Self, Error> {
        if w.pi_power != w.s {
            return Err(Error::Parse(format!(
                "pi_power {} does not match s {}",
                w.pi_power, w.s
            )));
        }
        let series = Series::from_str(&w.series)?;
        ClosedFormValue::new(series, w.s, parse_canonical(&w.numerator, &w.denominator)?)
    }
}

impl From<&LadderRung> for RungWire {
    fn from(r: &LadderRung) -> Self {
        RungWire {
            s: r.s(),
            kind: r.kind().as_str().to_owned(),
            coeffs: r
                .poly()
                .coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<RungWire> for LadderRung {
    type Error = Error;

    fn try_from(w: RungWire) -> Result<Self, Error> {
        let kind = match w.kind.as_str() {
            "cos" => TrigKind::CosineForm,
            "sin" => TrigKind::SineForm,
            other => return Err(Error::Parse(format!("unknown rung kind {other:?}"))),
        };
        let coeffs = w
            .coeffs
            .iter()
            .map(|[n, d]| parse_canonical(n, d))
            .collect::<Result<Vec<_>, _>>()?;
        LadderRung::new(w.s, kind, PiPolynomial::new(coeffs)?)
    }
}

impl Serialize for ClosedFormValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ClosedFormWire::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ClosedFormValue {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let w = ClosedFormWire::deserialize(de)?;
        ClosedFormValue::try_from(w).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LadderRung {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RungWire::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LadderRung {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let w = RungWire::deserialize(de)?;
        LadderRung::try_from(w).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::{closed_form, make_base_rung};

    #[test]
    fn base_rung_json() {
        let json = serde_json::to_string(&make_base_rung()).unwrap();
        assert_eq!(
            json,
            r#"{"s":2,"kind":"cos","coeffs":[["1","8"],["-1","4"]]}"#
        );
        let back: LadderRung = serde_json::from_str(&json).unwrap();
        assert_eq!(back, make_base_rung());
    }

    #[test]
    fn phi7_json() {
        let v = closed_form(Series::Phi, 7).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"series":"phi","s":7,"pi_power":7,"numerator":"61","denominator":"184320"}"#
        );
    }

    #[test]
    fn decoding_is_strict() {
        let bad = [
            r#"{"series":"phi","s":7,"pi_power":6,"numerator":"61","denominator":"184320"}"#,
            r#"{"series":"zeta","s":3,"pi_power":3,"numerator":"1","denominator":"2"}"#,
            r#"{"series":"zeta","s":2,"pi_power":2,"numerator":"2","denominator":"12"}"#,
            r#"{"series":"zeta","s":2,"pi_power":2,"numerator":"1","denominator":"-6"}"#,
            r#"{"series":"zeta","s":2,"pi_power":2,"numerator":1,"denominator":"6"}"#,
            r#"{"series":"eta","s":2,"pi_power":2,"numerator":"1","denominator":"6"}"#,
        ];
        for b in bad {
            assert!(serde_json::from_str::<ClosedFormValue>(b).is_err(), "{b}");
        }
        let bad_rungs = [
            r#"{"s":2,"kind":"sin","coeffs":[["1","8"],["-1","4"]]}"#,
            r#"{"s":3,"kind":"sin","coeffs":[["1","8"],["-1","4"]]}"#,
            r#"{"s":2,"kind":"cos","coeffs":[["1","8"],["-1","5"]]}"#,
            r#"{"s":2,"kind":"tan","coeffs":[["1","8"],["-1","4"]]}"#,
        ];
        for b in bad_rungs {
            assert!(serde_json::from_str::<LadderRung>(b).is_err(), "{b}");
        }
    }
}
