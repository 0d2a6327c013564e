//! Decimal fixed-point rendering of `coeff · πˢ` to a requested number of
//! significant digits.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ladder::ClosedFormValue;
use crate::rational::Rational;

/// Working digits added on top of every requested precision.
pub const GUARD_DIGITS: u32 = 10;

/// Smallest precision accepted by [`closed_form_to_float`].
pub const MIN_PRECISION_DIGITS: u32 = 15;

/// `mantissa · 10^(−scale)`, carrying the number of significant digits that
/// are known to be correct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreciseFloat {
    mantissa: BigInt,
    scale: u32,
    digits: u32,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

/// `arctan(1/x) · unit`, truncated.
fn arctan_inv(x: u32, unit: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut power = unit / x;
    let mut sum = power.clone();
    let mut k = 1u32;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// `⌊π · 10^digits⌉`, accurate to within a couple of units.
pub fn pi_scaled(digits: u32) -> BigInt {
    // π = 16·arctan(1/5) − 4·arctan(1/239)
    let unit = pow10(digits + GUARD_DIGITS);
    let pi = arctan_inv(5, &unit) * 16 - arctan_inv(239, &unit) * 4;
    pi / pow10(GUARD_DIGITS)
}

/// `coeff · πˢ` with relative error at most `10^(−digits)`.
pub fn rational_times_pi_power(coeff: &Rational, s: u32, digits: u32) -> PreciseFloat {
    if coeff.is_zero() {
        return PreciseFloat {
            mantissa: BigInt::zero(),
            scale: 0,
            digits,
        };
    }
    // Each of the s truncated products costs at most one unit in the last
    // place relative to a value ≥ 1.
    let extra = ((2 * s as u64 + 2) as f64).log10().ceil() as u32;
    let work = digits + GUARD_DIGITS + extra;
    let one = pow10(work);
    let pi = pi_scaled(work);
    let mut pow = one.clone();
    for _ in 0..s {
        pow = pow * &pi / &one;
    }

    // Shift small results up so the final integer division keeps enough
    // significant digits.
    let log10_2 = std::f64::consts::LOG10_2;
    let magnitude = coeff.numer().bits() as f64 * log10_2 - coeff.denom().bits() as f64 * log10_2
        + s as f64 * std::f64::consts::PI.log10();
    let lift = (-magnitude).ceil().max(0.0) as u32 + 2;

    let mantissa = coeff.numer() * pow * pow10(lift) / coeff.denom();
    PreciseFloat {
        mantissa,
        scale: work + lift,
        digits,
    }
}

/// `v.coeff · πˢ` with at least `precision_digits` correct significant
/// digits. Requests below 15 digits are raised to 15.
pub fn closed_form_to_float(v: &ClosedFormValue, precision_digits: u32) -> PreciseFloat {
    let digits = precision_digits.max(MIN_PRECISION_DIGITS);
    rational_times_pi_power(v.coeff(), v.s(), digits)
}

impl PreciseFloat {
    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Rounds half away from zero to `sig` significant digits, printed in
    /// positional notation with trailing zeros kept.
    pub fn to_sig_string(&self, sig: u32) -> String {
        if self.mantissa.is_zero() {
            return "0".to_owned();
        }
        let sig = sig.max(1);
        let abs = self.mantissa.abs();
        let len = abs.to_string().len() as u32;
        let mut scale = self.scale as i64;
        let kept = if len > sig {
            let drop = pow10(len - sig);
            let (mut kept, rem) = abs.div_rem(&drop);
            if rem * 2u32 >= drop {
                kept += 1u32;
            }
            scale -= (len - sig) as i64;
            if kept == pow10(sig) {
                kept /= 10u32;
                scale -= 1;
            }
            kept
        } else {
            scale += (sig - len) as i64;
            abs * pow10(sig - len)
        };

        let body = kept.to_string();
        let sig = sig as i64;
        let mut out = String::new();
        if self.mantissa.sign() == Sign::Minus {
            out.push('-');
        }
        if scale <= 0 {
            out.push_str(&body);
            out.extend(std::iter::repeat_n('0', (-scale) as usize));
        } else if scale >= sig {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (scale - sig) as usize));
            out.push_str(&body);
        } else {
            let (int, frac) = body.split_at((sig - scale) as usize);
            out.push_str(int);
            out.push('.');
            out.push_str(frac);
        }
        out
    }

    /// Nearest `f64` (17 significant digits parsed with correct rounding).
    pub fn to_f64(&self) -> f64 {
        self.to_sig_string(17).parse().expect("decimal literal")
    }
}

impl fmt::Display for PreciseFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sig_string(self.digits))
    }
}
