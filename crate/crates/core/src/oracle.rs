//! Independent closed forms from Bernoulli and Euler numbers.
//!
//! These use none of the ladder machinery and serve as exact cross-checks:
//!
//! ```text
//! ζ(2k)   = (−1)^(k+1) B₂ₖ (2π)^(2k) / (2·(2k)!)
//! β(2k+1) = (−1)^k E₂ₖ π^(2k+1) / (4^(k+1)·(2k)!)
//! ```

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::ladder::{ClosedFormValue, Series};
use crate::rational::Rational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
/// `EULER[j] = E₂ⱼ`.
static EULER: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Fills `cache` up to `index` under the write lock, then reads.
fn cached<T: Clone>(cache: &RwLock<Vec<T>>, index: usize, extend: impl Fn(&[T]) -> T) -> T {
    if let Some(v) = cache.read().expect("cache poisoned").get(index) {
        return v.clone();
    }
    let mut table = cache.write().expect("cache poisoned");
    while table.len() <= index {
        let next = extend(&table);
        table.push(next);
    }
    table[index].clone()
}

/// Bernoulli number `Bₘ` (with `B₁ = −1/2`), from
/// `Σ_{j=0}^{m} C(m+1, j) Bⱼ = 0`.
pub fn bernoulli(m: u32) -> Rational {
    cached(&BERNOULLI, m as usize, |prev| {
        let m = prev.len() as u64;
        if m == 0 {
            return Rational::one();
        }
        let mut binom = BigInt::one();
        let mut sum = Rational::zero();
        for (j, b) in prev.iter().enumerate() {
            sum = sum + b * &Rational::from_integer(binom.clone());
            let j = j as u64;
            binom = binom * (m + 1 - j) / (j + 1);
        }
        -(sum / Rational::from_integer(BigInt::from(m + 1)))
    })
}

/// Euler number `E₂ₖ`, from `Σ_{j=0}^{k} C(2k, 2j) E₂ⱼ = 0`.
pub fn euler_even(k: u32) -> BigInt {
    cached(&EULER, k as usize, |prev| {
        let k = prev.len() as u64;
        if k == 0 {
            return BigInt::one();
        }
        let n = 2 * k;
        // C(n, i) for i = 0, 1, …, stepping through the even i.
        let mut binom = BigInt::one();
        let mut sum = BigInt::zero();
        for (j, e) in prev.iter().enumerate() {
            let i = 2 * j as u64;
            sum += &binom * e;
            binom = binom * (n - i) / (i + 1);
            binom = binom * (n - i - 1) / (i + 2);
        }
        -sum
    })
}

pub fn bernoulli_zeta_oracle(s: u32) -> Result<ClosedFormValue, Error> {
    if s < 2 || !s.is_multiple_of(2) {
        return Err(Error::Parity {
            series: Series::Zeta,
            parity: "even",
            s,
        });
    }
    let k = s / 2;
    let b = bernoulli(s);
    let signed = if k % 2 == 1 { b } else { -b };
    let coeff = signed * Rational::from_integer(BigInt::one() << s)
        / Rational::from_integer(factorial(s) * 2u32);
    ClosedFormValue::new(Series::Zeta, s, coeff)
}

pub fn euler_beta_oracle(s: u32) -> Result<ClosedFormValue, Error> {
    if s < 3 || s % 2 != 1 {
        return Err(Error::Parity {
            series: Series::Phi,
            parity: "odd",
            s,
        });
    }
    let k = (s - 1) / 2;
    let e = euler_even(k);
    let signed = if k.is_multiple_of(2) { e } else { -e };
    let denom = (BigInt::one() << (2 * (k + 1))) * factorial(2 * k);
    ClosedFormValue::new(Series::Phi, s, Rational::new(signed, denom)?)
}
