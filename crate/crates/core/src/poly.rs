//! Homogeneous polynomials in (π, x) with exact rational coefficients.
//!
//! A polynomial of degree `s` is stored densely as `c₀..c_{s−1}` and
//! represents `Σₖ cₖ · π^(s−k) · xᵏ`. The π-power of each term is implied by
//! its index, so every value of this type is homogeneous by construction.
//! Every term carries at least one factor of π: the pure `xˢ` term never
//! arises on the ladder (integration only shifts x-powers up alongside an
//! existing π-power), so it has no slot.

use num_bigint::BigInt;

use crate::error::Error;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiPolynomial {
    coeffs: Vec<Rational>,
}

/// One stored term `coeff · π^pi_power · x^x_power`.
#[derive(Clone, Copy, Debug)]
pub struct Term<'a> {
    pub coeff: &'a Rational,
    pub pi_power: u32,
    pub x_power: u32,
}

impl PiPolynomial {
    /// Wraps `c₀..c_{s−1}`; the degree is `coeffs.len()`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(PiPolynomial { coeffs })
    }

    /// The zero polynomial of the given degree (at least 1).
    pub fn zero(degree: u32) -> Self {
        PiPolynomial {
            coeffs: vec![Rational::zero(); degree.max(1) as usize],
        }
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// Coefficients indexed by x-degree.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, x_power: usize) -> &Rational {
        &self.coeffs[x_power]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = Term<'_>> {
        let s = self.degree();
        self.coeffs.iter().enumerate().map(move |(k, c)| Term {
            coeff: c,
            pi_power: s - k as u32,
            x_power: k as u32,
        })
    }

    /// Every term has π-degree + x-degree equal to the polynomial degree.
    pub fn is_homogeneous(&self) -> bool {
        let s = self.degree();
        self.coeffs.len() == s as usize && self.terms().all(|t| t.pi_power + t.x_power == s)
    }

    /// Antiderivative in x vanishing at 0: `cₖπ^(s−k)xᵏ ↦ cₖ/(k+1) · π^(s−k)x^(k+1)`.
    pub fn integrate_from_zero(&self) -> PiPolynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.antiderivative_terms());
        PiPolynomial { coeffs }
    }

    /// `A(π/2) − A(x)` where `A` is the zero-constant antiderivative.
    ///
    /// The term `aⱼ π^(s+1−j) xʲ` of `A` contributes `aⱼ / 2ʲ` to the constant
    /// (pure π^(s+1)) coefficient once x = π/2 is substituted.
    pub fn integrate_upto_half_pi(&self) -> PiPolynomial {
        let mut constant = Rational::zero();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, a) in self.antiderivative_terms().enumerate() {
            let j = k as u32 + 1;
            constant = constant + a.div_pow2(j);
            coeffs.push(-a);
        }
        coeffs[0] = constant;
        PiPolynomial { coeffs }
    }

    fn antiderivative_terms(&self) -> impl Iterator<Item = Rational> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / &Rational::from_integer(BigInt::from(k + 1)))
    }

    /// Highest x-power with a nonzero coefficient; `None` for zero.
    pub fn x_degree(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|k| k as u32)
    }

    /// Term-wise derivative in x; degree drops by one. Polynomials with no
    /// x-dependence are rejected.
    pub fn differentiate(&self) -> Result<PiPolynomial, Error> {
        if self.x_degree().unwrap_or(0) == 0 {
            return Err(Error::DegreeZero);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rational::from_integer(BigInt::from(k)))
            .collect();
        Ok(PiPolynomial { coeffs })
    }

    /// Coefficient of π^s in `p(qπ)`, i.e. `Σₖ cₖ qᵏ`.
    pub fn eval_at(&self, q: &Rational) -> Rational {
        if q.is_zero() {
            return self.coeffs[0].clone();
        }
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + c)
    }
}

impl std::ops::Neg for &PiPolynomial {
    type Output = PiPolynomial;
    fn neg(self) -> PiPolynomial {
        PiPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[(i64, i64)]) -> PiPolynomial {
        PiPolynomial::new(cs.iter().map(|&(n, d)| Rational::frac(n, d)).collect()).unwrap()
    }

    #[test]
    fn integrate_from_zero_matches_sine_rungs() {
        let base = poly(&[(1, 8), (-1, 4)]);
        assert_eq!(base.integrate_from_zero(), poly(&[(0, 1), (1, 8), (-1, 8)]));

        let s4 = poly(&[(1, 96), (0, 1), (-1, 16), (1, 24)]);
        assert_eq!(
            s4.integrate_from_zero(),
            poly(&[(0, 1), (1, 96), (0, 1), (-1, 48), (1, 96)])
        );
    }

    #[test]
    fn integrate_upto_half_pi_matches_cosine_rungs() {
        let s3 = poly(&[(0, 1), (1, 8), (-1, 8)]);
        assert_eq!(
            s3.integrate_upto_half_pi(),
            poly(&[(1, 96), (0, 1), (-1, 16), (1, 24)])
        );

        let s5 = poly(&[(0, 1), (1, 96), (0, 1), (-1, 48), (1, 96)]);
        assert_eq!(
            s5.integrate_upto_half_pi(),
            poly(&[(1, 960), (0, 1), (-1, 192), (0, 1), (1, 192), (-1, 480)])
        );
    }

    #[test]
    fn zero_stays_zero() {
        let z = PiPolynomial::zero(3);
        let a = z.integrate_from_zero();
        let b = z.integrate_upto_half_pi();
        assert!(a.is_zero() && a.degree() == 4);
        assert!(b.is_zero() && b.degree() == 4);
    }

    #[test]
    fn differentiate_inverts_both_steps() {
        let base = poly(&[(1, 8), (-1, 4)]);
        assert_eq!(base.integrate_from_zero().differentiate().unwrap(), base);

        let s3 = poly(&[(0, 1), (1, 8), (-1, 8)]);
        let s4 = s3.integrate_upto_half_pi();
        assert_eq!(s4.differentiate().unwrap(), -&s3);
    }

    #[test]
    fn differentiate_rejects_constants() {
        // π²/8 as a degree-2 polynomial.
        assert_eq!(
            poly(&[(1, 8), (0, 1)]).differentiate(),
            Err(Error::DegreeZero)
        );
        assert_eq!(poly(&[(1, 8)]).differentiate(), Err(Error::DegreeZero));
        assert_eq!(
            PiPolynomial::zero(3).differentiate(),
            Err(Error::DegreeZero)
        );
    }

    #[test]
    fn evaluation_points() {
        let base = poly(&[(1, 8), (-1, 4)]);
        assert_eq!(base.eval_at(&Rational::zero()), Rational::frac(1, 8));
        assert_eq!(base.eval_at(&Rational::frac(1, 2)), Rational::zero());
        let s3 = poly(&[(0, 1), (1, 8), (-1, 8)]);
        assert_eq!(s3.eval_at(&Rational::frac(1, 2)), Rational::frac(1, 32));
    }

    #[test]
    fn empty_coefficients_rejected() {
        assert!(PiPolynomial::new(vec![]).is_err());
    }

    #[test]
    fn terms_carry_implied_pi_power() {
        let p = poly(&[(1, 96), (0, 1), (-1, 16), (1, 24)]);
        let powers: Vec<_> = p.terms().map(|t| (t.pi_power, t.x_power)).collect();
        assert_eq!(powers, vec![(4, 0), (3, 1), (2, 2), (1, 3)]);
        assert_eq!(p.degree(), 4);
        assert_eq!(p.x_degree(), Some(3));
        assert!(p.is_homogeneous());
    }
}
