//! Quotients of Laurent polynomials with a canonical denominator.
//!
//! Only monomial content is reduced; full gcd reduction is not needed
//! because equality and identity checks go through exact cross
//! multiplication.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// `num/den` with the denominator normalized to valuation 0 and leading
/// coefficient 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(Error::VariableMismatch);
        }
        // Move the denominator's monomial content into the numerator and
        // make the denominator's top coefficient 1.
        let vd = den.valuation().unwrap();
        let shift = LaurentPoly::monomial(den.var(), Scalar::one(), -vd);
        let den = den.try_mul(&shift)?;
        let num = num.try_mul(&shift)?;
        let lead = den.coeff(den.degree().unwrap());
        let inv = lead.inv()?;
        Ok(RationalFn { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.var());
        RationalFn { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn star_conjugate(&self) -> Self {
        // Star preserves nonzero-ness of the denominator; renormalize.
        RationalFn::new(self.num.star_conjugate(), self.den.star_conjugate())
            .expect("star of nonzero denominator is nonzero")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        RationalFn::new(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let num = &self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        RationalFn::new(num.clone(), self.den.try_mul(&other.den)?)
    }

    /// Exact equality by cross multiplication.
    pub fn eq_cross(&self, other: &Self) -> Result<bool> {
        let lhs = self.num.try_mul(&other.den)?;
        let rhs = other.num.try_mul(&self.den)?;
        Ok(lhs == rhs)
    }

    /// Collapses to a Laurent polynomial when the division is exact.
    pub fn into_poly(&self) -> Result<LaurentPoly> {
        self.num.exact_divide(&self.den)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Var;

    #[test]
    fn normalization_and_equality() {
        // (z² + z) / z  ==  (z + 1) / 1
        let num = LaurentPoly::from_terms(Var::Z, &[(2, Scalar::one()), (1, Scalar::one())]);
        let den = LaurentPoly::monomial(Var::Z, Scalar::int(3), 1);
        let r = RationalFn::new(num, den).unwrap();
        assert_eq!(r.den(), &LaurentPoly::one(Var::Z));
        let s = RationalFn::from_poly(LaurentPoly::from_terms(
            Var::Z,
            &[(1, Scalar::ratio(1, 3)), (0, Scalar::ratio(1, 3))],
        ));
        assert!(r.eq_cross(&s).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        let num = LaurentPoly::one(Var::Z);
        assert_eq!(
            RationalFn::new(num, LaurentPoly::zero(Var::Z)),
            Err(Error::DivisionByZero)
        );
    }
}
