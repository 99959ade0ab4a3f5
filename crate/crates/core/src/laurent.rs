//! Laurent polynomials over the Gaussian rationals.
//!
//! One formal variable, integer exponents of either sign, coefficients in
//! Q(i). The variable is tagged: [`Var::X`] for an ordinary coordinate
//! (`x` or a sinusoidal coordinate) and [`Var::Z`] for the unit-circle
//! variable `z = e^{ix}`. The tag matters to [`LaurentPoly::star_conjugate`],
//! which negates exponents for `Z` (conjugating the power-series
//! coefficients of `g(e^{ix})` produces `ḡ(e^{-ix})`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Variable tag for a Laurent polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    /// Ordinary coordinate (`x`, or the sinusoidal coordinate itself).
    X,
    /// Unit-circle variable `z = e^{ix}`.
    Z,
}

/// Canonical Laurent polynomial: exponent → coefficient with no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn constant(var: Var, c: Scalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        LaurentPoly { var, coeffs }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Scalar::one())
    }

    /// The monomial `c·u^k`.
    pub fn monomial(var: Var, c: Scalar, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { var, coeffs }
    }

    /// Builds from (exponent, coefficient) pairs, combining duplicates.
    pub fn from_terms(var: Var, terms: &[(i64, Scalar)]) -> Self {
        let mut p = Self::zero(var);
        for (k, c) in terms {
            p.add_term(*k, c.clone());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent; `None` on the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent; `None` on the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (k, c) in other.coeffs.iter() {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (k, c) in other.coeffs.iter() {
            out.add_term(*k, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (ka, ca) in self.coeffs.iter() {
            for (kb, cb) in other.coeffs.iter() {
                out.add_term(ka + kb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `u^k ↦ c^k u^k`, i.e. `p(u) ↦ p(c·u)`. `ZeroScale` if `c = 0`.
    pub fn substitute_scale(&self, c: &Scalar) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let mut out = Self::zero(self.var);
        for (k, v) in self.coeffs.iter() {
            out.add_term(*k, v * &c.pow(*k)?);
        }
        Ok(out)
    }

    /// `p(u) ↦ p(u + c)` by binomial re-expansion. Requires an ordinary
    /// polynomial (no negative exponents).
    pub fn substitute_shift(&self, c: &Scalar) -> Result<Self> {
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(Error::NegativeExponent);
            }
        }
        // Horner: walk the coefficients from the top, multiplying by (u + c).
        let deg = match self.degree() {
            None => return Ok(self.clone()),
            Some(d) => d,
        };
        let mut out = Self::zero(self.var);
        for k in (0..=deg).rev() {
            // out = out·(u + c) + coeff_k
            let mut next = Self::zero(self.var);
            for (e, v) in out.coeffs.iter() {
                next.add_term(e + 1, v.clone());
                next.add_term(*e, v * c);
            }
            next.add_term(0, self.coeff(k));
            out = next;
        }
        Ok(out)
    }

    /// The `*`-operation on analytic functions, restricted to polynomials:
    /// conjugate every coefficient, and for `Var::Z` also negate exponents.
    pub fn star_conjugate(&self) -> Self {
        let coeffs = match self.var {
            Var::X => self.coeffs.iter().map(|(k, c)| (*k, c.conj())).collect(),
            Var::Z => self.coeffs.iter().map(|(k, c)| (-*k, c.conj())).collect(),
        };
        LaurentPoly { var: self.var, coeffs }
    }

    /// Exact quotient `q` with `q·d = self`; `NotDivisible` if none exists.
    pub fn exact_divide(&self, d: &Self) -> Result<Self> {
        self.check_var(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        // Monomials are units: shift both operands to valuation zero and do
        // ordinary long division, then restore the exponent offset.
        let vp = self.valuation().unwrap();
        let vd = d.valuation().unwrap();
        let mut rem: BTreeMap<i64, Scalar> =
            self.coeffs.iter().map(|(k, c)| (k - vp, c.clone())).collect();
        let den: BTreeMap<i64, Scalar> =
            d.coeffs.iter().map(|(k, c)| (k - vd, c.clone())).collect();
        let dd = *den.keys().next_back().unwrap();
        let dlead = den[&dd].clone();
        let mut quot: BTreeMap<i64, Scalar> = BTreeMap::new();
        while let Some((&rd, _)) = rem.iter().next_back() {
            if rd < dd {
                return Err(Error::NotDivisible {
                    context: format!("remainder of degree {rd} against divisor of degree {dd}"),
                });
            }
            let factor = rem[&rd].try_div(&dlead)?;
            let shift = rd - dd;
            for (k, c) in den.iter() {
                let e = k + shift;
                let delta = -(c * &factor);
                match rem.entry(e) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        if !delta.is_zero() {
                            slot.insert(delta);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        let sum = slot.get() + &delta;
                        if sum.is_zero() {
                            slot.remove();
                        } else {
                            *slot.get_mut() = sum;
                        }
                    }
                }
            }
            quot.insert(shift, factor);
        }
        let offset = vp - vd;
        Ok(LaurentPoly {
            var: self.var,
            coeffs: quot.into_iter().map(|(k, c)| (k + offset, c)).collect(),
        })
    }

    /// `u ↦ u⁻¹`: negates every exponent without touching coefficients.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(k, c)| (-*k, c.clone())).collect(),
        }
    }

    /// Formal derivative `d/du`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.var);
        for (k, c) in self.coeffs.iter() {
            if *k != 0 {
                out.add_term(k - 1, c * &Scalar::int(*k));
            }
        }
        out
    }

    /// Exact evaluation at a scalar point. Negative exponents require a
    /// nonzero point.
    pub fn eval(&self, v: &Scalar) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (k, c) in self.coeffs.iter() {
            acc = &acc + &(c * &v.pow(*k)?);
        }
        Ok(acc)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq).unwrap();
            }
            sq = sq.try_mul(&sq).unwrap();
            e >>= 1;
        }
        acc
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable mismatch in +")
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable mismatch in -")
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = match self.var {
            Var::X => "x",
            Var::Z => "z",
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{sym}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> LaurentPoly {
        LaurentPoly::monomial(Var::Z, Scalar::one(), k)
    }

    #[test]
    fn ring_basics() {
        // (z + z⁻¹)(z − z⁻¹) = z² − z⁻²
        let a = &z(1) + &z(-1);
        let b = &z(1) - &z(-1);
        assert_eq!(&a * &b, &z(2) - &z(-2));
        // p + 0 = p
        assert_eq!(&a + &LaurentPoly::zero(Var::Z), a);
        // (1 − a z)(1 − a z⁻¹) = (1 + a²) − a z − a z⁻¹
        let s = Scalar::ratio(2, 3);
        let f1 = &LaurentPoly::one(Var::Z) - &LaurentPoly::monomial(Var::Z, s.clone(), 1);
        let f2 = &LaurentPoly::one(Var::Z) - &LaurentPoly::monomial(Var::Z, s.clone(), -1);
        let expect = LaurentPoly::from_terms(
            Var::Z,
            &[
                (0, &Scalar::one() + &(&s * &s)),
                (1, -&s),
                (-1, -&s),
            ],
        );
        assert_eq!(&f1 * &f2, expect);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = z(1);
        let b = LaurentPoly::monomial(Var::X, Scalar::one(), 1);
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch));
    }

    #[test]
    fn scale_substitution() {
        let p = &z(1) + &z(-1);
        assert_eq!(p.substitute_scale(&Scalar::one()).unwrap(), p);
        let two = Scalar::int(2);
        let scaled = p.substitute_scale(&two).unwrap();
        let expect = LaurentPoly::from_terms(
            Var::Z,
            &[(1, Scalar::int(2)), (-1, Scalar::ratio(1, 2))],
        );
        assert_eq!(scaled, expect);
        assert_eq!(
            z(2).substitute_scale(&Scalar::ratio(1, 3)).unwrap(),
            LaurentPoly::monomial(Var::Z, Scalar::ratio(1, 9), 2)
        );
        assert_eq!(p.substitute_scale(&Scalar::zero()), Err(Error::ZeroScale));
    }

    #[test]
    fn shift_substitution() {
        let x2 = LaurentPoly::monomial(Var::X, Scalar::one(), 2);
        assert_eq!(x2.substitute_shift(&Scalar::zero()).unwrap(), x2);
        // (x − i)² = x² − 2ix − 1
        let shifted = x2.substitute_shift(&-Scalar::i()).unwrap();
        let expect = LaurentPoly::from_terms(
            Var::X,
            &[(2, Scalar::one()), (1, &Scalar::int(-2) * &Scalar::i()), (0, Scalar::int(-1))],
        );
        assert_eq!(shifted, expect);
        assert!(z(-1).substitute_shift(&Scalar::one()).is_err());
    }

    #[test]
    fn star_conjugation() {
        // var X: i·x → −i·x
        let p = LaurentPoly::monomial(Var::X, Scalar::i(), 1);
        assert_eq!(p.star_conjugate(), LaurentPoly::monomial(Var::X, -Scalar::i(), 1));
        // var Z with real coefficient: a·z → a·z⁻¹
        let a = Scalar::ratio(3, 5);
        let q = LaurentPoly::monomial(Var::Z, a.clone(), 1);
        assert_eq!(q.star_conjugate(), LaurentPoly::monomial(Var::Z, a, -1));
        // involution
        let r = LaurentPoly::from_terms(
            Var::Z,
            &[(2, Scalar::gaussian(1, 2, -1, 3)), (-1, Scalar::i())],
        );
        assert_eq!(r.star_conjugate().star_conjugate(), r);
    }

    #[test]
    fn exact_division() {
        // (z² − z⁻²)/(z − z⁻¹) = z + z⁻¹
        let p = &z(2) - &z(-2);
        let d = &z(1) - &z(-1);
        assert_eq!(p.exact_divide(&d).unwrap(), &z(1) + &z(-1));
        assert_eq!(p.exact_divide(&LaurentPoly::one(Var::Z)).unwrap(), p);
        // z / z² = z⁻¹
        assert_eq!(z(1).exact_divide(&z(2)).unwrap(), z(-1));
        // 1 + z is not divisible by z − 1
        let bad = (&LaurentPoly::one(Var::Z) + &z(1))
            .exact_divide(&(&z(1) - &LaurentPoly::one(Var::Z)));
        assert!(matches!(bad, Err(Error::NotDivisible { .. })));
        assert_eq!(z(1).exact_divide(&LaurentPoly::zero(Var::Z)), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_and_eval() {
        let p = LaurentPoly::from_terms(
            Var::X,
            &[(3, Scalar::int(2)), (1, Scalar::int(-1)), (0, Scalar::int(7))],
        );
        let dp = p.derivative();
        assert_eq!(
            dp,
            LaurentPoly::from_terms(Var::X, &[(2, Scalar::int(6)), (0, Scalar::int(-1))])
        );
        let at2 = p.eval(&Scalar::int(2)).unwrap();
        assert_eq!(at2, Scalar::int(2 * 8 - 2 + 7));
        // negative exponent at zero point is an error
        assert!(z(-1).eval(&Scalar::zero()).is_err());
    }
}
