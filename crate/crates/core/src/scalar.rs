//! Gaussian-rational scalars: the exact coefficient field Q(i).
//!
//! Every number the verification engines touch is a [`Scalar`]: a pair of
//! arbitrary-precision rationals (real and imaginary part). Arithmetic is
//! exact; nothing here ever rounds.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A Gaussian rational `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// Real rational `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "ratio with zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// Gaussian rational `p/q + r/s·i`.
    pub fn gaussian(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "gaussian with zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::new(BigInt::from(r), BigInt::from(s)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²` as a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, negative exponents allowed on nonzero scalars.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Approximate value as a complex double (used only by the numeric suite).
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

/// Rising factorial `(a)_n = a(a+1)···(a+n-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = &acc * &term;
        term = &term + &Scalar::one();
    }
    acc
}

/// q-shifted factorial `(a;q)_n = ∏_{k=0}^{n-1} (1 - a q^k)`, with `(a;q)_0 = 1`.
pub fn qpochhammer(a: &Scalar, q: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = &acc * &(&Scalar::one() - &aq);
        aq = &aq * q;
    }
    acc
}

/// Multi-argument form `(a₁,…,a_r;q)_n = ∏_j (a_j;q)_n`.
pub fn qpochhammer_multi(bases: &[&Scalar], q: &Scalar, n: u32) -> Scalar {
    bases.iter().fold(Scalar::one(), |acc, a| &acc * &qpochhammer(a, q, n))
}

/// `n!` as a scalar.
pub fn factorial(n: u32) -> Scalar {
    rising_factorial(&Scalar::one(), n)
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Renders as `re`, `im i`, or `re+im i` with exact rational parts,
    /// e.g. `3/8`, `1/2+1/3i`, `-2i`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_part = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{im_part}")
        } else if self.im.is_negative() {
            write!(f, "{}{im_part}", fmt_rational(&self.re))
        } else {
            write!(f, "{}+{im_part}", fmt_rational(&self.re))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
forward_binop!(Add, add);

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
forward_binop!(Sub, sub);

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

/// Panics on division by zero; use [`Scalar::try_div`] where the divisor
/// can legitimately vanish at a degenerate binding.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division by zero")
    }
}
forward_binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        // (1+i)(1-i) = |1+i|² = 2
        let a = Scalar::gaussian(1, 1, 1, 1);
        let b = a.conj();
        assert_eq!(&a * &b, Scalar::int(2));
        // (3/8)/(3/8) = 1
        let c = Scalar::ratio(3, 8);
        assert_eq!(c.try_div(&c).unwrap(), Scalar::one());
        // (1/2 + i/3) + (1/2 - i/3) = 1
        let d = Scalar::gaussian(1, 2, 1, 3);
        assert_eq!(&d + &d.conj(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().try_div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation_is_multiplicative_involution() {
        let s = Scalar::gaussian(2, 3, -1, 5);
        let t = Scalar::gaussian(-4, 7, 1, 2);
        assert_eq!(s.conj().conj(), s);
        assert_eq!((&s * &t).conj(), &s.conj() * &t.conj());
    }

    #[test]
    fn rising_factorial_values() {
        let a = Scalar::gaussian(1, 3, 1, 7);
        assert_eq!(rising_factorial(&a, 0), Scalar::one());
        // (3/2)(5/2) = 15/4
        assert_eq!(rising_factorial(&Scalar::ratio(3, 2), 2), Scalar::ratio(15, 4));
        // a factor hits zero
        assert_eq!(rising_factorial(&Scalar::int(-2), 3), Scalar::zero());
    }

    #[test]
    fn qpochhammer_values() {
        let a = Scalar::ratio(1, 2);
        let q = Scalar::ratio(1, 2);
        assert_eq!(qpochhammer(&a, &q, 0), Scalar::one());
        // (1/2; 1/2)_2 = (1 - 1/2)(1 - 1/4) = 3/8
        assert_eq!(qpochhammer(&a, &q, 2), Scalar::ratio(3, 8));
        assert_eq!(qpochhammer(&Scalar::zero(), &q, 5), Scalar::one());
    }

    #[test]
    fn integer_powers() {
        let s = Scalar::ratio(2, 3);
        assert_eq!(s.pow(3).unwrap(), Scalar::ratio(8, 27));
        assert_eq!(s.pow(-2).unwrap(), Scalar::ratio(9, 4));
        assert_eq!(s.pow(0).unwrap(), Scalar::one());
        assert!(Scalar::zero().pow(-1).is_err());
    }

    #[test]
    fn display_formats() {
        assert_eq!(Scalar::gaussian(1, 2, 1, 3).to_string(), "1/2+1/3i");
        assert_eq!(Scalar::ratio(-3, 8).to_string(), "-3/8");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::gaussian(1, 1, -1, 2).to_string(), "1-1/2i");
    }
}
