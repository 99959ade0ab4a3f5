//! Small shared helpers for the family descriptors.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

/// Is the multiset `{x*}` equal to the multiset `{x}`?
pub fn conj_closed(xs: &[Scalar]) -> bool {
    let key = |s: &Scalar| (s.re().clone(), s.im().clone());
    let mut plain: Vec<_> = xs.iter().map(key).collect();
    let mut starred: Vec<_> = xs.iter().map(|s| key(&s.conj())).collect();
    plain.sort();
    starred.sort();
    plain == starred
}

pub fn is_real_positive(s: &Scalar) -> bool {
    s.is_real() && s.re().is_positive()
}

pub fn re_positive(s: &Scalar) -> bool {
    s.re().is_positive()
}

/// `|s| < 1` exactly, via the squared modulus.
pub fn abs_lt_one(s: &Scalar) -> bool {
    s.norm_sq() < num_rational::BigRational::one()
}

/// Structural check shared by the q-families: `s` real with `0 < s < 1`.
pub fn validate_s(b: &crate::families::Binding) -> Result<()> {
    let s = b.s()?;
    if !s.is_real() || !s.re().is_positive() || !(Scalar::one() - s).re().is_positive() {
        return Err(Error::InvalidBinding { reason: "s must be real with 0 < s < 1".into() });
    }
    Ok(())
}

/// Structural check for the phase: `|w| = 1` exactly.
pub fn validate_w(b: &crate::families::Binding) -> Result<()> {
    let w = b.w()?;
    if !(w * &w.conj()).is_one() {
        return Err(Error::InvalidBinding { reason: "w must have unit modulus".into() });
    }
    Ok(())
}

/// Elementary symmetric functions of four values.
pub fn esym4(a: &[Scalar; 4]) -> (Scalar, Scalar, Scalar, Scalar) {
    let b1 = &(&a[0] + &a[1]) + &(&a[2] + &a[3]);
    let mut b2 = Scalar::zero();
    for j in 0..4 {
        for k in (j + 1)..4 {
            b2 = &b2 + &(&a[j] * &a[k]);
        }
    }
    let mut b3 = Scalar::zero();
    for j in 0..4 {
        for k in (j + 1)..4 {
            for l in (k + 1)..4 {
                b3 = &b3 + &(&(&a[j] * &a[k]) * &a[l]);
            }
        }
    }
    let b4 = &(&a[0] * &a[1]) * &(&a[2] * &a[3]);
    (b1, b2, b3, b4)
}

/// Elementary symmetric functions of three values.
pub fn esym3(a: &[Scalar; 3]) -> (Scalar, Scalar, Scalar) {
    let b1 = &(&a[0] + &a[1]) + &a[2];
    let b2 = &(&(&a[0] * &a[1]) + &(&a[0] * &a[2])) + &(&a[1] * &a[2]);
    let b3 = &(&a[0] * &a[1]) * &a[2];
    (b1, b2, b3)
}

/// `∏_{j<k} f(a_j, a_k)` over all pairs.
pub fn pair_product<F>(a: &[Scalar], f: F) -> Scalar
where
    F: Fn(&Scalar, &Scalar) -> Scalar,
{
    let mut acc = Scalar::one();
    for j in 0..a.len() {
        for k in (j + 1)..a.len() {
            acc = &acc * &f(&a[j], &a[k]);
        }
    }
    acc
}
